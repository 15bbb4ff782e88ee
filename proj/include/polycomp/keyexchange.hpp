/*
 * Copyright 2026 The polycomp Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/**
 * @file keyexchange.hpp
 * @brief Two-party protocol runs over an in-memory ordered channel.
 *
 * Parties F (initiator) and S exchange messages through a loss-free queue.
 * Everything sent is appended to a Transcript together with a digest of the
 * value each party derived. Secrets stay inside the parties and never reach
 * the transcript.
 *
 * Transcript text, one entry per line:
 *
 *     transcript v1 protocol=dh p=(7) g=(10)
 *     msg F->S A=(2)
 *     msg S->F B=(5)
 *     digest F 9f3c...
 *     digest S 9f3c...
 *
 * A failed run ends with `error <party> <code> <message>` instead of digests.
 */

#ifndef POLYCOMP_KEYEXCHANGE_HPP
#define POLYCOMP_KEYEXCHANGE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "polycomp/cipher_system.hpp"
#include "polycomp/ciphers.hpp"

namespace polycomp {

struct TranscriptMessage {
    std::string sender, receiver, field, payload;
    friend bool operator==(const TranscriptMessage&, const TranscriptMessage&) = default;
};

class Transcript {
   public:
    using Params = std::vector<std::pair<std::string, std::string>>;

    Transcript(std::string protocol, Params params);
    static Transcript parse(std::string_view text);

    const std::string& protocol() const { return protocol_; }
    const Params& params() const { return params_; }
    const std::vector<TranscriptMessage>& messages() const { return messages_; }
    const std::vector<std::pair<std::string, std::string>>& digests() const { return digests_; }
    const std::optional<std::string>& error() const { return error_; }

    /// Entries are append-only; nothing may follow a digest or an error.
    void append(TranscriptMessage message);
    void record_digest(const std::string& party, const std::string& digest);
    void record_error(const std::string& party, const std::string& text);

    std::string serialize() const;
    friend bool operator==(const Transcript&, const Transcript&) = default;

   private:
    void check_open() const;

    std::string protocol_;
    Params params_;
    std::vector<TranscriptMessage> messages_;
    std::vector<std::pair<std::string, std::string>> digests_;
    std::optional<std::string> error_;
};

/// FNV-1a 64 of the text, as 16 lowercase hex digits.
std::string digest_hex(std::string_view text);
/// Independent per-party seeds derived from one seed.
std::pair<std::uint64_t, std::uint64_t> split_seed(std::uint64_t seed);

struct DhRun {
    Transcript transcript;
    PrincipalIdeal shared_f, shared_s;
    bool agreed() const { return shared_f == shared_s; }
};

/// Each party draws its secret uniformly from [1, p-1] with its own seed.
DhRun run_dh(const DhParams& params, std::uint64_t seed_f, std::uint64_t seed_s);
DhRun run_dh_with_secrets(const DhParams& params, const BigInt& a, const BigInt& b);
/// Re-runs the exchange described by the transcript header with the given
/// seeds and compares the result line by line. Throws Protocol on the first
/// differing line.
DhRun replay_dh(const Transcript& transcript, std::uint64_t seed_f, std::uint64_t seed_s);

struct AgreementRun {
    Transcript transcript;
    std::optional<CipherPolynomial> key_f, key_s;
    bool agreed() const { return key_f && key_s && *key_f == *key_s; }
};

/// F sends f, S sends g, each side computes fg with F's polynomial first.
/// Failures such as an alphabet mismatch end the transcript with an error
/// line instead of throwing.
AgreementRun run_composite_agreement(const CipherPolynomial& f, const CipherPolynomial& g, bool strict = false);
/// Re-runs from the polynomials recorded in the transcript.
AgreementRun replay_composite_agreement(const Transcript& transcript);

/// Message fields a protocol may put on the wire: A and B for dh, f and g
/// for composite. Returns every message that carries anything else.
std::vector<TranscriptMessage> secret_field_violations(const Transcript& transcript);

}  // namespace polycomp

#endif  // POLYCOMP_KEYEXCHANGE_HPP
