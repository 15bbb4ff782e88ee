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

#include "polycomp/keyexchange.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "polycomp/error.hpp"
#include "polycomp/random.hpp"
#include "polycomp/text.hpp"

namespace polycomp {

Transcript::Transcript(std::string protocol, Params params) : protocol_(std::move(protocol)), params_(std::move(params)) {}

void Transcript::check_open() const {
    require(digests_.empty() && !error_, ErrorCode::Protocol, "transcript is closed");
}

void Transcript::append(TranscriptMessage message) {
    check_open();
    messages_.push_back(std::move(message));
}

void Transcript::record_digest(const std::string& party, const std::string& digest) {
    require(!error_, ErrorCode::Protocol, "transcript already ended in an error");
    digests_.emplace_back(party, digest);
}

void Transcript::record_error(const std::string& party, const std::string& text) {
    check_open();
    error_ = party + " " + text;
}

std::string Transcript::serialize() const {
    std::string out = "transcript v1 protocol=" + protocol_;
    for (const auto& [k, v] : params_) out += " " + k + "=" + v;
    out += '\n';
    for (const auto& m : messages_) out += "msg " + m.sender + "->" + m.receiver + " " + m.field + "=" + m.payload + "\n";
    for (const auto& [party, d] : digests_) out += "digest " + party + " " + d + "\n";
    if (error_) out += "error " + *error_ + "\n";
    return out;
}

Transcript Transcript::parse(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    require(static_cast<bool>(std::getline(in, line)), ErrorCode::Parse, "empty transcript");
    const Record header = parse_record(line, "transcript");
    Params params;
    std::string protocol;
    // Keep header order as written, which parse_record's map does not.
    for (const auto& word : split_top_level(strip(line), ' ')) {
        const auto eq = word.find('=');
        if (eq == std::string::npos) continue;
        if (word.substr(0, eq) == "protocol") {
            protocol = word.substr(eq + 1);
        } else {
            params.emplace_back(word.substr(0, eq), word.substr(eq + 1));
        }
    }
    require(!protocol.empty() && header.has("protocol"), ErrorCode::Parse, "transcript header has no protocol");
    Transcript t(protocol, std::move(params));
    while (std::getline(in, line)) {
        if (strip(line).empty()) continue;
        const auto sp = line.find(' ');
        require(sp != std::string::npos, ErrorCode::Parse, "bad transcript line '" + line + "'");
        const std::string kind = line.substr(0, sp);
        const std::string rest = line.substr(sp + 1);
        if (kind == "msg") {
            const auto arrow = rest.find("->");
            const auto sp2 = rest.find(' ');
            const auto eq = rest.find('=', sp2 == std::string::npos ? 0 : sp2);
            require(arrow != std::string::npos && sp2 != std::string::npos && eq != std::string::npos && arrow < sp2,
                    ErrorCode::Parse, "bad message line '" + line + "'");
            t.append({rest.substr(0, arrow), rest.substr(arrow + 2, sp2 - arrow - 2), rest.substr(sp2 + 1, eq - sp2 - 1),
                      rest.substr(eq + 1)});
        } else if (kind == "digest") {
            const auto sp2 = rest.find(' ');
            require(sp2 != std::string::npos, ErrorCode::Parse, "bad digest line '" + line + "'");
            t.record_digest(rest.substr(0, sp2), rest.substr(sp2 + 1));
        } else if (kind == "error") {
            const auto sp2 = rest.find(' ');
            require(sp2 != std::string::npos, ErrorCode::Parse, "bad error line '" + line + "'");
            t.record_error(rest.substr(0, sp2), rest.substr(sp2 + 1));
        } else {
            fail(ErrorCode::Parse, "unknown transcript entry '" + kind + "'");
        }
    }
    return t;
}

std::string digest_hex(std::string_view text) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    static constexpr char kHex[] = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i, h >>= 4) out[static_cast<std::size_t>(i)] = kHex[h & 0xf];
    return out;
}

std::pair<std::uint64_t, std::uint64_t> split_seed(std::uint64_t seed) {
    return {mix_seed(seed ^ 0x46), mix_seed(seed ^ 0x53)};
}

namespace {

// Ordered loss-free channel. Every send is logged before delivery.
class Channel {
   public:
    explicit Channel(Transcript& log) : log_(log) {}

    void send(TranscriptMessage m) {
        log_.append(m);
        queue_.push_back(std::move(m));
    }

    TranscriptMessage receive(const std::string& receiver) {
        require(!queue_.empty(), ErrorCode::Protocol, receiver + " waits on an empty channel");
        TranscriptMessage m = std::move(queue_.front());
        queue_.pop_front();
        require(m.receiver == receiver, ErrorCode::Protocol, "message for " + m.receiver + " delivered to " + receiver);
        return m;
    }

   private:
    Transcript& log_;
    std::deque<TranscriptMessage> queue_;
};

struct DhParty {
    std::string name;
    std::string peer;
    BigInt secret;
    std::string public_field;
    std::optional<PrincipalIdeal> shared;

    void send_public(const DhParams& params, Channel& ch) const {
        ch.send({name, peer, public_field, dh_public(params, secret).to_string()});
    }
    void receive_public(const DhParams& params, Channel& ch) {
        const TranscriptMessage m = ch.receive(name);
        shared = dh_shared(params, PrincipalIdeal::parse(m.payload), secret);
    }
};

Transcript::Params dh_header(const DhParams& params) {
    return {{"p", params.p.to_string()}, {"g", params.g.to_string()}};
}

void compare_lines(const std::string& expected, const std::string& actual) {
    std::istringstream e(expected), a(actual);
    std::string le, la;
    for (std::size_t n = 1;; ++n) {
        const bool he = static_cast<bool>(std::getline(e, le));
        const bool ha = static_cast<bool>(std::getline(a, la));
        if (!he && !ha) return;
        if (he != ha || le != la) {
            fail(ErrorCode::Protocol, "replay differs at line " + std::to_string(n) + ": recorded '" + (he ? le : "") +
                                          "', replayed '" + (ha ? la : "") + "'");
        }
    }
}

}  // namespace

DhRun run_dh_with_secrets(const DhParams& params, const BigInt& a, const BigInt& b) {
    validate(params);
    Transcript log("dh", dh_header(params));
    Channel ch(log);
    DhParty f{"F", "S", a, "A", {}};
    DhParty s{"S", "F", b, "B", {}};
    f.send_public(params, ch);
    s.receive_public(params, ch);
    s.send_public(params, ch);
    f.receive_public(params, ch);
    log.record_digest("F", digest_hex(f.shared->to_string()));
    log.record_digest("S", digest_hex(s.shared->to_string()));
    return {std::move(log), *f.shared, *s.shared};
}

DhRun run_dh(const DhParams& params, std::uint64_t seed_f, std::uint64_t seed_s) {
    validate(params);
    const BigInt top = params.p.generator() - 1;
    const std::uint64_t hi = to_u64(top);
    Rng rf(seed_f), rs(seed_s);
    return run_dh_with_secrets(params, BigInt(rf.uniform(1, hi)), BigInt(rs.uniform(1, hi)));
}

DhRun replay_dh(const Transcript& transcript, std::uint64_t seed_f, std::uint64_t seed_s) {
    require(transcript.protocol() == "dh", ErrorCode::Protocol, "not a dh transcript");
    std::optional<PrincipalIdeal> p, g;
    for (const auto& [k, v] : transcript.params()) {
        if (k == "p") p = PrincipalIdeal::parse(v);
        if (k == "g") g = PrincipalIdeal::parse(v);
    }
    require(p && g, ErrorCode::Parse, "dh transcript header needs p and g");
    DhRun run = run_dh({*p, *g}, seed_f, seed_s);
    compare_lines(transcript.serialize(), run.transcript.serialize());
    return run;
}

AgreementRun run_composite_agreement(const CipherPolynomial& f, const CipherPolynomial& g, bool strict) {
    Transcript log("composite", {{"strict", strict ? "1" : "0"}});
    Channel ch(log);
    AgreementRun run{Transcript("composite", {}), std::nullopt, std::nullopt};
    ch.send({"F", "S", "f", f.to_string()});
    ch.send({"S", "F", "g", g.to_string()});
    // Each side rebuilds the peer's polynomial from the wire text.
    const auto derive = [&](const std::string& party, const CipherPolynomial& own, bool own_first)
        -> std::optional<CipherPolynomial> {
        const TranscriptMessage m = ch.receive(party);
        try {
            const CipherPolynomial peer = CipherPolynomial::parse(m.payload);
            return own_first ? cipher_poly_mul(own, peer, strict) : cipher_poly_mul(peer, own, strict);
        } catch (const Error& e) {
            log.record_error(party, std::string(code_name(e.code())) + " " + e.what());
            return std::nullopt;
        }
    };
    run.key_s = derive("S", g, false);
    if (run.key_s) run.key_f = derive("F", f, true);
    if (run.key_f && run.key_s) {
        log.record_digest("F", digest_hex(run.key_f->to_string()));
        log.record_digest("S", digest_hex(run.key_s->to_string()));
    }
    run.transcript = std::move(log);
    return run;
}

AgreementRun replay_composite_agreement(const Transcript& transcript) {
    require(transcript.protocol() == "composite", ErrorCode::Protocol, "not a composite transcript");
    std::optional<std::string> f, g;
    bool strict = false;
    for (const auto& [k, v] : transcript.params()) {
        if (k == "strict") strict = v == "1";
    }
    for (const auto& m : transcript.messages()) {
        if (m.field == "f") f = m.payload;
        if (m.field == "g") g = m.payload;
    }
    require(f && g, ErrorCode::Parse, "composite transcript needs both polynomials");
    AgreementRun run = run_composite_agreement(CipherPolynomial::parse(*f), CipherPolynomial::parse(*g), strict);
    compare_lines(transcript.serialize(), run.transcript.serialize());
    return run;
}

std::vector<TranscriptMessage> secret_field_violations(const Transcript& transcript) {
    std::vector<std::string> allowed;
    if (transcript.protocol() == "dh") allowed = {"A", "B"};
    if (transcript.protocol() == "composite") allowed = {"f", "g"};
    std::vector<TranscriptMessage> out;
    for (const auto& m : transcript.messages()) {
        if (std::find(allowed.begin(), allowed.end(), m.field) == allowed.end()) out.push_back(m);
    }
    return out;
}

}  // namespace polycomp
