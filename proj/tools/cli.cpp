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

#include "cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <functional>
#include <json.hpp>
#include <optional>
#include <sstream>

#include "polycomp/alphabet.hpp"
#include "polycomp/cipher_system.hpp"
#include "polycomp/ciphers.hpp"
#include "polycomp/composite.hpp"
#include "polycomp/error.hpp"
#include "polycomp/ideals.hpp"
#include "polycomp/keyexchange.hpp"
#include "polycomp/monoid_domain.hpp"
#include "polycomp/poly.hpp"
#include "polycomp/random.hpp"
#include "polycomp/ring.hpp"
#include "polycomp/text.hpp"

namespace polycomp::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Result {
    std::string text;
    Json json;
    /// Set when the command printed its output but still failed.
    std::optional<std::string> error = std::nullopt;
};

/// Bad flag combinations the parser cannot express; exit code 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Context {
    std::string format = "text";
    std::uint64_t seed = 0;
    std::string key_path;
};

std::string bool_text(bool b) { return b ? "true" : "false"; }

Result boolean(bool b) { return {bool_text(b), Json(b)}; }

std::string read_key_line(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read key file '" + path + "'");
    std::string line;
    while (std::getline(in, line)) {
        if (!strip(line).empty()) return strip(line);
    }
    throw UsageError("key file '" + path + "' is empty");
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw UsageError("cannot write '" + path + "'");
    out << text;
}

Json values_json(std::span<const std::uint64_t> v) { return Json(std::vector<std::uint64_t>(v.begin(), v.end())); }

Json values_json(std::span<const BigInt> v) {
    Json out = Json::array();
    for (const auto& x : v) out.push_back(to_string(x));
    return out;
}

std::vector<std::string> strings(const std::vector<CompositeElement>& xs) {
    std::vector<std::string> out;
    for (const auto& x : xs) out.push_back(x.to_string());
    return out;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i];
    }
    return out;
}

std::vector<std::uint64_t> u64_list(const std::string& text) {
    std::vector<std::uint64_t> out;
    for (const auto& t : split_top_level(text, ',')) out.push_back(parse_u64(t));
    return out;
}

class Dispatcher {
   public:
    Dispatcher() : app_("Polynomial composites, monoid domains and the toy ciphers built on them.", "polycomp") {
        app_.set_help_all_flag("--help-all", "Show help for every subcommand");
        app_.require_subcommand(1);
        app_.fallthrough();
        app_.add_option("--format", ctx_.format, "Output format")->check(CLI::IsMember({"text", "json"}));
        app_.add_option("--seed", ctx_.seed, "Seed for every random choice (default 0)");
        app_.add_option("--key", ctx_.key_path, "Key file: written by keygen, read by encrypt/decrypt");
        std::string footer = "Examples:\n";
        for (const auto& ex : examples()) footer += "  $ polycomp " + ex.command + "\n  " + ex.expected + "\n";
        app_.footer(footer);
        add_ring();
        add_poly();
        add_composite();
        add_monoid();
        add_ideal();
        add_alphabet();
        add_rsa();
        add_dh();
        add_frac();
        add_zone();
        add_compcipher();
        add_monoidcipher();
        add_exchange();
    }

    int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        try {
            app_.parse(reversed);
        } catch (const CLI::CallForHelp& e) {
            return app_.exit(e, out, err);
        } catch (const CLI::CallForAllHelp& e) {
            return app_.exit(e, out, err);
        } catch (const CLI::ParseError& e) {
            app_.exit(e, out, err);
            return 2;
        }
        try {
            const Result r = action_();
            if (ctx_.format == "json") {
                out << r.json.dump() << '\n';
            } else {
                out << r.text << '\n';
            }
            if (r.error) {
                err << *r.error << '\n';
                return 1;
            }
            return 0;
        } catch (const UsageError& e) {
            err << "usage: " << e.what() << '\n';
            return 2;
        } catch (const Error& e) {
            err << "ERR:" << code_name(e.code()) << ": " << e.what() << '\n';
            return 1;
        }
    }

   private:
    CLI::App* group(const std::string& name, const std::string& desc) {
        CLI::App* g = app_.add_subcommand(name, desc);
        g->require_subcommand(1);
        return g;
    }

    CLI::App* verb(CLI::App* parent, const std::string& name, const std::string& desc, std::function<Result()> fn) {
        CLI::App* v = parent->add_subcommand(name, desc);
        v->callback([this, fn = std::move(fn)] { action_ = fn; });
        return v;
    }

    // --- algebra -----------------------------------------------------------

    void add_ring() {
        auto* g = group("ring", "Coefficient rings: Z, Z/n, F_p, F_q");
        auto* info = verb(g, "info", "Canonical form and basic invariants", [this] {
            const Ring r = Ring::parse(s1_);
            const auto size = r.size();
            Json j{{"ring", r.to_string()},
                   {"size", size ? Json(*size) : Json("inf")},
                   {"characteristic", r.characteristic()},
                   {"field", r.is_field()},
                   {"domain", r.is_domain()}};
            return Result{r.to_string() + " size=" + (size ? std::to_string(*size) : "inf") +
                              " char=" + std::to_string(r.characteristic()) + " field=" + bool_text(r.is_field()) +
                              " domain=" + bool_text(r.is_domain()),
                          j};
        });
        info->add_option("ring", s1_, "Ring, e.g. F4 or Z/12")->required();
        auto* elems = verb(g, "elements", "Every element in code order", [this] {
            std::vector<std::string> out;
            for (const auto& x : elements(Ring::parse(s1_))) out.push_back(x.to_string());
            return Result{join(out, " "), Json(out)};
        });
        elems->add_option("ring", s1_)->required();
        auto* inv = verb(g, "inverse", "Multiplicative inverse of an element", [this] {
            const RingElement x = RingElement::parse(Ring::parse(s1_), s2_).inverse();
            return Result{x.to_string(), Json(x.to_string())};
        });
        inv->add_option("ring", s1_)->required();
        inv->add_option("element", s2_)->required();
    }

    void add_poly() {
        auto* g = group("poly", "Polynomials written as RING:[c0,c1,...]");
        const auto unary = [&](const std::string& name, const std::string& desc, std::function<Result(const Polynomial&)> fn) {
            auto* v = verb(g, name, desc, [this, fn] { return fn(Polynomial::parse(s1_)); });
            v->add_option("poly", s1_, "e.g. F2:[1,1,1]")->required();
            return v;
        };
        unary("irreducible", "Irreducible over a finite field (trial division)",
              [](const Polynomial& f) { return boolean(is_irreducible(f)); });
        unary("factor", "Factorization into monic irreducibles", [](const Polynomial& f) {
            const Factorization fac = factor(f);
            Json factors = Json::array();
            for (const auto& [p, m] : fac.factors) factors.push_back({{"factor", p.to_string()}, {"multiplicity", m}});
            return Result{fac.to_string(), Json{{"unit", fac.unit.to_string()}, {"factors", factors}}};
        });
        unary("unit", "Unit of R[X]", [](const Polynomial& f) { return boolean(is_unit(f)); });
        unary("nilpotent", "Nilpotent in R[X]", [](const Polynomial& f) { return boolean(is_nilpotent(f)); });
        auto* inv = unary("inverse", "Search for an inverse of bounded degree", [this](const Polynomial& f) {
            const auto g = inverse_search(f, bound_);
            return g ? Result{g->to_string(), Json(g->to_string())} : Result{"none", Json(nullptr)};
        });
        inv->add_option("--bound", bound_, "Degree bound for the inverse (<= 8)")->capture_default_str();
        auto* mul = verb(g, "mul", "Product of two polynomials", [this] {
            const Polynomial p = Polynomial::parse(s1_) * Polynomial::parse(s2_);
            return Result{p.to_string(), Json(p.to_string())};
        });
        mul->add_option("a", s1_)->required();
        mul->add_option("b", s2_)->required();
        auto* dm = verb(g, "divmod", "Quotient and remainder", [this] {
            const auto [q, r] = divmod(Polynomial::parse(s1_), Polynomial::parse(s2_));
            return Result{"q=" + q.to_string() + " r=" + r.to_string(),
                          Json{{"quotient", q.to_string()}, {"remainder", r.to_string()}}};
        });
        dm->add_option("a", s1_)->required();
        dm->add_option("b", s2_)->required();
    }

    void add_composite() {
        auto* g = group("composite", "Composites A0 + A1 X + ... + X^n B[X], written TOWER:[c0,c1,...]");
        const auto unary = [&](const std::string& name, const std::string& desc,
                               std::function<Result(const CompositeElement&)> fn) {
            auto* v = verb(g, name, desc, [this, fn] { return fn(CompositeElement::parse(s1_)); });
            v->add_option("element", s1_, "e.g. F2<F4:[1,0,1]")->required();
            return v;
        };
        unary("irreducible", "Atom of the composite", [](const CompositeElement& f) { return boolean(is_irreducible(f)); });
        unary("oracle", "Exhaustive factor search (irreducible or reducible)", [](const CompositeElement& f) {
            const bool reducible = factor_search_oracle(f);
            const std::string s = reducible ? "reducible" : "irreducible";
            return Result{s, Json(s)};
        });
        unary("atomize", "Factorization into atoms", [](const CompositeElement& f) {
            const auto atoms = strings(atomize(f));
            return Result{join(atoms, " * "), Json(atoms)};
        });
        unary("unit", "Unit of the composite", [](const CompositeElement& f) { return boolean(is_unit(f)); });
        unary("quotient", "Image in A0 under X -> 0", [](const CompositeElement& f) {
            const std::string s = quotient_eval(f).to_string();
            return Result{s, Json(s)};
        });
        auto* chain = unary("chain", "Greedy chain of proper divisors", [this](const CompositeElement& f) {
            const DivisorChain c = divisor_chain(f, steps_);
            const auto elems = strings(c.chain);
            return Result{join(elems, " > ") + (c.terminated ? " (atom)" : " (stopped)"),
                          Json{{"chain", elems}, {"terminated", c.terminated}}};
        });
        chain->add_option("--steps", steps_, "Maximum number of steps")->capture_default_str();
    }

    void add_monoid() {
        auto* g = group("monoid", "Numerical monoids M<a,b,...> and monoid domains RING:M<...>:{e:c,...}");
        auto* contains = verb(g, "contains", "Membership m in M", [this] {
            return boolean(NumericalMonoid::parse(s1_).contains(static_cast<std::int64_t>(parse_u64(s2_))));
        });
        contains->add_option("monoid", s1_)->required();
        contains->add_option("m", s2_)->required();
        auto* atom = verb(g, "atom", "m is an atom of M", [this] {
            return boolean(NumericalMonoid::parse(s1_).is_atom(parse_u64(s2_)));
        });
        atom->add_option("monoid", s1_)->required();
        atom->add_option("m", s2_)->required();
        auto* mul = verb(g, "mul", "Product in B[M]", [this] {
            const MonoidElement p = MonoidElement::parse(s1_) * MonoidElement::parse(s2_);
            return Result{p.to_string(), Json(p.to_string())};
        });
        mul->add_option("a", s1_)->required();
        mul->add_option("b", s2_)->required();
        auto* build = verb(g, "build", "Irreducible p_{r-1}X^{m_r} - ... - p_1 X^{m_2} - X^{m_1}", [this] {
            std::vector<BigInt> primes;
            for (const auto& t : split_top_level(primes_, ',')) primes.push_back(parse_bigint(t));
            const auto built = build_irreducible_from_primes(Ring::parse(ring_), NumericalMonoid::parse(monoid_), primes,
                                                             u64_list(exponents_));
            return Result{built.element.to_string() + "\n" + join(built.certificate, "\n"),
                          Json{{"element", built.element.to_string()}, {"certificate", built.certificate}}};
        });
        build->add_option("--ring", ring_, "Coefficient ring")->capture_default_str();
        build->add_option("--monoid", monoid_, "Monoid, e.g. M<2,3>")->required();
        build->add_option("--primes", primes_, "p_1,...,p_{r-1}")->required();
        build->add_option("--exponents", exponents_, "m_1,...,m_r")->required();
        auto* oracle = verb(g, "oracle", "Bounded factor search (irreducible or reducible)", [this] {
            const bool irr = irreducible_oracle(MonoidElement::parse(s1_), exp_bound_, coeff_bound_);
            const std::string s = irr ? "irreducible" : "reducible";
            return Result{s, Json(s)};
        });
        oracle->add_option("element", s1_)->required();
        oracle->add_option("--exp-bound", exp_bound_, "Largest exponent searched")->capture_default_str();
        oracle->add_option("--coeff-bound", coeff_bound_, "Coefficient box for Z")->capture_default_str();
    }

    void add_ideal() {
        auto* g = group("ideal", "Principal ideals (n) of Z");
        const auto binary = [&](const std::string& name, const std::string& desc,
                                std::function<Result(const PrincipalIdeal&, const PrincipalIdeal&)> fn) {
            auto* v = verb(g, name, desc, [this, fn] { return fn(PrincipalIdeal::parse(s1_), PrincipalIdeal::parse(s2_)); });
            v->add_option("I", s1_)->required();
            v->add_option("J", s2_)->required();
        };
        const auto ideal = [](const PrincipalIdeal& i) { return Result{i.to_string(), Json(i.to_string())}; };
        binary("mul", "Product I J", [ideal](const auto& a, const auto& b) { return ideal(ideal_mul(a, b)); });
        binary("totient", "((p-1)(q-1)) for prime ideals", [ideal](const auto& a, const auto& b) {
            return ideal(ideal_totient(a, b));
        });
        binary("inverse", "(d) with e d ≡ 1 mod phi", [ideal](const auto& a, const auto& b) {
            return ideal(ideal_inverse(a, b));
        });
        binary("contains", "I ⊇ J", [](const auto& a, const auto& b) { return boolean(ideal_contains(a, b)); });
        auto* norm = verb(g, "norm", "Index of (n) in Z", [this] {
            const std::string s = norm_string(PrincipalIdeal::parse(s1_));
            return Result{s, Json(s)};
        });
        norm->add_option("I", s1_)->required();
    }

    std::string values() const { return join(values_, " "); }

    Alphabet alphabet() const { return alphabet_file_.empty() ? Alphabet::latin() : Alphabet::from_file(alphabet_file_); }

    void add_alphabet() {
        auto* g = group("alphabet", "Letter/value codec with representatives i + c k");
        auto* enc = verb(g, "encode", "Text to values", [this] {
            const Alphabet a = alphabet();
            RepresentativePicker picker = zero_picker();
            if (!ks_.empty()) picker = sequence_picker(u64_list(ks_));
            if (random_) picker = random_picker(ctx_.seed, max_k_);
            const auto v = encode(text_, a, picker);
            return Result{join_values(v), values_json(v)};
        });
        enc->add_option("--text", text_, "Plaintext")->required();
        auto* ks = enc->add_option("--ks", ks_, "Representative indices k_0,k_1,...");
        enc->add_flag("--random", random_, "Draw k uniformly from [0, --max-k] using --seed")->excludes(ks);
        enc->add_option("--max-k", max_k_, "Largest random k")->capture_default_str();
        enc->add_option("--alphabet-file", alphabet_file_, "One symbol per line (default A-Z)");
        auto* dec = verb(g, "decode", "Values to text", [this] {
            const std::string t = decode(parse_values(values()), alphabet());
            return Result{t, Json(t)};
        });
        dec->add_option("--values", values_, "Space-separated values")->required();
        dec->add_option("--alphabet-file", alphabet_file_, "One symbol per line (default A-Z)");
    }

    // --- ciphers -----------------------------------------------------------

    RsaIdealKey rsa_key() const {
        if (p_ && q_ && e_) {
            return rsa_keygen(PrincipalIdeal(parse_bigint(*p_)), PrincipalIdeal(parse_bigint(*q_)),
                              PrincipalIdeal(parse_bigint(*e_)));
        }
        if (!ctx_.key_path.empty()) return RsaIdealKey::from_record(read_key_line(ctx_.key_path));
        throw UsageError("give --p, --q and --e, or --key");
    }

    void add_rsa() {
        auto* g = group("rsa", "Multiplicative RSA over ideals: C = M e mod phi");
        auto* kg = verb(g, "keygen", "Derive N, E, D from P, Q, E", [this] {
            if (!(p_ && q_ && e_)) throw UsageError("keygen needs --p, --q and --e");
            const RsaIdealKey k = rsa_key();
            if (!ctx_.key_path.empty()) write_file(ctx_.key_path, k.to_record() + "\n");
            return Result{"N=" + k.n.to_string() + " E=" + k.e.to_string() + " D=" + k.d.to_string(),
                          Json{{"N", k.n.to_string()}, {"E", k.e.to_string()}, {"D", k.d.to_string()},
                               {"PHI", k.phi.to_string()}}};
        });
        const auto key_flags = [this](CLI::App* v) {
            v->add_option("--p", p_, "Prime p");
            v->add_option("--q", q_, "Prime q");
            v->add_option("--e", e_, "Public exponent e");
        };
        key_flags(kg);
        auto* enc = verb(g, "encrypt", "Encrypt values or text", [this] {
            const RsaIdealKey k = rsa_key();
            std::vector<BigInt> m;
            if (!text_.empty()) {
                const Alphabet a = alphabet();
                const BigInt phi = k.phi.generator();
                const BigInt ceiling = std::min(phi, BigInt(a.default_ceiling()));
                RepresentativePicker picker = zero_picker();
                if (random_) {
                    require(ceiling >= a.cycle(), ErrorCode::OutOfRange, "phi is smaller than the alphabet");
                    picker = random_picker(ctx_.seed, to_u64(ceiling / a.cycle() - 1));
                }
                for (auto v : encode(text_, a, picker, to_u64(ceiling))) m.emplace_back(v);
            } else {
                m = parse_big_values(values());
            }
            const auto c = rsa_encrypt(m, k);
            return Result{join_values(c), values_json(c)};
        });
        key_flags(enc);
        enc->add_option("--m", values_, "Space-separated message values in [0, phi)");
        enc->add_option("--text", text_, "Text over the alphabet, encoded first");
        enc->add_flag("--random", random_, "Random representatives below phi (uses --seed)");
        enc->add_option("--alphabet-file", alphabet_file_);
        auto* dec = verb(g, "decrypt", "Decrypt values", [this] {
            const auto m = rsa_decrypt(parse_big_values(values()), rsa_key());
            if (as_text_) {
                std::vector<std::uint64_t> v;
                for (const auto& x : m) v.push_back(to_u64(x));
                const std::string t = decode(v, alphabet());
                return Result{t, Json(t)};
            }
            return Result{join_values(m), values_json(m)};
        });
        key_flags(dec);
        dec->add_option("--c", values_, "Space-separated ciphertext values")->required();
        dec->add_flag("--as-text", as_text_, "Decode the values with the alphabet");
        dec->add_option("--alphabet-file", alphabet_file_);
    }

    void add_dh() {
        auto* g = group("dh", "Diffie-Hellman over ideals: A = g a mod p, s = g a b mod p");
        auto* run = verb(g, "run", "One exchange; secrets from --a/--b or drawn with --seed", [this] {
            const DhParams params{PrincipalIdeal(parse_bigint(p_.value())), PrincipalIdeal(parse_bigint(g_.value()))};
            DhOutcome o;
            if (a_ && b_) {
                o = dh_exchange(params, parse_bigint(*a_), parse_bigint(*b_));
            } else {
                if (a_ || b_) throw UsageError("give both --a and --b, or neither");
                const auto [sf, ss] = split_seed(ctx_.seed);
                const DhRun r = run_dh(params, sf, ss);
                o = {PrincipalIdeal::parse(r.transcript.messages()[0].payload),
                     PrincipalIdeal::parse(r.transcript.messages()[1].payload), r.shared_f, r.shared_s};
            }
            return Result{"A=" + o.a_public.to_string() + " B=" + o.b_public.to_string() + " sF=" +
                              o.shared_f.to_string() + " sS=" + o.shared_s.to_string(),
                          Json{{"A", o.a_public.to_string()}, {"B", o.b_public.to_string()},
                               {"sF", o.shared_f.to_string()}, {"sS", o.shared_s.to_string()}}};
        });
        run->add_option("--p", p_, "Prime p")->required();
        run->add_option("--g", g_, "Base g with g > p")->required();
        run->add_option("--a", a_, "Secret of F");
        run->add_option("--b", b_, "Secret of S");
    }

    FractionalKey frac_key() const {
        if (alpha_ && k_) return {*alpha_, *k_};
        if (!ctx_.key_path.empty()) return FractionalKey::from_record(read_key_line(ctx_.key_path));
        throw UsageError("give --alpha and --k, or --key");
    }

    void add_frac() {
        auto* g = group("frac", "Fractional key: y = x k mod |A|");
        const auto key_flags = [this](CLI::App* v) {
            v->add_option("--alpha", alpha_, "Prime alphabet length |A|");
            v->add_option("--k", k_, "Key k, 2 <= k < |A|");
        };
        auto* kg = verb(g, "keygen", "Validate --k, or draw k with --seed", [this] {
            if (!alpha_) throw UsageError("keygen needs --alpha");
            FractionalKey key{*alpha_, k_.value_or(0)};
            if (!k_) {
                require(is_prime(key.alpha) && key.alpha > 2, ErrorCode::NotPrime, "alphabet length must be an odd prime");
                Rng rng(ctx_.seed);
                key.k = rng.uniform(2, key.alpha - 1);
            }
            validate(key);
            if (!ctx_.key_path.empty()) write_file(ctx_.key_path, key.to_record() + "\n");
            return Result{key.to_record(), Json{{"alpha", key.alpha}, {"k", key.k}}};
        });
        key_flags(kg);
        auto* enc = verb(g, "encrypt", "Encrypt x in [2, |A|]", [this] {
            std::vector<std::uint64_t> out;
            for (auto x : parse_values(values())) out.push_back(frac_encrypt(x, frac_key()));
            return Result{join_values(out), values_json(out)};
        });
        key_flags(enc);
        enc->add_option("--x", values_, "Space-separated plaintext values")->required();
        auto* dec = verb(g, "decrypt", "General decryption", [this] {
            std::vector<std::uint64_t> out;
            for (auto y : parse_values(values())) out.push_back(frac_decrypt(y, frac_key()));
            return Result{join_values(out), values_json(out)};
        });
        key_flags(dec);
        dec->add_option("--y", values_, "Space-separated ciphertext values")->required();
        auto* cf = verb(g, "closed-form", "Closed-form decryption (y + (k - y mod k)|A|)/k; 'fails' if not exact", [this] {
            std::vector<std::string> out;
            Json j = Json::array();
            for (auto y : parse_values(values())) {
                const auto x = frac_decrypt_closed_form(y, frac_key());
                out.push_back(x ? std::to_string(*x) : "fails");
                j.push_back(x ? Json(*x) : Json(nullptr));
            }
            return Result{join(out, " "), j};
        });
        key_flags(cf);
        cf->add_option("--y", values_, "Space-separated ciphertext values")->required();
    }

    ZoneKey zone_key() const {
        if (p_ && q_ && k_) {
            ZoneKey key{parse_u64(*p_), parse_u64(*q_), *k_, {}};
            if (mask_seed_) key.mask = zone_mask_from_seed(key.zone_count(), *mask_seed_);
            return key;
        }
        if (!ctx_.key_path.empty()) return ZoneKey::from_record(read_key_line(ctx_.key_path));
        throw UsageError("give --p, --q and --k, or --key");
    }

    void add_zone() {
        auto* g = group("zone", "Zone cipher: public length p, secret length q, key k");
        const auto key_flags = [this](CLI::App* v) {
            v->add_option("--p", p_, "Public prime alphabet length");
            v->add_option("--q", q_, "Secret prime sub-alphabet length");
            v->add_option("--k", k_, "Key coprime to q");
            v->add_option("--mask-seed", mask_seed_, "Mask zone labels with a seeded permutation");
        };
        auto* kg = verb(g, "keygen", "Validate a key, drawing k with --seed when absent", [this] {
            if (!(p_ && q_)) throw UsageError("keygen needs --p and --q");
            ZoneKey key{parse_u64(*p_), parse_u64(*q_), k_.value_or(0), {}};
            if (!k_) {
                require(is_prime(key.q), ErrorCode::NotPrime, "secret alphabet length is not prime");
                Rng rng(ctx_.seed);
                do {
                    key.k = rng.uniform(1, key.q - 1);
                } while (gcd(key.k, key.q) != 1);
            }
            validate({key.p, key.q, key.k, {}});
            if (mask_seed_) key.mask = zone_mask_from_seed(key.zone_count(), *mask_seed_);
            validate(key);
            if (!ctx_.key_path.empty()) write_file(ctx_.key_path, key.to_record() + "\n");
            return Result{key.to_record(), Json{{"p", key.p}, {"q", key.q}, {"k", key.k}, {"mask", key.mask}}};
        });
        key_flags(kg);
        auto* enc = verb(g, "encrypt", "Values in [1, p] to zone:residue pairs", [this] {
            const auto s = zone_encrypt(parse_values(values()), zone_key());
            Json j = Json::array();
            for (const auto& zp : s) j.push_back({zp.zone, zp.d});
            return Result{format_zone_stream(s), j};
        });
        key_flags(enc);
        enc->add_option("--v", values_, "Space-separated values")->required();
        auto* dec = verb(g, "decrypt", "zone:residue pairs to values", [this] {
            const auto v = zone_decrypt(parse_zone_stream(values()), zone_key());
            return Result{join_values(v), values_json(v)};
        });
        key_flags(dec);
        dec->add_option("--pairs", values_, "Space-separated z:d pairs")->required();
    }

    CipherPolynomial fg_key() const {
        if (!fg_.empty()) return CipherPolynomial::parse(fg_);
        if (!ctx_.key_path.empty()) return CipherPolynomial::parse(parse_record(read_key_line(ctx_.key_path), "compcipher").at("FG"));
        throw UsageError("give --fg or --key");
    }

    void add_compcipher() {
        auto* g = group("compcipher", "Composite cipher: polynomials whose coefficients are letter ciphers");
        auto* kg = verb(g, "keygen", "Multiply f and g into the key fg", [this] {
            const CipherPolynomial fg = cipher_poly_mul(CipherPolynomial::parse(f_), CipherPolynomial::parse(g_poly_), strict_);
            if (!ctx_.key_path.empty()) write_file(ctx_.key_path, "compcipher v1 FG=" + fg.to_string() + "\n");
            return Result{fg.to_string(), Json{{"fg", fg.to_string()}, {"degree", fg.degree()}}};
        });
        kg->add_option("--f", f_, "e.g. 26:[A(1,1),A(3,0)]")->required();
        kg->add_option("--g", g_poly_, "e.g. 26:[A(5,2)]")->required();
        kg->add_flag("--strict", strict_, "Require deg f = n-1 and deg g = n-k with 2 <= k <= n-1");
        auto* enc = verb(g, "encrypt", "Encrypt letter values or text", [this] {
            const CipherPolynomial fg = fg_key();
            std::vector<std::uint64_t> letters;
            if (!text_.empty()) {
                const Alphabet a = alphabet();
                require(a.cycle() == fg.alphabet(), ErrorCode::InvalidArgument, "alphabet length differs from the key's");
                letters = a.indices(text_);
            } else {
                letters = parse_values(values());
            }
            const auto c = fg.encrypt(letters);
            return Result{join_values(c), values_json(c)};
        });
        enc->add_option("--fg", fg_, "Key polynomial");
        enc->add_option("--m", values_, "Space-separated letter values");
        enc->add_option("--text", text_, "Text over the alphabet");
        enc->add_option("--alphabet-file", alphabet_file_);
        auto* dec = verb(g, "decrypt", "Decrypt letter values", [this] {
            const auto m = fg_key().decrypt(parse_values(values()));
            if (as_text_) {
                const std::string t = decode(m, alphabet());
                return Result{t, Json(t)};
            }
            return Result{join_values(m), values_json(m)};
        });
        dec->add_option("--fg", fg_, "Key polynomial");
        dec->add_option("--c", values_, "Space-separated ciphertext letters")->required();
        dec->add_flag("--as-text", as_text_, "Decode the values with the alphabet");
        dec->add_option("--alphabet-file", alphabet_file_);
    }

    MonoidCipherKey monoid_key() const {
        if (p_ && x_ && !coeffs_.empty()) return {parse_u64(*p_), *x_, u64_list(coeffs_)};
        if (!ctx_.key_path.empty()) return MonoidCipherKey::from_record(read_key_line(ctx_.key_path));
        throw UsageError("give --p, --x and --a, or --key");
    }

    void add_monoidcipher() {
        auto* g = group("monoidcipher", "Monoid-exponent cipher: d = a X^m mod p");
        auto* kg = verb(g, "keygen", "Draw a primitive root X and coefficients with --seed", [this] {
            if (!p_) throw UsageError("keygen needs --p");
            Rng rng(ctx_.seed);
            const MonoidCipherKey key = monoid_keygen(parse_u64(*p_), count_, rng);
            if (!ctx_.key_path.empty()) write_file(ctx_.key_path, key.to_record() + "\n");
            return Result{key.to_record(), Json{{"p", key.p}, {"x", key.x}, {"a", key.coeffs}}};
        });
        kg->add_option("--p", p_, "Prime alphabet length");
        kg->add_option("--count", count_, "Number of coefficients")->capture_default_str();
        const auto key_flags = [this](CLI::App* v) {
            v->add_option("--p", p_, "Prime alphabet length");
            v->add_option("--x", x_, "Secret primitive root X");
            v->add_option("--a", coeffs_, "Coefficients a_0,a_1,... used cyclically");
        };
        auto* enc = verb(g, "encrypt", "Exponents in [0, p-2] to ciphertexts", [this] {
            const auto d = monoid_encrypt(parse_values(values()), monoid_key());
            return Result{join_values(d), values_json(d)};
        });
        key_flags(enc);
        enc->add_option("--m", values_, "Space-separated exponents")->required();
        auto* dec = verb(g, "decrypt", "Ciphertexts to exponents (baby-step giant-step)", [this] {
            const auto m = monoid_decrypt(parse_values(values()), monoid_key());
            return Result{join_values(m), values_json(m)};
        });
        key_flags(dec);
        dec->add_option("--d", values_, "Space-separated ciphertexts")->required();
        auto* log = verb(g, "log", "Discrete logarithm of --target to --base mod --p", [this] {
            const auto e = discrete_log_bsgs(base_, target_, parse_u64(p_.value()));
            return e ? Result{std::to_string(*e), Json(*e)} : Result{"none", Json(nullptr)};
        });
        log->add_option("--p", p_, "Prime modulus")->required();
        log->add_option("--base", base_, "Base")->required();
        log->add_option("--target", target_, "Target")->required();
    }

    void add_exchange() {
        auto* g = group("exchange", "Two-party protocol runs with transcripts");
        const auto seeds = [this] {
            auto s = split_seed(ctx_.seed);
            if (seed_f_) s.first = *seed_f_;
            if (seed_s_) s.second = *seed_s_;
            return s;
        };
        auto* dh = verb(g, "dh", "Diffie-Hellman run; prints the transcript", [this, seeds] {
            const auto [sf, ss] = seeds();
            const DhRun r = run_dh({PrincipalIdeal(parse_bigint(p_.value())), PrincipalIdeal(parse_bigint(g_.value()))}, sf, ss);
            return transcript_result(r.transcript, r.agreed());
        });
        dh->add_option("--p", p_, "Prime p")->required();
        dh->add_option("--g", g_, "Base g with g > p")->required();
        auto* comp = verb(g, "composite", "Composite cipher agreement; prints the transcript", [this] {
            const AgreementRun r =
                run_composite_agreement(CipherPolynomial::parse(f_), CipherPolynomial::parse(g_poly_), strict_);
            return transcript_result(r.transcript, r.agreed());
        });
        comp->add_option("--f", f_, "Initiator's polynomial")->required();
        comp->add_option("--g", g_poly_, "Responder's polynomial")->required();
        comp->add_flag("--strict", strict_, "Enforce the degree rule");
        auto* replay = verb(g, "replay", "Re-run a saved transcript and compare line by line", [this, seeds] {
            const Transcript t = Transcript::parse(read_file(transcript_path_));
            bool agreed = false;
            if (t.protocol() == "dh") {
                const auto [sf, ss] = seeds();
                agreed = replay_dh(t, sf, ss).agreed();
            } else {
                agreed = replay_composite_agreement(t).agreed();
            }
            const std::string s = std::string("replay identical, parties ") + (agreed ? "agree" : "disagree");
            return Result{s, Json{{"identical", true}, {"agreed", agreed}}};
        });
        replay->add_option("--transcript", transcript_path_, "Saved transcript")->required();
        for (auto* v : {dh, replay}) {
            v->add_option("--seed-f", seed_f_, "Seed of F (overrides --seed)");
            v->add_option("--seed-s", seed_s_, "Seed of S (overrides --seed)");
        }
        for (auto* v : {dh, comp}) v->add_option("--out", out_path_, "Also write the transcript here");
    }

    Result transcript_result(const Transcript& t, bool agreed) const {
        std::string text = t.serialize();
        if (!out_path_.empty()) write_file(out_path_, text);
        text.pop_back();
        Json lines = Json::array();
        std::istringstream in(t.serialize());
        for (std::string line; std::getline(in, line);) lines.push_back(line);
        Result r{text, Json{{"agreed", agreed}, {"transcript", lines}}};
        if (t.error()) {
            // Stored as "<party> <code> <message>".
            const std::string& e = *t.error();
            const auto a = e.find(' ');
            const auto b = e.find(' ', a + 1);
            r.error = "ERR:" + e.substr(a + 1, b - a - 1) + ": " + e.substr(b + 1);
        }
        return r;
    }

    CLI::App app_;
    Context ctx_;
    std::function<Result()> action_;

    std::string s1_, s2_;
    unsigned bound_ = 8;
    std::size_t steps_ = 8;
    std::string ring_ = "Z", monoid_, primes_, exponents_;
    std::uint64_t exp_bound_ = 12, coeff_bound_ = 6;
    std::string text_, ks_, alphabet_file_;
    std::vector<std::string> values_;
    bool random_ = false, as_text_ = false, strict_ = false;
    std::uint64_t max_k_ = 3;
    std::optional<std::string> p_, q_, e_, g_, a_, b_;
    std::optional<std::uint64_t> alpha_, k_, mask_seed_, x_, seed_f_, seed_s_;
    std::string coeffs_, f_, g_poly_, fg_, transcript_path_, out_path_;
    std::size_t count_ = 1;
    std::uint64_t base_ = 0, target_ = 0;
};

}  // namespace

const std::vector<Example>& examples() {
    static const std::vector<Example> kExamples = {
        {"rsa keygen --p 3 --q 11 --e 3", "N=(33) E=(3) D=(7)"},
        {"rsa encrypt --p 3 --q 11 --e 3 --m 2", "6"},
        {"rsa decrypt --p 3 --q 11 --e 3 --c 6", "2"},
        {"frac encrypt --alpha 29 --k 7 --x 5", "6"},
        {"frac decrypt --alpha 29 --k 7 --y 6", "5"},
        {"frac closed-form --alpha 29 --k 3 --y 1", "fails"},
        {"poly irreducible F2:[1,1,1]", "true"},
        {"poly factor F2:[1,0,1]", "unit=1 [1,1]^2"},
        {"poly inverse Z/4:[1,2]", "Z/4:[1,2]"},
        {"composite irreducible F2<F4:[1,1,0,1]", "true"},
        {"composite atomize F2<F4:[0,0,1]", "F2<F4:[0,1] * F2<F4:[0,1]"},
        {"monoid contains M<2,3> 1", "false"},
        {"monoid oracle Z:M<2,3>:{2:-1,3:2} --exp-bound 12 --coeff-bound 6", "irreducible"},
        {"ideal mul (3) (5)", "(15)"},
        {"ideal totient (3) (11)", "(20)"},
        {"ideal inverse (3) (20)", "(7)"},
        {"ideal norm (0)", "inf"},
        {"alphabet encode --text ABACAB --ks 0,0,1,2,1,2", "0 1 26 54 26 53"},
        {"alphabet decode --values 0 1 26 54 26 53", "ABACAB"},
        {"dh run --p 7 --g 10 --a 3 --b 4", "A=(2) B=(5) sF=(1) sS=(1)"},
        {"zone encrypt --p 29 --q 5 --k 3 --v 7", "1:1"},
        {"zone decrypt --p 29 --q 5 --k 3 --pairs 1:1", "7"},
        {"compcipher keygen --f 26:[A(1,1)] --g 26:[A(1,2)]", "26:[(A(1,1)*A(1,2))]"},
        {"compcipher encrypt --fg 26:[(A(1,1)*A(1,2))] --m 0", "1 2"},
        {"monoidcipher encrypt --p 29 --x 2 --a 3 --m 7", "7"},
        {"monoidcipher decrypt --p 29 --x 2 --a 3 --d 7", "7"},
        {"monoidcipher log --p 29 --base 2 --target 12", "7"},
    };
    return kExamples;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Dispatcher d;
    return d.run(args, out, err);
}

}  // namespace polycomp::cli
