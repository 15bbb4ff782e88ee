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

// Python bindings. Values cross the boundary in their text forms
// (`F5:[1,0,2]`, `F2<F4:[1,t]`, `(15)`) so every object prints and parses the
// same way as on the command line.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "polycomp/alphabet.hpp"
#include "polycomp/cipher_system.hpp"
#include "polycomp/ciphers.hpp"
#include "polycomp/composite.hpp"
#include "polycomp/error.hpp"
#include "polycomp/ideals.hpp"
#include "polycomp/keyexchange.hpp"
#include "polycomp/monoid_domain.hpp"
#include "polycomp/poly.hpp"

namespace py = pybind11;
using namespace polycomp;

namespace {

std::vector<std::string> texts(const std::vector<CompositeElement>& xs) {
    std::vector<std::string> out;
    for (const auto& x : xs) out.push_back(x.to_string());
    return out;
}

PrincipalIdeal ideal(const std::string& text) { return PrincipalIdeal::parse(text); }

std::vector<BigInt> big_values(const std::vector<std::string>& xs) {
    std::vector<BigInt> out;
    for (const auto& x : xs) out.emplace_back(x);
    return out;
}

std::vector<std::string> big_texts(const std::vector<BigInt>& xs) {
    std::vector<std::string> out;
    for (const auto& x : xs) out.push_back(x.str());
    return out;
}

}  // namespace

PYBIND11_MODULE(_polycomp, m) {
    m.doc() = "Polynomial composites, monoid domains and toy ciphers";

    // Held for the lifetime of the interpreter; the translator below must be
    // a plain function, so it reaches the type through this pointer.
    static PyObject* error_type = nullptr;
    error_type = py::exception<Error>(m, "PolycompError").release().ptr();
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            const std::string code(code_name(e.code()));
            py::object exc = py::reinterpret_borrow<py::object>(error_type)(code + ": " + e.what());
            exc.attr("code") = code;
            PyErr_SetObject(error_type, exc.ptr());
        }
    });

    // rings and polynomials
    m.def("ring_elements", [](const std::string& ring) {
        std::vector<std::string> out;
        const Ring r = Ring::parse(ring);
        for (std::uint64_t c = 0; c < r.size().value(); ++c) out.push_back(RingElement::from_code(r, c).to_string());
        return out;
    });
    m.def("ring_inverse", [](const std::string& ring, const std::string& x) {
        return RingElement::parse(Ring::parse(ring), x).inverse().to_string();
    });
    m.def("poly_mul", [](const std::string& f, const std::string& g) {
        return (Polynomial::parse(f) * Polynomial::parse(g)).to_string();
    });
    m.def("poly_is_unit", [](const std::string& f) { return is_unit(Polynomial::parse(f)); });
    m.def("poly_is_nilpotent", [](const std::string& f) { return is_nilpotent(Polynomial::parse(f)); });
    m.def("poly_is_irreducible", [](const std::string& f) { return is_irreducible(Polynomial::parse(f)); });
    m.def("poly_factor", [](const std::string& f) { return factor(Polynomial::parse(f)).to_string(); });
    m.def(
        "poly_inverse_search",
        [](const std::string& f, unsigned bound) -> std::optional<std::string> {
            const auto g = inverse_search(Polynomial::parse(f), bound);
            if (!g) return std::nullopt;
            return g->to_string();
        },
        py::arg("f"), py::arg("degree_bound") = 8);

    // composites
    m.def("composite_is_unit", [](const std::string& f) { return is_unit(CompositeElement::parse(f)); });
    m.def("composite_is_irreducible", [](const std::string& f) { return is_irreducible(CompositeElement::parse(f)); });
    m.def("composite_factor_search", [](const std::string& f) {
        return factor_search_oracle(CompositeElement::parse(f));
    });
    m.def("composite_atomize", [](const std::string& f) { return texts(atomize(CompositeElement::parse(f))); });
    m.def("composite_quotient_eval", [](const std::string& f) {
        return quotient_eval(CompositeElement::parse(f)).to_string();
    });
    m.def(
        "composite_divisor_chain",
        [](const std::string& f, std::size_t max_steps) {
            const auto c = divisor_chain(CompositeElement::parse(f), max_steps);
            return py::make_tuple(texts(c.chain), c.terminated);
        },
        py::arg("f"), py::arg("max_steps") = 8);

    // monoid domains
    m.def("monoid_contains", [](const std::string& monoid, std::int64_t x) {
        return NumericalMonoid::parse(monoid).contains(x);
    });
    m.def("monoid_mul", [](const std::string& f, const std::string& g) {
        return (MonoidElement::parse(f) * MonoidElement::parse(g)).to_string();
    });
    m.def("monoid_build", [](const std::string& ring, const std::string& monoid, const std::vector<std::string>& primes,
                             const std::vector<std::uint64_t>& exponents) {
        const auto res = build_irreducible_from_primes(Ring::parse(ring), NumericalMonoid::parse(monoid),
                                                       big_values(primes), exponents);
        return py::make_tuple(res.element.to_string(), res.certificate);
    });
    m.def(
        "monoid_irreducible_oracle",
        [](const std::string& f, std::uint64_t exponent_bound, std::uint64_t coeff_bound) {
            return irreducible_oracle(MonoidElement::parse(f), exponent_bound, coeff_bound);
        },
        py::arg("f"), py::arg("exponent_bound") = 12, py::arg("coeff_bound") = 6);

    // ideals
    m.def("ideal_mul", [](const std::string& a, const std::string& b) {
        return ideal_mul(ideal(a), ideal(b)).to_string();
    });
    m.def("ideal_totient", [](const std::string& p, const std::string& q) {
        return ideal_totient(ideal(p), ideal(q)).to_string();
    });
    m.def("ideal_inverse", [](const std::string& e, const std::string& phi) {
        return ideal_inverse(ideal(e), ideal(phi)).to_string();
    });
    m.def("ideal_contains", [](const std::string& a, const std::string& b) { return ideal_contains(ideal(a), ideal(b)); });
    m.def("ideal_norm", [](const std::string& a) { return norm_string(ideal(a)); });

    // alphabet
    m.def(
        "encode",
        [](const std::string& text, std::optional<std::vector<std::uint64_t>> ks) {
            return encode(text, Alphabet::latin(), ks ? sequence_picker(*ks) : zero_picker());
        },
        py::arg("text"), py::arg("ks") = py::none());
    m.def("decode", [](const std::vector<std::uint64_t>& values) { return decode(values, Alphabet::latin()); });

    // ciphers
    py::class_<RsaIdealKey>(m, "RsaIdealKey")
        .def_property_readonly("n", [](const RsaIdealKey& k) { return k.n.to_string(); })
        .def_property_readonly("e", [](const RsaIdealKey& k) { return k.e.to_string(); })
        .def_property_readonly("d", [](const RsaIdealKey& k) { return k.d.to_string(); })
        .def_property_readonly("phi", [](const RsaIdealKey& k) { return k.phi.to_string(); })
        .def("to_record", &RsaIdealKey::to_record)
        .def_static("from_record", [](const std::string& line) { return RsaIdealKey::from_record(line); });
    m.def("rsa_keygen", [](const std::string& p, const std::string& q, const std::string& e) {
        return rsa_keygen(ideal(p), ideal(q), ideal(e));
    });
    m.def("rsa_encrypt", [](const std::vector<std::string>& ms, const RsaIdealKey& key) {
        return big_texts(rsa_encrypt(big_values(ms), key));
    });
    m.def("rsa_decrypt", [](const std::vector<std::string>& cs, const RsaIdealKey& key) {
        return big_texts(rsa_decrypt(big_values(cs), key));
    });

    m.def("dh_exchange", [](const std::string& p, const std::string& g, const std::string& a, const std::string& b) {
        const auto out = dh_exchange(DhParams{ideal(p), ideal(g)}, BigInt(a), BigInt(b));
        return py::make_tuple(out.a_public.to_string(), out.b_public.to_string(), out.shared_f.to_string(),
                              out.shared_s.to_string());
    });

    m.def("frac_encrypt", [](std::uint64_t x, std::uint64_t alpha, std::uint64_t k) {
        return frac_encrypt(x, FractionalKey{alpha, k});
    });
    m.def("frac_decrypt", [](std::uint64_t y, std::uint64_t alpha, std::uint64_t k) {
        return frac_decrypt(y, FractionalKey{alpha, k});
    });
    m.def("frac_decrypt_closed_form", [](std::uint64_t y, std::uint64_t alpha, std::uint64_t k) {
        return frac_decrypt_closed_form(y, FractionalKey{alpha, k});
    });

    m.def(
        "zone_encrypt",
        [](const std::vector<std::uint64_t>& values, std::uint64_t p, std::uint64_t q, std::uint64_t k,
           std::vector<std::uint64_t> mask) {
            return format_zone_stream(zone_encrypt(values, ZoneKey{p, q, k, std::move(mask)}));
        },
        py::arg("values"), py::arg("p"), py::arg("q"), py::arg("k"), py::arg("mask") = std::vector<std::uint64_t>{});
    m.def(
        "zone_decrypt",
        [](const std::string& stream, std::uint64_t p, std::uint64_t q, std::uint64_t k,
           std::vector<std::uint64_t> mask) {
            return zone_decrypt(parse_zone_stream(stream), ZoneKey{p, q, k, std::move(mask)});
        },
        py::arg("stream"), py::arg("p"), py::arg("q"), py::arg("k"), py::arg("mask") = std::vector<std::uint64_t>{});

    m.def("compcipher_keygen", [](const std::string& f, const std::string& g, bool strict) {
        return cipher_poly_mul(CipherPolynomial::parse(f), CipherPolynomial::parse(g), strict).to_string();
    }, py::arg("f"), py::arg("g"), py::arg("strict") = false);
    m.def("compcipher_encrypt", [](const std::string& fg, const std::vector<std::uint64_t>& letters) {
        return CipherPolynomial::parse(fg).encrypt(letters);
    });
    m.def("compcipher_decrypt", [](const std::string& fg, const std::vector<std::uint64_t>& letters) {
        return CipherPolynomial::parse(fg).decrypt(letters);
    });

    m.def("monoid_cipher_encrypt", [](const std::vector<std::uint64_t>& ms, std::uint64_t p, std::uint64_t x,
                                      std::vector<std::uint64_t> coeffs) {
        return monoid_encrypt(ms, MonoidCipherKey{p, x, std::move(coeffs)});
    });
    m.def("monoid_cipher_decrypt", [](const std::vector<std::uint64_t>& ds, std::uint64_t p, std::uint64_t x,
                                      std::vector<std::uint64_t> coeffs) {
        return monoid_decrypt(ds, MonoidCipherKey{p, x, std::move(coeffs)});
    });
    m.def("discrete_log", [](std::uint64_t base, std::uint64_t target, std::uint64_t p) {
        return discrete_log_bsgs(base, target, p);
    });

    // protocol runs
    m.def("run_dh", [](const std::string& p, const std::string& g, std::uint64_t seed_f, std::uint64_t seed_s) {
        const auto r = run_dh(DhParams{ideal(p), ideal(g)}, seed_f, seed_s);
        return py::make_tuple(r.transcript.serialize(), r.agreed());
    });
    m.def("replay_dh", [](const std::string& transcript, std::uint64_t seed_f, std::uint64_t seed_s) {
        return replay_dh(Transcript::parse(transcript), seed_f, seed_s).transcript.serialize();
    });
    m.def("run_composite_agreement", [](const std::string& f, const std::string& g) {
        const auto r = run_composite_agreement(CipherPolynomial::parse(f), CipherPolynomial::parse(g));
        return py::make_tuple(r.transcript.serialize(), r.agreed());
    });
}
