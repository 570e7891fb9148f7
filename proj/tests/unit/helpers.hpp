#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dualis/groebner.hpp"
#include "dualis/parse.hpp"
#include "dualis/print.hpp"

namespace testutil {

using namespace dualis;

inline Ring ring_of(std::vector<std::string> names) { return Ring(std::move(names)); }

inline Polynomial P(const Ring& ring, const std::string& text) {
    return parse_polynomial(text, ring);
}

inline Ideal I(const Ring& ring, const std::vector<std::string>& texts) {
    std::vector<Polynomial> gens;
    for (const auto& t : texts) gens.push_back(P(ring, t));
    return Ideal(ring, std::move(gens));
}

inline Rational Q(const std::string& text) { return Rational::from_string(text); }

/// Deterministic xorshift generator for property tests.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b9u) {}

    std::uint64_t next() {
        state_ ^= state_ << 13;
        state_ ^= state_ >> 7;
        state_ ^= state_ << 17;
        return state_;
    }

    std::uint32_t below(std::uint32_t n) { return static_cast<std::uint32_t>(next() % n); }

    Monomial monomial(std::size_t nvars, std::uint32_t max_exp) {
        std::vector<std::uint32_t> exps(nvars);
        for (auto& e : exps) e = below(max_exp + 1);
        return Monomial(std::move(exps));
    }

    Rational rational() {
        long num = static_cast<long>(below(21)) - 10;
        long den = 1 + static_cast<long>(below(6));
        return Rational(num, den);
    }

    Rational nonzero_rational() {
        Rational r = rational();
        while (r.is_zero()) r = rational();
        return r;
    }

    Polynomial polynomial(const Ring& ring, std::uint32_t max_terms, std::uint32_t max_exp,
                          const MonomialOrder& order) {
        std::vector<Term> terms;
        std::uint32_t count = 1 + below(max_terms);
        for (std::uint32_t i = 0; i < count; ++i)
            terms.push_back({rational(), monomial(ring.size(), max_exp)});
        return Polynomial::from_terms(ring, std::move(terms), order);
    }

private:
    std::uint64_t state_;
};

/// Check the Polynomial invariants under a given order.
inline bool well_formed(const Polynomial& p, const MonomialOrder& order) {
    if (!is_sorted_under(p, order)) return false;
    for (const auto& t : p.terms()) {
        if (t.coeff.is_zero()) return false;
        if (t.mono.size() != p.ring().size()) return false;
    }
    return true;
}

/// Every pairwise S-polynomial reduces to zero against the basis.
inline bool buchberger_criterion_holds(const GroebnerBasis& gb) {
    for (std::size_t i = 0; i < gb.basis.size(); ++i)
        for (std::size_t j = i + 1; j < gb.basis.size(); ++j) {
            Polynomial s = s_polynomial(gb.basis[i], gb.basis[j], gb.order);
            if (!normal_form(s, gb.basis, gb.order).is_zero()) return false;
        }
    return true;
}

} // namespace testutil
