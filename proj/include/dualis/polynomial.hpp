#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dualis/monomial.hpp"
#include "dualis/order.hpp"
#include "dualis/rational.hpp"
#include "dualis/ring.hpp"

namespace dualis {

struct Term {
    Rational coeff;
    Monomial mono;
};

struct HomogeneityInfo {
    bool homogeneous;
    std::optional<std::uint64_t> degree; // unset for the zero polynomial
};

/// Sparse sum of terms over one ring: no zero coefficients, no duplicate
/// monomials, terms strictly decreasing under the order the polynomial
/// was normalized with. The order itself is not stored; re-sorting on an
/// order change is explicit (reorder).
class Polynomial {
public:
    Polynomial() = default;

    /// Zero polynomial.
    explicit Polynomial(Ring ring) : ring_(std::move(ring)) {}

    /// Normalizes an arbitrary term list: sorts descending under `order`,
    /// merges duplicates, drops zeros.
    static Polynomial from_terms(Ring ring, std::vector<Term> terms, const MonomialOrder& order);

    static Polynomial constant(Ring ring, Rational c);
    static Polynomial variable(Ring ring, std::size_t index);

    const Ring& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    /// Largest term under the order this polynomial is normalized with.
    const Term& leading_term() const {
        if (terms_.empty())
            throw Error(ErrorCode::Structural, "leading term of zero polynomial");
        return terms_.front();
    }
    const Monomial& leading_monomial() const { return leading_term().mono; }
    const Rational& leading_coefficient() const { return leading_term().coeff; }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_constant());
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.ring_ == b.ring_ && a.terms_ == b.terms_;
    }

private:
    friend Polynomial add(const Polynomial&, const Polynomial&, const MonomialOrder&);
    friend Polynomial subtract_term_multiple(const Polynomial&, const Rational&, const Monomial&,
                                             const Polynomial&, const MonomialOrder&);
    friend Polynomial neg(const Polynomial&);
    friend Polynomial scale(const Polynomial&, const Rational&);
    friend Polynomial term_multiple(const Polynomial&, const Rational&, const Monomial&);
    friend Polynomial partial_derivative(const Polynomial&, std::size_t);
    friend Polynomial canonicalize(const Polynomial&);

    Ring ring_;
    std::vector<Term> terms_;
};

inline bool operator==(const Term& a, const Term& b) {
    return a.coeff == b.coeff && a.mono == b.mono;
}

// Ring arithmetic. Inputs must share one ring and be normalized under
// `order` where an order is taken; results satisfy the invariants.
Polynomial add(const Polynomial& p, const Polynomial& q, const MonomialOrder& order);
Polynomial sub(const Polynomial& p, const Polynomial& q, const MonomialOrder& order);
Polynomial mul(const Polynomial& p, const Polynomial& q, const MonomialOrder& order);
Polynomial neg(const Polynomial& p);
Polynomial scale(const Polynomial& p, const Rational& c);
Polynomial pow(const Polynomial& p, std::uint32_t e, const MonomialOrder& order);

/// (c * m) * p. Multiplicativity of monomial orders keeps the term list
/// sorted, so no order parameter is needed.
Polynomial term_multiple(const Polynomial& p, const Rational& c, const Monomial& m);

/// p - (c * m) * q in one merge pass; both inputs normalized under `order`.
Polynomial subtract_term_multiple(const Polynomial& p, const Rational& c, const Monomial& m,
                                  const Polynomial& q, const MonomialOrder& order);

Polynomial partial_derivative(const Polynomial& p, std::size_t var);

HomogeneityInfo is_homogeneous(const Polynomial& p);

/// Degree of the zero polynomial is undefined (nullopt); callers branch.
std::optional<std::uint64_t> total_degree(const Polynomial& p);

/// Multiply each term by new_var^(d - term degree) in the ring extended
/// by new_var at `position`. The zero polynomial maps to zero.
Polynomial homogenize(const Polynomial& p, const std::string& new_var, std::size_t position,
                      const MonomialOrder& order);

/// Substitute var := 1 and drop var from the ring.
Polynomial dehomogenize(const Polynomial& p, std::size_t var, const MonomialOrder& order);

/// Simultaneous substitution, fully expanded. All replacement polynomials
/// must share one target ring; source variables without an assignment map
/// to the target-ring variable of the same name.
Polynomial substitute(const Polynomial& p, const std::map<std::size_t, Polynomial>& assignments,
                      const MonomialOrder& order);

/// Unique representative of the scalar class: denominators cleared,
/// integer content removed, leading coefficient positive.
Polynomial canonicalize(const Polynomial& p);

/// Exact value at a rational point (point.size() == ring size).
Rational evaluate(const Polynomial& p, std::span<const Rational> point);

/// Quotient p/q when q divides p exactly, nullopt otherwise.
std::optional<Polynomial> divide_exact(const Polynomial& p, const Polynomial& q,
                                       const MonomialOrder& order);

/// Same terms re-normalized under another order.
Polynomial reorder(const Polynomial& p, const MonomialOrder& order);

/// True iff the stored term list is strictly decreasing under `order`.
bool is_sorted_under(const Polynomial& p, const MonomialOrder& order);

} // namespace dualis
