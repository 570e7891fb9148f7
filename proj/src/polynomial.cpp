#include "dualis/polynomial.hpp"

#include <algorithm>

namespace dualis {

namespace {

void check_same_ring(const Polynomial& p, const Polynomial& q) {
    if (!(p.ring() == q.ring()))
        throw Error(ErrorCode::RingMismatch, "polynomials from different rings");
}

void merge_terms(std::vector<Term>& terms, const MonomialOrder& order) {
    std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
        return order_greater(order, a.mono, b.mono);
    });
    std::vector<Term> out;
    out.reserve(terms.size());
    for (auto& t : terms) {
        if (!out.empty() && out.back().mono == t.mono) {
            out.back().coeff += t.coeff;
            if (out.back().coeff.is_zero()) out.pop_back();
        } else if (!t.coeff.is_zero()) {
            out.push_back(std::move(t));
        }
    }
    terms = std::move(out);
}

} // namespace

Polynomial Polynomial::from_terms(Ring ring, std::vector<Term> terms, const MonomialOrder& order) {
    for (const auto& t : terms)
        if (t.mono.size() != ring.size())
            throw Error(ErrorCode::Structural, "monomial length does not match ring");
    merge_terms(terms, order);
    Polynomial p(std::move(ring));
    p.terms_ = std::move(terms);
    return p;
}

Polynomial Polynomial::constant(Ring ring, Rational c) {
    Polynomial p(ring);
    if (!c.is_zero()) p.terms_.push_back({std::move(c), Monomial(ring.size())});
    return p;
}

Polynomial Polynomial::variable(Ring ring, std::size_t index) {
    Polynomial p(ring);
    p.terms_.push_back({Rational(1), Monomial::variable(ring.size(), index)});
    return p;
}

Polynomial add(const Polynomial& p, const Polynomial& q, const MonomialOrder& order) {
    check_same_ring(p, q);
    Polynomial r(p.ring());
    r.terms_.reserve(p.terms_.size() + q.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < p.terms_.size() && j < q.terms_.size()) {
        auto c = cmp(order, p.terms_[i].mono, q.terms_[j].mono);
        if (c == std::strong_ordering::greater) {
            r.terms_.push_back(p.terms_[i++]);
        } else if (c == std::strong_ordering::less) {
            r.terms_.push_back(q.terms_[j++]);
        } else {
            Rational sum = p.terms_[i].coeff + q.terms_[j].coeff;
            if (!sum.is_zero()) r.terms_.push_back({std::move(sum), p.terms_[i].mono});
            ++i, ++j;
        }
    }
    for (; i < p.terms_.size(); ++i) r.terms_.push_back(p.terms_[i]);
    for (; j < q.terms_.size(); ++j) r.terms_.push_back(q.terms_[j]);
    return r;
}

Polynomial sub(const Polynomial& p, const Polynomial& q, const MonomialOrder& order) {
    return subtract_term_multiple(p, Rational(1), Monomial(p.ring().size()), q, order);
}

Polynomial neg(const Polynomial& p) {
    Polynomial r(p.ring());
    r.terms_.reserve(p.terms_.size());
    for (const auto& t : p.terms_) r.terms_.push_back({-t.coeff, t.mono});
    return r;
}

Polynomial scale(const Polynomial& p, const Rational& c) {
    if (c.is_zero()) return Polynomial(p.ring());
    Polynomial r(p.ring());
    r.terms_.reserve(p.terms_.size());
    for (const auto& t : p.terms_) r.terms_.push_back({t.coeff * c, t.mono});
    return r;
}

Polynomial term_multiple(const Polynomial& p, const Rational& c, const Monomial& m) {
    if (c.is_zero()) return Polynomial(p.ring());
    if (m.size() != p.ring().size())
        throw Error(ErrorCode::Structural, "monomial length does not match ring");
    Polynomial r(p.ring());
    r.terms_.reserve(p.terms_.size());
    for (const auto& t : p.terms_) r.terms_.push_back({t.coeff * c, t.mono.times(m)});
    return r;
}

Polynomial subtract_term_multiple(const Polynomial& p, const Rational& c, const Monomial& m,
                                  const Polynomial& q, const MonomialOrder& order) {
    check_same_ring(p, q);
    Polynomial r(p.ring());
    r.terms_.reserve(p.terms_.size() + q.terms_.size());
    std::size_t i = 0, j = 0;
    const auto& pt = p.terms_;
    const auto& qt = q.terms_;
    while (i < pt.size() && j < qt.size()) {
        Monomial qm = qt[j].mono.times(m);
        auto cc = cmp(order, pt[i].mono, qm);
        if (cc == std::strong_ordering::greater) {
            r.terms_.push_back(pt[i++]);
        } else if (cc == std::strong_ordering::less) {
            r.terms_.push_back({-(qt[j].coeff * c), std::move(qm)});
            ++j;
        } else {
            Rational diff = pt[i].coeff - qt[j].coeff * c;
            if (!diff.is_zero()) r.terms_.push_back({std::move(diff), pt[i].mono});
            ++i, ++j;
        }
    }
    for (; i < pt.size(); ++i) r.terms_.push_back(pt[i]);
    for (; j < qt.size(); ++j) r.terms_.push_back({-(qt[j].coeff * c), qt[j].mono.times(m)});
    return r;
}

Polynomial mul(const Polynomial& p, const Polynomial& q, const MonomialOrder& order) {
    check_same_ring(p, q);
    std::vector<Term> products;
    products.reserve(p.terms().size() * q.terms().size());
    for (const auto& a : p.terms())
        for (const auto& b : q.terms())
            products.push_back({a.coeff * b.coeff, a.mono.times(b.mono)});
    return Polynomial::from_terms(p.ring(), std::move(products), order);
}

Polynomial pow(const Polynomial& p, std::uint32_t e, const MonomialOrder& order) {
    Polynomial result = Polynomial::constant(p.ring(), Rational(1));
    Polynomial base = p;
    while (e > 0) {
        if (e & 1u) result = mul(result, base, order);
        e >>= 1u;
        if (e > 0) base = mul(base, base, order);
    }
    return result;
}

Polynomial partial_derivative(const Polynomial& p, std::size_t var) {
    if (var >= p.ring().size())
        throw Error(ErrorCode::Structural, "variable index out of range");
    Polynomial r(p.ring());
    for (const auto& t : p.terms()) {
        std::uint32_t e = t.mono.exponent(var);
        if (e == 0) continue;
        auto exps = t.mono.exponents();
        exps[var] = e - 1;
        r.terms_.push_back({t.coeff * Rational(static_cast<long>(e)), Monomial(std::move(exps))});
    }
    // Dividing the surviving monomials by one variable preserves their order.
    return r;
}

HomogeneityInfo is_homogeneous(const Polynomial& p) {
    if (p.is_zero()) return {true, std::nullopt};
    std::uint64_t d = p.terms().front().mono.degree();
    for (const auto& t : p.terms())
        if (t.mono.degree() != d) return {false, std::nullopt};
    return {true, d};
}

std::optional<std::uint64_t> total_degree(const Polynomial& p) {
    if (p.is_zero()) return std::nullopt;
    std::uint64_t d = 0;
    for (const auto& t : p.terms()) d = std::max(d, t.mono.degree());
    return d;
}

Polynomial homogenize(const Polynomial& p, const std::string& new_var, std::size_t position,
                      const MonomialOrder& order) {
    if (p.ring().contains(new_var))
        throw Error(ErrorCode::NameCollision, "variable '" + new_var + "' already in ring");
    if (position > p.ring().size())
        throw Error(ErrorCode::Structural, "homogenization position out of range");
    std::vector<std::string> vars = p.ring().variables();
    vars.insert(vars.begin() + static_cast<std::ptrdiff_t>(position), new_var);
    Ring extended(std::move(vars));
    if (p.is_zero()) return Polynomial(extended);

    std::uint64_t d = *total_degree(p);
    std::vector<Term> terms;
    terms.reserve(p.terms().size());
    for (const auto& t : p.terms()) {
        std::vector<std::uint32_t> exps = t.mono.exponents();
        exps.insert(exps.begin() + static_cast<std::ptrdiff_t>(position),
                    static_cast<std::uint32_t>(d - t.mono.degree()));
        terms.push_back({t.coeff, Monomial(std::move(exps))});
    }
    return Polynomial::from_terms(std::move(extended), std::move(terms), order);
}

Polynomial dehomogenize(const Polynomial& p, std::size_t var, const MonomialOrder& order) {
    if (var >= p.ring().size())
        throw Error(ErrorCode::Structural, "variable index out of range");
    std::vector<std::string> vars = p.ring().variables();
    vars.erase(vars.begin() + static_cast<std::ptrdiff_t>(var));
    Ring smaller(std::move(vars));
    std::vector<Term> terms;
    terms.reserve(p.terms().size());
    for (const auto& t : p.terms()) {
        std::vector<std::uint32_t> exps = t.mono.exponents();
        exps.erase(exps.begin() + static_cast<std::ptrdiff_t>(var));
        terms.push_back({t.coeff, Monomial(std::move(exps))});
    }
    return Polynomial::from_terms(std::move(smaller), std::move(terms), order);
}

Polynomial substitute(const Polynomial& p, const std::map<std::size_t, Polynomial>& assignments,
                      const MonomialOrder& order) {
    const Ring& source = p.ring();
    Ring target = source;
    for (const auto& [index, image] : assignments) {
        if (index >= source.size())
            throw Error(ErrorCode::Structural, "substitution index out of range");
        target = image.ring();
    }
    for (const auto& [index, image] : assignments)
        if (!(image.ring() == target))
            throw Error(ErrorCode::RingMismatch, "substitution images from different rings");

    // Images for every source variable: explicit assignment, or the
    // same-named variable of the target ring.
    std::vector<Polynomial> images;
    images.reserve(source.size());
    for (std::size_t i = 0; i < source.size(); ++i) {
        auto it = assignments.find(i);
        if (it != assignments.end()) {
            images.push_back(it->second);
        } else {
            auto idx = target.index_of(source.variable(i));
            if (!idx)
                throw Error(ErrorCode::Structural,
                            "variable '" + source.variable(i) + "' has no image in target ring");
            images.push_back(Polynomial::variable(target, *idx));
        }
    }

    // Per-variable power tables up to the largest exponent used.
    std::vector<std::uint32_t> max_exp(source.size(), 0);
    for (const auto& t : p.terms())
        for (std::size_t i = 0; i < source.size(); ++i)
            max_exp[i] = std::max(max_exp[i], t.mono.exponent(i));
    std::vector<std::vector<Polynomial>> powers(source.size());
    for (std::size_t i = 0; i < source.size(); ++i) {
        powers[i].push_back(Polynomial::constant(target, Rational(1)));
        for (std::uint32_t e = 1; e <= max_exp[i]; ++e)
            powers[i].push_back(mul(powers[i].back(), images[i], order));
    }

    Polynomial result(target);
    for (const auto& t : p.terms()) {
        Polynomial term_value = Polynomial::constant(target, t.coeff);
        for (std::size_t i = 0; i < source.size(); ++i) {
            std::uint32_t e = t.mono.exponent(i);
            if (e > 0) term_value = mul(term_value, powers[i][e], order);
        }
        result = add(result, term_value, order);
    }
    return result;
}

Polynomial canonicalize(const Polynomial& p) {
    if (p.is_zero()) return p;
    mpz_class den_lcm = 1;
    for (const auto& t : p.terms()) den_lcm = lcm(den_lcm, t.coeff.denominator());
    mpz_class content = 0;
    for (const auto& t : p.terms())
        content = gcd(content, mpz_class(t.coeff.numerator() * den_lcm / t.coeff.denominator()));
    Rational factor{den_lcm, content};
    if (p.leading_coefficient().sign() < 0) factor = -factor;
    return scale(p, factor);
}

Rational evaluate(const Polynomial& p, std::span<const Rational> point) {
    if (point.size() != p.ring().size())
        throw Error(ErrorCode::Structural, "evaluation point has wrong dimension");
    Rational sum(0);
    for (const auto& t : p.terms()) {
        Rational value = t.coeff;
        for (std::size_t i = 0; i < point.size(); ++i) {
            std::uint32_t e = t.mono.exponent(i);
            if (e > 0) value *= point[i].pow(e);
        }
        sum += value;
    }
    return sum;
}

std::optional<Polynomial> divide_exact(const Polynomial& p, const Polynomial& q,
                                       const MonomialOrder& order) {
    if (q.is_zero()) throw Error(ErrorCode::Structural, "division by zero polynomial");
    if (!(p.ring() == q.ring()))
        throw Error(ErrorCode::RingMismatch, "polynomials from different rings");
    Polynomial remainder = p;
    std::vector<Term> quotient;
    while (!remainder.is_zero()) {
        const Term& lead = remainder.leading_term();
        auto shift = lead.mono.divided_by(q.leading_monomial());
        if (!shift) return std::nullopt;
        Rational c = lead.coeff / q.leading_coefficient();
        remainder = subtract_term_multiple(remainder, c, *shift, q, order);
        quotient.push_back({std::move(c), std::move(*shift)});
    }
    return Polynomial::from_terms(p.ring(), std::move(quotient), order);
}

Polynomial reorder(const Polynomial& p, const MonomialOrder& order) {
    return Polynomial::from_terms(p.ring(), p.terms(), order);
}

bool is_sorted_under(const Polynomial& p, const MonomialOrder& order) {
    const auto& terms = p.terms();
    for (std::size_t i = 0; i + 1 < terms.size(); ++i)
        if (cmp(order, terms[i].mono, terms[i + 1].mono) != std::strong_ordering::greater)
            return false;
    return true;
}

} // namespace dualis
