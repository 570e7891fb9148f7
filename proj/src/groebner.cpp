#include "dualis/groebner.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace dualis {

namespace {

void check_ring(const Polynomial& p, const Ring& ring, const char* what) {
    if (!(p.ring() == ring))
        throw Error(ErrorCode::RingMismatch, std::string(what) + " from a different ring");
}

struct Pair {
    std::uint64_t lcm_degree;
    Monomial lcm;
    std::size_t i, j; // i < j
};

struct PairLess {
    const MonomialOrder* order;
    bool operator()(const Pair& a, const Pair& b) const {
        if (a.lcm_degree != b.lcm_degree) return a.lcm_degree < b.lcm_degree;
        auto c = cmp(*order, a.lcm, b.lcm);
        if (c != std::strong_ordering::equal) return c == std::strong_ordering::less;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    }
};

} // namespace

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& order) {
    if (f.is_zero() || g.is_zero())
        throw Error(ErrorCode::Structural, "S-polynomial of a zero polynomial");
    if (!(f.ring() == g.ring()))
        throw Error(ErrorCode::RingMismatch, "S-polynomial inputs from different rings");
    Monomial lcm = Monomial::lcm(f.leading_monomial(), g.leading_monomial());
    Monomial uf = *lcm.divided_by(f.leading_monomial());
    Monomial ug = *lcm.divided_by(g.leading_monomial());
    Polynomial left = term_multiple(f, Rational(1) / f.leading_coefficient(), uf);
    return subtract_term_multiple(left, Rational(1) / g.leading_coefficient(), ug, g, order);
}

Polynomial normal_form(const Polynomial& p, const std::vector<Polynomial>& G,
                       const MonomialOrder& order) {
    for (const auto& g : G) {
        if (g.is_zero())
            throw Error(ErrorCode::Structural, "zero divisor polynomial in normal form");
        check_ring(g, p.ring(), "divisor");
    }
    Polynomial r = p;
    std::size_t i = 0;
    while (i < r.term_count()) {
        const Term& term = r.terms()[i];
        const Polynomial* divisor = nullptr;
        for (const auto& g : G) {
            if (g.leading_monomial().divides(term.mono)) {
                divisor = &g;
                break;
            }
        }
        if (divisor == nullptr) {
            ++i; // irreducible; everything before stays irreducible
            continue;
        }
        Rational c = term.coeff / divisor->leading_coefficient();
        Monomial shift = *term.mono.divided_by(divisor->leading_monomial());
        // Cancels the monomial at position i; introduces only smaller ones.
        r = subtract_term_multiple(r, c, shift, *divisor, order);
    }
    return r;
}

GroebnerBasis buchberger(const Ideal& ideal, const MonomialOrder& order,
                         const BuchbergerOptions& options) {
    std::vector<Polynomial> basis;
    for (const auto& g : ideal.generators()) basis.push_back(canonicalize(reorder(g, order)));

    // Pairs are treated (popped or discarded) in normal-strategy order:
    // smallest lcm degree first, then lcm, then indices.
    std::set<Pair, PairLess> queue{PairLess{&order}};
    std::set<std::pair<std::size_t, std::size_t>> treated;
    std::uint64_t reductions = 0;

    auto push_pairs_for = [&](std::size_t t) {
        for (std::size_t i = 0; i < t; ++i) {
            Monomial lcm = Monomial::lcm(basis[i].leading_monomial(), basis[t].leading_monomial());
            if (lcm.degree() ==
                basis[i].leading_monomial().degree() + basis[t].leading_monomial().degree()) {
                // Coprime leading monomials: S-pair reduces to zero (product criterion).
                treated.insert({i, t});
                continue;
            }
            queue.insert({lcm.degree(), std::move(lcm), i, t});
        }
    };
    for (std::size_t t = 1; t < basis.size(); ++t) push_pairs_for(t);

    while (!queue.empty()) {
        Pair pair = *queue.begin();
        queue.erase(queue.begin());
        treated.insert({pair.i, pair.j});

        // Chain criterion: skip when some h divides the lcm and both
        // sub-pairs have already been treated.
        bool skip = false;
        for (std::size_t k = 0; k < basis.size() && !skip; ++k) {
            if (k == pair.i || k == pair.j) continue;
            if (!basis[k].leading_monomial().divides(pair.lcm)) continue;
            auto ik = std::minmax(pair.i, k);
            auto jk = std::minmax(pair.j, k);
            if (treated.count({ik.first, ik.second}) && treated.count({jk.first, jk.second}))
                skip = true;
        }
        if (skip) continue;

        if (options.step_limit != 0 && ++reductions > options.step_limit)
            throw Error(ErrorCode::StepLimit, "Buchberger step budget exceeded");

        Polynomial s = s_polynomial(basis[pair.i], basis[pair.j], order);
        Polynomial h = normal_form(s, basis, order);
        if (h.is_zero()) continue;
        basis.push_back(canonicalize(h));
        push_pairs_for(basis.size() - 1);
    }

    return GroebnerBasis{ideal, order, std::move(basis), false};
}

GroebnerBasis reduce_basis(const GroebnerBasis& gb) {
    const MonomialOrder& order = gb.order;
    const auto& input = gb.basis;

    // Minimize: drop elements whose leading monomial is divisible by
    // another kept element's leading monomial.
    std::vector<bool> keep(input.size(), true);
    for (std::size_t i = 0; i < input.size(); ++i) {
        for (std::size_t j = 0; j < input.size() && keep[i]; ++j) {
            if (i == j || !keep[j]) continue;
            const Monomial& mi = input[i].leading_monomial();
            const Monomial& mj = input[j].leading_monomial();
            if (mj.divides(mi) && (!(mi == mj) || j < i)) keep[i] = false;
        }
    }
    std::vector<Polynomial> minimal;
    for (std::size_t i = 0; i < input.size(); ++i)
        if (keep[i]) minimal.push_back(input[i]);

    std::sort(minimal.begin(), minimal.end(), [&](const Polynomial& a, const Polynomial& b) {
        return order_less(order, a.leading_monomial(), b.leading_monomial());
    });

    // Tail-reduce each element against all the others.
    std::vector<Polynomial> reduced = minimal;
    for (std::size_t i = 0; i < reduced.size(); ++i) {
        std::vector<Polynomial> others;
        others.reserve(reduced.size() - 1);
        for (std::size_t j = 0; j < reduced.size(); ++j)
            if (j != i) others.push_back(reduced[j]);
        reduced[i] = canonicalize(normal_form(reduced[i], others, order));
    }

    std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& a, const Polynomial& b) {
        return order_less(order, a.leading_monomial(), b.leading_monomial());
    });
    return GroebnerBasis{gb.ideal, order, std::move(reduced), true};
}

GroebnerBasis reduced_groebner_basis(const Ideal& ideal, const MonomialOrder& order,
                                     const BuchbergerOptions& options) {
    return reduce_basis(buchberger(ideal, order, options));
}

EliminationResult eliminate_with_basis(const Ideal& ideal, std::size_t k,
                                       EliminationStrategy strategy,
                                       const BuchbergerOptions& options) {
    std::size_t n = ideal.ring().size();
    if (k >= n)
        throw Error(ErrorCode::Structural, "cannot eliminate all variables of the ring");

    if (k == 0) {
        GroebnerBasis gb = reduced_groebner_basis(ideal, MonomialOrder::degrevlex(), options);
        Ideal result(ideal.ring(), gb.basis);
        return {std::move(gb), std::move(result)};
    }

    MonomialOrder order = strategy == EliminationStrategy::BlockDegRevLex
                              ? MonomialOrder::elimination(k, n)
                              : MonomialOrder::lex();
    GroebnerBasis gb = reduced_groebner_basis(ideal, order, options);

    std::vector<std::string> trailing(ideal.ring().variables().begin() +
                                          static_cast<std::ptrdiff_t>(k),
                                      ideal.ring().variables().end());
    Ring subring(std::move(trailing));

    std::vector<Polynomial> kept;
    for (const auto& g : gb.basis) {
        bool pure = true;
        for (const auto& t : g.terms()) {
            for (std::size_t v = 0; v < k && pure; ++v)
                if (t.mono.exponent(v) != 0) pure = false;
            if (!pure) break;
        }
        if (!pure) continue;
        std::vector<Term> terms;
        terms.reserve(g.term_count());
        for (const auto& t : g.terms()) {
            std::vector<std::uint32_t> exps(t.mono.exponents().begin() +
                                                static_cast<std::ptrdiff_t>(k),
                                            t.mono.exponents().end());
            terms.push_back({t.coeff, Monomial(std::move(exps))});
        }
        kept.push_back(Polynomial::from_terms(subring, std::move(terms),
                                              MonomialOrder::degrevlex()));
    }
    Ideal eliminated(subring, std::move(kept));
    return {std::move(gb), std::move(eliminated)};
}

Ideal elimination_ideal(const Ideal& ideal, std::size_t k, EliminationStrategy strategy,
                        const BuchbergerOptions& options) {
    return eliminate_with_basis(ideal, k, strategy, options).eliminated;
}

bool ideal_membership(const Polynomial& p, const Ideal& ideal, const BuchbergerOptions& options) {
    check_ring(p, ideal.ring(), "membership candidate");
    if (p.is_zero()) return true;
    GroebnerBasis gb = reduced_groebner_basis(ideal, MonomialOrder::degrevlex(), options);
    return normal_form(reorder(p, gb.order), gb.basis, gb.order).is_zero();
}

bool ideal_equal(const Ideal& a, const Ideal& b, const BuchbergerOptions& options) {
    if (!(a.ring() == b.ring()))
        throw Error(ErrorCode::RingMismatch, "ideals from different rings");
    GroebnerBasis ga = reduced_groebner_basis(a, MonomialOrder::degrevlex(), options);
    GroebnerBasis gb = reduced_groebner_basis(b, MonomialOrder::degrevlex(), options);
    return ga.basis == gb.basis;
}

bool ideal_contains(const Ideal& outer, const Ideal& inner, const BuchbergerOptions& options) {
    if (!(outer.ring() == inner.ring()))
        throw Error(ErrorCode::RingMismatch, "ideals from different rings");
    GroebnerBasis gb = reduced_groebner_basis(outer, MonomialOrder::degrevlex(), options);
    for (const auto& g : inner.generators())
        if (!normal_form(reorder(g, gb.order), gb.basis, gb.order).is_zero()) return false;
    return true;
}

bool radical_membership(const Polynomial& p, const Ideal& ideal,
                        const BuchbergerOptions& options) {
    check_ring(p, ideal.ring(), "radical membership candidate");
    if (p.is_zero()) return true;

    // Fresh variable for the Rabinowitsch trick; "@..." names are
    // rejected by the input parser, so user rings cannot collide.
    std::string fresh = "@t";
    for (int suffix = 0; ideal.ring().contains(fresh); ++suffix)
        fresh = "@t" + std::to_string(suffix);

    std::vector<std::string> vars = ideal.ring().variables();
    vars.push_back(fresh);
    Ring extended(std::move(vars));
    std::size_t n = ideal.ring().size();
    const MonomialOrder canonical = MonomialOrder::degrevlex();

    auto lift = [&](const Polynomial& q) {
        std::vector<Term> terms;
        terms.reserve(q.term_count());
        for (const auto& t : q.terms()) {
            std::vector<std::uint32_t> exps = t.mono.exponents();
            exps.push_back(0);
            terms.push_back({t.coeff, Monomial(std::move(exps))});
        }
        return Polynomial::from_terms(extended, std::move(terms), canonical);
    };

    std::vector<Polynomial> gens;
    gens.reserve(ideal.generators().size() + 1);
    for (const auto& g : ideal.generators()) gens.push_back(lift(g));
    Polynomial one = Polynomial::constant(extended, Rational(1));
    Polynomial t_times_p = term_multiple(lift(p), Rational(1), Monomial::variable(n + 1, n));
    gens.push_back(sub(one, t_times_p, canonical));

    GroebnerBasis gb = reduced_groebner_basis(Ideal(extended, std::move(gens)), canonical, options);
    return normal_form(Polynomial::constant(extended, Rational(1)), gb.basis, gb.order).is_zero();
}

bool radical_contains(const Ideal& of, const Ideal& contained, const BuchbergerOptions& options) {
    if (!(of.ring() == contained.ring()))
        throw Error(ErrorCode::RingMismatch, "ideals from different rings");
    for (const auto& g : contained.generators())
        if (!radical_membership(g, of, options)) return false;
    return true;
}

} // namespace dualis
