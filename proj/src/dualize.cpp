#include "dualis/dualize.hpp"

namespace dualis {

namespace {

Polynomial lift(const Polynomial& p, const Ring& extended) {
    // The extended ring starts with the base variables; pad exponents.
    std::vector<Term> terms;
    terms.reserve(p.term_count());
    for (const auto& t : p.terms()) {
        std::vector<std::uint32_t> exps = t.mono.exponents();
        exps.resize(extended.size(), 0);
        terms.push_back({t.coeff, Monomial(std::move(exps))});
    }
    return Polynomial::from_terms(extended, std::move(terms), MonomialOrder::degrevlex());
}

Ideal rename_variables(const Ideal& ideal, const Ring& target) {
    if (ideal.ring().size() != target.size())
        throw Error(ErrorCode::Structural, "rename between rings of different size");
    std::vector<Polynomial> gens;
    gens.reserve(ideal.generators().size());
    for (const auto& g : ideal.generators())
        gens.push_back(Polynomial::from_terms(target, g.terms(), MonomialOrder::degrevlex()));
    return Ideal(target, std::move(gens));
}

} // namespace

DualizationSystem build_system(const Ideal& ideal) {
    if (ideal.is_zero())
        throw Error(ErrorCode::EmptyIdeal, "cannot dualize the zero ideal");
    const Ring& base = ideal.ring();
    if (base.size() < 2)
        throw Error(ErrorCode::Structural, "dualization needs a ring with at least 2 variables");
    for (const auto& g : ideal.generators())
        if (!is_homogeneous(g).homogeneous)
            throw Error(ErrorCode::NonHomogeneous, "input ideal must be homogeneous");

    std::size_t n1 = base.size(); // n+1 point coordinates
    std::size_t m = ideal.generators().size();

    std::vector<std::string> names = base.variables();
    for (std::size_t j = 1; j <= m; ++j) names.push_back("lambda" + std::to_string(j));
    for (std::size_t i = 0; i < n1; ++i) names.push_back("u" + std::to_string(i));
    Ring extended(std::move(names)); // the Ring constructor rejects collisions

    std::vector<std::vector<Polynomial>> jacobian(m);
    for (std::size_t j = 0; j < m; ++j) {
        jacobian[j].reserve(n1);
        for (std::size_t i = 0; i < n1; ++i)
            jacobian[j].push_back(partial_derivative(ideal.generators()[j], i));
    }

    const MonomialOrder canonical = MonomialOrder::degrevlex();
    std::vector<Polynomial> gens;
    gens.reserve(m + n1);
    for (const auto& p : ideal.generators()) gens.push_back(lift(p, extended));
    for (std::size_t i = 0; i < n1; ++i) {
        Polynomial g = Polynomial::variable(extended, n1 + m + i); // u_i
        for (std::size_t j = 0; j < m; ++j) {
            Monomial lambda_j = Monomial::variable(extended.size(), n1 + j);
            g = sub(g, term_multiple(lift(jacobian[j][i], extended), Rational(1), lambda_j),
                    canonical);
        }
        gens.push_back(std::move(g));
    }

    Ideal system(extended, std::move(gens));
    return DualizationSystem{base, extended, std::move(system), std::move(jacobian), m, n1};
}

DualComputation dualize_full(const Ideal& ideal, EliminationStrategy strategy,
                             const BuchbergerOptions& options) {
    DualizationSystem ds = build_system(ideal);
    std::size_t k = ds.variable_count + ds.generator_count; // all x and lambda
    EliminationResult elim = eliminate_with_basis(ds.system, k, strategy, options);
    Ideal renamed = rename_variables(elim.eliminated, ds.base_ring);
    bool degenerate = renamed.is_zero();
    if (!degenerate && strategy == EliminationStrategy::PureLex) {
        // Re-present under the canonical order so both strategies print alike.
        GroebnerBasis gb = reduced_groebner_basis(renamed, MonomialOrder::degrevlex(), options);
        renamed = Ideal(renamed.ring(), gb.basis);
    }
    return {std::move(ds), std::move(elim.full), std::move(elim.eliminated), std::move(renamed),
            degenerate};
}

DualResult dual_with_info(const Ideal& ideal, EliminationStrategy strategy,
                          const BuchbergerOptions& options) {
    DualComputation full = dualize_full(ideal, strategy, options);
    return {std::move(full.dual), full.degenerate};
}

Ideal dual(const Ideal& ideal, EliminationStrategy strategy, const BuchbergerOptions& options) {
    return dual_with_info(ideal, strategy, options).ideal;
}

DoubleDualReport double_dual_check(const Ideal& ideal, EliminationStrategy strategy,
                                   const BuchbergerOptions& options) {
    Ideal first = dual(ideal, strategy, options);
    Ideal second = dual(first, strategy, options);
    bool equal = ideal_equal(ideal, second, options);
    return {std::move(first), std::move(second), equal};
}

DiagramReport check_diagram(const Ideal& ideal, const std::optional<Ideal>& radical_candidate,
                            EliminationStrategy strategy, const BuchbergerOptions& options) {
    if (radical_candidate) {
        if (!(radical_candidate->ring() == ideal.ring()))
            throw Error(ErrorCode::RingMismatch, "radical candidate from a different ring");
        // Sandwich I <= candidate <= sqrt(I).
        if (!ideal_contains(*radical_candidate, ideal, options) ||
            !radical_contains(ideal, *radical_candidate, options))
            throw Error(ErrorCode::BadRadical,
                        "radical candidate does not satisfy I ⊆ C ⊆ √I");
    }

    DiagramReport report{Ideal(ideal.ring()), std::nullopt, false, std::nullopt, std::nullopt};
    report.dual_of_ideal = dual(ideal, strategy, options);
    report.dual_in_its_radical = radical_contains(report.dual_of_ideal, report.dual_of_ideal,
                                                  options);
    if (radical_candidate) {
        report.dual_of_radical = dual(*radical_candidate, strategy, options);
        report.radical_dual_in_its_radical =
            radical_contains(*report.dual_of_radical, *report.dual_of_radical, options);
        // sqrt(D(cand)) in sqrt(D(I)) holds iff D(cand) in sqrt(D(I)).
        report.bent_arrow = radical_contains(report.dual_of_ideal, *report.dual_of_radical,
                                             options);
    }
    return report;
}

std::vector<std::vector<Rational>> oracle_lambda_vectors(std::size_t m) {
    std::vector<std::vector<Rational>> out;
    for (std::size_t j = 0; j < m; ++j) {
        std::vector<Rational> e(m, Rational(0));
        e[j] = Rational(1);
        out.push_back(std::move(e));
    }
    out.emplace_back(m, Rational(1));
    std::vector<Rational> ramp;
    for (std::size_t j = 1; j <= m; ++j) ramp.push_back(Rational(static_cast<long>(j)));
    out.push_back(std::move(ramp));
    return out;
}

bool tangent_sample_oracle(const Ideal& ideal, const Ideal& dual_ideal,
                           const std::vector<std::vector<Rational>>& samples) {
    if (!(ideal.ring() == dual_ideal.ring()))
        throw Error(ErrorCode::RingMismatch, "dual ideal from a different ring");
    std::size_t n1 = ideal.ring().size();
    std::size_t m = ideal.generators().size();

    for (const auto& x : samples) {
        if (x.size() != n1)
            throw Error(ErrorCode::Structural, "sample point has wrong dimension");
        for (const auto& p : ideal.generators())
            if (!evaluate(p, x).is_zero())
                throw Error(ErrorCode::NotOnVariety, "sample point does not lie on V(I)");
    }

    // Gradients evaluated at each sample: row j = grad p_j.
    std::vector<std::vector<Polynomial>> jac(m);
    for (std::size_t j = 0; j < m; ++j)
        for (std::size_t i = 0; i < n1; ++i)
            jac[j].push_back(partial_derivative(ideal.generators()[j], i));

    auto lambdas = oracle_lambda_vectors(m);
    for (const auto& x : samples) {
        std::vector<std::vector<Rational>> grad(m, std::vector<Rational>(n1, Rational(0)));
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t i = 0; i < n1; ++i) grad[j][i] = evaluate(jac[j][i], x);

        for (const auto& lambda : lambdas) {
            std::vector<Rational> u(n1, Rational(0));
            bool all_zero = true;
            for (std::size_t i = 0; i < n1; ++i) {
                for (std::size_t j = 0; j < m; ++j) u[i] += lambda[j] * grad[j][i];
                if (!u[i].is_zero()) all_zero = false;
            }
            if (all_zero) continue;
            for (const auto& d : dual_ideal.generators())
                if (!evaluate(d, u).is_zero()) return false;
        }
    }
    return true;
}

} // namespace dualis
