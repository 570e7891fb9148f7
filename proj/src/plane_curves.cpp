#include "dualis/plane_curves.hpp"

namespace dualis {

namespace {

const MonomialOrder kCanonical = MonomialOrder::degrevlex();

Polynomial lift_to(const Polynomial& p, const Ring& target) {
    // target starts with the curve's two variables.
    std::vector<Term> terms;
    terms.reserve(p.term_count());
    for (const auto& t : p.terms()) {
        std::vector<std::uint32_t> exps = t.mono.exponents();
        exps.resize(target.size(), 0);
        terms.push_back({t.coeff, Monomial(std::move(exps))});
    }
    return Polynomial::from_terms(target, std::move(terms), kCanonical);
}

} // namespace

PlaneCurve::PlaneCurve(Ring r, Polynomial poly) : ring(std::move(r)), f(std::move(poly)) {
    if (ring.size() != 2)
        throw Error(ErrorCode::Structural, "plane curves need exactly 2 variables");
    if (!(f.ring() == ring))
        throw Error(ErrorCode::RingMismatch, "curve polynomial from a different ring");
    if (f.is_zero())
        throw Error(ErrorCode::Structural, "curve polynomial must be nonzero");
}

InversionRadiusSquared::InversionRadiusSquared(Rational value) : r2(std::move(value)) {
    if (r2.is_zero())
        throw Error(ErrorCode::Structural, "inversion radius squared must be nonzero");
}

PlaneCurve PedalResult::as_curve() const {
    if (!principal)
        throw Error(ErrorCode::DegeneratePedal, "pedal locus is not a single curve");
    return PlaneCurve(ideal.ring(), ideal.generators().front());
}

PedalResult pedal_implicit(const PlaneCurve& curve, const BuchbergerOptions& options) {
    if (curve.f.is_constant())
        throw Error(ErrorCode::ConstantCurve, "cannot take the pedal of a constant");

    // Work in Q[x, y, @X, @Y]: (x, y) the tangency point, (@X, @Y) the foot.
    std::vector<std::string> names = curve.ring.variables();
    names.push_back("@X");
    names.push_back("@Y");
    Ring work(std::move(names));

    Polynomial f = lift_to(curve.f, work);
    Polynomial fx = lift_to(partial_derivative(curve.f, 0), work);
    Polynomial fy = lift_to(partial_derivative(curve.f, 1), work);
    Polynomial x = Polynomial::variable(work, 0);
    Polynomial y = Polynomial::variable(work, 1);
    Polynomial X = Polynomial::variable(work, 2);
    Polynomial Y = Polynomial::variable(work, 3);

    // Foot on the tangent, and orthogonal to the tangent direction.
    Polynomial on_tangent = add(mul(sub(X, x, kCanonical), fx, kCanonical),
                                mul(sub(Y, y, kCanonical), fy, kCanonical), kCanonical);
    Polynomial orthogonal = sub(mul(X, fy, kCanonical), mul(Y, fx, kCanonical), kCanonical);

    Ideal conditions(work, {f, on_tangent, orthogonal});
    Ideal eliminated = elimination_ideal(conditions, 2, EliminationStrategy::BlockDegRevLex,
                                         options);
    if (eliminated.is_zero())
        throw Error(ErrorCode::TrivialPedal, "pedal elimination ideal is zero");

    std::vector<Polynomial> gens;
    gens.reserve(eliminated.generators().size());
    for (const auto& g : eliminated.generators())
        gens.push_back(Polynomial::from_terms(curve.ring, g.terms(), kCanonical));
    Ideal renamed(curve.ring, std::move(gens));
    bool principal = renamed.generators().size() == 1;
    return {std::move(renamed), principal};
}

InversionResult invert_implicit(const PlaneCurve& curve, const InversionRadiusSquared& r2) {
    if (curve.f.is_constant())
        throw Error(ErrorCode::ConstantCurve, "cannot invert a constant");

    const Ring& ring = curve.ring;
    std::uint64_t d = *total_degree(curve.f);
    Polynomial norm2 = Polynomial::from_terms(
        ring,
        {{Rational(1), Monomial::variable(2, 0, 2)}, {Rational(1), Monomial::variable(2, 1, 2)}},
        kCanonical);

    // f(r2 x / (x^2+y^2), r2 y / (x^2+y^2)) * (x^2+y^2)^d, term by term.
    Polynomial result(ring);
    for (const auto& t : curve.f.terms()) {
        std::uint64_t td = t.mono.degree();
        Polynomial piece = pow(norm2, static_cast<std::uint32_t>(d - td), kCanonical);
        piece = term_multiple(piece, t.coeff * r2.r2.pow(td), t.mono);
        result = add(result, piece, kCanonical);
    }

    while (true) {
        auto quotient = divide_exact(result, norm2, kCanonical);
        if (!quotient) break;
        result = std::move(*quotient);
    }
    if (result.is_constant())
        throw Error(ErrorCode::ConstantCurve, "inverse degenerates to a constant");

    const Rational zero2[] = {Rational(0), Rational(0)};
    bool through_origin = evaluate(curve.f, zero2).is_zero();
    return {PlaneCurve(ring, canonicalize(result)), through_origin};
}

PlaneCurve dual_via_pedal(const PlaneCurve& curve, const InversionRadiusSquared& r2,
                          const BuchbergerOptions& options) {
    PedalResult pedal = pedal_implicit(curve, options);
    return invert_implicit(pedal.as_curve(), r2).curve;
}

} // namespace dualis
