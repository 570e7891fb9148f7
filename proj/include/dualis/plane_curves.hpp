#pragma once

#include "dualis/groebner.hpp"

namespace dualis {

/// Implicit affine plane curve f(x, y) = 0 over a two-variable ring.
struct PlaneCurve {
    PlaneCurve(Ring ring, Polynomial f);

    Ring ring;
    Polynomial f;
};

/// Squared inversion radius; the default construction site uses -1.
struct InversionRadiusSquared {
    explicit InversionRadiusSquared(Rational value);

    Rational r2;
};

/// Feet of perpendiculars from the origin to the tangents of the curve,
/// computed by eliminating the point of tangency. Generically the locus
/// is a curve (principal ideal); degenerate loci keep all generators.
struct PedalResult {
    Ideal ideal;
    bool principal;

    PlaneCurve as_curve() const;
};
PedalResult pedal_implicit(const PlaneCurve& curve, const BuchbergerOptions& options = {});

/// Inversion x -> r^2 x / |x|^2 applied to f = 0, denominators cleared
/// and common |x|^2 factors stripped. Curves through the origin are
/// allowed; the flag reports them.
struct InversionResult {
    PlaneCurve curve;
    bool through_origin;
};
InversionResult invert_implicit(const PlaneCurve& curve, const InversionRadiusSquared& r2);

/// Affine dual construction: inversion of the pedal.
PlaneCurve dual_via_pedal(const PlaneCurve& curve, const InversionRadiusSquared& r2,
                          const BuchbergerOptions& options = {});

} // namespace dualis
