#pragma once

#include <string>
#include <vector>

#include "dualis/plane_curves.hpp"

namespace dualis {

struct PlotSpec {
    Rational xmin, xmax, ymin, ymax;
    int resolution = 64;                // grid cells per axis, >= 8
    std::vector<std::string> strokes;   // optional per-curve override

    void validate() const;
};

struct PlotPoint {
    Rational x, y;
};

struct PlotSegment {
    PlotPoint a, b;
};

/// Marching-squares contour of f = 0 with exact rational evaluation at
/// the grid nodes and linear interpolation along cell edges. Saddle
/// cells are disambiguated by the exact sign at the cell center.
/// Deterministic: cells scan row-major, segments in fixed case order.
std::vector<PlotSegment> contour_segments(const PlaneCurve& curve, const PlotSpec& spec);

/// SVG 1.1 document, one path per curve, the first curve styled
/// distinctly; fixed element order and 6-decimal coordinates.
std::string plot_implicit(const std::vector<PlaneCurve>& curves, const PlotSpec& spec);

} // namespace dualis
