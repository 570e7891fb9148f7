#include "dualis/plot.hpp"

#include <cstdio>

namespace dualis {

namespace {

Rational lerp(const Rational& a, const Rational& b, const Rational& va, const Rational& vb) {
    Rational t = va / (va - vb);
    return a + t * (b - a);
}

struct CellCorners {
    Rational x0, x1, y0, y1;          // cell bounds
    Rational bl, br, tr, tl;          // node values
};

// Edge crossing points; only queried on edges whose corner signs differ.
PlotPoint bottom_pt(const CellCorners& c) { return {lerp(c.x0, c.x1, c.bl, c.br), c.y0}; }
PlotPoint right_pt(const CellCorners& c) { return {c.x1, lerp(c.y0, c.y1, c.br, c.tr)}; }
PlotPoint top_pt(const CellCorners& c) { return {lerp(c.x0, c.x1, c.tl, c.tr), c.y1}; }
PlotPoint left_pt(const CellCorners& c) { return {c.x0, lerp(c.y0, c.y1, c.bl, c.tl)}; }

} // namespace

void PlotSpec::validate() const {
    if (!(xmin < xmax) || !(ymin < ymax))
        throw Error(ErrorCode::Window, "plot window must have positive extent");
    if (resolution < 8)
        throw Error(ErrorCode::Window, "plot resolution must be at least 8");
}

std::vector<PlotSegment> contour_segments(const PlaneCurve& curve, const PlotSpec& spec) {
    spec.validate();
    const int res = spec.resolution;
    Rational dx = (spec.xmax - spec.xmin) / Rational(res);
    Rational dy = (spec.ymax - spec.ymin) / Rational(res);

    std::vector<Rational> xs, ys;
    xs.reserve(res + 1);
    ys.reserve(res + 1);
    for (int i = 0; i <= res; ++i) xs.push_back(spec.xmin + Rational(i) * dx);
    for (int j = 0; j <= res; ++j) ys.push_back(spec.ymin + Rational(j) * dy);

    std::vector<std::vector<Rational>> values(res + 1, std::vector<Rational>(res + 1));
    for (int j = 0; j <= res; ++j)
        for (int i = 0; i <= res; ++i) {
            const Rational point[] = {xs[i], ys[j]};
            values[j][i] = evaluate(curve.f, point);
        }

    // Exact zeros count as the positive side.
    auto positive = [](const Rational& v) { return v.sign() >= 0; };

    std::vector<PlotSegment> segments;
    for (int j = 0; j < res; ++j) {
        for (int i = 0; i < res; ++i) {
            CellCorners c{xs[i], xs[i + 1], ys[j], ys[j + 1],
                          values[j][i], values[j][i + 1], values[j + 1][i + 1], values[j + 1][i]};
            int config = (positive(c.bl) ? 1 : 0) | (positive(c.br) ? 2 : 0) |
                         (positive(c.tr) ? 4 : 0) | (positive(c.tl) ? 8 : 0);
            auto emit = [&](PlotPoint a, PlotPoint b) {
                segments.push_back({std::move(a), std::move(b)});
            };
            switch (config) {
                case 0: case 15: break;
                case 1: emit(left_pt(c), bottom_pt(c)); break;
                case 2: emit(bottom_pt(c), right_pt(c)); break;
                case 3: emit(left_pt(c), right_pt(c)); break;
                case 4: emit(right_pt(c), top_pt(c)); break;
                case 6: emit(bottom_pt(c), top_pt(c)); break;
                case 7: emit(left_pt(c), top_pt(c)); break;
                case 8: emit(left_pt(c), top_pt(c)); break;
                case 9: emit(bottom_pt(c), top_pt(c)); break;
                case 11: emit(right_pt(c), top_pt(c)); break;
                case 12: emit(left_pt(c), right_pt(c)); break;
                case 13: emit(bottom_pt(c), right_pt(c)); break;
                case 14: emit(left_pt(c), bottom_pt(c)); break;
                case 5: case 10: {
                    // Saddle: exact sign at the cell center decides the pairing.
                    const Rational center[] = {(c.x0 + c.x1) / Rational(2),
                                               (c.y0 + c.y1) / Rational(2)};
                    bool center_pos = positive(evaluate(curve.f, center));
                    bool connect_bl_tr = (config == 5) == center_pos;
                    if (connect_bl_tr) {
                        emit(bottom_pt(c), right_pt(c));
                        emit(left_pt(c), top_pt(c));
                    } else {
                        emit(left_pt(c), bottom_pt(c));
                        emit(right_pt(c), top_pt(c));
                    }
                    break;
                }
                default: break;
            }
        }
    }
    return segments;
}

namespace {

std::string format_coord(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

const char* kPalette[] = {"#1f4e9c", "#1a7a3c", "#6a2d8f", "#9c7a1f", "#1f8f8f"};

} // namespace

std::string plot_implicit(const std::vector<PlaneCurve>& curves, const PlotSpec& spec) {
    spec.validate();
    for (std::size_t i = 1; i < curves.size(); ++i)
        if (!(curves[i].ring == curves[0].ring))
            throw Error(ErrorCode::RingMismatch, "plotted curves must share one ring");

    const double canvas = 640.0;
    double x0 = spec.xmin.to_double(), x1 = spec.xmax.to_double();
    double y0 = spec.ymin.to_double(), y1 = spec.ymax.to_double();

    auto px = [&](const Rational& x) { return (x.to_double() - x0) / (x1 - x0) * canvas; };
    auto py = [&](const Rational& y) { return (y1 - y.to_double()) / (y1 - y0) * canvas; };

    std::string svg = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"640\" "
           "viewBox=\"0 0 640 640\">\n";
    svg += "<rect width=\"640\" height=\"640\" fill=\"#ffffff\"/>\n";
    for (std::size_t k = 0; k < curves.size(); ++k) {
        std::string stroke;
        if (k < spec.strokes.size() && !spec.strokes[k].empty())
            stroke = spec.strokes[k];
        else if (k == 0)
            stroke = "#cc0000"; // first curve drawn red
        else
            stroke = kPalette[(k - 1) % (sizeof(kPalette) / sizeof(kPalette[0]))];

        std::string d;
        for (const auto& seg : contour_segments(curves[k], spec)) {
            d += "M " + format_coord(px(seg.a.x)) + " " + format_coord(py(seg.a.y));
            d += " L " + format_coord(px(seg.b.x)) + " " + format_coord(py(seg.b.y)) + " ";
        }
        if (!d.empty() && d.back() == ' ') d.pop_back();
        svg += "<path d=\"" + d + "\" fill=\"none\" stroke=\"" + stroke +
               "\" stroke-width=\"1.5\"/>\n";
    }
    svg += "</svg>\n";
    return svg;
}

} // namespace dualis
