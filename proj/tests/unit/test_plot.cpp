#include <doctest.h>

#include <map>

#include "dualis/plot.hpp"
#include "helpers.hpp"

using namespace dualis;
using namespace testutil;

namespace {

PlotSpec window(long a, long b, int res) {
    PlotSpec spec;
    spec.xmin = Rational(a);
    spec.xmax = Rational(b);
    spec.ymin = Rational(a);
    spec.ymax = Rational(b);
    spec.resolution = res;
    return spec;
}

// Minimal XML well-formedness scan: single root, balanced tags, quoted
// attributes.
bool well_formed_xml(const std::string& text) {
    std::vector<std::string> stack;
    std::size_t i = 0;
    int roots = 0;
    while (i < text.size()) {
        if (text[i] != '<') {
            ++i;
            continue;
        }
        std::size_t end = text.find('>', i);
        if (end == std::string::npos) return false;
        std::string tag = text.substr(i + 1, end - i - 1);
        if (std::count(tag.begin(), tag.end(), '"') % 2 != 0) return false;
        if (!tag.empty() && tag.front() == '?') {
            // prolog
        } else if (!tag.empty() && tag.front() == '/') {
            if (stack.empty()) return false;
            std::string name = tag.substr(1);
            if (stack.back() != name) return false;
            stack.pop_back();
            if (stack.empty()) ++roots;
        } else if (!tag.empty() && tag.back() == '/') {
            if (stack.empty()) ++roots;
        } else {
            std::string name = tag.substr(0, tag.find_first_of(" \t\n"));
            if (stack.empty() && roots > 0) return false; // second root
            stack.push_back(name);
        }
        i = end + 1;
    }
    return stack.empty() && roots == 1;
}

} // namespace

TEST_CASE("circle contour: closed curve with exactly bounded vertices") {
    Ring r = ring_of({"x", "y"});
    PlaneCurve circle{r, P(r, "x^2+y^2-1")};
    PlotSpec spec = window(-2, 2, 64);
    auto segments = contour_segments(circle, spec);
    CHECK(!segments.empty());

    // Interpolated vertices of an exactly evaluated quadric stay within
    // h^2/4 of the zero set along each edge: h = 4/64 gives 1/1024.
    Rational bound(1, 1024);
    std::map<std::string, int> degree;
    for (const auto& seg : segments) {
        for (const auto& v : {seg.a, seg.b}) {
            const Rational at[] = {v.x, v.y};
            CHECK(evaluate(circle.f, at).abs() <= bound);
            degree[v.x.to_string() + "," + v.y.to_string()] += 1;
        }
    }
    // A closed contour: every vertex is met exactly twice.
    for (const auto& [key, count] : degree) CHECK(count == 2);
}

TEST_CASE("empty zero set yields zero segments") {
    Ring r = ring_of({"x", "y"});
    PlaneCurve none{r, Polynomial::constant(r, Rational(1))};
    CHECK(contour_segments(none, window(-2, 2, 16)).empty());

    std::string svg = plot_implicit({none}, window(-2, 2, 16));
    CHECK(well_formed_xml(svg));
    CHECK(svg.find("d=\"\"") != std::string::npos);
}

TEST_CASE("saddle cells resolve deterministically by the center sign") {
    Ring r = ring_of({"x", "y"});
    PlaneCurve saddle{r, P(r, "x*y-1/100")};
    auto first = contour_segments(saddle, window(-2, 2, 9));
    auto second = contour_segments(saddle, window(-2, 2, 9));
    REQUIRE(first.size() == second.size());
    for (std::size_t i = 0; i < first.size(); ++i) {
        CHECK(first[i].a.x == second[i].a.x);
        CHECK(first[i].b.y == second[i].b.y);
    }
}

TEST_CASE("svg output is deterministic, well-formed, and styled") {
    Ring r = ring_of({"x", "y"});
    PlaneCurve neil{r, P(r, "x^3-y^2")};
    PlaneCurve dual{r, P(r, "4*x^3+27*y^2")};
    PlotSpec spec = window(-2, 2, 64);

    std::string svg1 = plot_implicit({neil, dual}, spec);
    std::string svg2 = plot_implicit({neil, dual}, spec);
    CHECK(svg1 == svg2);
    CHECK(well_formed_xml(svg1));

    // One path per curve; the first is the distinct (red) one, and both
    // actually carry geometry in this window.
    std::size_t first_path = svg1.find("<path");
    std::size_t second_path = svg1.find("<path", first_path + 1);
    REQUIRE(first_path != std::string::npos);
    REQUIRE(second_path != std::string::npos);
    CHECK(svg1.find("<path", second_path + 1) == std::string::npos);
    CHECK(svg1.find("#cc0000") != std::string::npos);
    CHECK(svg1.substr(first_path, second_path - first_path).find("M ") != std::string::npos);
    CHECK(svg1.substr(second_path).find("M ") != std::string::npos);
}

TEST_CASE("window validation") {
    Ring r = ring_of({"x", "y"});
    PlaneCurve circle{r, P(r, "x^2+y^2-1")};
    PlotSpec bad = window(-2, 2, 64);
    bad.xmax = Rational(-2);
    CHECK_THROWS_AS(contour_segments(circle, bad), Error);
    PlotSpec coarse = window(-2, 2, 7);
    CHECK_THROWS_AS(plot_implicit({circle}, coarse), Error);

    PlaneCurve other{ring_of({"a", "b"}), P(ring_of({"a", "b"}), "a")};
    CHECK_THROWS_AS(plot_implicit({circle, other}, window(-2, 2, 16)), Error);
}
