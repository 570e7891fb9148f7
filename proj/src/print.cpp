#include "dualis/print.hpp"

namespace dualis {

namespace {

void print_term(std::string& out, const Term& t, const Ring& ring, bool first) {
    Rational c = t.coeff;
    if (c.sign() < 0) {
        out += '-';
        c = -c;
    } else if (!first) {
        out += '+';
    }
    bool printed_coeff = false;
    if (!c.is_one() || t.mono.is_constant()) {
        out += c.to_string();
        printed_coeff = true;
    }
    for (std::size_t i = 0; i < ring.size(); ++i) {
        std::uint32_t e = t.mono.exponent(i);
        if (e == 0) continue;
        if (printed_coeff) out += '*';
        out += ring.variable(i);
        if (e > 1) {
            out += '^';
            out += std::to_string(e);
        }
        printed_coeff = true;
    }
}

} // namespace

std::string print_polynomial(const Polynomial& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : p.terms()) {
        print_term(out, t, p.ring(), first);
        first = false;
    }
    return out;
}

std::string print_ideal(const Ideal& ideal) {
    std::string out = "ring";
    for (const auto& v : ideal.ring().variables()) {
        out += ' ';
        out += v;
    }
    out += ";\n";
    const auto& gens = ideal.generators();
    if (gens.empty()) {
        out += "ideal = 0;\n";
    } else if (gens.size() == 1) {
        out += "ideal = " + print_polynomial(gens[0]) + ";\n";
    } else {
        out += "ideal =\n";
        for (const auto& g : gens) out += "  " + print_polynomial(g) + ";\n";
    }
    return out;
}

} // namespace dualis
