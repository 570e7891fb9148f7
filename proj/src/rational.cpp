#include "dualis/rational.hpp"

namespace dualis {

Rational Rational::from_string(std::string_view text) {
    bool negative = false;
    std::string_view body = text;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    auto slash = body.find('/');
    std::string num(body.substr(0, slash));
    std::string den = slash == std::string_view::npos ? "1" : std::string(body.substr(slash + 1));
    if (num.empty() || den.empty() ||
        num.find_first_not_of("0123456789") != std::string::npos ||
        den.find_first_not_of("0123456789") != std::string::npos)
        throw Error(ErrorCode::Structural, "malformed rational literal '" + std::string(text) + "'");
    Rational r{mpz_class(num), mpz_class(den)};
    return negative ? -r : r;
}

Rational Rational::pow(unsigned long e) const {
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), value_.get_num().get_mpz_t(), e);
    mpz_pow_ui(den.get_mpz_t(), value_.get_den().get_mpz_t(), e);
    // Powers of a canonical fraction stay canonical.
    mpq_class r;
    r.get_num() = std::move(num);
    r.get_den() = std::move(den);
    return Rational(std::move(r));
}

std::string Rational::to_string() const {
    if (is_integer()) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

} // namespace dualis
