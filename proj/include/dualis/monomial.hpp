#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

#include "dualis/error.hpp"

namespace dualis {

/// Exponent vector with cached total degree. The vector length always
/// equals the variable count of the owning ring.
class Monomial {
public:
    Monomial() = default;

    explicit Monomial(std::size_t nvars) : exps_(nvars, 0), degree_(0) {}

    explicit Monomial(std::vector<std::uint32_t> exponents)
        : exps_(std::move(exponents)),
          degree_(std::accumulate(exps_.begin(), exps_.end(), std::uint64_t{0})) {}

    static Monomial variable(std::size_t nvars, std::size_t index, std::uint32_t exp = 1) {
        if (index >= nvars)
            throw Error(ErrorCode::Structural, "variable index out of range");
        Monomial m(nvars);
        m.exps_[index] = exp;
        m.degree_ = exp;
        return m;
    }

    std::size_t size() const { return exps_.size(); }
    std::uint32_t exponent(std::size_t i) const { return exps_[i]; }
    const std::vector<std::uint32_t>& exponents() const { return exps_; }
    std::uint64_t degree() const { return degree_; }
    bool is_constant() const { return degree_ == 0; }

    Monomial times(const Monomial& o) const {
        check_size(o);
        Monomial r(*this);
        for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] += o.exps_[i];
        r.degree_ += o.degree_;
        return r;
    }

    bool divides(const Monomial& o) const {
        if (exps_.size() != o.exps_.size() || degree_ > o.degree_) return false;
        for (std::size_t i = 0; i < exps_.size(); ++i)
            if (exps_[i] > o.exps_[i]) return false;
        return true;
    }

    /// this / o, or nullopt when not divisible.
    std::optional<Monomial> divided_by(const Monomial& o) const {
        check_size(o);
        if (!o.divides(*this)) return std::nullopt;
        Monomial r(*this);
        for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] -= o.exps_[i];
        r.degree_ -= o.degree_;
        return r;
    }

    static Monomial lcm(const Monomial& a, const Monomial& b) {
        a.check_size(b);
        Monomial r(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) {
            r.exps_[i] = a.exps_[i] > b.exps_[i] ? a.exps_[i] : b.exps_[i];
            r.degree_ += r.exps_[i];
        }
        return r;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.degree_ == b.degree_ && a.exps_ == b.exps_;
    }

private:
    void check_size(const Monomial& o) const {
        if (exps_.size() != o.exps_.size())
            throw Error(ErrorCode::Structural, "monomial length mismatch");
    }

    std::vector<std::uint32_t> exps_;
    std::uint64_t degree_ = 0;
};

} // namespace dualis
