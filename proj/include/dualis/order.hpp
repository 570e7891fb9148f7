#pragma once

#include <compare>
#include <cstddef>
#include <utility>
#include <vector>

#include "dualis/monomial.hpp"

namespace dualis {

enum class OrderKind { Lex, DegRevLex, Block };

/// Total, multiplicative, global order on exponent vectors. Lex and
/// DegRevLex apply to any vector length; a Block order fixes the length
/// to the sum of its block sizes and compares block by block from the
/// first block (each block with its own inner Lex/DegRevLex).
class MonomialOrder {
public:
    static MonomialOrder lex() { return MonomialOrder(OrderKind::Lex); }
    static MonomialOrder degrevlex() { return MonomialOrder(OrderKind::DegRevLex); }

    static MonomialOrder block(std::vector<std::pair<std::size_t, OrderKind>> blocks);

    /// Elimination order for the first `eliminated` of `total` variables:
    /// two DegRevLex blocks compared leading block first.
    static MonomialOrder elimination(std::size_t eliminated, std::size_t total);

    OrderKind kind() const { return kind_; }
    const std::vector<std::pair<std::size_t, OrderKind>>& blocks() const { return blocks_; }

    friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
        return a.kind_ == b.kind_ && a.blocks_ == b.blocks_;
    }

private:
    explicit MonomialOrder(OrderKind kind) : kind_(kind) {}

    OrderKind kind_;
    std::vector<std::pair<std::size_t, OrderKind>> blocks_; // Block only
};

/// Three-way comparison of monomials under the order. Throws on any
/// length mismatch.
std::strong_ordering cmp(const MonomialOrder& order, const Monomial& a, const Monomial& b);

inline bool order_less(const MonomialOrder& order, const Monomial& a, const Monomial& b) {
    return cmp(order, a, b) == std::strong_ordering::less;
}
inline bool order_greater(const MonomialOrder& order, const Monomial& a, const Monomial& b) {
    return cmp(order, a, b) == std::strong_ordering::greater;
}

} // namespace dualis
