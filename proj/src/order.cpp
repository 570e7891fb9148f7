#include "dualis/order.hpp"

namespace dualis {

namespace {

std::strong_ordering cmp_lex(const std::uint32_t* a, const std::uint32_t* b, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i] != b[i]) return a[i] > b[i] ? std::strong_ordering::greater
                                             : std::strong_ordering::less;
    }
    return std::strong_ordering::equal;
}

std::strong_ordering cmp_degrevlex(const std::uint32_t* a, const std::uint32_t* b, std::size_t n) {
    std::uint64_t da = 0, db = 0;
    for (std::size_t i = 0; i < n; ++i) { da += a[i]; db += b[i]; }
    if (da != db) return da > db ? std::strong_ordering::greater : std::strong_ordering::less;
    // Degree tie: the last nonzero entry of a - b decides; positive means smaller.
    for (std::size_t i = n; i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i] ? std::strong_ordering::greater
                                             : std::strong_ordering::less;
    }
    return std::strong_ordering::equal;
}

std::strong_ordering cmp_simple(OrderKind kind, const std::uint32_t* a, const std::uint32_t* b,
                                std::size_t n) {
    return kind == OrderKind::Lex ? cmp_lex(a, b, n) : cmp_degrevlex(a, b, n);
}

} // namespace

MonomialOrder MonomialOrder::block(std::vector<std::pair<std::size_t, OrderKind>> blocks) {
    if (blocks.empty())
        throw Error(ErrorCode::Structural, "block order needs at least one block");
    for (const auto& [size, kind] : blocks) {
        if (size == 0)
            throw Error(ErrorCode::Structural, "empty block in block order");
        if (kind == OrderKind::Block)
            throw Error(ErrorCode::Structural, "nested block orders are not supported");
    }
    MonomialOrder o(OrderKind::Block);
    o.blocks_ = std::move(blocks);
    return o;
}

MonomialOrder MonomialOrder::elimination(std::size_t eliminated, std::size_t total) {
    if (eliminated == 0 || eliminated >= total)
        throw Error(ErrorCode::Structural, "elimination block must be a proper nonempty prefix");
    return block({{eliminated, OrderKind::DegRevLex}, {total - eliminated, OrderKind::DegRevLex}});
}

std::strong_ordering cmp(const MonomialOrder& order, const Monomial& a, const Monomial& b) {
    if (a.size() != b.size())
        throw Error(ErrorCode::Structural, "monomial length mismatch in comparison");
    const std::uint32_t* pa = a.exponents().data();
    const std::uint32_t* pb = b.exponents().data();
    if (order.kind() != OrderKind::Block)
        return cmp_simple(order.kind(), pa, pb, a.size());

    std::size_t expected = 0;
    for (const auto& [size, kind] : order.blocks()) expected += size;
    if (expected != a.size())
        throw Error(ErrorCode::Structural, "monomial length does not match block partition");

    std::size_t offset = 0;
    for (const auto& [size, kind] : order.blocks()) {
        auto c = cmp_simple(kind, pa + offset, pb + offset, size);
        if (c != std::strong_ordering::equal) return c;
        offset += size;
    }
    return std::strong_ordering::equal;
}

} // namespace dualis
