#pragma once

#include <cstdint>
#include <vector>

#include "dualis/polynomial.hpp"

namespace dualis {

/// Finite generator list in one ring. Zero generators are dropped on
/// construction; the empty list is the zero ideal.
class Ideal {
public:
    explicit Ideal(Ring ring) : ring_(std::move(ring)) {}

    Ideal(Ring ring, std::vector<Polynomial> generators) : ring_(std::move(ring)) {
        generators_.reserve(generators.size());
        for (auto& g : generators) {
            if (g.is_zero()) continue;
            if (!(g.ring() == ring_))
                throw Error(ErrorCode::RingMismatch, "generator from a different ring");
            generators_.push_back(std::move(g));
        }
    }

    const Ring& ring() const { return ring_; }
    const std::vector<Polynomial>& generators() const { return generators_; }
    bool is_zero() const { return generators_.empty(); }

private:
    Ring ring_;
    std::vector<Polynomial> generators_;
};

struct GroebnerBasis {
    Ideal ideal;
    MonomialOrder order;
    std::vector<Polynomial> basis;
    bool reduced = false;
};

struct BuchbergerOptions {
    std::uint64_t step_limit = 0; // cap on S-pair reductions; 0 = unlimited
};

/// S(f,g) = (lcm/lt(f))*f - (lcm/lt(g))*g; the leading terms cancel.
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& order);

/// Remainder of p under multivariate division by G: no monomial of the
/// result is divisible by any leading monomial of G, and p - result lies
/// in (G). Deterministic: the largest reducible monomial is always
/// reduced by the first matching divisor in G's list order.
Polynomial normal_form(const Polynomial& p, const std::vector<Polynomial>& G,
                       const MonomialOrder& order);

GroebnerBasis buchberger(const Ideal& ideal, const MonomialOrder& order,
                         const BuchbergerOptions& options = {});

/// The unique reduced basis of the same ideal: minimal, tail-reduced,
/// canonicalized, sorted ascending by leading monomial.
GroebnerBasis reduce_basis(const GroebnerBasis& gb);

GroebnerBasis reduced_groebner_basis(const Ideal& ideal, const MonomialOrder& order,
                                     const BuchbergerOptions& options = {});

enum class EliminationStrategy {
    BlockDegRevLex, // DegRevLex inside each of the two blocks, leading block first
    PureLex,        // plain Lex over the whole ring, kept as a cross-check fallback
};

/// I intersected with Q[trailing variables], re-expressed in the subring
/// of the variables after the first k.
Ideal elimination_ideal(const Ideal& ideal, std::size_t k,
                        EliminationStrategy strategy = EliminationStrategy::BlockDegRevLex,
                        const BuchbergerOptions& options = {});

/// Same computation, also returning the full reduced basis under the
/// elimination order (the dualization CLI shows it).
struct EliminationResult {
    GroebnerBasis full;
    Ideal eliminated;
};
EliminationResult eliminate_with_basis(const Ideal& ideal, std::size_t k,
                                       EliminationStrategy strategy = EliminationStrategy::BlockDegRevLex,
                                       const BuchbergerOptions& options = {});

bool ideal_membership(const Polynomial& p, const Ideal& ideal,
                      const BuchbergerOptions& options = {});

/// Reduced-basis identity under the fixed canonical order (DegRevLex).
bool ideal_equal(const Ideal& a, const Ideal& b, const BuchbergerOptions& options = {});

/// J subset of I, by normal forms of J's generators.
bool ideal_contains(const Ideal& outer, const Ideal& inner,
                    const BuchbergerOptions& options = {});

/// p in the radical of I, by the Rabinowitsch trick: 1 in I + (1 - t*p)
/// over the ring extended by a fresh variable.
bool radical_membership(const Polynomial& p, const Ideal& ideal,
                        const BuchbergerOptions& options = {});

/// J subset of radical(I), generator-wise radical membership.
bool radical_contains(const Ideal& of, const Ideal& contained,
                      const BuchbergerOptions& options = {});

} // namespace dualis
