#pragma once

#include <optional>
#include <span>
#include <vector>

#include "dualis/groebner.hpp"

namespace dualis {

/// The extended ring Q[x0..xn, lambda1..lambdam, u0..un] together with
/// the m+n+1 generators: the input polynomials followed by
/// u_i - sum_j lambda_j * dp_j/dx_i for i = 0..n.
struct DualizationSystem {
    Ring base_ring;
    Ring extended_ring;
    Ideal system;
    std::vector<std::vector<Polynomial>> jacobian; // m x (n+1), entries in base_ring
    std::size_t generator_count;                   // m
    std::size_t variable_count;                    // n+1
};

DualizationSystem build_system(const Ideal& ideal);

/// Every stage of the dualization pipeline: the system (ds), its reduced
/// basis under the elimination order, the elimination ideal in the
/// u-subring, and the dual ideal after the u -> x rename.
struct DualComputation {
    DualizationSystem system;
    GroebnerBasis elimination_basis;
    Ideal eliminated;
    Ideal dual;
    bool degenerate;
};
DualComputation dualize_full(const Ideal& ideal,
                             EliminationStrategy strategy = EliminationStrategy::BlockDegRevLex,
                             const BuchbergerOptions& options = {});

Ideal dual(const Ideal& ideal, EliminationStrategy strategy = EliminationStrategy::BlockDegRevLex,
           const BuchbergerOptions& options = {});

/// dual() plus a degeneracy flag: a zero elimination ideal is returned
/// as the zero ideal rather than an error.
struct DualResult {
    Ideal ideal;
    bool degenerate;
};
DualResult dual_with_info(const Ideal& ideal,
                          EliminationStrategy strategy = EliminationStrategy::BlockDegRevLex,
                          const BuchbergerOptions& options = {});

struct DoubleDualReport {
    Ideal dual;
    Ideal bidual;
    bool equal;
};
DoubleDualReport double_dual_check(const Ideal& ideal,
                                   EliminationStrategy strategy = EliminationStrategy::BlockDegRevLex,
                                   const BuchbergerOptions& options = {});

/// Inclusion tests of the main diagram. The bent-arrow inclusion
/// sqrt(D(sqrt I)) in sqrt(D(I)) is evaluated through the equivalent
/// generator-level test D(sqrt I) in sqrt(D(I)); it is reported as an
/// observation, never asserted.
struct DiagramReport {
    Ideal dual_of_ideal;                             // D(I)
    std::optional<Ideal> dual_of_radical;            // D(candidate)
    bool dual_in_its_radical;                        // D(I) in sqrt(D(I))
    std::optional<bool> radical_dual_in_its_radical; // D(cand) in sqrt(D(cand))
    std::optional<bool> bent_arrow;                  // sqrt(D(cand)) in sqrt(D(I)), empirical
};
DiagramReport check_diagram(const Ideal& ideal, const std::optional<Ideal>& radical_candidate,
                            EliminationStrategy strategy = EliminationStrategy::BlockDegRevLex,
                            const BuchbergerOptions& options = {});

/// Fixed deterministic multiplier set {e1..em, (1,..,1), (1,2,..,m)}.
std::vector<std::vector<Rational>> oracle_lambda_vectors(std::size_t m);

/// Brute-force dual check via the Gauss map: every sample point of V(I),
/// pushed to u = J^t(x) * lambda for each fixed lambda vector, must be a
/// zero of every generator of D (u = 0 is skipped).
bool tangent_sample_oracle(const Ideal& ideal, const Ideal& dual_ideal,
                           const std::vector<std::vector<Rational>>& samples);

} // namespace dualis
