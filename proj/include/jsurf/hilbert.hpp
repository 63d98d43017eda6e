#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace jsurf {

/// Homogeneous integer linear system A x = 0 (rows = equations).
struct DiophantineSystem {
    std::size_t cols = 0;
    std::vector<std::vector<long>> rows;

    /// Whitespace-separated integer rows, one equation per line;
    /// '#' comments; all rows must have equal length.
    static DiophantineSystem parse(const std::string& text);

    std::vector<long> apply(const std::vector<long>& x) const;
    bool solves(const std::vector<long>& x) const;
};

struct HilbertLimits {
    std::size_t max_frontier = 2000000;
    std::size_t max_solutions = 200000;
};

/// Minimal non-negative integer solutions of A x = 0 (the Hilbert basis
/// of the solution cone), lexicographically ordered. Completion-style
/// breadth-first search from the unit vectors with dominance pruning
/// (Contejean-Devie). Throws ResourceError-style runtime_error naming
/// the limit on blowup.
std::vector<std::vector<long>> hilbert_basis(const DiophantineSystem& sys,
                                             const HilbertLimits& limits = {});

struct BasisCheck {
    bool all_solve = true;
    bool minimal = true;
    bool complete = true;
    std::vector<std::vector<long>> non_solutions;
    std::vector<std::vector<long>> non_minimal;
    std::vector<std::vector<long>> missed;  // solutions <= bound not generated
    bool ok() const { return all_solve && minimal && complete; }
};

/// Brute-force check of a claimed basis against exhaustive enumeration
/// of solutions with coordinate sum <= bound.
BasisCheck verify_basis(const DiophantineSystem& sys,
                        const std::vector<std::vector<long>>& basis, long bound);

}  // namespace jsurf
