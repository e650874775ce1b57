#ifndef ISODER_LINALG_HPP
#define ISODER_LINALG_HPP

#include "isoder/rational.hpp"

#include <vector>

namespace isoder {

/// Full solution set of A*u = rhs over the rationals.
///
/// When consistent, every solution is particular + span(nullspace). The
/// nullspace basis has one vector per free column of A; pivots are chosen
/// left to right, so trailing unknowns stay free whenever the system allows
/// it (callers rely on this to keep designated parameters free).
struct AffineSolutionSet {
    bool consistent = false;
    std::vector<Rat> particular;               // free unknowns set to 0
    std::vector<std::vector<Rat>> nullspace;   // one basis vector per free unknown

    int dimension() const {
        return consistent ? static_cast<int>(nullspace.size()) : -1;
    }
};

/// Exact Gauss-Jordan elimination. A is row-major; every row must have the
/// same width, and rhs must match the row count.
AffineSolutionSet solve_linear(std::vector<std::vector<Rat>> A, std::vector<Rat> rhs);

} // namespace isoder

#endif
