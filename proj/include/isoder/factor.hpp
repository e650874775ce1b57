#ifndef ISODER_FACTOR_HPP
#define ISODER_FACTOR_HPP

#include "isoder/upoly.hpp"

#include <utility>
#include <vector>

namespace isoder {

/// Complete factorization over the rationals: f = unit * prod factors[i]^mult.
/// Factors are monic and irreducible over Q, sorted by degree and then by
/// coefficients (deterministic order).
struct UFactorization {
    Rat unit;
    std::vector<std::pair<UPoly, int>> factors;

    UPoly reassemble() const;       // multiplies everything back out
};

/// All rational roots of f (f nonzero), ascending, each listed once.
/// Candidate enumeration follows the rational root theorem on the primitive
/// integer form of f.
std::vector<Rat> rational_roots(const UPoly& f);

/// Monic product of the distinct irreducible factors of f (f nonzero).
UPoly squarefree_part(const UPoly& f);

/// Exact factorization into rational irreducibles (f nonzero). Squarefree
/// split by Yun's algorithm, then Berlekamp factorization modulo a small
/// prime lifted by Hensel's lemma and recombined against the Mignotte bound.
UFactorization factor_upoly(const UPoly& f);

/// True iff f is irreducible over the rationals (degree >= 1 and no proper
/// factor; constants and the zero polynomial are not irreducible).
bool is_irreducible_q(const UPoly& f);

} // namespace isoder

#endif
