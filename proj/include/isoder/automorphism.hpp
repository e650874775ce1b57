#ifndef ISODER_AUTOMORPHISM_HPP
#define ISODER_AUTOMORPHISM_HPP

#include "isoder/bpoly.hpp"
#include "isoder/derivation.hpp"
#include "isoder/upoly.hpp"

#include <array>
#include <variant>
#include <vector>

namespace isoder {

/// Generators of the plane polynomial automorphism group.
///
/// Affine:  (x, y) -> (m11*x + m12*y + v1, m21*x + m22*y + v2), det M != 0.
/// ElemY:   (x, y) -> (x, p(x) + beta*y), beta != 0  (triangular, moves y).
/// ElemX:   (x, y) -> (q(y) + alpha*x, y), alpha != 0 (triangular, moves x).
struct Affine {
    std::array<Rat, 4> m; // row-major m11 m12 m21 m22
    std::array<Rat, 2> v;
    bool operator==(const Affine&) const = default;
};
struct ElemY {
    UPoly p; // polynomial in x
    Rat beta;
    bool operator==(const ElemY&) const = default;
};
struct ElemX {
    UPoly q; // polynomial in y
    Rat alpha;
    bool operator==(const ElemX&) const = default;
};
using Letter = std::variant<Affine, ElemY, ElemX>;

/// An automorphism as a word of generators. The word [s1, s2, ..., sk]
/// denotes the composite s1 o s2 o ... o sk (s1 applied last). The letters
/// are validated on construction: singular affine parts and zero scale
/// factors are rejected.
class Automorphism {
public:
    Automorphism() = default; // identity (empty word)
    explicit Automorphism(std::vector<Letter> word);

    const std::vector<Letter>& word() const { return word_; }
    bool is_identity_word() const { return word_.empty(); }

    static Automorphism identity() { return Automorphism(); }

private:
    std::vector<Letter> word_;
};

/// A polynomial endomorphism in expanded form: x -> f, y -> g.
struct RawEndo {
    BPoly f, g;
    bool operator==(const RawEndo&) const = default;
};

/// Expand a word into its action on the coordinates.
RawEndo expand(const Automorphism& rho);

/// rho applied to a polynomial: h(f, g) where (f, g) = expand(rho).
BPoly apply(const Automorphism& rho, const BPoly& h);
BPoly apply(const RawEndo& e, const BPoly& h);

/// Composition rho1 o rho2 with rho1 outermost, as endomorphisms of the
/// coordinate algebra Q[x,y]: (rho1 o rho2)(h) = rho1(rho2(h)), so
/// apply(compose(r1, r2), h) == apply(r1, apply(r2, h)) and on expanded
/// forms compose_raw(e1, e2) = (apply(e1, e2.f), apply(e1, e2.g)). On words
/// this is concatenation.
Automorphism compose(const Automorphism& rho1, const Automorphism& rho2);
RawEndo compose_raw(const RawEndo& e1, const RawEndo& e2);

/// Inverse, using the closed-form inverses of the generators:
///   Affine(M, v)^-1   = Affine(M^-1, -M^-1 v)
///   ElemY(p, beta)^-1 = ElemY(-p/beta, 1/beta)
///   ElemX(q, alpha)^-1 = ElemX(-q/alpha, 1/alpha)
Automorphism invert(const Automorphism& rho);

/// Determinant of the Jacobian matrix of the expanded map. For a genuine
/// automorphism this is a nonzero constant; returned as a BPoly so callers
/// can check that themselves.
BPoly jacobian_det(const RawEndo& e);

/// Whether rho commutes with D as an operator on Q[x,y]: it is enough to
/// check the two generators, rho(D(x)) = D(rho(x)) and likewise for y,
/// i.e. apply(rho, a) == apply(D, f) and apply(rho, b) == apply(D, g).
/// (Both sides are compositions of a derivation with a ring homomorphism,
/// hence determined by their values on x and y.)
bool commutes(const RawEndo& e, const Derivation& D);
bool commutes(const Automorphism& rho, const Derivation& D);

/// Conjugate derivation rho D rho^-1, again determined by its values on the
/// coordinates: (rho D rho^-1)(z) = rho(D(rho^-1(z))) for z = x, y.
Derivation conjugate(const Automorphism& rho, const Derivation& D);

/// Whether the map fixes the given rational point, i.e. f(p) = p1 and
/// g(p) = p2 (equivalently, the maximal ideal (x - p1, y - p2) is fixed).
bool fixes_point(const RawEndo& e, const Rat& x0, const Rat& y0);
bool fixes_point(const Automorphism& rho, const Rat& x0, const Rat& y0);

} // namespace isoder

#endif
