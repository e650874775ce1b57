#ifndef ISODER_DERIVATION_HPP
#define ISODER_DERIVATION_HPP

#include "isoder/bpoly.hpp"
#include "isoder/upoly.hpp"

#include <optional>
#include <string>
#include <utility>

namespace isoder {

/// General derivation D = a*d/dx + b*d/dy of Q[x,y], determined by
/// D(x) = a and D(y) = b.
struct Derivation {
    BPoly a, b;

    bool operator==(const Derivation& o) const { return a == o.a && b == o.b; }
};

/// The special form D = d/dx + (a(x)*y + b(x))*d/dy.
struct ShamsuddinDerivation {
    UPoly a, b;

    Derivation to_derivation() const {
        return {BPoly(Rat(1)), BPoly::from_x(a) * BPoly::y() + BPoly::from_x(b)};
    }
};

/// D applied to f: a*partial_x(f) + b*partial_y(f).
BPoly apply(const Derivation& D, const BPoly& f);

/// Solutions h of h' = a*h + b in Q[x].
///   - a != 0: at most one polynomial solution (the homogeneous equation
///     h' = a*h forces h = 0 by comparing degrees), hence Unique or None.
///   - a == 0: antiderivatives, unique up to the constant of integration,
///     reported as Family with constant term 0.
struct OdeSolution {
    enum class Kind { Unique, Family, None } kind;
    std::optional<UPoly> h; // present for Unique and Family

    static OdeSolution unique(UPoly sol) { return {Kind::Unique, std::move(sol)}; }
    static OdeSolution family(UPoly base) { return {Kind::Family, std::move(base)}; }
    static OdeSolution none() { return {Kind::None, std::nullopt}; }
};

OdeSolution solve_sham_ode(const UPoly& a, const UPoly& b);

/// Simplicity of the Shamsuddin derivation: false when a = 0; otherwise
/// simple exactly when h' = a*h + b has no polynomial solution.
bool is_simple_shamsuddin(const UPoly& a, const UPoly& b);

/// True iff the principal ideal (f) is stable under D, i.e. f | D(f).
/// The quotient variant also hands back the cofactor.
bool stabilizes_ideal(const Derivation& D, const BPoly& f);
std::optional<BPoly> stable_ideal_quotient(const Derivation& D, const BPoly& f);

/// True iff both coefficients of D vanish at the point.
bool is_singular_at(const Derivation& D, const Rat& x0, const Rat& y0);

/// Outcome of the exact singular-locus certification over the algebraic
/// closure. Exactly one of the three verdicts holds:
///   - CommonFactor: a and b share a nonconstant polynomial factor, whose
///     entire zero set consists of singular points;
///   - SingularPointFound: an isolated common zero exists; rational_point is
///     set when one with rational coordinates was found, otherwise `witness`
///     pins the point down by minimal polynomials;
///   - NoSingularPoints: a and b have no common zero anywhere over the
///     closure (completeness comes from the resultant lying in the ideal
///     (a, b), so every common zero's x-coordinate is a root of it).
struct SingularCertificate {
    enum class Verdict { NoSingularPoints, SingularPointFound, CommonFactor } verdict;
    std::optional<BPoly> common_factor;
    std::optional<std::pair<Rat, Rat>> rational_point;
    std::string witness; // human-readable description of the point/locus
    std::string detail;  // decision-path notes (resultant, candidates tried)
};

SingularCertificate certify_no_singular_points(const Derivation& D);

} // namespace isoder

#endif
