#ifndef ISODER_ISOTROPY_HPP
#define ISODER_ISOTROPY_HPP

#include "isoder/automorphism.hpp"
#include "isoder/derivation.hpp"
#include "isoder/linalg.hpp"
#include "isoder/upoly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace isoder {

/// The families that can arise as the isotropy group Aut(D) of a Shamsuddin
/// derivation D = d/dx + (a(x)y + b(x))d/dy, with their defining data:
///
///   Trivial                 only the identity.
///   CaseIIIFamily{h}        x -> x,    y -> (1-d)h + d*y,          d != 0
///                           (deg a >= 1 or deg b >= 1, a,b != 0, and
///                           h' = a*h + b has the solution h).
///   ScaleOnly               x -> x,    y -> d*y,                   d != 0
///                           (deg a >= 1, b = 0).
///   ConstABFamily{a,b}      x -> x+c,  y -> b(d-1)/a + d*y,        d != 0
///                           (a, b nonzero constants; the additive part is
///                           tied to d, so the group is 2-parameter).
///   ShiftScale              x -> x+c,  y -> d*y,                   d != 0
///                           (a nonzero constant, b = 0).
///   FullDeJonquieres        x -> x+P(y), y -> d + beta*y,          beta != 0
///                           (a = b = 0, P any polynomial in y).
///   SubgroupN0{b}           x -> x+c,  y -> d + b(1-beta)x + beta*y,
///                           beta != 0 (a = 0, b a nonzero constant; partial:
///                           only the elements with rho(x) degree 0 in y).
///   ConjugatedDeJonquieres{B}  the FullDeJonquieres family conjugated by
///                           tau: y -> B(x) + y where B' = b (a = 0,
///                           deg b >= 1; tau transports D to d/dx).
enum class IsotropyKind {
    Trivial,
    CaseIIIFamily,
    ScaleOnly,
    ConstABFamily,
    ShiftScale,
    FullDeJonquieres,
    SubgroupN0,
    ConjugatedDeJonquieres,
};

std::string kind_name(IsotropyKind k);

/// Parameters selecting one element of a family. Fields not used by a
/// family are ignored; constraints (d != 0 or beta != 0, depending on the
/// family) are enforced by sample().
struct IsoParams {
    Rat c = Rat(0);
    Rat d = Rat(1);   // multiplicative in CaseIII/ScaleOnly/ConstAB/ShiftScale,
                      // additive in FullDeJonquieres/SubgroupN0/ConjugatedDJ
    Rat beta = Rat(1);
    UPoly P;          // polynomial in y (FullDeJonquieres/ConjugatedDJ)

    bool operator==(const IsoParams&) const = default;
};

struct IsotropyDescription {
    IsotropyKind kind = IsotropyKind::Trivial;
    std::optional<UPoly> h;       // CaseIIIFamily
    std::optional<Rat> const_a;   // ConstABFamily
    std::optional<Rat> const_b;   // ConstABFamily, SubgroupN0
    std::optional<UPoly> B;       // ConjugatedDeJonquieres
    bool partial = false;         // the family is a described subgroup only
    bool extension = false;       // derived beyond the source results
    std::vector<std::string> notes;
};

/// Compute the isotropy description of D = d/dx + (a(x)y + b(x))d/dy by
/// case dispatch on (a, b); see IsotropyKind for the case table.
IsotropyDescription isotropy_shamsuddin(const UPoly& a, const UPoly& b);

/// The element of the family selected by the parameters, as an expanded
/// coordinate pair. Rejects parameter tuples violating the family's
/// nonzeroness constraints.
RawEndo sample(const IsotropyDescription& desc, const IsoParams& params);

/// Pattern-match e against the family and solve for its parameters.
std::optional<IsoParams> match_params(const IsotropyDescription& desc, const RawEndo& e);
bool contains(const IsotropyDescription& desc, const RawEndo& e);

/// The group law on parameter tuples, for the composition sample(p1) o
/// sample(p2) with p1 outermost: compose_params returns the tuple p with
/// sample(p) == compose_raw(sample(p1), sample(p2)).
struct GroupLaw {
    IsotropyKind kind;
    std::string description; // human-readable parameter composition rule
};

GroupLaw group_law(const IsotropyDescription& desc);     // desc must not be Trivial
IsoParams compose_params(const IsotropyDescription& desc, const IsoParams& p1,
                         const IsoParams& p2);

/// Check, over a fixed grid of parameter pairs, that symbolic composition
/// of sampled elements equals sampling the law-composed parameters.
bool verify_group_law(const IsotropyDescription& desc);

/// All solutions (g0, d) of  g0' + b*d = a(x+c)*g0 + b(x+c)  — the linear
/// equation satisfied by the y-constant part g0 of an isotropy element
/// x -> x+c, y -> g0 + d*y. Solved directly as an exact linear system in
/// the coefficients of g0 (degree bound max(deg b - deg a, 0) for a != 0,
/// deg b + 1 for a = 0) and d, deliberately independent of solve_sham_ode.
/// Unknowns are ordered [g0_0, ..., g0_N, d], so the canonical reduced form
/// leaves d as the free parameter whenever the d-column is free.
struct Eq3Solutions {
    AffineSolutionSet sol; // over unknowns [g0_0..g0_N, d]
    int g0_len = 0;        // number of g0 coefficient unknowns (N+1)

    int dimension() const { return sol.consistent ? static_cast<int>(sol.nullspace.size()) : -1; }

    /// True iff the solution set is exactly {(g0, d) = (0, 1)}.
    bool only_identity() const;

    /// When the solution set is the line {(g0, d) = ((1-d)h, d) : d free},
    /// return h; nullopt otherwise.
    std::optional<UPoly> family_h() const;

    /// When the solution set is a line with d free, return (g0_at_d0, g0_dir)
    /// with g0(d) = g0_at_d0 + d*g0_dir; nullopt otherwise.
    std::optional<std::pair<UPoly, UPoly>> line_in_d() const;
};

Eq3Solutions solve_eq3_direct(const UPoly& a, const UPoly& b, const Rat& c);

/// Cross-check of the simplicity/isotropy equivalence for a != 0: true iff
///   is_simple_shamsuddin(a, b)  <=>  solve_eq3_direct(a, b, 0).only_identity(),
/// the two sides computed by independent solvers.
bool theorem1_crosscheck(const UPoly& a, const UPoly& b);

} // namespace isoder

#endif
