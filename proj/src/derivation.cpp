#include "isoder/derivation.hpp"

#include "isoder/factor.hpp"
#include "isoder/linalg.hpp"
#include "isoder/numberfield.hpp"

#include <sstream>
#include <stdexcept>
#include <vector>

namespace isoder {

BPoly apply(const Derivation& D, const BPoly& f) {
    return D.a * f.partial_x() + D.b * f.partial_y();
}

OdeSolution solve_sham_ode(const UPoly& a, const UPoly& b) {
    if (a.is_zero()) return OdeSolution::family(b.antiderivative()); // h' = b, family base + c
    if (b.is_zero()) return OdeSolution::unique(UPoly()); // only h = 0 (deg comparison kills h != 0)

    // deg(a*h) = deg a + deg h > deg h - 1 = deg h', so a nonzero solution
    // must have deg h = deg b - deg a; solve the linear system on its
    // coefficients. deg b < deg a leaves only h = 0, which needs b = 0.
    const int n = b.degree() - a.degree();
    if (n < 0) return OdeSolution::none();

    // Unknowns h_0..h_n; equations match coefficients of x^k in h' - a*h = b
    // for k = 0..deg b (higher coefficients of h' - a*h vanish identically
    // only if the system says so; include rows up to max degree to be safe).
    const int rows = std::max(b.degree(), n + a.degree()) + 1;
    std::vector<std::vector<Rat>> A(static_cast<size_t>(rows), std::vector<Rat>(static_cast<size_t>(n) + 1, Rat(0)));
    std::vector<Rat> rhs(static_cast<size_t>(rows), Rat(0));
    for (int j = 0; j <= n; ++j) {
        if (j >= 1) A[static_cast<size_t>(j - 1)][static_cast<size_t>(j)] += Rat(j); // from h'
        for (int i = 0; i <= a.degree(); ++i)                                        // from -a*h
            A[static_cast<size_t>(i + j)][static_cast<size_t>(j)] -= a.coeff(i);
    }
    for (int k = 0; k <= b.degree(); ++k) rhs[static_cast<size_t>(k)] = b.coeff(k);

    AffineSolutionSet sol = solve_linear(std::move(A), std::move(rhs));
    if (!sol.consistent) return OdeSolution::none();
    if (!sol.nullspace.empty())
        throw std::logic_error("solve_sham_ode: unexpected solution family for a != 0");
    return OdeSolution::unique(UPoly(std::move(sol.particular)));
}

bool is_simple_shamsuddin(const UPoly& a, const UPoly& b) {
    if (a.is_zero()) return false;
    return solve_sham_ode(a, b).kind == OdeSolution::Kind::None;
}

std::optional<BPoly> stable_ideal_quotient(const Derivation& D, const BPoly& f) {
    if (f.is_zero()) throw std::invalid_argument("stable_ideal_quotient: f must be nonzero");
    return divides(f, apply(D, f));
}

bool stabilizes_ideal(const Derivation& D, const BPoly& f) {
    return stable_ideal_quotient(D, f).has_value();
}

bool is_singular_at(const Derivation& D, const Rat& x0, const Rat& y0) {
    return D.a.eval(x0, y0) == Rat(0) && D.b.eval(x0, y0) == Rat(0);
}

namespace {

std::string point_desc(const Rat& x0, const Rat& y0) {
    return "(" + rat_to_string(x0) + ", " + rat_to_string(y0) + ")";
}

/// Search for a common zero with x = x0 by taking the gcd of the two
/// specializations in Q[y]. Returns a witness description if found.
std::optional<SingularCertificate> probe_rational_x(const Derivation& D, const Rat& x0) {
    const UPoly ay = D.a.eval_x(x0);
    const UPoly by = D.b.eval_x(x0);
    // gcd with the convention gcd(0, p) = monic p; both zero means the whole
    // line x = x0 is singular, which the common-factor stage already ruled
    // out for gcd-stripped inputs -- but guard anyway.
    if (ay.is_zero() && by.is_zero()) {
        SingularCertificate c;
        c.verdict = SingularCertificate::Verdict::SingularPointFound;
        c.rational_point = {x0, Rat(0)};
        c.witness = "every point on the line x = " + rat_to_string(x0) +
                    " is singular; e.g. " + point_desc(x0, Rat(0));
        return c;
    }
    const UPoly g = ay.is_zero() ? by.monic() : by.is_zero() ? ay.monic() : UPoly::gcd(ay, by);
    if (g.degree() < 1) return std::nullopt;
    // Rational root of g gives a fully rational singular point.
    for (const Rat& y0 : rational_roots(g)) {
        SingularCertificate c;
        c.verdict = SingularCertificate::Verdict::SingularPointFound;
        c.rational_point = {x0, y0};
        c.witness = "singular point " + point_desc(x0, y0);
        return c;
    }
    // Irrational y over a rational x: certify via the minimal polynomial.
    SingularCertificate c;
    c.verdict = SingularCertificate::Verdict::SingularPointFound;
    c.witness = "singular point with x = " + rat_to_string(x0) +
                " and y a root of " + g.to_string("y");
    return c;
}

/// Search for a common zero with x a root of the irreducible m(x), deg >= 2,
/// by computing the gcd of the specializations in (Q[t]/m)[y].
std::optional<SingularCertificate> probe_algebraic_x(const Derivation& D, const UPoly& m) {
    NumberField K(m);
    const NFPoly ay = reduce_mod_field(D.a, K);
    const NFPoly by = reduce_mod_field(D.b, K);
    const bool az = nf_degree(ay) < 0;
    const bool bz = nf_degree(by) < 0;
    if (az && bz) {
        SingularCertificate c;
        c.verdict = SingularCertificate::Verdict::SingularPointFound;
        c.witness = "every point with x a root of " + m.to_string("x") + " is singular";
        return c;
    }
    const NFPoly g = az ? by : bz ? ay : nf_gcd(ay, by);
    if (nf_degree(g) < 1) return std::nullopt;
    SingularCertificate c;
    c.verdict = SingularCertificate::Verdict::SingularPointFound;
    c.witness = "singular point with x a root of " + m.to_string("x") +
                " and y a root of " + nf_poly_to_string(g, "x");
    return c;
}

} // namespace

SingularCertificate certify_no_singular_points(const Derivation& D) {
    SingularCertificate cert;
    std::ostringstream detail;

    if (D.a.is_zero() && D.b.is_zero())
        throw std::invalid_argument("certify_no_singular_points: the zero derivation is singular everywhere");

    // Stage 1: a nonconstant common factor means a whole curve of singular
    // points; strip it so the remaining pair has isolated common zeros.
    BPoly a = D.a, b = D.b;
    const BPoly g = a.is_zero() ? b : b.is_zero() ? a : gcd_bpoly(a, b);
    if (g.degree_x() >= 1 || g.degree_y() >= 1) {
        cert.verdict = SingularCertificate::Verdict::CommonFactor;
        cert.common_factor = g;
        cert.witness = "common factor " + g.to_string() + "; its zero set is singular";
        cert.detail = "gcd(a, b) = " + g.to_string();
        return cert;
    }
    if (a.is_zero() || b.is_zero()) {
        // One coefficient is identically zero and the other has a constant
        // gcd with it only if it is a nonzero constant itself (gcd(0, p) = p
        // up to normalization), so no zeros at all.
        cert.verdict = SingularCertificate::Verdict::NoSingularPoints;
        cert.witness = "one coefficient is zero, the other a nonzero constant";
        cert.detail = cert.witness;
        return cert;
    }
    detail << "gcd(a, b) constant";

    const int da = a.degree_y();
    const int db = b.degree_y();
    if (da == 0 && db == 0) {
        // Both are univariate in x; constant gcd decides it outright.
        cert.verdict = SingularCertificate::Verdict::NoSingularPoints;
        cert.witness = "a and b depend on x alone and are coprime in Q[x]";
        cert.detail = detail.str() + "; both have y-degree 0";
        return cert;
    }

    // Stage 2: the resultant r(x) = Res_y(a, b) lies in the ideal (a, b), so
    // the x-coordinate of any common zero is a root of r. A nonzero constant
    // r therefore certifies emptiness.
    const UPoly r = resultant_y(a, b);
    if (r.is_zero())
        throw std::logic_error("certify_no_singular_points: zero resultant after gcd strip");
    detail << "; Res_y(a, b) = " << r.to_string("x");
    if (r.degree() == 0) {
        cert.verdict = SingularCertificate::Verdict::NoSingularPoints;
        cert.witness = "Res_y(a, b) is a nonzero constant";
        cert.detail = detail.str();
        return cert;
    }

    // Stage 3: try every root of r, rational ones directly and irrational
    // ones through the number field defined by each irreducible factor.
    const UPoly rsf = squarefree_part(r);
    const UFactorization fac = factor_upoly(rsf);
    for (const auto& [m, mult] : fac.factors) {
        (void)mult;
        if (m.degree() == 1) {
            const Rat x0 = -m.coeff(0) / m.coeff(1);
            detail << "; x = " << rat_to_string(x0) << " probed";
            if (auto hit = probe_rational_x(D, x0)) {
                hit->detail = detail.str();
                return *hit;
            }
        } else {
            detail << "; factor " << m.to_string("x") << " probed";
            if (auto hit = probe_algebraic_x(D, m)) {
                hit->detail = detail.str();
                return *hit;
            }
        }
    }

    // Every candidate x failed to extend to a common zero: the specialized
    // gcds were constant over each residue field, so nothing was missed.
    cert.verdict = SingularCertificate::Verdict::NoSingularPoints;
    cert.witness = "no root of Res_y(a, b) extends to a common zero";
    cert.detail = detail.str();
    return cert;
}

} // namespace isoder
