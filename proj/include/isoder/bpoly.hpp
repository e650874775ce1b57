#ifndef ISODER_BPOLY_HPP
#define ISODER_BPOLY_HPP

#include "isoder/upoly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace isoder {

/// Bivariate polynomial in Q[x][y]: a vector of univariate x-coefficients
/// indexed by the power of y, lowest y-power first. Zero is the empty vector;
/// a nonzero polynomial has a nonzero back(). This y-recursive layout matches
/// how the rest of the library consumes these values (substitution, partial
/// derivatives, and the y-resultant all walk y-coefficients).
class BPoly {
public:
    BPoly() = default;
    explicit BPoly(const Rat& constant);
    explicit BPoly(std::vector<UPoly> y_coeffs);       // trims trailing zeros

    static BPoly x() { return from_x(UPoly::x()); }
    static BPoly y();
    static BPoly from_x(UPoly p);                      // embed p(x)
    static BPoly from_y(const UPoly& p);               // p read as a polynomial in y
    static BPoly monomial(const Rat& c, int i, int j); // c * x^i * y^j

    int degree_y() const { return static_cast<int>(yc_.size()) - 1; }
    int degree_x() const;                              // -1 for zero
    bool is_zero() const { return yc_.empty(); }
    bool is_constant() const;
    UPoly coeff_y(int j) const;                        // zero outside the support
    const UPoly& lc_y() const;                         // leading y-coefficient; nonzero input
    const std::vector<UPoly>& y_coeffs() const { return yc_; }

    BPoly operator-() const;
    BPoly& operator+=(const BPoly& o);
    BPoly& operator-=(const BPoly& o);
    BPoly& operator*=(const BPoly& o);
    BPoly& operator*=(const Rat& s);

    friend BPoly operator+(BPoly a, const BPoly& b) { return a += b; }
    friend BPoly operator-(BPoly a, const BPoly& b) { return a -= b; }
    friend BPoly operator*(const BPoly& a, const BPoly& b);
    friend BPoly operator*(BPoly a, const Rat& s) { return a *= s; }
    friend BPoly operator*(const Rat& s, BPoly a) { return a *= s; }

    bool operator==(const BPoly& o) const { return yc_ == o.yc_; }
    bool operator!=(const BPoly& o) const { return !(*this == o); }

    BPoly pow(long e) const;                           // e < 0 rejected

    BPoly partial_x() const;
    BPoly partial_y() const;

    /// this(p, q): substitute p for x and q for y. Ring homomorphism.
    BPoly substitute(const BPoly& p, const BPoly& q) const;

    Rat eval(const Rat& x0, const Rat& y0) const;
    /// Evaluate x := x0, leaving a univariate polynomial in y.
    UPoly eval_x(const Rat& x0) const;

    /// Conversions back to one variable when the polynomial fits.
    std::optional<UPoly> as_upoly_in_x() const;        // needs degree_y <= 0
    std::optional<UPoly> as_upoly_in_y() const;        // needs every y-coefficient constant

    std::string to_string() const;

private:
    void trim();
    std::vector<UPoly> yc_;
};

/// Exact divisibility in Q[x,y]: returns the quotient q with g = f*q when f
/// divides g, nullopt otherwise. The divisor f must be nonzero.
std::optional<BPoly> divides(const BPoly& f, const BPoly& g);

/// Gcd over Q[x] of all y-coefficients of f (monic; f nonzero).
UPoly content_y(const BPoly& f);

/// f divided by content_y(f) — primitive as a polynomial in y over Q[x].
BPoly primitive_part_y(const BPoly& f);

/// Bivariate gcd, normalized so its leading y-coefficient is monic in x.
/// gcd(f, 0) = normalized f; gcd(0, 0) = 0. Computed as
/// gcd(content_y f, content_y g) * gcd of the primitive parts (primitive
/// polynomial remainder sequence).
BPoly gcd_bpoly(const BPoly& f, const BPoly& g);

/// Resultant of f and g with respect to y, an element of Q[x]. Computed with
/// the subresultant polynomial remainder sequence so intermediate
/// coefficients stay controlled. Both inputs must be nonzero; the result is
/// the zero polynomial exactly when f and g share a common factor of
/// positive y-degree. (A common factor lying in Q[x] alone does not zero the
/// resultant; callers that care must strip it first.)
UPoly resultant_y(const BPoly& f, const BPoly& g);

} // namespace isoder

#endif
