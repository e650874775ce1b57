#ifndef ISODER_UPOLY_HPP
#define ISODER_UPOLY_HPP

#include "isoder/rational.hpp"

#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace isoder {

/// Dense univariate polynomial over Rat, coefficients stored lowest degree
/// first. The zero polynomial is the empty coefficient vector and reports
/// degree() == -1; a nonzero polynomial always has a nonzero back().
class UPoly {
public:
    UPoly() = default;
    explicit UPoly(const Rat& constant);
    explicit UPoly(std::vector<Rat> coeffs);           // trims trailing zeros
    UPoly(std::initializer_list<long> int_coeffs);     // test/readability helper

    static UPoly x();                                  // the variable itself
    static UPoly constant(const Rat& c) { return UPoly(c); }
    static UPoly monomial(const Rat& c, int k);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return degree() <= 0; }
    Rat coeff(int k) const;                            // 0 outside the support
    const Rat& lc() const;                             // leading coefficient; poly must be nonzero
    const std::vector<Rat>& coeffs() const { return coeffs_; }

    UPoly operator-() const;
    UPoly& operator+=(const UPoly& o);
    UPoly& operator-=(const UPoly& o);
    UPoly& operator*=(const UPoly& o);
    UPoly& operator*=(const Rat& s);
    UPoly& operator/=(const Rat& s);                   // s must be nonzero

    friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
    friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
    friend UPoly operator*(const UPoly& a, const UPoly& b);
    friend UPoly operator*(UPoly a, const Rat& s) { return a *= s; }
    friend UPoly operator*(const Rat& s, UPoly a) { return a *= s; }
    friend UPoly operator/(UPoly a, const Rat& s) { return a /= s; }

    bool operator==(const UPoly& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const UPoly& o) const { return !(*this == o); }

    UPoly pow(long e) const;                           // e < 0 rejected

    Rat eval(const Rat& x0) const;                     // Horner
    UPoly derivative() const;
    UPoly antiderivative() const;                      // constant of integration 0
    UPoly compose(const UPoly& inner) const;           // this(inner)

    /// Quotient/remainder over the rationals; divisor must be nonzero.
    static std::pair<UPoly, UPoly> divmod(const UPoly& num, const UPoly& den);
    /// Quotient when den divides num exactly, nullopt otherwise.
    static std::optional<UPoly> exact_div(const UPoly& num, const UPoly& den);

    /// Monic gcd; gcd(0,0) = 0.
    static UPoly gcd(UPoly a, UPoly b);

    UPoly monic() const;                               // zero stays zero

    std::string to_string(const std::string& var = "x") const;

private:
    void trim();
    std::vector<Rat> coeffs_;
};

} // namespace isoder

#endif
