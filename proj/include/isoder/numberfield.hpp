#ifndef ISODER_NUMBERFIELD_HPP
#define ISODER_NUMBERFIELD_HPP

#include "isoder/bpoly.hpp"
#include "isoder/upoly.hpp"

#include <string>
#include <vector>

namespace isoder {

/// The simple extension Q[t]/(q) with q monic irreducible. Irreducibility is
/// checked at construction; elements hold reduced representatives of degree
/// < deg q. The only consumer is the singular-locus certifier, which needs
/// gcds of y-polynomials whose coefficients live here.
class NumberField {
public:
    explicit NumberField(const UPoly& q); // normalized to monic; must be irreducible
    const UPoly& modulus() const { return q_; }
    int degree() const { return q_.degree(); }

private:
    UPoly q_;
};

class NFElem {
public:
    NFElem(const NumberField& field, UPoly rep); // reduces rep mod the modulus
    static NFElem zero(const NumberField& field) { return NFElem(field, UPoly()); }
    static NFElem one(const NumberField& field) { return NFElem(field, UPoly(Rat(1))); }

    const UPoly& rep() const { return rep_; }
    const NumberField& field() const { return *field_; }
    bool is_zero() const { return rep_.is_zero(); }

    NFElem operator+(const NFElem& o) const;
    NFElem operator-(const NFElem& o) const;
    NFElem operator*(const NFElem& o) const;
    NFElem inverse() const; // nonzero element required
    bool operator==(const NFElem& o) const { return rep_ == o.rep_; }
    bool operator!=(const NFElem& o) const { return !(*this == o); }

private:
    const NumberField* field_;
    UPoly rep_;
};

/// Polynomial in y with NumberFieldElem coefficients, lowest degree first.
using NFPoly = std::vector<NFElem>;

/// f(theta, y): reduce each y-coefficient of f modulo the field's modulus.
NFPoly reduce_mod_field(const BPoly& f, const NumberField& field);

int nf_degree(const NFPoly& f); // -1 for zero

/// Monic gcd over the extension field (Euclid); gcd(0, 0) = 0.
NFPoly nf_gcd(NFPoly a, NFPoly b);

/// Rendering for certificates: coefficients printed as polynomials in the
/// field generator named `gen`, e.g. "(t^2-1)*y + (2*t)".
std::string nf_poly_to_string(const NFPoly& f, const std::string& gen);

} // namespace isoder

#endif
