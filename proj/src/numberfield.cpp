#include "isoder/numberfield.hpp"

#include "isoder/factor.hpp"

#include <sstream>
#include <stdexcept>

namespace isoder {

NumberField::NumberField(const UPoly& q) : q_(q.monic()) {
    if (q_.degree() < 1) throw std::invalid_argument("number field modulus must be nonconstant");
    if (!is_irreducible_q(q_)) throw std::invalid_argument("number field modulus must be irreducible");
}

NFElem::NFElem(const NumberField& field, UPoly rep) : field_(&field) {
    rep_ = UPoly::divmod(rep, field.modulus()).second;
}

NFElem NFElem::operator+(const NFElem& o) const { return NFElem(*field_, rep_ + o.rep_); }
NFElem NFElem::operator-(const NFElem& o) const { return NFElem(*field_, rep_ - o.rep_); }
NFElem NFElem::operator*(const NFElem& o) const { return NFElem(*field_, rep_ * o.rep_); }

NFElem NFElem::inverse() const {
    if (is_zero()) throw std::invalid_argument("inverse of zero field element");
    // Extended Euclid in Q[t]: s*rep + t*modulus = gcd = constant.
    UPoly a = rep_, b = field_->modulus();
    UPoly sa(Rat(1)), sb;
    while (!b.is_zero()) {
        auto [q, r] = UPoly::divmod(a, b);
        UPoly ns = sa - q * sb;
        a = std::exchange(b, r);
        sa = std::exchange(sb, ns);
    }
    // a is a nonzero constant (the modulus is irreducible, rep is nonzero).
    return NFElem(*field_, sa / a.coeff(0));
}

NFPoly reduce_mod_field(const BPoly& f, const NumberField& field) {
    NFPoly out;
    out.reserve(static_cast<size_t>(f.degree_y()) + 1);
    for (int j = 0; j <= f.degree_y(); ++j) out.emplace_back(field, f.coeff_y(j));
    while (!out.empty() && out.back().is_zero()) out.pop_back();
    return out;
}

int nf_degree(const NFPoly& f) { return static_cast<int>(f.size()) - 1; }

namespace {

void nf_trim(NFPoly& f) {
    while (!f.empty() && f.back().is_zero()) f.pop_back();
}

// Remainder of a modulo b over the field (b nonzero).
NFPoly nf_rem(NFPoly a, const NFPoly& b) {
    const int db = nf_degree(b);
    const NFElem lb_inv = b.back().inverse();
    while (nf_degree(a) >= db) {
        const NFElem c = a.back() * lb_inv;
        const int k = nf_degree(a) - db;
        for (int j = 0; j <= db; ++j) {
            auto& t = a[static_cast<size_t>(k + j)];
            t = t - c * b[static_cast<size_t>(j)];
        }
        nf_trim(a);
        if (a.empty()) break;
    }
    return a;
}

} // namespace

NFPoly nf_gcd(NFPoly a, NFPoly b) {
    while (!b.empty()) {
        NFPoly r = nf_rem(std::move(a), b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        const NFElem inv = a.back().inverse();
        for (auto& c : a) c = c * inv;
    }
    return a;
}

std::string nf_poly_to_string(const NFPoly& f, const std::string& gen) {
    if (f.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int j = nf_degree(f); j >= 0; --j) {
        const NFElem& c = f[static_cast<size_t>(j)];
        if (c.is_zero()) continue;
        if (!first) out << " + ";
        first = false;
        out << '(' << c.rep().to_string(gen) << ')';
        if (j == 1)
            out << "*y";
        else if (j > 1)
            out << "*y^" << j;
    }
    return out.str();
}

} // namespace isoder
