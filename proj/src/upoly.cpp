#include "isoder/upoly.hpp"

#include <sstream>
#include <stdexcept>

namespace isoder {

void UPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

UPoly::UPoly(const Rat& constant) {
    if (constant != 0) coeffs_.push_back(constant);
}

UPoly::UPoly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UPoly::UPoly(std::initializer_list<long> int_coeffs) {
    coeffs_.reserve(int_coeffs.size());
    for (long c : int_coeffs) coeffs_.emplace_back(c);
    trim();
}

UPoly UPoly::x() { return UPoly({0, 1}); }

UPoly UPoly::monomial(const Rat& c, int k) {
    if (k < 0) throw std::invalid_argument("monomial with negative degree");
    if (c == 0) return UPoly();
    UPoly p;
    p.coeffs_.assign(static_cast<size_t>(k) + 1, Rat(0));
    p.coeffs_.back() = c;
    return p;
}

Rat UPoly::coeff(int k) const {
    if (k < 0 || k > degree()) return Rat(0);
    return coeffs_[static_cast<size_t>(k)];
}

const Rat& UPoly::lc() const {
    if (is_zero()) throw std::logic_error("leading coefficient of zero polynomial");
    return coeffs_.back();
}

UPoly UPoly::operator-() const {
    UPoly r(*this);
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

UPoly& UPoly::operator+=(const UPoly& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rat(0));
    for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

UPoly& UPoly::operator-=(const UPoly& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rat(0));
    for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return UPoly();
    std::vector<Rat> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rat(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (size_t j = 0; j < b.coeffs_.size(); ++j)
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return UPoly(std::move(out));
}

UPoly& UPoly::operator*=(const UPoly& o) {
    *this = *this * o;
    return *this;
}

UPoly& UPoly::operator*=(const Rat& s) {
    if (s == 0) { coeffs_.clear(); return *this; }
    for (auto& c : coeffs_) c *= s;
    return *this;
}

UPoly& UPoly::operator/=(const Rat& s) {
    if (s == 0) throw std::invalid_argument("division by zero scalar");
    for (auto& c : coeffs_) c /= s;
    return *this;
}

UPoly UPoly::pow(long e) const {
    if (e < 0) throw std::invalid_argument("negative exponent");
    UPoly acc(Rat(1)), base(*this);
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

Rat UPoly::eval(const Rat& x0) const {
    Rat acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x0 + *it;
    return acc;
}

UPoly UPoly::derivative() const {
    if (degree() < 1) return UPoly();
    std::vector<Rat> out(coeffs_.size() - 1);
    for (size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = coeffs_[i] * Rat(static_cast<long>(i));
    return UPoly(std::move(out));
}

UPoly UPoly::antiderivative() const {
    if (is_zero()) return UPoly();
    std::vector<Rat> out(coeffs_.size() + 1, Rat(0));
    for (size_t i = 0; i < coeffs_.size(); ++i)
        out[i + 1] = coeffs_[i] / Rat(static_cast<long>(i + 1));
    return UPoly(std::move(out));
}

UPoly UPoly::compose(const UPoly& inner) const {
    UPoly acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * inner;
        acc += UPoly(*it);
    }
    return acc;
}

std::pair<UPoly, UPoly> UPoly::divmod(const UPoly& num, const UPoly& den) {
    if (den.is_zero()) throw std::invalid_argument("polynomial division by zero");
    UPoly rem(num);
    if (num.degree() < den.degree()) return {UPoly(), rem};
    std::vector<Rat> q(static_cast<size_t>(num.degree() - den.degree()) + 1, Rat(0));
    const Rat& dlc = den.lc();
    while (!rem.is_zero() && rem.degree() >= den.degree()) {
        int k = rem.degree() - den.degree();
        Rat c = rem.lc() / dlc;
        q[static_cast<size_t>(k)] = c;
        rem -= den * monomial(c, k);
    }
    return {UPoly(std::move(q)), rem};
}

std::optional<UPoly> UPoly::exact_div(const UPoly& num, const UPoly& den) {
    auto [q, r] = divmod(num, den);
    if (!r.is_zero()) return std::nullopt;
    return q;
}

UPoly UPoly::gcd(UPoly a, UPoly b) {
    while (!b.is_zero()) {
        UPoly r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

UPoly UPoly::monic() const {
    if (is_zero()) return UPoly();
    return *this / lc();
}

std::string UPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const Rat c = coeff(k);
        if (c == 0) continue;
        if (c < 0)
            out << '-';
        else if (!first)
            out << '+';
        first = false;
        Rat mag = abs(c);
        if (k == 0) {
            out << rat_to_string(mag);
        } else {
            if (mag != 1) out << rat_to_string(mag) << '*';
            out << var;
            if (k > 1) out << '^' << k;
        }
    }
    return out.str();
}

} // namespace isoder
