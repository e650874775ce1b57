#include "isoder/bpoly.hpp"

#include <sstream>
#include <stdexcept>

namespace isoder {

void BPoly::trim() {
    while (!yc_.empty() && yc_.back().is_zero()) yc_.pop_back();
}

BPoly::BPoly(const Rat& constant) {
    if (constant != 0) yc_.push_back(UPoly(constant));
}

BPoly::BPoly(std::vector<UPoly> y_coeffs) : yc_(std::move(y_coeffs)) { trim(); }

BPoly BPoly::y() {
    return BPoly(std::vector<UPoly>{UPoly(), UPoly(Rat(1))});
}

BPoly BPoly::from_x(UPoly p) {
    if (p.is_zero()) return BPoly();
    return BPoly(std::vector<UPoly>{std::move(p)});
}

BPoly BPoly::from_y(const UPoly& p) {
    std::vector<UPoly> yc;
    yc.reserve(p.coeffs().size());
    for (const Rat& c : p.coeffs()) yc.push_back(UPoly(c));
    return BPoly(std::move(yc));
}

BPoly BPoly::monomial(const Rat& c, int i, int j) {
    if (j < 0) throw std::invalid_argument("monomial with negative degree");
    if (c == 0) return BPoly();
    std::vector<UPoly> yc(static_cast<size_t>(j) + 1);
    yc.back() = UPoly::monomial(c, i);
    return BPoly(std::move(yc));
}

int BPoly::degree_x() const {
    int d = -1;
    for (const auto& u : yc_) d = std::max(d, u.degree());
    return d;
}

bool BPoly::is_constant() const {
    return yc_.empty() || (yc_.size() == 1 && yc_[0].is_constant());
}

UPoly BPoly::coeff_y(int j) const {
    if (j < 0 || j > degree_y()) return UPoly();
    return yc_[static_cast<size_t>(j)];
}

const UPoly& BPoly::lc_y() const {
    if (is_zero()) throw std::logic_error("leading coefficient of zero polynomial");
    return yc_.back();
}

BPoly BPoly::operator-() const {
    BPoly r(*this);
    for (auto& u : r.yc_) u = -u;
    return r;
}

BPoly& BPoly::operator+=(const BPoly& o) {
    if (yc_.size() < o.yc_.size()) yc_.resize(o.yc_.size());
    for (size_t j = 0; j < o.yc_.size(); ++j) yc_[j] += o.yc_[j];
    trim();
    return *this;
}

BPoly& BPoly::operator-=(const BPoly& o) {
    if (yc_.size() < o.yc_.size()) yc_.resize(o.yc_.size());
    for (size_t j = 0; j < o.yc_.size(); ++j) yc_[j] -= o.yc_[j];
    trim();
    return *this;
}

BPoly operator*(const BPoly& a, const BPoly& b) {
    if (a.is_zero() || b.is_zero()) return BPoly();
    std::vector<UPoly> out(a.yc_.size() + b.yc_.size() - 1);
    for (size_t i = 0; i < a.yc_.size(); ++i) {
        if (a.yc_[i].is_zero()) continue;
        for (size_t j = 0; j < b.yc_.size(); ++j)
            out[i + j] += a.yc_[i] * b.yc_[j];
    }
    return BPoly(std::move(out));
}

BPoly& BPoly::operator*=(const BPoly& o) {
    *this = *this * o;
    return *this;
}

BPoly& BPoly::operator*=(const Rat& s) {
    if (s == 0) { yc_.clear(); return *this; }
    for (auto& u : yc_) u *= s;
    return *this;
}

BPoly BPoly::pow(long e) const {
    if (e < 0) throw std::invalid_argument("negative exponent");
    BPoly acc(Rat(1)), base(*this);
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

BPoly BPoly::partial_x() const {
    std::vector<UPoly> out;
    out.reserve(yc_.size());
    for (const auto& u : yc_) out.push_back(u.derivative());
    return BPoly(std::move(out));
}

BPoly BPoly::partial_y() const {
    if (degree_y() < 1) return BPoly();
    std::vector<UPoly> out(yc_.size() - 1);
    for (size_t j = 1; j < yc_.size(); ++j)
        out[j - 1] = yc_[j] * Rat(static_cast<long>(j));
    return BPoly(std::move(out));
}

namespace {

// u(p) for a univariate u, evaluated in the bivariate ring.
BPoly compose_upoly(const UPoly& u, const BPoly& p) {
    BPoly acc;
    const auto& cs = u.coeffs();
    for (auto it = cs.rbegin(); it != cs.rend(); ++it) {
        acc = acc * p;
        acc += BPoly(*it);
    }
    return acc;
}

} // namespace

BPoly BPoly::substitute(const BPoly& p, const BPoly& q) const {
    // Horner in y, composing each x-coefficient with p along the way.
    BPoly acc;
    for (auto it = yc_.rbegin(); it != yc_.rend(); ++it) {
        acc = acc * q;
        acc += compose_upoly(*it, p);
    }
    return acc;
}

Rat BPoly::eval(const Rat& x0, const Rat& y0) const {
    Rat acc(0);
    for (auto it = yc_.rbegin(); it != yc_.rend(); ++it) acc = acc * y0 + it->eval(x0);
    return acc;
}

UPoly BPoly::eval_x(const Rat& x0) const {
    std::vector<Rat> out;
    out.reserve(yc_.size());
    for (const auto& u : yc_) out.push_back(u.eval(x0));
    return UPoly(std::move(out));
}

std::optional<UPoly> BPoly::as_upoly_in_x() const {
    if (is_zero()) return UPoly();
    if (degree_y() > 0) return std::nullopt;
    return yc_[0];
}

std::optional<UPoly> BPoly::as_upoly_in_y() const {
    std::vector<Rat> out;
    out.reserve(yc_.size());
    for (const auto& u : yc_) {
        if (!u.is_constant()) return std::nullopt;
        out.push_back(u.coeff(0));
    }
    return UPoly(std::move(out));
}

std::string BPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int j = degree_y(); j >= 0; --j) {
        const UPoly u = coeff_y(j);
        for (int i = u.degree(); i >= 0; --i) {
            const Rat c = u.coeff(i);
            if (c == 0) continue;
            if (c < 0)
                out << '-';
            else if (!first)
                out << '+';
            first = false;
            Rat mag = abs(c);
            bool has_var = (i > 0 || j > 0);
            bool printed = false;
            if (mag != 1 || !has_var) {
                out << rat_to_string(mag);
                printed = true;
            }
            if (i > 0) {
                if (printed) out << '*';
                out << 'x';
                if (i > 1) out << '^' << i;
                printed = true;
            }
            if (j > 0) {
                if (printed) out << '*';
                out << 'y';
                if (j > 1) out << '^' << j;
            }
        }
    }
    return out.str();
}

std::optional<BPoly> divides(const BPoly& f, const BPoly& g) {
    if (f.is_zero()) throw std::invalid_argument("divisibility by the zero polynomial");
    if (g.is_zero()) return BPoly();

    // Divisor free of y: each y-coefficient of g must be divisible in Q[x].
    if (f.degree_y() == 0) {
        const UPoly d = f.coeff_y(0);
        std::vector<UPoly> out;
        out.reserve(static_cast<size_t>(g.degree_y()) + 1);
        for (int j = 0; j <= g.degree_y(); ++j) {
            auto q = UPoly::exact_div(g.coeff_y(j), d);
            if (!q) return std::nullopt;
            out.push_back(std::move(*q));
        }
        return BPoly(std::move(out));
    }

    // Long division in y. If f divides g then at every step the leading
    // y-coefficient of the remainder is divisible by lc_y(f) in Q[x] (the
    // quotient is built top down and each of its y-coefficients is forced),
    // so a failed coefficient division is a definitive "no".
    BPoly rem(g), quot;
    while (!rem.is_zero() && rem.degree_y() >= f.degree_y()) {
        auto c = UPoly::exact_div(rem.lc_y(), f.lc_y());
        if (!c) return std::nullopt;
        int k = rem.degree_y() - f.degree_y();
        std::vector<UPoly> term_yc(static_cast<size_t>(k) + 1);
        term_yc.back() = std::move(*c);
        BPoly term{std::move(term_yc)};
        quot += term;
        rem -= f * term;
    }
    if (!rem.is_zero()) return std::nullopt;
    return quot;
}

UPoly content_y(const BPoly& f) {
    UPoly g;
    for (const auto& u : f.y_coeffs()) g = UPoly::gcd(g, u);
    return g;
}

BPoly primitive_part_y(const BPoly& f) {
    if (f.is_zero()) return f;
    const UPoly c = content_y(f);
    return *divides(BPoly::from_x(c), f);
}

namespace {

// One pseudo-remainder step on whole BPoly values (used only by the
// primitive-PRS gcd below; the resultant keeps its own leaner version).
BPoly bp_prem(BPoly A, const BPoly& B) {
    const int dB = B.degree_y();
    const UPoly lB = B.lc_y();
    int pad = A.degree_y() - dB + 1;
    while (!A.is_zero() && A.degree_y() >= dB) {
        const int k = A.degree_y() - dB;
        std::vector<UPoly> shift_yc(static_cast<size_t>(k) + 1);
        shift_yc.back() = A.lc_y();
        A = A * BPoly::from_x(lB) - B * BPoly{std::move(shift_yc)};
        --pad;
    }
    while (pad-- > 0) A = A * BPoly::from_x(lB);
    return A;
}

} // namespace

BPoly gcd_bpoly(const BPoly& f, const BPoly& g) {
    auto normalize = [](BPoly h) {
        if (h.is_zero()) return h;
        const Rat lead = h.lc_y().lc();
        return h * (Rat(1) / lead);
    };
    if (f.is_zero()) return normalize(g);
    if (g.is_zero()) return normalize(f);

    const UPoly cont = UPoly::gcd(content_y(f), content_y(g));
    BPoly A = primitive_part_y(f);
    BPoly B = primitive_part_y(g);
    if (A.degree_y() < B.degree_y()) std::swap(A, B);
    while (B.degree_y() > 0) {
        BPoly R = bp_prem(A, B);
        if (R.is_zero()) {
            A = std::move(B);
            return normalize(BPoly::from_x(cont) * primitive_part_y(A));
        }
        A = std::move(B);
        B = primitive_part_y(R);
    }
    // B now sits in Q[x]; the primitive parts are coprime as y-polynomials.
    return normalize(BPoly::from_x(cont));
}

namespace {

// Helpers for the subresultant sequence, working directly on y-coefficient
// vectors (lowest power first, trailing zeros trimmed).
using YVec = std::vector<UPoly>;

void yv_trim(YVec& v) {
    while (!v.empty() && v.back().is_zero()) v.pop_back();
}

int yv_deg(const YVec& v) { return static_cast<int>(v.size()) - 1; }

YVec yv_scale(const YVec& v, const UPoly& s) {
    YVec out;
    out.reserve(v.size());
    for (const auto& u : v) out.push_back(u * s);
    yv_trim(out);
    return out;
}

YVec yv_sub_shifted(const YVec& a, const YVec& b, int shift) {
    YVec out(a);
    if (out.size() < b.size() + static_cast<size_t>(shift))
        out.resize(b.size() + static_cast<size_t>(shift));
    for (size_t j = 0; j < b.size(); ++j) out[j + static_cast<size_t>(shift)] -= b[j];
    yv_trim(out);
    return out;
}

UPoly must_div(const UPoly& num, const UPoly& den) {
    auto q = UPoly::exact_div(num, den);
    if (!q) throw std::logic_error("subresultant invariant violated: inexact division");
    return *q;
}

// Pseudo-remainder: R with lc(B)^(deg A - deg B + 1) * A = Q*B + R and
// deg_y R < deg_y B. Requires deg A >= deg B >= 0 and B nonzero.
YVec yv_prem(YVec A, const YVec& B) {
    const int dB = yv_deg(B);
    const UPoly& lB = B.back();
    int pad = yv_deg(A) - dB + 1;
    while (!A.empty() && yv_deg(A) >= dB) {
        const UPoly lA = A.back();
        A = yv_sub_shifted(yv_scale(A, lB), yv_scale(B, lA), yv_deg(A) - dB);
        --pad;
    }
    while (pad-- > 0) A = yv_scale(A, lB);
    return A;
}

} // namespace

UPoly resultant_y(const BPoly& f, const BPoly& g) {
    if (f.is_zero() || g.is_zero())
        throw std::invalid_argument("resultant of the zero polynomial");

    YVec A = f.y_coeffs();
    YVec B = g.y_coeffs();
    int sign = 1;
    if (yv_deg(A) < yv_deg(B)) {
        std::swap(A, B);
        if ((yv_deg(A) & 1) && (yv_deg(B) & 1)) sign = -sign;
    }
    if (yv_deg(B) == 0) {
        UPoly r = B[0].pow(yv_deg(A));
        return sign < 0 ? -r : r;
    }

    UPoly gpart(Rat(1)), h(Rat(1));
    while (true) {
        const int dA = yv_deg(A), dB = yv_deg(B);
        const int delta = dA - dB;
        if ((dA & 1) && (dB & 1)) sign = -sign;

        YVec R = yv_prem(A, B);
        A = std::move(B);

        const UPoly divisor = gpart * h.pow(delta);
        B.clear();
        B.reserve(R.size());
        for (const auto& u : R) B.push_back(must_div(u, divisor));
        yv_trim(B);
        if (B.empty()) return UPoly();

        gpart = A.back();
        if (delta > 0) h = must_div(gpart.pow(delta), h.pow(delta - 1));
        if (yv_deg(B) == 0) break;
    }

    const int p = yv_deg(A);
    UPoly res = must_div(B[0].pow(p), h.pow(p - 1));
    return sign < 0 ? -res : res;
}

} // namespace isoder
