#include "isoder/series.hpp"

#include <sstream>
#include <stdexcept>

namespace isoder {

TruncatedSeries::TruncatedSeries(int order) {
    if (order < 1) throw std::invalid_argument("TruncatedSeries: order must be >= 1");
    c_.assign(static_cast<size_t>(order), Rat(0));
}

TruncatedSeries::TruncatedSeries(std::vector<Rat> coeffs, int order) : c_(std::move(coeffs)) {
    if (order < 1) throw std::invalid_argument("TruncatedSeries: order must be >= 1");
    c_.resize(static_cast<size_t>(order), Rat(0));
}

TruncatedSeries TruncatedSeries::constant(const Rat& c, int order) {
    TruncatedSeries s(order);
    s.c_[0] = c;
    return s;
}

TruncatedSeries TruncatedSeries::t(int order) {
    TruncatedSeries s(order);
    if (order >= 2) s.c_[1] = Rat(1);
    return s;
}

bool TruncatedSeries::is_zero() const {
    for (const Rat& c : c_)
        if (c != Rat(0)) return false;
    return true;
}

namespace {
void check_orders(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.order() != b.order())
        throw std::invalid_argument("TruncatedSeries: mismatched truncation orders");
}
} // namespace

TruncatedSeries TruncatedSeries::operator-() const {
    TruncatedSeries r(order());
    for (int k = 0; k < order(); ++k) r.c_[static_cast<size_t>(k)] = -c_[static_cast<size_t>(k)];
    return r;
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    check_orders(a, b);
    TruncatedSeries r(a.order());
    for (int k = 0; k < a.order(); ++k)
        r.c_[static_cast<size_t>(k)] = a.coeff(k) + b.coeff(k);
    return r;
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
    check_orders(a, b);
    TruncatedSeries r(a.order());
    for (int k = 0; k < a.order(); ++k)
        r.c_[static_cast<size_t>(k)] = a.coeff(k) - b.coeff(k);
    return r;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    check_orders(a, b);
    TruncatedSeries r(a.order());
    for (int i = 0; i < a.order(); ++i) {
        if (a.coeff(i) == Rat(0)) continue;
        for (int j = 0; i + j < a.order(); ++j)
            r.c_[static_cast<size_t>(i + j)] += a.coeff(i) * b.coeff(j);
    }
    return r;
}

TruncatedSeries TruncatedSeries::operator*(const Rat& s) const {
    TruncatedSeries r(order());
    for (int k = 0; k < order(); ++k) r.c_[static_cast<size_t>(k)] = c_[static_cast<size_t>(k)] * s;
    return r;
}

TruncatedSeries TruncatedSeries::derivative() const {
    if (order() < 2)
        throw std::invalid_argument("TruncatedSeries::derivative: order 1 leaves no coefficients");
    TruncatedSeries r(order() - 1);
    for (int k = 1; k < order(); ++k)
        r.c_[static_cast<size_t>(k - 1)] = c_[static_cast<size_t>(k)] * Rat(k);
    return r;
}

TruncatedSeries TruncatedSeries::truncate(int m) const {
    if (m < 1 || m > order())
        throw std::invalid_argument("TruncatedSeries::truncate: order out of range");
    return TruncatedSeries(std::vector<Rat>(c_.begin(), c_.begin() + m), m);
}

std::string TruncatedSeries::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (int k = 0; k < order(); ++k) {
        if (coeff(k) == Rat(0)) continue;
        if (!first) os << " + ";
        os << rat_to_string(coeff(k));
        if (k >= 1) os << "*t" << (k > 1 ? "^" + std::to_string(k) : "");
        first = false;
    }
    if (first) os << "0";
    os << " + O(t^" << order() << ")";
    return os.str();
}

TruncatedSeries eval_bpoly(const BPoly& f, const TruncatedSeries& phi,
                           const TruncatedSeries& psi) {
    check_orders(phi, psi);
    const int N = phi.order();
    // Horner in y, then Horner in x for each univariate coefficient.
    TruncatedSeries acc(N);
    for (int j = f.degree_y(); j >= 0; --j) {
        const UPoly& cj = f.y_coeffs()[static_cast<size_t>(j)];
        TruncatedSeries cx(N);
        for (int i = cj.degree(); i >= 0; --i)
            cx = cx * phi + TruncatedSeries::constant(cj.coeff(i), N);
        acc = acc * psi + cx;
    }
    return acc;
}

SolutionPair solve_through(const Derivation& D, const Rat& p1, const Rat& p2, int order) {
    if (order < 1) throw std::invalid_argument("solve_through: order must be >= 1");
    if (is_singular_at(D, p1, p2))
        throw std::domain_error(
            "solve_through: the base point is singular for D (both coefficients vanish "
            "there, i.e. D(m) is contained in m), so no solution passes through it");

    std::vector<Rat> phi(static_cast<size_t>(order), Rat(0));
    std::vector<Rat> psi(static_cast<size_t>(order), Rat(0));
    phi[0] = p1;
    psi[0] = p2;
    for (int k = 0; k + 1 < order; ++k) {
        // a(phi, psi) and b(phi, psi) modulo t^(k+1) only read coefficients
        // of index <= k, which are already fixed.
        const TruncatedSeries ph(std::vector<Rat>(phi.begin(), phi.begin() + k + 1), k + 1);
        const TruncatedSeries ps(std::vector<Rat>(psi.begin(), psi.begin() + k + 1), k + 1);
        phi[static_cast<size_t>(k + 1)] = eval_bpoly(D.a, ph, ps).coeff(k) / Rat(k + 1);
        psi[static_cast<size_t>(k + 1)] = eval_bpoly(D.b, ph, ps).coeff(k) / Rat(k + 1);
    }
    return SolutionPair{{p1, p2},
                        TruncatedSeries(std::move(phi), order),
                        TruncatedSeries(std::move(psi), order),
                        order};
}

TruncatedSeries eval_hom(const SolutionPair& s, const BPoly& f) {
    return eval_bpoly(f, s.phi, s.psi);
}

bool check_chain_rule(const SolutionPair& s, const Derivation& D, const BPoly& f) {
    if (s.order < 2) throw std::invalid_argument("check_chain_rule: order must be >= 2");
    return eval_hom(s, f).derivative() == eval_hom(s, apply(D, f)).truncate(s.order - 1);
}

bool lemma1_fixed_solution_check(const Derivation& D, const RawEndo& rho, const Rat& p1,
                                 const Rat& p2, int order) {
    if (!commutes(rho, D))
        throw std::domain_error("lemma1_fixed_solution_check: rho does not commute with D");
    if (!fixes_point(rho, p1, p2))
        throw std::domain_error("lemma1_fixed_solution_check: rho does not fix the base point");
    if (is_singular_at(D, p1, p2))
        throw std::domain_error("lemma1_fixed_solution_check: the base point is singular for D");
    const SolutionPair s = solve_through(D, p1, p2, order);
    return eval_hom(s, rho.f) == s.phi && eval_hom(s, rho.g) == s.psi;
}

} // namespace isoder
