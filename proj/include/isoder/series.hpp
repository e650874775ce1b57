#ifndef ISODER_SERIES_HPP
#define ISODER_SERIES_HPP

#include "isoder/automorphism.hpp"
#include "isoder/bpoly.hpp"
#include "isoder/derivation.hpp"
#include "isoder/rational.hpp"

#include <array>
#include <string>
#include <vector>

namespace isoder {

/// Formal power series in t over Rat, truncated at order N (exclusive):
/// exactly N stored coefficients, indices 0..N-1. All arithmetic is exact
/// modulo t^N; binary operations require equal orders. derivative() lowers
/// the order by one (the top coefficient of the derivative is unknown).
class TruncatedSeries {
public:
    explicit TruncatedSeries(int order); // zero series
    TruncatedSeries(std::vector<Rat> coeffs, int order);

    static TruncatedSeries constant(const Rat& c, int order);
    static TruncatedSeries t(int order);

    int order() const { return static_cast<int>(c_.size()); }
    const Rat& coeff(int k) const { return c_.at(static_cast<size_t>(k)); }
    const std::vector<Rat>& coeffs() const { return c_; }
    bool is_zero() const;

    TruncatedSeries operator-() const;
    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
    TruncatedSeries operator*(const Rat& s) const;
    bool operator==(const TruncatedSeries& o) const { return c_ == o.c_; }

    TruncatedSeries derivative() const;     // order N-1
    TruncatedSeries truncate(int m) const;  // m <= order
    std::string to_string() const;

private:
    std::vector<Rat> c_;
};

/// f(phi, psi) computed in truncated arithmetic at the series' order.
TruncatedSeries eval_bpoly(const BPoly& f, const TruncatedSeries& phi,
                           const TruncatedSeries& psi);

/// The truncated formal solution of D through the point p: series phi, psi
/// with phi(0) = p1, psi(0) = p2, phi' = a(phi, psi), psi' = b(phi, psi)
/// (the primes holding modulo t^(N-1)).
struct SolutionPair {
    std::array<Rat, 2> p;
    TruncatedSeries phi, psi;
    int order;
};

/// Coefficients built by the recursion (k+1)*phi_{k+1} = [t^k] a(phi, psi)
/// (and likewise for psi), which only reads coefficients of index <= k.
/// The base point must not be singular for D.
SolutionPair solve_through(const Derivation& D, const Rat& p1, const Rat& p2, int order);

/// The solution homomorphism applied to f: substitute x -> phi, y -> psi.
TruncatedSeries eval_hom(const SolutionPair& s, const BPoly& f);

/// d/dt of eval_hom(s, f) equals eval_hom(s, apply(D, f)) modulo t^(N-1) —
/// the defining identity of the solution homomorphism.
bool check_chain_rule(const SolutionPair& s, const Derivation& D, const BPoly& f);

/// For rho commuting with D and fixing the non-singular point p, the
/// solution homomorphism through p composed with rho equals itself; checked
/// on the generators: eval_hom(s, rho(x)) == phi and eval_hom(s, rho(y)) ==
/// psi. Each violated precondition is rejected with its own diagnostic.
bool lemma1_fixed_solution_check(const Derivation& D, const RawEndo& rho, const Rat& p1,
                                 const Rat& p2, int order);

} // namespace isoder

#endif
