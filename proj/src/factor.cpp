#include "isoder/factor.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

// Factorization over Q, desk scale. Pipeline: make the input monic, split it
// squarefree with Yun's algorithm, convert each squarefree part to a monic
// integer polynomial (clearing denominators and absorbing the leading
// coefficient with the substitution x -> x/L), factor that modulo a small
// prime with Berlekamp, lift the modular factors past the Mignotte bound
// with Hensel's lemma, and recombine subsets. Everything is exact; the only
// "search" is the subset recombination, and degrees here are tiny.

namespace isoder {

UPoly UFactorization::reassemble() const {
    UPoly acc(unit);
    for (const auto& [f, mult] : factors) acc *= f.pow(mult);
    return acc;
}

namespace {

using ZPoly = std::vector<mpz_class>; // lowest degree first, trimmed
using PPoly = std::vector<long>;      // coefficients in [0, p)

// ---------------------------------------------------------------- integers

void zp_trim(ZPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

int zp_deg(const ZPoly& f) { return static_cast<int>(f.size()) - 1; }

ZPoly zp_mul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly out(a.size() + b.size() - 1, mpz_class(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

// Quotient of G by the monic C when the division is exact over Z.
std::optional<ZPoly> zp_divide_exact_monic(ZPoly rem, const ZPoly& c) {
    const int dc = zp_deg(c);
    if (zp_deg(rem) < dc) return std::nullopt;
    ZPoly q(static_cast<size_t>(zp_deg(rem) - dc) + 1, mpz_class(0));
    while (zp_deg(rem) >= dc) {
        const int k = zp_deg(rem) - dc;
        const mpz_class coef = rem.back();
        q[static_cast<size_t>(k)] = coef;
        for (int j = 0; j <= dc; ++j)
            rem[static_cast<size_t>(k + j)] -= coef * c[static_cast<size_t>(j)];
        zp_trim(rem);
    }
    if (!rem.empty()) return std::nullopt;
    return q;
}

// f = content * primitive, primitive integral with positive leading term.
std::pair<Rat, ZPoly> to_primitive_z(const UPoly& f) {
    if (f.is_zero()) throw std::logic_error("primitive part of zero");
    mpz_class den_lcm(1);
    for (const Rat& c : f.coeffs()) {
        mpz_class d = c.get_den();
        den_lcm = lcm(den_lcm, d);
    }
    ZPoly z;
    z.reserve(f.coeffs().size());
    mpz_class g(0);
    for (const Rat& c : f.coeffs()) {
        mpz_class num = c.get_num() * (den_lcm / c.get_den());
        g = gcd(g, num);
        z.push_back(num);
    }
    if (z.back() < 0) g = -g;
    for (auto& v : z) v /= g;
    Rat content(g, den_lcm);
    content.canonicalize();
    return {content, z};
}

// -------------------------------------------------------- arithmetic mod p

void pp_trim(PPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

int pp_deg(const PPoly& f) { return static_cast<int>(f.size()) - 1; }

long inv_mod(long a, long p) {
    long t = 0, new_t = 1, r = p, new_r = a % p;
    if (new_r < 0) new_r += p;
    while (new_r != 0) {
        const long q = r / new_r;
        t = std::exchange(new_t, t - q * new_t);
        r = std::exchange(new_r, r - q * new_r);
    }
    return t < 0 ? t + p : t;
}

PPoly pp_mul(const PPoly& a, const PPoly& b, long p) {
    if (a.empty() || b.empty()) return {};
    PPoly out(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            out[i + j] = (out[i + j] + a[i] * b[j]) % p;
    }
    pp_trim(out);
    return out;
}

PPoly pp_sub(PPoly a, const PPoly& b, long p) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (size_t i = 0; i < b.size(); ++i) a[i] = ((a[i] - b[i]) % p + p) % p;
    pp_trim(a);
    return a;
}

PPoly pp_scale(PPoly a, long s, long p) {
    s %= p;
    if (s < 0) s += p;
    for (auto& c : a) c = c * s % p;
    pp_trim(a);
    return a;
}

// Remainder of a modulo b (b nonzero), coefficients mod p.
PPoly pp_rem(PPoly a, const PPoly& b, long p) {
    const int db = pp_deg(b);
    const long lb_inv = inv_mod(b.back(), p);
    while (pp_deg(a) >= db) {
        const int k = pp_deg(a) - db;
        const long c = a.back() * lb_inv % p;
        for (int j = 0; j <= db; ++j)
            a[static_cast<size_t>(k + j)] =
                ((a[static_cast<size_t>(k + j)] - c * b[static_cast<size_t>(j)]) % p + p) % p;
        pp_trim(a);
        if (a.empty()) break;
    }
    return a;
}

PPoly pp_divide_exact(PPoly a, const PPoly& b, long p) {
    const int db = pp_deg(b);
    const long lb_inv = inv_mod(b.back(), p);
    PPoly q(static_cast<size_t>(std::max(pp_deg(a) - db, -1)) + 1, 0);
    while (pp_deg(a) >= db) {
        const int k = pp_deg(a) - db;
        const long c = a.back() * lb_inv % p;
        q[static_cast<size_t>(k)] = c;
        for (int j = 0; j <= db; ++j)
            a[static_cast<size_t>(k + j)] =
                ((a[static_cast<size_t>(k + j)] - c * b[static_cast<size_t>(j)]) % p + p) % p;
        pp_trim(a);
        if (a.empty()) break;
    }
    pp_trim(q);
    return q;
}

PPoly pp_monic(PPoly a, long p) {
    if (a.empty()) return a;
    return pp_scale(std::move(a), inv_mod(a.back(), p), p);
}

PPoly pp_gcd(PPoly a, PPoly b, long p) {
    while (!b.empty()) {
        PPoly r = pp_rem(std::move(a), b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return pp_monic(std::move(a), p);
}

PPoly pp_derivative(const PPoly& f, long p) {
    PPoly out;
    for (size_t i = 1; i < f.size(); ++i) out.push_back(f[i] * static_cast<long>(i % p) % p);
    pp_trim(out);
    return out;
}

PPoly zp_mod_p(const ZPoly& f, long p) {
    PPoly out;
    out.reserve(f.size());
    for (const auto& c : f) {
        mpz_class r = c % p;
        if (r < 0) r += p;
        out.push_back(r.get_si());
    }
    pp_trim(out);
    return out;
}

// ----------------------------------------------------------- Berlekamp

// Monic irreducible factors of the monic squarefree f over F_p.
std::vector<PPoly> berlekamp(const PPoly& f, long p) {
    const int n = pp_deg(f);
    if (n == 1) return {f};

    // x^p mod f by square and multiply.
    PPoly xq = {0, 1};
    {
        PPoly acc = {1};
        PPoly base = xq;
        long e = p;
        while (e > 0) {
            if (e & 1) acc = pp_rem(pp_mul(acc, base, p), f, p);
            base = pp_rem(pp_mul(base, base, p), f, p);
            e >>= 1;
        }
        xq = acc;
    }

    // Petersen matrix rows: x^(i*p) mod f, i = 0..n-1; then subtract I.
    std::vector<std::vector<long>> m(static_cast<size_t>(n), std::vector<long>(static_cast<size_t>(n), 0));
    PPoly row = {1};
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j <= pp_deg(row); ++j) m[static_cast<size_t>(i)][static_cast<size_t>(j)] = row[static_cast<size_t>(j)];
        m[static_cast<size_t>(i)][static_cast<size_t>(i)] =
            (m[static_cast<size_t>(i)][static_cast<size_t>(i)] - 1 % p + p) % p;
        if (i + 1 < n) row = pp_rem(pp_mul(row, xq, p), f, p);
    }

    // Nullspace basis of the transposed action: we want v with v(x)^p = v
    // mod f, i.e. (row space combination) — solve v * (Q - I) = 0, which is
    // the nullspace of the transpose. Transpose in place first.
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            std::swap(m[static_cast<size_t>(i)][static_cast<size_t>(j)], m[static_cast<size_t>(j)][static_cast<size_t>(i)]);

    std::vector<int> pivot_of_col(static_cast<size_t>(n), -1);
    int rank = 0;
    for (int c = 0; c < n && rank < n; ++c) {
        int sel = -1;
        for (int i = rank; i < n; ++i)
            if (m[static_cast<size_t>(i)][static_cast<size_t>(c)] != 0) { sel = i; break; }
        if (sel < 0) continue;
        std::swap(m[static_cast<size_t>(sel)], m[static_cast<size_t>(rank)]);
        const long inv = inv_mod(m[static_cast<size_t>(rank)][static_cast<size_t>(c)], p);
        for (int j = 0; j < n; ++j)
            m[static_cast<size_t>(rank)][static_cast<size_t>(j)] =
                m[static_cast<size_t>(rank)][static_cast<size_t>(j)] * inv % p;
        for (int i = 0; i < n; ++i) {
            if (i == rank) continue;
            const long factor = m[static_cast<size_t>(i)][static_cast<size_t>(c)];
            if (factor == 0) continue;
            for (int j = 0; j < n; ++j)
                m[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                    ((m[static_cast<size_t>(i)][static_cast<size_t>(j)] -
                      factor * m[static_cast<size_t>(rank)][static_cast<size_t>(j)]) % p + p) % p;
        }
        pivot_of_col[static_cast<size_t>(c)] = rank;
        ++rank;
    }

    std::vector<PPoly> basis;
    for (int c = 0; c < n; ++c) {
        if (pivot_of_col[static_cast<size_t>(c)] >= 0) continue;
        PPoly v(static_cast<size_t>(n), 0);
        v[static_cast<size_t>(c)] = 1;
        for (int j = 0; j < n; ++j) {
            const int pr = pivot_of_col[static_cast<size_t>(j)];
            if (pr >= 0)
                v[static_cast<size_t>(j)] =
                    (p - m[static_cast<size_t>(pr)][static_cast<size_t>(c)]) % p;
        }
        pp_trim(v);
        basis.push_back(std::move(v));
    }

    const size_t r = basis.size(); // number of irreducible factors
    std::vector<PPoly> factors = {f};
    for (const PPoly& v : basis) {
        if (factors.size() == r) break;
        if (pp_deg(v) < 1) continue; // the constants split nothing
        std::vector<PPoly> next;
        for (PPoly& w : factors) {
            if (pp_deg(w) == 1) { next.push_back(std::move(w)); continue; }
            PPoly rem = std::move(w);
            for (long s = 0; s < p && pp_deg(rem) > 0; ++s) {
                PPoly shifted = pp_sub(v, PPoly{s}, p);
                PPoly d = pp_gcd(pp_rem(shifted, rem, p), rem, p);
                if (pp_deg(d) > 0 && pp_deg(d) < pp_deg(rem)) {
                    next.push_back(d);
                    rem = pp_divide_exact(std::move(rem), d, p);
                }
            }
            if (pp_deg(rem) > 0) next.push_back(std::move(rem));
        }
        factors = std::move(next);
    }
    return factors;
}

// ----------------------------------------------------------- Hensel lift

mpz_class zmod(const mpz_class& v, const mpz_class& m) {
    mpz_class r = v % m;
    if (r < 0) r += m;
    return r;
}

// Lift the pairwise-coprime monic factorization of the monic G from mod p to
// mod p^k >= target, one power of p at a time.
std::vector<ZPoly> hensel_lift(const ZPoly& G, long p, const std::vector<PPoly>& fac,
                               const mpz_class& target) {
    const size_t r = fac.size();
    // Partial-fraction inverses over F_p: b_i = (prod_{j != i} f_j)^{-1} mod f_i.
    std::vector<PPoly> binv(r);
    for (size_t i = 0; i < r; ++i) {
        PPoly h = {1};
        for (size_t j = 0; j < r; ++j)
            if (j != i) h = pp_mul(h, fac[j], p);
        // extended Euclid for the inverse of h modulo fac[i]
        PPoly a = pp_rem(h, fac[i], p), b = fac[i];
        PPoly sa = {1}, sb = {};
        while (!b.empty()) {
            PPoly q = pp_divide_exact(pp_sub(a, pp_rem(a, b, p), p), b, p);
            PPoly nb = pp_rem(a, b, p);
            PPoly nsb = pp_sub(sa, pp_mul(q, sb, p), p);
            a = std::exchange(b, nb);
            sa = std::exchange(sb, nsb);
        }
        if (pp_deg(a) != 0) throw std::logic_error("Hensel: factors not coprime mod p");
        binv[i] = pp_rem(pp_scale(sa, inv_mod(a[0], p), p), fac[i], p);
    }

    std::vector<ZPoly> lifted(r);
    for (size_t i = 0; i < r; ++i) {
        lifted[i].reserve(fac[i].size());
        for (long c : fac[i]) lifted[i].push_back(mpz_class(c));
    }

    mpz_class m(p);
    while (m < target) {
        const mpz_class mp = m * p;
        // error E = (G - prod lifted)/m, taken mod p
        ZPoly prod = {mpz_class(1)};
        for (const auto& g : lifted) prod = zp_mul(prod, g);
        ZPoly err(G.size(), mpz_class(0));
        for (size_t k = 0; k < err.size(); ++k) {
            mpz_class d = G[k] - (k < prod.size() ? prod[k] : mpz_class(0));
            err[k] = zmod(d, mp) / m; // exact: G ≡ prod (mod m)
        }
        PPoly e;
        e.reserve(err.size());
        for (const auto& c : err) e.push_back(mpz_class(c % p).get_si());
        pp_trim(e);

        for (size_t i = 0; i < r; ++i) {
            PPoly delta = pp_rem(pp_mul(e, binv[i], p), fac[i], p);
            for (int j = 0; j <= pp_deg(delta); ++j)
                lifted[i][static_cast<size_t>(j)] =
                    zmod(lifted[i][static_cast<size_t>(j)] + m * delta[static_cast<size_t>(j)], mp);
        }
        m = mp;
    }

    // Invariant check: the lift multiplies back to G modulo m.
    ZPoly prod = {mpz_class(1)};
    for (const auto& g : lifted) prod = zp_mul(prod, g);
    for (size_t k = 0; k < std::max(prod.size(), G.size()); ++k) {
        const mpz_class gk = k < G.size() ? G[k] : mpz_class(0);
        const mpz_class pk = k < prod.size() ? prod[k] : mpz_class(0);
        if (zmod(gk - pk, m) != 0) throw std::logic_error("Hensel lift failed verification");
    }
    return {lifted.begin(), lifted.end()};
}

// ------------------------------------------------------- integer factoring

const std::vector<long>& small_primes() {
    static const std::vector<long> primes = [] {
        std::vector<long> out;
        std::vector<bool> sieve(5000, true);
        for (long i = 2; i < 5000; ++i) {
            if (!sieve[static_cast<size_t>(i)]) continue;
            if (i >= 3) out.push_back(i);
            for (long j = i * i; j < 5000; j += i) sieve[static_cast<size_t>(j)] = false;
        }
        return out;
    }();
    return primes;
}

// Factor |n| into primes: trial division, then Pollard's rho for the rare
// large cofactor (constant terms of resultants can get big).
void factor_mpz(mpz_class n, std::map<mpz_class, int>& out) {
    n = abs(n);
    if (n <= 1) return;
    for (long p : {2L, 3L, 5L}) {
        while (mpz_divisible_ui_p(n.get_mpz_t(), static_cast<unsigned long>(p))) {
            ++out[mpz_class(p)];
            n /= p;
        }
    }
    for (long d = 7; d < 1000000 && n > 1; d += 2) {
        if (mpz_class(d) * d > n) break;
        while (mpz_divisible_ui_p(n.get_mpz_t(), static_cast<unsigned long>(d))) {
            ++out[mpz_class(d)];
            n /= d;
        }
    }
    if (n == 1) return;
    if (mpz_probab_prime_p(n.get_mpz_t(), 40)) {
        ++out[n];
        return;
    }
    // Pollard rho (Brent variant) on the remaining composite.
    mpz_class c(1);
    while (true) {
        mpz_class x(2), y(2), d(1);
        while (d == 1) {
            x = zmod(x * x + c, n);
            y = zmod(y * y + c, n);
            y = zmod(y * y + c, n);
            d = gcd(abs(x - y), n);
        }
        if (d != n) {
            factor_mpz(d, out);
            factor_mpz(n / d, out);
            return;
        }
        c += 1; // cycle degenerated; retry with another polynomial
    }
}

std::vector<mpz_class> divisors_of(const mpz_class& n) {
    std::map<mpz_class, int> pf;
    factor_mpz(n, pf);
    std::vector<mpz_class> divs = {mpz_class(1)};
    for (const auto& [prime, exp] : pf) {
        const size_t base = divs.size();
        mpz_class pk(1);
        for (int e = 1; e <= exp; ++e) {
            pk *= prime;
            for (size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
        }
    }
    return divs;
}

// Monic irreducible rational factors of a monic squarefree q, deg >= 1.
std::vector<UPoly> factor_monic_squarefree(const UPoly& q) {
    if (q.degree() == 1) return {q};
    auto [content, F] = to_primitive_z(q);
    (void)content;
    const int n = zp_deg(F);
    const mpz_class L = F.back();

    // Absorb the leading coefficient: G(x) = L^(n-1) * F(x/L) is monic with
    // integer coefficients G_k = F_k * L^(n-1-k) (and G_n = F_n / L = 1).
    ZPoly G(F.size());
    G[static_cast<size_t>(n)] = 1;
    mpz_class pw(1);
    for (int k = n - 1; k >= 0; --k) {
        G[static_cast<size_t>(k)] = F[static_cast<size_t>(k)] * pw;
        pw *= L;
    }

    // A prime keeping G squarefree (G monic, so the degree never drops).
    long p = 0;
    PPoly gp;
    for (long cand : small_primes()) {
        PPoly g = zp_mod_p(G, cand);
        if (pp_deg(g) != n) continue; // cannot happen, G monic — belt and braces
        PPoly d = pp_gcd(g, pp_derivative(g, cand), cand);
        if (pp_deg(d) == 0) {
            p = cand;
            gp = std::move(g);
            break;
        }
    }
    if (p == 0) throw std::logic_error("no squarefree prime found for factorization");

    std::vector<PPoly> modular = berlekamp(gp, p);
    if (modular.size() == 1) return {q};

    // Mignotte bound on the coefficients of any monic factor of G.
    mpz_class norm2_sq(0);
    for (const auto& c : G) norm2_sq += c * c;
    mpz_class bound = sqrt(norm2_sq) + 1;
    bound <<= static_cast<unsigned>(n);
    const mpz_class target = 2 * bound + 1;

    std::vector<ZPoly> lifted = hensel_lift(G, p, modular, target);
    mpz_class m(p);
    while (m < target) m *= p;

    // Subset recombination against exact division in Z[x].
    auto symmetric = [&](ZPoly c) {
        for (auto& v : c)
            if (2 * v > m) v -= m;
        zp_trim(c);
        return c;
    };

    std::vector<ZPoly> found;       // monic integer factors of G
    std::vector<size_t> active(lifted.size());
    std::iota(active.begin(), active.end(), size_t{0});
    ZPoly rem_G = G;

    for (size_t take = 1; 2 * take <= active.size();) {
        bool split = false;
        std::vector<size_t> pick(take);
        std::iota(pick.begin(), pick.end(), size_t{0});
        while (true) {
            ZPoly cand = {mpz_class(1)};
            for (size_t idx : pick) {
                cand = zp_mul(cand, lifted[active[idx]]);
                for (auto& v : cand) v = zmod(v, m);
            }
            cand = symmetric(std::move(cand));
            if (auto quot = zp_divide_exact_monic(rem_G, cand)) {
                found.push_back(cand);
                rem_G = std::move(*quot);
                std::vector<size_t> next_active;
                for (size_t i = 0; i < active.size(); ++i)
                    if (std::find(pick.begin(), pick.end(), i) == pick.end())
                        next_active.push_back(active[i]);
                active = std::move(next_active);
                split = true;
                break;
            }
            // next combination of `take` indices out of active.size()
            int pos = static_cast<int>(take) - 1;
            while (pos >= 0 &&
                   pick[static_cast<size_t>(pos)] == active.size() - take + static_cast<size_t>(pos))
                --pos;
            if (pos < 0) break;
            ++pick[static_cast<size_t>(pos)];
            for (size_t i = static_cast<size_t>(pos) + 1; i < take; ++i)
                pick[i] = pick[i - 1] + 1;
        }
        if (!split) ++take;
    }
    if (zp_deg(rem_G) > 0) found.push_back(rem_G);

    // Undo the x -> x/L substitution: g(x) -> g(L*x)/L^deg g, monic over Q.
    std::vector<UPoly> out;
    out.reserve(found.size());
    for (const ZPoly& g : found) {
        const int d = zp_deg(g);
        std::vector<Rat> cs(static_cast<size_t>(d) + 1);
        mpz_class lk(1); // L^k
        for (int k = 0; k <= d; ++k) {
            mpz_class denom;
            mpz_pow_ui(denom.get_mpz_t(), L.get_mpz_t(), static_cast<unsigned long>(d));
            Rat c(g[static_cast<size_t>(k)] * lk, denom);
            c.canonicalize();
            cs[static_cast<size_t>(k)] = c;
            lk *= L;
        }
        out.emplace_back(std::move(cs));
    }
    return out;
}

bool factor_order(const UPoly& a, const UPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    const auto& ca = a.coeffs();
    const auto& cb = b.coeffs();
    for (size_t i = 0; i < ca.size(); ++i)
        if (ca[i] != cb[i]) return ca[i] < cb[i];
    return false;
}

} // namespace

std::vector<Rat> rational_roots(const UPoly& f) {
    if (f.is_zero()) throw std::invalid_argument("rational roots of the zero polynomial");
    std::vector<Rat> roots;
    UPoly g = f;
    if (g.degree() >= 1 && g.coeff(0) == 0) {
        roots.push_back(Rat(0));
        while (g.degree() >= 1 && g.coeff(0) == 0)
            g = *UPoly::exact_div(g, UPoly::x());
    }
    if (g.degree() >= 1) {
        auto [content, z] = to_primitive_z(g);
        (void)content;
        const auto nums = divisors_of(z.front());
        const auto dens = divisors_of(z.back());
        std::set<Rat> candidates;
        for (const auto& num : nums)
            for (const auto& den : dens) {
                Rat r(num, den);
                r.canonicalize();
                candidates.insert(r);
                candidates.insert(-r);
            }
        for (const Rat& r : candidates)
            if (f.eval(r) == 0) roots.push_back(r);
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

UPoly squarefree_part(const UPoly& f) {
    if (f.is_zero()) throw std::invalid_argument("squarefree part of the zero polynomial");
    if (f.degree() == 0) return UPoly(Rat(1));
    const UPoly g = UPoly::gcd(f, f.derivative());
    return UPoly::exact_div(f, g)->monic();
}

UFactorization factor_upoly(const UPoly& f) {
    if (f.is_zero()) throw std::invalid_argument("factorization of the zero polynomial");
    UFactorization out;
    out.unit = f.lc();
    UPoly b = f.monic();
    if (b.degree() == 0) return out;

    // Yun's squarefree decomposition: b = prod a_i^i with the a_i squarefree
    // and pairwise coprime.
    std::vector<std::pair<UPoly, int>> squarefree;
    {
        const UPoly df = b.derivative();
        UPoly a0 = UPoly::gcd(b, df);
        UPoly bi = *UPoly::exact_div(b, a0);
        UPoly ci = *UPoly::exact_div(df, a0);
        UPoly di = ci - bi.derivative();
        int i = 1;
        while (bi.degree() > 0) {
            UPoly ai = UPoly::gcd(bi, di);
            if (ai.degree() > 0) squarefree.emplace_back(ai, i);
            bi = *UPoly::exact_div(bi, ai);
            ci = *UPoly::exact_div(di, ai);
            di = ci - bi.derivative();
            ++i;
        }
    }

    for (const auto& [part, mult] : squarefree)
        for (UPoly& irr : factor_monic_squarefree(part))
            out.factors.emplace_back(std::move(irr), mult);

    std::sort(out.factors.begin(), out.factors.end(),
              [](const auto& x, const auto& y) { return factor_order(x.first, y.first); });
    return out;
}

bool is_irreducible_q(const UPoly& f) {
    if (f.degree() < 1) return false;
    const UFactorization fac = factor_upoly(f);
    return fac.factors.size() == 1 && fac.factors[0].second == 1;
}

} // namespace isoder
