#include "isoder/isotropy.hpp"

#include <stdexcept>

namespace isoder {

std::string kind_name(IsotropyKind k) {
    switch (k) {
        case IsotropyKind::Trivial: return "Trivial";
        case IsotropyKind::CaseIIIFamily: return "CaseIIIFamily";
        case IsotropyKind::ScaleOnly: return "ScaleOnly";
        case IsotropyKind::ConstABFamily: return "ConstABFamily";
        case IsotropyKind::ShiftScale: return "ShiftScale";
        case IsotropyKind::FullDeJonquieres: return "FullDeJonquieres";
        case IsotropyKind::SubgroupN0: return "SubgroupN0";
        case IsotropyKind::ConjugatedDeJonquieres: return "ConjugatedDeJonquieres";
    }
    throw std::logic_error("kind_name: unhandled kind");
}

IsotropyDescription isotropy_shamsuddin(const UPoly& a, const UPoly& b) {
    IsotropyDescription desc;
    if (a.is_zero()) {
        if (b.is_zero()) {
            desc.kind = IsotropyKind::FullDeJonquieres;
            return desc;
        }
        if (b.is_constant()) {
            desc.kind = IsotropyKind::SubgroupN0;
            desc.const_b = b.coeff(0);
            desc.partial = true;
            desc.notes.push_back(
                "partial description: only the elements with rho(x) = x + c are given; "
                "whether they exhaust the full isotropy group is open");
            desc.notes.push_back(
                "parameter law carries a cross term: composing (c1,(d1,beta1)) with "
                "(c2,(d2,beta2)) gives d* = d2 + beta2*d1 + b*c1*(1-beta2); in the shifted "
                "parameter dt = d - b*c the law is exactly (c1+c2, (dt2 + beta2*dt1, beta1*beta2))");
            return desc;
        }
        desc.kind = IsotropyKind::ConjugatedDeJonquieres;
        desc.B = b.antiderivative();
        desc.extension = true;
        desc.notes.push_back(
            "extension: obtained from the full de Jonquieres family by the change of "
            "coordinates y -> B(x) + y with B' = b, which transports the derivation to "
            "d/dx; every sampled element passes the direct commutation check");
        return desc;
    }
    if (b.is_zero()) {
        desc.kind = a.is_constant() ? IsotropyKind::ShiftScale : IsotropyKind::ScaleOnly;
        return desc;
    }
    if (a.is_constant() && b.is_constant()) {
        desc.kind = IsotropyKind::ConstABFamily;
        desc.const_a = a.coeff(0);
        desc.const_b = b.coeff(0);
        desc.notes.push_back(
            "the additive part alpha of y -> alpha + d*y is forced to alpha = b*(d-1)/a "
            "by the commutation equation, so the group is the two-parameter K x K* in "
            "(c, d), not a three-parameter K x (K |x K*)");
        return desc;
    }
    // deg a >= 1 or deg b >= 1, with a, b both nonzero.
    const OdeSolution ode = solve_sham_ode(a, b);
    if (ode.kind == OdeSolution::Kind::None) {
        desc.kind = IsotropyKind::Trivial;
        return desc;
    }
    desc.kind = IsotropyKind::CaseIIIFamily;
    desc.h = *ode.h;
    if (a.is_constant()) {
        // The x-shift is pinned to 0 only by the y-coefficient equation
        // a(x+c) = a(x), which is vacuous for constant a: extra commuting
        // elements with rho(x) = x + c exist for every c.
        desc.partial = true;
        desc.notes.push_back(
            "partial description: for constant a and nonconstant b, elements with "
            "rho(x) = x + c, c != 0 also commute (g0' + d*b = a*g0 + b(x+c) has a "
            "unique polynomial solution g0 for every (c, d)); the family above is "
            "the subgroup fixing x");
    }
    return desc;
}

namespace {

void require(bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(what);
}

/// tau: y -> B(x) + y as an expanded pair, and its inverse.
RawEndo tau_endo(const UPoly& B) { return {BPoly::x(), BPoly::from_x(B) + BPoly::y()}; }
RawEndo tau_inv_endo(const UPoly& B) { return {BPoly::x(), BPoly::from_x(-B) + BPoly::y()}; }

RawEndo dejonquieres_endo(const IsoParams& p) {
    return {BPoly::x() + BPoly::from_y(p.P),
            BPoly(p.d) + BPoly::y() * p.beta};
}

} // namespace

RawEndo sample(const IsotropyDescription& desc, const IsoParams& p) {
    const BPoly X = BPoly::x(), Y = BPoly::y();
    switch (desc.kind) {
        case IsotropyKind::Trivial:
            return {X, Y};
        case IsotropyKind::CaseIIIFamily:
            require(p.d != Rat(0), "sample: CaseIIIFamily needs d != 0");
            return {X, BPoly::from_x(*desc.h) * (Rat(1) - p.d) + Y * p.d};
        case IsotropyKind::ScaleOnly:
            require(p.d != Rat(0), "sample: ScaleOnly needs d != 0");
            return {X, Y * p.d};
        case IsotropyKind::ConstABFamily:
            require(p.d != Rat(0), "sample: ConstABFamily needs d != 0");
            return {X + BPoly(p.c),
                    BPoly(*desc.const_b * (p.d - Rat(1)) / *desc.const_a) + Y * p.d};
        case IsotropyKind::ShiftScale:
            require(p.d != Rat(0), "sample: ShiftScale needs d != 0");
            return {X + BPoly(p.c), Y * p.d};
        case IsotropyKind::FullDeJonquieres:
            require(p.beta != Rat(0), "sample: FullDeJonquieres needs beta != 0");
            return dejonquieres_endo(p);
        case IsotropyKind::SubgroupN0:
            require(p.beta != Rat(0), "sample: SubgroupN0 needs beta != 0");
            return {X + BPoly(p.c),
                    BPoly(p.d) + X * (*desc.const_b * (Rat(1) - p.beta)) + Y * p.beta};
        case IsotropyKind::ConjugatedDeJonquieres: {
            require(p.beta != Rat(0), "sample: ConjugatedDeJonquieres needs beta != 0");
            // tau^-1 o sigma o tau with sigma the de Jonquieres element.
            const RawEndo sigma = dejonquieres_endo(p);
            return compose_raw(tau_inv_endo(*desc.B), compose_raw(sigma, tau_endo(*desc.B)));
        }
    }
    throw std::logic_error("sample: unhandled kind");
}

namespace {

/// e.f == x + c for a constant c?
std::optional<Rat> match_x_shift(const RawEndo& e) {
    const BPoly diff = e.f - BPoly::x();
    if (diff.is_zero()) return Rat(0);
    if (diff.degree_y() == 0 && diff.degree_x() == 0) return diff.coeff_y(0).coeff(0);
    return std::nullopt;
}

/// e.g == g0(x) + g1(x)*y with both parts as given?
struct LinearInY {
    UPoly g0, g1;
};
std::optional<LinearInY> match_linear_in_y(const BPoly& g) {
    if (g.degree_y() > 1) return std::nullopt;
    return LinearInY{g.coeff_y(0), g.coeff_y(1)};
}

std::optional<IsoParams> match_dejonquieres(const RawEndo& e) {
    const auto P = (e.f - BPoly::x()).as_upoly_in_y();
    if (!P) return std::nullopt;
    const auto lin = match_linear_in_y(e.g);
    if (!lin || !lin->g0.is_constant() || !lin->g1.is_constant()) return std::nullopt;
    if (lin->g1.is_zero()) return std::nullopt;
    IsoParams p;
    p.P = *P;
    p.d = lin->g0.coeff(0);
    p.beta = lin->g1.coeff(0);
    return p;
}

} // namespace

std::optional<IsoParams> match_params(const IsotropyDescription& desc, const RawEndo& e) {
    switch (desc.kind) {
        case IsotropyKind::Trivial:
            if (e.f == BPoly::x() && e.g == BPoly::y()) return IsoParams{};
            return std::nullopt;
        case IsotropyKind::CaseIIIFamily: {
            if (e.f != BPoly::x()) return std::nullopt;
            const auto lin = match_linear_in_y(e.g);
            if (!lin || !lin->g1.is_constant() || lin->g1.is_zero()) return std::nullopt;
            const Rat d = lin->g1.coeff(0);
            if (lin->g0 != *desc.h * (Rat(1) - d)) return std::nullopt;
            IsoParams p;
            p.d = d;
            return p;
        }
        case IsotropyKind::ScaleOnly:
        case IsotropyKind::ShiftScale: {
            const auto c = match_x_shift(e);
            if (!c || (desc.kind == IsotropyKind::ScaleOnly && *c != Rat(0))) return std::nullopt;
            const auto lin = match_linear_in_y(e.g);
            if (!lin || !lin->g0.is_zero() || !lin->g1.is_constant() || lin->g1.is_zero())
                return std::nullopt;
            IsoParams p;
            p.c = *c;
            p.d = lin->g1.coeff(0);
            return p;
        }
        case IsotropyKind::ConstABFamily: {
            const auto c = match_x_shift(e);
            if (!c) return std::nullopt;
            const auto lin = match_linear_in_y(e.g);
            if (!lin || !lin->g1.is_constant() || lin->g1.is_zero()) return std::nullopt;
            const Rat d = lin->g1.coeff(0);
            if (lin->g0 != UPoly(*desc.const_b * (d - Rat(1)) / *desc.const_a))
                return std::nullopt;
            IsoParams p;
            p.c = *c;
            p.d = d;
            return p;
        }
        case IsotropyKind::FullDeJonquieres:
            return match_dejonquieres(e);
        case IsotropyKind::SubgroupN0: {
            const auto c = match_x_shift(e);
            if (!c) return std::nullopt;
            const auto lin = match_linear_in_y(e.g);
            if (!lin || !lin->g1.is_constant() || lin->g1.is_zero()) return std::nullopt;
            const Rat beta = lin->g1.coeff(0);
            // g0 must be d + b(1-beta)*x.
            if (lin->g0.degree() > 1) return std::nullopt;
            if (lin->g0.coeff(1) != *desc.const_b * (Rat(1) - beta)) return std::nullopt;
            IsoParams p;
            p.c = *c;
            p.d = lin->g0.coeff(0);
            p.beta = beta;
            return p;
        }
        case IsotropyKind::ConjugatedDeJonquieres: {
            // rho = tau^-1 sigma tau  <=>  sigma = tau rho tau^-1.
            const RawEndo sigma =
                compose_raw(tau_endo(*desc.B), compose_raw(e, tau_inv_endo(*desc.B)));
            return match_dejonquieres(sigma);
        }
    }
    throw std::logic_error("match_params: unhandled kind");
}

bool contains(const IsotropyDescription& desc, const RawEndo& e) {
    return match_params(desc, e).has_value();
}

GroupLaw group_law(const IsotropyDescription& desc) {
    switch (desc.kind) {
        case IsotropyKind::Trivial:
            throw std::invalid_argument("group_law: trivial isotropy has no parameter law");
        case IsotropyKind::CaseIIIFamily:
        case IsotropyKind::ScaleOnly:
            return {desc.kind, "d1 * d2"};
        case IsotropyKind::ConstABFamily:
        case IsotropyKind::ShiftScale:
            return {desc.kind, "(c1 + c2, d1 * d2)"};
        case IsotropyKind::FullDeJonquieres:
        case IsotropyKind::ConjugatedDeJonquieres:
            return {desc.kind, "(P1 + P2(d1 + beta1*y), d2 + beta2*d1, beta1 * beta2)"};
        case IsotropyKind::SubgroupN0:
            return {desc.kind,
                    "(c1 + c2, (d2 + beta2*d1 + b*c1*(1 - beta2), beta1 * beta2)); "
                    "in the shifted parameter dt = d - b*c: (c1 + c2, (dt2 + beta2*dt1, "
                    "beta1 * beta2))"};
    }
    throw std::logic_error("group_law: unhandled kind");
}

IsoParams compose_params(const IsotropyDescription& desc, const IsoParams& p1,
                         const IsoParams& p2) {
    IsoParams p;
    switch (desc.kind) {
        case IsotropyKind::Trivial:
            return p;
        case IsotropyKind::CaseIIIFamily:
        case IsotropyKind::ScaleOnly:
            p.d = p1.d * p2.d;
            return p;
        case IsotropyKind::ConstABFamily:
        case IsotropyKind::ShiftScale:
            p.c = p1.c + p2.c;
            p.d = p1.d * p2.d;
            return p;
        case IsotropyKind::FullDeJonquieres:
        case IsotropyKind::ConjugatedDeJonquieres: {
            // (rho1 o rho2)(x) = x + P1(y) + P2(d1 + beta1*y),
            // (rho1 o rho2)(y) = d2 + beta2*d1 + beta1*beta2*y.
            const UPoly inner{std::vector<Rat>{p1.d, p1.beta}};
            p.P = p1.P + p2.P.compose(inner);
            p.d = p2.d + p2.beta * p1.d;
            p.beta = p1.beta * p2.beta;
            return p;
        }
        case IsotropyKind::SubgroupN0:
            p.c = p1.c + p2.c;
            p.d = p2.d + p2.beta * p1.d + *desc.const_b * p1.c * (Rat(1) - p2.beta);
            p.beta = p1.beta * p2.beta;
            return p;
    }
    throw std::logic_error("compose_params: unhandled kind");
}

bool verify_group_law(const IsotropyDescription& desc) {
    std::vector<IsoParams> grid;
    const std::vector<Rat> cs = {Rat(0), Rat(1), Rat(-2)};
    const std::vector<Rat> ds = {Rat(1), Rat(2), Rat(-1, 2)};
    const std::vector<Rat> betas = {Rat(1), Rat(3), Rat(-1, 3)};
    const std::vector<UPoly> Ps = {UPoly(), UPoly::x(), UPoly{std::vector<Rat>{Rat(-1), Rat(0), Rat(2)}}};
    switch (desc.kind) {
        case IsotropyKind::Trivial:
            return true;
        case IsotropyKind::CaseIIIFamily:
        case IsotropyKind::ScaleOnly:
            for (const Rat& d : ds) {
                IsoParams p;
                p.d = d;
                grid.push_back(p);
            }
            break;
        case IsotropyKind::ConstABFamily:
        case IsotropyKind::ShiftScale:
            for (size_t i = 0; i < cs.size(); ++i) {
                IsoParams p;
                p.c = cs[i];
                p.d = ds[i];
                grid.push_back(p);
            }
            break;
        case IsotropyKind::FullDeJonquieres:
        case IsotropyKind::ConjugatedDeJonquieres:
            for (size_t i = 0; i < ds.size(); ++i) {
                IsoParams p;
                p.P = Ps[i];
                p.d = ds[i];
                p.beta = betas[i];
                grid.push_back(p);
            }
            break;
        case IsotropyKind::SubgroupN0:
            for (size_t i = 0; i < cs.size(); ++i) {
                IsoParams p;
                p.c = cs[i];
                p.d = ds[i];
                p.beta = betas[i];
                grid.push_back(p);
            }
            break;
    }
    for (const IsoParams& p1 : grid)
        for (const IsoParams& p2 : grid) {
            const RawEndo lhs = compose_raw(sample(desc, p1), sample(desc, p2));
            const RawEndo rhs = sample(desc, compose_params(desc, p1, p2));
            if (!(lhs == rhs)) return false;
        }
    return true;
}

Eq3Solutions solve_eq3_direct(const UPoly& a, const UPoly& b, const Rat& c) {
    // g0' + b*d - a(x+c)*g0 - b(x+c) = 0, linear in [g0_0..g0_N, d].
    const int N = a.is_zero() ? b.degree() + 1 : std::max(b.degree() - a.degree(), 0);
    const UPoly shift{std::vector<Rat>{c, Rat(1)}}; // x + c
    const UPoly ac = a.compose(shift);
    const UPoly bc = b.compose(shift);

    const int rows = std::max({N + ac.degree(), N - 1, b.degree(), bc.degree()}) + 1;
    const int cols = N + 2;
    std::vector<std::vector<Rat>> A(static_cast<size_t>(std::max(rows, 1)),
                                    std::vector<Rat>(static_cast<size_t>(cols), Rat(0)));
    std::vector<Rat> rhs(A.size(), Rat(0));
    for (int j = 0; j <= N; ++j) {
        if (j >= 1) A[static_cast<size_t>(j - 1)][static_cast<size_t>(j)] += Rat(j); // g0'
        for (int i = 0; i <= ac.degree(); ++i)                                       // -a(x+c)*g0
            A[static_cast<size_t>(i + j)][static_cast<size_t>(j)] -= ac.coeff(i);
    }
    for (int k = 0; k <= b.degree(); ++k) // +b*d
        A[static_cast<size_t>(k)][static_cast<size_t>(N + 1)] += b.coeff(k);
    for (int k = 0; k <= bc.degree(); ++k) // = b(x+c)
        rhs[static_cast<size_t>(k)] = bc.coeff(k);

    Eq3Solutions out;
    out.g0_len = N + 1;
    out.sol = solve_linear(std::move(A), std::move(rhs));
    return out;
}

bool Eq3Solutions::only_identity() const {
    if (!sol.consistent || !sol.nullspace.empty()) return false;
    for (int i = 0; i < g0_len; ++i)
        if (sol.particular[static_cast<size_t>(i)] != Rat(0)) return false;
    return sol.particular[static_cast<size_t>(g0_len)] == Rat(1);
}

std::optional<std::pair<UPoly, UPoly>> Eq3Solutions::line_in_d() const {
    if (!sol.consistent || sol.nullspace.size() != 1) return std::nullopt;
    const std::vector<Rat>& dir = sol.nullspace.front();
    const Rat dd = dir[static_cast<size_t>(g0_len)];
    if (dd == Rat(0)) return std::nullopt; // d not free along the line
    // Normalize the parametrization to (g0, d) = base + d*slope with the
    // d-coordinate itself the parameter.
    const Rat d0 = sol.particular[static_cast<size_t>(g0_len)];
    std::vector<Rat> base(static_cast<size_t>(g0_len)), slope(static_cast<size_t>(g0_len));
    for (int i = 0; i < g0_len; ++i) {
        const Rat p = sol.particular[static_cast<size_t>(i)];
        const Rat v = dir[static_cast<size_t>(i)] / dd;
        base[static_cast<size_t>(i)] = p - d0 * v;
        slope[static_cast<size_t>(i)] = v;
    }
    return std::make_pair(UPoly(std::move(base)), UPoly(std::move(slope)));
}

std::optional<UPoly> Eq3Solutions::family_h() const {
    const auto line = line_in_d();
    if (!line) return std::nullopt;
    // g0(d) = base + d*slope must be (1-d)h, i.e. base = h and slope = -h.
    if (line->first != -line->second) return std::nullopt;
    return line->first;
}

bool theorem1_crosscheck(const UPoly& a, const UPoly& b) {
    if (a.is_zero()) throw std::invalid_argument("theorem1_crosscheck: requires a != 0");
    const bool simple = is_simple_shamsuddin(a, b);
    const bool eq3_trivial = solve_eq3_direct(a, b, Rat(0)).only_identity();
    return simple == eq3_trivial;
}

} // namespace isoder
