#include "isoder/automorphism.hpp"

#include <stdexcept>

namespace isoder {

namespace {

void validate_letter(const Letter& L) {
    if (const auto* A = std::get_if<Affine>(&L)) {
        if (A->m[0] * A->m[3] - A->m[1] * A->m[2] == Rat(0))
            throw std::invalid_argument("Automorphism: affine letter has singular linear part");
    } else if (const auto* E = std::get_if<ElemY>(&L)) {
        if (E->beta == Rat(0)) throw std::invalid_argument("Automorphism: elemY letter needs beta != 0");
    } else {
        if (std::get<ElemX>(L).alpha == Rat(0))
            throw std::invalid_argument("Automorphism: elemX letter needs alpha != 0");
    }
}

RawEndo letter_endo(const Letter& L) {
    const BPoly X = BPoly::x(), Y = BPoly::y();
    if (const auto* A = std::get_if<Affine>(&L))
        return {X * A->m[0] + Y * A->m[1] + BPoly(A->v[0]),
                X * A->m[2] + Y * A->m[3] + BPoly(A->v[1])};
    if (const auto* E = std::get_if<ElemY>(&L))
        return {X, BPoly::from_x(E->p) + Y * E->beta};
    const auto& E = std::get<ElemX>(L);
    return {BPoly::from_y(E.q) + X * E.alpha, Y};
}

Letter invert_letter(const Letter& L) {
    if (const auto* A = std::get_if<Affine>(&L)) {
        const Rat det = A->m[0] * A->m[3] - A->m[1] * A->m[2];
        const std::array<Rat, 4> inv = {A->m[3] / det, -A->m[1] / det,
                                        -A->m[2] / det, A->m[0] / det};
        return Affine{inv, {-(inv[0] * A->v[0] + inv[1] * A->v[1]),
                            -(inv[2] * A->v[0] + inv[3] * A->v[1])}};
    }
    if (const auto* E = std::get_if<ElemY>(&L))
        return ElemY{E->p * (Rat(-1) / E->beta), Rat(1) / E->beta};
    const auto& E = std::get<ElemX>(L);
    return ElemX{E.q * (Rat(-1) / E.alpha), Rat(1) / E.alpha};
}

} // namespace

Automorphism::Automorphism(std::vector<Letter> word) : word_(std::move(word)) {
    for (const Letter& L : word_) validate_letter(L);
}

RawEndo expand(const Automorphism& rho) {
    RawEndo cur{BPoly::x(), BPoly::y()};
    for (const Letter& L : rho.word()) cur = compose_raw(cur, letter_endo(L));
    return cur;
}

BPoly apply(const RawEndo& e, const BPoly& h) { return h.substitute(e.f, e.g); }

BPoly apply(const Automorphism& rho, const BPoly& h) { return apply(expand(rho), h); }

RawEndo compose_raw(const RawEndo& e1, const RawEndo& e2) {
    return {apply(e1, e2.f), apply(e1, e2.g)};
}

Automorphism compose(const Automorphism& rho1, const Automorphism& rho2) {
    std::vector<Letter> w = rho1.word();
    w.insert(w.end(), rho2.word().begin(), rho2.word().end());
    return Automorphism(std::move(w));
}

Automorphism invert(const Automorphism& rho) {
    std::vector<Letter> w;
    w.reserve(rho.word().size());
    for (auto it = rho.word().rbegin(); it != rho.word().rend(); ++it)
        w.push_back(invert_letter(*it));
    return Automorphism(std::move(w));
}

BPoly jacobian_det(const RawEndo& e) {
    return e.f.partial_x() * e.g.partial_y() - e.f.partial_y() * e.g.partial_x();
}

bool commutes(const RawEndo& e, const Derivation& D) {
    return apply(e, D.a) == apply(D, e.f) && apply(e, D.b) == apply(D, e.g);
}

bool commutes(const Automorphism& rho, const Derivation& D) {
    return commutes(expand(rho), D);
}

Derivation conjugate(const Automorphism& rho, const Derivation& D) {
    // (rho D rho^-1)(z) for z = x, y. rho^-1(x) and rho^-1(y) are the
    // coordinates of the inverse's expansion.
    const RawEndo e = expand(rho);
    const RawEndo einv = expand(invert(rho));
    return {apply(e, apply(D, einv.f)), apply(e, apply(D, einv.g))};
}

bool fixes_point(const RawEndo& e, const Rat& x0, const Rat& y0) {
    return e.f.eval(x0, y0) == x0 && e.g.eval(x0, y0) == y0;
}

bool fixes_point(const Automorphism& rho, const Rat& x0, const Rat& y0) {
    return fixes_point(expand(rho), x0, y0);
}

} // namespace isoder
