#include "lcs/actions.hpp"

#include <functional>
#include <sstream>

namespace lcs {

ActionPair make_action_pair(const CycleSetParams& P, const FinAbGroup& I, const Homomorphism& A,
                            const Homomorphism& B) {
    if (A.dom != I || A.cod != I || B.dom != I || B.cod != I)
        throw Error("GroupMismatch", "A and B must be endomorphisms of I");
    ActionPair ap{P, I, A, B, {}, {}};
    if (P.cyclic()) {
        ap.Apow.reserve(P.n);
        ap.Apow.push_back(hom_identity(I));
        for (i64 k = 1; k < P.n; ++k) ap.Apow.push_back(hom_compose(A, ap.Apow.back()));
        ap.lt.resize(P.n);
        for (i64 h = 0; h < P.n; ++h) ap.lt[h] = l_of(P, h);
    }
    return ap;
}

ActionPair make_action_pair(const CycleSetParams& P, const FinAbGroup& I, const Matrix& A, const Matrix& B) {
    return make_action_pair(P, I, make_hom(I, I, A), make_hom(I, I, B));
}

ActionPair trivial_action(const CycleSetParams& P, const FinAbGroup& I) {
    return make_action_pair(P, I, hom_identity(I), hom_zero(I, I));
}

Report validate_action_pair(const ActionPair& ap) {
    Report r;
    const auto& P = ap.P;
    if (!P.cyclic()) r.add("parameters (2,1,2) need the four-element action data");
    const Homomorphism Id = hom_identity(ap.I);
    if (!hom_equal(hom_power(ap.A, P.n), Id)) r.add("A^{p^eta} != Id");
    if (!hom_is_zero(hom_scale(P.n, ap.B))) r.add("p^eta B != 0");
    Homomorphism AB = hom_compose(ap.A, ap.B), BA = hom_compose(ap.B, ap.A);
    Homomorphism lhs = hom_sub(BA, AB);
    Homomorphism rhs = hom_add(hom_compose(BA, ap.B), hom_scale(P.pnu, AB));
    if (!hom_equal(lhs, rhs)) r.add("BA - AB != BAB + p^nu AB");
    return r;
}

const Homomorphism& A_pow(const ActionPair& ap, i64 k) {
    if (ap.Apow.empty()) throw Error("NotCyclic", "action powers need a cyclic (H, x)");
    return ap.Apow[mod(k, ap.P.n)];
}

Elem diamond(const ActionPair& ap, i64 h, const Elem& y) {
    if (ap.Apow.empty()) throw Error("NotCyclic", "diamond needs a cyclic (H, x)");
    return hom_apply(ap.Apow[ap.lt[ap.P.red(h)]], y);
}

Elem yleft(const ActionPair& ap, const Elem& y, i64 h) {
    return elem_scale(ap.I, ap.P.red(h), hom_apply(ap.B, y));
}

Elem triangleleft(const ActionPair& ap, const Elem& y, i64 h) {
    return diamond(ap, h, elem_sub(ap.I, y, yleft(ap, y, h)));
}

Elem triangleleft_closed(const ActionPair& ap, const Elem& y, i64 h) {
    Homomorphism M = hom_sub(ap.A, hom_compose(ap.A, ap.B));
    return hom_apply(hom_power(M, l_of(ap.P, h)), y);
}

static i64 times_inverse(const CycleSetParams& P, i64 h) {
    for (i64 x = 0; x < P.n; ++x)
        if (h_times(P, h, x) == 0) return x;
    throw Error("InvalidParams", "no x-inverse");
}

Elem y_hat(const ActionPair& ap, const Elem& y, i64 h) {
    return diamond(ap, times_inverse(ap.P, h), triangleleft(ap, y, h));
}

namespace {
using DiamondFn = std::function<Elem(i64, const Elem&)>;
using YleftFn = std::function<Elem(const Elem&, i64)>;

Report verify_generic(const CycleSetParams& P, const FinAbGroup& I, const DiamondFn& dia, const YleftFn& yl) {
    Report r;
    const i64 n = P.n;
    if (n * I.order() > 1000000) throw Error("SizeGuardExceeded", "p^eta |I| > 10^6");
    std::vector<Elem> elems = enumerate_elements(I);
    std::vector<Elem> partners;
    if ((i64)elems.size() * (i64)elems.size() * n <= 2000000) {
        partners = elems;
    } else {
        for (size_t i = 0; i < I.rank(); ++i) {
            Elem e = elem_zero(I);
            e[i] = 1 % I.orders[i];
            partners.push_back(e);
        }
    }
    std::vector<i64> xinv(n);
    for (i64 h = 0; h < n; ++h) xinv[h] = times_inverse(P, h);
    auto tri = [&](const Elem& y, i64 h) { return dia(h, elem_sub(I, y, yl(y, h))); };
    auto hat = [&](const Elem& y, i64 h) { return dia(xinv[h], tri(y, h)); };
    auto say = [&](const char* what, i64 h, i64 hp) {
        std::ostringstream s;
        s << what << " (h=" << h << ", h'=" << hp << ")";
        r.add(s.str());
    };
    for (const Elem& y : elems) {
        if (tri(y, 0) != y) say("right action: y |> 0 != y", 0, 0);
        if (dia(0, y) != y) say("left action: 0 <> y != y", 0, 0);
        for (i64 h = 0; h < n; ++h) {
            Elem th = tri(y, h), dh = dia(h, y), yh = hat(y, h);
            if (!elem_is_zero(hat(elem_zero(I), h))) say("hat map: 0^h != 0", h, 0);
            for (const Elem& z : partners) {
                if (tri(elem_add(I, y, z), h) != elem_add(I, th, tri(z, h))) say("right action: |> not additive", h, 0);
                if (dia(h, elem_add(I, y, z)) != elem_add(I, dh, dia(h, z))) say("left action: <> not additive", h, 0);
            }
            for (i64 hp = 0; hp < n; ++hp) {
                if (tri(y, h_times(P, h, hp)) != tri(th, hp)) say("right action: y |> (h x h') != (y |> h) |> h'", h, hp);
                if (dia(h_times(P, hp, h), y) != dia(h, dia(hp, y))) say("left action: (h' x h) <> y != h <> (h' <> y)", h, hp);
                if (elem_add(I, hat(y, P.red(h + hp)), y) != elem_add(I, yh, hat(y, hp)))
                    say("hat map: y^{h+h'} + y != y^h + y^{h'}", h, hp);
            }
            if (r.violations.size() >= 16) return r;
        }
    }
    return r;
}
}  // namespace

Report verify_action_axioms(const ActionPair& ap) {
    return verify_generic(
        ap.P, ap.I, [&](i64 h, const Elem& y) { return diamond(ap, h, y); },
        [&](const Elem& y, i64 h) { return yleft(ap, y, h); });
}

int classify_commuting_pair(const ActionPair& ap) {
    if (!hom_equal(hom_compose(ap.A, ap.B), hom_compose(ap.B, ap.A)))
        throw Error("NotCommuting", "A and B do not commute");
    const auto& B = ap.B;
    if (hom_is_zero(B)) return 1;
    Homomorphism B2 = hom_compose(B, B);
    if (hom_is_zero(B2)) return hom_is_zero(hom_scale(ap.P.pnu, B)) ? 2 : 0;
    if (hom_is_zero(hom_scale(ap.P.n, B)) && hom_is_zero(hom_compose(B2, B)) &&
        hom_is_zero(hom_add(B2, hom_scale(ap.P.pnu, B))))
        return 3;
    return 0;
}

int cyclic_case_by_valuation(const CycleSetParams& P, i64 n, i64 b) {
    b = mod(b, n);
    if (b == 0) return 1;
    const i64 p = P.p;
    int r = valuation(n, p);
    i64 c = n / ipow(p, r);
    int s = valuation(b, p);
    i64 d = b / ipow(p, s);
    bool cd = d % c == 0;
    if (s < r && r <= std::min(P.nu + s, 2 * s) && cd) return 2;
    if (s == P.nu && 2 * P.nu < r && r <= P.eta + P.nu && cd && (d + 1) % ipow(p, r - 2 * P.nu) == 0) return 3;
    return 0;
}

std::vector<CyclicActionCandidate> enumerate_action_pairs_cyclic(const CycleSetParams& P, i64 n) {
    if (n < 1) throw Error("InvalidOrder", "n must be positive");
    if (P.n * n > 1000000) throw Error("SizeGuardExceeded", "p^eta |I| > 10^6");
    std::vector<CyclicActionCandidate> out;
    for (i64 a = 0; a < n; ++a) {
        if (gcd64(a, n) != 1 && n > 1) continue;
        i64 x = 1 % n;
        for (i64 k = 0; k < P.n; ++k) x = mulmod(x, a, n);
        if (x != 1 % n) continue;
        for (i64 b = 0; b < n; ++b) {
            if (mulmod(P.n, b, n) != 0) continue;
            // commuting scalars: BA - AB = 0, so need ab(b + p^nu) = 0
            if (mulmod(mulmod(a, b, n), mod(b + P.pnu, n), n) != 0) continue;
            out.push_back({a, b, cyclic_case_by_valuation(P, n, b)});
        }
    }
    return out;
}

// ------------------------------------------------------------ (p,nu,eta) = (2,1,2)

Report validate_quad_action(const QuadActionData& q) {
    if (!(q.P.p == 2 && q.P.nu == 1 && q.P.eta == 2)) throw Error("WrongParams", "needs (p,nu,eta) = (2,1,2)");
    Report r;
    const Homomorphism Id = hom_identity(q.I);
    auto sq = [](const Homomorphism& X) { return hom_compose(X, X); };
    const auto &A1 = q.A1, &A2 = q.A2, &B = q.B;
    Homomorphism A12 = hom_compose(A1, A2);
    Homomorphism T1 = hom_sub(A1, hom_compose(A1, B));
    Homomorphism T2 = hom_sub(A2, hom_scale(2, hom_compose(A2, B)));
    Homomorphism T3 = hom_sub(A12, hom_scale(3, hom_compose(A12, B)));
    if (!hom_is_zero(hom_scale(4, B))) r.add("4B != 0");
    if (!hom_equal(sq(A1), Id)) r.add("A1^2 != Id");
    if (!hom_equal(sq(A2), Id)) r.add("A2^2 != Id");
    if (!hom_equal(sq(T1), Id)) r.add("(A1 - A1B)^2 != Id");
    if (!hom_equal(sq(T2), Id)) r.add("(A2 - 2A2B)^2 != Id");
    if (!hom_equal(sq(T3), Id)) r.add("(A1A2 - 3A1A2B)^2 != Id");
    if (!hom_equal(A12, hom_compose(A2, A1))) r.add("A1A2 != A2A1");
    if (!hom_equal(hom_compose(T1, T2), T3)) r.add("(A1 - A1B)(A2 - 2A2B) != A1A2 - 3A1A2B");
    if (!hom_equal(hom_compose(T2, T1), T3)) r.add("(A2 - 2A2B)(A1 - A1B) != A1A2 - 3A1A2B");
    return r;
}

Elem quad_diamond(const QuadActionData& q, i64 h, const Elem& y) {
    switch (mod(h, 4)) {
        case 0: return y;
        case 1: return hom_apply(q.A1, y);
        case 2: return hom_apply(q.A2, y);
        default: return hom_apply(q.A1, hom_apply(q.A2, y));
    }
}

Report verify_quad_action_axioms(const QuadActionData& q) {
    return verify_generic(
        q.P, q.I, [&](i64 h, const Elem& y) { return quad_diamond(q, h, y); },
        [&](const Elem& y, i64 h) { return elem_scale(q.I, mod(h, 4), hom_apply(q.B, y)); });
}

}  // namespace lcs
