#include "lcs/extensions.hpp"

#include <sstream>

#include "json.hpp"

namespace lcs {

i64 ExtGuard::max_order = 10000;
i64 EquivGuard::limit = 1000000;

namespace {

std::string at3(i64 a, i64 b, i64 c) {
    std::ostringstream s;
    s << "(" << a << "," << b << "," << c << ")";
    return s.str();
}

i64 elem_index(const FinAbGroup& I, const Elem& y) {
    i64 k = 0;
    for (size_t i = 0; i < I.rank(); ++i) k = k * I.orders[i] + y[i];
    return k;
}

Elem elem_at(const FinAbGroup& I, i64 k) {
    Elem y(I.rank());
    for (size_t i = I.rank(); i-- > 0;) {
        y[i] = k % I.orders[i];
        k /= I.orders[i];
    }
    return y;
}

void same_action(const ExtensionData& a, const ExtensionData& b) {
    const auto &p = a.ap.P, &q = b.ap.P;
    if (p.p != q.p || p.nu != q.nu || p.eta != q.eta || a.ap.I != b.ap.I || a.ap.A.m != b.ap.A.m || a.ap.B.m != b.ap.B.m)
        throw Error("ActionMismatch", "extensions use different action pairs");
}

}  // namespace

ExtensionData extension_from_cocycle(const ActionPair& ap, const TwoCochain& c) {
    return {ap, c.beta, cochain_scale(-1, c.f), std::nullopt};
}

ExtensionData extension_from_standard(const ActionPair& ap, const StandardCocycle& sc) {
    ExtensionData E = extension_from_cocycle(ap, sc.c);
    E.params = sc.params;
    return E;
}

ExtElem ext_add(const ExtensionData& E, const ExtElem& a, const ExtElem& b) {
    const auto& I = E.ap.I;
    Elem y = elem_add(I, elem_add(I, a.y, b.y), E.beta.at({a.h, b.h}));
    return {y, E.ap.P.red(a.h + b.h)};
}

ExtElem ext_dot(const ExtensionData& E, const ExtElem& a, const ExtElem& b) {
    const auto& ap = E.ap;
    const auto& I = ap.I;
    i64 hh = h_dot(ap.P, a.h, b.h);
    Elem y = elem_add(I, diamond(ap, a.h, b.y), E.f.at({a.h, b.h}));
    y = elem_add(I, y, yleft(ap, diamond(ap, a.h, a.y), hh));
    return {y, hh};
}

i64 ext_index(const ExtensionData& E, const ExtElem& x) { return x.h * E.ap.I.order() + elem_index(E.ap.I, x.y); }

ExtElem ext_element(const ExtensionData& E, i64 idx) {
    i64 m = E.ap.I.order();
    return {elem_at(E.ap.I, idx % m), idx / m};
}

FiniteCycleSetTable build_extension(const ExtensionData& E) {
    const i64 N = E.ap.I.order() * E.ap.P.n;
    if (N > ExtGuard::max_order) throw Error("SizeGuardExceeded", "extension of order " + std::to_string(N));
    std::vector<ExtElem> el(N);
    for (i64 i = 0; i < N; ++i) el[i] = ext_element(E, i);
    FiniteCycleSetTable T;
    T.order = (int)N;
    T.add.resize((size_t)N * N);
    T.dot.resize((size_t)N * N);
    for (i64 a = 0; a < N; ++a)
        for (i64 b = 0; b < N; ++b) {
            T.add[a * N + b] = (int)ext_index(E, ext_add(E, el[a], el[b]));
            T.dot[a * N + b] = (int)ext_index(E, ext_dot(E, el[a], el[b]));
        }
    return T;
}

FiniteCycleSetTable build_extension(const ActionPair& ap, const TwoCochain& c) {
    if (!is_2cocycle(c, ap)) throw Error("NotACocycle", "(beta, f) is not a 2-cocycle");
    return build_extension(extension_from_cocycle(ap, c));
}

Report verify_extension_conditions(const ExtensionData& E) {
    const auto& ap = E.ap;
    const auto& P = ap.P;
    const auto& I = ap.I;
    const i64 n = P.n;
    if (n * n * n > 10000000) throw Error("SizeGuardExceeded", "p^{3 eta} > 10^7");
    Report rep = verify_action_axioms(ap);
    const Cochain &be = E.beta, &f = E.f;
    const bool b0 = hom_is_zero(ap.B);
    for (i64 h = 0; h < n; ++h) {
        if (!elem_is_zero(be.at({0, h})) || !elem_is_zero(be.at({h, 0}))) rep.add("beta not normalized at h=" + std::to_string(h));
        if (!elem_is_zero(f.at({0, h})) || !elem_is_zero(f.at({h, 0}))) rep.add("f not normalized at h=" + std::to_string(h));
    }
    for (i64 a = 0; a < n; ++a)
        for (i64 b = 0; b < n; ++b) {
            if (be.at({a, b}) != be.at({b, a})) rep.add("beta not symmetric at " + at3(a, b, -1));
            i64 ab = h_dot(P, a, b), apb = P.red(a + b);
            for (i64 c = 0; c < n; ++c) {
                i64 ac = h_dot(P, a, c);
                // additive cocycle
                Elem l0 = elem_add(I, be.at({a, b}), be.at({apb, c}));
                Elem r0 = elem_add(I, be.at({b, c}), be.at({a, P.red(b + c)}));
                if (l0 != r0) rep.add("beta cocycle fails at " + at3(a, b, c));
                // dot distributes over the sum
                Elem l4 = elem_add(I, diamond(ap, a, be.at({b, c})), f.at({a, P.red(b + c)}));
                Elem r4 = elem_add(I, elem_add(I, f.at({a, b}), f.at({a, c})), be.at({ab, ac}));
                if (l4 != r4) rep.add("dot additivity fails at " + at3(a, b, c));
                // (a+b).c = (a.b).(a.c)
                Elem l5 = elem_add(I, f.at({apb, c}), yleft(ap, diamond(ap, apb, be.at({a, b})), h_dot(P, apb, c)));
                Elem r5 = elem_add(I, diamond(ap, ab, f.at({a, c})), f.at({ab, ac}));
                Elem r5y = yleft(ap, diamond(ap, ab, f.at({a, b})), h_dot(P, ab, ac));
                bool full = l5 == elem_add(I, r5, r5y);
                if (!full) rep.add("sum-dot condition fails at " + at3(a, b, c));
                if (b0 && full != (f.at({apb, c}) == r5))
                    throw Error("RouteDisagreement", "reduced and full sum-dot condition disagree");
            }
        }
    return rep;
}

Report check_morphisms(const ExtensionData& E, const FiniteCycleSetTable& T) {
    Report rep;
    const auto& I = E.ap.I;
    const i64 m = I.order(), n = E.ap.P.n;
    if ((i64)T.order != m * n) rep.add("extension has the wrong order");
    // iota(y) = index of (y,0) = y; I is trivial so y.y' = y'
    for (i64 y = 0; y < m; ++y)
        for (i64 yp = 0; yp < m; ++yp) {
            i64 s = elem_index(I, elem_add(I, elem_at(I, y), elem_at(I, yp)));
            if (T.sum((int)y, (int)yp) != s) rep.add("iota not additive");
            if (T.prod((int)y, (int)yp) != yp) rep.add("iota not multiplicative");
        }
    for (int a = 0; a < T.order; ++a)
        for (int b = 0; b < T.order; ++b) {
            i64 ha = a / m, hb = b / m;
            if (T.sum(a, b) / m != E.ap.P.red(ha + hb)) rep.add("pi not additive");
            if (T.prod(a, b) / m != h_dot(E.ap.P, ha, hb)) rep.add("pi not multiplicative");
        }
    return rep;
}

bool socle_inclusion(const ExtensionData& E, const FiniteCycleSetTable& T) {
    std::vector<int> soc = socle(T);
    std::vector<char> in(T.order, 0);
    for (int x : soc) in[x] = 1;
    for (i64 y = 0; y < E.ap.I.order(); ++y)
        if (!in[y]) return false;
    return true;
}

bool is_equivalence(const ExtensionData& E1, const ExtensionData& E2, const Cochain& phi) {
    const auto& ap = E1.ap;
    const auto& P = ap.P;
    const auto& I = ap.I;
    if (!elem_is_zero(phi.v[0])) return false;
    for (i64 h = 0; h < P.n; ++h)
        for (i64 hp = 0; hp < P.n; ++hp) {
            Elem l = elem_add(I, elem_sub(I, phi.v[h], phi.v[P.red(h + hp)]), phi.v[hp]);
            if (l != elem_sub(I, E1.beta.at({h, hp}), E2.beta.at({h, hp}))) return false;
            i64 hh = h_dot(P, h, hp);
            Elem a = elem_add(I, phi.v[hh], E1.f.at({h, hp}));
            Elem b = elem_add(I, diamond(ap, h, phi.v[hp]), E2.f.at({h, hp}));
            b = elem_add(I, b, yleft(ap, diamond(ap, h, phi.v[h]), hh));
            if (a != b) return false;
        }
    return true;
}

std::optional<Cochain> equivalence_exhaustive(const ExtensionData& E1, const ExtensionData& E2) {
    same_action(E1, E2);
    const auto& P = E1.ap.P;
    const auto& I = E1.ap.I;
    const i64 m = I.order();
    __int128 total = 1;
    for (i64 i = 1; i < P.n; ++i) {
        total *= m;
        if (total > EquivGuard::limit) throw Error("SizeGuardExceeded", "|I|^{p^eta-1} > guard");
    }
    Cochain phi = cochain_zero(P, I, 0, 1);
    std::vector<i64> idx(P.n, 0);
    for (i64 it = 0; it < (i64)total; ++it) {
        for (i64 h = 1; h < P.n; ++h) phi.v[h] = elem_at(I, idx[h]);
        if (is_equivalence(E1, E2, phi)) return phi;
        for (i64 h = P.n - 1; h >= 1; --h) {
            if (++idx[h] < m) break;
            idx[h] = 0;
        }
    }
    return std::nullopt;
}

std::optional<Cochain> are_equivalent(const ExtensionData& E1, const ExtensionData& E2) {
    same_action(E1, E2);
    const auto& ap = E1.ap;
    const auto& P = ap.P;
    const auto& I = ap.I;
    bool fallback_ok = true;
    {
        __int128 total = 1;
        for (i64 i = 1; i < P.n && fallback_ok; ++i) {
            total *= I.order();
            fallback_ok = total <= EquivGuard::limit;
        }
    }
    std::optional<Cochain> primary;
    bool have_primary = E1.params && E2.params;
    if (have_primary) {
        CocycleParams d{elem_sub(I, E1.params->f0, E2.params->f0), elem_sub(I, E1.params->gamma, E2.params->gamma)};
        if (auto t0 = is_coboundary(ap, d)) {
            for (i64 sgn : {1, -1}) {
                Cochain phi = linear_one_cochain(P, I, elem_scale(I, sgn, *t0));
                if (is_equivalence(E1, E2, phi)) {
                    primary = phi;
                    break;
                }
            }
            if (!primary) throw Error("RouteDisagreement", "coboundary witness does not give an equivalence");
        }
    }
    if (!fallback_ok) {
        if (!have_primary) throw Error("SizeGuardExceeded", "|I|^{p^eta-1} > guard");
        return primary;
    }
    std::optional<Cochain> ex = equivalence_exhaustive(E1, E2);
    if (have_primary && primary.has_value() != ex.has_value())
        throw Error("RouteDisagreement", "coboundary route and exhaustive search disagree");
    return have_primary ? primary : ex;
}

std::string extension_json(const ExtensionData& E, const FiniteCycleSetTable& T) {
    nlohmann::ordered_json j;
    j["p"] = E.ap.P.p;
    j["nu"] = E.ap.P.nu;
    j["eta"] = E.ap.P.eta;
    j["group"] = group_literal(E.ap.I);
    j["A"] = E.ap.A.m;
    j["B"] = E.ap.B.m;
    if (E.params) {
        j["f0"] = E.params->f0;
        j["gamma"] = E.params->gamma;
    }
    j["order"] = T.order;
    j["add"] = T.add;
    j["dot"] = T.dot;
    return j.dump();
}

}  // namespace lcs
