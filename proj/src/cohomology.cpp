#include "lcs/cohomology.hpp"

#include "json.hpp"
#include <sstream>

namespace lcs {

namespace {

void need_cyclic(const CycleSetParams& P) {
    if (!P.cyclic()) throw Error("NotCyclic", "cohomology needs a cyclic (H, x)");
}

std::string where(std::initializer_list<i64> xs) {
    std::ostringstream s;
    s << "(";
    bool first = true;
    for (i64 x : xs) {
        s << (first ? "" : ",") << x;
        first = false;
    }
    s << ")";
    return s.str();
}

// A^{k} applied to y, any integer k
Elem Ak(const ActionPair& ap, i64 k, const Elem& y) { return hom_apply(A_pow(ap, k), y); }
Elem Bv(const ActionPair& ap, const Elem& y) { return hom_apply(ap.B, y); }

}  // namespace

Cochain beta_k(const CycleSetParams& P, const FinAbGroup& I, const Elem& gamma, i64 k) {
    if (k < 1 || k >= P.n) throw Error("IndexOutOfRange", "need 1 <= k < p^eta");
    Cochain c = cochain_zero(P, I, 0, 2);
    Elem g = elem_reduce(I, gamma), mg = elem_neg(I, gamma);
    for (i64 i = 1; i < P.n; ++i)
        for (i64 j = 1; j < P.n; ++j) {
            if (i <= k && j <= k && k < i + j) c.at({i, j}) = g;
            else if (i > k && j > k && i + j - P.n <= k) c.at({i, j}) = mg;
        }
    return c;
}

Cochain alpha1(const CycleSetParams& P, const FinAbGroup& I, const Elem& gamma) {
    Cochain c = cochain_zero(P, I, 0, 2);
    Elem g = elem_reduce(I, gamma);
    for (i64 i = 1; i < P.n; ++i)
        for (i64 j = P.n - i; j < P.n; ++j) c.at({i, j}) = g;
    return c;
}

Cochain chi_k(const CycleSetParams& P, const FinAbGroup& I, const Elem& gamma, i64 k) {
    if (k < 1 || k >= P.n) throw Error("IndexOutOfRange", "need 1 <= k < p^eta");
    Cochain c = cochain_zero(P, I, 0, 1);
    c.v[k] = elem_reduce(I, gamma);
    return c;
}

NormalizedBeta normalize_beta(const Cochain& beta, const CycleSetParams& P) {
    if (beta.r != 0 || beta.s != 2) throw Error("DegreeOutOfRange", "expects a (0,2) cochain");
    const FinAbGroup& I = beta.I;
    if (!is_normalized(beta) || !is_shuffle_compliant(beta) || !cochain_is_zero(del_v(beta)))
        throw Error("NotVerticalCocycle", "beta is not a normalized vertical cocycle");
    NormalizedBeta out;
    out.t = cochain_zero(P, I, 0, 1);
    // t(1) = 0, t(j+1) = t(j) - beta(1,j) for j < p^eta - 1; t(p^eta) = 0 fixes gamma
    Elem acc = elem_zero(I);
    for (i64 j = 1; j < P.n; ++j) {
        out.t.v[j] = elem_neg(I, acc);
        acc = elem_add(I, acc, beta.at({1, j}));
    }
    out.gamma = acc;
    return out;
}

Elem Gamma_fn(const ActionPair& ap, const Elem& gamma, i64 b) {
    const auto& P = ap.P;
    b = P.red(b);
    auto a1 = [&](i64 i, i64 j) { return P.red(i) + P.red(j) >= P.n ? gamma : elem_zero(ap.I); };
    return elem_sub(ap.I, hom_apply(ap.A, a1(b, 1)), a1(h_dot(P, 1, b), h_dot(P, 1, 1)));
}

Elem Gamma_closed(const ActionPair& ap, const Elem& gamma, i64 b) {
    const auto& P = ap.P;
    b = P.red(b);
    if (b == P.n - 1) return elem_sub(ap.I, hom_apply(ap.A, gamma), gamma);
    // the boundary value r(b) = p^nu - 1 only occurs at b = p^eta - 1
    if (h_dot(P, 1, b) >= P.pnu - 1) return elem_neg(ap.I, gamma);
    return elem_zero(ap.I);
}

bool is_periodic(const ActionPair& ap, const CocycleParams& c) {
    const auto& P = ap.P;
    const auto& I = ap.I;
    Elem V = elem_add(I, elem_scale(I, P.n - P.pnu + 1, c.gamma), elem_neg(I, hom_apply(ap.A, c.gamma)));
    return elem_scale(I, P.n, c.f0) == V;
}

std::vector<Elem> f_tilde_table(const ActionPair& ap, const CocycleParams& c) {
    const auto& P = ap.P;
    const auto& I = ap.I;
    need_cyclic(P);
    if (!is_periodic(ap, c)) throw Error("NotPeriodic", "p^eta f0 != (p^eta - p^nu + 1 - A) gamma");
    const i64 n = P.n, q = n / P.pnu;  // q = p^{eta-nu}
    // recursive route, also gives f^(p^eta)
    std::vector<Elem> rec(n + 1);
    rec[0] = elem_zero(I);
    for (i64 h = 0; h < n; ++h) rec[h + 1] = elem_add(I, elem_add(I, rec[h], c.f0), Gamma_fn(ap, c.gamma, h));
    if (!elem_is_zero(rec[n])) throw Error("RouteDisagreement", "f^(p^eta) != 0 for periodic params");
    Elem d = elem_sub(I, c.f0, c.gamma);
    std::vector<Elem> tab(n);
    for (i64 i = 0; i < n; ++i) {
        i64 s = i / q, t = i % q;
        i64 k = (t * P.pnu <= i) ? s : s + 1;
        tab[i] = elem_add(I, elem_scale(I, i, d), elem_scale(I, k, c.gamma));
        if (tab[i] != rec[i]) throw Error("RouteDisagreement", "closed form of f~ disagrees at " + std::to_string(i));
    }
    Elem Am1g = elem_sub(I, hom_apply(ap.A, c.gamma), c.gamma);
    for (i64 j = 0; j * q < n; ++j) {
        Elem v = elem_add(I, elem_scale(I, j * q, d), elem_scale(I, j, c.gamma));
        v = elem_add(I, v, elem_scale(I, j / P.pnu, Am1g));
        if (v != tab[j * q]) throw Error("RouteDisagreement", "f~ on multiples of p^{eta-nu} disagrees");
    }
    for (i64 t = 1; t <= q && t < n; ++t)
        if (tab[t] != elem_add(I, elem_scale(I, t, d), c.gamma))
            throw Error("RouteDisagreement", "f~(t) != t(f0-gamma)+gamma");
    return tab;
}

Elem f_tilde(const ActionPair& ap, const CocycleParams& c, i64 i) { return f_tilde_table(ap, c)[ap.P.red(i)]; }

i64 S_defining(const CycleSetParams& P) {
    const i64 p = P.p, n = P.n, pn = P.pnu;
    __int128 s = -((__int128)n + pn) / 2;  // exact: both even for p odd, and p = 2 has eta, nu >= 1
    if (2 * P.nu == P.eta && (p == 2 || p == 3)) {
        __int128 m = pn + 1;
        s += m * (m - 1) * (m - 2) / 6 * pn;
    }
    return (i64)(((s % n) + n) % n);
}

i64 S_value(const CycleSetParams& P) {
    i64 s = S_defining(P);
    if (2 * P.nu == P.eta && P.p == 2) {
        i64 simple = P.red(-ipow(2, P.nu - 1));
        if (simple != s) throw Error("RouteDisagreement", "S for p=2, eta=2nu");
    }
    if (2 * P.nu == P.eta && P.p == 3) {
        i64 simple = P.red(-(P.n + P.pnu) / 2 + P.n / 3);
        if (simple != s) throw Error("RouteDisagreement", "S for p=3, eta=2nu");
    }
    return s;
}

PolyData poly_data(const ActionPair& ap) {
    const auto& P = ap.P;
    const auto& I = ap.I;
    need_cyclic(P);
    PolyData d;
    d.P_A = hom_zero(I, I);
    d.Q_A = hom_scalar(I, P.pnu);
    d.R_A = hom_zero(I, I);
    const i64 w = ipow(P.p, 2 * P.nu - P.eta);
    for (i64 j = 0; j < P.n; ++j) {
        const Homomorphism& Aj = A_pow(ap, j);
        d.P_A = hom_add(d.P_A, hom_scale(j * P.pnu + 1, Aj));
        d.Q_A = hom_add(d.Q_A, hom_scale(j * w, Aj));
        if (j > 0) {
            i64 e = P.red(j - mulmod(P.red(choose2(j + 1)), P.pnu, P.n));
            d.R_A = hom_add(d.R_A, hom_scale(j, A_pow(ap, e)));
        }
    }
    d.S = S_value(P);
    return d;
}

static Homomorphism V_of(const ActionPair& ap) {
    const auto& P = ap.P;
    return hom_sub(hom_scalar(ap.I, P.n - P.pnu + 1), ap.A);
}

FGMaps maps_FG_B0(const ActionPair& ap) {
    const auto& P = ap.P;
    const auto& I = ap.I;
    need_cyclic(P);
    PolyData d = poly_data(ap);
    Homomorphism V = V_of(ap);
    FGMaps m;
    m.F1 = hom_hcat(hom_scalar(I, P.n), hom_scale(-1, V));
    m.F2 = hom_hcat(d.P_A, hom_sub(d.Q_A, d.P_A));
    m.G = hom_vcat(V, hom_scalar(I, P.n));
    return m;
}

FGMaps maps_FG(const ActionPair& ap) {
    const auto& P = ap.P;
    const auto& I = ap.I;
    need_cyclic(P);
    PolyData d = poly_data(ap);
    Homomorphism V = V_of(ap);
    Homomorphism AB = hom_compose(ap.A, ap.B), BA = hom_compose(ap.B, ap.A);
    FGMaps m;
    m.F1 = hom_hcat(hom_scalar(I, P.n), hom_scale(-1, V));
    m.F2 = hom_hcat(hom_add(d.P_A, hom_compose(AB, d.R_A)),
                    hom_add(hom_sub(d.Q_A, d.P_A), hom_scale(d.S + 1, AB)));
    m.G = hom_vcat(hom_add(V, hom_scale(P.pnu - 1, BA)), hom_scalar(I, P.n));
    if (hom_is_zero(ap.B)) {
        FGMaps b0 = maps_FG_B0(ap);
        if (!hom_equal(b0.F1, m.F1) || !hom_equal(b0.F2, m.F2) || !hom_equal(b0.G, m.G))
            throw Error("RouteDisagreement", "B=0 variants of F, G differ");
    }
    return m;
}

Elem pack(const CocycleParams& c) {
    Elem y = c.f0;
    y.insert(y.end(), c.gamma.begin(), c.gamma.end());
    return y;
}

CocycleParams unpack(const FinAbGroup& I, const Elem& y) {
    size_t k = I.rank();
    if (y.size() != 2 * k) throw Error("ShapeMismatch", "expected an element of I^2");
    return {Elem(y.begin(), y.begin() + k), Elem(y.begin() + k, y.end())};
}

std::string admissibility_failure(const ActionPair& ap, const CocycleParams& c) {
    FGMaps m = maps_FG(ap);
    Elem y = pack(c);
    if (!elem_is_zero(hom_apply(m.F1, y))) return "F1";
    bool f2 = elem_is_zero(hom_apply(m.F2, y));
    // closed form: A^{-1}P(A)(f0-g) + A^{-1}Q(A)g + BR(A)f0 + (S+1)Bg = 0
    const auto& I = ap.I;
    PolyData d = poly_data(ap);
    Elem dg = elem_sub(I, c.f0, c.gamma);
    Elem t = Ak(ap, -1, elem_add(I, hom_apply(d.P_A, dg), hom_apply(d.Q_A, c.gamma)));
    t = elem_add(I, t, Bv(ap, hom_apply(d.R_A, c.f0)));
    t = elem_add(I, t, elem_scale(I, d.S + 1, Bv(ap, c.gamma)));
    if (elem_is_zero(t) != f2) throw Error("RouteDisagreement", "F2 and its closed form disagree");
    return f2 ? "" : "F2";
}

StandardCocycle construct_f(const ActionPair& ap, const CocycleParams& c) {
    const auto& P = ap.P;
    const auto& I = ap.I;
    need_cyclic(P);
    std::string bad = admissibility_failure(ap, c);
    if (!bad.empty()) throw Error("ParamsNotAdmissible", bad);
    std::vector<Elem> ft = f_tilde_table(ap, c);
    StandardCocycle sc;
    sc.params = {elem_reduce(I, c.f0), elem_reduce(I, c.gamma)};
    sc.yleft_zero = hom_is_zero(ap.B);
    sc.c.beta = alpha1(P, I, c.gamma);
    sc.c.f = cochain_zero(P, I, 1, 1);
    const i64 n = P.n;
    // T_k = sum_{l<k} A^l f~(b_l)
    std::vector<Elem> T(n);
    T[0] = elem_zero(I);
    for (i64 k = 0; k + 1 < n; ++k) T[k + 1] = elem_add(I, T[k], Ak(ap, k, ft[b_k(P, k)]));
    for (i64 cc = 0; cc < n; ++cc) {
        Elem S = elem_zero(I);  // sum_{j<k} A^{k-1-j} f~(j.c)
        for (i64 k = 0; k < n; ++k) {
            i64 h = times_power(P, 1, k);
            Elem v = S;
            if (!sc.yleft_zero) v = elem_add(I, v, elem_scale(I, h_dot(P, k, cc), Bv(ap, T[k])));
            sc.c.f.at({h, cc}) = v;
            S = elem_add(I, hom_apply(ap.A, S), ft[h_dot(P, k, cc)]);
        }
    }
    if (sc.c.f.at({1, 1}) != sc.params.f0) throw Error("RouteDisagreement", "f(1,1) != f0");
    return sc;
}

std::optional<Elem> is_coboundary(const ActionPair& ap, const CocycleParams& c) {
    std::string bad = admissibility_failure(ap, c);
    if (!bad.empty()) throw Error("ParamsNotAdmissible", bad);
    const auto& P = ap.P;
    const auto& I = ap.I;
    Homomorphism M = hom_add(V_of(ap), hom_scale(P.pnu - 1, hom_compose(ap.B, ap.A)));
    Elem f0 = elem_reduce(I, c.f0), g = elem_reduce(I, c.gamma);
    std::optional<Elem> found;
    for_each_element(I, [&](const Elem& t0) {
        if (found) return;
        if (hom_apply(M, t0) == f0 && elem_scale(I, P.n, t0) == g) found = t0;
    });
    return found;
}

Cochain linear_one_cochain(const CycleSetParams& P, const FinAbGroup& I, const Elem& t0) {
    Cochain t = cochain_zero(P, I, 0, 1);
    for (i64 j = 1; j < P.n; ++j) t.v[j] = elem_scale(I, j, t0);
    return t;
}

H2Result compute_H2(const ActionPair& ap) {
    need_cyclic(ap.P);
    Report v = validate_action_pair(ap);
    if (!v.ok()) throw Error("InvalidAction", v.violations.front());
    FGMaps m = maps_FG(ap);
    H2Result r;
    r.sq = subquotient(group_power(ap.I, 2), {m.F1, m.F2}, m.G);
    for (const Elem& y : r.sq.transversal) r.transversal.push_back(unpack(ap.I, y));
    return r;
}

std::string h2_json(const H2Result& r) {
    nlohmann::ordered_json j;
    j["invariant_factors"] = r.sq.invariant_factors;
    j["order"] = r.sq.order();
    j["transversal"] = nlohmann::ordered_json::array();
    for (const auto& c : r.transversal) j["transversal"].push_back({{"f0", c.f0}, {"gamma", c.gamma}});
    return j.dump();
}

// ------------------------------------------------------------------ identity sweeps

Report check_B_powers_gamma(const ActionPair& ap, const CocycleParams& c) {
    Report rep;
    const auto& P = ap.P;
    const auto& I = ap.I;
    Elem Bg = Bv(ap, c.gamma);
    for (i64 j = 0; j < P.n; ++j)
        if (Bv(ap, Ak(ap, j, c.gamma)) != elem_scale(I, 1 - j * P.pnu, Bg)) rep.add("BA^j gamma at j=" + std::to_string(j));
    return rep;
}

Report check_periodic_sum(const ActionPair& ap, const CocycleParams& c) {
    Report rep;
    const auto& P = ap.P;
    const auto& I = ap.I;
    auto ft = f_tilde_table(ap, c);
    PolyData d = poly_data(ap);
    Elem lhs = elem_zero(I);
    for (i64 j = 0; j < P.n; ++j) lhs = elem_add(I, lhs, Ak(ap, P.n - j, ft[h_dot(P, j, 1)]));
    Elem rhs = elem_add(I, hom_apply(d.P_A, elem_sub(I, c.f0, c.gamma)), hom_apply(d.Q_A, c.gamma));
    if (lhs != rhs) rep.add("sum A^{p^eta-j} f~(j.1) != P(A)(f0-g)+Q(A)g");
    return rep;
}

namespace {
// sum_{j<m} A^{e-j} f~(j.c)
Elem shifted_sum(const ActionPair& ap, const std::vector<Elem>& ft, i64 m, i64 e, i64 c) {
    Elem acc = elem_zero(ap.I);
    for (i64 j = 0; j < m; ++j) acc = elem_add(ap.I, acc, Ak(ap, e - j, ft[h_dot(ap.P, j, c)]));
    return acc;
}
}  // namespace

Report check_partial_sum_linear(const ActionPair& ap, const CocycleParams& c) {
    Report rep;
    const auto& P = ap.P;
    auto ft = f_tilde_table(ap, c);
    const i64 q = P.n / P.pnu;
    for (i64 s = 0; s <= P.pnu; ++s) {
        i64 m = s * q;
        Elem one = shifted_sum(ap, ft, m, m, 1);
        i64 lo = 0, hi = P.n;
        if (s == P.pnu) lo = -P.n, hi = 2 * P.n;
        for (i64 cc = lo; cc < hi; ++cc)
            if (shifted_sum(ap, ft, m, m, cc) != elem_scale(ap.I, cc, one)) rep.add("partial sum at (s,c)=" + where({s, cc}));
    }
    return rep;
}

Report check_full_sum_scaling(const ActionPair& ap, const CocycleParams& c) {
    Report rep;
    const auto& P = ap.P;
    auto ft = f_tilde_table(ap, c);
    Elem base = shifted_sum(ap, ft, P.n, P.n, 1);
    for (i64 M = 0; M < P.n; ++M)
        for (i64 cc = 0; cc < P.n; ++cc)
            if (shifted_sum(ap, ft, P.n, M, cc) != elem_scale(ap.I, h_dot(P, M, cc), base))
                rep.add("full sum at (M,c)=" + where({M, cc}));
    return rep;
}

Report check_l_sum_linear(const ActionPair& ap, const CocycleParams& c) {
    Report rep;
    const auto& P = ap.P;
    auto ft = f_tilde_table(ap, c);
    i64 L = l_of(P, P.n / P.pnu);
    Elem one = shifted_sum(ap, ft, L, L - 1, 1);
    for (i64 cc = 0; cc < P.n; ++cc)
        if (shifted_sum(ap, ft, L, L - 1, cc) != elem_scale(ap.I, cc, one)) rep.add("l-sum at c=" + std::to_string(cc));
    return rep;
}

Report check_R_and_S(const ActionPair& ap, const CocycleParams& c) {
    Report rep;
    const auto& P = ap.P;
    const auto& I = ap.I;
    auto ft = f_tilde_table(ap, c);
    PolyData d = poly_data(ap);
    Elem lhs = elem_zero(I);
    for (i64 l = 0; l < P.n; ++l) lhs = elem_add(I, lhs, Ak(ap, l, ft[b_k(P, l)]));
    lhs = Bv(ap, lhs);
    Elem rhs = elem_add(I, Bv(ap, hom_apply(d.R_A, c.f0)), elem_scale(I, d.S, Bv(ap, c.gamma)));
    if (lhs != rhs) rep.add("B sum A^l f~(b_l) != BR(A)f0 + SBg");
    return rep;
}

Report check_f_tilde_recursion(const ActionPair& ap, const CocycleParams& c) {
    Report rep;
    const auto& P = ap.P;
    const auto& I = ap.I;
    auto ft = f_tilde_table(ap, c);
    Cochain a1 = alpha1(P, I, c.gamma);
    for (i64 b = 0; b < P.n; ++b)
        for (i64 cc = 0; cc < P.n; ++cc) {
            Elem acc = elem_zero(I);
            for (i64 k = 0; k < P.n; ++k) {
                i64 h = times_power(P, 1, k);
                Elem rhs = elem_sub(I, Ak(ap, k, a1.at({b, cc})), a1.at({h_dot(P, h, b), h_dot(P, h, cc)}));
                if (acc != rhs) rep.add("f~ recursion at (k,b,c)=" + where({k, b, cc}));
                Elem term = elem_sub(I, ft[h_dot(P, k, P.red(b + cc))], ft[h_dot(P, k, b)]);
                term = elem_sub(I, term, ft[h_dot(P, k, cc)]);
                acc = elem_add(I, hom_apply(ap.A, acc), term);
            }
        }
    return rep;
}

Report check_necessary(const ActionPair& ap, const StandardCocycle& sc) {
    Report rep;
    const auto& P = ap.P;
    const auto& I = ap.I;
    const Cochain& f = sc.c.f;
    const Elem& g = sc.params.gamma;
    if (!is_periodic(ap, {f.at({1, 1}), g})) rep.add("p^eta f(1,1) != V gamma");
    auto ft = f_tilde_table(ap, sc.params);
    for (i64 cc = 0; cc < P.n; ++cc)
        if (f.at({1, cc}) != ft[cc]) rep.add("f(1,c) != f~(c) at c=" + std::to_string(cc));
    // full-circle sum with the +cBg term
    Elem T = elem_zero(I);
    for (i64 l = 0; l < P.n; ++l) T = elem_add(I, T, Ak(ap, l, f.at({1, b_k(P, l)})));
    for (i64 cc = 0; cc < P.n; ++cc) {
        Elem acc = elem_zero(I);
        for (i64 j = 0; j < P.n; ++j) acc = elem_add(I, acc, Ak(ap, P.n - 1 - j, f.at({1, h_dot(P, j, cc)})));
        acc = elem_add(I, acc, elem_scale(I, cc, Bv(ap, T)));
        acc = elem_add(I, acc, elem_scale(I, cc, Bv(ap, g)));
        if (!elem_is_zero(acc)) rep.add("full-circle sum at c=" + std::to_string(cc));
    }
    return rep;
}

Report check_BAB_relation(const ActionPair& ap) {
    Report rep;
    const auto& P = ap.P;
    const auto& B = ap.B;
    for (i64 l = 0; l < P.n; ++l)
        for (i64 lp = 0; lp < P.n; ++lp) {
            i64 M = L_of(P, l, lp);
            i64 b = times_power(P, 1, lp);
            const Homomorphism& AMl = A_pow(ap, M - l);
            Homomorphism BAB = hom_compose(B, hom_compose(AMl, B));
            Homomorphism AB = hom_compose(AMl, B), BA = hom_compose(B, AMl);
            i64 lb = h_dot(P, l, b);
            for (i64 cc = 0; cc < P.n; ++cc) {
                i64 Mc = h_dot(P, M, cc), lc = h_dot(P, l, cc);
                Homomorphism lhs = hom_add(hom_scale(mulmod(Mc, lb, P.n), BAB), hom_scale(lc, AB));
                if (!hom_equal(lhs, hom_scale(Mc, BA))) rep.add("BAB relation at (l,l',c)=" + where({l, lp, cc}));
            }
        }
    return rep;
}

Report check_b_shift(const CycleSetParams& P) {
    Report rep;
    for (i64 l = 0; l < P.n; ++l)
        for (i64 lp = 0; lp < P.n; ++lp) {
            i64 M = L_of(P, l, lp);
            i64 b = times_power(P, 1, lp);
            for (i64 j = -P.n; j < 2 * P.n; ++j) {
                i64 cj = h_dot(P, l - 1 - j, b);
                if (P.red(b_k(P, j) + cj) != b_k(P, M - l + j)) rep.add("b_j + c_j at (l,l',j)=" + where({l, lp, j}));
            }
        }
    return rep;
}

Report check_A_minus_AB_powers(const ActionPair& ap) {
    Report rep;
    const auto& P = ap.P;
    const auto& I = ap.I;
    Homomorphism T = hom_sub(ap.A, hom_compose(ap.A, ap.B));
    Homomorphism Tl = hom_identity(I);
    for (i64 l = 0; l < P.n; ++l) {
        const Homomorphism& Al = A_pow(ap, l);
        Homomorphism AlB = hom_compose(Al, ap.B);
        i64 coef = P.red(l + mulmod(P.red(choose2(l)), P.pnu, P.n));
        if (!hom_equal(Tl, hom_sub(Al, hom_scale(coef, AlB)))) rep.add("(A-AB)^l at l=" + std::to_string(l));
        if (!hom_equal(hom_compose(ap.B, Tl), hom_scale(1 + l * P.pnu, AlB))) rep.add("B(A-AB)^l at l=" + std::to_string(l));
        Tl = hom_compose(Tl, T);
    }
    if (!hom_equal(Tl, hom_identity(I))) rep.add("(A-AB)^{p^eta} != Id");
    return rep;
}

}  // namespace lcs
