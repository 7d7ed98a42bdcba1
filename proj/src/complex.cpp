#include "lcs/complex.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace lcs {

i64 OracleGuard::max_rows = 5000;

namespace {

constexpr int kMaxDeg = 4;

size_t tuple_count(i64 n, int d) {
    size_t t = 1;
    for (int i = 0; i < d; ++i) t *= (size_t)n;
    return t;
}

// h <- next tuple; false after the last one
bool next_tuple(std::vector<i64>& h, i64 n) {
    for (size_t i = h.size(); i-- > 0;) {
        if (++h[i] < n) return true;
        h[i] = 0;
    }
    return false;
}

void need_degree(int out) {
    if (out > kMaxDeg) throw Error("DegreeOutOfRange", "cochains of total degree > 4 are not supported");
}

i64 hsum(const CycleSetParams& P, const std::vector<i64>& h, int from, int to) {
    i64 s = 0;
    for (int i = from; i < to; ++i) s += h[i];
    return P.red(s);
}

}  // namespace

Cochain cochain_zero(const CycleSetParams& P, const FinAbGroup& I, int r, int s) {
    if (r < 0 || s < 1) throw Error("DegreeOutOfRange", "need r >= 0 and s >= 1");
    need_degree(r + s);
    Cochain c;
    c.r = r;
    c.s = s;
    c.n = P.n;
    c.I = I;
    c.v.assign(tuple_count(P.n, r + s), elem_zero(I));
    return c;
}

bool cochain_equal(const Cochain& a, const Cochain& b) {
    return a.r == b.r && a.s == b.s && a.n == b.n && a.I == b.I && a.v == b.v;
}

bool cochain_is_zero(const Cochain& c) {
    return std::all_of(c.v.begin(), c.v.end(), [](const Elem& e) { return elem_is_zero(e); });
}

Cochain cochain_add(const Cochain& a, const Cochain& b) {
    if (a.r != b.r || a.s != b.s || a.n != b.n || a.I != b.I) throw Error("GroupMismatch", "cochain shapes differ");
    Cochain c = a;
    for (size_t i = 0; i < c.v.size(); ++i) c.v[i] = elem_add(c.I, a.v[i], b.v[i]);
    return c;
}

Cochain cochain_scale(i64 k, const Cochain& a) {
    Cochain c = a;
    for (auto& e : c.v) e = elem_scale(c.I, k, e);
    return c;
}

bool is_normalized(const Cochain& c) {
    std::vector<i64> h(c.deg(), 0);
    do {
        bool has0 = std::find(h.begin(), h.end(), 0) != h.end();
        if (has0 && !elem_is_zero(c.at(h))) return false;
    } while (next_tuple(h, c.n));
    return true;
}

bool is_shuffle_compliant(const Cochain& c) {
    const int s = c.s, r = c.r;
    if (s < 2) return true;
    std::vector<int> perm(s);
    std::vector<i64> h(c.deg(), 0), g(c.deg());
    do {
        for (int l = 1; l < s; ++l) {
            Elem acc = elem_zero(c.I);
            std::iota(perm.begin(), perm.end(), 0);
            do {
                // sigma is a (l, s-l) shuffle
                bool ok = true;
                for (int i = 0; i + 1 < l && ok; ++i) ok = perm[i] < perm[i + 1];
                for (int i = l; i + 1 < s && ok; ++i) ok = perm[i] < perm[i + 1];
                if (!ok) continue;
                int inv = 0;
                for (int i = 0; i < s; ++i)
                    for (int j = i + 1; j < s; ++j) inv += perm[i] > perm[j];
                // position sigma(i) receives h_i
                for (int i = 0; i < r; ++i) g[i] = h[i];
                for (int i = 0; i < s; ++i) g[r + perm[i]] = h[r + i];
                Elem v = c.at(g);
                acc = (inv % 2) ? elem_sub(c.I, acc, v) : elem_add(c.I, acc, v);
            } while (std::next_permutation(perm.begin(), perm.end()));
            if (!elem_is_zero(acc)) return false;
        }
    } while (next_tuple(h, c.n));
    return true;
}

Cochain del_h(const Cochain& c, const ActionPair& ap) {
    const auto& P = ap.P;
    const int r = c.r, s = c.s, m = r + s + 1;
    need_degree(m);
    Cochain out = cochain_zero(P, c.I, r + 1, s);
    std::vector<i64> h(m, 0), g(m - 1);
    do {
        Elem acc = elem_zero(c.I);
        if (std::find(h.begin(), h.end(), 0) == h.end()) {
            for (int i = 1; i < m; ++i) g[i - 1] = h_dot(P, h[0], h[i]);
            acc = c.at(g);
            for (int j = 1; j <= r; ++j) {
                int k = 0;
                for (int i = 0; i < m; ++i) {
                    if (i == j - 1) {
                        g[k++] = P.red(h[i] + h[i + 1]);
                        ++i;
                    } else {
                        g[k++] = h[i];
                    }
                }
                const Elem& v = c.at(g);
                acc = (j % 2) ? elem_sub(c.I, acc, v) : elem_add(c.I, acc, v);
            }
            int k = 0;
            for (int i = 0; i < m; ++i)
                if (i != r) g[k++] = h[i];
            Elem v = diamond(ap, h_dot(P, hsum(P, h, 0, r), h[r]), c.at(g));
            acc = ((r + 1) % 2) ? elem_sub(c.I, acc, v) : elem_add(c.I, acc, v);
        }
        out.at(h) = acc;
    } while (next_tuple(h, P.n));
    return out;
}

Cochain del_v(const Cochain& c) {
    const int r = c.r, s = c.s, m = r + s + 1;
    need_degree(m);
    Cochain out = c;
    out.s = s + 1;
    out.v.assign(tuple_count(c.n, m), elem_zero(c.I));
    std::vector<i64> h(m, 0), g(m - 1);
    do {
        Elem acc = elem_zero(c.I);
        if (std::find(h.begin(), h.end(), 0) == h.end()) {
            int k = 0;
            for (int i = 0; i < m; ++i)
                if (i != r) g[k++] = h[i];
            acc = (r % 2) ? elem_neg(c.I, c.at(g)) : c.at(g);
            for (int j = r + 1; j <= r + s; ++j) {
                k = 0;
                for (int i = 0; i < m; ++i) {
                    if (i == j - 1) {
                        g[k++] = mod(h[i] + h[i + 1], c.n);
                        ++i;
                    } else {
                        g[k++] = h[i];
                    }
                }
                const Elem& v = c.at(g);
                acc = (j % 2) ? elem_sub(c.I, acc, v) : elem_add(c.I, acc, v);
            }
            for (int i = 0; i < m - 1; ++i) g[i] = h[i];
            const Elem& v = c.at(g);
            acc = ((r + s + 1) % 2) ? elem_sub(c.I, acc, v) : elem_add(c.I, acc, v);
        }
        out.at(h) = acc;
    } while (next_tuple(h, c.n));
    return out;
}

Cochain D_map(const Cochain& c, const ActionPair& ap) {
    const auto& P = ap.P;
    const int r = c.r, s = c.s, m = r + s + 1;
    need_degree(m);
    Cochain out = cochain_zero(P, c.I, r + s, 1);
    if (hom_is_zero(ap.B)) return out;
    std::vector<i64> h(m, 0), g(m - 1);
    do {
        if (std::find(h.begin(), h.end(), 0) == h.end()) {
            for (int i = 0; i < m - 1; ++i) g[i] = h[i];
            i64 u = h_dot(P, hsum(P, h, 0, r), hsum(P, h, r, r + s));
            i64 w = h_dot(P, hsum(P, h, 0, r + s), h[m - 1]);
            Elem v = yleft(ap, diamond(ap, u, c.at(g)), w);
            out.at(h) = ((r + s) % 2) ? elem_neg(c.I, v) : v;
        }
    } while (next_tuple(h, P.n));
    return out;
}

TwoCochain total_d1(const Cochain& t, const ActionPair& ap) {
    if (t.r != 0 || t.s != 1) throw Error("DegreeOutOfRange", "total_d1 expects a (0,1) cochain");
    return {del_v(t), cochain_add(del_h(t, ap), D_map(t, ap))};
}

ThreeCochain total_d2(const TwoCochain& c, const ActionPair& ap) {
    ThreeCochain o;
    o.c03 = del_v(c.beta);
    o.c12 = cochain_add(del_h(c.beta, ap), del_v(c.f));
    o.c21 = cochain_add(cochain_add(del_h(c.f, ap), D_map(c.beta, ap)), D_map(c.f, ap));
    return o;
}

FourCochain total_d3(const ThreeCochain& c, const ActionPair& ap) {
    FourCochain o;
    o.c04 = del_v(c.c03);
    o.c13 = cochain_add(del_h(c.c03, ap), del_v(c.c12));
    o.c22 = cochain_add(del_h(c.c12, ap), del_v(c.c21));
    o.c31 = cochain_add(cochain_add(del_h(c.c21, ap), D_map(c.c03, ap)),
                        cochain_add(D_map(c.c12, ap), D_map(c.c21, ap)));
    return o;
}

bool is_zero(const ThreeCochain& c) {
    return cochain_is_zero(c.c03) && cochain_is_zero(c.c12) && cochain_is_zero(c.c21);
}
bool is_zero(const FourCochain& c) {
    return cochain_is_zero(c.c04) && cochain_is_zero(c.c13) && cochain_is_zero(c.c22) && cochain_is_zero(c.c31);
}

bool is_2cocycle(const TwoCochain& c, const ActionPair& ap) {
    if (!ap.P.cyclic()) throw Error("NotCyclic", "cohomology needs a cyclic (H, x)");
    return is_zero(total_d2(c, ap));
}

Report check_cocycle_equations(const TwoCochain& c, const ActionPair& ap) {
    const auto& P = ap.P;
    const auto& I = ap.I;
    const Cochain &be = c.beta, &f = c.f;
    Report rep;
    auto BA = [&](i64 k, const Elem& y) { return hom_apply(ap.B, hom_apply(A_pow(ap, k), y)); };
    for (i64 a = 0; a < P.n; ++a)
        for (i64 b = 0; b < P.n; ++b) {
            i64 ab = h_dot(P, a, b), apb = P.red(a + b);
            for (i64 cc = 0; cc < P.n; ++cc) {
                i64 ac = h_dot(P, a, cc);
                if (elem_add(I, be.at({b, cc}), be.at({a, P.red(b + cc)})) != elem_add(I, be.at({a, b}), be.at({apb, cc}))) {
                    std::ostringstream s;
                    s << "vertical equation fails at (" << a << "," << b << "," << cc << ")";
                    rep.add(s.str());
                }
                Elem lhs = elem_sub(I, elem_sub(I, f.at({a, P.red(b + cc)}), f.at({a, b})), f.at({a, cc}));
                Elem rhs = elem_sub(I, diamond(ap, a, be.at({b, cc})), be.at({ab, ac}));
                if (lhs != rhs) {
                    std::ostringstream s;
                    s << "double cocycle equation fails at (" << a << "," << b << "," << cc << ")";
                    rep.add(s.str());
                }
                i64 w = h_dot(P, apb, cc);
                Elem r2 = diamond(ap, ab, f.at({a, cc}));
                r2 = elem_add(I, r2, f.at({ab, ac}));
                r2 = elem_add(I, r2, elem_scale(I, w, BA(ap.lt[ab], f.at({a, b}))));
                r2 = elem_add(I, r2, elem_scale(I, w, BA(ap.lt[apb], be.at({a, b}))));
                if (f.at({apb, cc}) != r2) {
                    std::ostringstream s;
                    s << "horizontal equation fails at (" << a << "," << b << "," << cc << ")";
                    rep.add(s.str());
                }
            }
        }
    return rep;
}

// ------------------------------------------------------------------ oracle

i64 oracle_rows(const CycleSetParams& P, const FinAbGroup& I) {
    i64 m = P.n - 1;
    return 3 * m * m * m * (i64)I.rank();
}

Subquotient oracle_H2(const ActionPair& ap, i64 max_rows) {
    const auto& P = ap.P;
    const FinAbGroup& I = ap.I;
    if (!P.cyclic()) throw Error("NotCyclic", "cohomology needs a cyclic (H, x)");
    if (oracle_rows(P, I) > max_rows)
        throw Error("SizeGuardExceeded", "oracle matrix would have " + std::to_string(oracle_rows(P, I)) + " rows");
    const i64 n = P.n;
    const size_t k = I.rank();

    // free coordinates of degree 2: beta(h,h') with 1<=h<=h', then f(h,h') with h,h' != 0
    std::vector<std::pair<i64, i64>> bco, fco;
    for (i64 h = 1; h < n; ++h)
        for (i64 hp = h; hp < n; ++hp) bco.push_back({h, hp});
    for (i64 h = 1; h < n; ++h)
        for (i64 hp = 1; hp < n; ++hp) fco.push_back({h, hp});
    const size_t ncoord = bco.size() + fco.size();
    FinAbGroup C2 = group_power(I, ncoord);
    FinAbGroup C1 = group_power(I, (size_t)(n - 1));

    auto read2 = [&](const TwoCochain& tc) {
        Elem out;
        out.reserve(ncoord * k);
        for (auto [h, hp] : bco) {
            const Elem& e = tc.beta.at({h, hp});
            out.insert(out.end(), e.begin(), e.end());
        }
        for (auto [h, hp] : fco) {
            const Elem& e = tc.f.at({h, hp});
            out.insert(out.end(), e.begin(), e.end());
        }
        return out;
    };

    // d1 : C1 -> C2
    Homomorphism d1 = hom_zero(C1, C2);
    for (i64 h = 1; h < n; ++h)
        for (size_t i = 0; i < k; ++i) {
            Cochain t = cochain_zero(P, I, 0, 1);
            t.v[h][i] = 1 % I.orders[i];
            Elem col = read2(total_d1(t, ap));
            size_t j = (size_t)(h - 1) * k + i;
            for (size_t row = 0; row < col.size(); ++row) d1.m[row][j] = col[row];
        }

    // d2 : C2 -> C3 on tuples without zero entries
    std::vector<size_t> tup;
    {
        std::vector<i64> h(3, 0);
        Cochain probe = cochain_zero(P, I, 0, 3);
        do {
            if (h[0] && h[1] && h[2]) tup.push_back(probe.index(h.data()));
        } while (next_tuple(h, n));
    }
    const size_t rows3 = 3 * tup.size();
    FinAbGroup C3 = group_power(I, rows3);
    Homomorphism d2 = hom_zero(C2, C3);
    for (size_t c = 0; c < ncoord; ++c)
        for (size_t i = 0; i < k; ++i) {
            TwoCochain tc{cochain_zero(P, I, 0, 2), cochain_zero(P, I, 1, 1)};
            i64 gen = 1 % I.orders[i];
            if (c < bco.size()) {
                auto [h, hp] = bco[c];
                tc.beta.at({h, hp})[i] = gen;
                tc.beta.at({hp, h})[i] = gen;
            } else {
                auto [h, hp] = fco[c - bco.size()];
                tc.f.at({h, hp})[i] = gen;
            }
            ThreeCochain o = total_d2(tc, ap);
            size_t j = c * k + i;
            size_t row = 0;
            for (const Cochain* part : {&o.c03, &o.c12, &o.c21})
                for (size_t t : tup) {
                    const Elem& e = part->v[t];
                    for (size_t q = 0; q < k; ++q) d2.m[row * k + q][j] = e[q];
                    ++row;
                }
        }
    return subquotient(C2, {d2}, d1);
}

}  // namespace lcs
