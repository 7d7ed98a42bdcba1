#pragma once

// Brute-force references for the tests. Nothing in here calls the complex,
// cohomology, classify or extension code: group elements are plain integer
// vectors and everything is enumerated.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "lcs/actions.hpp"

namespace ref {

using lcs::i64;
using V = std::vector<i64>;

struct Group {
    std::vector<i64> ord;
    i64 size = 1;
    explicit Group(std::vector<i64> o) : ord(std::move(o)) {
        for (i64 m : ord) size *= m;
    }
    V at(i64 k) const {
        V y(ord.size());
        for (size_t i = ord.size(); i-- > 0;) {
            y[i] = k % ord[i];
            k /= ord[i];
        }
        return y;
    }
    i64 index(const V& y) const {
        i64 k = 0;
        for (size_t i = 0; i < ord.size(); ++i) k = k * ord[i] + y[i];
        return k;
    }
    V add(const V& a, const V& b) const {
        V c(a.size());
        for (size_t i = 0; i < a.size(); ++i) c[i] = (a[i] + b[i]) % ord[i];
        return c;
    }
    V scale(i64 k, const V& a) const {
        V c(a.size());
        for (size_t i = 0; i < a.size(); ++i) c[i] = ((k % ord[i] + ord[i]) * a[i]) % ord[i];
        return c;
    }
    V apply(const lcs::Matrix& M, const V& y) const {
        V c(ord.size(), 0);
        for (size_t i = 0; i < ord.size(); ++i) {
            i64 s = 0;
            for (size_t j = 0; j < y.size(); ++j) s = (s + (M[i][j] % ord[i] + ord[i]) * y[j]) % ord[i];
            c[i] = s;
        }
        return c;
    }
    bool zero(const V& y) const {
        return std::all_of(y.begin(), y.end(), [](i64 x) { return x == 0; });
    }
};

inline i64 ipow(i64 b, int e) {
    i64 r = 1;
    while (e-- > 0) r *= b;
    return r;
}

// Invariant factors (ascending prime powers) of K/M, where K is listed and M
// is a subgroup of K of order m, from the counts |{x in K : p^k x in M}|.
template <class T, class Scale, class InM>
std::vector<i64> factors_by_counting(i64 p, const std::vector<T>& K, i64 m, Scale scale, InM inM) {
    std::vector<int> c{0};  // c[k] = log_p of |(K/M)[p^k]|
    i64 q = 1;
    while (true) {
        q *= p;
        i64 cnt = 0;
        for (const T& x : K)
            if (inM(scale(q, x))) ++cnt;
        int e = 0;
        for (i64 t = cnt / m; t > 1; t /= p) ++e;
        c.push_back(e);
        if (cnt == (i64)K.size()) break;
    }
    std::vector<i64> out;
    for (size_t k = 1; k < c.size(); ++k) {
        int ge_k = c[k] - c[k - 1];
        int ge_k1 = k + 1 < c.size() ? c[k + 1] - c[k] : 0;
        for (int t = 0; t < ge_k - ge_k1; ++t) out.push_back(ipow(p, (int)k));
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<i64> merge(std::vector<i64> a, const std::vector<i64>& b) {
    a.insert(a.end(), b.begin(), b.end());
    std::sort(a.begin(), a.end());
    return a;
}

// i.j = (1 - p^nu i) j on Z_{p^eta}
struct H {
    i64 p;
    int nu, eta;
    i64 n, pnu;
    H(i64 p_, int nu_, int eta_) : p(p_), nu(nu_), eta(eta_), n(ipow(p_, eta_)), pnu(ipow(p_, nu_)) {}
    i64 dot(i64 i, i64 j) const { return (((1 - pnu * i) % n + n) % n * j) % n; }
    // x times y = x + (x.)^{-1}(y), by searching the inverse
    i64 times(i64 x, i64 y) const {
        for (i64 z = 0; z < n; ++z)
            if (dot(x, z) == y) return (x + z) % n;
        return -1;
    }
    // l(h) with 1^{x l} = h; empty when 1 does not generate
    std::optional<std::vector<i64>> l_table() const {
        std::vector<i64> l(n, -1);
        i64 x = 0;
        for (i64 k = 0; k < n; ++k) {
            if (l[x] >= 0) return std::nullopt;
            l[x] = k;
            x = times(x, 1);
        }
        return l;
    }
};

// The data of I x H with + and . given by (beta, f), in element indices.
struct Ext {
    const Group& I;
    const H& h;
    std::vector<std::vector<i64>> dia;  // dia[h][y] = index of A^{l(h)} y
    std::vector<std::vector<i64>> yl;   // yl[y][h] = index of h B y
    std::vector<std::vector<i64>> addI;

    Ext(const Group& I_, const H& h_, const lcs::Matrix& A, const lcs::Matrix& B) : I(I_), h(h_) {
        auto l = *h.l_table();
        dia.assign(h.n, std::vector<i64>(I.size));
        yl.assign(I.size, std::vector<i64>(h.n));
        addI.assign(I.size, std::vector<i64>(I.size));
        for (i64 k = 0; k < I.size; ++k) {
            V y = I.at(k);
            for (i64 g = 0; g < h.n; ++g) {
                V z = y;
                for (i64 t = 0; t < l[g]; ++t) z = I.apply(A, z);
                dia[g][k] = I.index(z);
                yl[k][g] = I.index(I.scale(g, I.apply(B, y)));
            }
            for (i64 m = 0; m < I.size; ++m) addI[k][m] = I.index(I.add(y, I.at(m)));
        }
    }

    // + and . of I x H as index tables; beta, f indexed [h * n + h'] with element indices
    void tables(const std::vector<i64>& beta, const std::vector<i64>& f, std::vector<i64>& S, std::vector<i64>& D) const {
        const i64 m = I.size, n = h.n, N = m * n;
        S.assign(N * N, 0);
        D.assign(N * N, 0);
        for (i64 a = 0; a < N; ++a)
            for (i64 b = 0; b < N; ++b) {
                i64 ya = a % m, ha = a / m, yb = b % m, hb = b / m;
                S[a * N + b] = ((ha + hb) % n) * m + addI[addI[ya][yb]][beta[ha * n + hb]];
                i64 hh = h.dot(ha, hb);
                i64 y = addI[addI[dia[ha][yb]][f[ha * n + hb]]][yl[dia[ha][ya]][hh]];
                D[a * N + b] = hh * m + y;
            }
    }

    bool is_linear_cycle_set(const std::vector<i64>& beta, const std::vector<i64>& f) const {
        const i64 N = I.size * h.n;
        std::vector<i64> S, D;
        tables(beta, f, S, D);
        for (i64 a = 0; a < N; ++a) {
            std::vector<char> hit(N, 0);
            for (i64 b = 0; b < N; ++b) {
                if (S[a * N + b] != S[b * N + a]) return false;
                if (hit[D[a * N + b]]++) return false;
            }
        }
        for (i64 a = 0; a < N; ++a)
            for (i64 b = 0; b < N; ++b)
                for (i64 c = 0; c < N; ++c) {
                    if (S[S[a * N + b] * N + c] != S[a * N + S[b * N + c]]) return false;
                    if (D[a * N + S[b * N + c]] != S[D[a * N + b] * N + D[a * N + c]]) return false;
                    if (D[S[a * N + b] * N + c] != D[D[a * N + b] * N + D[a * N + c]]) return false;
                }
        return true;
    }

    // the (beta, f) of an extension equivalent to the split one through phi
    std::pair<std::vector<i64>, std::vector<i64>> trivial_shift(const std::vector<i64>& phi) const {
        const i64 n = h.n;
        std::vector<i64> beta(n * n), f(n * n);
        auto neg = [&](i64 k) { return I.index(I.scale(-1, I.at(k))); };
        for (i64 a = 0; a < n; ++a)
            for (i64 b = 0; b < n; ++b) {
                beta[a * n + b] = addI[addI[phi[a]][phi[b]]][neg(phi[(a + b) % n])];
                i64 hh = h.dot(a, b);
                f[a * n + b] = addI[addI[dia[a][phi[b]]][yl[dia[a][phi[a]]][hh]]][neg(phi[hh])];
            }
        return {beta, f};
    }
};

struct BruteH2 {
    i64 cocycles = 0, coboundaries = 0;
    std::vector<i64> factors;
    i64 order() const { return cocycles / coboundaries; }
};

// H^2 as (normalized extensions) / (those equivalent to the split one).
// Returns nothing when the enumeration would exceed `limit` candidates.
inline std::optional<BruteH2> brute_H2(i64 p, int nu, int eta, const std::vector<i64>& orders,
                                       const lcs::Matrix& A, const lcs::Matrix& B, i64 limit = 200000) {
    Group I(orders);
    H h(p, nu, eta);
    if (!h.l_table()) return std::nullopt;
    const i64 n = h.n;
    std::vector<std::pair<i64, i64>> bc, fc;  // free coordinates
    for (i64 a = 1; a < n; ++a)
        for (i64 b = 1; b < n; ++b) {
            if (a <= b) bc.push_back({a, b});
            fc.push_back({a, b});
        }
    const size_t nc = bc.size() + fc.size();
    double total = 1;
    for (size_t i = 0; i < nc; ++i) total *= (double)I.size;
    if (total > (double)limit) return std::nullopt;

    Ext E(I, h, A, B);
    auto to_tables = [&](const std::vector<i64>& x) {
        std::vector<i64> beta(n * n, 0), f(n * n, 0);
        for (size_t i = 0; i < bc.size(); ++i) beta[bc[i].first * n + bc[i].second] = beta[bc[i].second * n + bc[i].first] = x[i];
        for (size_t i = 0; i < fc.size(); ++i) f[fc[i].first * n + fc[i].second] = x[bc.size() + i];
        return std::make_pair(beta, f);
    };
    auto to_coords = [&](const std::vector<i64>& beta, const std::vector<i64>& f) {
        std::vector<i64> x;
        for (auto [a, b] : bc) x.push_back(beta[a * n + b]);
        for (auto [a, b] : fc) x.push_back(f[a * n + b]);
        return x;
    };

    std::vector<std::vector<i64>> Z;
    std::vector<i64> x(nc, 0);
    while (true) {
        auto [beta, f] = to_tables(x);
        if (E.is_linear_cycle_set(beta, f)) Z.push_back(x);
        size_t i = 0;
        while (i < nc && ++x[i] == I.size) x[i++] = 0;
        if (i == nc) break;
    }

    std::set<std::vector<i64>> Bset;
    std::vector<i64> phi(n, 0);
    while (true) {
        auto [beta, f] = E.trivial_shift(phi);
        Bset.insert(to_coords(beta, f));
        i64 i = 1;
        while (i < n && ++phi[i] == I.size) phi[i++] = 0;
        if (i == n) break;
    }

    BruteH2 r;
    r.cocycles = (i64)Z.size();
    r.coboundaries = (i64)Bset.size();
    auto scale = [&](i64 q, const std::vector<i64>& v) {
        std::vector<i64> w(v.size());
        for (size_t i = 0; i < v.size(); ++i) w[i] = I.index(I.scale(q, I.at(v[i])));
        return w;
    };
    r.factors = factors_by_counting(p, Z, r.coboundaries, scale, [&](const std::vector<i64>& v) { return Bset.count(v) > 0; });
    return r;
}

// rank over F_p, rows reduced one at a time
struct RowSpace {
    i64 p;
    std::vector<std::vector<i64>> rows;  // echelon, pivot = first nonzero
    void add(std::vector<i64> v) {
        for (const auto& r : rows) {
            size_t k = 0;
            while (r[k] == 0) ++k;
            if (v[k] == 0) continue;
            i64 inv = 1;
            while (inv * r[k] % p != 1) ++inv;
            i64 c = v[k] * inv % p;
            for (size_t j = 0; j < v.size(); ++j) v[j] = ((v[j] - c * r[j]) % p + p) % p;
        }
        if (std::any_of(v.begin(), v.end(), [](i64 x) { return x != 0; })) {
            rows.push_back(v);
            std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a > b; });
        }
    }
};

// |H^2| for elementary abelian I by linear algebra: the axioms of I x H are
// linear in (beta, f), so the cocycles are the kernel of their residuals.
inline std::optional<i64> linear_H2_order(i64 p, int nu, int eta, const std::vector<i64>& orders, const lcs::Matrix& A,
                                          const lcs::Matrix& B) {
    for (i64 o : orders)
        if (o != p) return std::nullopt;
    Group I(orders);
    H h(p, nu, eta);
    if (!h.l_table()) return std::nullopt;
    const i64 n = h.n, m = I.size, N = m * n, r = (i64)orders.size();
    std::vector<std::pair<i64, i64>> bc, fc;
    for (i64 a = 1; a < n; ++a)
        for (i64 b = 1; b < n; ++b) {
            if (a <= b) bc.push_back({a, b});
            fc.push_back({a, b});
        }
    const i64 unknowns = (i64)(bc.size() + fc.size()) * r;
    Ext E(I, h, A, B);

    // residual columns: one table set per unit vector
    std::vector<std::vector<i64>> S(unknowns), D(unknowns);
    for (i64 u = 0; u < unknowns; ++u) {
        std::vector<i64> beta(n * n, 0), f(n * n, 0);
        V e(r, 0);
        e[u % r] = 1;
        i64 slot = u / r, y = I.index(e);
        if (slot < (i64)bc.size()) {
            auto [a, b] = bc[slot];
            beta[a * n + b] = beta[b * n + a] = y;
        } else {
            auto [a, b] = fc[slot - bc.size()];
            f[a * n + b] = y;
        }
        E.tables(beta, f, S[u], D[u]);
    }
    // each axiom instance gives r linear equations in the unknowns
    RowSpace M{p, {}};
    auto y_of = [&](i64 x) { return I.at(x % m); };
    std::vector<std::vector<i64>> eq(3 * r, std::vector<i64>(unknowns));
    for (i64 a = 0; a < N; ++a)
        for (i64 b = 0; b < N; ++b)
            for (i64 c = 0; c < N; ++c) {
                for (i64 u = 0; u < unknowns; ++u) {
                    const auto &Su = S[u], &Du = D[u];
                    V r1 = I.add(y_of(Su[Su[a * N + b] * N + c]), I.scale(-1, y_of(Su[a * N + Su[b * N + c]])));
                    V r2 = I.add(y_of(Du[a * N + Su[b * N + c]]), I.scale(-1, y_of(Su[Du[a * N + b] * N + Du[a * N + c]])));
                    V r3 = I.add(y_of(Du[Su[a * N + b] * N + c]), I.scale(-1, y_of(Du[Du[a * N + b] * N + Du[a * N + c]])));
                    for (i64 k = 0; k < r; ++k) {
                        eq[k][u] = r1[k];
                        eq[r + k][u] = r2[k];
                        eq[2 * r + k][u] = r3[k];
                    }
                }
                for (const auto& row : eq) M.add(row);
            }
    // coboundaries: images of the unit phi
    RowSpace Bsp{p, {}};
    for (i64 g = 1; g < n; ++g)
        for (i64 k = 0; k < r; ++k) {
            std::vector<i64> phi(n, 0);
            V e(r, 0);
            e[k] = 1;
            phi[g] = I.index(e);
            auto [beta, f] = E.trivial_shift(phi);
            std::vector<i64> row;
            for (auto [a, b] : bc)
                for (i64 x : I.at(beta[a * n + b])) row.push_back(x);
            for (auto [a, b] : fc)
                for (i64 x : I.at(f[a * n + b])) row.push_back(x);
            // row is laid out slot-major, matching the unknown numbering u = slot * r + k
            Bsp.add(row);
        }
    i64 dim = unknowns - (i64)M.rows.size() - (i64)Bsp.rows.size();
    return ipow(p, (int)dim);
}

// Cohomology of the cyclic group <s> of order N acting on I through s:
// H^1 = ker(1 + s + ... + s^{N-1}) / (s - 1)I and the fixed points, with
// the fixed points optionally cut down to I[p^e] (e < 0: no cut).
struct CyclicCoh {
    std::vector<i64> h1, h0;
};

inline CyclicCoh cyclic_cohomology(i64 p, const std::vector<i64>& orders, const lcs::Matrix& s, i64 N, int e = -1) {
    Group I(orders);
    std::vector<V> all, kerN, fixed;
    std::set<V> img;
    for (i64 k = 0; k < I.size; ++k) all.push_back(I.at(k));
    for (const V& y : all) {
        V sy = I.apply(s, y);
        img.insert(I.add(sy, I.scale(-1, y)));
        if (sy == y && (e < 0 || I.zero(I.scale(ipow(p, e), y)))) fixed.push_back(y);
        V acc(y.size(), 0), z = y;
        for (i64 j = 0; j < N; ++j) {
            acc = I.add(acc, z);
            z = I.apply(s, z);
        }
        if (I.zero(acc)) kerN.push_back(y);
    }
    auto sc = [&](i64 q, const V& y) { return I.scale(q, y); };
    CyclicCoh r;
    r.h1 = factors_by_counting(p, kerN, (i64)img.size(), sc, [&](const V& y) { return img.count(y) > 0; });
    r.h0 = factors_by_counting(p, fixed, 1, sc, [&](const V& y) { return I.zero(y); });
    return r;
}

// Invariant factors of a direct sum of cyclic p-groups Z_{m_i} (m_i powers of p).
inline std::vector<i64> cyclic_factors(std::vector<i64> ms) {
    std::vector<i64> out;
    for (i64 m : ms)
        if (m > 1) out.push_back(m);
    std::sort(out.begin(), out.end());
    return out;
}

inline i64 gcd(i64 a, i64 b) { return b == 0 ? a : gcd(b, a % b); }

}  // namespace ref
