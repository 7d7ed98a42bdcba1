#include "lcs/cycleset.hpp"

#include <sstream>

namespace lcs {

bool is_prime(i64 p) {
    if (p < 2) return false;
    for (i64 d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

CycleSetParams make_params(i64 p, int nu, int eta) {
    if (!is_prime(p)) throw Error("InvalidParams", "p must be prime");
    if (!(0 < nu && nu <= eta && eta <= 2 * nu))
        throw Error("InvalidParams", "need 0 < nu <= eta <= 2 nu");
    CycleSetParams P;
    P.p = p;
    P.nu = nu;
    P.eta = eta;
    P.n = ipow(p, eta);
    P.pnu = ipow(p, nu);
    if ((__int128)P.n * P.n > ((__int128)1 << 40)) throw Error("OrderOverflow", "p^eta too large");
    return P;
}

static void need_cyclic(const CycleSetParams& P) {
    if (!P.cyclic()) throw Error("NotCyclic", "(Z_4, x) is not cyclic for p=2, nu=1, eta=2");
}

i64 h_dot(const CycleSetParams& P, i64 i, i64 j) {
    return P.red(mulmod(P.red(1 - mulmod(P.pnu, P.red(i), P.n)), P.red(j), P.n));
}

i64 h_times(const CycleSetParams& P, i64 i, i64 j) {
    i = P.red(i);
    j = P.red(j);
    return P.red(i + j + mulmod(P.pnu, mulmod(i, j, P.n), P.n));
}

i64 times_power(const CycleSetParams& P, i64 i, i64 j) {
    i = P.red(i);
    // C(j,2) p^nu is p^eta-periodic in j since nu >= 1
    i64 jj = P.red(j);
    i64 c2 = P.red(choose2(jj));
    i64 t = mulmod(jj, i, P.n);
    i64 u = mulmod(mulmod(c2, P.pnu, P.n), mulmod(i, i, P.n), P.n);
    return P.red(t + u);
}

i64 l_of(const CycleSetParams& P, i64 h) {
    need_cyclic(P);
    h = P.red(h);
    i64 c = P.two_branch() ? P.red(P.pnu + ipow(2, 2 * P.nu - 1)) : P.pnu;
    return P.red(h - mulmod(P.red(choose2(h)), c, P.n));
}

i64 L_of(const CycleSetParams& P, i64 l, i64 lp) {
    need_cyclic(P);
    l = P.red(l);
    lp = P.red(lp);
    i64 ll = mulmod(l, lp, P.n);
    i64 r = l + lp - mulmod(ll, P.pnu, P.n);
    if (P.two_branch()) r -= mulmod(ll, ipow(2, 2 * P.nu - 1), P.n);
    return P.red(r);
}

i64 b_k(const CycleSetParams& P, i64 k) {
    i64 kk = P.red(k);
    return P.red(kk + mulmod(P.red(choose2(kk + 1)), P.pnu, P.n));
}

i64 ell_rep(const CycleSetParams& P, i64 u) { return l_of(P, u); }

i64 l_brute(const CycleSetParams& P, i64 h) {
    h = P.red(h);
    i64 x = 0;
    for (i64 k = 0; k < P.n; ++k) {
        if (x == h) return k;
        x = h_times(P, x, 1);
    }
    throw Error("NotCyclic", "1 does not generate (Z_{p^eta}, x)");
}

FiniteCycleSetTable h_table(const CycleSetParams& P) {
    FiniteCycleSetTable T;
    T.order = (int)P.n;
    T.add.resize((size_t)P.n * P.n);
    T.dot.resize((size_t)P.n * P.n);
    for (i64 a = 0; a < P.n; ++a)
        for (i64 b = 0; b < P.n; ++b) {
            T.add[a * P.n + b] = (int)P.red(a + b);
            T.dot[a * P.n + b] = (int)h_dot(P, a, b);
        }
    return T;
}

FiniteCycleSetTable trivial_table(int n) {
    FiniteCycleSetTable T;
    T.order = n;
    T.add.resize((size_t)n * n);
    T.dot.resize((size_t)n * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            T.add[(size_t)a * n + b] = (a + b) % n;
            T.dot[(size_t)a * n + b] = b;
        }
    return T;
}

std::vector<std::string> verify_cycle_set(const FiniteCycleSetTable& T, size_t max_report) {
    std::vector<std::string> out;
    const int n = T.order;
    if (n > 4096) throw Error("SizeGuardExceeded", "table larger than 4096");
    auto report = [&](const std::string& what, int a, int b, int c) {
        if (out.size() < max_report) {
            std::ostringstream s;
            s << what << " at (" << a << "," << b << "," << c << ")";
            out.push_back(s.str());
        }
    };
    for (int a = 0; a < n; ++a) {
        std::vector<char> hit(n, 0);
        for (int b = 0; b < n; ++b) {
            int v = T.prod(a, b);
            if (v < 0 || v >= n || hit[v]) {
                report("left translation not bijective", a, b, -1);
                break;
            }
            hit[v] = 1;
        }
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            int ab = T.prod(a, b), apb = T.sum(a, b);
            for (int c = 0; c < n; ++c) {
                if (T.prod(a, T.sum(b, c)) != T.sum(ab, T.prod(a, c))) report("a.(b+c) != a.b + a.c", a, b, c);
                if (T.prod(apb, c) != T.prod(ab, T.prod(a, c))) report("(a+b).c != (a.b).(a.c)", a, b, c);
                if (T.prod(ab, T.prod(a, c)) != T.prod(T.prod(b, a), T.prod(b, c)))
                    report("(a.b).(a.c) != (b.a).(b.c)", a, b, c);
            }
            if (out.size() >= max_report) return out;
        }
    return out;
}

std::vector<int> to_brace(const FiniteCycleSetTable& T) {
    const int n = T.order;
    std::vector<int> mult((size_t)n * n);
    for (int a = 0; a < n; ++a) {
        // a x b = inv_a(b) + a, where inv_a inverts b -> a.b
        std::vector<int> inv(n, -1);
        for (int b = 0; b < n; ++b) inv[T.prod(a, b)] = b;
        for (int b = 0; b < n; ++b) {
            if (inv[b] < 0) throw Error("NotACycleSet", "left translation not bijective");
            mult[(size_t)a * n + b] = T.sum(inv[b], a);
        }
    }
    return mult;
}

FiniteCycleSetTable from_brace(const std::vector<int>& mult, const std::vector<int>& add, int n) {
    auto M = [&](int a, int b) { return mult[(size_t)a * n + b]; };
    auto S = [&](int a, int b) { return add[(size_t)a * n + b]; };
    int zero = -1;
    for (int z = 0; z < n && zero < 0; ++z) {
        bool ok = true;
        for (int a = 0; a < n && ok; ++a) ok = S(z, a) == a;
        if (ok) zero = z;
    }
    if (zero < 0) throw Error("NotABrace", "additive table has no neutral element");
    std::vector<int> neg(n, -1), xinv(n, -1);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (S(a, b) == zero) neg[a] = b;
            if (M(a, b) == zero) xinv[a] = b;
        }
    for (int a = 0; a < n; ++a)
        if (neg[a] < 0 || xinv[a] < 0) throw Error("NotABrace", "missing inverse");
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (M(a, S(b, c)) != S(S(M(a, b), M(a, c)), neg[a]))
                    throw Error("NotABrace", "a x (b+c) != a x b + a x c - a");
    FiniteCycleSetTable T;
    T.order = n;
    T.add = add;
    T.dot.resize((size_t)n * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) T.dot[(size_t)a * n + b] = M(xinv[a], S(a, b));
    return T;
}

std::vector<int> socle(const FiniteCycleSetTable& T) {
    std::vector<int> out;
    for (int y = 0; y < T.order; ++y) {
        bool ok = true;
        for (int a = 0; a < T.order && ok; ++a) ok = T.prod(y, a) == a;
        if (ok) out.push_back(y);
    }
    return out;
}

std::vector<int> center(const FiniteCycleSetTable& T) {
    std::vector<int> out;
    for (int y : socle(T)) {
        bool ok = true;
        for (int a = 0; a < T.order && ok; ++a) ok = T.prod(a, y) == y;
        if (ok) out.push_back(y);
    }
    return out;
}

}  // namespace lcs
