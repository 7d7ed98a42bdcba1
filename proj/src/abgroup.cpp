#include "lcs/abgroup.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace lcs {

i64 EnumGuard::limit = 1000000;

namespace {
constexpr i64 kSquareBound = (i64)1 << 62;

i64 extgcd(i64 a, i64 b, i64& x, i64& y) {
    if (b == 0) {
        x = 1;
        y = 0;
        return a;
    }
    i64 x1, y1;
    i64 g = extgcd(b, a % b, x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
    return g;
}

void need_same(const FinAbGroup& a, const FinAbGroup& b, const char* what) {
    if (a != b) throw Error("GroupMismatch", what);
}
}  // namespace

i64 gcd64(i64 a, i64 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) {
        i64 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

i64 lcm64(i64 a, i64 b) {
    if (a == 0 || b == 0) return 0;
    return a / gcd64(a, b) * b;
}

i64 ipow(i64 b, unsigned e) {
    i64 r = 1;
    while (e--) r *= b;
    return r;
}

int valuation(i64 x, i64 p, int cap) {
    if (x == 0) return cap;
    int v = 0;
    while (x % p == 0) {
        x /= p;
        ++v;
    }
    return v;
}

// saturates at INT64_MAX; big cochain groups are never enumerated
i64 FinAbGroup::order() const {
    __int128 o = 1;
    for (i64 n : orders) {
        o *= n;
        if (o > (__int128)INT64_MAX) return INT64_MAX;
    }
    return (i64)o;
}

FinAbGroup make_group(std::vector<i64> orders) {
    for (i64 n : orders) {
        if (n < 1) throw Error("InvalidOrder", "group orders must be positive");
        if ((__int128)n * n > kSquareBound) throw Error("OrderOverflow", "order too large: " + std::to_string(n));
    }
    return FinAbGroup{std::move(orders)};
}

FinAbGroup parse_group(const std::string& lit) {
    std::string s;
    for (char c : lit)
        if (!std::isspace((unsigned char)c)) s += (char)std::tolower((unsigned char)c);
    std::vector<i64> orders;
    if (s.empty() || s == "0" || s == "trivial") return make_group({});
    size_t pos = 0;
    while (pos <= s.size()) {
        size_t nxt = s.find('+', pos);
        std::string part = s.substr(pos, nxt == std::string::npos ? std::string::npos : nxt - pos);
        if (part.size() < 2 || part[0] != 'z') throw Error("InvalidGroup", "bad group literal: " + lit);
        std::string digits = part.substr(1);
        int mult = 1;
        auto caret = digits.find('^');
        if (caret != std::string::npos) {
            mult = std::stoi(digits.substr(caret + 1));
            digits = digits.substr(0, caret);
        }
        if (digits.empty() || !std::all_of(digits.begin(), digits.end(), ::isdigit))
            throw Error("InvalidGroup", "bad group literal: " + lit);
        for (int i = 0; i < mult; ++i) orders.push_back(std::stoll(digits));
        if (nxt == std::string::npos) break;
        pos = nxt + 1;
    }
    return make_group(orders);
}

std::string group_literal(const FinAbGroup& g) {
    if (g.orders.empty()) return "0";
    std::string s;
    for (size_t i = 0; i < g.orders.size(); ++i) {
        if (i) s += "+";
        s += "Z" + std::to_string(g.orders[i]);
    }
    return s;
}

FinAbGroup group_power(const FinAbGroup& g, size_t k) {
    std::vector<i64> o;
    for (size_t i = 0; i < k; ++i) o.insert(o.end(), g.orders.begin(), g.orders.end());
    return make_group(o);
}

FinAbGroup group_sum(const FinAbGroup& a, const FinAbGroup& b) {
    std::vector<i64> o = a.orders;
    o.insert(o.end(), b.orders.begin(), b.orders.end());
    return make_group(o);
}

i64 group_exponent(const FinAbGroup& g) {
    i64 e = 1;
    for (i64 n : g.orders) e = lcm64(e, n);
    return e;
}

Elem elem_zero(const FinAbGroup& g) { return Elem(g.rank(), 0); }

void elem_check(const FinAbGroup& g, const Elem& x) {
    if (x.size() != g.rank()) throw Error("GroupMismatch", "element length does not match group rank");
}

Elem elem_reduce(const FinAbGroup& g, const Elem& x) {
    elem_check(g, x);
    Elem r(x.size());
    for (size_t i = 0; i < x.size(); ++i) r[i] = mod(x[i], g.orders[i]);
    return r;
}

Elem elem_add(const FinAbGroup& g, const Elem& x, const Elem& y) {
    elem_check(g, x);
    elem_check(g, y);
    Elem r(x.size());
    for (size_t i = 0; i < x.size(); ++i) r[i] = mod(x[i] + y[i], g.orders[i]);
    return r;
}

Elem elem_sub(const FinAbGroup& g, const Elem& x, const Elem& y) {
    elem_check(g, x);
    elem_check(g, y);
    Elem r(x.size());
    for (size_t i = 0; i < x.size(); ++i) r[i] = mod(x[i] - y[i], g.orders[i]);
    return r;
}

Elem elem_neg(const FinAbGroup& g, const Elem& x) { return elem_scale(g, -1, x); }

Elem elem_scale(const FinAbGroup& g, i64 c, const Elem& x) {
    elem_check(g, x);
    Elem r(x.size());
    for (size_t i = 0; i < x.size(); ++i) r[i] = mulmod(mod(c, g.orders[i]), x[i], g.orders[i]);
    return r;
}

bool elem_is_zero(const Elem& x) {
    return std::all_of(x.begin(), x.end(), [](i64 v) { return v == 0; });
}

// ---------------------------------------------------------------- homs

static void check_shape(const Homomorphism& h) {
    if (h.m.size() != h.cod.rank()) throw Error("ShapeMismatch", "matrix row count != codomain rank");
    for (auto& row : h.m)
        if (row.size() != h.dom.rank()) throw Error("ShapeMismatch", "matrix column count != domain rank");
}

bool hom_validate(const Homomorphism& h) {
    check_shape(h);
    for (size_t i = 0; i < h.cod.rank(); ++i)
        for (size_t j = 0; j < h.dom.rank(); ++j)
            if (mulmod(h.m[i][j], h.dom.orders[j], h.cod.orders[i]) != 0) return false;
    return true;
}

Homomorphism make_hom(const FinAbGroup& dom, const FinAbGroup& cod, Matrix m) {
    Homomorphism h{dom, cod, std::move(m)};
    check_shape(h);
    for (size_t i = 0; i < cod.rank(); ++i)
        for (auto& v : h.m[i]) v = mod(v, cod.orders[i]);
    if (!hom_validate(h)) throw Error("InvalidHomomorphism", "matrix does not define a homomorphism");
    return h;
}

Homomorphism hom_zero(const FinAbGroup& dom, const FinAbGroup& cod) {
    return Homomorphism{dom, cod, Matrix(cod.rank(), std::vector<i64>(dom.rank(), 0))};
}

Homomorphism hom_scalar(const FinAbGroup& g, i64 c) {
    Homomorphism h = hom_zero(g, g);
    for (size_t i = 0; i < g.rank(); ++i) h.m[i][i] = mod(c, g.orders[i]);
    return h;
}

Homomorphism hom_identity(const FinAbGroup& g) { return hom_scalar(g, 1); }

Elem hom_apply(const Homomorphism& h, const Elem& x) {
    elem_check(h.dom, x);
    Elem r(h.cod.rank(), 0);
    for (size_t i = 0; i < h.cod.rank(); ++i) {
        i64 n = h.cod.orders[i];
        i64 acc = 0;
        for (size_t j = 0; j < x.size(); ++j) acc = (acc + mulmod(h.m[i][j], x[j], n)) % n;
        r[i] = mod(acc, n);
    }
    return r;
}

Homomorphism hom_compose(const Homomorphism& h2, const Homomorphism& h1) {
    need_same(h2.dom, h1.cod, "compose: inner codomain differs from outer domain");
    Homomorphism r = hom_zero(h1.dom, h2.cod);
    for (size_t i = 0; i < h2.cod.rank(); ++i) {
        i64 n = h2.cod.orders[i];
        for (size_t j = 0; j < h1.dom.rank(); ++j) {
            i64 acc = 0;
            for (size_t k = 0; k < h1.cod.rank(); ++k) acc = (acc + mulmod(h2.m[i][k], h1.m[k][j], n)) % n;
            r.m[i][j] = acc;
        }
    }
    return r;
}

Homomorphism hom_power(const Homomorphism& h, unsigned long long e) {
    need_same(h.dom, h.cod, "power of a non-endomorphism");
    Homomorphism r = hom_identity(h.dom), b = h;
    while (e) {
        if (e & 1) r = hom_compose(r, b);
        e >>= 1;
        if (e) b = hom_compose(b, b);
    }
    return r;
}

Homomorphism hom_add(const Homomorphism& a, const Homomorphism& b) {
    need_same(a.dom, b.dom, "add: domains differ");
    need_same(a.cod, b.cod, "add: codomains differ");
    Homomorphism r = a;
    for (size_t i = 0; i < a.cod.rank(); ++i)
        for (size_t j = 0; j < a.dom.rank(); ++j) r.m[i][j] = mod(a.m[i][j] + b.m[i][j], a.cod.orders[i]);
    return r;
}

Homomorphism hom_scale(i64 c, const Homomorphism& h) {
    Homomorphism r = h;
    for (size_t i = 0; i < h.cod.rank(); ++i)
        for (auto& v : r.m[i]) v = mulmod(mod(c, h.cod.orders[i]), v, h.cod.orders[i]);
    return r;
}

Homomorphism hom_sub(const Homomorphism& a, const Homomorphism& b) { return hom_add(a, hom_scale(-1, b)); }

bool hom_is_zero(const Homomorphism& h) {
    for (auto& row : h.m)
        for (i64 v : row)
            if (v) return false;
    return true;
}

bool hom_equal(const Homomorphism& a, const Homomorphism& b) {
    return a.dom == b.dom && a.cod == b.cod && a.m == b.m;
}

Homomorphism hom_hcat(const Homomorphism& a, const Homomorphism& b) {
    need_same(a.cod, b.cod, "hcat: codomains differ");
    Homomorphism r{group_sum(a.dom, b.dom), a.cod, a.m};
    for (size_t i = 0; i < a.cod.rank(); ++i) r.m[i].insert(r.m[i].end(), b.m[i].begin(), b.m[i].end());
    return r;
}

Homomorphism hom_vcat(const Homomorphism& a, const Homomorphism& b) {
    need_same(a.dom, b.dom, "vcat: domains differ");
    Homomorphism r{a.dom, group_sum(a.cod, b.cod), a.m};
    r.m.insert(r.m.end(), b.m.begin(), b.m.end());
    return r;
}

// ---------------------------------------------------------------- smith

SmithResult smith_mod(Matrix M, i64 N, bool wantU, bool wantV, bool divisibility) {
    const size_t rows = M.size(), cols = rows ? M[0].size() : 0;
    for (auto& r : M)
        for (auto& v : r) v = mod(v, N);
    SmithResult res;
    auto ident = [](size_t n) {
        Matrix I(n, std::vector<i64>(n, 0));
        for (size_t i = 0; i < n; ++i) I[i][i] = 1;
        return I;
    };
    if (wantU) {
        res.U = ident(rows);
        res.Uinv = ident(rows);
    }
    if (wantV) res.V = ident(cols);

    std::vector<i64> gtab;
    if (N <= (1 << 22)) {
        gtab.resize(N);
        for (i64 x = 0; x < N; ++x) gtab[x] = gcd64(x, N);
    }
    auto gN = [&](i64 x) { return gtab.empty() ? gcd64(x, N) : gtab[x]; };

    // rows (t,i) <- E (rows t,i) with E = [[x,y],[c,d]], det 1
    auto rowop = [&](size_t t, size_t i, i64 x, i64 y, i64 c, i64 d) {
        auto apply = [&](Matrix& A) {
            for (size_t k = 0; k < A[t].size(); ++k) {
                i64 a = A[t][k], b = A[i][k];
                A[t][k] = mod(mulmod(x, a, N) + mulmod(y, b, N), N);
                A[i][k] = mod(mulmod(c, a, N) + mulmod(d, b, N), N);
            }
        };
        apply(M);
        if (wantU) {
            apply(res.U);
            // Uinv <- Uinv * E^{-1}, E^{-1} = [[d,-y],[-c,x]]
            for (size_t k = 0; k < rows; ++k) {
                i64 a = res.Uinv[k][t], b = res.Uinv[k][i];
                res.Uinv[k][t] = mod(mulmod(d, a, N) - mulmod(c, b, N), N);
                res.Uinv[k][i] = mod(mulmod(-y, a, N) + mulmod(x, b, N), N);
            }
        }
    };
    // cols (t,j) <- (x*col_t + y*col_j, c*col_t + d*col_j)
    auto colop = [&](size_t t, size_t j, i64 x, i64 y, i64 c, i64 d) {
        auto apply = [&](Matrix& A) {
            for (auto& row : A) {
                i64 a = row[t], b = row[j];
                row[t] = mod(mulmod(x, a, N) + mulmod(y, b, N), N);
                row[j] = mod(mulmod(c, a, N) + mulmod(d, b, N), N);
            }
        };
        apply(M);
        if (wantV) apply(res.V);
    };
    auto swaprows = [&](size_t a, size_t b) {
        if (a == b) return;
        std::swap(M[a], M[b]);
        if (wantU) {
            std::swap(res.U[a], res.U[b]);
            for (auto& row : res.Uinv) std::swap(row[a], row[b]);
        }
    };
    auto swapcols = [&](size_t a, size_t b) {
        if (a == b) return;
        for (auto& row : M) std::swap(row[a], row[b]);
        if (wantV)
            for (auto& row : res.V) std::swap(row[a], row[b]);
    };

    const size_t diagLen = std::min(rows, cols);
    res.diag.assign(diagLen, 0);
    for (size_t t = 0; t < diagLen; ++t) {
        // pivot: smallest gcd with N
        i64 best = 0;
        size_t bi = 0, bj = 0;
        for (size_t i = t; i < rows && best != 1; ++i)
            for (size_t j = t; j < cols; ++j) {
                i64 v = M[i][j];
                if (!v) continue;
                i64 g = gN(v);
                if (best == 0 || g < best) {
                    best = g;
                    bi = i;
                    bj = j;
                    if (g == 1) break;
                }
            }
        if (best == 0) break;
        swaprows(t, bi);
        swapcols(t, bj);
        for (;;) {
            bool dirty = false;
            for (size_t i = t + 1; i < rows; ++i) {
                i64 a = M[t][t], b = M[i][t];
                if (!b) continue;
                if (a && b % a == 0) {
                    rowop(t, i, 1, 0, mod(-(b / a), N), 1);
                } else {
                    i64 x, y;
                    i64 g = extgcd(a, b, x, y);
                    rowop(t, i, mod(x, N), mod(y, N), mod(-(b / g), N), mod(a / g, N));
                }
            }
            for (size_t j = t + 1; j < cols; ++j) {
                i64 a = M[t][t], b = M[t][j];
                if (!b) continue;
                if (a && b % a == 0) {
                    colop(t, j, 1, 0, mod(-(b / a), N), 1);
                } else {
                    i64 x, y;
                    i64 g = extgcd(a, b, x, y);
                    colop(t, j, mod(x, N), mod(y, N), mod(-(b / g), N), mod(a / g, N));
                    dirty = true;
                }
            }
            if (dirty) {
                bool clean = true;
                for (size_t i = t + 1; i < rows && clean; ++i)
                    if (M[i][t]) clean = false;
                if (!clean) continue;
            }
            if (divisibility) {
                i64 g = gN(M[t][t]);
                bool fixed = false;
                for (size_t i = t + 1; i < rows && !fixed; ++i)
                    for (size_t j = t + 1; j < cols; ++j)
                        if (M[i][j] % g) {
                            rowop(t, i, 1, 1, 0, 1);
                            fixed = true;
                            break;
                        }
                if (fixed) continue;
            }
            break;
        }
        res.diag[t] = M[t][t];
    }
    return res;
}

// ---------------------------------------------------------------- kernel / image

std::vector<Elem> kernel_gens(const Homomorphism& h) {
    check_shape(h);
    const FinAbGroup& D = h.dom;
    const FinAbGroup& C = h.cod;
    i64 N = lcm64(group_exponent(D), group_exponent(C));
    std::vector<Elem> out;
    if (D.rank() == 0) return out;
    // rows scaled into Z_N; drop zero and repeated rows
    std::set<std::vector<i64>> seen;
    Matrix M;
    for (size_t i = 0; i < C.rank(); ++i) {
        i64 s = N / C.orders[i];
        std::vector<i64> row(D.rank());
        bool nz = false;
        for (size_t j = 0; j < D.rank(); ++j) {
            row[j] = mulmod(h.m[i][j], s, N);
            nz |= row[j] != 0;
        }
        if (nz && seen.insert(row).second) M.push_back(std::move(row));
    }
    const size_t n = D.rank();
    Matrix V;
    std::vector<i64> diag;
    if (M.empty()) {
        V.assign(n, std::vector<i64>(n, 0));
        for (size_t i = 0; i < n; ++i) V[i][i] = 1;
    } else {
        SmithResult sr = smith_mod(M, N, false, true, false);
        V = std::move(sr.V);
        diag = std::move(sr.diag);
    }
    std::set<Elem> uniq;
    for (size_t t = 0; t < n; ++t) {
        i64 factor = 1;
        if (t < diag.size() && diag[t] != 0) factor = N / gcd64(diag[t], N);
        Elem e(n);
        for (size_t j = 0; j < n; ++j) e[j] = mulmod(V[j][t], factor, D.orders[j]);
        if (!elem_is_zero(e) && uniq.insert(e).second) out.push_back(e);
    }
    return out;
}

std::vector<Elem> image_gens(const Homomorphism& h) {
    check_shape(h);
    std::vector<Elem> out;
    std::set<Elem> uniq;
    for (size_t j = 0; j < h.dom.rank(); ++j) {
        Elem e(h.cod.rank());
        for (size_t i = 0; i < h.cod.rank(); ++i) e[i] = h.m[i][j];
        if (!elem_is_zero(e) && uniq.insert(e).second) out.push_back(e);
    }
    return out;
}

// ---------------------------------------------------------------- subquotient

i64 Subquotient::order() const {
    i64 o = 1;
    for (i64 d : invariant_factors) o *= d;
    return o;
}

namespace {
// columns = generators scaled into Z_N^k
Matrix scaled_columns(const FinAbGroup& g, const std::vector<Elem>& gens, i64 N) {
    Matrix M(g.rank(), std::vector<i64>(std::max<size_t>(gens.size(), 1), 0));
    for (size_t j = 0; j < gens.size(); ++j)
        for (size_t i = 0; i < g.rank(); ++i) M[i][j] = mulmod(gens[j][i], N / g.orders[i], N);
    return M;
}
}  // namespace

Subquotient subquotient_gens(const FinAbGroup& g, const std::vector<Elem>& kgens,
                             const std::vector<Elem>& igens) {
    Subquotient q;
    q.ambient = g;
    q.image = igens;
    const i64 N = group_exponent(g);
    const size_t k = g.rank();
    if (N == 1 || kgens.empty()) return q;

    // lattice of the image: U * Lambda * V = D
    Matrix L = scaled_columns(g, igens, N);
    SmithResult sl = smith_mod(L, N, true, false, false);
    std::vector<i64> gi(k, N);
    for (size_t i = 0; i < sl.diag.size(); ++i)
        if (sl.diag[i]) gi[i] = gcd64(sl.diag[i], N);
    if (igens.empty()) std::fill(gi.begin(), gi.end(), N);

    // psi : Z_N^a -> (+) Z_{g_i},  c |-> U * K * c
    Matrix K = scaled_columns(g, kgens, N);
    const size_t a = kgens.size();
    Matrix P(k, std::vector<i64>(a, 0));
    for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j < a; ++j) {
            i64 acc = 0;
            for (size_t l = 0; l < k; ++l) acc = (acc + mulmod(sl.U[i][l], K[l][j], N)) % N;
            P[i][j] = acc;
        }
    std::vector<i64> codo(gi.begin(), gi.end());
    FinAbGroup dom = make_group(std::vector<i64>(a, N));
    FinAbGroup cod = make_group(codo);
    Homomorphism psi = make_hom(dom, cod, P);
    std::vector<Elem> W = kernel_gens(psi);

    Matrix Wm(a, std::vector<i64>(std::max<size_t>(W.size(), 1), 0));
    for (size_t j = 0; j < W.size(); ++j)
        for (size_t i = 0; i < a; ++i) Wm[i][j] = W[j][i];
    SmithResult sw = smith_mod(Wm, N, true, false, true);
    for (size_t t = 0; t < a; ++t) {
        i64 f = N;
        if (t < sw.diag.size() && sw.diag[t]) f = gcd64(sw.diag[t], N);
        if (f == 1) continue;
        // generator: sum_j Uinv[j][t] * k_j
        Elem e = elem_zero(g);
        for (size_t j = 0; j < a; ++j) e = elem_add(g, e, elem_scale(g, sw.Uinv[j][t], kgens[j]));
        q.invariant_factors.push_back(f);
        q.transversal.push_back(e);
    }
    // lexicographically least coset representatives when the image is small
    __int128 isz = 1;
    bool small = true;
    for (i64 n : g.orders) {
        isz *= n;
        if (isz > EnumGuard::limit) small = false;
    }
    if (small || igens.empty()) {
        std::vector<Elem> imgs = subgroup_elements(g, igens);
        for (auto& e : q.transversal) {
            Elem best = e;
            for (auto& s : imgs) best = std::min(best, elem_add(g, e, s));
            e = best;
        }
    }
    return q;
}

Subquotient subquotient(const FinAbGroup& g, const std::vector<Homomorphism>& kernel_maps,
                        const Homomorphism& image_map) {
    if (image_map.cod != g) throw Error("GroupMismatch", "image map codomain differs from ambient group");
    std::vector<Elem> kg;
    if (kernel_maps.empty()) {
        for (size_t i = 0; i < g.rank(); ++i) {
            Elem e = elem_zero(g);
            e[i] = 1 % g.orders[i];
            if (!elem_is_zero(e)) kg.push_back(e);
        }
    } else {
        Homomorphism st = kernel_maps[0];
        if (st.dom != g) throw Error("GroupMismatch", "kernel map domain differs from ambient group");
        for (size_t i = 1; i < kernel_maps.size(); ++i) st = hom_vcat(st, kernel_maps[i]);
        kg = kernel_gens(st);
    }
    std::vector<Elem> ig = image_gens(image_map);
    for (auto& y : ig)
        for (auto& km : kernel_maps)
            if (!elem_is_zero(hom_apply(km, y)))
                throw Error("ImageNotInKernel", "image is not contained in the kernel");
    return subquotient_gens(g, kg, ig);
}

// ---------------------------------------------------------------- enumeration

void for_each_element(const FinAbGroup& g, const std::function<void(const Elem&)>& fn, i64 guard) {
    if (g.order() > guard) throw Error("SizeGuardExceeded", "group of order " + std::to_string(g.order()));
    Elem e = elem_zero(g);
    const size_t k = g.rank();
    for (;;) {
        fn(e);
        size_t i = k;
        while (i > 0) {
            --i;
            if (++e[i] < g.orders[i]) break;
            e[i] = 0;
            if (i == 0) return;
        }
        if (k == 0) return;
    }
}

std::vector<Elem> enumerate_elements(const FinAbGroup& g, i64 guard) {
    std::vector<Elem> out;
    for_each_element(g, [&](const Elem& e) { out.push_back(e); }, guard);
    return out;
}

std::vector<Elem> subgroup_elements(const FinAbGroup& g, const std::vector<Elem>& gens, i64 guard) {
    std::set<Elem> S{elem_zero(g)};
    for (auto& x : gens) {
        std::vector<Elem> cur(S.begin(), S.end());
        Elem y = elem_reduce(g, x);
        while (!S.count(y)) {
            for (auto& s : cur) S.insert(elem_add(g, s, y));
            if ((i64)S.size() > guard) throw Error("SizeGuardExceeded", "subgroup too large to enumerate");
            y = elem_add(g, y, x);
        }
    }
    return std::vector<Elem>(S.begin(), S.end());
}

bool in_subgroup(const FinAbGroup& g, const std::vector<Elem>& gens, const Elem& x) {
    const i64 N = group_exponent(g);
    if (N == 1) return true;
    Matrix L = scaled_columns(g, gens, N);
    SmithResult s = smith_mod(L, N, true, false, false);
    std::vector<i64> xs(g.rank());
    for (size_t i = 0; i < g.rank(); ++i) xs[i] = mulmod(x[i], N / g.orders[i], N);
    for (size_t i = 0; i < g.rank(); ++i) {
        i64 v = 0;
        for (size_t l = 0; l < g.rank(); ++l) v = (v + mulmod(s.U[i][l], xs[l], N)) % N;
        i64 gi = N;
        if (!gens.empty() && i < s.diag.size() && s.diag[i]) gi = gcd64(s.diag[i], N);
        if (v % gi) return false;
    }
    return true;
}

Elem coset_min(const FinAbGroup& g, const std::vector<Elem>& gens, const Elem& x) {
    Elem best = elem_reduce(g, x);
    for (auto& s : subgroup_elements(g, gens)) best = std::min(best, elem_add(g, x, s));
    return best;
}

std::vector<Elem> subquotient_classes(const Subquotient& q, i64 guard) {
    const FinAbGroup& g = q.ambient;
    if (q.order() > guard) throw Error("SizeGuardExceeded", "too many classes");
    std::vector<Elem> imgs = subgroup_elements(g, q.image, guard);
    std::vector<Elem> out;
    std::vector<i64> z(q.invariant_factors.size(), 0);
    for (;;) {
        Elem e = elem_zero(g);
        for (size_t t = 0; t < z.size(); ++t) e = elem_add(g, e, elem_scale(g, z[t], q.transversal[t]));
        Elem best = e;
        for (auto& s : imgs) best = std::min(best, elem_add(g, e, s));
        out.push_back(best);
        size_t t = z.size();
        bool done = true;
        while (t > 0) {
            --t;
            if (++z[t] < q.invariant_factors[t]) {
                done = false;
                break;
            }
            z[t] = 0;
        }
        if (done) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace lcs
