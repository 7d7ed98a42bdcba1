#include "lcs/classify.hpp"

#include <functional>
#include <set>

#include "json.hpp"

namespace lcs {

namespace {

using FClosed = std::function<i64(i64 f0, i64 z1, i64 h, i64 hp)>;

struct Family {
    std::string id, desc;
    std::vector<CocycleParams> members;
    std::vector<i64> z1;  // first parameter of each member
    FClosed f;            // empty when the case gives no closed f
};

void hyp(bool ok, const std::string& msg) {
    if (!ok) throw Error("HypothesisViolated", msg);
}

// members (g(z1,z2)) for 0 <= z1 < m1, 0 <= z2 < m2, scalars mod N
void grid(Family& F, i64 N, i64 m1, i64 m2, const std::function<std::pair<i64, i64>(i64, i64)>& g) {
    for (i64 z1 = 0; z1 < m1; ++z1)
        for (i64 z2 = 0; z2 < m2; ++z2) {
            auto [f0, ga] = g(z1, z2);
            F.members.push_back({{mod(f0, N)}, {mod(ga, N)}});
            F.z1.push_back(z1);
        }
}

// C(h, l) mod N for 0 <= l <= h <= n
std::vector<std::vector<i64>> pascal(i64 n, i64 N) {
    std::vector<std::vector<i64>> C(n + 2, std::vector<i64>(n + 2, 0));
    for (i64 h = 0; h <= n + 1; ++h) {
        C[h][0] = 1 % N;
        for (i64 l = 1; l <= h; ++l) C[h][l] = mod(C[h - 1][l - 1] + C[h - 1][l], N);
    }
    return C;
}

i64 powmod(i64 b, i64 e, i64 N) {
    i64 r = 1 % N;
    b = mod(b, N);
    for (; e > 0; e >>= 1) {
        if (e & 1) r = mulmod(r, b, N);
        b = mulmod(b, b, N);
    }
    return r;
}

// sum_{l<h} C(h,l+1) q^l f0 h'  (= f0 h' sum_{j<h} (1+q)^j)
FClosed geometric_f(i64 q, i64 N, const std::vector<std::vector<i64>>& C) {
    return [q, N, C](i64 f0, i64, i64 h, i64 hp) {
        i64 s = 0;
        for (i64 l = 0; l < h; ++l) s = mod(s + mulmod(C[h][l + 1], powmod(q, l, N), N), N);
        return mulmod(mulmod(s, f0, N), hp, N);
    };
}

// sum_l A_{hl} q^l f0 h'  (= f0 h' sum_{j<h} (-1-q)^j)
FClosed alternating_f(i64 q, i64 N) {
    return [q, N](i64 f0, i64, i64 h, i64 hp) {
        i64 s = 0;
        for (i64 l = 0; l < h; ++l) s = mod(s + mulmod(mod(alt_binom_sum(h, l), N), powmod(q, l, N), N), N);
        return mulmod(mulmod(s, f0, N), hp, N);
    };
}

FClosed bilinear_f(i64 N) {
    return [N](i64 f0, i64, i64 h, i64 hp) { return mulmod(mulmod(f0, h, N), hp, N); };
}

// f0 h' for h odd, 0 for h even
FClosed sign_f(i64 N) {
    return [N](i64 f0, i64, i64 h, i64 hp) { return h % 2 ? mulmod(f0, hp, N) : 0; };
}

ActionPair cyclic_pair(const CycleSetParams& P, i64 N, i64 a, i64 b) {
    return make_action_pair(P, make_group({N}), Matrix{{mod(a, N)}}, Matrix{{mod(b, N)}});
}

// The family for one a (H trivial, I = Z_{p^r}, B = 0).
Family trivialH_family(i64 p, int eta, int r, i64 a) {
    const i64 N = ipow(p, r), n = ipow(p, eta);
    const auto C = pascal(n, N);
    Family F;
    auto pw = [p](i64 e) { return ipow(p, (unsigned)e); };

    if ((p != 2 && r <= eta) || (p == 2 && r <= std::min(2, eta))) {
        hyp(mod(a - 1, p) == 0, "a != 1 mod p");
        const i64 k = mod(a - 1, N) / p;
        if (k == 0) {
            F.id = "r<=eta/k=0";
            F.desc = "(z1,z2), 0<=z1,z2<p^r; f=f0hh'";
            grid(F, N, N, N, [](i64 z1, i64 z2) { return std::pair{z1, z2}; });
            F.f = bilinear_f(N);
        } else {
            const int u = valuation(k, p);
            F.id = "r<=eta/k!=0";
            F.desc = "(z1,p^{r-u-1}z2), 0<=z1,z2<p^{u+1}; f=sum_l C(h,l+1)p^{(u+1)l}s^l f0h'";
            grid(F, N, pw(u + 1), pw(u + 1), [&](i64 z1, i64 z2) { return std::pair{z1, pw(r - u - 1) * z2}; });
            F.f = geometric_f(mod(p * k, N), N, C);
        }
        return F;
    }
    if (p != 2 || (eta == 1 && r == 2)) {
        const i64 M = pw(r - eta);
        hyp(mod(a - 1, M) == 0, "a != 1 mod p^{r-eta}");
        const i64 k = mod(a - 1, N) / M;
        if (k == 0) {
            F.id = "r>eta/k=0";
            F.desc = "(p^{r-eta}z1,z2), 0<=z1,z2<p^eta; f=f0hh'";
            grid(F, N, n, n, [&](i64 z1, i64 z2) { return std::pair{M * z1, z2}; });
            F.f = bilinear_f(N);
            return F;
        }
        const int u = valuation(k, p);
        const i64 s = k / pw(u);
        if (r + u >= 2 * eta && p != 2) {
            F.id = "r>eta/k!=0,r+u>=2eta";
            F.desc = "(p^{r-eta}(z1-s z2),p^{eta-u}z2), 0<=z1<p^eta, 0<=z2<p^u; f=f0hh'";
            grid(F, N, n, pw(u), [&](i64 z1, i64 z2) { return std::pair{M * (z1 - s * z2), pw(eta - u) * z2}; });
            F.f = bilinear_f(N);
        } else if (r + u >= 2 * eta) {
            hyp(k == 1, "p=2 needs k=1");
            F.id = "r>eta/k!=0,r+u>=2eta,p=2";
            F.desc = "(2z1-z2,z2), 0<=z1,z2<2; f=f0hh'";
            grid(F, N, 2, 2, [](i64 z1, i64 z2) { return std::pair{2 * z1 - z2, z2}; });
            F.f = bilinear_f(N);
        } else {
            F.id = "r>eta/k!=0,r+u<2eta";
            F.desc = "(p^{r-eta}s z1,p^{eta-u}(z2-z1)), 0<=z1<p^u, 0<=z2<p^{r-eta+u}; "
                     "f=sum_l p^{(r-eta+u)l}s^l C(h,l+1) f0h'";
            grid(F, N, pw(u), pw(r - eta + u),
                 [&](i64 z1, i64 z2) { return std::pair{M * s * z1, pw(eta - u) * (z2 - z1)}; });
            F.f = geometric_f(mod(M * k, N), N, C);
        }
        return F;
    }
    // p = 2 and r >= 3
    const bool big = r > eta + 1;
    const i64 M = big ? pw(r - eta) : 4;
    const bool plus = mod(a - 1, M) == 0;
    hyp(plus || mod(a + 1, M) == 0, "a != +-1 mod " + std::to_string(M));
    const i64 k = plus ? mod(a - 1, N) / M : mod(-a - 1, N) / M;
    const i64 neg_q = mod(M * k, N);
    auto minus_one_family = [&](const std::string& id) {
        F.id = id;
        F.desc = "(z1,2^{r-1}z2+2^{eta-1}z1), 0<=z1,z2<2; f=f0h' for h odd, 0 for h even";
        grid(F, N, 2, 2, [&](i64 z1, i64 z2) { return std::pair{z1, pw(r - 1) * z2 + pw(eta - 1) * z1}; });
        F.f = sign_f(N);
    };
    if (!big) {
        if (k == 0 && plus && r <= eta) {
            F.id = "p=2,3<=r<=eta+1/k=0,a=1,r<=eta";
            F.desc = "(z1,z2), 0<=z1,z2<2^r; f=f0hh'";
            grid(F, N, N, N, [](i64 z1, i64 z2) { return std::pair{z1, z2}; });
            F.f = bilinear_f(N);
        } else if (k == 0 && plus) {
            F.id = "p=2,3<=r<=eta+1/k=0,a=1,r=eta+1";
            F.desc = "(2z1,z2), 0<=z1,z2<2^{r-1}; f=f0hh'";
            grid(F, N, N / 2, N / 2, [](i64 z1, i64 z2) { return std::pair{2 * z1, z2}; });
            F.f = bilinear_f(N);
        } else if (k == 0) {
            minus_one_family("p=2,3<=r<=eta+1/k=0,a=-1");
        } else if (plus) {
            const int u = valuation(k, 2);
            if (r <= eta) {
                F.id = "p=2,3<=r<=eta+1/k!=0,a=1+4k,r<=eta";
                F.desc = "(z1,2^{r-u-2}z2), 0<=z1,z2<2^{u+2}; f=sum_l C(h,l+1)4^l k^l f0h'";
                grid(F, N, pw(u + 2), pw(u + 2), [&](i64 z1, i64 z2) { return std::pair{z1, pw(r - u - 2) * z2}; });
            } else {
                F.id = "p=2,3<=r<=eta+1/k!=0,a=1+4k,r=eta+1";
                F.desc = "(2z1,2^{r-u-2}z2-2^{eta-u-1}z1), 0<=z1<2^{u+1}, 0<=z2<2^{u+2}; "
                         "f=sum_l C(h,l+1)4^l k^l f0h'";
                grid(F, N, pw(u + 1), pw(u + 2),
                     [&](i64 z1, i64 z2) { return std::pair{2 * z1, pw(r - u - 2) * z2 - pw(eta - u - 1) * z1}; });
            }
            F.f = geometric_f(neg_q, N, C);
        } else {
            F.id = "p=2,3<=r<=eta+1/k!=0,a=-1-4k";
            F.desc = "(z1,2^{r-1}z2+2^{eta-1}z1), 0<=z1,z2<2; f=sum_l A_{hl}4^l k^l f0h'";
            grid(F, N, 2, 2, [&](i64 z1, i64 z2) { return std::pair{z1, pw(r - 1) * z2 + pw(eta - 1) * z1}; });
            F.f = alternating_f(neg_q, N);
        }
        return F;
    }
    // p = 2, r > eta + 1
    if (k == 0) {
        if (plus) {
            F.id = "p=2,r>eta+1/k=0,a=1";
            F.desc = "(2^{r-eta}z1,z2), 0<=z1,z2<2^eta; f=f0hh'";
            grid(F, N, n, n, [&](i64 z1, i64 z2) { return std::pair{M * z1, z2}; });
            F.f = bilinear_f(N);
        } else {
            minus_one_family("p=2,r>eta+1/k=0,a=-1");
        }
        return F;
    }
    const int u = valuation(k, 2);
    const i64 s = k / pw(u);
    const std::string tail = r + u > 2 * eta ? ",r+u>2eta" : ",r+u<=2eta";
    if (!plus && k % 2) {
        F.id = "p=2,r>eta+1/k!=0" + tail + ",a=-1-2^{r-eta}k,k odd";
        F.desc = "(0,2^{r-1}z2), 0<=z2<2; f=0";
        grid(F, N, 1, 2, [&](i64, i64 z2) { return std::pair{i64(0), pw(r - 1) * z2}; });
        F.f = [](i64, i64, i64, i64) { return i64(0); };
    } else if (r + u > 2 * eta && plus) {
        F.id = "p=2,r>eta+1/k!=0" + tail + ",a=1+2^{r-eta}k";
        F.desc = "(2^{r-eta}(z1-s z2),2^{eta-u}z2), 0<=z1<2^eta, 0<=z2<2^u; f=f0hh'";
        grid(F, N, n, pw(u), [&](i64 z1, i64 z2) { return std::pair{M * (z1 - s * z2), pw(eta - u) * z2}; });
        F.f = bilinear_f(N);
    } else if (r + u > 2 * eta) {
        F.id = "p=2,r>eta+1/k!=0" + tail + ",a=-1-2^{r-eta}k,k even";
        F.desc = "(z1+2^{r-eta-1}k z1,2^{r-1}z2+2^{eta-1}z1), 0<=z1,z2<2; "
                 "f=z1h'+2^{r-eta-1}k z1hh' (h odd), -2^{r-eta-1}k z1hh' (h even)";
        const i64 e = pw(r - eta - 1) * k;
        grid(F, N, 2, 2, [&](i64 z1, i64 z2) { return std::pair{z1 + e * z1, pw(r - 1) * z2 + pw(eta - 1) * z1}; });
        F.f = [e, N](i64, i64 z1, i64 h, i64 hp) {
            i64 t = mulmod(mulmod(mulmod(e, z1, N), h, N), hp, N);
            return h % 2 ? mod(mulmod(z1, hp, N) + t, N) : mod(-t, N);
        };
    } else if (plus) {
        F.id = "p=2,r>eta+1/k!=0" + tail + ",a=1+2^{r-eta}k";
        F.desc = "(2^{r-eta}s z1,2^{eta-u}(z2-z1)), 0<=z1<2^u, 0<=z2<2^{r+u-eta}; "
                 "f=sum_l C(h,l+1)2^{(r-eta)l}k^l f0h'";
        grid(F, N, pw(u), pw(r + u - eta), [&](i64 z1, i64 z2) { return std::pair{M * s * z1, pw(eta - u) * (z2 - z1)}; });
        F.f = geometric_f(neg_q, N, C);
    } else {
        F.id = "p=2,r>eta+1/k!=0" + tail + ",a=-1-2^{r-eta}k,k even";
        F.desc = "(z1,2^{r-1}z2+2^{eta-1}c z1), c=1-2^{r-eta-1}k, 0<=z1,z2<2; f=sum_l A_{hl}2^{(r-eta)l}k^l f0h'";
        const i64 c = 1 - pw(r - eta - 1) * k;
        grid(F, N, 2, 2, [&](i64 z1, i64 z2) { return std::pair{z1, pw(r - 1) * z2 + pw(eta - 1) * c * z1}; });
        F.f = alternating_f(neg_q, N);
    }
    return F;
}

void add_check(CaseReport& rep, const std::string& name, bool ok) { rep.cross_checks.push_back({name, ok}); }

// compute_H2, admissibility, size, pairwise classes, oracle
void run_checks(const ActionPair& ap, CaseReport& rep) {
    H2Result h = compute_H2(ap);
    rep.h2_order = h.sq.order();
    rep.invariant_factors = h.sq.invariant_factors;
    bool adm = true;
    for (const auto& c : rep.family) adm = adm && admissibility_failure(ap, c).empty();
    add_check(rep, "admissible", adm);
    add_check(rep, "family_size", (i64)rep.family.size() == rep.h2_order);
    if (adm) {
        bool distinct = true;
        const auto& I = ap.I;
        if (rep.family.size() <= 200) {
            for (size_t i = 0; i < rep.family.size() && distinct; ++i)
                for (size_t j = i + 1; j < rep.family.size() && distinct; ++j) {
                    CocycleParams d{elem_sub(I, rep.family[i].f0, rep.family[j].f0),
                                    elem_sub(I, rep.family[i].gamma, rep.family[j].gamma)};
                    distinct = !is_coboundary(ap, d).has_value();
                }
        } else {
            FGMaps m = maps_FG(ap);
            std::vector<Elem> im = image_gens(m.G);
            std::set<Elem> seen;
            for (const auto& c : rep.family) distinct = distinct && seen.insert(coset_min(group_power(I, 2), im, pack(c))).second;
        }
        add_check(rep, "pairwise_inequivalent", distinct);
    }
    if (oracle_rows(ap.P, ap.I) <= OracleGuard::max_rows) {
        rep.oracle_ran = true;
        add_check(rep, "oracle", oracle_H2(ap).invariant_factors == rep.invariant_factors);
    }
}

Homomorphism first_block(const Homomorphism& m, const FinAbGroup& I) { return hom_hcat(m, hom_zero(I, I)); }
Homomorphism second_block(const Homomorphism& m, const FinAbGroup& I) { return hom_hcat(hom_zero(I, I), m); }

Homomorphism pow_sum(const ActionPair& ap) {
    Homomorphism s = hom_zero(ap.I, ap.I);
    for (i64 j = 0; j < ap.P.n; ++j) s = hom_add(s, A_pow(ap, j));
    return s;
}

bool kills(const FinAbGroup& I, i64 m) {
    for (i64 d : I.orders)
        if (m % d) return false;
    return true;
}

}  // namespace

bool CaseReport::ok() const {
    for (const auto& [name, pass] : cross_checks)
        if (!pass) return false;
    return true;
}

i64 alt_binom_sum(i64 h, i64 l) {
    i64 s = 0, c = 0;  // c = C(j, l)
    for (i64 j = l; j < h; ++j) {
        c = j == l ? 1 : c * j / (j - l);
        s += (j % 2 ? -c : c);
    }
    return s;
}

std::vector<CaseReport> classify_trivialH_cyclic(i64 p, int eta, int r) {
    hyp(is_prime(p), "p not prime");
    hyp(eta >= 1 && r >= 1, "eta, r must be positive");
    const CycleSetParams P = make_params(p, eta, eta);
    const i64 N = ipow(p, r);
    std::vector<CaseReport> out;
    for (const auto& cand : enumerate_action_pairs_cyclic(P, N)) {
        if (cand.b != 0) continue;
        ActionPair ap = cyclic_pair(P, N, cand.a, 0);
        Family F = trivialH_family(p, eta, r, cand.a);
        CaseReport rep;
        rep.case_id = F.id;
        rep.family_desc = F.desc;
        rep.A = ap.A.m;
        rep.B = ap.B.m;
        rep.family = F.members;
        run_checks(ap, rep);
        if (F.f && rep.cross_checks[0].second) {
            bool same = true;
            for (size_t i = 0; i < F.members.size() && same; ++i) {
                StandardCocycle sc = construct_f(ap, F.members[i]);
                for (i64 h = 0; h < P.n && same; ++h)
                    for (i64 hp = 0; hp < P.n && same; ++hp)
                        same = sc.c.f.at({h, hp})[0] == F.f(F.members[i].f0[0], F.z1[i], h, hp);
            }
            add_check(rep, "closed_form_f", same);
        }
        // A_{h0}, A_{h1} closed values
        if (F.id.find("A_{hl}") != std::string::npos || F.desc.find("A_{hl}") != std::string::npos) {
            bool ok = true;
            for (i64 h = 0; h <= P.n; ++h) {
                ok = ok && alt_binom_sum(h, 0) == (h % 2 ? 1 : 0);
                ok = ok && alt_binom_sum(h, 1) == (h % 2 ? (h - 1) / 2 : -h / 2);
            }
            add_check(rep, "A_hl_closed_values", ok);
        }
        if (F.id == "r>eta/k!=0,r+u>=2eta") {
            // h <> y = y + p^{r-eta+u} s h y
            const i64 k = mod(cand.a - 1, N) / ipow(p, r - eta);
            const int u = valuation(k, p);
            const i64 s = k / ipow(p, u);
            bool ok = true;
            for (i64 h = 0; h < P.n; ++h)
                ok = ok && diamond(ap, h, {1})[0] == mod(1 + ipow(p, r - eta + u) * s * h, N);
            add_check(rep, "action_form", ok);
        }
        out.push_back(std::move(rep));
    }
    return out;
}

CaseReport classify_yleft_nonzero_cyclic(i64 p, int nu, int eta, int r, i64 a, i64 b) {
    hyp(is_prime(p) && p != 2, "p must be an odd prime");
    hyp(1 <= r && r <= nu, "needs 1 <= r <= nu");
    const CycleSetParams P = make_params(p, nu, eta);
    const i64 N = ipow(p, r);
    a = mod(a, N);
    b = mod(b, N);
    hyp(mod(a - 1, p) == 0, "a != 1 mod p");
    ActionPair ap = cyclic_pair(P, N, a, b);
    Report v = validate_action_pair(ap);
    hyp(v.ok(), v.ok() ? "" : v.violations.front());
    const i64 k = (a - 1) / p;
    // k = 0 behaves as u + 1 = r (A = Id)
    const int u = k == 0 ? r - 1 : valuation(k, p);
    const i64 vv = k == 0 ? 1 : k / ipow(p, u);
    int t1 = u + 1, t2 = u + 1;
    if (b != 0) {
        const int s = valuation(b, p);
        const i64 d = b / ipow(p, s);
        hyp(s < r && r <= 2 * s, "b = p^s d needs s < r <= 2s");
        t1 = std::min(u + 1, s);
        t2 = t1;
        if (s == u + 1) {
            i64 w = vv + d + ipow(p, s) * vv * d;
            t2 = s + valuation(w, p, r);
        }
    }
    t1 = std::min(t1, r);
    t2 = std::min(t2, r);
    CaseReport rep;
    rep.case_id = b == 0 ? "I=Z_{p^r}/b=0" : "I=Z_{p^r}/b!=0";
    rep.family_desc = "(z1,p^{r-t1}z2), 0<=z1<p^{t2}, 0<=z2<p^{t1}; t1=" + std::to_string(t1) +
                      ", t2=" + std::to_string(t2);
    rep.A = ap.A.m;
    rep.B = ap.B.m;
    for (i64 z1 = 0; z1 < ipow(p, t2); ++z1)
        for (i64 z2 = 0; z2 < ipow(p, t1); ++z2) rep.family.push_back({{z1}, {mod(ipow(p, r - t1) * z2, N)}});
    run_checks(ap, rep);
    add_check(rep, "closed_form_order", rep.h2_order == ipow(p, t1 + t2));
    add_check(rep, "shortcut", h2_shortcut_pnu_zero(ap).invariant_factors == rep.invariant_factors);
    return rep;
}

CaseReport classify_matrix_example(i64 p, int nu, int eta, int r, i64 a, i64 b) {
    hyp(is_prime(p) && p != 2, "p must be an odd prime");
    hyp(1 <= r && r <= nu, "needs 1 <= r <= nu");
    const CycleSetParams P = make_params(p, nu, eta);
    const i64 N = ipow(p, r);
    a = mod(a, N);
    b = mod(b, N);
    const i64 c = mod(a + b, N);
    hyp(a != 0 && b != 0 && c != 0, "a, b and a+b must be nonzero");
    ActionPair ap = make_action_pair(P, make_group({N, N}), Matrix{{1, a}, {0, 1}}, Matrix{{0, b}, {0, 0}});
    Report v = validate_action_pair(ap);
    hyp(v.ok(), v.ok() ? "" : v.violations.front());
    const int c2 = valuation(c, p), t = std::min(valuation(a, p), valuation(b, p));
    CaseReport rep;
    rep.case_id = "I=Z_{p^r}^2/a,b,c!=0";
    rep.family_desc = "((z1,z2),(z3,p^{r-t}z4)), 0<=z1<p^{c2}, 0<=z2,z3<p^r, 0<=z4<p^t; c2=" + std::to_string(c2) +
                      ", t=" + std::to_string(t);
    rep.A = ap.A.m;
    rep.B = ap.B.m;
    const i64 pc = ipow(p, c2), pt = ipow(p, t), sh = ipow(p, r - t);
    for (i64 z1 = 0; z1 < pc; ++z1)
        for (i64 z2 = 0; z2 < N; ++z2)
            for (i64 z3 = 0; z3 < N; ++z3)
                for (i64 z4 = 0; z4 < pt; ++z4) rep.family.push_back({{z1, z2}, {z3, mod(sh * z4, N)}});
    run_checks(ap, rep);
    add_check(rep, "closed_form_order", rep.h2_order == pc * N * N * pt);
    add_check(rep, "shortcut", h2_shortcut_pnu_zero(ap).invariant_factors == rep.invariant_factors);
    return rep;
}

Subquotient h2_shortcut_pnu_zero(const ActionPair& ap) {
    const auto& I = ap.I;
    hyp(kills(I, ap.P.pnu), "p^nu I != 0");
    PolyData d = poly_data(ap);
    hyp(hom_is_zero(d.P_A), "P(A) != 0");
    hyp(hom_is_zero(hom_compose(ap.B, d.R_A)), "B R(A) != 0");
    Homomorphism id = hom_identity(I);
    Homomorphism M = hom_sub(hom_sub(id, ap.A), hom_compose(ap.B, ap.A));
    return subquotient(group_power(I, 2), {second_block(hom_sub(id, ap.A), I), second_block(ap.B, I)},
                       hom_vcat(M, hom_zero(I, I)));
}

Subquotient h2_closed_identity(const ActionPair& ap) {
    const auto& I = ap.I;
    hyp(hom_equal(ap.A, hom_identity(I)) && hom_is_zero(ap.B), "needs A = Id and B = 0");
    Homomorphism q = hom_scalar(I, ap.P.pnu);
    return subquotient(group_power(I, 2), {second_block(q, I)}, hom_vcat(q, hom_zero(I, I)));
}

Subquotient h2_closed_pnu_B0(const ActionPair& ap) {
    const auto& I = ap.I;
    hyp(kills(I, ap.P.pnu) && hom_is_zero(ap.B), "needs p^nu I = 0 and B = 0");
    Homomorphism am1 = hom_sub(ap.A, hom_identity(I));
    return subquotient(group_power(I, 2), {first_block(pow_sum(ap), I), second_block(am1, I)},
                       hom_vcat(am1, hom_zero(I, I)));
}

Subquotient h2_closed_peta(const ActionPair& ap) {
    const auto& I = ap.I;
    const i64 p = ap.P.p;
    hyp(kills(I, ap.P.n) && hom_is_zero(ap.B), "needs p^eta I = 0 and B = 0");
    Homomorphism am1 = hom_sub(ap.A, hom_identity(I));
    Homomorphism e = hom_power(am1, (unsigned long long)(p - 1));
    for (const auto& row : e.m)
        for (i64 x : row) hyp(x % p == 0, "p does not divide (A - Id)^{p-1}");
    Homomorphism sm1 = hom_add(am1, hom_scalar(I, ap.P.pnu));
    return subquotient(group_power(I, 2), {second_block(sm1, I), second_block(hom_scalar(I, ap.P.pnu), I)},
                       hom_vcat(sm1, hom_zero(I, I)));
}

std::string case_reports_json(const std::vector<CaseReport>& reps) {
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (const auto& r : reps) {
        nlohmann::ordered_json j;
        j["case_id"] = r.case_id;
        j["family_desc"] = r.family_desc;
        j["A"] = r.A;
        j["B"] = r.B;
        j["h2_order"] = r.h2_order;
        j["invariant_factors"] = r.invariant_factors;
        j["family_size"] = r.family.size();
        j["family"] = nlohmann::ordered_json::array();
        for (const auto& c : r.family) j["family"].push_back({{"f0", c.f0}, {"gamma", c.gamma}});
        nlohmann::ordered_json cc = nlohmann::ordered_json::object();
        for (const auto& [name, pass] : r.cross_checks) cc[name] = pass;
        j["cross_checks"] = cc;
        j["oracle_ran"] = r.oracle_ran;
        j["ok"] = r.ok();
        out.push_back(j);
    }
    return out.dump();
}

}  // namespace lcs
