#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "lcs/complex.hpp"
#include "oracle.hpp"
#include "tiny.hpp"

using namespace lcs;

namespace {

Elem rnd(const FinAbGroup& I, std::mt19937& g) {
    Elem y(I.rank());
    for (size_t i = 0; i < I.rank(); ++i) y[i] = std::uniform_int_distribution<i64>(0, I.orders[i] - 1)(g);
    return y;
}

// random normalized cochain, symmetric in the last two slots if asked
Cochain rnd_cochain(const ActionPair& ap, int r, int s, bool sym, std::mt19937& g) {
    Cochain c = cochain_zero(ap.P, ap.I, r, s);
    const int d = r + s;
    std::vector<i64> h(d, 1);
    while (true) {
        if (!sym || h[d - 2] <= h[d - 1]) {
            Elem y = rnd(ap.I, g);
            c.at(h) = y;
            std::swap(h[d - 2], h[d - 1]);
            if (sym) c.at(h) = y;
            std::swap(h[d - 2], h[d - 1]);
        }
        int i = d - 1;
        while (i >= 0 && h[i] == ap.P.n - 1) h[i--] = 1;
        if (i < 0) break;
        h[i]++;
    }
    return c;
}

std::vector<ActionPair> small_grid() {
    std::vector<ActionPair> out;
    for (auto [p, nu, eta, m] : std::vector<std::tuple<i64, int, int, i64>>{
             {2, 1, 1, 4}, {2, 2, 2, 4}, {2, 2, 3, 4}, {3, 1, 1, 9}, {3, 1, 2, 9}, {3, 2, 2, 3}, {5, 1, 1, 5}}) {
        auto P = make_params(p, nu, eta);
        for (const auto& c : enumerate_action_pairs_cyclic(P, m))
            out.push_back(make_action_pair(P, make_group({m}), Matrix{{c.a}}, Matrix{{c.b}}));
    }
    return out;
}

}  // namespace

TEST_CASE("the total differential squares to zero") {
    std::mt19937 g(2024);
    for (const auto& ap : small_grid()) {
        for (int rep = 0; rep < 3; ++rep) {
            Cochain t = rnd_cochain(ap, 0, 1, false, g);
            CHECK(is_zero(total_d2(total_d1(t, ap), ap)));
            TwoCochain c{rnd_cochain(ap, 0, 2, true, g), rnd_cochain(ap, 1, 1, false, g)};
            CHECK(is_zero(total_d3(total_d2(c, ap), ap)));
        }
    }
}

TEST_CASE("2-cocycles are exactly the extensions that are linear cycle sets") {
    for (const Tiny& t : tiny_instances()) {
        if (t.p == 2 && t.eta == 2) continue;  // 2^15 candidates, covered by the H^2 count below
        ActionPair ap = tiny_ap(t);
        ref::Group I(t.orders);
        ref::H h(t.p, t.nu, t.eta);
        ref::Ext E(I, h, t.A, t.B);
        const i64 n = h.n;
        std::vector<std::pair<i64, i64>> bc, fc;
        for (i64 a = 1; a < n; ++a)
            for (i64 b = 1; b < n; ++b) {
                if (a <= b) bc.push_back({a, b});
                fc.push_back({a, b});
            }
        std::vector<i64> x(bc.size() + fc.size(), 0);
        i64 agree = 0, total = 0;
        while (true) {
            TwoCochain c{cochain_zero(ap.P, ap.I, 0, 2), cochain_zero(ap.P, ap.I, 1, 1)};
            std::vector<i64> beta(n * n, 0), negf(n * n, 0);
            for (size_t i = 0; i < bc.size(); ++i) {
                auto [a, b] = bc[i];
                c.beta.at({a, b}) = c.beta.at({b, a}) = I.at(x[i]);
                beta[a * n + b] = beta[b * n + a] = x[i];
            }
            for (size_t i = 0; i < fc.size(); ++i) {
                auto [a, b] = fc[i];
                c.f.at({a, b}) = I.at(x[bc.size() + i]);
                negf[a * n + b] = I.index(I.scale(-1, I.at(x[bc.size() + i])));
            }
            bool lib = is_2cocycle(c, ap);
            bool a1 = lib == E.is_linear_cycle_set(beta, negf), a2 = lib == check_cocycle_equations(c, ap).ok();
            agree += a1;
            agree += a2;
            total += 2;
            size_t i = 0;
            while (i < x.size() && ++x[i] == I.size) x[i++] = 0;
            if (i == x.size()) break;
        }
        CHECK(agree == total);
    }
}

TEST_CASE("oracle H^2 matches the brute-force count") {
    for (const Tiny& t : tiny_instances()) {
        auto b = ref::brute_H2(t.p, t.nu, t.eta, t.orders, t.A, t.B);
        REQUIRE(b);
        CHECK(oracle_H2(tiny_ap(t)).invariant_factors == b->factors);
    }
}

TEST_CASE("rank count over F_p matches enumeration and the oracle") {
    for (const Tiny& t : tiny_instances()) {
        auto l = ref::linear_H2_order(t.p, t.nu, t.eta, t.orders, t.A, t.B);
        if (!l) continue;
        CHECK(*l == ref::brute_H2(t.p, t.nu, t.eta, t.orders, t.A, t.B)->order());
    }
    for (auto [a, b] : std::vector<std::pair<i64, i64>>{{0, 0}, {1, 0}, {0, 1}, {1, 1}, {2, 1}}) {
        Matrix A{{1, a}, {0, 1}}, B{{0, b}, {0, 0}};
        auto ap = make_action_pair(make_params(3, 1, 1), make_group({3, 3}), A, B);
        if (!validate_action_pair(ap).ok()) continue;
        CHECK(*ref::linear_H2_order(3, 1, 1, {3, 3}, A, B) == oracle_H2(ap).order());
    }
}

TEST_CASE("oracle guard") {
    auto P = make_params(5, 1, 2);
    auto ap = make_action_pair(P, make_group({25}), Matrix{{1}}, Matrix{{0}});
    CHECK(oracle_rows(P, ap.I) > OracleGuard::max_rows);
    try {
        oracle_H2(ap);
        FAIL("expected a guard error");
    } catch (const Error& e) {
        CHECK(e.code == "SizeGuardExceeded");
    }
}

TEST_CASE("normalization and shuffle compliance") {
    auto ap = make_action_pair(make_params(3, 1, 1), make_group({3}), Matrix{{1}}, Matrix{{0}});
    Cochain b = cochain_zero(ap.P, ap.I, 0, 2);
    CHECK(is_normalized(b));
    b.at({1, 2}) = {1};
    CHECK_FALSE(is_shuffle_compliant(b));
    b.at({2, 1}) = {1};
    CHECK(is_shuffle_compliant(b));
    b.at({0, 1}) = {2};
    CHECK_FALSE(is_normalized(b));
}
