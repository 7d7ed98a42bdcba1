#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "lcs/extensions.hpp"
#include "oracle.hpp"
#include "tiny.hpp"

using namespace lcs;

namespace {

std::vector<i64> flat(const Cochain& c, const ref::Group& I) {
    std::vector<i64> out;
    for (const Elem& y : c.v) out.push_back(I.index(y));
    return out;
}

std::vector<ActionPair> grid() {
    std::vector<ActionPair> out;
    for (const Tiny& t : tiny_instances()) out.push_back(tiny_ap(t));
    for (auto [p, nu, eta, m] : std::vector<std::tuple<i64, int, int, i64>>{{3, 1, 2, 3}, {3, 1, 2, 9}, {3, 2, 2, 9}, {5, 1, 1, 5}}) {
        auto P = make_params(p, nu, eta);
        for (const auto& c : enumerate_action_pairs_cyclic(P, m))
            out.push_back(make_action_pair(P, make_group({m}), Matrix{{c.a}}, Matrix{{c.b}}));
    }
    return out;
}


}  // namespace

TEST_CASE("extensions from cocycles are linear cycle sets") {
    for (const auto& ap : grid()) {
        ref::Group I(ap.I.orders);
        ref::H h(ap.P.p, ap.P.nu, ap.P.eta);
        ref::Ext R(I, h, ap.A.m, ap.B.m);
        for (const auto& c : compute_H2(ap).transversal) {
            ExtensionData E = extension_from_standard(ap, construct_f(ap, c));
            FiniteCycleSetTable T = build_extension(E);
            CHECK(verify_cycle_set(T).empty());
            CHECK(R.is_linear_cycle_set(flat(E.beta, I), flat(E.f, I)));
            CHECK(verify_extension_conditions(E).ok());
            CHECK(check_morphisms(E, T).ok());
            CHECK(socle_inclusion(E, T) == hom_is_zero(ap.B));
        }
    }
}

TEST_CASE("equivalence agrees with a brute-force coboundary set") {
    for (const auto& ap : grid()) {
        if (ap.P.n > 3 || ap.I.order() > 4) continue;
        ref::Group I(ap.I.orders);
        ref::H h(ap.P.p, ap.P.nu, ap.P.eta);
        ref::Ext R(I, h, ap.A.m, ap.B.m);
        const i64 n = h.n;
        std::set<std::pair<std::vector<i64>, std::vector<i64>>> shifts;
        std::vector<i64> phi(n, 0);
        while (true) {
            shifts.insert(R.trivial_shift(phi));
            i64 i = 1;
            while (i < n && ++phi[i] == I.size) phi[i++] = 0;
            if (i == n) break;
        }
        std::vector<ExtensionData> Es;
        for (const Elem& y : enumerate_elements(group_power(ap.I, 2))) {
            CocycleParams c = unpack(ap.I, y);
            if (admissibility_failure(ap, c).empty()) Es.push_back(extension_from_standard(ap, construct_f(ap, c)));
        }
        for (const auto& E1 : Es)
            for (const auto& E2 : Es) {
                std::vector<i64> db, df;
                auto b1 = flat(E1.beta, I), b2 = flat(E2.beta, I), f1 = flat(E1.f, I), f2 = flat(E2.f, I);
                for (size_t k = 0; k < b1.size(); ++k) {
                    db.push_back(I.index(I.add(I.at(b1[k]), I.scale(-1, I.at(b2[k])))));
                    df.push_back(I.index(I.add(I.at(f1[k]), I.scale(-1, I.at(f2[k])))));
                }
                bool want = shifts.count({db, df}) > 0;
                auto phi12 = are_equivalent(E1, E2);
                CHECK(phi12.has_value() == want);
                if (phi12) CHECK(is_equivalence(E1, E2, *phi12));
                CHECK(equivalence_exhaustive(E1, E2).has_value() == want);
            }
    }
}

TEST_CASE("a non-cocycle is refused") {
    auto ap = make_action_pair(make_params(3, 1, 1), make_group({3}), Matrix{{1}}, Matrix{{0}});
    TwoCochain c{cochain_zero(ap.P, ap.I, 0, 2), cochain_zero(ap.P, ap.I, 1, 1)};
    c.beta.at({1, 1}) = {1};
    REQUIRE_FALSE(is_2cocycle(c, ap));
    try {
        build_extension(ap, c);
        FAIL("expected NotACocycle");
    } catch (const Error& e) {
        CHECK(e.code == "NotACocycle");
    }
}

TEST_CASE("table size guard") {
    auto ap = make_action_pair(make_params(5, 1, 2), make_group({5, 5, 5}), Matrix{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}},
                               Matrix{{0, 0, 0}, {0, 0, 0}, {0, 0, 0}});
    ExtensionData E = extension_from_standard(ap, construct_f(ap, {{0, 0, 0}, {0, 0, 0}}));
    i64 old = ExtGuard::max_order;
    ExtGuard::max_order = 1000;
    CHECK_THROWS_AS(build_extension(E), Error);
    ExtGuard::max_order = old;
}
