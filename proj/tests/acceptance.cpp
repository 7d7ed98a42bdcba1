// One PASS/FAIL line per acceptance criterion. Exits nonzero only when a
// criterion outside `known_red` fails (or a known one fails for another reason).

#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "lcs/classify.hpp"
#include "oracle.hpp"
#include "suite.hpp"

using namespace lcs;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
    void fail(const std::string& why) {
        if (pass) detail = why;
        pass = false;
    }
};

std::string show(const std::vector<i64>& v) {
    std::ostringstream s;
    s << "[";
    for (size_t i = 0; i < v.size(); ++i) s << (i ? "," : "") << v[i];
    s << "]";
    return s.str();
}

ActionPair ap_of(i64 p, int nu, int eta, std::vector<i64> orders, const Matrix& A, const Matrix& B) {
    return make_action_pair(make_params(p, nu, eta), make_group(std::move(orders)), A, B);
}

Matrix ident(size_t k) {
    Matrix m(k, std::vector<i64>(k, 0));
    for (size_t i = 0; i < k; ++i) m[i][i] = 1;
    return m;
}
Matrix zero(size_t k) { return Matrix(k, std::vector<i64>(k, 0)); }

// every instance touched by criteria 1-6, for 7-10
std::vector<ActionPair> pool;
void remember(const ActionPair& ap) { pool.push_back(ap); }

void oracle_agrees(const ActionPair& ap, const std::vector<i64>& got, Outcome& o, const std::string& tag) {
    if (oracle_rows(ap.P, ap.I) > OracleGuard::max_rows) return;
    auto orc = oracle_H2(ap).invariant_factors;
    if (orc != got) o.fail(tag + ": oracle " + show(orc) + " vs " + show(got));
}

// 1. A = Id, B = 0
Outcome c1() {
    Outcome o;
    struct C {
        i64 p;
        int nu, eta;
        i64 m;
    };
    for (auto [p, nu, eta, m] : std::vector<C>{{3, 1, 1, 3}, {3, 1, 1, 9}, {3, 1, 2, 9}, {5, 1, 1, 5}, {3, 2, 2, 27}}) {
        ActionPair ap = ap_of(p, nu, eta, {m}, ident(1), zero(1));
        remember(ap);
        i64 g = ref::gcd(m, ref::ipow(p, nu));
        auto want = ref::cyclic_factors({g, g});
        auto got = compute_H2(ap).sq.invariant_factors;
        std::string tag = instance_tag(ap);
        if (got != want) o.fail(tag + ": " + show(got) + " vs I/p^nu I + I[p^nu] = " + show(want));
        if (h2_closed_identity(ap).invariant_factors != want) o.fail(tag + ": closed form differs");
        oracle_agrees(ap, got, o, tag);
    }
    return o;
}

// cyclic group cohomology of Z_{p^eta} acting through s, with H^0 optionally cut to I[p^e]
std::vector<i64> cyclic_h(const ActionPair& ap, const Matrix& s, int e) {
    auto cc = ref::cyclic_cohomology(ap.P.p, ap.I.orders, s, ap.P.n, e);
    return ref::merge(cc.h1, cc.h0);
}

// 2. p^nu I = 0, B = 0, I = Z3 and Z3^2
Outcome c2() {
    Outcome o;
    int rejected = 0, checked = 0;
    for (auto [nu, eta] : std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {2, 2}}) {
        auto P = make_params(3, nu, eta);
        std::vector<ActionPair> aps;
        for (i64 a = 0; a < 3; ++a) {
            ActionPair ap = make_action_pair(P, make_group({3}), Matrix{{a}}, zero(1));
            if (validate_action_pair(ap).ok()) aps.push_back(ap);
            else ++rejected;
        }
        for (int x = 0; x < 81; ++x) {
            Matrix A{{x % 3, x / 3 % 3}, {x / 9 % 3, x / 27}};
            ActionPair ap = make_action_pair(P, make_group({3, 3}), A, zero(2));
            if (validate_action_pair(ap).ok()) aps.push_back(ap);
        }
        for (const auto& ap : aps) {
            remember(ap);
            ++checked;
            auto want = cyclic_h(ap, ap.A.m, -1);
            auto got = compute_H2(ap).sq.invariant_factors;
            std::string tag = instance_tag(ap);
            if (got != want) o.fail(tag + ": " + show(got) + " vs cyclic cohomology " + show(want));
            if (h2_closed_pnu_B0(ap).invariant_factors != want) o.fail(tag + ": closed form differs");
            oracle_agrees(ap, got, o, tag);
        }
    }
    // on Z3, a = 0 is not invertible and 2^{3^eta} = 2, so both are rejected for each (nu, eta)
    if (rejected != 3 * 2) o.fail("expected a = 0 and a = 2 rejected, got " + std::to_string(rejected));
    o.detail = o.pass ? std::to_string(checked) + " actions" : o.detail;
    return o;
}

// 3. p^eta I = 0, B = 0, p | (A - Id)^{p-1}, with s = A + p^nu
Outcome c3() {
    Outcome o;
    auto P = make_params(3, 1, 2);
    std::vector<ActionPair> aps;
    for (i64 a : {1, 4, 7}) aps.push_back(make_action_pair(P, make_group({9}), Matrix{{a}}, zero(1)));
    for (i64 a = 0; a < 9; ++a) aps.push_back(make_action_pair(P, make_group({9, 9}), Matrix{{1, a}, {0, 1}}, zero(2)));
    for (const auto& ap : aps) {
        remember(ap);
        std::string tag = instance_tag(ap);
        if (!validate_action_pair(ap).ok()) {
            o.fail(tag + ": not a valid action");
            continue;
        }
        Matrix s = ap.A.m;
        for (size_t i = 0; i < s.size(); ++i) s[i][i] += P.pnu;
        auto want = cyclic_h(ap, s, P.nu);
        auto got = compute_H2(ap).sq.invariant_factors;
        if (got != want) o.fail(tag + ": " + show(got) + " vs " + show(want));
        if (h2_closed_peta(ap).invariant_factors != want) o.fail(tag + ": closed form differs");
        oracle_agrees(ap, got, o, tag);
    }
    return o;
}

// 4. trivial H, I cyclic: the families
Outcome c4() {
    Outcome o;
    struct C {
        i64 p;
        int eta, r;
    };
    int n = 0;
    for (auto [p, eta, r] : std::vector<C>{{3, 1, 1}, {3, 2, 1}, {3, 2, 2}, {3, 1, 2}, {2, 1, 1}, {2, 1, 2}, {2, 2, 3}}) {
        for (const auto& rep : classify_trivialH_cyclic(p, eta, r)) {
            ++n;
            remember(make_action_pair(make_params(p, eta, eta), make_group({ref::ipow(p, r)}), rep.A, rep.B));
            std::string tag = "p=" + std::to_string(p) + ",eta=" + std::to_string(eta) + ",r=" + std::to_string(r) + " " + rep.case_id;
            for (const auto& [name, ok] : rep.cross_checks)
                if (!ok) o.fail(tag + ": " + name);
            if ((i64)rep.family.size() != rep.h2_order) o.fail(tag + ": family size");
            auto b = ref::brute_H2(p, eta, eta, {ref::ipow(p, r)}, rep.A, rep.B, 5000);
            if (b && b->order() != rep.h2_order) o.fail(tag + ": brute-force count " + std::to_string(b->order()));
        }
    }
    if (o.pass) o.detail = std::to_string(n) + " families";
    return o;
}

// 5. yleft != 0, I = Z9, a = 4, b = 3
Outcome c5() {
    Outcome o;
    CaseReport r = classify_yleft_nonzero_cyclic(3, 2, 2, 2, 4, 3);
    ActionPair ap = ap_of(3, 2, 2, {9}, {{4}}, {{3}});
    remember(ap);
    for (const auto& [name, ok] : r.cross_checks)
        if (!ok) o.fail(name);
    i64 orc = oracle_H2(ap).order();
    if (r.h2_order != 9 || (i64)r.family.size() != 9 || orc != 9)
        o.fail("formula " + std::to_string(r.family.size()) + ", compute_H2 " + std::to_string(r.h2_order) + ", oracle " +
               std::to_string(orc) + "; required 9");
    if (o.pass) o.detail = "order 9 from formula, compute_H2 and oracle";
    return o;
}

// 6. I = Z3^2, A = [[1,1],[0,1]], B = [[0,1],[0,0]]: the stated order is 27
Outcome c6() {
    Outcome o;
    CaseReport r = classify_matrix_example(3, 1, 1, 1, 1, 1);
    ActionPair ap = ap_of(3, 1, 1, {3, 3}, {{1, 1}, {0, 1}}, {{0, 1}, {0, 0}});
    remember(ap);
    i64 formula = (i64)r.family.size(), snf = r.h2_order, orc = oracle_H2(ap).order();
    // rank count over F3, independent of the library
    i64 lin = *ref::linear_H2_order(3, 1, 1, {3, 3}, ap.A.m, ap.B.m);
    if (formula != 27 || snf != 27 || orc != 27 || lin != 27) {
        std::ostringstream s;
        if (formula == snf && snf == orc && orc == lin)
            s << "all routes give " << snf << "; required 27";
        else
            s << "formula " << formula << ", compute_H2 " << snf << ", oracle " << orc << ", rank count " << lin << "; required 27";
        o.fail(s.str());
    }
    return o;
}

// 7-10 run over the pool
Outcome over_pool(const std::function<void(const ActionPair&, Tally&)>& fn, const std::vector<std::string>& keys) {
    Tally t;
    std::set<std::string> seen;
    for (const auto& ap : pool) {
        if (!seen.insert(instance_tag(ap)).second) continue;
        fn(ap, t);
    }
    Outcome o;
    i64 n = 0;
    for (const auto& k : keys) {
        auto it = t.counts.find(k);
        if (it == t.counts.end()) continue;
        n += it->second.second;
        if (it->second.first != it->second.second)
            o.fail(k + ": " + std::to_string(it->second.first) + "/" + std::to_string(it->second.second));
    }
    auto nx = t.counts.find("no_exception");
    if (nx != t.counts.end() && nx->second.first != nx->second.second) o.fail(t.failures.empty() ? "exception" : t.failures[0]);
    if (n == 0) o.fail("nothing checked");
    if (o.pass) o.detail = std::to_string(n) + " checks over " + std::to_string(seen.size()) + " instances";
    return o;
}

SuiteOptions only(bool cocycles, bool identities, bool dsquare, bool extensions, bool oracle) {
    SuiteOptions s;
    s.cocycles = cocycles;
    s.identities = identities;
    s.dsquare = dsquare;
    s.extensions = extensions;
    s.oracle = oracle;
    return s;
}

Outcome c7() {
    // every transversal element and sampled class of each instance
    return over_pool([](const ActionPair& ap, Tally& t) { run_suite(ap, only(true, false, false, false, false), t); },
                     {"cocycle_total_d2", "cocycle_direct_equations", "cocycle_normalized"});
}

Outcome c8() {
    return over_pool([](const ActionPair& ap, Tally& t) { run_suite(ap, only(false, false, false, true, false), t); },
                     {"ext_conditions", "ext_cycle_set", "ext_morphisms", "ext_socle_iff_B0", "ext_distinct_inequivalent",
                      "ext_shift_equivalent"});
}

Outcome c9() {
    return over_pool(
        [](const ActionPair& ap, Tally& t) {
            if (ap.P.n > 27) return;
            run_suite(ap, only(false, true, true, false, false), t);
        },
        {"id_B_powers_gamma", "id_periodic_sum", "id_partial_sum_linear", "id_full_sum_scaling", "id_l_sum_linear",
         "id_R_and_S", "id_f_tilde_recursion", "id_necessary", "id_BAB_relation", "id_A_minus_AB_powers", "id_b_shift",
         "dsquare_deg1", "dsquare_deg2"});
}

Outcome c10() {
    Outcome o = over_pool([](const ActionPair& ap, Tally& t) { run_suite(ap, only(false, false, false, false, true), t); },
                          {"oracle_agreement"});
    // brute-force counts on instances small enough to enumerate
    int brute = 0;
    for (const auto& ap : pool) {
        auto b = ref::brute_H2(ap.P.p, ap.P.nu, ap.P.eta, ap.I.orders, ap.A.m, ap.B.m, 5000);
        if (!b) continue;
        ++brute;
        if (b->factors != compute_H2(ap).sq.invariant_factors) o.fail(instance_tag(ap) + ": brute-force count differs");
    }
    if (o.pass) o.detail += ", " + std::to_string(brute) + " brute-force";
    return o;
}

}  // namespace

int main() {
    // criteria expected to stay red, with the reason they are red
    const std::map<int, std::string> known_red = {{6, "all routes give 9; required 27"}};
    std::vector<std::function<Outcome()>> cs = {c1, c2, c3, c4, c5, c6, c7, c8, c9, c10};
    int unexpected = 0;
    for (size_t i = 0; i < cs.size(); ++i) {
        int k = (int)i + 1;
        Outcome o;
        try {
            o = cs[i]();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        std::cout << "criterion " << k << ": " << (o.pass ? "PASS" : "FAIL");
        if (!o.detail.empty()) std::cout << " (" << o.detail << ")";
        auto it = known_red.find(k);
        if (!o.pass && it != known_red.end() && o.detail == it->second) std::cout << " [expected]";
        else if (!o.pass) ++unexpected;
        else if (it != known_red.end()) std::cout << " [was expected to fail]";
        std::cout << std::endl;
    }
    return unexpected == 0 ? 0 : 1;
}
