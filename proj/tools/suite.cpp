#include "suite.hpp"

#include <random>
#include <set>
#include <sstream>

namespace lcs {

void Tally::add(const std::string& name, bool ok, const std::string& where) {
    auto& c = counts[name];
    c.second++;
    if (ok) c.first++;
    else if (failures.size() < 20) failures.push_back(name + (where.empty() ? "" : " @ " + where));
}

void Tally::merge(const Tally& o) {
    for (const auto& [k, v] : o.counts) {
        counts[k].first += v.first;
        counts[k].second += v.second;
    }
    for (const auto& f : o.failures)
        if (failures.size() < 20) failures.push_back(f);
    disagreement = disagreement || o.disagreement;
}

bool Tally::all_pass() const {
    for (const auto& [k, v] : counts)
        if (v.first != v.second) return false;
    return true;
}

i64 Tally::passed() const {
    i64 s = 0;
    for (const auto& [k, v] : counts) s += v.first;
    return s;
}

i64 Tally::total() const {
    i64 s = 0;
    for (const auto& [k, v] : counts) s += v.second;
    return s;
}

std::string instance_tag(const ActionPair& ap) {
    std::ostringstream s;
    s << "p=" << ap.P.p << ",nu=" << ap.P.nu << ",eta=" << ap.P.eta << "," << group_literal(ap.I) << ",A=[";
    for (const auto& r : ap.A.m)
        for (i64 x : r) s << x << " ";
    s << "],B=[";
    for (const auto& r : ap.B.m)
        for (i64 x : r) s << x << " ";
    s << "]";
    return s.str();
}

std::vector<CocycleParams> sample_classes(const ActionPair& ap, const H2Result& h, i64 max_classes) {
    std::vector<CocycleParams> out = h.transversal;
    if (h.sq.order() <= 4 * max_classes) {
        // one parameter per class: skip the classes of the generators
        const FinAbGroup I2 = group_power(ap.I, 2);
        std::set<Elem> seen;
        for (const auto& c : out) seen.insert(coset_min(I2, h.sq.image, pack(c)));
        for (const Elem& y : subquotient_classes(h.sq)) {
            if ((i64)out.size() >= max_classes) break;
            if (seen.insert(y).second) out.push_back(unpack(ap.I, y));
        }
    }
    return out;
}

void suite_oracle(const ActionPair& ap, const H2Result& h, Tally& t, const std::string& tag) {
    if (oracle_rows(ap.P, ap.I) > OracleGuard::max_rows) return;
    bool same = oracle_H2(ap).invariant_factors == h.sq.invariant_factors;
    if (!same) t.disagreement = true;
    t.add("oracle_agreement", same, tag);
}

void suite_cocycles(const ActionPair& ap, const std::vector<CocycleParams>& cs, Tally& t, const std::string& tag) {
    for (const auto& c : cs) {
        StandardCocycle sc = construct_f(ap, c);
        t.add("cocycle_total_d2", is_2cocycle(sc.c, ap), tag);
        t.add("cocycle_direct_equations", check_cocycle_equations(sc.c, ap).ok(), tag);
        t.add("cocycle_normalized", is_normalized(sc.c.beta) && is_normalized(sc.c.f) && is_shuffle_compliant(sc.c.beta), tag);
    }
}

void suite_identities(const ActionPair& ap, const std::vector<CocycleParams>& cs, Tally& t, const std::string& tag) {
    for (const auto& c : cs) {
        t.add("id_B_powers_gamma", check_B_powers_gamma(ap, c).ok(), tag);
        t.add("id_periodic_sum", check_periodic_sum(ap, c).ok(), tag);
        t.add("id_partial_sum_linear", check_partial_sum_linear(ap, c).ok(), tag);
        t.add("id_full_sum_scaling", check_full_sum_scaling(ap, c).ok(), tag);
        t.add("id_l_sum_linear", check_l_sum_linear(ap, c).ok(), tag);
        t.add("id_R_and_S", check_R_and_S(ap, c).ok(), tag);
        t.add("id_f_tilde_recursion", check_f_tilde_recursion(ap, c).ok(), tag);
        t.add("id_necessary", check_necessary(ap, construct_f(ap, c)).ok(), tag);
    }
    t.add("id_BAB_relation", check_BAB_relation(ap).ok(), tag);
    t.add("id_A_minus_AB_powers", check_A_minus_AB_powers(ap).ok(), tag);
    t.add("id_b_shift", check_b_shift(ap.P).ok(), tag);
}

namespace {

Elem rand_elem(const FinAbGroup& I, std::mt19937& g) {
    Elem y(I.rank());
    for (size_t i = 0; i < I.rank(); ++i) y[i] = std::uniform_int_distribution<i64>(0, I.orders[i] - 1)(g);
    return y;
}

// random normalized cochain; `sym` makes it symmetric in its last two arguments
Cochain rand_cochain(const ActionPair& ap, int r, int s, bool sym, std::mt19937& g) {
    Cochain c = cochain_zero(ap.P, ap.I, r, s);
    const int d = r + s;
    const i64 n = ap.P.n;
    std::vector<i64> h(d, 1);
    while (true) {
        if (!sym || h[d - 2] <= h[d - 1]) {
            Elem y = rand_elem(ap.I, g);
            c.at(h) = y;
            if (sym) {
                std::swap(h[d - 2], h[d - 1]);
                c.at(h) = y;
                std::swap(h[d - 2], h[d - 1]);
            }
        }
        int i = d - 1;
        while (i >= 0 && h[i] == n - 1) h[i--] = 1;
        if (i < 0) break;
        h[i]++;
    }
    return c;
}

}  // namespace

void suite_dsquare(const ActionPair& ap, unsigned seed, Tally& t, const std::string& tag) {
    if (ap.P.n > 9) return;
    std::mt19937 g(seed);
    for (int rep = 0; rep < 2; ++rep) {
        Cochain t1 = rand_cochain(ap, 0, 1, false, g);
        t.add("dsquare_deg1", is_zero(total_d2(total_d1(t1, ap), ap)), tag);
        TwoCochain c2{rand_cochain(ap, 0, 2, true, g), rand_cochain(ap, 1, 1, false, g)};
        t.add("dsquare_deg2", is_zero(total_d3(total_d2(c2, ap), ap)), tag);
    }
}

void suite_extensions(const ActionPair& ap, const std::vector<CocycleParams>& cs, Tally& t, const std::string& tag) {
    const auto& I = ap.I;
    std::vector<ExtensionData> Es;
    for (const auto& c : cs) {
        ExtensionData E = extension_from_standard(ap, construct_f(ap, c));
        FiniteCycleSetTable T = build_extension(E);
        t.add("ext_conditions", verify_extension_conditions(E).ok(), tag);
        t.add("ext_cycle_set", verify_cycle_set(T).empty(), tag);
        t.add("ext_morphisms", check_morphisms(E, T).ok(), tag);
        t.add("ext_socle_iff_B0", socle_inclusion(E, T) == hom_is_zero(ap.B), tag);
        Es.push_back(std::move(E));
    }
    if (Es.empty()) return;
    // distinct classes are inequivalent; a shift by im G is equivalent
    for (size_t i = 0; i < Es.size() && i < 4; ++i)
        for (size_t j = i + 1; j < Es.size() && j < 4; ++j)
            t.add("ext_distinct_inequivalent", !are_equivalent(Es[i], Es[j]).has_value(), tag);
    FGMaps m = maps_FG(ap);
    for (const Elem& t0 : enumerate_elements(I)) {
        if (elem_is_zero(t0)) continue;
        CocycleParams d = unpack(I, hom_apply(m.G, t0));
        const CocycleParams& c = *Es.back().params;
        CocycleParams s{elem_add(I, c.f0, d.f0), elem_add(I, c.gamma, d.gamma)};
        t.add("ext_shift_equivalent", are_equivalent(Es.back(), extension_from_standard(ap, construct_f(ap, s))).has_value(), tag);
        break;
    }
}

void run_suite(const ActionPair& ap, const SuiteOptions& o, Tally& t) {
    const std::string tag = instance_tag(ap);
    try {
        H2Result h = compute_H2(ap);
        if (o.oracle) suite_oracle(ap, h, t, tag);
        std::vector<CocycleParams> cs = sample_classes(ap, h, o.max_classes);
        if (o.cocycles) suite_cocycles(ap, cs, t, tag);
        if (o.identities) suite_identities(ap, cs, t, tag);
        if (o.dsquare) suite_dsquare(ap, o.seed, t, tag);
        if (o.extensions && ap.I.order() * ap.P.n <= o.max_table) {
            if ((i64)cs.size() > 6) cs.resize(6);
            suite_extensions(ap, cs, t, tag);
        }
    } catch (const Error& e) {
        if (e.code == "RouteDisagreement") t.disagreement = true;
        t.add("no_exception", false, tag + ": " + e.what());
    }
}

}  // namespace lcs
