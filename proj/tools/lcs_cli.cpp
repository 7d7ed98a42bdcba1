// lcs: command line front end
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "lcs/classify.hpp"
#include "lcs/extensions.hpp"
#include "suite.hpp"

using namespace lcs;
using json = nlohmann::ordered_json;

namespace {

struct RunConfig {
    i64 p = 0;
    int nu = 0, eta = 0;
    std::string group = "0";
    std::string A, B;  // JSON matrices; defaults Id and 0
    std::string f0, gamma;
    std::string method = "snf";
    std::string json_out;
    std::string cocycle_in, cocycle_out;
    std::string which;  // classify case
    int r = 0;
    i64 a = 0, b = 0;
    i64 max_size = 10000;
    bool json_flag = false;
};

int exit_code_for(const std::string& code) {
    if (code == "SizeGuardExceeded" || code == "OrderOverflow") return 3;
    if (code == "RouteDisagreement") return 4;
    return 2;
}

Matrix parse_matrix(const std::string& s, const FinAbGroup& I, bool identity) {
    if (s.empty()) {
        Matrix m(I.rank(), std::vector<i64>(I.rank(), 0));
        if (identity)
            for (size_t i = 0; i < I.rank(); ++i) m[i][i] = 1;
        return m;
    }
    try {
        return json::parse(s).get<Matrix>();
    } catch (const json::exception&) {
        throw Error("InvalidMatrix", std::string("bad matrix literal: ") + s);
    }
}

Elem parse_elem(const std::string& s, const FinAbGroup& I, const char* what) {
    if (s.empty()) return elem_zero(I);
    try {
        Elem y = json::parse(s).get<Elem>();
        elem_check(I, y);
        return y;
    } catch (const json::exception&) {
        throw Error("InvalidElement", std::string("bad ") + what + ": " + s);
    }
}

ActionPair action_from(const RunConfig& c) {
    CycleSetParams P = make_params(c.p, c.nu, c.eta);
    FinAbGroup I = parse_group(c.group);
    ActionPair ap = make_action_pair(P, I, parse_matrix(c.A, I, true), parse_matrix(c.B, I, false));
    Report v = validate_action_pair(ap);
    if (!v.ok()) throw Error("InvalidAction", v.violations.front());
    return ap;
}

json h2_obj(const Subquotient& sq) {
    json j;
    j["invariant_factors"] = sq.invariant_factors;
    j["order"] = sq.order();
    return j;
}

// the closed form that applies, tried in a fixed order
std::optional<std::pair<std::string, Subquotient>> closed_route(const ActionPair& ap) {
    using F = Subquotient (*)(const ActionPair&);
    const std::pair<const char*, F> routes[] = {{"A=Id", h2_closed_identity},
                                                {"p^nu I=0,B=0", h2_closed_pnu_B0},
                                                {"p^eta I=0,B=0", h2_closed_peta},
                                                {"p^nu I=0,P(A)=0,BR(A)=0", h2_shortcut_pnu_zero}};
    for (const auto& [name, fn] : routes) {
        try {
            return std::pair{std::string(name), fn(ap)};
        } catch (const Error& e) {
            if (e.code != "HypothesisViolated") throw;
        }
    }
    return std::nullopt;
}

json cmd_h2(const RunConfig& c) {
    ActionPair ap = action_from(c);
    const std::string m = c.method;
    if (m != "closed" && m != "snf" && m != "oracle" && m != "all")
        throw Error("InvalidMethod", "method must be closed, snf, oracle or all");
    json out;
    out["method"] = m;
    if (m == "snf") return json::parse(h2_json(compute_H2(ap)));
    if (m == "oracle") {
        json j = h2_obj(oracle_H2(ap));
        j["method"] = m;
        return j;
    }
    if (m == "closed") {
        auto cr = closed_route(ap);
        if (!cr) throw Error("HypothesisViolated", "no closed form applies to this instance");
        json j = h2_obj(cr->second);
        j["method"] = m;
        j["closed_form"] = cr->first;
        return j;
    }
    H2Result h = compute_H2(ap);
    out = json::parse(h2_json(h));
    out["method"] = m;
    json routes;
    bool agree = true;
    routes["snf"] = h2_obj(h.sq);
    if (auto cr = closed_route(ap)) {
        routes["closed"] = h2_obj(cr->second);
        routes["closed"]["closed_form"] = cr->first;
        agree = agree && cr->second.invariant_factors == h.sq.invariant_factors;
    } else {
        routes["closed"] = nullptr;
    }
    if (oracle_rows(ap.P, ap.I) <= OracleGuard::max_rows) {
        Subquotient q = oracle_H2(ap);
        routes["oracle"] = h2_obj(q);
        agree = agree && q.invariant_factors == h.sq.invariant_factors;
    } else {
        routes["oracle"] = nullptr;
    }
    out["routes"] = routes;
    out["agreement"] = agree;
    if (!agree) throw Error("RouteDisagreement", "h2 routes disagree: " + routes.dump());
    return out;
}

json cochain_json(const Cochain& c) {
    json a = json::array();
    for (const Elem& y : c.v) a.push_back(y);
    return a;
}

void fill_cochain(Cochain& c, const json& j, const char* what) {
    if (!j.is_array() || j.size() != c.v.size())
        throw Error("InvalidCocycleFile", std::string(what) + " must list " + std::to_string(c.v.size()) + " elements");
    for (size_t i = 0; i < c.v.size(); ++i) {
        Elem y = j[i].get<Elem>();
        elem_check(c.I, y);
        c.v[i] = y;
    }
}

json cmd_verify_cocycle(const RunConfig& c) {
    if (c.cocycle_in.empty()) throw Error("InvalidArgs", "--cocycle FILE is required");
    std::ifstream in(c.cocycle_in);
    if (!in) throw Error("InvalidArgs", "cannot read " + c.cocycle_in);
    json j;
    try {
        j = json::parse(in);
    } catch (const json::exception& e) {
        throw Error("InvalidCocycleFile", e.what());
    }
    RunConfig cc = c;
    try {
        cc.p = j.at("p").get<i64>();
        cc.nu = j.at("nu").get<int>();
        cc.eta = j.at("eta").get<int>();
        cc.group = j.at("group").get<std::string>();
        cc.A = j.at("A").dump();
        cc.B = j.at("B").dump();
    } catch (const json::exception& e) {
        throw Error("InvalidCocycleFile", e.what());
    }
    ActionPair ap = action_from(cc);
    TwoCochain t{cochain_zero(ap.P, ap.I, 0, 2), cochain_zero(ap.P, ap.I, 1, 1)};
    fill_cochain(t.beta, j.at("beta"), "beta");
    fill_cochain(t.f, j.at("f"), "f");
    json out;
    out["normalized"] = is_normalized(t.beta) && is_normalized(t.f) && is_shuffle_compliant(t.beta);
    out["is_2cocycle"] = is_2cocycle(t, ap);
    Report r = check_cocycle_equations(t, ap);
    out["direct_equations"] = r.ok();
    if (bool(out["is_2cocycle"]) != r.ok()) throw Error("RouteDisagreement", "total_d2 and the direct equations disagree");
    out["violations"] = r.violations;
    return out;
}

json cmd_build_extension(const RunConfig& c) {
    ActionPair ap = action_from(c);
    CocycleParams cp{parse_elem(c.f0, ap.I, "f0"), parse_elem(c.gamma, ap.I, "gamma")};
    if (ap.I.order() * ap.P.n > c.max_size) throw Error("SizeGuardExceeded", "|I| p^eta > --max-size");
    StandardCocycle sc = construct_f(ap, cp);
    ExtensionData E = extension_from_standard(ap, sc);
    FiniteCycleSetTable T = build_extension(E);
    if (!c.cocycle_out.empty()) {
        json cj;
        cj["p"] = ap.P.p;
        cj["nu"] = ap.P.nu;
        cj["eta"] = ap.P.eta;
        cj["group"] = group_literal(ap.I);
        cj["A"] = ap.A.m;
        cj["B"] = ap.B.m;
        cj["beta"] = cochain_json(sc.c.beta);
        cj["f"] = cochain_json(sc.c.f);
        std::ofstream o(c.cocycle_out);
        if (!o) throw Error("InvalidArgs", "cannot write " + c.cocycle_out);
        o << cj.dump() << "\n";
    }
    json out = json::parse(extension_json(E, T));
    json checks;
    checks["extension_conditions"] = verify_extension_conditions(E).ok();
    if (T.order <= 4096) checks["cycle_set"] = verify_cycle_set(T).empty();
    checks["morphisms"] = check_morphisms(E, T).ok();
    checks["socle_contains_I"] = socle_inclusion(E, T);
    out["checks"] = checks;
    return out;
}

json cmd_enumerate_actions(const RunConfig& c) {
    CycleSetParams P = make_params(c.p, c.nu, c.eta);
    FinAbGroup I = parse_group(c.group);
    if (I.rank() != 1) throw Error("InvalidGroup", "enumerate-actions needs a cyclic group Zn");
    json out;
    out["p"] = P.p;
    out["nu"] = P.nu;
    out["eta"] = P.eta;
    out["group"] = group_literal(I);
    json pairs = json::array();
    for (const auto& x : enumerate_action_pairs_cyclic(P, I.orders[0])) {
        json e;
        e["a"] = x.a;
        e["b"] = x.b;
        e["case"] = x.case_tag;
        pairs.push_back(e);
    }
    out["count"] = pairs.size();
    out["pairs"] = pairs;
    return out;
}

json cmd_classify(const RunConfig& c) {
    std::vector<CaseReport> reps;
    json out;
    out["case"] = c.which;
    if (c.which == "trivialH") {
        reps = classify_trivialH_cyclic(c.p, c.eta, c.r);
    } else if (c.which == "yleft") {
        reps.push_back(classify_yleft_nonzero_cyclic(c.p, c.nu, c.eta, c.r, c.a, c.b));
    } else if (c.which == "matrix") {
        try {
            reps.push_back(classify_matrix_example(c.p, c.nu, c.eta, c.r, c.a, c.b));
        } catch (const Error& e) {
            if (e.code != "HypothesisViolated" || !is_prime(c.p) || c.p == 2 || c.r < 1 || c.r > c.nu) throw;
            const i64 N = ipow(c.p, c.r);
            if (mod(c.a, N) && mod(c.b, N) && mod(c.a + c.b, N)) throw;
            // one of a, b, a+b is zero: straight to compute_H2
            RunConfig cc = c;
            cc.group = "Z" + std::to_string(N) + "+Z" + std::to_string(N);
            cc.A = json(Matrix{{1, mod(c.a, N)}, {0, 1}}).dump();
            cc.B = json(Matrix{{0, mod(c.b, N)}, {0, 0}}).dump();
            out["fallback"] = "compute_H2";
            out["reason"] = e.what();
            out["h2"] = json::parse(h2_json(compute_H2(action_from(cc))));
            return out;
        }
    } else {
        throw Error("InvalidArgs", "--case must be trivialH, yleft or matrix");
    }
    out["reports"] = json::parse(case_reports_json(reps));
    bool ok = true;
    for (const auto& r : reps) ok = ok && r.ok();
    out["all_ok"] = ok;
    return out;
}

json cmd_selfcheck(const RunConfig& c) {
    Tally all;
    i64 instances = 0, skipped = 0;
    SuiteOptions o;
    for (i64 p : {3, 5})
        for (auto [nu, eta] : std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {2, 2}, {2, 3}, {2, 4}}) {
            CycleSetParams P = make_params(p, nu, eta);
            for (const FinAbGroup& I : {make_group({p}), make_group({p * p}), make_group({p, p})}) {
                if (I.order() * P.n > c.max_size) {
                    ++skipped;
                    continue;
                }
                std::vector<ActionPair> aps;
                if (I.rank() == 1) {
                    for (const auto& x : enumerate_action_pairs_cyclic(P, I.orders[0]))
                        aps.push_back(make_action_pair(P, I, Matrix{{x.a}}, Matrix{{x.b}}));
                } else {
                    for (i64 a : {0, 1})
                        for (i64 b : {0, 1}) {
                            ActionPair ap = make_action_pair(P, I, Matrix{{1, a}, {0, 1}}, Matrix{{0, b}, {0, 0}});
                            if (validate_action_pair(ap).ok()) aps.push_back(ap);
                        }
                }
                for (const auto& ap : aps) {
                    ++instances;
                    SuiteOptions oo = o;
                    // the cubic sweeps stay on small H
                    oo.cocycles = oo.identities = P.n <= 27;
                    run_suite(ap, oo, all);
                }
            }
        }
    json out;
    out["instances"] = instances;
    out["skipped_by_max_size"] = skipped;
    out["passed"] = all.passed();
    out["total"] = all.total();
    json props;
    for (const auto& [k, v] : all.counts) props[k] = {v.first, v.second};
    out["properties"] = props;
    out["failures"] = all.failures;
    out["all_pass"] = all.all_pass();
    if (all.disagreement) throw Error("RouteDisagreement", "selfcheck saw a route mismatch: " + out.dump());
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"lcs: cohomology of the linear cycle sets Z_{p^eta}, i.j = (1 - p^nu i) j"};
    app.require_subcommand(1);
    RunConfig c;
    std::string out_path;

    auto common = [&](CLI::App* s) {
        s->add_option("--p", c.p, "prime p")->required();
        s->add_option("--nu", c.nu, "nu")->required();
        s->add_option("--eta", c.eta, "eta")->required();
        s->add_option("--group", c.group, "coefficient group, e.g. Z9+Z3");
        s->add_option("--A", c.A, "matrix of 1 <> -, JSON rows (default Id)");
        s->add_option("--B", c.B, "matrix of - -< 1, JSON rows (default 0)");
    };
    auto with_out = [&](CLI::App* s) { s->add_option("--json-out", out_path, "write the JSON here instead of stdout"); };

    CLI::App* h2 = app.add_subcommand("h2", "second cohomology group");
    common(h2);
    h2->add_option("--method", c.method, "closed | snf | oracle | all");
    with_out(h2);

    CLI::App* vc = app.add_subcommand("verify-cocycle", "check a (beta, f) file");
    vc->add_option("--cocycle", c.cocycle_in, "cocycle JSON file")->required();
    with_out(vc);

    CLI::App* be = app.add_subcommand("build-extension", "table of I x_{beta,f} H");
    common(be);
    be->add_option("--f0", c.f0, "f0 as a JSON array");
    be->add_option("--gamma", c.gamma, "gamma as a JSON array");
    be->add_option("--max-size", c.max_size, "bound on |I| p^eta");
    be->add_option("--cocycle-out", c.cocycle_out, "also write the cocycle (beta, f) here");
    with_out(be);

    CLI::App* ea = app.add_subcommand("enumerate-actions", "all (a,b) for I = Zn");
    ea->add_option("--p", c.p)->required();
    ea->add_option("--nu", c.nu)->required();
    ea->add_option("--eta", c.eta)->required();
    ea->add_option("--group", c.group)->required();
    ea->add_flag("--json", c.json_flag, "accepted; output is always JSON");
    with_out(ea);

    CLI::App* cl = app.add_subcommand("classify", "worked classification cases");
    cl->add_option("--case", c.which, "trivialH | yleft | matrix")->required();
    cl->add_option("--p", c.p)->required();
    cl->add_option("--nu", c.nu);
    cl->add_option("--eta", c.eta)->required();
    cl->add_option("--r", c.r)->required();
    cl->add_option("--a", c.a);
    cl->add_option("--b", c.b);
    with_out(cl);

    CLI::App* sc = app.add_subcommand("selfcheck", "property suite over a small grid");
    sc->add_option("--max-size", c.max_size, "bound on |I| p^eta per instance");
    with_out(sc);

    CLI11_PARSE(app, argc, argv);

    json out;
    int code = 0;
    try {
        if (*h2) out = cmd_h2(c);
        else if (*vc) out = cmd_verify_cocycle(c);
        else if (*be) out = cmd_build_extension(c);
        else if (*ea) out = cmd_enumerate_actions(c);
        else if (*cl) {
            if (c.which == "trivialH") c.nu = c.eta;
            out = cmd_classify(c);
        } else if (*sc) {
            out = cmd_selfcheck(c);
            if (!out["all_pass"].get<bool>()) code = 1;
        }
    } catch (const Error& e) {
        json err;
        err["error"] = e.code;
        err["message"] = e.what();
        std::cout << err.dump() << "\n";
        return exit_code_for(e.code);
    } catch (const std::exception& e) {
        json err;
        err["error"] = "InternalError";
        err["message"] = e.what();
        std::cout << err.dump() << "\n";
        return 2;
    }
    std::string text = out.dump(2) + "\n";
    if (!out_path.empty()) {
        std::ofstream f(out_path);
        if (!f) {
            std::cout << json{{"error", "InvalidArgs"}, {"message", "cannot write " + out_path}}.dump() << "\n";
            return 2;
        }
        f << text;
    } else {
        std::cout << text;
    }
    return code;
}
