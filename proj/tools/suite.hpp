#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "lcs/classify.hpp"
#include "lcs/extensions.hpp"

namespace lcs {

// pass / total per property, plus the first few failure messages
struct Tally {
    std::map<std::string, std::pair<i64, i64>> counts;
    std::vector<std::string> failures;
    bool disagreement = false;  // a route mismatch was seen

    void add(const std::string& name, bool ok, const std::string& where = "");
    void merge(const Tally& o);
    bool all_pass() const;
    i64 passed() const;
    i64 total() const;
};

struct SuiteOptions {
    bool cocycles = true;
    bool identities = true;
    bool dsquare = true;
    bool extensions = true;
    bool oracle = true;
    i64 max_classes = 32;       // classes taken per instance (transversal generators always included)
    i64 max_table = 256;        // |I| p^eta for extension tables
    unsigned seed = 12345;
};

// Params in H^2 to test: the transversal generators then further classes up to max_classes.
std::vector<CocycleParams> sample_classes(const ActionPair& ap, const H2Result& h, i64 max_classes);

void suite_oracle(const ActionPair& ap, const H2Result& h, Tally& t, const std::string& tag);
void suite_cocycles(const ActionPair& ap, const std::vector<CocycleParams>& cs, Tally& t, const std::string& tag);
void suite_identities(const ActionPair& ap, const std::vector<CocycleParams>& cs, Tally& t, const std::string& tag);
void suite_dsquare(const ActionPair& ap, unsigned seed, Tally& t, const std::string& tag);
void suite_extensions(const ActionPair& ap, const std::vector<CocycleParams>& cs, Tally& t, const std::string& tag);

// everything above on one instance
void run_suite(const ActionPair& ap, const SuiteOptions& o, Tally& t);

std::string instance_tag(const ActionPair& ap);

}  // namespace lcs
