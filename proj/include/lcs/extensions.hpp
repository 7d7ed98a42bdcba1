#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lcs/cohomology.hpp"

namespace lcs {

// beta and f are the maps of I x_{beta,f} H themselves (already sign-flipped
// when the data comes from a cocycle).
struct ExtensionData {
    ActionPair ap;
    Cochain beta, f;
    std::optional<CocycleParams> params;  // set when built from a standard cocycle
};

struct ExtElem {
    Elem y;
    i64 h = 0;
    bool operator==(const ExtElem& o) const { return h == o.h && y == o.y; }
};

struct ExtGuard {
    static i64 max_order;  // |I| p^eta for table builds, default 10^4
};

// (beta, f) cocycle -> extension data with (beta, -f); the only sign flip.
ExtensionData extension_from_cocycle(const ActionPair& ap, const TwoCochain& c);
ExtensionData extension_from_standard(const ActionPair& ap, const StandardCocycle& sc);

ExtElem ext_add(const ExtensionData& E, const ExtElem& a, const ExtElem& b);
ExtElem ext_dot(const ExtensionData& E, const ExtElem& a, const ExtElem& b);

// element index = h |I| + mixed-radix index of y
i64 ext_index(const ExtensionData& E, const ExtElem& x);
ExtElem ext_element(const ExtensionData& E, i64 idx);

FiniteCycleSetTable build_extension(const ExtensionData& E);
// checks the cocycle first (NotACocycle)
FiniteCycleSetTable build_extension(const ActionPair& ap, const TwoCochain& c);

Report verify_extension_conditions(const ExtensionData& E);
// iota additive/multiplicative, pi additive/multiplicative, pi iota = 0
Report check_morphisms(const ExtensionData& E, const FiniteCycleSetTable& T);
bool socle_inclusion(const ExtensionData& E, const FiniteCycleSetTable& T);

struct EquivGuard {
    static i64 limit;  // |I|^{p^eta - 1}, default 10^6
};
// phi : H -> I (phi(0) = 0) as a (0,1) cochain
std::optional<Cochain> equivalence_exhaustive(const ExtensionData& E1, const ExtensionData& E2);
bool is_equivalence(const ExtensionData& E1, const ExtensionData& E2, const Cochain& phi);
// primary route through is_coboundary when both carry params; both routes when the guard allows
std::optional<Cochain> are_equivalent(const ExtensionData& E1, const ExtensionData& E2);

std::string extension_json(const ExtensionData& E, const FiniteCycleSetTable& T);

}  // namespace lcs
