#pragma once

#include <vector>

#include "lcs/abgroup.hpp"
#include "lcs/actions.hpp"

namespace lcs {

// Dense normalized cochain H^{r+s} -> I of bidegree (r,s); tuples indexed base p^eta.
struct Cochain {
    int r = 0, s = 1;
    i64 n = 1;
    FinAbGroup I;
    std::vector<Elem> v;

    int deg() const { return r + s; }
    size_t index(const i64* h) const {
        size_t k = 0;
        for (int i = 0; i < deg(); ++i) k = k * n + (size_t)mod(h[i], n);
        return k;
    }
    const Elem& at(std::initializer_list<i64> h) const { return v[index(h.begin())]; }
    Elem& at(std::initializer_list<i64> h) { return v[index(h.begin())]; }
    const Elem& at(const std::vector<i64>& h) const { return v[index(h.data())]; }
    Elem& at(const std::vector<i64>& h) { return v[index(h.data())]; }
};

Cochain cochain_zero(const CycleSetParams& P, const FinAbGroup& I, int r, int s);
bool cochain_equal(const Cochain& a, const Cochain& b);
bool cochain_is_zero(const Cochain& c);
Cochain cochain_add(const Cochain& a, const Cochain& b);
Cochain cochain_scale(i64 k, const Cochain& c);
bool is_normalized(const Cochain& c);
bool is_shuffle_compliant(const Cochain& c);

struct TwoCochain {
    Cochain beta;  // (0,2)
    Cochain f;     // (1,1)
};
struct ThreeCochain {
    Cochain c03, c12, c21;
};
struct FourCochain {
    Cochain c04, c13, c22, c31;
};

Cochain del_h(const Cochain& c, const ActionPair& ap);
Cochain del_v(const Cochain& c);
Cochain D_map(const Cochain& c, const ActionPair& ap);
TwoCochain total_d1(const Cochain& t, const ActionPair& ap);
ThreeCochain total_d2(const TwoCochain& c, const ActionPair& ap);
FourCochain total_d3(const ThreeCochain& c, const ActionPair& ap);
bool is_zero(const ThreeCochain& c);
bool is_zero(const FourCochain& c);
bool is_2cocycle(const TwoCochain& c, const ActionPair& ap);
// The two component equations of a 2-cocycle written out pointwise over H^3.
Report check_cocycle_equations(const TwoCochain& c, const ActionPair& ap);

struct OracleGuard {
    static i64 max_rows;  // default 5000
};
Subquotient oracle_H2(const ActionPair& ap, i64 max_rows = OracleGuard::max_rows);
// oracle rows that oracle_H2 would build
i64 oracle_rows(const CycleSetParams& P, const FinAbGroup& I);

}  // namespace lcs
