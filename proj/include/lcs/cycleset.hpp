#pragma once

#include <string>
#include <vector>

#include "lcs/abgroup.hpp"

namespace lcs {

// H = (Z_{p^eta}, +, i.j = (1 - p^nu i) j)
struct CycleSetParams {
    i64 p = 0;
    int nu = 0, eta = 0;
    i64 n = 1;    // p^eta
    i64 pnu = 1;  // p^nu
    // (Z_{p^eta}, x) is cyclic except for p=2, (nu,eta)=(1,2)
    bool cyclic() const { return !(p == 2 && nu == 1 && eta == 2); }
    // the second branch of the l / L formulas
    bool two_branch() const { return p == 2 && eta == 2 * nu && eta > 2; }
    i64 red(i64 x) const { return mod(x, n); }
};

CycleSetParams make_params(i64 p, int nu, int eta);
bool is_prime(i64 p);

i64 h_dot(const CycleSetParams& P, i64 i, i64 j);
i64 h_times(const CycleSetParams& P, i64 i, i64 j);
i64 times_power(const CycleSetParams& P, i64 i, i64 j);
i64 l_of(const CycleSetParams& P, i64 h);
i64 L_of(const CycleSetParams& P, i64 l, i64 lp);
i64 b_k(const CycleSetParams& P, i64 k);
i64 ell_rep(const CycleSetParams& P, i64 u);
// l computed by inverting k -> 1^{xk}; used to cross-check l_of
i64 l_brute(const CycleSetParams& P, i64 h);

struct FiniteCycleSetTable {
    int order = 0;
    std::vector<int> add, dot;  // row-major order x order
    int sum(int a, int b) const { return add[(size_t)a * order + b]; }
    int prod(int a, int b) const { return dot[(size_t)a * order + b]; }
};

FiniteCycleSetTable h_table(const CycleSetParams& P);
FiniteCycleSetTable trivial_table(int n);
// Human-readable violations; empty when T is a linear cycle set.
std::vector<std::string> verify_cycle_set(const FiniteCycleSetTable& T, size_t max_report = 16);
std::vector<int> to_brace(const FiniteCycleSetTable& T);
FiniteCycleSetTable from_brace(const std::vector<int>& mult, const std::vector<int>& add, int n);
std::vector<int> socle(const FiniteCycleSetTable& T);
std::vector<int> center(const FiniteCycleSetTable& T);

}  // namespace lcs
