#pragma once

#include <string>
#include <utility>
#include <vector>

#include "lcs/cohomology.hpp"

namespace lcs {

struct CaseReport {
    std::string case_id;
    std::string family_desc;  // symbolic form of the (f0, gamma) family
    Matrix A, B;
    std::vector<CocycleParams> family;
    i64 h2_order = 0;                  // from compute_H2
    std::vector<i64> invariant_factors;  // from compute_H2
    bool oracle_ran = false;
    std::vector<std::pair<std::string, bool>> cross_checks;
    bool ok() const;
};

// H trivial (nu = eta), I = Z_{p^r}, B = 0: one report per admissible a.
std::vector<CaseReport> classify_trivialH_cyclic(i64 p, int eta, int r);
// p odd, r <= nu, I = Z_{p^r}, A = a, B = b
CaseReport classify_yleft_nonzero_cyclic(i64 p, int nu, int eta, int r, i64 a, i64 b);
// p odd, r <= nu, I = Z_{p^r}^2, A = [[1,a],[0,1]], B = [[0,b],[0,0]], a, b, a+b nonzero
CaseReport classify_matrix_example(i64 p, int nu, int eta, int r, i64 a, i64 b);

// I/im(Id - A - BA) + (ker(Id - A) cap ker B), as a subquotient of I^2.
// Needs p^nu I = 0, P(A) = 0 and B R(A) = 0.
Subquotient h2_shortcut_pnu_zero(const ActionPair& ap);
// A = Id, B = 0: I/p^nu I + I_{p^nu}
Subquotient h2_closed_identity(const ActionPair& ap);
// p^nu I = 0, B = 0: ker(P(A))/(A - Id)I + ker(A - Id)
Subquotient h2_closed_pnu_B0(const ActionPair& ap);
// p^eta I = 0, B = 0, p | (A - Id)^{p-1} entrywise: I/(s - Id)I + (ker(s - Id) cap ker p^nu), s = A + p^nu
Subquotient h2_closed_peta(const ActionPair& ap);

// A_{hl} = sum_{j=l}^{h-1} (-1)^j C(j,l), exact
i64 alt_binom_sum(i64 h, i64 l);

std::string case_reports_json(const std::vector<CaseReport>& reps);

}  // namespace lcs
