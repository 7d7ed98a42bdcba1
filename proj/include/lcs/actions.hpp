#pragma once

#include <string>
#include <vector>

#include "lcs/abgroup.hpp"
#include "lcs/cycleset.hpp"

namespace lcs {

// Endomorphisms (A,B) of I giving  1^{xl} <> y = A^l y  and  y -< h = hBy.
struct ActionPair {
    CycleSetParams P;
    FinAbGroup I;
    Homomorphism A, B;
    std::vector<Homomorphism> Apow;  // A^0 .. A^{p^eta - 1}
    std::vector<i64> lt;             // l(h) for h in H
};

ActionPair make_action_pair(const CycleSetParams& P, const FinAbGroup& I, const Matrix& A, const Matrix& B);
ActionPair make_action_pair(const CycleSetParams& P, const FinAbGroup& I, const Homomorphism& A,
                            const Homomorphism& B);
ActionPair trivial_action(const CycleSetParams& P, const FinAbGroup& I);

struct Report {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
    void add(const std::string& s, size_t cap = 16) {
        if (violations.size() < cap) violations.push_back(s);
    }
};

Report validate_action_pair(const ActionPair& ap);
const Homomorphism& A_pow(const ActionPair& ap, i64 k);  // any integer k
Elem diamond(const ActionPair& ap, i64 h, const Elem& y);
Elem yleft(const ActionPair& ap, const Elem& y, i64 h);
Elem triangleleft(const ActionPair& ap, const Elem& y, i64 h);
// (A - AB)^{l(h)} y
Elem triangleleft_closed(const ActionPair& ap, const Elem& y, i64 h);
// y^h := h^{x-1} <> (y |> h)
Elem y_hat(const ActionPair& ap, const Elem& y, i64 h);
Report verify_action_axioms(const ActionPair& ap);
// 1, 2 or 3; 0 when none of the three cases holds
int classify_commuting_pair(const ActionPair& ap);

struct CyclicActionCandidate {
    i64 a, b;
    int case_tag;
};
// I = Z_n. Returns all valid (a,b) in lexicographic order.
std::vector<CyclicActionCandidate> enumerate_action_pairs_cyclic(const CycleSetParams& P, i64 n);
// The three cases for cyclic coefficients, decided from valuations only.
int cyclic_case_by_valuation(const CycleSetParams& P, i64 n, i64 b);

struct QuadActionData {
    CycleSetParams P;
    FinAbGroup I;
    Homomorphism A1, A2, B;
};
Report validate_quad_action(const QuadActionData& q);
Elem quad_diamond(const QuadActionData& q, i64 h, const Elem& y);
Report verify_quad_action_axioms(const QuadActionData& q);

}  // namespace lcs
