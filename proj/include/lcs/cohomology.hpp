#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lcs/complex.hpp"

namespace lcs {

struct CocycleParams {
    Elem f0, gamma;
};

struct StandardCocycle {
    CocycleParams params;
    TwoCochain c;  // (alpha_1(gamma), f_{f0,gamma})
    bool yleft_zero = true;
};

struct PolyData {
    Homomorphism P_A, Q_A, R_A;
    i64 S = 0;  // mod p^eta
};

struct FGMaps {
    Homomorphism F1, F2;  // I^2 -> I
    Homomorphism G;       // I -> I^2
};

struct H2Result {
    Subquotient sq;
    std::vector<CocycleParams> transversal;
};

Cochain beta_k(const CycleSetParams& P, const FinAbGroup& I, const Elem& gamma, i64 k);
Cochain alpha1(const CycleSetParams& P, const FinAbGroup& I, const Elem& gamma);
// chi_k(gamma)(h) = gamma when h = k, else 0
Cochain chi_k(const CycleSetParams& P, const FinAbGroup& I, const Elem& gamma, i64 k);

struct NormalizedBeta {
    Elem gamma;
    Cochain t;  // (0,1) with beta = alpha_1(gamma) + del_v t
};
NormalizedBeta normalize_beta(const Cochain& beta, const CycleSetParams& P);

Elem Gamma_fn(const ActionPair& ap, const Elem& gamma, i64 b);
Elem Gamma_closed(const ActionPair& ap, const Elem& gamma, i64 b);

bool is_periodic(const ActionPair& ap, const CocycleParams& c);
// Table of f~(0..p^eta-1); three routes are computed and compared.
std::vector<Elem> f_tilde_table(const ActionPair& ap, const CocycleParams& c);
Elem f_tilde(const ActionPair& ap, const CocycleParams& c, i64 i);

// S from its defining expression; S_value also checks it against the simplified form
i64 S_defining(const CycleSetParams& P);
i64 S_value(const CycleSetParams& P);
PolyData poly_data(const ActionPair& ap);
FGMaps maps_FG(const ActionPair& ap);
FGMaps maps_FG_B0(const ActionPair& ap);
Elem pack(const CocycleParams& c);
CocycleParams unpack(const FinAbGroup& I, const Elem& y);

// "" when admissible, else "F1" or "F2"
std::string admissibility_failure(const ActionPair& ap, const CocycleParams& c);
StandardCocycle construct_f(const ActionPair& ap, const CocycleParams& c);
std::optional<Elem> is_coboundary(const ActionPair& ap, const CocycleParams& c);
// t(j) = j t0
Cochain linear_one_cochain(const CycleSetParams& P, const FinAbGroup& I, const Elem& t0);

H2Result compute_H2(const ActionPair& ap);
std::string h2_json(const H2Result& r);

// Identity sweeps; each returns the violations found.
Report check_B_powers_gamma(const ActionPair& ap, const CocycleParams& c);
Report check_periodic_sum(const ActionPair& ap, const CocycleParams& c);
Report check_partial_sum_linear(const ActionPair& ap, const CocycleParams& c);
Report check_full_sum_scaling(const ActionPair& ap, const CocycleParams& c);
Report check_l_sum_linear(const ActionPair& ap, const CocycleParams& c);
Report check_R_and_S(const ActionPair& ap, const CocycleParams& c);
Report check_f_tilde_recursion(const ActionPair& ap, const CocycleParams& c);
Report check_necessary(const ActionPair& ap, const StandardCocycle& sc);
Report check_BAB_relation(const ActionPair& ap);
Report check_b_shift(const CycleSetParams& P);
Report check_A_minus_AB_powers(const ActionPair& ap);

}  // namespace lcs
