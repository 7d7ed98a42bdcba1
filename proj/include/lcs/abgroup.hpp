#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace lcs {

using i64 = long long;
using Elem = std::vector<i64>;
using Matrix = std::vector<std::vector<i64>>;

// Every failure carries a short machine-readable code ("OrderOverflow", ...).
struct Error : std::runtime_error {
    std::string code;
    Error(std::string c, const std::string& msg)
        : std::runtime_error(c + ": " + msg), code(std::move(c)) {}
};

inline i64 mod(i64 a, i64 n) {
    i64 r = a % n;
    return r < 0 ? r + n : r;
}
inline i64 mulmod(i64 a, i64 b, i64 n) {
    i64 r = (i64)(((__int128)a * b) % n);
    return r < 0 ? r + n : r;
}
i64 gcd64(i64 a, i64 b);
i64 lcm64(i64 a, i64 b);
i64 ipow(i64 b, unsigned e);
// C(k,2) for any integer k (always integral).
inline i64 choose2(i64 k) { return k * (k - 1) / 2; }
// p-adic valuation; v(0) is reported as `cap`.
int valuation(i64 x, i64 p, int cap = 62);

struct FinAbGroup {
    std::vector<i64> orders;
    i64 order() const;
    size_t rank() const { return orders.size(); }
    bool operator==(const FinAbGroup& o) const { return orders == o.orders; }
    bool operator!=(const FinAbGroup& o) const { return !(*this == o); }
};

FinAbGroup make_group(std::vector<i64> orders);
// "Z9+Z27" style literal, case-insensitive.
FinAbGroup parse_group(const std::string& lit);
std::string group_literal(const FinAbGroup& g);
FinAbGroup group_power(const FinAbGroup& g, size_t k);  // g ⊕ ... ⊕ g
FinAbGroup group_sum(const FinAbGroup& a, const FinAbGroup& b);
i64 group_exponent(const FinAbGroup& g);

Elem elem_zero(const FinAbGroup& g);
Elem elem_reduce(const FinAbGroup& g, const Elem& x);
Elem elem_add(const FinAbGroup& g, const Elem& x, const Elem& y);
Elem elem_sub(const FinAbGroup& g, const Elem& x, const Elem& y);
Elem elem_neg(const FinAbGroup& g, const Elem& x);
Elem elem_scale(const FinAbGroup& g, i64 c, const Elem& x);
bool elem_is_zero(const Elem& x);
void elem_check(const FinAbGroup& g, const Elem& x);

struct Homomorphism {
    FinAbGroup dom, cod;
    Matrix m;  // cod.rank() rows, dom.rank() columns
};

// Reduces entries and throws InvalidHomomorphism when not well defined.
Homomorphism make_hom(const FinAbGroup& dom, const FinAbGroup& cod, Matrix m);
bool hom_validate(const Homomorphism& h);
Homomorphism hom_identity(const FinAbGroup& g);
Homomorphism hom_zero(const FinAbGroup& dom, const FinAbGroup& cod);
Homomorphism hom_scalar(const FinAbGroup& g, i64 c);
Elem hom_apply(const Homomorphism& h, const Elem& x);
Homomorphism hom_compose(const Homomorphism& h2, const Homomorphism& h1);
Homomorphism hom_power(const Homomorphism& h, unsigned long long e);
Homomorphism hom_add(const Homomorphism& a, const Homomorphism& b);
Homomorphism hom_sub(const Homomorphism& a, const Homomorphism& b);
Homomorphism hom_scale(i64 c, const Homomorphism& h);
bool hom_is_zero(const Homomorphism& h);
bool hom_equal(const Homomorphism& a, const Homomorphism& b);
// [a b] : dom_a ⊕ dom_b -> cod
Homomorphism hom_hcat(const Homomorphism& a, const Homomorphism& b);
// (a; b) : dom -> cod_a ⊕ cod_b
Homomorphism hom_vcat(const Homomorphism& a, const Homomorphism& b);

std::vector<Elem> kernel_gens(const Homomorphism& h);
std::vector<Elem> image_gens(const Homomorphism& h);

struct Subquotient {
    FinAbGroup ambient;
    std::vector<i64> invariant_factors;  // d_1 | d_2 | ..., all > 1
    std::vector<Elem> transversal;       // one generator per factor
    std::vector<Elem> image;             // generators of the quotiented subgroup
    i64 order() const;
};

Subquotient subquotient(const FinAbGroup& g, const std::vector<Homomorphism>& kernel_maps,
                        const Homomorphism& image_map);
// Subquotient of the subgroup generated by `kgens` modulo the one generated by `igens`.
Subquotient subquotient_gens(const FinAbGroup& g, const std::vector<Elem>& kgens,
                             const std::vector<Elem>& igens);

struct EnumGuard {
    static i64 limit;  // default 10^6
};
std::vector<Elem> enumerate_elements(const FinAbGroup& g, i64 guard = EnumGuard::limit);
void for_each_element(const FinAbGroup& g, const std::function<void(const Elem&)>& fn,
                      i64 guard = EnumGuard::limit);
// All elements of the subgroup generated by gens, sorted lexicographically.
std::vector<Elem> subgroup_elements(const FinAbGroup& g, const std::vector<Elem>& gens,
                                    i64 guard = EnumGuard::limit);
bool in_subgroup(const FinAbGroup& g, const std::vector<Elem>& gens, const Elem& x);
// Lexicographically least element of x + <gens>.
Elem coset_min(const FinAbGroup& g, const std::vector<Elem>& gens, const Elem& x);
// One lexicographically least representative per class of the subquotient.
std::vector<Elem> subquotient_classes(const Subquotient& q, i64 guard = EnumGuard::limit);

// Smith form over Z_N: returns the diagonal (length min(rows, cols)) and, if
// requested, U (rows×rows), Uinv and V (cols×cols) with U·M·V = D (mod N).
struct SmithResult {
    std::vector<i64> diag;
    Matrix U, Uinv, V;
};
SmithResult smith_mod(Matrix M, i64 N, bool wantU, bool wantV, bool divisibility);

}  // namespace lcs
