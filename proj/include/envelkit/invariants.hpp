#ifndef ENVELKIT_INVARIANTS_HPP
#define ENVELKIT_INVARIANTS_HPP

#include <optional>
#include <utility>

#include "envelkit/liealg.hpp"
#include "envelkit/poly.hpp"

namespace envelkit {

// Span-closed set of m x m matrices with the induced associative structure
// constants. Models A = beta(omega(L)) and its unitalization; the unit, when
// present, is formal (adjoined, not a member matrix).
class OperatorAlgebra {
public:
    OperatorAlgebra(std::size_t ambient, const FieldTag& field)
        : ambient_(ambient), field_(field) {}

    // Smallest product-closed span containing the generators (non-unital).
    static OperatorAlgebra closed_span(std::size_t ambient, const FieldTag& field,
                                       const std::vector<Mat>& generators);

    std::size_t ambient() const { return ambient_; }
    const FieldTag& field() const { return field_; }
    const std::vector<Mat>& basis() const { return basis_; }
    bool unital() const { return unital_; }
    std::size_t dim() const { return basis_.size() + (unital_ ? 1 : 0); }

    OperatorAlgebra unitalized() const;

    // Coordinates of a matrix in the canonical (non-unit) basis.
    std::optional<Vec> coords(const Mat& m) const;

    // Product of two elements of the span, in coordinates.
    Vec multiply_in_basis(const Vec& a, const Vec& b) const;

    bool is_commutative() const;

    // The non-unit part as a Lie algebra under commutators (the model of K~).
    LieAlgebra as_lie() const;

private:
    std::size_t ambient_;
    FieldTag field_;
    std::vector<Mat> basis_;
    bool unital_ = false;
    std::vector<std::vector<Vec>> table_; // coords of basis[i] * basis[j]
};

// Maximal one-codimensional ideal data: a functional vanishing on L' and M
// (lambda = 0 picks the augmentation ideal).
struct CharacterIdeal {
    Vec lambda;

    static CharacterIdeal augmentation_ideal(const LieAlgebra& L);
    void validate(const LieAlgebra& L, const Subspace& M) const;
};

// A = the associative algebra generated by { ad y|_M : y in basis of L },
// acting on M's canonical basis; requires M abelian ideal.
OperatorAlgebra ad_generated_algebra(const LieAlgebra& L, const Subspace& M);

// The invariant Lie algebra: abelian(dim M) x| (A as Lie algebra) with the
// natural action. The character choice does not affect the matrix model;
// it is validated and the independence is covered by tests.
LieAlgebra build_Ltilde(const LieAlgebra& L, const Subspace& M,
                        const std::optional<CharacterIdeal>& chi = std::nullopt);

// The invariant associative algebra: formal unitalization F + A.
OperatorAlgebra build_Utilde(const LieAlgebra& L, const Subspace& M,
                             const std::optional<CharacterIdeal>& chi = std::nullopt);

// Smallest-degree monic f with f(T) = 0 and f(0) = 0.
UPoly min_poly_no_constant(const Mat& T);

// When C_L(M) has codimension one: a complement generator x and the
// polynomial f with Utilde = F[x]/(f).
std::optional<std::pair<Vec, UPoly>> single_generator_presentation(const LieAlgebra& L,
                                                                   const Subspace& M);

// Codimension-one case: (ad x|_M)^2 = lambda ad x|_M for some lambda.
bool check_semidirect_criterion(const LieAlgebra& L, const Subspace& M);

struct Corollary2Result {
    bool hypothesis_met = false;   // dim L/C_L(M) >= floor((dim M)^2/4) + 1
    std::size_t bound = 0;
    std::size_t codim_centralizer = 0;
    std::size_t dim_A = 0;
    bool conclusion_verified = false; // dim A == codim, so Ltilde = M x| L/C_L(M)
    bool centralizer_is_M = false;    // then additionally Ltilde = L
};

// Requires M an abelian ideal containing L'.
Corollary2Result check_corollary2_bound(const LieAlgebra& L, const Subspace& M);

// Verifies that Utilde is isomorphic to F[x]/(f) via x -> T adjoined to 1,
// by matching regular representations.
bool utilde_matches_polynomial_quotient(const OperatorAlgebra& U, const UPoly& f,
                                        const Mat& T);

struct FrobeniusData {
    std::size_t index = 0;
    std::size_t generic_rank = 0;
    Subspace semiradical;
    std::optional<Vec> witness; // regular functional found by search
    std::size_t witness_rank = 0;

    FrobeniusData() : semiradical(0, FieldTag::rationals()) {}
};

// B_f[i][j] = f([x_i, x_j]) for a linear functional f on L.
Mat functional_form_matrix(const LieAlgebra& L, const Vec& f);

// Index, generic rank, Frobenius semiradical via fraction-free symbolic
// elimination; characteristic zero only.
FrobeniusData index_and_semiradical(const LieAlgebra& L);

// rank of B_f equals the generic rank (characteristic zero only).
bool is_regular_functional(const LieAlgebra& L, const Vec& f);

// yes (with regular witness) exactly when the index is zero, forcing
// F(L) = 0 and Z(U(L)) = F; otherwise unknown.
std::optional<Vec> center_UL_is_trivial(const LieAlgebra& L);

} // namespace envelkit

#endif
