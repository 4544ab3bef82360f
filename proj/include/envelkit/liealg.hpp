#ifndef ENVELKIT_LIEALG_HPP
#define ENVELKIT_LIEALG_HPP

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "envelkit/linalg.hpp"

namespace envelkit {

// Finite-dimensional Lie algebra by structure constants. Only the pairs
// i < j are stored (antisymmetry by construction); unlisted entries are zero.
class LieAlgebra {
public:
    // sparse target vector of a bracket [x_i, x_j]
    using ScEntry = std::vector<std::pair<std::size_t, Scalar>>;

    LieAlgebra(std::size_t dim, const FieldTag& field);

    std::size_t dim() const { return dim_; }
    const FieldTag& field() const { return field_; }

    void set_bracket(std::size_t i, std::size_t j, const Vec& value); // 0-based, i != j
    Vec bracket_basis(std::size_t i, std::size_t j) const;
    Vec bracket(const Vec& u, const Vec& v) const;

    const std::vector<std::string>& labels() const { return labels_; }
    void set_labels(std::vector<std::string> labels);
    std::optional<std::size_t> label_index(const std::string& label) const;

    const std::optional<std::string>& provenance() const { return provenance_; }
    void set_provenance(std::string id) { provenance_ = std::move(id); }

    bool operator==(const LieAlgebra& o) const;

    // Matrix of ad(v): w -> [v, w] in the standard basis (columns are images).
    Mat ad_matrix(const Vec& v) const;

    std::string table_str() const; // human-readable nonzero brackets

private:
    std::size_t dim_;
    FieldTag field_;
    std::map<std::pair<std::size_t, std::size_t>, ScEntry> sc_; // key i<j
    std::vector<std::string> labels_;
    std::optional<std::string> provenance_;
};

struct JacobiReport {
    bool ok = true;
    std::size_t i = 0, j = 0, k = 0; // violating triple (0-based) when !ok
    Vec residual;
    std::string str() const;
};

JacobiReport validate(const LieAlgebra& L);

// Span of [U, V].
Subspace product_space(const LieAlgebra& L, const Subspace& U, const Subspace& V);

// L >= L' >= L'' >= ... until stabilization; the trailing repeat is dropped.
std::vector<Subspace> derived_series(const LieAlgebra& L);
// gamma_1 = L, gamma_{n+1} = [gamma_n, L].
std::vector<Subspace> lower_central_series(const LieAlgebra& L);

Subspace derived_subalgebra(const LieAlgebra& L); // L'
Subspace center(const LieAlgebra& L);
Subspace centralizer(const LieAlgebra& L, const Subspace& U);

bool is_abelian(const LieAlgebra& L);
bool is_solvable(const LieAlgebra& L);
// nullopt when not nilpotent; otherwise the nilpotency class.
std::optional<std::size_t> nilpotency_class(const LieAlgebra& L);
bool is_metabelian(const LieAlgebra& L);

bool is_ideal(const LieAlgebra& L, const Subspace& I);

// Quotient by an ideal, with the projection matrix onto the complement
// coordinates of I (rows of the matrix give the projection).
struct QuotientResult {
    LieAlgebra algebra;
    Mat projection; // (dim L - dim I) x dim L
};
QuotientResult quotient(const LieAlgebra& L, const Subspace& I);

// Semidirect sum M x| K. action[t] is the matrix by which the t-th basis
// element of K acts on M; must be derivations of M and a K-representation.
LieAlgebra semidirect(const LieAlgebra& M, const LieAlgebra& K,
                      const std::vector<Mat>& action);

// Matrix of ad(y) restricted to an invariant subspace M, in M's canonical
// basis (columns are images of basis vectors).
Mat adjoint_on(const LieAlgebra& L, const Vec& y, const Subspace& M);

// Structure constants rewritten in the basis given by the rows of P.
LieAlgebra change_of_basis(const LieAlgebra& L, const Mat& P);

// Lie algebra spanned by matrices closed under commutator (in the given order).
LieAlgebra lie_from_matrices(const std::vector<Mat>& basis, const FieldTag& field);

LieAlgebra abelian_algebra(std::size_t dim, const FieldTag& field);

// Structure-constant file format:
//   dim 4 field Q
//   1 2 3 1/2        (means c_{12}^3 = 1/2; 1-based, i < j)
LieAlgebra read_structure_constants(std::istream& in);
std::string write_structure_constants(const LieAlgebra& L);

} // namespace envelkit

#endif
