#ifndef ENVELKIT_PBW_HPP
#define ENVELKIT_PBW_HPP

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "envelkit/liealg.hpp"

namespace envelkit {

// Basis order for PBW monomials: order[pos] is the original basis index
// placed at position pos. Monomials are sorted by position.
struct BasisOrder {
    std::vector<std::size_t> order;

    static BasisOrder identity(std::size_t dim);
    std::vector<std::size_t> inverse() const;
    bool operator==(const BasisOrder& o) const { return order == o.order; }
};

// Order placing a coordinate-spanned subspace M first; the straightened
// monomial characterizations of MU(L) and M omega(L) require it.
BasisOrder adapted_order(const LieAlgebra& L, const Subspace& M);

class PbwContext {
public:
    PbwContext(LieAlgebra algebra, BasisOrder order, std::size_t degree_cap = 24);

    const LieAlgebra& algebra() const { return algebra_; }
    const BasisOrder& order() const { return order_; }
    std::size_t degree_cap() const { return degree_cap_; }
    const std::vector<std::size_t>& positions() const { return positions_; }

    bool operator==(const PbwContext& o) const {
        return algebra_ == o.algebra_ && order_ == o.order_;
    }

private:
    LieAlgebra algebra_;
    BasisOrder order_;
    std::vector<std::size_t> positions_; // inverse permutation
    std::size_t degree_cap_;
};

using PbwCtxPtr = std::shared_ptr<const PbwContext>;

PbwCtxPtr make_pbw_context(const LieAlgebra& L, std::size_t degree_cap = 24);
PbwCtxPtr make_adapted_context(const LieAlgebra& L, const Subspace& M,
                               std::size_t degree_cap = 24);

// Element of U(L) in canonical PBW form: exponent vectors (indexed by order
// position) mapped to nonzero scalars, iterated degree-lexicographically.
class PbwElement {
public:
    using ExpVec = std::vector<unsigned>;
    struct DegLex {
        bool operator()(const ExpVec& a, const ExpVec& b) const;
    };
    using Terms = std::map<ExpVec, Scalar, DegLex>;

    explicit PbwElement(PbwCtxPtr ctx) : ctx_(std::move(ctx)) {}

    static PbwElement zero(const PbwCtxPtr& ctx) { return PbwElement(ctx); }
    static PbwElement one(const PbwCtxPtr& ctx);
    static PbwElement constant(const PbwCtxPtr& ctx, const Scalar& c);
    static PbwElement generator(const PbwCtxPtr& ctx, std::size_t original_index);
    // degree-1 embedding of a vector of L
    static PbwElement embed(const PbwCtxPtr& ctx, const Vec& v);

    const PbwCtxPtr& context() const { return ctx_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t degree() const; // 0 for the zero element

    void add_term(const ExpVec& e, const Scalar& c);

    PbwElement operator+(const PbwElement& o) const;
    PbwElement operator-(const PbwElement& o) const;
    PbwElement operator-() const;
    PbwElement scaled(const Scalar& c) const;
    bool operator==(const PbwElement& o) const;
    bool operator!=(const PbwElement& o) const { return !(*this == o); }

    std::string str() const; // "3*x1^2*x4 + 1/2*x2 - 1"

private:
    void check_compatible(const PbwElement& o) const;
    friend PbwElement pbw_mul(const PbwElement& u, const PbwElement& v);

    PbwCtxPtr ctx_;
    Terms terms_;
};

// Straightening product: x_j x_i -> x_i x_j + [x_j, x_i] until sorted.
PbwElement pbw_mul(const PbwElement& u, const PbwElement& v);

PbwElement pbw_commutator(const PbwElement& u, const PbwElement& v); // uv - vu

Scalar augmentation(const PbwElement& u);

// Monomial characterization relative to an adapted, M-first order
// (M an abelian ideal): membership in MU(L) and in M omega(L).
bool in_MU(const PbwElement& u, const Subspace& M);
bool in_M_omega(const PbwElement& u, const Subspace& M);

// The unique m in M with u = m (mod M omega(L)); requires u in MU(L).
Vec reduce_mod_M_omega(const PbwElement& u, const Subspace& M);

PbwElement parse_element(const PbwCtxPtr& ctx, const std::string& text);

} // namespace envelkit

#endif
