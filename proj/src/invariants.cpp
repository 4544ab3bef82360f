#include "envelkit/invariants.hpp"

#include <algorithm>

namespace envelkit {

namespace {

void require_abelian_ideal(const LieAlgebra& L, const Subspace& M) {
    Subspace full = Subspace::full(L.dim(), L.field());
    if (!M.contains(product_space(L, full, M)))
        throw PreconditionError("NotAbelianIdeal: M is not an ideal");
    if (product_space(L, M, M).dim() != 0)
        throw PreconditionError("NotAbelianIdeal: M is not abelian");
}

} // namespace

OperatorAlgebra OperatorAlgebra::closed_span(std::size_t ambient, const FieldTag& field,
                                             const std::vector<Mat>& generators) {
    OperatorAlgebra A(ambient, field);
    std::size_t fl = ambient * ambient;

    auto canonical = [&](const std::vector<Mat>& mats) {
        std::vector<Vec> flat;
        for (const auto& m : mats) flat.push_back(flatten(m));
        Subspace s = Subspace::span(fl, field, flat);
        std::vector<Mat> out;
        for (const auto& row : s.basis()) out.push_back(unflatten(row, ambient, ambient));
        return out;
    };

    std::vector<Mat> cur = canonical(generators);
    for (;;) {
        std::vector<Mat> next = cur;
        for (std::size_t i = 0; i < cur.size(); ++i)
            for (std::size_t j = 0; j < cur.size(); ++j)
                next.push_back(mat_mul(cur[i], cur[j]));
        next = canonical(next);
        if (next.size() == cur.size()) break;
        cur = std::move(next);
    }
    A.basis_ = cur;

    std::vector<Vec> flat;
    for (const auto& m : A.basis_) flat.push_back(flatten(m));
    Subspace s = Subspace::span(fl, field, flat);
    A.table_.assign(cur.size(), std::vector<Vec>(cur.size()));
    for (std::size_t i = 0; i < cur.size(); ++i)
        for (std::size_t j = 0; j < cur.size(); ++j) {
            auto c = s.coordinates(flatten(mat_mul(cur[i], cur[j])));
            if (!c) throw Error("internal: closed span not closed");
            A.table_[i][j] = *c;
        }
    return A;
}

OperatorAlgebra OperatorAlgebra::unitalized() const {
    OperatorAlgebra u = *this;
    u.unital_ = true;
    return u;
}

std::optional<Vec> OperatorAlgebra::coords(const Mat& m) const {
    std::vector<Vec> flat;
    for (const auto& b : basis_) flat.push_back(flatten(b));
    Subspace s = Subspace::span(ambient_ * ambient_, field_, flat);
    return s.coordinates(flatten(m));
}

Vec OperatorAlgebra::multiply_in_basis(const Vec& a, const Vec& b) const {
    Vec out = zero_vec(basis_.size(), field_);
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < basis_.size(); ++j) {
            if (b[j].is_zero()) continue;
            Scalar f = a[i] * b[j];
            for (std::size_t k = 0; k < basis_.size(); ++k)
                out[k] += f * table_[i][j][k];
        }
    }
    return out;
}

bool OperatorAlgebra::is_commutative() const {
    for (std::size_t i = 0; i < basis_.size(); ++i)
        for (std::size_t j = i + 1; j < basis_.size(); ++j)
            if (table_[i][j] != table_[j][i]) return false;
    return true;
}

LieAlgebra OperatorAlgebra::as_lie() const { return lie_from_matrices(basis_, field_); }

CharacterIdeal CharacterIdeal::augmentation_ideal(const LieAlgebra& L) {
    return CharacterIdeal{zero_vec(L.dim(), L.field())};
}

void CharacterIdeal::validate(const LieAlgebra& L, const Subspace& M) const {
    if (lambda.size() != L.dim())
        throw PreconditionError("character functional has wrong dimension");
    auto pairing = [&](const Vec& v) {
        Scalar s = Scalar::zero(L.field());
        for (std::size_t i = 0; i < v.size(); ++i) s += lambda[i] * v[i];
        return s;
    };
    Subspace dsub = derived_subalgebra(L);
    for (const auto& row : dsub.basis())
        if (!pairing(row).is_zero())
            throw PreconditionError("character functional does not vanish on L'");
    for (const auto& row : M.basis())
        if (!pairing(row).is_zero())
            throw PreconditionError("character functional does not vanish on M");
}

OperatorAlgebra ad_generated_algebra(const LieAlgebra& L, const Subspace& M) {
    require_abelian_ideal(L, M);
    std::vector<Mat> gens;
    for (std::size_t i = 0; i < L.dim(); ++i) {
        Mat T = adjoint_on(L, unit_vec(L.dim(), i, L.field()), M);
        if (!is_zero_mat(T)) gens.push_back(T);
    }
    return OperatorAlgebra::closed_span(M.dim(), L.field(), gens);
}

LieAlgebra build_Ltilde(const LieAlgebra& L, const Subspace& M,
                        const std::optional<CharacterIdeal>& chi) {
    (chi ? *chi : CharacterIdeal::augmentation_ideal(L)).validate(L, M);
    OperatorAlgebra A = ad_generated_algebra(L, M);
    LieAlgebra I = abelian_algebra(M.dim(), L.field());
    LieAlgebra K = A.as_lie();
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < I.dim(); ++i) labels.push_back("m" + std::to_string(i + 1));
    I.set_labels(labels);
    labels.clear();
    for (std::size_t i = 0; i < K.dim(); ++i) labels.push_back("k" + std::to_string(i + 1));
    K.set_labels(labels);
    return semidirect(I, K, A.basis());
}

OperatorAlgebra build_Utilde(const LieAlgebra& L, const Subspace& M,
                             const std::optional<CharacterIdeal>& chi) {
    (chi ? *chi : CharacterIdeal::augmentation_ideal(L)).validate(L, M);
    return ad_generated_algebra(L, M).unitalized();
}

UPoly min_poly_no_constant(const Mat& T) {
    std::size_t n = T.size();
    const FieldTag tag = n == 0 ? FieldTag::rationals() : T[0][0].field();
    if (n == 0) return UPoly::monomial(tag, 1, Scalar::one(tag));
    std::vector<Vec> power_flats; // T^1, T^2, ...
    Mat power = T;
    for (;;) {
        Vec target = flatten(power);
        Mat sys = zero_mat(n * n, power_flats.size(), tag);
        for (std::size_t c = 0; c < power_flats.size(); ++c)
            for (std::size_t r = 0; r < n * n; ++r) sys[r][c] = power_flats[c][r];
        auto coords = solve(sys, target);
        if (coords) {
            std::size_t k = power_flats.size() + 1;
            std::vector<Scalar> cs(k + 1, Scalar::zero(tag));
            cs[k] = Scalar::one(tag);
            for (std::size_t i = 0; i < coords->size(); ++i) cs[i + 1] = -(*coords)[i];
            return UPoly(tag, cs);
        }
        power_flats.push_back(target);
        power = mat_mul(power, T);
        if (power_flats.size() > n * n)
            throw Error("internal: no dependence among matrix powers");
    }
}

std::optional<std::pair<Vec, UPoly>> single_generator_presentation(const LieAlgebra& L,
                                                                   const Subspace& M) {
    Subspace C = centralizer(L, M);
    if (L.dim() - C.dim() != 1) return std::nullopt;
    for (std::size_t i = 0; i < L.dim(); ++i) {
        Vec x = unit_vec(L.dim(), i, L.field());
        if (C.contains(x)) continue;
        return std::make_pair(x, min_poly_no_constant(adjoint_on(L, x, M)));
    }
    return std::nullopt; // unreachable: C has codimension one
}

bool check_semidirect_criterion(const LieAlgebra& L, const Subspace& M) {
    Subspace C = centralizer(L, M);
    if (L.dim() - C.dim() != 1)
        throw PreconditionError("NotCodimOne: C_L(M) has codimension " +
                                std::to_string(L.dim() - C.dim()));
    Vec x;
    for (std::size_t i = 0; i < L.dim(); ++i) {
        x = unit_vec(L.dim(), i, L.field());
        if (!C.contains(x)) break;
    }
    Mat T = adjoint_on(L, x, M);
    if (is_zero_mat(T)) return true; // lambda = 0
    Mat T2 = mat_mul(T, T);
    for (std::size_t r = 0; r < T.size(); ++r)
        for (std::size_t c = 0; c < T.size(); ++c) {
            if (T[r][c].is_zero()) continue;
            Scalar lambda = T2[r][c] / T[r][c];
            return T2 == mat_scale(lambda, T);
        }
    return false;
}

Corollary2Result check_corollary2_bound(const LieAlgebra& L, const Subspace& M) {
    require_abelian_ideal(L, M);
    if (!M.contains(derived_subalgebra(L)))
        throw PreconditionError("corollary bound requires L' inside M");
    Corollary2Result res;
    Subspace C = centralizer(L, M);
    res.codim_centralizer = L.dim() - C.dim();
    res.bound = (M.dim() * M.dim()) / 4 + 1;
    res.hypothesis_met = res.codim_centralizer >= res.bound;
    OperatorAlgebra A = ad_generated_algebra(L, M);
    res.dim_A = A.dim() - (A.unital() ? 1 : 0);
    res.centralizer_is_M = (C == M);
    if (res.hypothesis_met) {
        res.conclusion_verified = (res.dim_A == res.codim_centralizer);
        if (!res.conclusion_verified)
            throw Error("internal: corollary bound hypothesis met but dim A != codim C_L(M)");
    }
    return res;
}

bool utilde_matches_polynomial_quotient(const OperatorAlgebra& U, const UPoly& f,
                                        const Mat& T) {
    if (!U.unital()) return false;
    int n = f.degree();
    if (n < 1 || U.dim() != static_cast<std::size_t>(n)) return false;
    if (!f.coeff(0).is_zero() || !f.coeffs().back().is_one()) return false;
    if (!is_zero_mat(f.eval(T))) return false;

    const FieldTag& tag = U.field();
    // powers T^1 .. T^{n-1} must span the non-unit part
    std::vector<Vec> pcoords;
    Mat power = T;
    for (int k = 1; k < n; ++k) {
        auto c = U.coords(power);
        if (!c) return false;
        pcoords.push_back(*c);
        power = mat_mul(power, T);
    }
    Mat indep = pcoords;
    if (!pcoords.empty() && rank(indep) != pcoords.size()) return false;

    // regular representation: product of powers must match x^{i+j} mod f
    for (int i = 1; i < n; ++i)
        for (int j = 1; j < n; ++j) {
            Vec actual = U.multiply_in_basis(pcoords[i - 1], pcoords[j - 1]);
            UPoly rem = UPoly::monomial(tag, i + j, Scalar::one(tag)).divmod(f).second;
            if (!rem.coeff(0).is_zero()) return false; // f(0)=0 keeps (x) invariant
            Vec expect = zero_vec(U.basis().size(), tag);
            for (int k = 1; k <= rem.degree(); ++k)
                expect = vec_add(expect, vec_scale(rem.coeff(k), pcoords[k - 1]));
            if (actual != expect) return false;
        }
    return true;
}

Mat functional_form_matrix(const LieAlgebra& L, const Vec& f) {
    std::size_t d = L.dim();
    Mat B = zero_mat(d, d, L.field());
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            Vec b = L.bracket_basis(i, j);
            for (std::size_t k = 0; k < d; ++k) B[i][j] += f[k] * b[k];
        }
    return B;
}

namespace {

void require_char_zero(const LieAlgebra& L, const char* what) {
    if (!L.field().is_rationals())
        throw CharacteristicError(std::string(what) +
                                  " requires characteristic zero; the semiradical-center "
                                  "containment fails in characteristic p");
}

std::vector<std::vector<MPoly>> symbolic_form_matrix(const LieAlgebra& L) {
    std::size_t d = L.dim();
    std::vector<std::vector<MPoly>> B(d, std::vector<MPoly>(d, MPoly::zero(d)));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            Vec b = L.bracket_basis(i, j);
            for (std::size_t k = 0; k < d; ++k)
                if (!b[k].is_zero()) {
                    MPoly::Expo e(d, 0);
                    e[k] = 1;
                    B[i][j].add_term(e, b[k].value());
                }
        }
    return B;
}

std::size_t rank_at(const LieAlgebra& L, const Vec& f) {
    return rank(functional_form_matrix(L, f));
}

} // namespace

FrobeniusData index_and_semiradical(const LieAlgebra& L) {
    require_char_zero(L, "index/semiradical");
    std::size_t d = L.dim();
    const FieldTag& tag = L.field();
    auto sym = symbolic_kernel(symbolic_form_matrix(L));

    FrobeniusData out;
    out.generic_rank = sym.rank;
    out.index = d - sym.rank;

    // F(L): span of the coefficient vectors of the cleared symbolic kernel
    std::vector<Vec> coeff_vectors;
    for (const auto& kv : sym.kernel) {
        std::map<MPoly::Expo, Vec> by_monomial;
        for (std::size_t i = 0; i < d; ++i)
            for (const auto& [e, c] : kv[i].terms()) {
                auto it = by_monomial.find(e);
                if (it == by_monomial.end())
                    it = by_monomial.emplace(e, zero_vec(d, tag)).first;
                it->second[i] = Scalar(tag, c);
            }
        for (auto& [e, v] : by_monomial) coeff_vectors.push_back(v);
    }
    out.semiradical = Subspace::span(d, tag, coeff_vectors);

    // deterministic witness search over small integer functionals
    for (long box = 0; box <= 3 && !out.witness; ++box) {
        std::vector<long> vals;
        for (long v = -box; v <= box; ++v) vals.push_back(v);
        std::vector<std::size_t> idx(d, 0);
        for (;;) {
            Vec f = zero_vec(d, tag);
            for (std::size_t i = 0; i < d; ++i) f[i] = Scalar(tag, vals[idx[i]]);
            if (rank_at(L, f) == out.generic_rank) {
                out.witness = f;
                out.witness_rank = out.generic_rank;
                break;
            }
            std::size_t p = 0;
            while (p < d && ++idx[p] == vals.size()) idx[p++] = 0;
            if (p == d) break;
        }
    }
    return out;
}

bool is_regular_functional(const LieAlgebra& L, const Vec& f) {
    require_char_zero(L, "regularity of a functional");
    auto sym = symbolic_kernel(symbolic_form_matrix(L));
    return rank_at(L, f) == sym.rank;
}

std::optional<Vec> center_UL_is_trivial(const LieAlgebra& L) {
    require_char_zero(L, "center triviality of U(L)");
    FrobeniusData data = index_and_semiradical(L);
    if (data.index != 0) return std::nullopt;
    return data.witness;
}

} // namespace envelkit
