// Test-only brute-force oracles, independent of the implementation paths
// they check.
#ifndef ENVELKIT_TESTS_ORACLES_HPP
#define ENVELKIT_TESTS_ORACLES_HPP

#include <map>
#include <random>
#include <string>
#include <vector>

#include "envelkit/liealg.hpp"
#include "envelkit/pbw.hpp"

namespace envelkit::oracles {

struct MonomialIndex {
    std::vector<PbwElement::ExpVec> monomials;
    std::map<PbwElement::ExpVec, std::size_t, PbwElement::DegLex> index;
};

inline MonomialIndex all_monomials(std::size_t dim, unsigned maxdeg) {
    MonomialIndex mi;
    PbwElement::ExpVec cur(dim, 0);
    // enumerate exponent vectors with total degree <= maxdeg
    auto rec = [&](auto&& self, std::size_t pos, unsigned left) -> void {
        if (pos == dim) {
            mi.monomials.push_back(cur);
            return;
        }
        for (unsigned e = 0; e <= left; ++e) {
            cur[pos] = e;
            self(self, pos + 1, left - e);
        }
        cur[pos] = 0;
    };
    rec(rec, 0, maxdeg);
    for (std::size_t i = 0; i < mi.monomials.size(); ++i) mi.index[mi.monomials[i]] = i;
    return mi;
}

inline Vec vectorize(const PbwElement& u, const MonomialIndex& mi) {
    const FieldTag& tag = u.context()->algebra().field();
    Vec v = zero_vec(mi.monomials.size(), tag);
    for (const auto& [e, c] : u.terms()) v[mi.index.at(e)] = c;
    return v;
}

// Brute-force check of the monomial characterizations of MU(L) and
// M omega(L): the span of the canonical forms of all products m * u
// (m in the basis of M, u a monomial of degree < D) must equal the span
// of the characterized monomials, for every degree bound D <= maxdeg.
inline bool mu_momega_characterization_ok(const LieAlgebra& L, const Subspace& M,
                                          unsigned maxdeg, std::string* why = nullptr) {
    auto ctx = make_adapted_context(L, M);
    const FieldTag& tag = L.field();
    MonomialIndex mi = all_monomials(L.dim(), maxdeg);
    MonomialIndex gen = all_monomials(L.dim(), maxdeg - 1);

    for (unsigned D = 1; D <= maxdeg; ++D) {
        std::vector<Vec> products, products_omega;
        for (const auto& mrow : M.basis()) {
            PbwElement m = PbwElement::embed(ctx, mrow);
            for (const auto& e : gen.monomials) {
                unsigned deg = 0;
                for (unsigned x : e) deg += x;
                if (deg + 1 > D) continue;
                PbwElement u(ctx);
                u.add_term(e, Scalar::one(tag));
                Vec prod = vectorize(pbw_mul(m, u), mi);
                products.push_back(prod);
                if (deg >= 1) products_omega.push_back(prod);
            }
        }
        std::vector<Vec> charac, charac_omega;
        for (const auto& e : mi.monomials) {
            unsigned deg = 0, mdeg = 0;
            for (unsigned x : e) deg += x;
            for (std::size_t p = 0; p < M.dim(); ++p) mdeg += e[p];
            if (deg > D || mdeg == 0) continue;
            Vec v = zero_vec(mi.monomials.size(), tag);
            v[mi.index.at(e)] = Scalar::one(tag);
            charac.push_back(v);
            if (deg >= 2) charac_omega.push_back(v);
        }
        std::size_t n = mi.monomials.size();
        if (Subspace::span(n, tag, products) != Subspace::span(n, tag, charac)) {
            if (why) *why = "MU span mismatch at degree " + std::to_string(D);
            return false;
        }
        if (D >= 2 &&
            Subspace::span(n, tag, products_omega) != Subspace::span(n, tag, charac_omega)) {
            if (why) *why = "M omega span mismatch at degree " + std::to_string(D);
            return false;
        }
    }
    return true;
}

// beta consistency: for every monomial w = y_{i1} ... y_{ik} in non-M
// generators (k <= maxdeg) and every basis element m of M,
// reduce(commutator(w, m)) must equal ad y_{i1} ... ad y_{ik} applied to m.
inline bool beta_operator_oracle_ok(const LieAlgebra& L, const Subspace& M,
                                    unsigned maxdeg, std::string* why = nullptr) {
    auto ctx = make_adapted_context(L, M);
    const FieldTag& tag = L.field();
    std::vector<std::size_t> non_m;
    for (std::size_t p = M.dim(); p < L.dim(); ++p) non_m.push_back(ctx->order().order[p]);

    std::vector<Mat> ad;
    for (std::size_t g : non_m)
        ad.push_back(adjoint_on(L, unit_vec(L.dim(), g, tag), M));

    // non-decreasing index words give exactly the sorted monomials
    std::vector<std::vector<std::size_t>> words = {{}};
    for (unsigned d = 1; d <= maxdeg; ++d) {
        std::vector<std::vector<std::size_t>> next;
        for (const auto& w : words)
            for (std::size_t gi = w.empty() ? 0 : w.back(); gi < non_m.size(); ++gi) {
                auto ww = w;
                ww.push_back(gi);
                next.push_back(ww);
            }
        for (const auto& w : next) {
            if (w.size() != d) continue;
            PbwElement we = PbwElement::one(ctx);
            for (std::size_t gi : w)
                we = pbw_mul(we, PbwElement::generator(ctx, non_m[gi]));
            for (std::size_t r = 0; r < M.dim(); ++r) {
                const Vec& mrow = M.basis()[r];
                Vec lhs = reduce_mod_M_omega(
                    pbw_commutator(we, PbwElement::embed(ctx, mrow)), M);
                // operator side, applied right-to-left
                Vec rhs_local = unit_vec(M.dim(), r, tag);
                for (std::size_t t = w.size(); t-- > 0;)
                    rhs_local = mat_vec(ad[w[t]], rhs_local);
                Vec rhs = zero_vec(L.dim(), tag);
                for (std::size_t i = 0; i < M.dim(); ++i)
                    rhs = vec_add(rhs, vec_scale(rhs_local[i], M.basis()[i]));
                if (lhs != rhs) {
                    if (why) *why = "beta mismatch at word of length " + std::to_string(d);
                    return false;
                }
            }
        }
        words = next;
    }
    return true;
}

inline PbwElement random_element(const PbwCtxPtr& ctx, std::mt19937_64& rng,
                                 unsigned maxdeg, std::size_t nterms) {
    const FieldTag& tag = ctx->algebra().field();
    std::size_t d = ctx->algebra().dim();
    std::uniform_int_distribution<unsigned> deg(0, maxdeg);
    std::uniform_int_distribution<long> coef(-3, 3);
    std::uniform_int_distribution<std::size_t> var(0, d - 1);
    PbwElement out(ctx);
    for (std::size_t t = 0; t < nterms; ++t) {
        PbwElement::ExpVec e(d, 0);
        unsigned dd = deg(rng);
        for (unsigned i = 0; i < dd; ++i) e[var(rng)]++;
        out.add_term(e, Scalar(tag, coef(rng)));
    }
    return out;
}

} // namespace envelkit::oracles

#endif
