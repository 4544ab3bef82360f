#include "envelkit/liealg.hpp"

#include <istream>
#include <sstream>

namespace envelkit {

LieAlgebra::LieAlgebra(std::size_t dim, const FieldTag& field)
    : dim_(dim), field_(field) {
    labels_.reserve(dim);
    for (std::size_t i = 0; i < dim; ++i) labels_.push_back("x" + std::to_string(i + 1));
}

void LieAlgebra::set_labels(std::vector<std::string> labels) {
    if (labels.size() != dim_) throw PreconditionError("label count mismatch");
    labels_ = std::move(labels);
}

std::optional<std::size_t> LieAlgebra::label_index(const std::string& label) const {
    for (std::size_t i = 0; i < labels_.size(); ++i)
        if (labels_[i] == label) return i;
    return std::nullopt;
}

void LieAlgebra::set_bracket(std::size_t i, std::size_t j, const Vec& value) {
    if (i >= dim_ || j >= dim_ || i == j)
        throw PreconditionError("set_bracket: bad basis indices");
    if (value.size() != dim_)
        throw PreconditionError("set_bracket: value has wrong dimension");
    bool flip = i > j;
    if (flip) std::swap(i, j);
    ScEntry entry;
    for (std::size_t k = 0; k < dim_; ++k) {
        Scalar c = flip ? -value[k] : value[k];
        if (!c.is_zero()) entry.emplace_back(k, c);
    }
    if (entry.empty())
        sc_.erase({i, j});
    else
        sc_[{i, j}] = std::move(entry);
}

Vec LieAlgebra::bracket_basis(std::size_t i, std::size_t j) const {
    Vec out = zero_vec(dim_, field_);
    if (i == j) return out;
    bool flip = i > j;
    if (flip) std::swap(i, j);
    auto it = sc_.find({i, j});
    if (it == sc_.end()) return out;
    for (const auto& [k, c] : it->second) out[k] = flip ? -c : c;
    return out;
}

Vec LieAlgebra::bracket(const Vec& u, const Vec& v) const {
    if (u.size() != dim_ || v.size() != dim_)
        throw PreconditionError("bracket: dimension mismatch");
    Vec out = zero_vec(dim_, field_);
    for (std::size_t i = 0; i < dim_; ++i) {
        if (u[i].is_zero()) continue;
        for (std::size_t j = 0; j < dim_; ++j) {
            if (v[j].is_zero() || i == j) continue;
            Vec bij = bracket_basis(i, j);
            Scalar f = u[i] * v[j];
            for (std::size_t k = 0; k < dim_; ++k) out[k] += f * bij[k];
        }
    }
    return out;
}

bool LieAlgebra::operator==(const LieAlgebra& o) const {
    if (dim_ != o.dim_ || field_ != o.field_) return false;
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = i + 1; j < dim_; ++j)
            if (bracket_basis(i, j) != o.bracket_basis(i, j)) return false;
    return true;
}

Mat LieAlgebra::ad_matrix(const Vec& v) const {
    Mat m = zero_mat(dim_, dim_, field_);
    for (std::size_t j = 0; j < dim_; ++j) {
        Vec img = bracket(v, unit_vec(dim_, j, field_));
        for (std::size_t i = 0; i < dim_; ++i) m[i][j] = img[i];
    }
    return m;
}

std::string LieAlgebra::table_str() const {
    std::ostringstream os;
    bool any = false;
    for (const auto& [key, entry] : sc_) {
        if (any) os << ", ";
        any = true;
        os << "[" << labels_[key.first] << "," << labels_[key.second] << "]=";
        bool first = true;
        for (const auto& [k, c] : entry) {
            std::string cs = c.coeff_str();
            bool neg = !cs.empty() && cs[0] == '-';
            if (first) {
                if (neg) { os << "-"; cs = cs.substr(1); }
            } else {
                os << (neg ? "-" : "+");
                if (neg) cs = cs.substr(1);
            }
            first = false;
            if (cs != "1") os << cs << "*";
            os << labels_[k];
        }
    }
    return any ? os.str() : "(abelian)";
}

std::string JacobiReport::str() const {
    if (ok) return "ok";
    std::ostringstream os;
    os << "Jacobi violation at triple (" << (i + 1) << "," << (j + 1) << "," << (k + 1)
       << "), residual (";
    for (std::size_t t = 0; t < residual.size(); ++t) {
        if (t) os << ",";
        os << residual[t].coeff_str();
    }
    os << ")";
    return os.str();
}

JacobiReport validate(const LieAlgebra& L) {
    std::size_t d = L.dim();
    const FieldTag& tag = L.field();
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j)
            for (std::size_t k = j + 1; k < d; ++k) {
                Vec ei = unit_vec(d, i, tag), ej = unit_vec(d, j, tag), ek = unit_vec(d, k, tag);
                Vec r = vec_add(vec_add(L.bracket(L.bracket(ei, ej), ek),
                                        L.bracket(L.bracket(ej, ek), ei)),
                                L.bracket(L.bracket(ek, ei), ej));
                if (!is_zero_vec(r)) return JacobiReport{false, i, j, k, r};
            }
    return JacobiReport{};
}

Subspace product_space(const LieAlgebra& L, const Subspace& U, const Subspace& V) {
    std::vector<Vec> gens;
    for (const auto& u : U.basis())
        for (const auto& v : V.basis()) gens.push_back(L.bracket(u, v));
    return Subspace::span(L.dim(), L.field(), gens);
}

static std::vector<Subspace> series(const LieAlgebra& L, bool lower_central) {
    std::vector<Subspace> out;
    out.push_back(Subspace::full(L.dim(), L.field()));
    for (;;) {
        const Subspace& last = out.back();
        Subspace next = lower_central ? product_space(L, last, out.front())
                                      : product_space(L, last, last);
        if (next == last) break;
        out.push_back(next);
    }
    return out;
}

std::vector<Subspace> derived_series(const LieAlgebra& L) { return series(L, false); }
std::vector<Subspace> lower_central_series(const LieAlgebra& L) { return series(L, true); }

Subspace derived_subalgebra(const LieAlgebra& L) {
    Subspace full = Subspace::full(L.dim(), L.field());
    return product_space(L, full, full);
}

Subspace centralizer(const LieAlgebra& L, const Subspace& U) {
    // kernel of v -> ([v, u_1], ..., [v, u_m]) assembled column-wise
    std::size_t d = L.dim();
    const FieldTag& tag = L.field();
    Mat a = zero_mat(U.dim() * d, d, tag);
    for (std::size_t i = 0; i < d; ++i) {
        Vec ei = unit_vec(d, i, tag);
        for (std::size_t r = 0; r < U.dim(); ++r) {
            Vec img = L.bracket(ei, U.basis()[r]);
            for (std::size_t k = 0; k < d; ++k) a[r * d + k][i] = img[k];
        }
    }
    Mat ker = nullspace(a);
    return Subspace::span(d, tag, ker);
}

Subspace center(const LieAlgebra& L) {
    return centralizer(L, Subspace::full(L.dim(), L.field()));
}

bool is_abelian(const LieAlgebra& L) { return derived_subalgebra(L).dim() == 0; }

bool is_solvable(const LieAlgebra& L) { return derived_series(L).back().dim() == 0; }

std::optional<std::size_t> nilpotency_class(const LieAlgebra& L) {
    auto lcs = lower_central_series(L);
    if (lcs.back().dim() != 0) return std::nullopt;
    return lcs.size() - 1;
}

bool is_metabelian(const LieAlgebra& L) {
    auto ds = derived_series(L);
    return ds.size() <= 2 || ds[2].dim() == 0;
}

bool is_ideal(const LieAlgebra& L, const Subspace& I) {
    Subspace full = Subspace::full(L.dim(), L.field());
    return I.contains(product_space(L, full, I));
}

QuotientResult quotient(const LieAlgebra& L, const Subspace& I) {
    if (!is_ideal(L, I)) throw PreconditionError("NotAnIdeal: quotient requires an ideal");
    std::size_t d = L.dim();
    const FieldTag& tag = L.field();
    auto comp = I.complement_coords();
    std::size_t m = comp.size();

    // projection: reduce v modulo I's rref rows, then read the complement coords
    auto project = [&](const Vec& v) {
        Vec resid = v;
        for (std::size_t r = 0; r < I.dim(); ++r) {
            Scalar c = resid[I.pivots()[r]];
            if (!c.is_zero()) resid = vec_sub(resid, vec_scale(c, I.basis()[r]));
        }
        Vec out = zero_vec(m, tag);
        for (std::size_t t = 0; t < m; ++t) out[t] = resid[comp[t]];
        return out;
    };

    Mat proj = zero_mat(m, d, tag);
    for (std::size_t j = 0; j < d; ++j) {
        Vec col = project(unit_vec(d, j, tag));
        for (std::size_t t = 0; t < m; ++t) proj[t][j] = col[t];
    }

    LieAlgebra Q(m, tag);
    std::vector<std::string> labels;
    for (auto c : comp) labels.push_back(L.labels()[c]);
    Q.set_labels(labels);
    for (std::size_t s = 0; s < m; ++s)
        for (std::size_t t = s + 1; t < m; ++t)
            Q.set_bracket(s, t, project(L.bracket_basis(comp[s], comp[t])));
    auto rep = validate(Q);
    if (!rep.ok) throw Error("internal: quotient failed Jacobi, " + rep.str());
    return {std::move(Q), std::move(proj)};
}

LieAlgebra semidirect(const LieAlgebra& M, const LieAlgebra& K,
                      const std::vector<Mat>& action) {
    if (M.field() != K.field()) throw PreconditionError("MixedFields: semidirect");
    std::size_t m = M.dim(), k = K.dim();
    if (action.size() != k) throw PreconditionError("semidirect: one action matrix per K basis element");
    const FieldTag& tag = M.field();

    // each action matrix must be a derivation of M
    for (std::size_t t = 0; t < k; ++t) {
        const Mat& D = action[t];
        for (std::size_t a = 0; a < m; ++a)
            for (std::size_t b = a + 1; b < m; ++b) {
                Vec lhs = mat_vec(D, M.bracket_basis(a, b));
                Vec ea = unit_vec(m, a, tag), eb = unit_vec(m, b, tag);
                Vec rhs = vec_add(M.bracket(mat_vec(D, ea), eb), M.bracket(ea, mat_vec(D, eb)));
                if (lhs != rhs)
                    throw PreconditionError("NotDerivation: action of K basis element " +
                                            std::to_string(t + 1));
            }
    }
    // and the assignment must respect K's brackets
    for (std::size_t s = 0; s < k; ++s)
        for (std::size_t t = s + 1; t < k; ++t) {
            Vec bst = K.bracket_basis(s, t);
            Mat expect = zero_mat(m, m, tag);
            for (std::size_t r = 0; r < k; ++r)
                if (!bst[r].is_zero()) expect = mat_add(expect, mat_scale(bst[r], action[r]));
            if (mat_commutator(action[s], action[t]) != expect)
                throw PreconditionError("NotRepresentation: K brackets not respected");
        }

    LieAlgebra L(m + k, tag);
    std::vector<std::string> labels = M.labels();
    for (const auto& lab : K.labels()) labels.push_back(lab);
    L.set_labels(labels);
    auto lift_m = [&](const Vec& v) {
        Vec out = zero_vec(m + k, tag);
        for (std::size_t i = 0; i < m; ++i) out[i] = v[i];
        return out;
    };
    auto lift_k = [&](const Vec& v) {
        Vec out = zero_vec(m + k, tag);
        for (std::size_t i = 0; i < k; ++i) out[m + i] = v[i];
        return out;
    };
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = a + 1; b < m; ++b)
            L.set_bracket(a, b, lift_m(M.bracket_basis(a, b)));
    for (std::size_t s = 0; s < k; ++s)
        for (std::size_t t = s + 1; t < k; ++t)
            L.set_bracket(m + s, m + t, lift_k(K.bracket_basis(s, t)));
    for (std::size_t s = 0; s < k; ++s)
        for (std::size_t a = 0; a < m; ++a)
            L.set_bracket(m + s, a, lift_m(mat_vec(action[s], unit_vec(m, a, tag))));
    auto rep = validate(L);
    if (!rep.ok) throw Error("internal: semidirect failed Jacobi, " + rep.str());
    return L;
}

Mat adjoint_on(const LieAlgebra& L, const Vec& y, const Subspace& M) {
    std::size_t m = M.dim();
    Mat T = zero_mat(m, m, L.field());
    for (std::size_t r = 0; r < m; ++r) {
        Vec img = L.bracket(y, M.basis()[r]);
        auto coords = M.coordinates(img);
        if (!coords)
            throw PreconditionError("NotInvariant: [y, M] leaves M");
        for (std::size_t i = 0; i < m; ++i) T[i][r] = (*coords)[i];
    }
    return T;
}

LieAlgebra change_of_basis(const LieAlgebra& L, const Mat& P) {
    auto inv = mat_inverse(P);
    if (!inv) throw PreconditionError("change_of_basis: singular matrix");
    std::size_t d = L.dim();
    LieAlgebra out(d, L.field());
    // coordinates of v in the new basis: c with v = P^T c, i.e. c = (P^T)^{-1} v
    Mat pt = zero_mat(d, d, L.field());
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) pt[i][j] = (*inv)[j][i];
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j)
            out.set_bracket(i, j, mat_vec(pt, L.bracket(P[i], P[j])));
    return out;
}

LieAlgebra lie_from_matrices(const std::vector<Mat>& basis, const FieldTag& field) {
    std::size_t k = basis.size();
    std::size_t n = k == 0 ? 0 : basis[0].size();
    std::vector<Vec> flat;
    for (const auto& b : basis) flat.push_back(flatten(b));
    Subspace span = Subspace::span(n * n, field, flat);
    if (span.dim() != k) throw PreconditionError("lie_from_matrices: dependent basis");
    LieAlgebra K(k, field);
    for (std::size_t s = 0; s < k; ++s)
        for (std::size_t t = s + 1; t < k; ++t) {
            Vec comm = flatten(mat_commutator(basis[s], basis[t]));
            // solve for coordinates in the given (not echelonized) basis
            Mat sys = zero_mat(n * n, k, field);
            for (std::size_t c = 0; c < k; ++c)
                for (std::size_t r = 0; r < n * n; ++r) sys[r][c] = flat[c][r];
            auto coords = solve(sys, comm);
            if (!coords)
                throw PreconditionError("lie_from_matrices: not closed under commutator");
            K.set_bracket(s, t, *coords);
        }
    return K;
}

LieAlgebra abelian_algebra(std::size_t dim, const FieldTag& field) {
    return LieAlgebra(dim, field);
}

LieAlgebra read_structure_constants(std::istream& in) {
    std::string line;
    std::size_t lineno = 0;
    std::optional<LieAlgebra> L;
    FieldTag tag;
    std::size_t dim = 0;
    std::map<std::pair<std::size_t, std::size_t>, Vec> pending;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue; // blank line
        if (tok[0] == '#') continue;
        if (!L) {
            if (tok != "dim")
                throw ParseError("line " + std::to_string(lineno) + ": expected 'dim d field Q|Fp'");
            std::string fieldkw, fieldval;
            if (!(ls >> dim >> fieldkw >> fieldval) || fieldkw != "field" || dim == 0)
                throw ParseError("line " + std::to_string(lineno) + ": expected 'dim d field Q|Fp'");
            try {
                tag = FieldTag::parse(fieldval);
            } catch (const Error&) {
                throw ParseError("line " + std::to_string(lineno) + ": bad field '" + fieldval + "'");
            }
            L.emplace(dim, tag);
            continue;
        }
        std::size_t i, j, k;
        std::string coeff;
        std::istringstream entry(line);
        if (!(entry >> i >> j >> k >> coeff))
            throw ParseError("line " + std::to_string(lineno) + ": expected 'i j k coeff'");
        if (i < 1 || j < 1 || k < 1 || i > dim || j > dim || k > dim || i >= j)
            throw ParseError("line " + std::to_string(lineno) + ": indices must satisfy 1 <= i < j <= dim");
        Scalar c(tag, 0);
        try {
            c = Scalar::parse(tag, coeff);
        } catch (const Error&) {
            throw ParseError("line " + std::to_string(lineno) + ": bad coefficient '" + coeff + "'");
        }
        auto key = std::make_pair(i - 1, j - 1);
        auto it = pending.find(key);
        if (it == pending.end()) it = pending.emplace(key, zero_vec(dim, tag)).first;
        it->second[k - 1] += c;
    }
    if (!L) throw ParseError("empty structure-constant input");
    for (const auto& [key, vec] : pending) L->set_bracket(key.first, key.second, vec);
    return *L;
}

std::string write_structure_constants(const LieAlgebra& L) {
    std::ostringstream os;
    os << "dim " << L.dim() << " field " << L.field().str() << "\n";
    for (std::size_t i = 0; i < L.dim(); ++i)
        for (std::size_t j = i + 1; j < L.dim(); ++j) {
            Vec b = L.bracket_basis(i, j);
            for (std::size_t k = 0; k < L.dim(); ++k)
                if (!b[k].is_zero())
                    os << (i + 1) << " " << (j + 1) << " " << (k + 1) << " "
                       << b[k].coeff_str() << "\n";
        }
    return os.str();
}

} // namespace envelkit
