#include "envelkit/pbw.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace envelkit {

BasisOrder BasisOrder::identity(std::size_t dim) {
    BasisOrder b;
    b.order.resize(dim);
    std::iota(b.order.begin(), b.order.end(), 0);
    return b;
}

std::vector<std::size_t> BasisOrder::inverse() const {
    std::vector<std::size_t> inv(order.size());
    for (std::size_t pos = 0; pos < order.size(); ++pos) inv[order[pos]] = pos;
    return inv;
}

BasisOrder adapted_order(const LieAlgebra& L, const Subspace& M) {
    std::vector<bool> in_M(L.dim(), false);
    for (const auto& row : M.basis()) {
        std::size_t support = 0, idx = 0;
        for (std::size_t j = 0; j < row.size(); ++j)
            if (!row[j].is_zero()) { ++support; idx = j; }
        if (support != 1 || !row[idx].is_one())
            throw PreconditionError(
                "OrderNotAdapted: M is not spanned by standard basis vectors");
        in_M[idx] = true;
    }
    BasisOrder b;
    for (std::size_t j = 0; j < L.dim(); ++j)
        if (in_M[j]) b.order.push_back(j);
    for (std::size_t j = 0; j < L.dim(); ++j)
        if (!in_M[j]) b.order.push_back(j);
    return b;
}

PbwContext::PbwContext(LieAlgebra algebra, BasisOrder order, std::size_t degree_cap)
    : algebra_(std::move(algebra)), order_(std::move(order)), degree_cap_(degree_cap) {
    if (order_.order.size() != algebra_.dim())
        throw PreconditionError("basis order size mismatch");
    positions_ = order_.inverse();
}

PbwCtxPtr make_pbw_context(const LieAlgebra& L, std::size_t degree_cap) {
    return std::make_shared<PbwContext>(L, BasisOrder::identity(L.dim()), degree_cap);
}

PbwCtxPtr make_adapted_context(const LieAlgebra& L, const Subspace& M,
                               std::size_t degree_cap) {
    return std::make_shared<PbwContext>(L, adapted_order(L, M), degree_cap);
}

bool PbwElement::DegLex::operator()(const ExpVec& a, const ExpVec& b) const {
    unsigned da = std::accumulate(a.begin(), a.end(), 0u);
    unsigned db = std::accumulate(b.begin(), b.end(), 0u);
    if (da != db) return da < db;
    return a < b;
}

PbwElement PbwElement::one(const PbwCtxPtr& ctx) {
    return constant(ctx, Scalar::one(ctx->algebra().field()));
}

PbwElement PbwElement::constant(const PbwCtxPtr& ctx, const Scalar& c) {
    PbwElement e(ctx);
    e.add_term(ExpVec(ctx->algebra().dim(), 0), c);
    return e;
}

PbwElement PbwElement::generator(const PbwCtxPtr& ctx, std::size_t original_index) {
    PbwElement e(ctx);
    ExpVec exp(ctx->algebra().dim(), 0);
    exp[ctx->positions()[original_index]] = 1;
    e.add_term(exp, Scalar::one(ctx->algebra().field()));
    return e;
}

PbwElement PbwElement::embed(const PbwCtxPtr& ctx, const Vec& v) {
    PbwElement e(ctx);
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_zero()) continue;
        ExpVec exp(ctx->algebra().dim(), 0);
        exp[ctx->positions()[i]] = 1;
        e.add_term(exp, v[i]);
    }
    return e;
}

std::size_t PbwElement::degree() const {
    std::size_t d = 0;
    for (const auto& [e, c] : terms_)
        d = std::max<std::size_t>(d, std::accumulate(e.begin(), e.end(), 0u));
    return d;
}

void PbwElement::add_term(const ExpVec& e, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void PbwElement::check_compatible(const PbwElement& o) const {
    if (!(*ctx_ == *o.ctx_))
        throw PreconditionError("MixedParents: elements of different enveloping algebras");
}

PbwElement PbwElement::operator+(const PbwElement& o) const {
    check_compatible(o);
    PbwElement r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

PbwElement PbwElement::operator-(const PbwElement& o) const { return *this + (-o); }

PbwElement PbwElement::operator-() const {
    PbwElement r(ctx_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

PbwElement PbwElement::scaled(const Scalar& c) const {
    PbwElement r(ctx_);
    if (c.is_zero()) return r;
    for (const auto& [e, coeff] : terms_) r.terms_.emplace(e, coeff * c);
    return r;
}

bool PbwElement::operator==(const PbwElement& o) const {
    return *ctx_ == *o.ctx_ &&
           std::equal(terms_.begin(), terms_.end(), o.terms_.begin(), o.terms_.end());
}

namespace {

// word = sequence of original basis indices; straightens into sorted monomials
void straighten(const PbwContext& ctx, std::vector<std::size_t> word0, Scalar coeff0,
                PbwElement& out) {
    const auto& pos = ctx.positions();
    const LieAlgebra& L = ctx.algebra();
    std::vector<std::pair<std::vector<std::size_t>, Scalar>> stack;
    stack.emplace_back(std::move(word0), std::move(coeff0));
    while (!stack.empty()) {
        auto [word, coeff] = std::move(stack.back());
        stack.pop_back();
        bool sorted = true;
        for (std::size_t t = 0; t + 1 < word.size(); ++t) {
            if (pos[word[t]] <= pos[word[t + 1]]) continue;
            sorted = false;
            // x_a x_b -> x_b x_a + [x_a, x_b]
            std::size_t a = word[t], b = word[t + 1];
            std::vector<std::size_t> swapped = word;
            std::swap(swapped[t], swapped[t + 1]);
            stack.emplace_back(std::move(swapped), coeff);
            Vec br = L.bracket_basis(a, b);
            for (std::size_t k = 0; k < br.size(); ++k) {
                if (br[k].is_zero()) continue;
                std::vector<std::size_t> shorter;
                shorter.reserve(word.size() - 1);
                shorter.insert(shorter.end(), word.begin(), word.begin() + t);
                shorter.push_back(k);
                shorter.insert(shorter.end(), word.begin() + t + 2, word.end());
                stack.emplace_back(std::move(shorter), coeff * br[k]);
            }
            break;
        }
        if (sorted) {
            PbwElement::ExpVec exp(L.dim(), 0);
            for (std::size_t g : word) exp[pos[g]]++;
            out.add_term(exp, coeff);
        }
    }
}

std::vector<std::size_t> exp_to_word(const PbwContext& ctx, const PbwElement::ExpVec& e) {
    std::vector<std::size_t> word;
    for (std::size_t p = 0; p < e.size(); ++p)
        for (unsigned k = 0; k < e[p]; ++k) word.push_back(ctx.order().order[p]);
    return word;
}

} // namespace

PbwElement pbw_mul(const PbwElement& u, const PbwElement& v) {
    u.check_compatible(v);
    const PbwContext& ctx = *u.context();
    if (u.degree() + v.degree() > ctx.degree_cap())
        throw PreconditionError("degree cap exceeded: " +
                                std::to_string(u.degree() + v.degree()) + " > " +
                                std::to_string(ctx.degree_cap()));
    PbwElement out(u.context());
    for (const auto& [eu, cu] : u.terms())
        for (const auto& [ev, cv] : v.terms()) {
            std::vector<std::size_t> word = exp_to_word(ctx, eu);
            std::vector<std::size_t> right = exp_to_word(ctx, ev);
            word.insert(word.end(), right.begin(), right.end());
            straighten(ctx, std::move(word), cu * cv, out);
        }
    return out;
}

PbwElement pbw_commutator(const PbwElement& u, const PbwElement& v) {
    return pbw_mul(u, v) - pbw_mul(v, u);
}

Scalar augmentation(const PbwElement& u) {
    const FieldTag& tag = u.context()->algebra().field();
    PbwElement::ExpVec zero(u.context()->algebra().dim(), 0);
    auto it = u.terms().find(zero);
    return it == u.terms().end() ? Scalar::zero(tag) : it->second;
}

namespace {

void check_abelian_ideal(const LieAlgebra& L, const Subspace& M) {
    Subspace full = Subspace::full(L.dim(), L.field());
    if (!M.contains(product_space(L, full, M)))
        throw PreconditionError("NotAbelianIdeal: M is not an ideal");
    if (product_space(L, M, M).dim() != 0)
        throw PreconditionError("NotAbelianIdeal: M is not abelian");
}

void check_adapted(const PbwElement& u, const Subspace& M) {
    const PbwContext& ctx = *u.context();
    const LieAlgebra& L = ctx.algebra();
    check_abelian_ideal(L, M);
    std::vector<Vec> first;
    for (std::size_t p = 0; p < M.dim(); ++p)
        first.push_back(unit_vec(L.dim(), ctx.order().order[p], L.field()));
    if (!(Subspace::span(L.dim(), L.field(), first) == M))
        throw PreconditionError("OrderNotAdapted: leading positions do not span M");
}

} // namespace

bool in_MU(const PbwElement& u, const Subspace& M) {
    check_adapted(u, M);
    for (const auto& [e, c] : u.terms()) {
        unsigned m_deg = 0;
        for (std::size_t p = 0; p < M.dim(); ++p) m_deg += e[p];
        if (m_deg == 0) return false;
    }
    return true;
}

bool in_M_omega(const PbwElement& u, const Subspace& M) {
    if (!in_MU(u, M)) return false;
    for (const auto& [e, c] : u.terms()) {
        unsigned total = std::accumulate(e.begin(), e.end(), 0u);
        if (total < 2) return false;
    }
    return true;
}

Vec reduce_mod_M_omega(const PbwElement& u, const Subspace& M) {
    if (!in_MU(u, M)) throw PreconditionError("NotInMU: element lies outside MU(L)");
    const PbwContext& ctx = *u.context();
    const LieAlgebra& L = ctx.algebra();
    Vec out = zero_vec(L.dim(), L.field());
    for (const auto& [e, c] : u.terms()) {
        unsigned total = std::accumulate(e.begin(), e.end(), 0u);
        if (total != 1) continue;
        for (std::size_t p = 0; p < e.size(); ++p)
            if (e[p] == 1) out[ctx.order().order[p]] += c;
    }
    return out;
}

std::string PbwElement::str() const {
    if (terms_.empty()) return "0";
    const auto& labels = ctx_->algebra().labels();
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        Scalar c = it->second;
        std::string cs = c.coeff_str();
        bool neg = !cs.empty() && cs[0] == '-';
        if (first) {
            if (neg) { os << "-"; cs = cs.substr(1); }
            first = false;
        } else {
            os << (neg ? " - " : " + ");
            if (neg) cs = cs.substr(1);
        }
        bool has_var = false;
        std::ostringstream vars;
        for (std::size_t p = 0; p < it->first.size(); ++p) {
            if (it->first[p] == 0) continue;
            if (has_var) vars << "*";
            vars << labels[ctx_->order().order[p]];
            if (it->first[p] > 1) vars << "^" << it->first[p];
            has_var = true;
        }
        if (!has_var) {
            os << cs;
        } else {
            if (cs != "1") os << cs << "*";
            os << vars.str();
        }
    }
    return os.str();
}

PbwElement parse_element(const PbwCtxPtr& ctx, const std::string& text) {
    const LieAlgebra& L = ctx->algebra();
    const FieldTag& tag = L.field();
    PbwElement out(ctx);

    // split into signed terms at top level
    std::vector<std::pair<int, std::string>> parts;
    std::string cur;
    int sign = 1;
    bool expect_term = true;
    for (char ch : text) {
        if (std::isspace(static_cast<unsigned char>(ch))) continue;
        if ((ch == '+' || ch == '-') && !expect_term) {
            parts.emplace_back(sign, cur);
            cur.clear();
            sign = (ch == '-') ? -1 : 1;
            expect_term = true;
        } else if (ch == '-' && expect_term) {
            sign = -sign;
        } else if (ch == '+' && expect_term) {
            // redundant leading plus
        } else {
            cur.push_back(ch);
            expect_term = false;
        }
    }
    if (!cur.empty()) parts.emplace_back(sign, cur);
    if (parts.empty()) throw ParseError("empty element expression");

    for (const auto& [sgn, term] : parts) {
        Scalar coeff = Scalar(tag, sgn);
        PbwElement::ExpVec exp(L.dim(), 0);
        std::size_t i = 0;
        bool any_factor = false;
        while (i < term.size()) {
            std::size_t j = term.find('*', i);
            std::string factor = term.substr(i, j == std::string::npos ? j : j - i);
            i = (j == std::string::npos) ? term.size() : j + 1;
            if (factor.empty()) throw ParseError("empty factor in term '" + term + "'");
            any_factor = true;
            if (std::isdigit(static_cast<unsigned char>(factor[0]))) {
                coeff *= Scalar::parse(tag, factor);
                continue;
            }
            std::string name = factor;
            unsigned e = 1;
            if (auto caret = factor.find('^'); caret != std::string::npos) {
                name = factor.substr(0, caret);
                try {
                    e = std::stoul(factor.substr(caret + 1));
                } catch (...) {
                    throw ParseError("bad exponent in '" + factor + "'");
                }
            }
            auto idx = L.label_index(name);
            if (!idx) throw ParseError("unknown variable '" + name + "'");
            exp[ctx->positions()[*idx]] += e;
        }
        if (!any_factor) throw ParseError("empty term");
        out.add_term(exp, coeff);
    }
    return out;
}

} // namespace envelkit
