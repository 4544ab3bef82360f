#include "envelkit/poly.hpp"

#include <algorithm>
#include <sstream>

namespace envelkit {

UPoly::UPoly(const FieldTag& tag, std::vector<Scalar> coeffs)
    : tag_(tag), coeffs_(std::move(coeffs)) {
    normalize();
}

void UPoly::normalize() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

UPoly UPoly::monomial(const FieldTag& tag, std::size_t deg, const Scalar& c) {
    std::vector<Scalar> cs(deg + 1, Scalar::zero(tag));
    cs[deg] = c;
    return UPoly(tag, std::move(cs));
}

Scalar UPoly::coeff(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : Scalar::zero(tag_);
}

UPoly UPoly::operator+(const UPoly& o) const {
    std::vector<Scalar> cs(std::max(coeffs_.size(), o.coeffs_.size()), Scalar::zero(tag_));
    for (std::size_t i = 0; i < cs.size(); ++i) cs[i] = coeff(i) + o.coeff(i);
    return UPoly(tag_, std::move(cs));
}

UPoly UPoly::operator-(const UPoly& o) const { return *this + (-o); }

UPoly UPoly::operator-() const {
    std::vector<Scalar> cs = coeffs_;
    for (auto& c : cs) c = -c;
    return UPoly(tag_, std::move(cs));
}

UPoly UPoly::operator*(const UPoly& o) const {
    if (is_zero() || o.is_zero()) return UPoly(tag_);
    std::vector<Scalar> cs(coeffs_.size() + o.coeffs_.size() - 1, Scalar::zero(tag_));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
            cs[i + j] += coeffs_[i] * o.coeffs_[j];
    return UPoly(tag_, std::move(cs));
}

std::pair<UPoly, UPoly> UPoly::divmod(const UPoly& d) const {
    if (d.is_zero()) throw PreconditionError("DivisionByZero: polynomial division");
    UPoly rem = *this;
    UPoly quot(tag_);
    while (!rem.is_zero() && rem.degree() >= d.degree()) {
        std::size_t shift = rem.degree() - d.degree();
        Scalar c = rem.coeffs_.back() / d.coeffs_.back();
        UPoly m = monomial(tag_, shift, c);
        quot = quot + m;
        rem = rem - m * d;
    }
    return {quot, rem};
}

Scalar UPoly::eval(const Scalar& x) const {
    Scalar acc = Scalar::zero(tag_);
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
    return acc;
}

Mat UPoly::eval(const Mat& m) const {
    std::size_t n = m.size();
    Mat acc = zero_mat(n, n, tag_);
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        acc = mat_mul(acc, m);
        for (std::size_t r = 0; r < n; ++r) acc[r][r] += coeffs_[i];
    }
    return acc;
}

std::string UPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        const Scalar& c = coeffs_[i];
        if (c.is_zero()) continue;
        std::string cs = c.coeff_str();
        bool neg = !cs.empty() && cs[0] == '-';
        if (first) {
            if (neg) { os << "-"; cs = cs.substr(1); }
        } else {
            os << (neg ? " - " : " + ");
            if (neg) cs = cs.substr(1);
        }
        first = false;
        if (i == 0) {
            os << cs;
        } else {
            if (cs != "1") os << cs << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

namespace {

std::vector<mpz_class> positive_divisors(const mpz_class& n_in) {
    mpz_class n = abs(n_in);
    std::vector<mpz_class> divs;
    for (mpz_class d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            divs.push_back(d);
            if (d * d != n) divs.push_back(n / d);
        }
    }
    return divs;
}

} // namespace

FactorSignature rational_factor_signature(const UPoly& f_in) {
    if (!f_in.field().is_rationals())
        throw PreconditionError("factor signature implemented over Q only");
    if (f_in.is_zero() || f_in.degree() == 0) return {};
    const FieldTag Q = FieldTag::rationals();
    UPoly f = f_in;
    std::map<Scalar, int> root_mult;

    // strip powers of x
    while (f.coeff(0).is_zero() && f.degree() >= 1) {
        root_mult[Scalar::zero(Q)]++;
        std::vector<Scalar> shifted(f.coeffs().begin() + 1, f.coeffs().end());
        f = UPoly(Q, shifted);
    }

    // rational roots p/q with p | a0, q | an, after clearing denominators
    while (f.degree() >= 1 && !f.coeff(0).is_zero()) {
        mpz_class den_lcm = 1;
        for (const auto& c : f.coeffs())
            mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.value().get_den().get_mpz_t());
        mpz_class a0 = mpq_class(f.coeff(0).value() * den_lcm).get_num();
        mpz_class an = mpq_class(f.coeffs().back().value() * den_lcm).get_num();
        bool found = false;
        for (const auto& p : positive_divisors(a0)) {
            for (const auto& q : positive_divisors(an)) {
                for (int sign : {1, -1}) {
                    Scalar r(Q, mpq_class(sign * p, q));
                    if (!f.eval(r).is_zero()) continue;
                    root_mult[r]++;
                    UPoly lin(Q, {-r, Scalar::one(Q)});
                    f = f.divmod(lin).first;
                    found = true;
                    break;
                }
                if (found) break;
            }
            if (found) break;
        }
        if (!found) break;
    }

    FactorSignature sig;
    for (const auto& [root, mult] : root_mult) sig.emplace_back(1, mult);
    if (f.degree() == 2 || f.degree() == 3) {
        sig.emplace_back(f.degree(), 1); // no rational root: irreducible for deg <= 3
    } else if (f.degree() >= 4) {
        throw PreconditionError("factor signature: residual degree > 3 unsupported");
    }
    std::sort(sig.begin(), sig.end());
    return sig;
}

std::string signature_str(const FactorSignature& sig) {
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < sig.size(); ++i) {
        if (i) os << ",";
        os << "(" << sig[i].first << "," << sig[i].second << ")";
    }
    os << "}";
    return os.str();
}

bool cubic_quotient_isomorphic(const Scalar& b, const Scalar& c) {
    if (b.is_zero() || c.is_zero())
        throw PreconditionError("cubic quotient test requires nonzero parameters");
    return is_square(c / b);
}

MPoly MPoly::constant(std::size_t nvars, const mpq_class& c) {
    MPoly p(nvars);
    p.add_term(Expo(nvars, 0), c);
    return p;
}

MPoly MPoly::variable(std::size_t nvars, std::size_t i) {
    MPoly p(nvars);
    Expo e(nvars, 0);
    e[i] = 1;
    p.add_term(e, 1);
    return p;
}

void MPoly::add_term(const Expo& e, const mpq_class& c) {
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

MPoly MPoly::operator+(const MPoly& o) const {
    MPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

MPoly MPoly::operator-(const MPoly& o) const {
    MPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

MPoly MPoly::operator-() const {
    MPoly r(nvars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

MPoly MPoly::operator*(const MPoly& o) const {
    MPoly r(nvars_);
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) {
            Expo e = e1;
            for (std::size_t i = 0; i < nvars_; ++i) e[i] += e2[i];
            r.add_term(e, c1 * c2);
        }
    return r;
}

MPoly MPoly::divide_exact(const MPoly& d) const {
    if (d.is_zero()) throw PreconditionError("DivisionByZero: exact polynomial division");
    MPoly rem = *this;
    MPoly quot(nvars_);
    while (!rem.is_zero()) {
        const auto& [en, cn] = *rem.terms_.rbegin(); // lex-leading term
        const auto& [ed, cd] = *d.terms_.rbegin();
        Expo diff(nvars_);
        for (std::size_t i = 0; i < nvars_; ++i) {
            if (en[i] < ed[i])
                throw PreconditionError("polynomial division not exact");
            diff[i] = en[i] - ed[i];
        }
        MPoly mono(nvars_);
        mono.add_term(diff, cn / cd);
        quot = quot + mono;
        rem = rem - mono * d;
    }
    return quot;
}

mpq_class MPoly::eval(const std::vector<mpq_class>& point) const {
    mpq_class acc = 0;
    for (const auto& [e, c] : terms_) {
        mpq_class term = c;
        for (std::size_t i = 0; i < nvars_; ++i)
            for (unsigned k = 0; k < e[i]; ++k) term *= point[i];
        acc += term;
    }
    return acc;
}

std::string MPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        mpq_class c = it->second;
        if (!first) {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        } else {
            first = false;
        }
        bool has_var = false;
        std::ostringstream vars;
        for (std::size_t i = 0; i < nvars_; ++i) {
            if (it->first[i] == 0) continue;
            if (has_var) vars << "*";
            vars << "t" << (i + 1);
            if (it->first[i] > 1) vars << "^" << it->first[i];
            has_var = true;
        }
        if (!has_var) {
            os << c.get_str();
        } else {
            if (c != 1) os << c.get_str() << "*";
            os << vars.str();
        }
    }
    return os.str();
}

namespace {

// Rational function without reduction; only used transiently in back-substitution.
struct FracPoly {
    MPoly num, den;
    FracPoly(std::size_t nvars) : num(nvars), den(MPoly::constant(nvars, 1)) {}
    FracPoly(MPoly n, MPoly d) : num(std::move(n)), den(std::move(d)) {}
    bool is_zero() const { return num.is_zero(); }
};

FracPoly frac_add(const FracPoly& a, const FracPoly& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    return FracPoly(a.num * b.den + b.num * a.den, a.den * b.den);
}

FracPoly frac_mul_poly(const FracPoly& a, const MPoly& p) {
    return FracPoly(a.num * p, a.den);
}

FracPoly frac_div_poly(const FracPoly& a, const MPoly& p) {
    return FracPoly(a.num, a.den * p);
}

} // namespace

SymbolicKernel symbolicKernelImpl(const std::vector<std::vector<MPoly>>& a) {
    SymbolicKernel result;
    if (a.empty()) return result;
    std::size_t m = a.size(), n = a[0].size();
    std::size_t nvars = a[0][0].nvars();
    auto w = a;

    // forward fraction-free elimination; entries stay minors of the input
    MPoly prev = MPoly::constant(nvars, 1);
    std::vector<std::size_t> pivcols;
    std::size_t row = 0;
    for (std::size_t col = 0; col < n && row < m; ++col) {
        std::size_t sel = row;
        while (sel < m && w[sel][col].is_zero()) ++sel;
        if (sel == m) continue;
        std::swap(w[row], w[sel]);
        const MPoly pivot = w[row][col];
        for (std::size_t i = row + 1; i < m; ++i) {
            for (std::size_t j = col + 1; j < n; ++j)
                w[i][j] = (w[i][j] * pivot - w[i][col] * w[row][j]).divide_exact(prev);
            w[i][col] = MPoly::zero(nvars);
        }
        prev = pivot;
        pivcols.push_back(col);
        ++row;
    }
    result.rank = pivcols.size();

    std::vector<bool> is_pivot(n, false);
    for (auto p : pivcols) is_pivot[p] = true;

    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        std::vector<FracPoly> x(n, FracPoly(nvars));
        x[f] = FracPoly(MPoly::constant(nvars, 1), MPoly::constant(nvars, 1));
        for (std::size_t r = pivcols.size(); r-- > 0;) {
            FracPoly s(nvars);
            for (std::size_t c = pivcols[r] + 1; c < n; ++c) {
                if (w[r][c].is_zero() || x[c].is_zero()) continue;
                s = frac_add(s, frac_mul_poly(x[c], w[r][c]));
            }
            s.num = -s.num;
            x[pivcols[r]] = frac_div_poly(s, w[r][pivcols[r]]);
        }
        // clear denominators
        MPoly common = MPoly::constant(nvars, 1);
        for (const auto& e : x)
            if (!e.is_zero()) common = common * e.den;
        std::vector<MPoly> v;
        v.reserve(n);
        for (const auto& e : x) {
            if (e.is_zero()) {
                v.push_back(MPoly::zero(nvars));
            } else {
                v.push_back((e.num * common).divide_exact(e.den));
            }
        }
        result.kernel.push_back(std::move(v));
    }

    // sanity: kernel vectors annihilate the input identically
    for (const auto& v : result.kernel)
        for (std::size_t i = 0; i < m; ++i) {
            MPoly s(nvars);
            for (std::size_t j = 0; j < n; ++j) s = s + a[i][j] * v[j];
            if (!s.is_zero())
                throw Error("internal: symbolic kernel verification failed");
        }
    return result;
}

SymbolicKernel symbolic_kernel(const std::vector<std::vector<MPoly>>& a) {
    return symbolicKernelImpl(a);
}

} // namespace envelkit
