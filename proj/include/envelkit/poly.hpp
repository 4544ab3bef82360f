#ifndef ENVELKIT_POLY_HPP
#define ENVELKIT_POLY_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "envelkit/linalg.hpp"
#include "envelkit/scalars.hpp"

namespace envelkit {

// Univariate polynomial over the scalar field, dense ascending coefficients,
// no trailing zeros.
class UPoly {
public:
    explicit UPoly(const FieldTag& tag) : tag_(tag) {}
    UPoly(const FieldTag& tag, std::vector<Scalar> coeffs);

    static UPoly zero(const FieldTag& tag) { return UPoly(tag); }
    static UPoly monomial(const FieldTag& tag, std::size_t deg, const Scalar& c);

    const FieldTag& field() const { return tag_; }
    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; } // -1 for zero
    Scalar coeff(std::size_t i) const;
    const std::vector<Scalar>& coeffs() const { return coeffs_; }

    UPoly operator+(const UPoly& o) const;
    UPoly operator-(const UPoly& o) const;
    UPoly operator*(const UPoly& o) const;
    UPoly operator-() const;
    bool operator==(const UPoly& o) const { return tag_ == o.tag_ && coeffs_ == o.coeffs_; }
    bool operator!=(const UPoly& o) const { return !(*this == o); }

    // Division with remainder by a nonzero divisor.
    std::pair<UPoly, UPoly> divmod(const UPoly& d) const;

    Scalar eval(const Scalar& x) const;
    Mat eval(const Mat& m) const; // f(M); constant term contributes c*I

    std::string str(const std::string& var = "x") const; // "x^3 - 2*x"

private:
    void normalize();
    FieldTag tag_;
    std::vector<Scalar> coeffs_;
};

// Multiset of (degree, multiplicity) of the irreducible factors over Q.
// Implemented for polynomials whose non-linear part has degree <= 3 after
// rational-root extraction, which covers everything this toolkit produces.
using FactorSignature = std::vector<std::pair<int, int>>;

FactorSignature rational_factor_signature(const UPoly& f);
std::string signature_str(const FactorSignature& sig);

// F[x]/(x^3 - b x) vs F[x]/(x^3 - c x) for nonzero b, c over Q:
// isomorphic exactly when c/b is a square.
bool cubic_quotient_isomorphic(const Scalar& b, const Scalar& c);

// Multivariate polynomial over Q, for the symbolic rank/kernel computations.
class MPoly {
public:
    using Expo = std::vector<unsigned>;

    explicit MPoly(std::size_t nvars) : nvars_(nvars) {}
    static MPoly zero(std::size_t nvars) { return MPoly(nvars); }
    static MPoly constant(std::size_t nvars, const mpq_class& c);
    static MPoly variable(std::size_t nvars, std::size_t i);

    std::size_t nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Expo, mpq_class>& terms() const { return terms_; }

    MPoly operator+(const MPoly& o) const;
    MPoly operator-(const MPoly& o) const;
    MPoly operator*(const MPoly& o) const;
    MPoly operator-() const;
    bool operator==(const MPoly& o) const { return terms_ == o.terms_; }

    void add_term(const Expo& e, const mpq_class& c);

    // Exact division (throws if not exact) -- the Bareiss step divisor.
    MPoly divide_exact(const MPoly& d) const;

    mpq_class eval(const std::vector<mpq_class>& point) const;

    std::string str() const;

private:
    std::size_t nvars_;
    std::map<Expo, mpq_class> terms_; // lex on exponent vectors; no zero coeffs
};

// Fraction-free (Bareiss) Gauss-Jordan over Q[t_1..t_n].
// Returns the generic rank and a kernel basis of polynomial vectors
// (rows) satisfying a * v == 0 identically.
struct SymbolicKernel {
    std::size_t rank = 0;
    std::vector<std::vector<MPoly>> kernel;
};
SymbolicKernel symbolic_kernel(const std::vector<std::vector<MPoly>>& a);

} // namespace envelkit

#endif
