#ifndef ENVELKIT_SCALARS_HPP
#define ENVELKIT_SCALARS_HPP

#include <gmpxx.h>

#include <optional>
#include <string>

#include "envelkit/errors.hpp"

namespace envelkit {

// The coefficient field: Q (p == 0) or a prime field F_p.
class FieldTag {
public:
    FieldTag() : p_(0) {}
    static FieldTag rationals() { return FieldTag(); }
    static FieldTag prime_field(unsigned long p);

    unsigned long characteristic() const { return p_; }
    bool is_rationals() const { return p_ == 0; }

    bool operator==(const FieldTag& o) const { return p_ == o.p_; }
    bool operator!=(const FieldTag& o) const { return p_ != o.p_; }

    std::string str() const; // "Q" or "F5"
    static FieldTag parse(const std::string& text);

private:
    explicit FieldTag(unsigned long p) : p_(p) {}
    unsigned long p_;
};

// Exact field element. Rationals are kept canonical (lowest terms, positive
// denominator, courtesy of mpq); prime-field values live in [0, p).
class Scalar {
public:
    Scalar() : v_(0) {}
    Scalar(const FieldTag& tag, const mpq_class& v);
    Scalar(const FieldTag& tag, long v) : Scalar(tag, mpq_class(v)) {}

    static Scalar zero(const FieldTag& tag) { return Scalar(tag, 0); }
    static Scalar one(const FieldTag& tag) { return Scalar(tag, 1); }

    const FieldTag& field() const { return tag_; }
    const mpq_class& value() const { return v_; }
    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }

    Scalar operator-() const;
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

    Scalar inverse() const { return one(tag_) / *this; }

    bool operator==(const Scalar& o) const { return tag_ == o.tag_ && v_ == o.v_; }
    bool operator!=(const Scalar& o) const { return !(*this == o); }
    // Total order for deterministic containers; field tags compare first.
    bool operator<(const Scalar& o) const;

    std::string str() const;       // "5/6", "-7/2", "3 mod 5"
    std::string coeff_str() const; // bare value, for use inside expressions

    // Parses "n", "n/d" (any field; reduced mod p over F_p).
    static Scalar parse(const FieldTag& tag, const std::string& text);

private:
    void check_same_field(const Scalar& o) const;

    FieldTag tag_;
    mpq_class v_;
};

// Square-class membership with explicit root: over Q the value must be a
// ratio of perfect squares, over F_p the root is found by exhaustive search.
std::optional<Scalar> square_root(const Scalar& a);
inline bool is_square(const Scalar& a) { return square_root(a).has_value(); }

// Cube-class membership: alpha with alpha^3 = a, or nothing.
std::optional<Scalar> cube_root(const Scalar& a);

// Finds alpha in F^* with a = alpha^3 * c and b = alpha^2 * d (c != 0 required).
std::optional<Scalar> solve_scaling(const Scalar& a, const Scalar& b,
                                    const Scalar& c, const Scalar& d);

} // namespace envelkit

#endif
