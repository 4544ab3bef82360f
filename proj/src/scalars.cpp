#include "envelkit/scalars.hpp"

#include <sstream>

namespace envelkit {

namespace {

bool is_prime(unsigned long p) {
    if (p < 2) return false;
    for (unsigned long q = 2; q * q <= p; ++q)
        if (p % q == 0) return false;
    return true;
}

// value mod p mapped into [0, p), for rationals with denominator prime to p
mpz_class mod_reduce(const mpq_class& v, unsigned long p) {
    mpz_class pz(static_cast<long>(p));
    mpz_class num = v.get_num() % pz;
    if (num < 0) num += pz;
    mpz_class den = v.get_den() % pz;
    if (den == 0)
        throw PreconditionError("DivisionByZero: denominator divisible by " + std::to_string(p));
    // modular inverse of den via extended euclid
    mpz_class inv;
    if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), pz.get_mpz_t()) == 0)
        throw PreconditionError("DivisionByZero: no inverse mod " + std::to_string(p));
    return (num * inv) % pz;
}

} // namespace

FieldTag FieldTag::prime_field(unsigned long p) {
    if (!is_prime(p))
        throw PreconditionError("prime field modulus must be prime, got " + std::to_string(p));
    return FieldTag(p);
}

std::string FieldTag::str() const {
    return is_rationals() ? "Q" : "F" + std::to_string(p_);
}

FieldTag FieldTag::parse(const std::string& text) {
    if (text == "Q") return rationals();
    if (text.size() >= 2 && text[0] == 'F') {
        try {
            unsigned long p = std::stoul(text.substr(1));
            return prime_field(p);
        } catch (const PreconditionError&) {
            throw;
        } catch (...) {
            throw ParseError("bad field tag: " + text);
        }
    }
    throw ParseError("bad field tag: " + text);
}

Scalar::Scalar(const FieldTag& tag, const mpq_class& v) : tag_(tag), v_(v) {
    v_.canonicalize();
    if (!tag_.is_rationals()) v_ = mpq_class(mod_reduce(v_, tag_.characteristic()));
}

void Scalar::check_same_field(const Scalar& o) const {
    if (tag_ != o.tag_)
        throw PreconditionError("MixedFields: " + tag_.str() + " vs " + o.tag_.str());
}

Scalar Scalar::operator-() const { return Scalar(tag_, mpq_class(-v_)); }

Scalar Scalar::operator+(const Scalar& o) const {
    check_same_field(o);
    return Scalar(tag_, mpq_class(v_ + o.v_));
}

Scalar Scalar::operator-(const Scalar& o) const {
    check_same_field(o);
    return Scalar(tag_, mpq_class(v_ - o.v_));
}

Scalar Scalar::operator*(const Scalar& o) const {
    check_same_field(o);
    return Scalar(tag_, mpq_class(v_ * o.v_));
}

Scalar Scalar::operator/(const Scalar& o) const {
    check_same_field(o);
    if (o.is_zero()) throw PreconditionError("DivisionByZero");
    if (tag_.is_rationals()) return Scalar(tag_, mpq_class(v_ / o.v_));
    mpz_class pz(static_cast<long>(tag_.characteristic()));
    mpz_class inv;
    mpz_class den = o.v_.get_num();
    mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), pz.get_mpz_t());
    return Scalar(tag_, mpq_class(v_.get_num() * inv));
}

bool Scalar::operator<(const Scalar& o) const {
    if (tag_.characteristic() != o.tag_.characteristic())
        return tag_.characteristic() < o.tag_.characteristic();
    return v_ < o.v_;
}

std::string Scalar::str() const {
    if (tag_.is_rationals()) return v_.get_str();
    return v_.get_num().get_str() + " mod " + std::to_string(tag_.characteristic());
}

std::string Scalar::coeff_str() const {
    return tag_.is_rationals() ? v_.get_str() : v_.get_num().get_str();
}

Scalar Scalar::parse(const FieldTag& tag, const std::string& text) {
    mpq_class v;
    if (text.empty() || v.set_str(text, 10) != 0)
        throw ParseError("bad scalar literal: '" + text + "'");
    if (v.get_den() == 0) throw ParseError("zero denominator in '" + text + "'");
    v.canonicalize();
    return Scalar(tag, v);
}

std::optional<Scalar> square_root(const Scalar& a) {
    const FieldTag& tag = a.field();
    if (tag.is_rationals()) {
        if (sgn(a.value()) < 0) return std::nullopt;
        mpz_class num = a.value().get_num(), den = a.value().get_den();
        if (mpz_perfect_square_p(num.get_mpz_t()) == 0) return std::nullopt;
        if (mpz_perfect_square_p(den.get_mpz_t()) == 0) return std::nullopt;
        mpz_class rn, rd;
        mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
        mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
        return Scalar(tag, mpq_class(rn, rd));
    }
    unsigned long p = tag.characteristic();
    for (unsigned long r = 0; r < p; ++r) {
        Scalar cand(tag, static_cast<long>(r));
        if (cand * cand == a) return cand;
    }
    return std::nullopt;
}

std::optional<Scalar> cube_root(const Scalar& a) {
    const FieldTag& tag = a.field();
    if (tag.is_rationals()) {
        mpz_class num = a.value().get_num(), den = a.value().get_den();
        mpz_class rn, rd;
        // mpz_root returns nonzero iff the root is exact; handles negatives for odd n
        if (mpz_root(rn.get_mpz_t(), num.get_mpz_t(), 3) == 0) return std::nullopt;
        if (mpz_root(rd.get_mpz_t(), den.get_mpz_t(), 3) == 0) return std::nullopt;
        return Scalar(tag, mpq_class(rn, rd));
    }
    unsigned long p = tag.characteristic();
    for (unsigned long r = 0; r < p; ++r) {
        Scalar cand(tag, static_cast<long>(r));
        if (cand * cand * cand == a) return cand;
    }
    return std::nullopt;
}

std::optional<Scalar> solve_scaling(const Scalar& a, const Scalar& b,
                                    const Scalar& c, const Scalar& d) {
    if (c.is_zero()) throw PreconditionError("solve_scaling requires c != 0");
    if (a.is_zero()) return std::nullopt; // alpha^3 c = 0 forces alpha = 0
    if (b.is_zero() != d.is_zero()) return std::nullopt;
    if (b.is_zero()) {
        // only a = alpha^3 c remains
        auto alpha = cube_root(a / c);
        if (alpha && !alpha->is_zero()) return alpha;
        return std::nullopt;
    }
    Scalar alpha = (a / c) * (d / b); // alpha^3 / alpha^2
    if (alpha.is_zero()) return std::nullopt;
    if (alpha * alpha * alpha * c == a && alpha * alpha * d == b) return alpha;
    return std::nullopt;
}

} // namespace envelkit
