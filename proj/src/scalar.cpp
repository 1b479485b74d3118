#include "homlie/scalar.hpp"

namespace homlie {

namespace {

bool is_prime_i64(std::int64_t p) {
    if (p < 2) return false;
    if (p % 2 == 0) return p == 2;
    for (std::int64_t d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

std::int64_t mod_reduce(std::int64_t v, std::int64_t p) {
    std::int64_t r = v % p;
    return r < 0 ? r + p : r;
}

// Extended Euclid; p prime, 0 < a < p.
std::int64_t mod_inverse(std::int64_t a, std::int64_t p) {
    std::int64_t t = 0, newt = 1, r = p, newr = a;
    while (newr != 0) {
        std::int64_t q = r / newr;
        std::int64_t tmp = t - q * newt;
        t = newt;
        newt = tmp;
        tmp = r - q * newr;
        r = newr;
        newr = tmp;
    }
    return mod_reduce(t, p);
}

} // namespace

Field Field::prime(std::int64_t p) {
    if (p > (std::int64_t(1) << 31))
        throw domain_error("prime field characteristic exceeds 2^31: " + std::to_string(p));
    if (!is_prime_i64(p))
        throw domain_error("not a prime: " + std::to_string(p));
    return Field(Kind::prime, p);
}

std::string Field::str() const {
    return is_rational() ? "Q" : "Fp:" + std::to_string(p_);
}

void check_same_field(const Scalar& a, const Scalar& b) {
    if (a.field_ != b.field_)
        throw domain_error("mixed-field arithmetic: " + a.field_.str() + " vs " + b.field_.str());
}

Scalar Scalar::from_int(const Field& f, long v) {
    Scalar s;
    s.field_ = f;
    if (f.is_rational())
        s.q_ = mpq_class(v);
    else
        s.r_ = mod_reduce(v, f.characteristic());
    return s;
}

Scalar Scalar::rational(long num, long den) {
    if (den == 0) throw domain_error("zero denominator in rational literal");
    Scalar s;
    s.field_ = Field::rationals();
    s.q_ = mpq_class(num, den);
    s.q_.canonicalize();
    return s;
}

Scalar Scalar::rational(const mpq_class& q) {
    Scalar s;
    s.field_ = Field::rationals();
    s.q_ = q;
    s.q_.canonicalize();
    return s;
}

Scalar Scalar::residue(const Field& f, std::int64_t v) {
    if (f.is_rational()) throw domain_error("residue literal requires a prime field");
    Scalar s;
    s.field_ = f;
    s.r_ = mod_reduce(v, f.characteristic());
    return s;
}

bool Scalar::is_zero() const {
    return field_.is_rational() ? q_ == 0 : r_ == 0;
}

bool Scalar::is_one() const {
    return field_.is_rational() ? q_ == 1 : r_ == 1;
}

Scalar Scalar::operator-() const {
    Scalar s = *this;
    if (field_.is_rational())
        s.q_ = -q_;
    else
        s.r_ = r_ == 0 ? 0 : field_.characteristic() - r_;
    return s;
}

Scalar Scalar::operator+(const Scalar& o) const {
    check_same_field(*this, o);
    Scalar s = *this;
    if (field_.is_rational())
        s.q_ = q_ + o.q_;
    else
        s.r_ = mod_reduce(r_ + o.r_, field_.characteristic());
    return s;
}

Scalar Scalar::operator-(const Scalar& o) const {
    check_same_field(*this, o);
    Scalar s = *this;
    if (field_.is_rational())
        s.q_ = q_ - o.q_;
    else
        s.r_ = mod_reduce(r_ - o.r_, field_.characteristic());
    return s;
}

Scalar Scalar::operator*(const Scalar& o) const {
    check_same_field(*this, o);
    Scalar s = *this;
    if (field_.is_rational())
        s.q_ = q_ * o.q_;
    else
        s.r_ = mod_reduce(r_ * o.r_, field_.characteristic()); // p <= 2^31 keeps this in range
    return s;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw domain_error("inverse of zero");
    Scalar s = *this;
    if (field_.is_rational())
        s.q_ = 1 / q_;
    else
        s.r_ = mod_inverse(r_, field_.characteristic());
    return s;
}

Scalar Scalar::operator/(const Scalar& o) const {
    check_same_field(*this, o);
    return *this * o.inverse();
}

Scalar Scalar::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Scalar acc = Scalar::one(field_);
    Scalar base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

bool Scalar::operator==(const Scalar& o) const {
    if (field_ != o.field_) return false;
    return field_.is_rational() ? q_ == o.q_ : r_ == o.r_;
}

std::string Scalar::str() const {
    if (field_.is_rational()) return q_.get_str();
    return std::to_string(r_);
}

const mpq_class& Scalar::rat() const {
    if (!field_.is_rational()) throw domain_error("rat() on a prime-field scalar");
    return q_;
}

} // namespace homlie
