#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "homlie/errors.hpp"

namespace homlie {

// Ground field tag: the rationals, or a prime field F_p with p <= 2^31.
class Field {
  public:
    enum class Kind { rationals, prime };

    static Field rationals() { return Field(Kind::rationals, 0); }
    static Field prime(std::int64_t p); // validates primality

    Kind kind() const { return kind_; }
    std::int64_t characteristic() const { return p_; }
    bool is_rational() const { return kind_ == Kind::rationals; }

    bool operator==(const Field& o) const { return kind_ == o.kind_ && p_ == o.p_; }
    bool operator!=(const Field& o) const { return !(*this == o); }

    std::string str() const;

  private:
    Field(Kind k, std::int64_t p) : kind_(k), p_(p) {}
    Kind kind_;
    std::int64_t p_; // 0 for Q
};

// Exact field element. Rational values are kept canonical (lowest terms,
// positive denominator); prime-field values are residues in [0, p).
class Scalar {
  public:
    Scalar() : field_(Field::rationals()), q_(0), r_(0) {}

    static Scalar zero(const Field& f) { return from_int(f, 0); }
    static Scalar one(const Field& f) { return from_int(f, 1); }
    static Scalar from_int(const Field& f, long v);
    static Scalar rational(long num, long den);
    static Scalar rational(const mpq_class& q);
    static Scalar residue(const Field& f, std::int64_t v); // any integer, reduced mod p

    const Field& field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;

    Scalar operator-() const;
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const; // errors on zero divisor
    Scalar inverse() const;
    Scalar pow(long e) const;

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    // Canonical literal: "p/q" or "p" over Q, decimal residue over F_p.
    std::string str() const;

    // Rational payload (only valid over Q).
    const mpq_class& rat() const;
    // Residue payload (only valid over F_p).
    std::int64_t res() const { return r_; }

  private:
    friend void check_same_field(const Scalar& a, const Scalar& b);
    Field field_;
    mpq_class q_;    // used when field is Q
    std::int64_t r_; // used when field is F_p
};

void check_same_field(const Scalar& a, const Scalar& b);

} // namespace homlie
