#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "strataforge/errors.hpp"

namespace strataforge {

// Exact scalar: arbitrary-precision rational, always kept normalized.
// Elements of F_p are stored as their canonical representative in [0, p).
using Scalar = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// A coefficient field: F_p for a prime p, or the rationals.
class Field {
public:
    enum class Kind { Prime, Rationals };

    static Field prime(long long p);
    static Field rationals() { return Field(Kind::Rationals, 0); }

    Kind kind() const { return kind_; }
    bool is_prime_field() const { return kind_ == Kind::Prime; }
    long long characteristic() const { return kind_ == Kind::Prime ? p_ : 0; }

    bool operator==(const Field& o) const { return kind_ == o.kind_ && p_ == o.p_; }
    bool operator!=(const Field& o) const { return !(*this == o); }

    // Canonical representative (reduces mod p for prime fields).
    Scalar reduce(const Scalar& x) const;

    Scalar add(const Scalar& a, const Scalar& b) const { return reduce(a + b); }
    Scalar sub(const Scalar& a, const Scalar& b) const { return reduce(a - b); }
    Scalar mul(const Scalar& a, const Scalar& b) const { return reduce(a * b); }
    Scalar neg(const Scalar& a) const { return reduce(-a); }
    Scalar inv(const Scalar& a) const;
    Scalar div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }

    bool is_zero(const Scalar& a) const { return reduce(a) == 0; }

    Scalar parse(const std::string& s) const;
    std::string to_string(const Scalar& x) const;
    std::string describe() const;

private:
    Field(Kind k, long long p) : kind_(k), p_(p) {}
    Kind kind_;
    long long p_;
};

}  // namespace strataforge
