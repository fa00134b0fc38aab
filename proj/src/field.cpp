#include "strataforge/field.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace strataforge {

namespace {

bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace

Field Field::prime(long long p) {
    if (!is_prime(p)) throw MalformedError("field modulus " + std::to_string(p) + " is not prime");
    return Field(Kind::Prime, p);
}

Scalar Field::reduce(const Scalar& x) const {
    if (kind_ == Kind::Rationals) return x;  // cpp_rational normalizes itself
    BigInt num = numerator(x);
    BigInt den = denominator(x);
    BigInt p(p_);
    if (den != 1) {
        // Clear the denominator using its inverse mod p.
        BigInt d = den % p;
        if (d < 0) d += p;
        if (d == 0) throw MalformedError("denominator divisible by the characteristic");
        // extended Euclid for d^{-1} mod p
        BigInt a = d, b = p, x0 = 1, x1 = 0;
        while (b != 0) {
            BigInt q = a / b;
            BigInt t = a - q * b; a = b; b = t;
            t = x0 - q * x1; x0 = x1; x1 = t;
        }
        num *= x0;
    }
    BigInt r = num % p;
    if (r < 0) r += p;
    return Scalar(r);
}

Scalar Field::inv(const Scalar& a) const {
    Scalar r = reduce(a);
    if (r == 0) throw MalformedError("division by zero");
    if (kind_ == Kind::Rationals) return Scalar(1) / r;
    BigInt n = numerator(r), p(p_);
    BigInt x = n, b = p, x0 = 1, x1 = 0;
    while (b != 0) {
        BigInt q = x / b;
        BigInt t = x - q * b; x = b; b = t;
        t = x0 - q * x1; x0 = x1; x1 = t;
    }
    x0 %= p;
    if (x0 < 0) x0 += p;
    return Scalar(x0);
}

Scalar Field::parse(const std::string& s) const {
    try {
        return reduce(Scalar(s));
    } catch (const std::exception&) {
        throw MalformedError("cannot parse scalar '" + s + "'");
    }
}

std::string Field::to_string(const Scalar& x) const {
    return reduce(x).str();
}

std::string Field::describe() const {
    if (kind_ == Kind::Rationals) return "Q";
    return "F_" + std::to_string(p_);
}

}  // namespace strataforge
