#ifndef APOLLO_EXACT_REAL_HPP
#define APOLLO_EXACT_REAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <iosfwd>
#include <string>

#include "apollo/errors.hpp"

namespace apollo {

using BigInt = boost::multiprecision::cpp_int;

/// Primitive integer quadratic p*x^2 + q*x + r with p > 0 and gcd(p,q,r) = 1.
struct IntPoly2 {
    BigInt p, q, r;

    BigInt discriminant() const { return q * q - 4 * p * r; }
    bool operator==(const IntPoly2&) const = default;
};

/// A real number of the form (p + q*sqrt(d)) / r, held canonically:
///   r > 0, gcd(p, q, r) = 1, and either q = 0, d = 0 (rational)
///   or q != 0 with d squarefree and d > 1 (quadratic irrational).
/// Equality of representations is equality of values.
class ExactReal {
  public:
    ExactReal() : p_(0), q_(0), d_(0), r_(1) {}
    ExactReal(long long n) : p_(n), q_(0), d_(0), r_(1) {}
    ExactReal(const BigInt& n) : p_(n), q_(0), d_(0), r_(1) {}

    static ExactReal fraction(const BigInt& num, const BigInt& den);
    static ExactReal quadratic(const BigInt& p, const BigInt& q, const BigInt& d,
                               const BigInt& r);
    /// The root (-q + sign*sqrt(q^2 - 4pr)) / (2p) of p x^2 + q x + r.
    /// sign must be +1 or -1. Demotes to a rational when the
    /// discriminant is a perfect square.
    static ExactReal quadratic_root(const BigInt& p, const BigInt& q, const BigInt& r,
                                    int sign);

    static ExactReal parse(const std::string& text);
    std::string format() const;

    bool is_rational() const { return q_ == 0; }
    bool is_quadratic() const { return q_ != 0; }
    bool is_zero() const { return p_ == 0 && q_ == 0; }
    bool is_integer() const { return is_rational() && r_ == 1; }

    const BigInt& p() const { return p_; }
    const BigInt& q() const { return q_; }
    const BigInt& d() const { return d_; }
    const BigInt& r() const { return r_; }

    /// -1, 0 or +1, decided exactly.
    int sign() const;
    BigInt floor() const;
    double to_double() const;

    ExactReal operator-() const;
    ExactReal operator+(const ExactReal& o) const;
    ExactReal operator-(const ExactReal& o) const;
    ExactReal operator*(const ExactReal& o) const;
    ExactReal operator/(const ExactReal& o) const;
    ExactReal inverse() const;

    bool operator==(const ExactReal& o) const {
        return p_ == o.p_ && q_ == o.q_ && d_ == o.d_ && r_ == o.r_;
    }
    bool operator<(const ExactReal& o) const { return compare(*this, o) < 0; }
    bool operator>(const ExactReal& o) const { return compare(*this, o) > 0; }
    bool operator<=(const ExactReal& o) const { return compare(*this, o) <= 0; }
    bool operator>=(const ExactReal& o) const { return compare(*this, o) >= 0; }

    /// Exact three-way comparison; works across radicands.
    static int compare(const ExactReal& a, const ExactReal& b);

    IntPoly2 minimal_polynomial() const;
    ExactReal conjugate() const;
    /// Greater than 1 with Galois conjugate strictly inside (-1, 0).
    bool is_reduced() const;

  private:
    void canonicalize();
    BigInt p_, q_, d_, r_;
};

std::string to_string(const ExactReal& x);
std::ostream& operator<<(std::ostream& os, const ExactReal& x);

/// Floor of sqrt(n) for n >= 0.
BigInt isqrt(const BigInt& n);
bool is_perfect_square(const BigInt& n);

} // namespace apollo

#endif
