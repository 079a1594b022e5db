#include "apollo/exact_real.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <cctype>
#include <ostream>
#include <utility>

namespace apollo {

namespace {

using boost::multiprecision::abs;
using boost::multiprecision::gcd;

// Floor division with divisor > 0 (cpp_int's operator/ truncates toward zero).
BigInt fdiv(const BigInt& a, const BigInt& b) {
    BigInt q = a / b;
    if (a % b != 0 && a < 0) --q;
    return q;
}

int sign_of(const BigInt& n) { return n == 0 ? 0 : (n < 0 ? -1 : 1); }

// Sign of q*sqrt(d) - t, exactly (d >= 0).
int cmp_root(const BigInt& q, const BigInt& d, const BigInt& t) {
    if (q == 0 || d == 0) return -sign_of(t);
    if (q > 0 && t <= 0) return (t == 0 && q * q * d == 0) ? 0 : 1;
    if (q < 0 && t >= 0) return (t == 0 && q * q * d == 0) ? 0 : -1;
    BigInt lhs = q * q * d, rhs = t * t;
    int flip = q > 0 ? 1 : -1;
    return flip * sign_of(lhs - rhs);
}

// Largest square divisor: d = s^2 * rest with rest squarefree.
// Trial division; radicands at the API boundary are expected to be small.
std::pair<BigInt, BigInt> extract_square(BigInt d) {
    BigInt s = 1;
    for (BigInt f = 2; f * f <= d; ++f) {
        while (d % (f * f) == 0) {
            d /= f * f;
            s *= f;
        }
    }
    return {s, d};
}

} // namespace

BigInt isqrt(const BigInt& n) {
    if (n < 0) throw NonPositiveValue("isqrt of negative value");
    return boost::multiprecision::sqrt(n);
}

bool is_perfect_square(const BigInt& n) {
    if (n < 0) return false;
    BigInt s = isqrt(n);
    return s * s == n;
}

void ExactReal::canonicalize() {
    if (r_ == 0) throw DivisionByZero("zero denominator");
    if (q_ == 0) d_ = 0;
    if (r_ < 0) {
        p_ = -p_;
        q_ = -q_;
        r_ = -r_;
    }
    BigInt g = gcd(gcd(abs(p_), abs(q_)), r_);
    if (g > 1) {
        p_ /= g;
        q_ /= g;
        r_ /= g;
    }
}

ExactReal ExactReal::fraction(const BigInt& num, const BigInt& den) {
    if (den == 0) throw DivisionByZero("fraction with zero denominator");
    ExactReal x;
    x.p_ = num;
    x.q_ = 0;
    x.d_ = 0;
    x.r_ = den;
    x.canonicalize();
    return x;
}

ExactReal ExactReal::quadratic(const BigInt& p, const BigInt& q, const BigInt& d,
                               const BigInt& r) {
    if (r == 0) throw DivisionByZero("zero denominator");
    ExactReal x;
    x.p_ = p;
    x.q_ = q;
    x.d_ = 0;
    x.r_ = r;
    if (q != 0) {
        if (d <= 0) throw NonPositiveValue("radicand must be positive");
        auto [s, rest] = extract_square(d);
        if (rest == 1) {
            x.p_ += q * s; // sqrt(d) was an integer after all
            x.q_ = 0;
        } else {
            x.q_ = q * s;
            x.d_ = rest;
        }
    }
    x.canonicalize();
    return x;
}

ExactReal ExactReal::quadratic_root(const BigInt& p, const BigInt& q, const BigInt& r,
                                    int sign) {
    if (p == 0) throw DivisionByZero("leading coefficient is zero");
    if (sign != 1 && sign != -1) throw InternalInconsistency("root sign must be +-1");
    BigInt disc = q * q - 4 * p * r;
    if (disc < 0) throw NonPositiveValue("negative discriminant");
    if (disc == 0) return fraction(-q, 2 * p);
    return quadratic(-q, sign, disc, 2 * p);
}

int ExactReal::sign() const {
    if (q_ == 0) return sign_of(p_);
    return cmp_root(q_, d_, -p_);
}

BigInt ExactReal::floor() const {
    if (q_ == 0) return fdiv(p_, r_);
    // Numerator p + q*sqrt(d) lies strictly between consecutive integers.
    BigInt root = isqrt(q_ * q_ * d_);
    BigInt num_floor = q_ > 0 ? BigInt(p_ + root) : BigInt(p_ - root - 1);
    return fdiv(num_floor, r_);
}

double ExactReal::to_double() const {
    using F = boost::multiprecision::cpp_bin_float_100;
    F v(p_);
    if (q_ != 0) v += F(q_) * sqrt(F(d_));
    v /= F(r_);
    return v.convert_to<double>();
}

ExactReal ExactReal::operator-() const {
    ExactReal x = *this;
    x.p_ = -x.p_;
    x.q_ = -x.q_;
    return x;
}

namespace {
// Common radicand for a mixed operation; rationals are compatible with anything.
BigInt unify_radicand(const ExactReal& a, const ExactReal& b) {
    if (a.q() == 0) return b.d();
    if (b.q() == 0) return a.d();
    if (a.d() != b.d()) throw IncompatibleRadicand("distinct radicands");
    return a.d();
}
} // namespace

ExactReal ExactReal::operator+(const ExactReal& o) const {
    BigInt d = unify_radicand(*this, o);
    ExactReal x;
    x.p_ = p_ * o.r_ + o.p_ * r_;
    x.q_ = q_ * o.r_ + o.q_ * r_;
    x.d_ = d;
    x.r_ = r_ * o.r_;
    x.canonicalize();
    return x;
}

ExactReal ExactReal::operator-(const ExactReal& o) const { return *this + (-o); }

ExactReal ExactReal::operator*(const ExactReal& o) const {
    BigInt d = unify_radicand(*this, o);
    ExactReal x;
    x.p_ = p_ * o.p_ + q_ * o.q_ * d;
    x.q_ = p_ * o.q_ + q_ * o.p_;
    x.d_ = d;
    x.r_ = r_ * o.r_;
    x.canonicalize();
    return x;
}

ExactReal ExactReal::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero");
    // 1/x = r * (p - q*sqrt(d)) / (p^2 - q^2 d); the norm is nonzero since
    // d is squarefree (> 1) whenever q != 0.
    BigInt norm = p_ * p_ - q_ * q_ * d_;
    ExactReal x;
    x.p_ = r_ * p_;
    x.q_ = -r_ * q_;
    x.d_ = d_;
    x.r_ = norm;
    x.canonicalize();
    return x;
}

ExactReal ExactReal::operator/(const ExactReal& o) const { return *this * o.inverse(); }

int ExactReal::compare(const ExactReal& a, const ExactReal& b) {
    if (a.q_ == 0 || b.q_ == 0 || a.d_ == b.d_) return (a - b).sign();
    // Distinct quadratic fields: the values cannot be equal, so interval
    // refinement terminates. F <= x*2^bits < F + 2 exactly.
    auto scaled = [](const ExactReal& x, unsigned bits) {
        BigInt top = x.p_ << bits;
        if (x.q_ != 0) {
            BigInt root = isqrt(x.q_ * x.q_ * x.d_ << (2 * bits));
            top += x.q_ > 0 ? root : -root - 1;
        }
        return fdiv(top, x.r_);
    };
    for (unsigned bits = 128; bits <= 8192; bits *= 2) {
        BigInt fa = scaled(a, bits), fb = scaled(b, bits);
        if (fa + 2 <= fb) return -1;
        if (fb + 2 <= fa) return 1;
    }
    throw InternalInconsistency("comparison did not separate");
}

IntPoly2 ExactReal::minimal_polynomial() const {
    if (q_ == 0) throw NotQuadratic("rational has no degree-2 minimal polynomial");
    IntPoly2 poly{r_ * r_, -2 * p_ * r_, p_ * p_ - q_ * q_ * d_};
    BigInt g = gcd(gcd(poly.p, abs(poly.q)), abs(poly.r));
    poly.p /= g;
    poly.q /= g;
    poly.r /= g;
    return poly;
}

ExactReal ExactReal::conjugate() const {
    if (q_ == 0) throw NotQuadratic("conjugate of a rational");
    ExactReal x = *this;
    x.q_ = -x.q_;
    return x;
}

bool ExactReal::is_reduced() const {
    ExactReal conj = conjugate(); // throws NotQuadratic for rationals
    return *this > ExactReal(1) && conj.sign() < 0 && conj > ExactReal(-1);
}

// ---- text form ----------------------------------------------------------
//
//   INT | INT/INT | sqrt(INT) | INT (+|-) [INT*]sqrt(INT)
//   | ( <any of the above numerators> ) / INT
//
// Whitespace is free, the '*' is optional, coefficients may be signed.

namespace {

struct Lexer {
    const std::string& s;
    size_t i = 0;

    explicit Lexer(const std::string& text) : s(text) {}

    void skip() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eat(char c) {
        skip();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    bool peek_digit() {
        skip();
        return i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]));
    }
    bool peek_word(const char* w) {
        skip();
        return s.compare(i, std::char_traits<char>::length(w), w) == 0;
    }
    BigInt integer() {
        skip();
        size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == start) throw SyntaxError("expected an integer");
        if (i < s.size() && s[i] == '.')
            throw SyntaxError("decimal literals are not exact; use a fraction");
        return BigInt(s.substr(start, i - start));
    }
    void done() {
        skip();
        if (i != s.size()) throw SyntaxError("trailing input");
    }
};

struct Parts {
    BigInt integral = 0;  // accumulated rational terms
    BigInt coeff = 0;     // accumulated sqrt coefficient
    BigInt radicand = 0;  // squarefree, shared by all sqrt terms
};

// term := INT ['*'? sqrt '(' INT ')'] | sqrt '(' INT ')'
void parse_term(Lexer& lx, Parts& acc, int sgn) {
    BigInt coeff = 1;
    bool have_coeff = false;
    if (lx.peek_digit()) {
        coeff = lx.integer();
        have_coeff = true;
        bool star = lx.eat('*');
        if (!star && !lx.peek_word("sqrt")) {
            acc.integral += sgn * coeff;
            return;
        }
    }
    if (!lx.peek_word("sqrt")) throw SyntaxError("expected sqrt(...)");
    lx.i += 4;
    if (!lx.eat('(')) throw SyntaxError("expected '(' after sqrt");
    int dsgn = 1;
    if (lx.eat('-')) dsgn = -1;
    else lx.eat('+');
    BigInt d = dsgn * lx.integer();
    if (!lx.eat(')')) throw SyntaxError("expected ')' in sqrt");
    if (d <= 0) throw NonPositiveValue("radicand must be positive");
    auto [s, rest] = extract_square(d);
    if (rest == 1) {
        acc.integral += sgn * coeff * s;
        return;
    }
    if (acc.coeff != 0 && acc.radicand != rest)
        throw IncompatibleRadicand("mixed radicands in one number");
    acc.radicand = rest;
    acc.coeff += sgn * coeff * s;
    (void)have_coeff;
}

// part := [sign] term { ('+'|'-') term }
Parts parse_part(Lexer& lx) {
    Parts acc;
    int sgn = 1;
    if (lx.eat('-')) sgn = -1;
    else lx.eat('+');
    parse_term(lx, acc, sgn);
    for (;;) {
        if (lx.eat('+')) parse_term(lx, acc, 1);
        else if (lx.eat('-')) parse_term(lx, acc, -1);
        else break;
    }
    return acc;
}

} // namespace

ExactReal ExactReal::parse(const std::string& text) {
    Lexer lx(text);
    Parts acc;
    if (lx.eat('(')) {
        acc = parse_part(lx);
        if (!lx.eat(')')) throw SyntaxError("expected ')'");
    } else {
        acc = parse_part(lx);
    }
    BigInt den = 1;
    if (lx.eat('/')) den = lx.integer();
    lx.done();
    if (acc.coeff == 0) return fraction(acc.integral, den);
    return quadratic(acc.integral, acc.coeff, acc.radicand, den);
}

std::string ExactReal::format() const {
    if (q_ == 0) {
        std::string s = p_.str();
        if (r_ != 1) s += "/" + r_.str();
        return s;
    }
    std::string root = "sqrt(" + d_.str() + ")";
    BigInt qa = abs(q_);
    std::string qpart = qa == 1 ? root : qa.str() + "*" + root;
    std::string body;
    if (p_ == 0) {
        body = (q_ < 0 ? "-" : "") + qpart;
    } else {
        body = p_.str() + (q_ < 0 ? "-" : "+") + qpart;
    }
    if (r_ == 1) return body;
    return "(" + body + ")/" + r_.str();
}

std::string to_string(const ExactReal& x) { return x.format(); }

std::ostream& operator<<(std::ostream& os, const ExactReal& x) {
    return os << x.format();
}

} // namespace apollo
