#ifndef MACQK_RATIONAL_HPP
#define MACQK_RATIONAL_HPP

/// @file rational.hpp
/// @brief Exact rational scalars backing all polynomial coefficients.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace macqk {

/// Arbitrary-precision rational, always stored reduced with positive denominator.
class BigRational {
public:
    BigRational() : v_(0) {}
    BigRational(long n) : v_(n) {}
    BigRational(long num, long den) {
        if (den == 0) throw std::domain_error("BigRational: zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }
    explicit BigRational(const mpq_class& v) : v_(v) { v_.canonicalize(); }
    explicit BigRational(const mpz_class& v) : v_(v) {}

    /// Parses "123", "-4/5". Throws std::invalid_argument on malformed input.
    static BigRational parse(const std::string& s) {
        mpq_class v;
        if (v.set_str(s, 10) != 0) throw std::invalid_argument("BigRational: bad literal '" + s + "'");
        v.canonicalize();
        return BigRational(v);
    }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    BigRational operator-() const { return BigRational(mpq_class(-v_)); }
    BigRational& operator+=(const BigRational& o) { v_ += o.v_; return *this; }
    BigRational& operator-=(const BigRational& o) { v_ -= o.v_; return *this; }
    BigRational& operator*=(const BigRational& o) { v_ *= o.v_; return *this; }
    BigRational& operator/=(const BigRational& o) {
        if (o.is_zero()) throw std::domain_error("BigRational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
    friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
    friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
    friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }

    friend bool operator==(const BigRational& a, const BigRational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const BigRational& a, const BigRational& b) { return a.v_ != b.v_; }
    friend bool operator<(const BigRational& a, const BigRational& b) { return a.v_ < b.v_; }

    BigRational abs() const { return BigRational(mpq_class(::abs(v_))); }

    BigRational pow(unsigned e) const {
        mpq_class r(1);
        mpq_class base = v_;
        for (unsigned i = 0; i < e; ++i) r *= base;
        return BigRational(r);
    }

    std::string to_string() const { return v_.get_str(); }

    const mpq_class& raw() const { return v_; }

private:
    mpq_class v_;
};

inline mpz_class int_gcd(const mpz_class& a, const mpz_class& b) {
    mpz_class r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline mpz_class int_lcm(const mpz_class& a, const mpz_class& b) {
    mpz_class r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

}  // namespace macqk

#endif
