#ifndef MACQK_RATFUN_HPP
#define MACQK_RATFUN_HPP

/// @file ratfun.hpp
/// @brief The fraction field Q(q,t) in a canonical reduced form, plus the
/// q-integer / q-binomial / q-Pochhammer primitives.
///
/// Canonical form: num and den have integer coefficients, gcd(num, den) = 1,
/// the integer contents of num and den are coprime, and den's leading
/// coefficient in t has its lowest-order nonzero q-coefficient positive.
/// Equal values therefore have equal components and equal strings.

#include "macqk/bipoly.hpp"

#include <string>

namespace macqk {

class RationalFunction {
public:
    RationalFunction() : num_(), den_(1) {}
    RationalFunction(long c) : num_(c), den_(1) { reduce_(); }
    explicit RationalFunction(const BigRational& c) : num_(c), den_(1) { reduce_(); }
    RationalFunction(const BiPoly& p) : num_(p), den_(1) { reduce_(); }
    RationalFunction(BiPoly num, BiPoly den);

    static RationalFunction q() { return RationalFunction(BiPoly::q_var()); }
    static RationalFunction t() { return RationalFunction(BiPoly::t_var()); }

    const BiPoly& numerator() const { return num_; }
    const BiPoly& denominator() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const { return den_.is_constant(); }
    /// The value as a BiPoly; throws std::domain_error unless is_polynomial().
    BiPoly polynomial() const;

    RationalFunction operator-() const;
    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
    RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
    RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
    RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
    RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }

    RationalFunction inverse() const;
    RationalFunction pow(int e) const;  // negative e inverts first

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }

    /// t := q^k with k >= 1; throws std::domain_error when the denominator
    /// vanishes identically under the substitution.
    RationalFunction specialize_t(int k) const;
    RationalFunction swap_qt() const;
    BigRational evaluate(const BigRational& qv, const BigRational& tv) const;

    /// "num" when den = 1, otherwise "num / den", both in canonical term order.
    std::string to_string() const;
    static RationalFunction parse(const std::string& s);

private:
    struct coprime_tag {};
    RationalFunction(coprime_tag, BiPoly num, BiPoly den);
    static RationalFunction add_reduced_(const RationalFunction& a, const RationalFunction& b, bool negate);
    void normalize_coprime_();  // scalar split + sign rule; assumes gcd(num,den)=1
    void reduce_();

    BiPoly num_, den_;
};

RationalFunction rf_add(const RationalFunction& a, const RationalFunction& b);
RationalFunction rf_mul(const RationalFunction& a, const RationalFunction& b);
/// Throws std::domain_error when b = 0.
RationalFunction rf_div(const RationalFunction& a, const RationalFunction& b);

/// Univariate polynomial in q; constructed from n it is 1 + q + ... + q^{n-1}.
struct QInteger {
    BiPoly value;
    QInteger() = default;
    explicit QInteger(long n);
    explicit QInteger(BiPoly v);
};

/// Gaussian binomial: prod_{i=0}^{p-1}(1-q^{n-i}) / prod_{i=1}^{p}(1-q^i);
/// zero when p > n or p < 0.
QInteger q_binomial(long n, long p);

/// Finite product prod_{i=0}^{m-1}(1 - a q^i); equals 1 when m = 0.
RationalFunction q_pochhammer(const RationalFunction& a, long m);

}  // namespace macqk

#endif
