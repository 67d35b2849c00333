#ifndef MACQK_BIPOLY_HPP
#define MACQK_BIPOLY_HPP

/// @file bipoly.hpp
/// @brief Sparse exact polynomials in the two parameters q and t.
///
/// Terms are keyed by (deg_t, deg_q) and always iterated in that order, so
/// every serialization of equal polynomials is byte-identical.

#include "macqk/rational.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace macqk {

class BiPoly {
public:
    using Key = std::pair<int, int>;  // (deg_t, deg_q)

    BiPoly() = default;
    BiPoly(long c) { if (c != 0) terms_[{0, 0}] = BigRational(c); }
    explicit BiPoly(const BigRational& c) { if (!c.is_zero()) terms_[{0, 0}] = c; }

    static BiPoly q_var() { return monomial(1, 0, BigRational(1)); }
    static BiPoly t_var() { return monomial(0, 1, BigRational(1)); }
    static BiPoly q_pow(int e) { return monomial(e, 0, BigRational(1)); }
    static BiPoly t_pow(int e) { return monomial(0, e, BigRational(1)); }

    /// x = coeff * q^dq * t^dt
    static BiPoly monomial(int dq, int dt, const BigRational& coeff) {
        BiPoly p;
        if (!coeff.is_zero()) p.terms_[{dt, dq}] = coeff;
        return p;
    }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Key{0, 0}); }
    bool is_one() const { return is_constant() && constant_value().is_one(); }
    BigRational constant_value() const;

    /// -1 for the zero polynomial.
    int deg_q() const;
    int deg_t() const;
    bool is_q_polynomial() const { return deg_t() <= 0; }

    std::size_t term_count() const { return terms_.size(); }
    const std::map<Key, BigRational>& terms() const { return terms_; }
    BigRational coefficient(int dq, int dt) const;

    BiPoly operator-() const;
    BiPoly& operator+=(const BiPoly& o);
    BiPoly& operator-=(const BiPoly& o);
    friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
    friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
    BiPoly& operator*=(const BiPoly& o) { *this = *this * o; return *this; }
    BiPoly scaled(const BigRational& c) const;
    BiPoly pow(unsigned e) const;

    friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const BiPoly& a, const BiPoly& b) { return !(a == b); }
    friend bool operator<(const BiPoly& a, const BiPoly& b) { return a.terms_ < b.terms_; }

    /// t := q^k (k >= 0; k = 0 sends t to 1).
    BiPoly specialize_t(int k) const;
    /// Exchanges the roles of q and t.
    BiPoly swap_qt() const;
    BigRational evaluate(const BigRational& qv, const BigRational& tv) const;

    /// Leading coefficient as a polynomial in t: the q-polynomial on t^{deg_t}.
    BiPoly lc_t() const;
    /// Coefficient of t^j as a q-polynomial.
    BiPoly t_coefficient(int j) const;

    std::string to_string() const;
    static BiPoly parse(const std::string& s);

private:
    std::map<Key, BigRational> terms_;
};

/// gcd of two univariate q-polynomials (deg_t == 0), integer-primitive with
/// positive leading coefficient. gcd(0,0) = 0.
BiPoly qpoly_gcd(const BiPoly& a, const BiPoly& b);

/// Full bivariate gcd over Q[q,t], integer-primitive, sign-normalized so the
/// lowest (deg_t, deg_q) coefficient is positive.
BiPoly bipoly_gcd(const BiPoly& a, const BiPoly& b);

/// Exact division; throws std::domain_error when b does not divide a.
BiPoly bipoly_divexact(const BiPoly& a, const BiPoly& b);

/// Rescales to integer coefficients with content 1; returns the applied factor
/// s such that result = s * p (s > 0).
BiPoly make_integer_primitive(const BiPoly& p, BigRational* factor_out = nullptr);

/// gcd of all coefficients of t^j, as a q-polynomial (integer-primitive).
BiPoly content_in_t(const BiPoly& p);

}  // namespace macqk

#endif
