#include "macqk/ratfun.hpp"

#include <stdexcept>
#include <vector>

namespace macqk {

RationalFunction::RationalFunction(BiPoly num, BiPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("RationalFunction: zero denominator");
    reduce_();
}

RationalFunction::RationalFunction(coprime_tag, BiPoly num, BiPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
    normalize_coprime_();
}

void RationalFunction::normalize_coprime_() {
    if (num_.is_zero()) {
        den_ = BiPoly(1);
        return;
    }
    BigRational sn, sd;
    num_ = make_integer_primitive(num_, &sn);
    den_ = make_integer_primitive(den_, &sd);
    // f = (sd/sn) * num/den with both parts integer-primitive.
    const BigRational s = sd / sn;
    num_ = num_.scaled(BigRational(s.numerator()));
    den_ = den_.scaled(BigRational(s.denominator()));
    const BiPoly lead = den_.lc_t();
    if (lead.terms().begin()->second.sign() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

void RationalFunction::reduce_() {
    if (num_.is_zero()) {
        den_ = BiPoly(1);
        return;
    }
    if (!num_.is_constant() && !den_.is_constant()) {
        BigRational sn, sd;
        BiPoly n = make_integer_primitive(num_, &sn);  // n = sn * num
        BiPoly d = make_integer_primitive(den_, &sd);
        const BiPoly g = bipoly_gcd(n, d);
        if (!g.is_one()) {
            n = bipoly_divexact(n, g);
            d = bipoly_divexact(d, g);
        }
        num_ = n.scaled(BigRational(1) / sn);  // keep the represented value fixed
        den_ = d.scaled(BigRational(1) / sd);
    }
    normalize_coprime_();
}

BiPoly RationalFunction::polynomial() const {
    if (!den_.is_constant()) throw std::domain_error("RationalFunction: not a polynomial");
    const BigRational d = den_.constant_value();
    return d.is_one() ? num_ : num_.scaled(BigRational(1) / d);
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r(*this);
    r.num_ = -r.num_;
    return r;
}

// Fraction addition with the denominators' gcd split off first. Both inputs
// are stored coprime, so the result is coprime by the usual prime-divisor
// argument and only the two small gcds are ever computed.
RationalFunction RationalFunction::add_reduced_(const RationalFunction& a, const RationalFunction& b, bool negate) {
    const BiPoly& n1 = a.num_;
    const BiPoly& d1 = a.den_;
    const BiPoly n2 = negate ? -b.num_ : b.num_;
    const BiPoly& d2 = b.den_;
    if (n1.is_zero()) return RationalFunction(coprime_tag{}, n2, d2);
    if (n2.is_zero()) return a;
    if (d1.is_constant() && d2.is_constant())
        return RationalFunction(coprime_tag{}, n1 * d2 + n2 * d1, d1 * d2);
    if (d1 == d2) {
        BiPoly t = n1 + n2;
        if (t.is_zero()) return RationalFunction();
        const BiPoly g2 = bipoly_gcd(t, d1);
        if (!g2.is_one())
            return RationalFunction(coprime_tag{}, bipoly_divexact(t, g2), bipoly_divexact(d1, g2));
        return RationalFunction(coprime_tag{}, std::move(t), d1);
    }
    const BiPoly g = d1.is_constant() || d2.is_constant() ? BiPoly(1) : bipoly_gcd(d1, d2);
    if (g.is_one()) return RationalFunction(coprime_tag{}, n1 * d2 + n2 * d1, d1 * d2);
    const BiPoly d1r = bipoly_divexact(d1, g);
    const BiPoly d2r = bipoly_divexact(d2, g);
    BiPoly t = n1 * d2r + n2 * d1r;
    if (t.is_zero()) return RationalFunction();
    const BiPoly g2 = bipoly_gcd(t, g);
    if (g2.is_one()) return RationalFunction(coprime_tag{}, std::move(t), d1r * d2);
    return RationalFunction(coprime_tag{}, bipoly_divexact(t, g2), d1r * bipoly_divexact(d2, g2));
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction::add_reduced_(a, b, false);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction::add_reduced_(a, b, true);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    // Cross-cancellation keeps the product's gcd trivial.
    BiPoly an = a.num_, ad = a.den_, bn = b.num_, bd = b.den_;
    if (!an.is_constant() && !bd.is_constant()) {
        const BiPoly g = bipoly_gcd(an, bd);
        if (!g.is_one()) {
            an = bipoly_divexact(an, g);
            bd = bipoly_divexact(bd, g);
        }
    }
    if (!bn.is_constant() && !ad.is_constant()) {
        const BiPoly g = bipoly_gcd(bn, ad);
        if (!g.is_one()) {
            bn = bipoly_divexact(bn, g);
            ad = bipoly_divexact(ad, g);
        }
    }
    // Both cross-pairs are now coprime and each factor stays coprime to its
    // own mate, so the products need no further reduction.
    return RationalFunction(RationalFunction::coprime_tag{}, an * bn, ad * bd);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) throw std::domain_error("rf_div: division by zero");
    return a * b.inverse();
}

RationalFunction RationalFunction::inverse() const {
    if (is_zero()) throw std::domain_error("RationalFunction: inverse of zero");
    return RationalFunction(coprime_tag{}, den_, num_);
}

RationalFunction RationalFunction::pow(int e) const {
    if (e < 0) return inverse().pow(-e);
    // Components stay coprime under powers, so no gcd pass is needed.
    return RationalFunction(coprime_tag{}, num_.pow(static_cast<unsigned>(e)),
                            den_.pow(static_cast<unsigned>(e)));
}

RationalFunction RationalFunction::specialize_t(int k) const {
    if (k < 1) throw std::domain_error("specialize_t: k must be >= 1");
    const BiPoly d = den_.specialize_t(k);
    if (d.is_zero()) throw std::domain_error("specialize_t: denominator vanishes at t=q^k");
    return RationalFunction(num_.specialize_t(k), d);
}

RationalFunction RationalFunction::swap_qt() const {
    RationalFunction r(coprime_tag{}, num_.swap_qt(), den_.swap_qt());
    return r;
}

BigRational RationalFunction::evaluate(const BigRational& qv, const BigRational& tv) const {
    const BigRational d = den_.evaluate(qv, tv);
    if (d.is_zero()) throw std::domain_error("RationalFunction: evaluation hits a pole");
    return num_.evaluate(qv, tv) / d;
}

std::string RationalFunction::to_string() const {
    if (den_.is_one()) return num_.to_string();
    return num_.to_string() + " / " + den_.to_string();
}

RationalFunction RationalFunction::parse(const std::string& s) {
    const std::size_t sep = s.find(" / ");
    if (sep == std::string::npos) return RationalFunction(BiPoly::parse(s));
    return RationalFunction(BiPoly::parse(s.substr(0, sep)), BiPoly::parse(s.substr(sep + 3)));
}

RationalFunction rf_add(const RationalFunction& a, const RationalFunction& b) { return a + b; }
RationalFunction rf_mul(const RationalFunction& a, const RationalFunction& b) { return a * b; }
RationalFunction rf_div(const RationalFunction& a, const RationalFunction& b) { return a / b; }

QInteger::QInteger(long n) {
    if (n < 0) throw std::domain_error("QInteger: n must be >= 0");
    for (long i = 0; i < n; ++i) value += BiPoly::q_pow(static_cast<int>(i));
}

QInteger::QInteger(BiPoly v) : value(std::move(v)) {
    if (value.deg_t() > 0) throw std::domain_error("QInteger: value must be free of t");
}

QInteger q_binomial(long n, long p) {
    if (p < 0 || n < 0 || p > n) return QInteger(BiPoly());
    // q-Pascal: [m,j] = [m-1,j-1] + q^j [m-1,j]
    std::vector<BiPoly> row(static_cast<std::size_t>(p) + 1);
    row[0] = BiPoly(1);
    for (long m = 1; m <= n; ++m)
        for (long j = std::min(m, p); j >= 1; --j)
            row[static_cast<std::size_t>(j)] =
                row[static_cast<std::size_t>(j - 1)] +
                BiPoly::q_pow(static_cast<int>(j)) * row[static_cast<std::size_t>(j)];
    return QInteger(row[static_cast<std::size_t>(p)]);
}

RationalFunction q_pochhammer(const RationalFunction& a, long m) {
    RationalFunction r(1);
    for (long i = 0; i < m; ++i)
        r *= RationalFunction(1) - a * RationalFunction(BiPoly::q_pow(static_cast<int>(i)));
    return r;
}

}  // namespace macqk
