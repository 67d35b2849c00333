#ifndef MACQK_LAURENT_HPP
#define MACQK_LAURENT_HPP

/// @file laurent.hpp
/// @brief Sparse Laurent polynomials in x_1..x_n with coefficients in Q(q,t),
/// plus the alternant/complete-function helpers built on them.

#include "macqk/ratfun.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace macqk {

class LaurentPoly {
public:
    using Exps = std::vector<int>;

    explicit LaurentPoly(int nvars = 0) : nvars_(nvars) {}
    static LaurentPoly constant(int nvars, const RationalFunction& c);
    static LaurentPoly monomial(Exps exps, const RationalFunction& c);
    /// x_i, 1-based.
    static LaurentPoly variable(int nvars, int i);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<Exps, RationalFunction>& terms() const { return terms_; }
    RationalFunction coefficient(const Exps& e) const;
    /// Coefficient of the zero exponent vector.
    RationalFunction constant_term() const { return coefficient(Exps(static_cast<std::size_t>(nvars_), 0)); }

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    LaurentPoly& operator*=(const LaurentPoly& o) { *this = *this * o; return *this; }
    LaurentPoly scaled(const RationalFunction& c) const;
    LaurentPoly pow(unsigned e) const;

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

    /// x_i -> x_i^{-1} for every variable.
    LaurentPoly substitute_inverse() const;
    /// x_i -> c_i * x_i (c_i must be nonzero when negative powers occur).
    LaurentPoly scale_vars(const std::vector<RationalFunction>& c) const;
    /// x_i -> x_{perm[i]} with perm a 0-based permutation of 0..n-1.
    LaurentPoly permute(const std::vector<int>& perm) const;
    /// Re-embeds into new_nvars variables, x_i -> x_{i+offset}.
    LaurentPoly embed(int new_nvars, int offset) const;
    /// Keeps terms whose exponent sum over vars [first, first+count) is <= maxdeg.
    LaurentPoly truncate_partial_degree(int first, int count, int maxdeg) const;
    /// Multiplies by (x_1...x_n)^s.
    LaurentPoly shift_all(int s) const;

    int min_exponent() const;  // over all terms and variables; 0 for the zero poly
    int total_degree() const;  // max exponent sum; -1 for the zero poly

    /// Exact division by (x_i - x_j), 1-based indices; throws std::domain_error
    /// when the division leaves a remainder.
    LaurentPoly divide_exact_linear(int i, int j) const;

    std::string to_string() const;

private:
    int nvars_;
    std::map<Exps, RationalFunction> terms_;  // lex on exponent vectors
    void add_term_(const Exps& e, const RationalFunction& c);
};

/// The ratio det(x_i^{v_j + n - j}) / prod_{i<j}(x_i - x_j) for v in Z^n
/// (n = v.size()): a symmetric Laurent polynomial, zero when the alternant
/// collapses.
LaurentPoly s_tilde(const std::vector<int>& v);

/// One letter of a weighted alphabet: the variable index (1-based) and the
/// scalar multiplying it.
struct Letter {
    int var;
    RationalFunction coeff;
};

/// Complete homogeneous functions h_0..h_maxdeg of the alphabet
/// { coeff * x_var : letters }, computed by letter-by-letter convolution.
std::vector<LaurentPoly> complete_functions(int nvars, int maxdeg, const std::vector<Letter>& letters);

/// det(h_{v_i - i + j})_{i,j=1..l} over a table h[0..maxdeg] with h_m = 0 for
/// m < 0; v may contain any integers (straightening comes out of the det).
LaurentPoly jt_det(const std::vector<int>& v, const std::vector<LaurentPoly>& h);

}  // namespace macqk

#endif
