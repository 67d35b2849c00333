#ifndef MACQK_SYMFUNC_HPP
#define MACQK_SYMFUNC_HPP

/// @file symfunc.hpp
/// @brief Symmetric functions over the exact coefficient field: basis-tagged
/// coefficient maps, transition matrices between the classical bases, the two
/// scalar products, plethystic alphabet rescalings, and expansion to/from
/// Laurent polynomials in finitely many variables.

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "macqk/laurent.hpp"
#include "macqk/partition.hpp"
#include "macqk/ratfun.hpp"

namespace macqk {

/// Thrown when a conversion asks for a degree beyond the configured budget;
/// callers that accept the cost lift the cap first.
struct DegreeCapExceeded : public std::domain_error {
    int degree;
    int cap;
    DegreeCapExceeded(int d, int c)
        : std::domain_error("degree " + std::to_string(d) + " exceeds the degree budget " + std::to_string(c)),
          degree(d),
          cap(c) {}
};

enum class BasisTag { Monomial, Elementary, Complete, PowerSum, Schur, MacdonaldP, MacdonaldQ };

/// Basis label. For the Macdonald bases, k = 0 means generic (q,t) and k >= 1
/// means coefficients specialized at t = q^k; the classical bases ignore k.
struct Basis {
    BasisTag tag = BasisTag::Monomial;
    int k = 0;

    Basis() = default;
    explicit Basis(BasisTag t, int kk = 0) : tag(t), k(t == BasisTag::MacdonaldP || t == BasisTag::MacdonaldQ ? kk : 0) {}

    static Basis m() { return Basis(BasisTag::Monomial); }
    static Basis e() { return Basis(BasisTag::Elementary); }
    static Basis h() { return Basis(BasisTag::Complete); }
    static Basis p() { return Basis(BasisTag::PowerSum); }
    static Basis s() { return Basis(BasisTag::Schur); }
    static Basis P(int k = 0) { return Basis(BasisTag::MacdonaldP, k); }
    static Basis Q(int k = 0) { return Basis(BasisTag::MacdonaldQ, k); }

    bool is_macdonald() const { return tag == BasisTag::MacdonaldP || tag == BasisTag::MacdonaldQ; }
    /// "Monomial", ..., "MacdonaldP"; the tag string used in JSON output.
    std::string tag_string() const;
    /// Tag string plus "[k=2]" for specialized Macdonald bases.
    std::string to_string() const;
    /// Short display symbol used by SymFunc::to_string: m e h p S P Q.
    char symbol() const;

    friend bool operator==(const Basis& a, const Basis& b) { return a.tag == b.tag && a.k == b.k; }
    friend bool operator!=(const Basis& a, const Basis& b) { return !(a == b); }
};

/// A finite coefficient-map over basis elements indexed by partitions.
/// Zero coefficients are never stored.
class SymFunc {
public:
    explicit SymFunc(Basis b = Basis::m()) : basis_(b) {}

    static SymFunc zero(Basis b) { return SymFunc(b); }
    static SymFunc one(Basis b);
    static SymFunc element(Basis b, const Partition& lambda);

    const Basis& basis() const { return basis_; }
    const std::map<Partition, RationalFunction>& terms() const { return terms_; }
    RationalFunction coefficient(const Partition& lambda) const;
    /// Accumulates; erases the entry if the sum vanishes.
    void add_term(const Partition& lambda, const RationalFunction& c);

    bool is_zero() const { return terms_.empty(); }
    /// Max part weight, -1 for the zero function.
    int degree() const;
    SymFunc homogeneous_component(int d) const;
    /// Weights present, ascending.
    std::vector<int> weights() const;

    SymFunc operator-() const;
    SymFunc& operator+=(const SymFunc& other);
    SymFunc& operator-=(const SymFunc& other);
    friend SymFunc operator+(SymFunc a, const SymFunc& b) { return a += b; }
    friend SymFunc operator-(SymFunc a, const SymFunc& b) { return a -= b; }
    SymFunc scaled(const RationalFunction& c) const;
    /// Applies `f` to every coefficient (parameter specializations etc.).
    SymFunc map_coefficients(const std::function<RationalFunction(const RationalFunction&)>& f) const;

    friend bool operator==(const SymFunc& a, const SymFunc& b) {
        return a.basis_ == b.basis_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const SymFunc& a, const SymFunc& b) { return !(a == b); }

    /// "(coeff)*S[3,2] + ..." with terms in reverse-lex partition order.
    std::string to_string() const;
    std::string to_latex() const;
    /// {"basis": tag, "terms": [{"partition": [...], "coeff": "..."}]} with
    /// terms sorted reverse-lexicographically on the partition; parseable
    /// back losslessly.
    std::string to_json_string() const;
    static SymFunc from_json_string(const std::string& text);

private:
    Basis basis_;
    std::map<Partition, RationalFunction> terms_;
};

/// Per-degree transition matrices between the classical bases and the
/// monomial basis, built on demand and shared process-wide (thread-safe; a
/// degree is built once while readers block). The Macdonald bases route
/// through rows supplied by a provider that the Macdonald module registers at
/// load time; conversion involving them without a provider is an error.
class TransitionCache {
public:
    using Matrix = std::map<Partition, std::map<Partition, RationalFunction>>;

    static TransitionCache& instance();

    /// Rows of basis elements of `b` (weight d) expanded in the monomial
    /// basis: row[lambda][mu] = coefficient of m_mu.
    const Matrix& to_monomial(const Basis& b, int degree);
    /// Rows of monomials expanded in basis `b`: row[mu][lambda].
    const Matrix& from_monomial(const Basis& b, int degree);

    struct MacdonaldProvider {
        /// P_lambda rows in the monomial basis for all lambda of weight d,
        /// generic for k = 0 and at t = q^k for k >= 1.
        std::function<Matrix(int degree, int k)> p_rows;
        /// Coefficient b_lambda with Q_lambda = b_lambda P_lambda.
        std::function<RationalFunction(const Partition&, int k)> q_scale;
    };
    void register_macdonald_provider(MacdonaldProvider provider);
    bool has_macdonald_provider() const;

    /// Degree guard consulted by conversions; exceeding it throws unless the
    /// caller lifted the cap. <= 0 disables the guard.
    void set_degree_cap(int cap);
    int degree_cap() const;

private:
    TransitionCache();
    struct Impl;
    Impl* impl_;
};

/// Change of basis. Identity when the bases match; otherwise routes through
/// the monomial basis degree by degree.
SymFunc convert(const SymFunc& f, const Basis& target);

/// Product in Sym, computed in the power-sum basis; the result carries f's
/// basis.
SymFunc multiply(const SymFunc& f, const SymFunc& g);

/// Parameterized scalar product: <p_lambda, p_mu> = delta * z_lambda *
/// prod_i (1 - q^{lambda_i}) / (1 - t^{lambda_i}).
RationalFunction scalar_qt(const SymFunc& f, const SymFunc& g);
/// Classical Hall product: <p_lambda, p_mu> = delta * z_lambda.
RationalFunction scalar_classical(const SymFunc& f, const SymFunc& g);

/// Alphabet rescaling rule, acting on the power-sum basis as
/// p_r -> c_r p_r. All five kinds are invertible.
struct ScaleRule {
    enum class Kind { Numeric, RatioQT, RatioTQ, QIntegerK, QIntegerKInv };
    Kind kind = Kind::Numeric;
    RationalFunction alpha = RationalFunction(1);
    int k = 1;

    /// c_r = a for every r (scaling the alphabet by a binomial scalar).
    static ScaleRule numeric(const RationalFunction& a);
    /// c_r = (1 - q^r) / (1 - t^r); the alphabet (1-q)/(1-t) X.
    static ScaleRule ratio_qt();
    /// c_r = (1 - t^r) / (1 - q^r).
    static ScaleRule ratio_tq();
    /// c_r = (1 - q^{kr}) / (1 - q^r); multiplication of the alphabet by the
    /// q-integer [k]_q = 1 + q + ... + q^{k-1}.
    static ScaleRule q_integer(int k);
    static ScaleRule q_integer_inverse(int k);

    RationalFunction factor(int r) const;
    ScaleRule inverse() const;
};

/// f(c X) for the alphabet rescaling c: multiplies the coefficient of
/// p_lambda by prod_i factor(lambda_i). Returns in f's basis.
SymFunc plethysm_scale(const SymFunc& f, const ScaleRule& c);

/// f(-X-bar): p_r -> (-1)^{r+1} p_r. An involution.
SymFunc alphabet_negate_bar(const SymFunc& f);

/// Evaluation in n variables x_1..x_n. Basis elements indexed by partitions
/// of length > n vanish where the finite expansion demands it.
LaurentPoly expand_finite(const SymFunc& f, int n);

/// Inverse of expand_finite on its faithful range: reads a symmetric
/// polynomial of total degree <= degree_bound <= n back into the monomial
/// basis. Throws std::domain_error if p is not symmetric or the degree bound
/// fails.
SymFunc symfunc_from_laurent(const LaurentPoly& p, int n, int degree_bound);

/// det(h_{v_i - i + j}) over the complete basis, for any integer vector v
/// (not necessarily a partition); rows with v_i - i + j < 0 contribute h of
/// negative degree = 0, h_0 = 1. Used to realize straightening identities.
SymFunc schur_via_jacobi_trudi(const std::vector<int>& v);

/// Writes a symmetric polynomial in n variables in Schur coordinates by
/// greedy leading-term peeling; throws std::domain_error if p is not
/// symmetric. Exact for any symmetric p: the result satisfies
/// expand_finite(result, n) == p with support of length <= n.
SymFunc schur_peel(const LaurentPoly& p, int n);

/// Complete-basis table h_0..h_maxdeg in n plain variables, shared and
/// memoized per n. The returned snapshot stays valid while the table grows
/// behind it.
std::shared_ptr<const std::vector<LaurentPoly>> complete_table(int n, int maxdeg);

/// Deterministic JSON form of a coefficient matrix, for the disk cache.
std::string matrix_to_json(const TransitionCache::Matrix& m);
TransitionCache::Matrix matrix_from_json(const std::string& text);

}  // namespace macqk

#endif
