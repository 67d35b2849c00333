#ifndef MACQK_OPERATORS_HPP
#define MACQK_OPERATORS_HPP

/// @file operators.hpp
/// @brief The constant-term toolbox at t = q^k: the truncated weight Delta,
/// the torus scalar product, the substitution x^p -> h_p(Y) with the H
/// family built on it, the part-shift operators Omega_S / A_m, the clothed
/// products, the alphabet-doubling symmetrizer pi_tq with its divided-
/// difference oracle, the eigenoperator M, and the verification entry points
/// for every identity those objects satisfy.

#include "macqk/macdonald.hpp"
#include "macqk/report.hpp"
#include "macqk/symfunc.hpp"

namespace macqk {

/// Reading of the output alphabet of H_poly: plain Y, the rescaled alphabet
/// (1 - t)/(1 - q) Y, or the sign-twisted -Y-bar.
enum class AlphabetTransform { identity, tq_scale, negate_bar };

/// Eigenvalue in factored q-binomial form together with its reduced value.
struct BetaValue {
    /// (top, bottom) per Gaussian binomial factor, outermost row first.
    std::vector<std::pair<long, long>> factors;
    /// Product of the factors, reduced.
    RationalFunction value;
    /// "[1,1]_q · [3,1]_q · [7,1]_q" in factor order; "1" for no factors.
    std::string factors_string() const;
};

/// Thrown by operator_M when the final part shift meets a support partition
/// with a part smaller than the shift: the input lay outside the domain
/// where the operator closes on polynomials.
struct StraighteningFailure : public std::domain_error {
    Partition support;
    int shift;
    StraighteningFailure(Partition s, int m)
        : std::domain_error("part shift by " + std::to_string(m) + " does not straighten on " + s.to_string()),
          support(std::move(s)),
          shift(m) {}
};

/// prod_{i != j} prod_{l=0}^{k-1} (1 - q^l x_i / x_j), the weight whose
/// constant term realizes the torus scalar product at t = q^k. Memoized per
/// (n, k); n = 1 gives 1.
LaurentPoly delta_qk(int n, int k);

/// Coefficient of the zero exponent vector.
RationalFunction constant_term(const LaurentPoly& p);

/// The substitution prod x_i^{a_i} -> prod h_{a_i}(Y) extended linearly,
/// with h_a = 0 for a < 0 and h_0 = 1; the result lives in the complete
/// basis of the target alphabet.
SymFunc integral_sub(const LaurentPoly& p);

/// (1/n!) CT{ f(X) g(X^v) Delta(X; q, q^k) } with X^v the inverted alphabet.
RationalFunction scalar_prime(const SymFunc& f, const SymFunc& g, int n, int k);

/// <P_lambda, Q_lambda>' in closed form: (1/n!) CT{Delta} times the cell
/// product prod (1 - q^{i-1+k(n-j+1)}) / (1 - q^{i+k(n-j)}).
RationalFunction pqprime_coefficient(const Partition& lambda, int n, int k);

/// (1/n!) * image of P_lambda(X) Q_mu(X^v) Delta(X) under the substitution
/// x^p -> h_p(Y), post-composed with the chosen alphabet reading.
/// Requires length(lambda) <= n, mu contained in lambda, k >= 1.
SymFunc H_poly(const Partition& lambda, const Partition& mu, int n, int k,
               AlphabetTransform transform = AlphabetTransform::identity);

/// beta_lambda^{n,k}(q) = prod_{i=0}^{n-1} [lambda_{n-i} - 1 + k(i+1), k-1]_q.
/// Both this q-binomial form and the unreduced cell-product form are
/// computed and cross-checked; a mismatch throws std::logic_error.
/// Requires length(lambda) <= n and k >= 1.
BetaValue beta(const Partition& lambda, int n, int k);

/// (1/n!) * integral_sub(p * prod_{i != j}(1 - x_i / x_j)). Fixes every
/// symmetric polynomial and straightens alternant quotients into
/// determinants of complete functions.
SymFunc omega_S(const LaurentPoly& p);

/// omega_S(f * (x_1...x_n)^{-m}): subtracts m from every part of the Schur
/// expansion, dropping terms whose index does not straighten.
SymFunc A_m(const LaurentPoly& f_times, int m, int n);

/// expand_finite(f, n) * prod_{l=1}^{k-1} prod_{i != j} (x_i - q^l x_j);
/// the clothing factor is memoized per (n, k), and k = 1 returns the bare
/// expansion.
LaurentPoly clothed_product(const SymFunc& f, int n, int k);

/// The alphabet multiplication X -> (1 + q + ... + q^{k-1}) X on the
/// power-sum coordinates, returned in the Schur basis. Requires the Schur
/// support of f to have length <= n (where the symmetrizer reading below is
/// faithful); violations throw std::domain_error.
SymFunc pi_tq(const SymFunc& f, int n, int k);

/// Direct realization of the same map through the isobaric divided
/// difference of the maximal permutation on kn letters, followed by the
/// substitution y_{ln+i} = q^l x_i. Exponential in kn; admitted only for
/// kn <= 6 and used as a cross-check oracle. Returns the n-variable image.
LaurentPoly pi_omega_direct(const SymFunc& f, int n, int k);

/// M f = (x_1...x_n)^{(k-1)(1-n)} pi_tq(clothed_product(f, n, k)): the
/// operator whose eigenfunctions are the P_lambda(X; q, q^k). Returned in
/// the Schur basis; k = 1 is the identity.
SymFunc operator_M(const SymFunc& f, int n, int k);

/// prod_{l=1}^{k-1} prod_{i=1}^{n} (1 - q^{l + lambda_i + k(n-i+1)}), the
/// spectrum read off the affine Hecke generators at t = q^k; internally
/// asserted equal to prod_{i=1}^{k-1}(1-q^i)^n * beta_{lambda+[k^n]}.
/// Requires length(lambda) <= n and k >= 2.
RationalFunction cherednik_eigenvalue(const Partition& lambda, int n, int k);

/// A_{(k-1)(n-1)}(clothed_product(P_lambda, n, k)) ==
///   beta_lambda^{n,k} * P_lambda((1-q)/(1-q^k) X; q, q^k).
VerificationReport verify_theorem_thX(const Partition& lambda, int n, int k);

/// clothed_product(P_mu, n, k) ==
///   beta_{mu+rect} * expand(P_{mu+rect}((1-q)/(1-q^k) X)) with
///   rect = [((k-1)(n-1))^n].
VerificationReport verify_corollary_rect(const Partition& mu, int n, int k);

/// True when verify_corollary_rect(mu, n, k) belongs to the default sweep
/// grid: the check orthogonalizes at weight |mu| + n(n-1)(k-1), and the
/// default grid admits only cases that keep that weight <= 8 so a sweep
/// stays within the table-build budget. Explicit grid flags bypass this.
bool rect_in_default_sweep(const Partition& mu, int n, int k);

/// H read on the rescaled alphabet equals the skew Macdonald polynomial:
///   H_poly(lambda, mu, tq_scale) == <P_lambda, Q_lambda>' P_{lambda/mu}(Y).
VerificationReport verify_tq_substitution(const Partition& lambda, const Partition& mu, int n, int k);

/// H read on -Y-bar equals the conjugate skew element at swapped parameters:
///   H_poly(lambda, mu, negate_bar) ==
///     <P_lambda, Q_lambda>' Q_{lambda'/mu'}(Y; q^k, q);
/// for mu = [] the coefficient is additionally checked against beta.
VerificationReport verify_dual_substitution(const Partition& lambda, const Partition& mu, int n, int k);

/// CT{Delta(X; q, q^k)} == n! prod_{i=1}^{n} [ik-1, k-1]_q.
VerificationReport verify_dyson(int n, int k);

/// operator_M(P_mu) == beta_{mu+rect} * P_mu in n-variable Schur coordinates.
VerificationReport verify_eigen_equation(const Partition& mu, int n, int k);

/// The eigenvalues beta_{mu+rect}^{n,k} over all |mu| = d, length <= n are
/// pairwise distinct polynomials in q. Requires k >= 2.
VerificationReport verify_eigen_distinct(int d, int n, int k);

/// Both closed forms of the spectrum agree: the substitution product equals
/// prod(1-q^i)^n beta_{mu+[k^n]}, and the shifted-index display
/// prod_{i,j}(1 - q^{L_{n-i}+k(i+1)-j}) at L = mu+rect equals
/// prod(1-q^i)^n beta_L (the M eigenvalue). Requires k >= 2.
VerificationReport verify_cherednik(const Partition& mu, int n, int k);

/// expand_finite(pi_tq(S_lambda, n, k), n) == pi_omega_direct(S_lambda, n, k);
/// the plethystic shortcut against the divided-difference oracle, kn <= 6.
VerificationReport verify_pi_tq_oracle(const Partition& lambda, int n, int k);

}  // namespace macqk

#endif
