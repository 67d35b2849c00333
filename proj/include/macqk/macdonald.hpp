#ifndef MACQK_MACDONALD_HPP
#define MACQK_MACDONALD_HPP

/// @file macdonald.hpp
/// @brief The two-parameter orthogonal basis P_lambda(X; q, t): construction
/// by triangular orthogonalization, the dual family Q_lambda, skew elements,
/// the two Cauchy-type kernels with their skew extensions, and the finite
/// branching rule. k >= 1 arguments mean coefficients specialized at t = q^k;
/// k = 0 means generic.

#include <utility>

#include "macqk/report.hpp"
#include "macqk/symfunc.hpp"

namespace macqk {

/// Registers the MacdonaldP/MacdonaldQ basis provider with TransitionCache.
/// Idempotent; every public function of this module also loads on demand.
void load_macdonald_module();

/// P_lambda in the monomial basis. Specializations are obtained from the
/// generic table, never by re-running the orthogonalization.
SymFunc macdonald_P(const Partition& lambda, int k = 0);

/// prod_{cells} (1 - q^arm t^{leg+1}) / (1 - q^{arm+1} t^{leg}); the scalar
/// with Q_lambda = b_lambda P_lambda and <P_lambda, P_lambda> = 1 / b_lambda.
RationalFunction b_lambda(const Partition& lambda, int k = 0);

/// Q_lambda in the monomial basis.
SymFunc macdonald_Q(const Partition& lambda, int k = 0);

/// <P_lambda, P_lambda> under the (q,t) scalar product.
RationalFunction macdonald_norm(const Partition& lambda, int k = 0);

/// Q_{lambda/mu} in the MacdonaldQ basis: coefficient of Q_nu is
/// <Q_lambda, P_mu P_nu>. Zero when mu is not contained in lambda.
SymFunc skew_Q(const Partition& lambda, const Partition& mu, int k = 0);

/// P_{lambda/mu} = (b_mu / b_lambda) Q_{lambda/mu}, in the MacdonaldQ basis.
SymFunc skew_P(const Partition& lambda, const Partition& mu, int k = 0);

enum class KernelKind {
    Kqt,      ///< prod 1/((x_i y_j; q)) weighted: sum_lambda P_lambda(X) Q_lambda(Y)
    lambda1,  ///< prod (1 + x_i y_j): sum_lambda P_{lambda'}(X; t, q) P_lambda(Y; q, t)
};

/// Both sides of the chosen kernel identity over x_1..x_n, y_1..y_m
/// (y_j = variable n + j), truncated to x-degree <= d; requires
/// d <= min(n, m) so the truncation is faithful. Returns (product side,
/// sum side).
std::pair<LaurentPoly, LaurentPoly> kernel_truncated(int d, int n, int m, KernelKind which);

enum class SkewKernelKind { skeqKqt, skewlambdaQ };

/// Deterministic short fingerprint of a Laurent polynomial, used in reports
/// where the full string form would be unwieldy.
std::string poly_digest(const LaurentPoly& p);

/// Checks product side == sum side of kernel_truncated.
VerificationReport verify_kernel(int d, int n, int m, KernelKind which);

/// Skew summation identity against the chosen kernel, checked in the window
/// of x-degree <= d and y-degree <= d with d + 2 variables on both sides.
VerificationReport verify_skew_kernel(const Partition& lambda, const Partition& mu, int d,
                                      SkewKernelKind which);

/// Q_lambda(-X-bar; t, q) == P_{lambda'}((1-q)/(1-t) X; q, t); compared as
/// exact coefficient maps.
VerificationReport verify_lemma_parameter_swap(const Partition& lambda);

/// Degree sweep: pairwise <P_lambda, P_mu> = 0, duality <P_lambda, Q_lambda>
/// = 1, unitriangularity in dominance order, and P(q, q) = Schur.
VerificationReport verify_orthogonality(int d);

/// P_lambda(x_1..x_{a+b}) == sum_mu P_mu(x_1..x_a) P_{lambda/mu}(x_{a+1}..x_{a+b}).
VerificationReport verify_branching(const Partition& lambda, int a, int b);

/// Precomputes transition matrices and generic tables for all degrees <= d
/// (writes through to the disk cache when one is configured).
void warm_caches(int d);

}  // namespace macqk

#endif
