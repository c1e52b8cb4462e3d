/**
 * @file thetas.hpp
 * @brief Unary theta series of weight 3/2 (Psi) and 1/2 (Phi), their
 * Eichler integrals, exact limiting values at tau = 1/N, asymptotic
 * expansions in 1/N, and numeric S/T transformation checks.
 */

#pragma once

#include "qtorus/exactq.hpp"
#include "qtorus/qseries.hpp"

#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace qtorus {

/// Psi_p^{(a)}, 0 < a < p.
struct PsiKind {
  long p;
  long a;
  friend bool operator==(const PsiKind&, const PsiKind&) = default;
};

/// Phi_{s,t}^{(n,m)}, gcd(s,t) = 1, 0 < n < s, 0 < m < t.
struct PhiKind {
  long s;
  long t;
  long n;
  long m;
  friend bool operator==(const PhiKind&, const PhiKind&) = default;
};

using ThetaKind = std::variant<PsiKind, PhiKind>;

/// Throws InvalidParameter outside the windows above.
void validate(const ThetaKind& kind);
/// "Psi{2,1}" / "Phi{2,3,1,1}".
std::string to_string(const ThetaKind& kind);
/// Inverse of to_string; validates.
ThetaKind parse_theta_kind(std::string_view text);

/// The weighting character: psi_{2p}^{(a)} or chi_{2st}^{(n,m)}.
PeriodicChar weighting(const ThetaKind& kind);
/// 2p or 2st: the k^2 / (2 * half_period) exponent scale.
long half_period(const ThetaKind& kind);

/// Psi = (1/2) sum_k k psi(k) q^{k^2/4p};  Phi = (1/2) sum_k chi(k) q^{k^2/4st}.
QSeries theta_series(const ThetaKind& kind, const Rational& order);

/// tilde Psi = sum_{k>=0} psi(k) q^{k^2/4p};
/// tilde Phi = -(1/2) sum_{k>=0} k chi(k) q^{k^2/4st}.
QSeries eichler_series(const ThetaKind& kind, const Rational& order);

/// sum_{k>=0} f(k) q^{k^2/4p} for any period-2p pattern f, including the
/// degenerate edge patterns psi_pattern(p, 0) and psi_pattern(p, p).
QSeries eichler_series_pattern(const PeriodicChar& f, long p, const Rational& order);

/// -sum_{k=1}^{2pN} f(k) e^{pi i k^2/2pN} B_1(k/2pN): the value of
/// eichler_series_pattern at tau -> 1/N.
APComplex eichler_limit_pattern(const PeriodicChar& f, long p, long N, Precision prec);

/// Limiting value at tau = 1/N. Psi: the B_1 sum above; Phi:
/// (stN/2) sum_{k=1}^{2stN} chi(k) e^{pi i k^2/2stN} B_2(k/2stN).
APComplex eichler_limit(const ThetaKind& kind, long N, Precision prec);

struct AsymptoticReport {
  long N = 0;
  long K = 0;
  APComplex lhs;
  APComplex rhs;
  BigFloat abs_error;
  /// |(K+1)-th term of the series|, the natural size of the truncation error.
  BigFloat predicted_next_term;
};

/// lhs = limiting value plus the modular correction term (sqrt(N/i)-scaled
/// sine-kernel sum for Psi, (N/i)^{3/2}-scaled S-matrix sum for Phi);
/// rhs = sum_{k=0}^{K} L-value / k! * (pi i / 2pN)^k (Psi) or
/// -(1/2) sum_{k=0}^{K} L(-2k-1, chi) / k! * (pi i / 2stN)^k (Phi).
AsymptoticReport asymptotic_expansion(const ThetaKind& kind, long N, long K,
                                      Precision prec);

/// Canonical transversal of {(n,m) ~ (s-n,t-m)}: 1 <= n < s, 1 <= m < t,
/// nt > ms. Its size is (s-1)(t-1)/2.
std::vector<std::pair<long, long>> canonical_labels(long s, long t);

/// sqrt(8/st) (-1)^{n m' + n' m + 1} sin(n n' t pi / s) sin(m m' s pi / t).
BigFloat s_matrix_entry(long s, long t, long n, long m, long n2, long m2,
                        Precision prec);

/// sqrt(2/p) sin(a b pi / p).
BigFloat psi_s_entry(long p, long a, long b, Precision prec);

/// phi_{s,t}(n,m) = (s-n) m if nt > ms, else n (t-m).
long phi_weight(long s, long t, long n, long m);

/// |LHS - RHS| of the S transformation at tau:
///   Psi(tau) = (i/tau)^{3/2} sum_b sqrt(2/p) sin(ab pi/p) Psi^{(b)}(-1/tau),
///   Phi(tau) = (i/tau)^{1/2} sum' S Phi^{(n',m')}(-1/tau).
/// Every series is truncated at `order`; requires Im(tau) > 0.
BigFloat modular_transform_residual(const ThetaKind& kind, const APComplex& tau,
                                    const Rational& order, Precision prec);

/// Exact T check: every exponent of theta_series(kind) differs from the
/// lowest one by an integer, so tau -> tau + 1 multiplies the series by the
/// single phase e^{2 pi i (lowest exponent)}.
bool t_transform_is_diagonal(const ThetaKind& kind, const Rational& order);

}  // namespace qtorus
