#include "qtorus/thetas.hpp"

#include "qtorus/errors.hpp"
#include "qtorus/knots.hpp"

#include <regex>
#include <string>

namespace qtorus {

namespace {

constexpr long kGuard = 32;

// Smallest K with K^2 / (4 * hp) >= order, i.e. all k < K have exponents
// below the order.
long k_bound(long hp, const Rational& order) {
  if (order <= 0) return 0;
  long k = 0;
  while (Rational(k * k) / (4 * hp) < order) ++k;
  return k;
}

template <class Fn>
QSeries weighted_sum(long hp, const Rational& order, Fn&& coefficient) {
  QSeries out(order);
  const long K = k_bound(hp, order);
  for (long k = 0; k < K; ++k) {
    const Rational c = coefficient(k);
    if (c != 0) out.add_term(make_rational(k * k, 4 * hp), c);
  }
  return out;
}

BigFloat sin_pi(const Rational& x, Precision prec) {
  return APComplex::exp_i_pi(x, prec).imag();
}

// (pi i / d)^k / k!, exactly phased.
APComplex power_term(long d, long k, Precision work) {
  BigFloat magnitude(1, work);
  const BigFloat base = BigFloat::pi(work) / BigFloat(d, work);
  for (long j = 1; j <= k; ++j) magnitude = magnitude * base / BigFloat(j, work);
  return APComplex::polar(magnitude, make_rational(k, 2));
}

}  // namespace

void validate(const ThetaKind& kind) {
  if (const auto* psi = std::get_if<PsiKind>(&kind)) {
    if (psi->p < 2 || psi->a <= 0 || psi->a >= psi->p) {
      throw InvalidParameter("Psi kind needs p >= 2 and 0 < a < p");
    }
    return;
  }
  const auto& phi = std::get<PhiKind>(kind);
  require_coprime(phi.s, phi.t);
  if (phi.n <= 0 || phi.n >= phi.s || phi.m <= 0 || phi.m >= phi.t) {
    throw InvalidParameter("Phi kind needs 0 < n < s and 0 < m < t");
  }
}

std::string to_string(const ThetaKind& kind) {
  if (const auto* psi = std::get_if<PsiKind>(&kind)) {
    return "Psi{" + std::to_string(psi->p) + "," + std::to_string(psi->a) + "}";
  }
  const auto& phi = std::get<PhiKind>(kind);
  return "Phi{" + std::to_string(phi.s) + "," + std::to_string(phi.t) + "," +
         std::to_string(phi.n) + "," + std::to_string(phi.m) + "}";
}

ThetaKind parse_theta_kind(std::string_view text) {
  static const std::regex psi_re(R"(Psi\{(\d+),(\d+)\})");
  static const std::regex phi_re(R"(Phi\{(\d+),(\d+),(\d+),(\d+)\})");
  const std::string s(text);
  std::smatch mt;
  ThetaKind kind;
  try {
    if (std::regex_match(s, mt, psi_re)) {
      kind = PsiKind{std::stol(mt[1]), std::stol(mt[2])};
    } else if (std::regex_match(s, mt, phi_re)) {
      kind = PhiKind{std::stol(mt[1]), std::stol(mt[2]), std::stol(mt[3]), std::stol(mt[4])};
    } else {
      throw InvalidParameter("theta kind must look like Psi{p,a} or Phi{s,t,n,m}: '" + s + "'");
    }
  } catch (const std::out_of_range&) {
    throw InvalidParameter("theta kind parameter out of range: '" + s + "'");
  }
  validate(kind);
  return kind;
}

PeriodicChar weighting(const ThetaKind& kind) {
  validate(kind);
  if (const auto* psi = std::get_if<PsiKind>(&kind)) return make_psi(psi->p, psi->a);
  const auto& phi = std::get<PhiKind>(kind);
  return make_chi(phi.s, phi.t, phi.n, phi.m);
}

long half_period(const ThetaKind& kind) {
  if (const auto* psi = std::get_if<PsiKind>(&kind)) return psi->p;
  const auto& phi = std::get<PhiKind>(kind);
  return phi.s * phi.t;
}

QSeries theta_series(const ThetaKind& kind, const Rational& order) {
  const PeriodicChar f = weighting(kind);
  const long hp = half_period(kind);
  // Both summands are even in k and vanish at k = 0, so the bilateral
  // half-sum is the one-sided sum over k >= 1.
  if (std::holds_alternative<PsiKind>(kind)) {
    return weighted_sum(hp, order, [&](long k) { return Rational(k * f(k)); });
  }
  return weighted_sum(hp, order, [&](long k) { return Rational(f(k)); });
}

QSeries eichler_series(const ThetaKind& kind, const Rational& order) {
  const PeriodicChar f = weighting(kind);
  const long hp = half_period(kind);
  if (std::holds_alternative<PsiKind>(kind)) return eichler_series_pattern(f, hp, order);
  return weighted_sum(hp, order, [&](long k) { return make_rational(-k * f(k), 2); });
}

QSeries eichler_series_pattern(const PeriodicChar& f, long p, const Rational& order) {
  if (f.period() != 2 * p) throw InvalidParameter("pattern period must be 2p");
  return weighted_sum(p, order, [&](long k) { return Rational(f(k)); });
}

APComplex eichler_limit_pattern(const PeriodicChar& f, long p, long N, Precision prec) {
  if (N < 1) throw InvalidParameter("N must be >= 1");
  if (f.period() != 2 * p) throw InvalidParameter("pattern period must be 2p");
  const Precision work{prec.bits() + kGuard};
  const long M = 2 * p * N;
  APComplex acc(work);
  for (long k = 1; k <= M; ++k) {
    const long v = f(k);
    if (v == 0) continue;
    acc += APComplex::exp_i_pi(make_rational(k * k, M), work) *
           (bernoulli_polynomial(1, make_rational(k, M)) * v);
  }
  return (-acc).rounded(prec);
}

APComplex eichler_limit(const ThetaKind& kind, long N, Precision prec) {
  const PeriodicChar f = weighting(kind);
  const long hp = half_period(kind);
  if (std::holds_alternative<PsiKind>(kind)) return eichler_limit_pattern(f, hp, N, prec);
  if (N < 1) throw InvalidParameter("N must be >= 1");
  const Precision work{prec.bits() + kGuard};
  const long M = 2 * hp * N;
  APComplex acc(work);
  for (long k = 1; k <= M; ++k) {
    const long v = f(k);
    if (v == 0) continue;
    acc += APComplex::exp_i_pi(make_rational(k * k, M), work) *
           (bernoulli_polynomial(2, make_rational(k, M)) * v);
  }
  return (acc * make_rational(hp * N, 2)).rounded(prec);
}

std::vector<std::pair<long, long>> canonical_labels(long s, long t) {
  require_coprime(s, t);
  std::vector<std::pair<long, long>> out;
  for (long n = 1; n < s; ++n)
    for (long m = 1; m < t; ++m)
      if (n * t > m * s) out.emplace_back(n, m);
  return out;
}

BigFloat s_matrix_entry(long s, long t, long n, long m, long n2, long m2,
                        Precision prec) {
  const BigFloat root = BigFloat(make_rational(8, s * t), prec).sqrt();
  const bool odd = ((n * m2 + n2 * m + 1) % 2) != 0;
  BigFloat out = root * sin_pi(make_rational(n * n2 * t, s), prec) *
                 sin_pi(make_rational(m * m2 * s, t), prec);
  return odd ? -out : out;
}

BigFloat psi_s_entry(long p, long a, long b, Precision prec) {
  return BigFloat(make_rational(2, p), prec).sqrt() * sin_pi(make_rational(a * b, p), prec);
}

long phi_weight(long s, long t, long n, long m) {
  return n * t > m * s ? (s - n) * m : n * (t - m);
}

AsymptoticReport asymptotic_expansion(const ThetaKind& kind, long N, long K,
                                      Precision prec) {
  validate(kind);
  if (N < 2) throw InvalidParameter("asymptotic expansion needs N >= 2");
  if (K < 0) throw InvalidParameter("K must be >= 0");
  const Precision work{prec.bits() + kGuard};
  const PeriodicChar f = weighting(kind);
  const long hp = half_period(kind);
  const BigFloat sqrtN = BigFloat(N, work).sqrt();

  APComplex correction(work);
  APComplex rhs(work);
  BigFloat next(work);

  if (const auto* psi = std::get_if<PsiKind>(&kind)) {
    const long p = psi->p;
    for (long b = 1; b < p; ++b) {
      const BigFloat weight = psi_s_entry(p, psi->a, b, work) * BigFloat(make_rational(p - b, p), work);
      // sqrt(N/i) = sqrt(N) e^{-pi i/4}
      correction += APComplex::polar(weight * sqrtN, make_rational(-1, 4) - make_rational(b * b * N, 2 * p));
    }
    for (long k = 0; k <= K + 1; ++k) {
      const APComplex term = power_term(2 * p * N, k, work) * l_value(f, static_cast<unsigned>(2 * k));
      if (k <= K) rhs += term; else next = term.abs();
    }
  } else {
    const auto& phi = std::get<PhiKind>(kind);
    const long s = phi.s, t = phi.t;
    const BigFloat scale = sqrtN * BigFloat(N, work);  // N^{3/2}
    for (const auto& [n2, m2] : canonical_labels(s, t)) {
      const long d = n2 * t - m2 * s;
      const BigFloat weight = s_matrix_entry(s, t, phi.n, phi.m, n2, m2, work) *
                              BigFloat(phi_weight(s, t, n2, m2), work) * scale;
      // (N/i)^{3/2} = N^{3/2} e^{-3 pi i/4}
      correction += APComplex::polar(weight, make_rational(-3, 4) - make_rational(d * d * N, 2 * s * t));
    }
    for (long k = 0; k <= K + 1; ++k) {
      const APComplex term = power_term(2 * hp * N, k, work) *
                             (l_value(f, static_cast<unsigned>(2 * k + 1)) * make_rational(-1, 2));
      if (k <= K) rhs += term; else next = term.abs();
    }
  }

  AsymptoticReport report;
  report.N = N;
  report.K = K;
  report.lhs = (eichler_limit(kind, N, work) + correction).rounded(prec);
  report.rhs = rhs.rounded(prec);
  report.abs_error = (eichler_limit(kind, N, work) + correction - rhs).abs().rounded(prec);
  report.predicted_next_term = next.rounded(prec);
  return report;
}

BigFloat modular_transform_residual(const ThetaKind& kind, const APComplex& tau,
                                    const Rational& order, Precision prec) {
  validate(kind);
  const Precision work{prec.bits() + kGuard};
  const APComplex one(Rational(1), Rational(0), work);
  const APComplex i(Rational(0), Rational(1), work);
  const APComplex tau_w = tau.rounded(work);
  const APComplex inv = -(one / tau_w);
  const APComplex i_over_tau = i / tau_w;
  const APComplex root = i_over_tau.sqrt();

  const APComplex lhs = eval_series_at_tau(theta_series(kind, order), tau_w, work);
  APComplex rhs(work);
  if (const auto* psi = std::get_if<PsiKind>(&kind)) {
    for (long b = 1; b < psi->p; ++b) {
      const APComplex value = eval_series_at_tau(theta_series(PsiKind{psi->p, b}, order), inv, work);
      rhs += value * psi_s_entry(psi->p, psi->a, b, work);
    }
    rhs = rhs * (i_over_tau * root);
  } else {
    const auto& phi = std::get<PhiKind>(kind);
    for (const auto& [n2, m2] : canonical_labels(phi.s, phi.t)) {
      const APComplex value =
          eval_series_at_tau(theta_series(PhiKind{phi.s, phi.t, n2, m2}, order), inv, work);
      rhs += value * s_matrix_entry(phi.s, phi.t, phi.n, phi.m, n2, m2, work);
    }
    rhs = rhs * root;
  }
  return (lhs - rhs).abs().rounded(prec);
}

bool t_transform_is_diagonal(const ThetaKind& kind, const Rational& order) {
  const QSeries theta = theta_series(kind, order);
  if (theta.is_zero()) return true;
  const Rational base = theta.valuation();
  for (const auto& [e, c] : theta.terms()) {
    if (!is_integer(e - base)) return false;
  }
  return true;
}

}  // namespace qtorus
