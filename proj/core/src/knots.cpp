#include "qtorus/knots.hpp"

#include "qtorus/errors.hpp"

#include <map>
#include <numeric>
#include <string>

namespace qtorus {

namespace {

// Every summand exponent in this file lies in (1/4)Z, so numerators are
// accumulated on that lattice with machine integers: key = 4 * exponent.
using QuarterSum = std::map<long, long>;

void bump(QuarterSum& acc, long quarter_exponent, long c) {
  auto [it, inserted] = acc.try_emplace(quarter_exponent, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) acc.erase(it);
  }
}

// numerator * q^{prefactor} / (q^{N/2} - q^{-N/2})
LaurentPoly finish(const QuarterSum& numerator, long N, const Rational& prefactor) {
  TermMap terms;
  for (const auto& [e4, c] : numerator) {
    terms.emplace(Rational(e4) / 4, Rational(c));
  }
  const LaurentPoly den = LaurentPoly::monomial(make_rational(N, 2)) -
                          LaurentPoly::monomial(make_rational(-N, 2));
  return exact_divide(LaurentPoly(terms), den).shifted(prefactor);
}

// The two-term summand with half-index R = 2r:
//   q^{st r^2 - lin_a r + c/2} - q^{st r^2 - lin_b r - c/2}.
void add_pair(QuarterSum& acc, long st, long R, long lin_a,
              long lin_b, long c) {
  const long quad = st * R * R;
  bump(acc, quad - 2 * lin_a * R + 2 * c, 1);
  bump(acc, quad - 2 * lin_b * R - 2 * c, -1);
}

void require_color(long N) {
  if (N < 1) throw InvalidParameter("color N must be >= 1, got " + std::to_string(N));
}

void require_label(long n, long m) {
  if (n < 1 || m < 1) {
    throw InvalidParameter("family label (n,m) needs n,m >= 1");
  }
}

// Reduced-form summand A zeta^A - B zeta^B.
APComplex reduced_f(long s, long t, long n, long m, long N, long r, Precision work) {
  const Rational st(s * t);
  const Rational half_mn = make_rational(m * n, 2);
  const Rational a = st * r * r - Rational(n * t + m * s) * r + half_mn;
  const Rational b = st * r * r + Rational(n * t - m * s) * r - half_mn;
  return APComplex::exp_i_pi(2 * a / N, work) * a -
         APComplex::exp_i_pi(2 * b / N, work) * b;
}

void cross_check(const APComplex& a, const APComplex& b, Precision prec,
                 const std::string& what) {
  BigFloat scale = a.abs();
  const BigFloat one(1, prec);
  if (scale < one) scale = one;
  const BigFloat diff = (a - b).abs();
  BigFloat bound = scale;
  mpfr_mul_2si(bound.get(), bound.get(), -(prec.bits() - 16), MPFR_RNDN);
  if (bound < diff) {
    throw PrecisionFailure(what + ": evaluation routes disagree by " +
                           diff.to_string(6));
  }
}

}  // namespace

void require_coprime(long s, long t) {
  if (s < 1 || t < 1) throw InvalidParameter("s and t must be positive");
  if (std::gcd(s, t) != 1) {
    throw InvalidParameter("gcd(s,t) must be 1, got (" + std::to_string(s) +
                           "," + std::to_string(t) + ")");
  }
}

void TorusParams::validate() const {
  require_coprime(s, t);
  require_color(N);
  require_label(n, m);
  if (components < 1 || components > 3) {
    throw InvalidParameter("components must be 1, 2 or 3");
  }
}

LaurentPoly jones_torus_knot(long s, long t, long N) {
  require_coprime(s, t);
  require_color(N);
  QuarterSum acc;
  const long st = s * t;
  for (long j = 0; j < N; ++j) {
    const long R = 2 * j - (N - 1);  // r = R/2 runs over -(N-1)/2..(N-1)/2
    add_pair(acc, st, R, s + t, s - t, 1);
  }
  return finish(acc, N, make_rational(st * (1 - N * N), 4));
}

LaurentPoly jones_T2_2p(long p, long N) {
  if (p < 1) throw InvalidParameter("p must be >= 1");
  require_color(N);
  QuarterSum acc;
  for (long j = 0; j < N; ++j) {
    const long base = 4 * p * j * (j + 1);
    bump(acc, base + 4 * j + 2, 1);
    bump(acc, base - 4 * j - 2, -1);
  }
  return finish(acc, N, Rational(p * (1 - N * N)));
}

LaurentPoly jones_torus_link(long s, long t, long N) {
  require_coprime(s, t);
  require_color(N);
  QuarterSum acc;
  const long st = s * t;
  for (long j = 0; j < N; ++j) {
    for (long k = -j; k <= j; ++k) add_pair(acc, st, 2L * k, s + t, s - t, 1);
  }
  return finish(acc, N, Rational(st * (1 - N * N)));
}

LaurentPoly jones_torus_link3(long s, long t, long N) {
  require_coprime(s, t);
  require_color(N);
  QuarterSum acc;
  const long st = s * t;
  for (long b = 0; b < N; ++b) {
    for (long c = std::abs(2 * b - N + 1); c <= 2 * b + N - 1; ++c) {
      if ((c + N) % 2 == 0) continue;
      for (long i = 0; i <= c; ++i) add_pair(acc, st, 2L * i - c, s + t, s - t, 1);
    }
  }
  return finish(acc, N, make_rational(9 * st * (1 - N * N), 4));
}

LaurentPoly jones_family_two(long s, long t, long n, long m, long N) {
  require_coprime(s, t);
  require_color(N);
  require_label(n, m);
  QuarterSum acc;
  const long st = s * t;
  for (long c = 0; c < N; ++c) {
    for (long r = -c; r <= c; ++r) {
      add_pair(acc, st, 2L * r, n * t + m * s, m * s - n * t, m * n);
    }
  }
  return finish(acc, N, 0);
}

LaurentPoly jones_family_three(long s, long t, long n, long m, long N) {
  require_coprime(s, t);
  require_color(N);
  require_label(n, m);
  QuarterSum acc;
  const long st = s * t;
  for (long b = 0; b < N; ++b) {
    for (long c = std::abs(2 * b - N + 1); c <= 2 * b + N - 1; ++c) {
      if ((c + N) % 2 == 0) continue;
      for (long i = 0; i <= c; ++i) {
        add_pair(acc, st, 2L * i - c, m * s + n * t, m * s - n * t, m * n);
      }
    }
  }
  return finish(acc, N, 0);
}

LaurentPoly jones_polynomial(const TorusParams& params) {
  params.validate();
  const auto& [s, t, N, n, m, components] = params;
  const bool plain = n == 1 && m == 1;
  switch (components) {
    case 1:
      return jones_torus_knot(s, t, N);
    case 2:
      return plain ? jones_torus_link(s, t, N) : jones_family_two(s, t, n, m, N);
    default:
      return plain ? jones_torus_link3(s, t, N) : jones_family_three(s, t, n, m, N);
  }
}

APComplex family_two_at_root_reduced(long s, long t, long n, long m, long N,
                                     Precision prec) {
  require_coprime(s, t);
  require_color(N);
  require_label(n, m);
  const Precision work{prec.bits() + 32};
  APComplex acc(work);
  for (long k = 1; k < N; ++k) {
    acc += reduced_f(s, t, n, m, N, k, work) * Rational(N - k) +
           reduced_f(s, t, n, m, N, k - N, work) * Rational(k);
  }
  acc = acc * make_rational(1, N) + reduced_f(s, t, n, m, N, 0, work);
  return (-acc).rounded(prec);
}

APComplex family_two_at_root(long s, long t, long n, long m, long N,
                             Precision prec) {
  const LaurentPoly poly = jones_family_two(s, t, n, m, N);
  const auto terms = poly.to_terms();
  const APComplex direct = eval_at_root(terms, N, prec);
  const APComplex reduced = family_two_at_root_reduced(s, t, n, m, N, prec);
  cross_check(direct, reduced, prec, "labelled family at root of unity");
  return direct;
}

APComplex kashaev_invariant(const TorusParams& params, Precision prec) {
  params.validate();
  const LaurentPoly poly = jones_polynomial(params);
  const auto terms = poly.to_terms();
  const APComplex direct = eval_at_root(terms, params.N, prec);
  if (params.components != 2) return direct;

  const auto& [s, t, N, n, m, components] = params;
  // The link prefactor q^{st(1-N^2)} collapses to zeta^{st} at q = zeta_N.
  const Rational collapse = Rational(s * t * (1 - N * N)) - Rational(s * t);
  if (!is_integer(collapse / N)) {
    throw PrecisionFailure("prefactor does not reduce to zeta^{st}");
  }
  const bool plain = n == 1 && m == 1;
  APComplex reduced = family_two_at_root_reduced(s, t, n, m, N, prec);
  if (plain) reduced = APComplex::exp_i_pi(make_rational(2 * s * t, N), prec) * reduced;
  cross_check(direct, reduced, prec, "Kashaev invariant");
  return direct;
}

}  // namespace qtorus
