#include <doctest.h>

#include "qtorus/errors.hpp"
#include "qtorus/exactq.hpp"

#include <cmath>
#include <complex>
#include <numeric>
#include <vector>

using namespace qtorus;

namespace {

// Abel-regularized sum of f(k) k^n x^k, k >= 1, in long double.
long double abel_sum(const PeriodicChar& f, unsigned n, long double x) {
  long double acc = 0;
  long double xk = 1;
  for (long k = 1; k < 5'000'000; ++k) {
    xk *= x;
    if (xk < 1e-30L) break;
    const long v = f(k);
    if (v != 0) acc += v * std::pow(static_cast<long double>(k), n) * xk;
  }
  return acc;
}

}  // namespace

TEST_CASE("rational helpers round-trip and reject non-canonical text") {
  CHECK(to_string(make_rational(6, -4)) == "-3/2");
  CHECK(parse_rational("-3/2") == make_rational(-3, 2));
  CHECK(parse_rational("7") == 7);
  CHECK_THROWS_AS(parse_rational("2/4"), InvalidParameter);
  CHECK_THROWS_AS(parse_rational("3/1"), InvalidParameter);
  CHECK_THROWS_AS(parse_rational("1/0"), InvalidParameter);
  CHECK_THROWS_AS(make_rational(1, 0), InvalidParameter);
  CHECK(floor(make_rational(-7, 2)) == -4);
  CHECK(floor(make_rational(7, 2)) == 3);
}

TEST_CASE("bernoulli polynomials") {
  CHECK(bernoulli_polynomial(1, make_rational(1, 4)) == make_rational(-1, 4));
  CHECK(bernoulli_polynomial(0, make_rational(7, 3)) == 1);
  CHECK(bernoulli_polynomial(2, make_rational(1, 2)) == make_rational(-1, 12));
  CHECK(bernoulli_number(1) == make_rational(-1, 2));
  CHECK(bernoulli_number(12) == make_rational(-691, 2730));

  // B_n(x+1) - B_n(x) = n x^{n-1}
  for (unsigned n = 1; n <= 6; ++n) {
    for (const Rational& x : {Rational(0), make_rational(1, 2), make_rational(1, 3), Rational(2)}) {
      Rational power = 1;
      for (unsigned i = 0; i + 1 < n; ++i) power *= x;
      CHECK(bernoulli_polynomial(n, x + 1) - bernoulli_polynomial(n, x) == Rational(n) * power);
    }
  }
}

TEST_CASE("periodic characters") {
  const auto psi = make_psi(3, 1);
  CHECK(psi.period() == 6);
  CHECK(psi(1) == 1);
  CHECK(psi(5) == -1);
  CHECK(psi(7) == 1);
  CHECK(psi(-1) == -1);
  const auto p21 = make_psi(2, 1).one_period();
  CHECK(std::accumulate(p21.begin(), p21.end(), 0L) == 0);
  CHECK_THROWS_AS(make_psi(3, 3), InvalidParameter);
  CHECK_THROWS_AS(make_psi(3, 0), InvalidParameter);

  const auto chi = make_chi(2, 3, 1, 1);
  CHECK(chi(1) == 1);
  CHECK(chi(5) == -1);
  CHECK(chi == make_chi(2, 3, 1, 2));
  CHECK(make_chi(3, 4, 1, 1)(2) == 0);
  CHECK(make_chi(3, 4, 1, 2) == make_chi(3, 4, 2, 2));
  CHECK_THROWS_AS(make_chi(2, 4, 1, 1), InvalidParameter);
  CHECK_THROWS_AS(make_chi(2, 3, 2, 1), InvalidParameter);

  // Degenerate edge patterns carry zero where +1 and -1 collide.
  const auto edge = psi_pattern(3, 3);
  for (long k = 0; k < 6; ++k) CHECK(edge(k) == 0);
  for (long k = 0; k < 6; ++k) CHECK(psi_pattern(3, -1)(k) == -make_psi(3, 1)(k));
  for (long k = 0; k < 6; ++k) CHECK(psi_pattern(3, 7)(k) == make_psi(3, 1)(k));

  CHECK_THROWS_AS(PeriodicChar({1, 1}), InvalidParameter);
}

TEST_CASE("L-values at non-positive integers") {
  CHECK(l_value(make_psi(3, 1), 0) == make_rational(2, 3));

  // Period inflation leaves L-values unchanged.
  for (const auto& f : {make_psi(2, 1), make_psi(5, 2), make_chi(2, 3, 1, 1), make_chi(3, 4, 1, 2)}) {
    for (unsigned n = 0; n <= 5; ++n) {
      CHECK(l_value(f.inflate(2), n) == l_value(f, n));
      CHECK(l_value(f.inflate(3), n) == l_value(f, n));
    }
  }

  // Abel summation oracle.
  const long double x = 1.0L - 1e-4L;
  for (const auto& f : {make_psi(2, 1), make_psi(3, 1), make_chi(2, 3, 1, 1)}) {
    for (unsigned n = 0; n <= 2; ++n) {
      const double exact = l_value(f, n).get_d();
      const double abel = static_cast<double>(abel_sum(f, n, x));
      CHECK(abel == doctest::Approx(exact).epsilon(1e-2).scale(1.0));
    }
  }

  // Known low values used by the asymptotic expansions.
  CHECK(l_value(make_psi(2, 1), 0) == make_rational(1, 2));
  CHECK(l_value(make_psi(2, 1), 2) == make_rational(-1, 2));
  CHECK(l_value(make_chi(2, 3, 1, 1), 1) == -2);
  CHECK(l_value(make_chi(2, 3, 1, 1), 3) == 46);
}

TEST_CASE("complex evaluation at roots of unity") {
  const Precision prec{128};
  {
    const std::vector<Term> one{{Rational(0), Rational(1)}};
    const auto v = eval_at_root(one, 5, prec).to_complex();
    CHECK(v.real() == doctest::Approx(1.0));
    CHECK(std::abs(v.imag()) < 1e-30);
  }
  {
    const std::vector<Term> q{{Rational(1), Rational(1)}};
    const auto v = eval_at_root(q, 2, prec).to_complex();
    CHECK(v.real() == doctest::Approx(-1.0));
    CHECK(std::abs(v.imag()) < 1e-30);
  }
  {
    const std::vector<Term> half{{make_rational(1, 2), Rational(1)}};
    const auto v = eval_at_root(half, 3, prec).to_complex();
    CHECK(v.real() == doctest::Approx(0.5));
    CHECK(v.imag() == doctest::Approx(std::sqrt(3.0) / 2));
  }
  {
    // Precision doubling agrees to 2^{-prec+8}.
    std::vector<Term> terms;
    for (long k = 1; k <= 40; ++k) terms.emplace_back(make_rational(k * k, 24), Rational(k % 3 - 1));
    const auto lo = eval_at_root(terms, 7, Precision{128});
    const auto hi = eval_at_root(terms, 7, Precision{256});
    const BigFloat diff = (lo - hi).abs();
    BigFloat bound(1, Precision{256});
    mpfr_mul_2si(bound.get(), bound.get(), -120, MPFR_RNDN);
    CHECK(diff <= bound * hi.abs());
  }
  CHECK_THROWS_AS(Precision{40}, InvalidParameter);
}

TEST_CASE("APComplex arithmetic") {
  const Precision prec{128};
  const APComplex i = APComplex::exp_i_pi(make_rational(1, 2), prec);
  CHECK(i.real().is_zero());
  CHECK(i.imag() == BigFloat(1, prec));
  const APComplex minus_one = i * i;
  CHECK(minus_one.real() == BigFloat(-1, prec));
  const auto r = minus_one.sqrt().to_complex();
  CHECK(r.imag() == doctest::Approx(1.0));
  const auto e = APComplex(Rational(0), Rational(1), prec).exp().to_complex();
  CHECK(e.real() == doctest::Approx(std::cos(1.0)));
  CHECK(e.imag() == doctest::Approx(std::sin(1.0)));
  const auto quotient = (APComplex(Rational(1), Rational(2), prec) / APComplex(Rational(3), Rational(-1), prec)).to_complex();
  const auto ref = std::complex<double>(1, 2) / std::complex<double>(3, -1);
  CHECK(quotient.real() == doctest::Approx(ref.real()));
  CHECK(quotient.imag() == doctest::Approx(ref.imag()));
}

TEST_CASE("cyclotomic polynomials and exact sums") {
  const auto phi12 = cyclotomic_polynomial(12);  // x^4 - x^2 + 1
  REQUIRE(phi12.size() == 5);
  CHECK(phi12[0] == 1);
  CHECK(phi12[2] == -1);
  CHECK(phi12[4] == 1);
  CHECK(cyclotomic_polynomial(1).size() == 2);

  CyclotomicSum roots(3);
  roots.add(0, 1);
  roots.add(1, 1);
  roots.add(2, 1);
  CHECK(roots.is_zero());

  CyclotomicSum single(12);
  single.add(Integer(-5), 2);
  CHECK_FALSE(single.is_zero());
  single.add(Integer(7), -2);
  CHECK(single.is_zero());
  single.add(Integer(6), 1);  // zeta_12^6 = -1
  single.add(Integer(0), 1);
  CHECK(single.is_zero());
}
