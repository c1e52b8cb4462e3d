/**
 * @file exactq.hpp
 * @brief Exact arithmetic substrate: rationals, Bernoulli polynomials,
 * mean-zero periodic characters, their L-values at non-positive integers,
 * arbitrary-precision complex numbers and an exact cyclotomic accumulator.
 *
 * Every value here is immutable after construction (or a plain value type),
 * and no function touches shared mutable state. MPFR precision is always
 * carried by the value, never by an ambient default.
 */

#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qtorus {

using Integer = mpz_class;
using Rational = mpq_class;

/// num/den in lowest terms. Throws InvalidParameter if den == 0.
Rational make_rational(long num, long den = 1);
Rational make_rational(const Integer& num, const Integer& den);

/// "a" for integers, "a/b" otherwise.
std::string to_string(const Rational& r);
/// Inverse of to_string. Accepts an optional leading sign; rejects
/// non-canonical input such as "2/4" or "3/1".
Rational parse_rational(std::string_view text);

bool is_integer(const Rational& r);
/// Floor of a rational, as a (possibly negative) integer.
Integer floor(const Rational& r);
long to_long(const Integer& z);

/// Working precision in bits. At least 53 (double precision).
class Precision {
 public:
  static constexpr long kDefaultBits = 128;

  constexpr Precision() = default;
  explicit Precision(long bits);
  constexpr long bits() const noexcept { return bits_; }

  friend constexpr bool operator==(Precision, Precision) = default;

 private:
  long bits_ = kDefaultBits;
};

/// RAII owner of one mpfr_t. Binary operations round to the larger of the
/// two operand precisions.
class BigFloat {
 public:
  explicit BigFloat(Precision prec = Precision{});
  BigFloat(long value, Precision prec);
  BigFloat(const Rational& value, Precision prec);
  BigFloat(const BigFloat& other);
  BigFloat(BigFloat&& other) noexcept;
  BigFloat& operator=(const BigFloat& other);
  BigFloat& operator=(BigFloat&& other) noexcept;
  ~BigFloat();

  static BigFloat pi(Precision prec);

  Precision precision() const;
  mpfr_srcptr get() const { return value_; }
  mpfr_ptr get() { return value_; }

  double to_double() const;
  /// Scientific notation with `digits` significant decimal digits.
  std::string to_string(int digits = 20) const;
  bool is_zero() const;
  int sign() const;

  /// The same value rounded (to nearest) to `prec`.
  BigFloat rounded(Precision prec) const;
  BigFloat abs() const;
  BigFloat sqrt() const;
  BigFloat operator-() const;

  friend BigFloat operator+(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator-(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator*(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator/(const BigFloat& a, const BigFloat& b);
  friend bool operator<(const BigFloat& a, const BigFloat& b);
  friend bool operator<=(const BigFloat& a, const BigFloat& b);
  friend bool operator==(const BigFloat& a, const BigFloat& b);

 private:
  mpfr_t value_;
};

/// Arbitrary-precision complex value. Arithmetic on two values runs at the
/// max of their precisions.
class APComplex {
 public:
  explicit APComplex(Precision prec = Precision{});
  APComplex(BigFloat re, BigFloat im);
  APComplex(const Rational& re, const Rational& im, Precision prec);

  /// e^{i pi x} for exact rational x; x is reduced mod 2 before rounding.
  static APComplex exp_i_pi(const Rational& x, Precision prec);
  /// r * e^{i pi x}.
  static APComplex polar(const BigFloat& r, const Rational& x);

  const BigFloat& real() const { return re_; }
  const BigFloat& imag() const { return im_; }
  Precision precision() const;

  APComplex rounded(Precision prec) const;
  BigFloat abs() const;
  APComplex conj() const;
  APComplex operator-() const;
  /// Principal branch.
  APComplex sqrt() const;
  APComplex exp() const;
  std::complex<double> to_complex() const;
  std::string to_string(int digits = 20) const;

  APComplex& operator+=(const APComplex& other);
  APComplex& operator-=(const APComplex& other);

  friend APComplex operator+(const APComplex& a, const APComplex& b);
  friend APComplex operator-(const APComplex& a, const APComplex& b);
  friend APComplex operator*(const APComplex& a, const APComplex& b);
  friend APComplex operator*(const APComplex& a, const BigFloat& b);
  friend APComplex operator*(const APComplex& a, const Rational& b);
  friend APComplex operator/(const APComplex& a, const APComplex& b);

 private:
  BigFloat re_;
  BigFloat im_;
};

/// Bernoulli number B_n with B_1 = -1/2.
Rational bernoulli_number(unsigned n);
/// B_n(x), exact.
Rational bernoulli_polynomial(unsigned n, const Rational& x);

/// Integer-valued function of period M with zero sum over a period.
class PeriodicChar {
 public:
  /// `values[r]` is the value on residue class r (0 <= r < M). Throws
  /// InvalidParameter if the values do not sum to zero.
  explicit PeriodicChar(std::vector<long> values);

  long period() const noexcept { return static_cast<long>(values_.size()); }
  long operator()(long k) const;
  /// Values on residues 1..M, in that order.
  std::vector<long> one_period() const;
  /// The same function presented with period c*M.
  PeriodicChar inflate(long c) const;

  friend bool operator==(const PeriodicChar&, const PeriodicChar&) = default;

 private:
  std::vector<long> values_;
};

/// psi_{2p}^{(a)}: +1 on k = a, -1 on k = -a (mod 2p). Requires 0 < a < p.
PeriodicChar make_psi(long p, long a);
/// The same pattern for any integer a. Residues where +1 and -1 collide
/// (a = 0 or p mod 2p) carry 0.
PeriodicChar psi_pattern(long p, long a);
/// chi_{2st}^{(n,m)}: +1 on k = +-(nt - ms), -1 on k = +-(nt + ms) (mod 2st).
PeriodicChar make_chi(long s, long t, long n, long m);

/// L(-n, f) = -(M^n / (n+1)) sum_{k=1}^{M} f(k) B_{n+1}(k/M).
Rational l_value(const PeriodicChar& f, unsigned n);

using Term = std::pair<Rational, Rational>;  // (exponent, coefficient)

/// sum c * e^{2 pi i e / N}; q^e at q = zeta_N is e^{2 pi i e/N} for every
/// rational e, which fixes the branch of fractional powers.
APComplex eval_at_root(std::span<const Term> terms, long N, Precision prec);

/// Coefficients of the M-th cyclotomic polynomial, lowest degree first.
std::vector<Integer> cyclotomic_polynomial(long M);

/// Exact element of Z[zeta_M] accumulated as sum c_j zeta_M^j.
class CyclotomicSum {
 public:
  explicit CyclotomicSum(long M);

  long order() const noexcept { return M_; }
  void add(const Integer& power, long coefficient);
  /// Coordinates in the basis 1, zeta, ..., zeta^{phi(M)-1}.
  std::vector<Integer> coordinates() const;
  bool is_zero() const;

 private:
  long M_;
  std::vector<Integer> raw_;
};

}  // namespace qtorus
