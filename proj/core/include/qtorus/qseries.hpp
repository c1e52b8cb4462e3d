/**
 * @file qseries.hpp
 * @brief Sparse series in q with exact rational exponents.
 *
 * Three value types share one representation (an ordered exponent ->
 * coefficient map with zero coefficients never stored):
 *   - LaurentPoly: finitely many terms, exact;
 *   - QSeries: exact for every exponent strictly below `order()`;
 *   - QZSeries: a QSeries whose coefficients are Laurent polynomials in an
 *     extra variable z with integer exponents (sl_2 weight grading).
 *
 * Exponents are never forced onto a global grid. When an algorithm needs a
 * lattice (division, inversion) it computes the grain, i.e. the LCM of the
 * exponent denominators involved, on demand.
 */

#pragma once

#include "qtorus/exactq.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qtorus {

using TermMap = std::map<Rational, Rational>;

class LaurentPoly {
 public:
  LaurentPoly() = default;
  explicit LaurentPoly(const TermMap& terms);

  static LaurentPoly monomial(const Rational& exponent,
                              const Rational& coefficient = 1);

  const TermMap& terms() const noexcept { return terms_; }
  std::vector<Term> to_terms() const;
  Rational coefficient(const Rational& exponent) const;
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  /// Both throw std::logic_error on the zero polynomial.
  const Rational& min_exponent() const;
  const Rational& max_exponent() const;
  /// LCM of exponent denominators (1 for the zero polynomial).
  Integer grain() const;

  /// Accumulates c q^e; a resulting zero coefficient is erased.
  void add_term(const Rational& exponent, const Rational& coefficient);

  LaurentPoly shifted(const Rational& by) const;
  LaurentPoly scaled(const Rational& factor) const;

  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

 private:
  TermMap terms_;
};

/// Exact quotient num / den. The division runs over the integers in
/// u = q^{1/g}, g the common grain; a nonzero remainder throws
/// NonExactDivision. den == 0 throws InvalidParameter.
LaurentPoly exact_divide(const LaurentPoly& num, const LaurentPoly& den);

class QSeries {
 public:
  /// Zero series O(q^order).
  explicit QSeries(const Rational& order);
  /// Terms at or above `order` are dropped.
  QSeries(const TermMap& terms, const Rational& order);

  static QSeries from_poly(const LaurentPoly& poly, const Rational& order);

  const TermMap& terms() const noexcept { return terms_; }
  const Rational& order() const noexcept { return order_; }
  Rational coefficient(const Rational& exponent) const;
  bool is_zero() const noexcept { return terms_.empty(); }
  /// Lowest stored exponent, or `order()` when no term is stored.
  Rational valuation() const;
  Integer grain() const;

  void add_term(const Rational& exponent, const Rational& coefficient);

  /// Keeps exponents < min(order, order()).
  QSeries truncated(const Rational& order) const;
  /// Multiplication by q^by; the order shifts with it.
  QSeries shifted(const Rational& by) const;
  QSeries scaled(const Rational& factor) const;

  /// Order: min of the operand orders.
  friend QSeries operator+(const QSeries& a, const QSeries& b);
  friend QSeries operator-(const QSeries& a, const QSeries& b);
  /// Order: min(order(a) + valuation(b), order(b) + valuation(a)).
  friend QSeries operator*(const QSeries& a, const QSeries& b);
  /// Order: order(b) + min_exponent(a).
  friend QSeries operator*(const LaurentPoly& a, const QSeries& b);
  friend bool operator==(const QSeries&, const QSeries&) = default;

 private:
  TermMap terms_;
  Rational order_;
};

/// Multiplicative inverse of a series with a nonzero lowest coefficient,
/// by recursive coefficient solving on the grain lattice. If the input is
/// c q^v (1 + ...) with order o, the result has order o - 2v.
QSeries inverse(const QSeries& series);

/// q^{1/24} prod_{n >= 1} (1 - q^n), expanded as a product, to `order`.
QSeries eta_series(const Rational& order);

/// numerator / eta, exact to `order`. The numerator must be known to at
/// least order + 1/24.
QSeries divide_by_eta(const QSeries& numerator, const Rational& order);

/// First exponent at which a and b differ, capped at min(order(a), order(b)).
Rational agreement_order(const QSeries& a, const QSeries& b);

/// sum c e^{2 pi i e tau}. Requires Im(tau) > 0.
APComplex eval_series_at_tau(const QSeries& series, const APComplex& tau,
                             Precision prec);

class QZSeries {
 public:
  using ZPoly = std::map<long, Rational>;

  explicit QZSeries(const Rational& order);

  const std::map<Rational, ZPoly>& terms() const noexcept { return terms_; }
  const Rational& order() const noexcept { return order_; }
  Rational coefficient(const Rational& q_exponent, long z_exponent) const;

  void add_term(const Rational& q_exponent, long z_exponent,
                const Rational& coefficient);

  /// z := 1.
  QSeries specialize_z_one() const;

  friend QZSeries operator+(const QZSeries& a, const QZSeries& b);
  friend QZSeries operator-(const QZSeries& a, const QZSeries& b);
  friend QZSeries operator*(const QZSeries& a, const QZSeries& b);
  friend QZSeries operator*(const QSeries& a, const QZSeries& b);
  friend bool operator==(const QZSeries&, const QZSeries&) = default;

 private:
  Rational valuation() const;

  std::map<Rational, ZPoly> terms_;
  Rational order_;
};

// ---------------------------------------------------------------------------
// Text forms. One term per line, "c q^(e)" with e printed as "a" or "a/b",
// exponents ascending, after a header line: "order a/b" for QSeries and
// "exact" for LaurentPoly. Parsing accepts exactly what printing emits.

std::string to_text(const QSeries& series);
std::string to_text(const LaurentPoly& poly);
QSeries qseries_from_text(std::string_view text);
LaurentPoly laurent_from_text(std::string_view text);

/// Human form, exponent descending: "q^(-1) + q^(-3) - q^(-4)".
std::string to_display(const TermMap& terms);
/// "exponent,coefficient" rows after an "exponent,coefficient" header.
std::string to_csv(const TermMap& terms);

}  // namespace qtorus
