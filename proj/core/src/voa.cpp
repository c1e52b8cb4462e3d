#include "qtorus/voa.hpp"

#include "qtorus/errors.hpp"
#include "qtorus/knots.hpp"
#include "qtorus/thetas.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <string>

namespace qtorus {

namespace {

const Rational kEtaShift = make_rational(1, 24);

struct SignedExp {
  Rational exponent;
  long sign;
};

// The four-term bracket shared by the Virasoro characters and the
// Atiyah-Bott sums. Plus: D_j; minus: E_j (shifted one step in the odd index).
std::array<SignedExp, 4> bracket(long s, long t, long n, long m, long j, Sign sign) {
  const long o = sign == Sign::Plus ? 0 : 1;
  return {{{delta(s, t, s - n, m, -2 * j + 1 - o), 1},
           {delta(s, t, s - n, t - m, -2 * j - o), -1},
           {delta(s, t, n, m, -2 * j - o), -1},
           {delta(s, t, n, t - m, -2 * j - 1 - o), 1}}};
}

Rational lowest(const std::array<SignedExp, 4>& b) {
  Rational lo = b[0].exponent;
  for (const auto& x : b) lo = std::min(lo, x.exponent);
  return lo;
}

// Visits k = 0, 1, -1, 2, -2, ... for a quadratic exponent whose vertex
// lies in |k| < 1, stopping each direction once it has left [.., bound).
template <class Lowest, class Visit>
void bilateral(const Rational& bound, Lowest&& lowest_at, Visit&& visit) {
  for (long k = 0;; ++k) {
    if (k >= 2 && lowest_at(k) >= bound) break;
    visit(k);
  }
  for (long k = -1;; --k) {
    if (k <= -2 && lowest_at(k) >= bound) break;
    visit(k);
  }
}

void add_if_below(QSeries& out, const Rational& e, const Rational& c) {
  if (e < out.order() && c != 0) out.add_term(e, c);
}

void require_label_window(const VoaLabel& label) {
  require_coprime(label.s, label.t);
  if (label.n < 1 || label.n > label.s || label.m < 1 || label.m > label.t) {
    throw InvalidParameter("lattice label needs 1 <= n <= s and 1 <= m <= t");
  }
}

QSeries inverse_eta(const Rational& order) {
  // numerators have valuation >= 0, so 1/eta is needed to `order` only.
  return inverse(eta_series(order + 2 * kEtaShift));
}

// X-type bilateral sums: weight(k) (q^{(2stk + h - nt - ms)^2/4st}
//                                   - q^{(2stk + h - nt + ms)^2/4st}),
// h = 0 (plus) or st (minus).
template <class Weight>
QSeries x_type_sum(const VoaLabel& label, const Rational& order, Weight&& weight) {
  const long s = label.s, t = label.t, n = label.n, m = label.m;
  const long st = s * t;
  const long h = label.sign == Sign::Plus ? 0 : st;
  auto e = [&](long k, long lin) {
    const long base = 2 * st * k + h - lin;
    return make_rational(base * base, 4 * st);
  };
  QSeries out(order);
  bilateral(
      order, [&](long k) { return std::min(e(k, n * t + m * s), e(k, n * t - m * s)); },
      [&](long k) {
        const Rational w = weight(k);
        add_if_below(out, e(k, n * t + m * s), w);
        add_if_below(out, e(k, n * t - m * s), -w);
      });
  return out;
}

}  // namespace

std::string to_string(Sign sign) { return sign == Sign::Plus ? "+" : "-"; }

Sign parse_sign(std::string_view text) {
  if (text == "+" || text == "plus") return Sign::Plus;
  if (text == "-" || text == "minus") return Sign::Minus;
  throw InvalidParameter("sign must be '+' or '-', got '" + std::string(text) + "'");
}

void VoaLabel::validate() const {
  require_coprime(s, t);
  if (n <= 0 || n >= s || m <= 0 || m >= t) {
    throw InvalidParameter("module label needs 0 < n < s and 0 < m < t");
  }
}

Rational delta(long s, long t, long n, long m, long k) {
  const long base = m * s - n * t + s * t * k;
  return make_rational(base * base, 4 * s * t);
}

Rational central_charge(long s, long t) {
  require_coprime(s, t);
  return 1 - make_rational(6 * (s - t) * (s - t), s * t);
}

QSeries char_lattice(const VoaLabel& label, const Rational& order) {
  require_label_window(label);
  const long o = label.sign == Sign::Plus ? 0 : 1;
  const auto& [s, t, n, m, sign] = label;
  auto e = [&](long k) { return delta(s, t, n, m, 2 * k + o); };
  QSeries num(order + kEtaShift);
  bilateral(num.order(), e, [&](long k) { add_if_below(num, e(k), 1); });
  return divide_by_eta(num, order);
}

QSeries char_X_numerator(const VoaLabel& label, const Rational& order) {
  label.validate();
  if (label.sign == Sign::Plus) {
    return x_type_sum(label, order, [](long k) { return Rational(k * k); });
  }
  return x_type_sum(label, order, [](long k) { return Rational(k * (k + 1)); });
}

QSeries char_X(const VoaLabel& label, const Rational& order) {
  return divide_by_eta(char_X_numerator(label, order + kEtaShift), order);
}

QSeries singlet_eichler_combination(long s, long t, long n, long m,
                                    const Rational& order) {
  const long st = s * t;
  const long minus = n * t - m * s;
  const long plus = n * t + m * s;
  QSeries out = eichler_series(PhiKind{s, t, n, m}, order);
  out = out + eichler_series_pattern(psi_pattern(st, minus), st, order)
                  .scaled(make_rational(minus, 2));
  out = out - eichler_series_pattern(psi_pattern(st, plus), st, order)
                  .scaled(make_rational(plus, 2));
  return out.scaled(make_rational(1, st));
}

QSeries char_singlet(const VoaLabel& label, const Rational& order) {
  label.validate();
  if (label.sign == Sign::Minus) {
    return x_type_sum(label, order,
                      [](long k) { return Rational(std::min(std::abs(k), std::abs(k + 1))); });
  }
  QSeries direct = x_type_sum(label, order, [](long k) { return Rational(std::abs(k)); });
  const QSeries eichler =
      singlet_eichler_combination(label.s, label.t, label.n, label.m, order);
  if (direct != eichler) {
    throw IdentityViolation("singlet character: bilateral and Eichler forms differ at q^(" +
                            to_string(agreement_order(direct, eichler)) + ")");
  }
  return direct;
}

QSeries jmod_numerator(long s, long t, long n, long m, long k, const Rational& order) {
  VoaLabel{s, t, n, m}.validate();
  if (k < 1) throw InvalidParameter("Virasoro module index needs k >= 1");
  QSeries out(order);
  for (const auto& [e, sgn] : bracket(s, t, n, m, k, Sign::Plus)) {
    add_if_below(out, e, Rational(k * sgn));
  }
  return out;
}

QSeries char_Jmod(long s, long t, long n, long m, long k, const Rational& order) {
  return divide_by_eta(jmod_numerator(s, t, n, m, k, order + kEtaShift), order);
}

long sl2_weight_multiplicity(long beta, long gamma) {
  if (beta < 0) throw InvalidParameter("highest weight must be >= 0");
  return (std::abs(gamma) <= beta && (beta - gamma) % 2 == 0) ? 1 : 0;
}

QZSeries::ZPoly weyl_character(long beta) {
  if (beta < 0) throw InvalidParameter("highest weight must be >= 0");
  const LaurentPoly num = LaurentPoly::monomial(Rational(beta + 1)) -
                          LaurentPoly::monomial(Rational(-beta - 1));
  const LaurentPoly den = LaurentPoly::monomial(Rational(1)) - LaurentPoly::monomial(Rational(-1));
  QZSeries::ZPoly out;
  const LaurentPoly quotient = exact_divide(num, den);
  for (const auto& [e, c] : quotient.terms()) out.emplace(to_long(e.get_num()), c);
  return out;
}

QSeries ab_char_1t_numerator(long t, long m, long gamma, const Rational& order) {
  if (t < 1) throw InvalidParameter("t must be >= 1");
  if (m < 1 || m > t) throw InvalidParameter("(1,t) label needs 1 <= m <= t");
  // ch V^{h = j varpi} = q^{Delta_{m,-j}} / eta for even j, zero for odd j.
  auto weight_space = [&](long j) {
    const long base = m - t - j * t;
    return make_rational(base * base, 4 * t);
  };
  QSeries out(order);
  for (long beta = 0;; ++beta) {
    const Rational lo = std::min(weight_space(beta), weight_space(-beta - 2));
    if (beta >= 2 && lo >= order) break;
    const long mult = sl2_weight_multiplicity(beta, gamma);
    if (mult == 0 || beta % 2 != 0) continue;
    add_if_below(out, weight_space(beta), Rational(mult));
    add_if_below(out, weight_space(-beta - 2), Rational(-mult));
  }
  return out;
}

QSeries ab_char_1t(long t, long m, long gamma, const Rational& order) {
  return divide_by_eta(ab_char_1t_numerator(t, m, gamma, order + kEtaShift), order);
}

QSeries ab_char_st_numerator(const VoaLabel& label, const Rational& order) {
  label.validate();
  const auto& [s, t, n, m, sign] = label;
  const long gamma = sign == Sign::Plus ? 0 : 1;
  QSeries out(order);
  for (long j = 1;; ++j) {
    const auto b = bracket(s, t, n, m, j, sign);
    if (j >= 2 && lowest(b) >= order) break;
    // pairs (k, k') with k + k' + 1 = j
    long weight = 0;
    for (long k = 0; k < j; ++k) weight += sl2_weight_multiplicity(2 * k + gamma, gamma);
    for (const auto& [e, sgn] : b) add_if_below(out, e, Rational(weight * sgn));
  }
  return out;
}

QSeries ab_char_st(const VoaLabel& label, const Rational& order) {
  return divide_by_eta(ab_char_st_numerator(label, order + kEtaShift), order);
}

QZSeries ab_char_st_graded_numerator(const VoaLabel& label, const Rational& order) {
  label.validate();
  const auto& [s, t, n, m, sign] = label;
  const long gamma = sign == Sign::Plus ? 0 : 1;
  QZSeries out(order);
  for (long j = 1;; ++j) {
    const auto b = bracket(s, t, n, m, j, sign);
    if (j >= 2 && lowest(b) >= order) break;
    for (long k = 0; k < j; ++k) {
      for (const auto& [z, c] : weyl_character(2 * k + gamma)) {
        for (const auto& [e, sgn] : b) {
          if (e < order) out.add_term(e, z, c * sgn);
        }
      }
    }
  }
  return out;
}

QZSeries ab_char_st_graded(const VoaLabel& label, const Rational& order) {
  const QZSeries num = ab_char_st_graded_numerator(label, order + kEtaShift);
  return inverse_eta(order) * num;
}

}  // namespace qtorus
