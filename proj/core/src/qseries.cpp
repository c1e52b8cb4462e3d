#include "qtorus/qseries.hpp"

#include "qtorus/errors.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qtorus {

namespace {

void accumulate(TermMap& terms, const Rational& e, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

Integer lcm_denominators(const TermMap& terms) {
  Integer g = 1;
  for (const auto& [e, c] : terms) {
    mpz_lcm(g.get_mpz_t(), g.get_mpz_t(), e.get_den_mpz_t());
  }
  return g;
}

// Integer index of e on the lattice (1/g)Z.
long lattice_index(const Rational& e, const Integer& g) {
  const Rational scaled = e * g;
  return to_long(scaled.get_num());
}

std::string format_term(const Rational& e, const Rational& c) {
  return to_string(c) + " q^(" + to_string(e) + ")";
}

Term parse_term_line(const std::string& line) {
  const auto space = line.find(' ');
  if (space == std::string::npos || line.compare(space, 4, " q^(") != 0 ||
      line.back() != ')') {
    throw InvalidParameter("malformed series term line: '" + line + "'");
  }
  const Rational c = parse_rational(line.substr(0, space));
  const Rational e =
      parse_rational(line.substr(space + 4, line.size() - space - 5));
  if (c == 0) throw InvalidParameter("zero coefficient in series text");
  return {e, c};
}

TermMap parse_terms(std::istringstream& in) {
  TermMap terms;
  std::string line;
  std::optional<Rational> last;
  while (std::getline(in, line)) {
    auto [e, c] = parse_term_line(line);
    if (last && !(*last < e)) {
      throw InvalidParameter("series text must list exponents strictly ascending");
    }
    last = e;
    terms.emplace(std::move(e), std::move(c));
  }
  return terms;
}

}  // namespace

// ---------------------------------------------------------------------------
// LaurentPoly

LaurentPoly::LaurentPoly(const TermMap& terms) {
  for (const auto& [e, c] : terms) {
    if (c != 0) terms_.emplace(e, c);
  }
}

LaurentPoly LaurentPoly::monomial(const Rational& exponent,
                                  const Rational& coefficient) {
  LaurentPoly p;
  p.add_term(exponent, coefficient);
  return p;
}

std::vector<Term> LaurentPoly::to_terms() const {
  return {terms_.begin(), terms_.end()};
}

Rational LaurentPoly::coefficient(const Rational& exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Rational(0) : it->second;
}

const Rational& LaurentPoly::min_exponent() const {
  if (terms_.empty()) throw std::logic_error("zero polynomial has no exponents");
  return terms_.begin()->first;
}

const Rational& LaurentPoly::max_exponent() const {
  if (terms_.empty()) throw std::logic_error("zero polynomial has no exponents");
  return terms_.rbegin()->first;
}

Integer LaurentPoly::grain() const { return lcm_denominators(terms_); }

void LaurentPoly::add_term(const Rational& exponent, const Rational& coefficient) {
  accumulate(terms_, exponent, coefficient);
}

LaurentPoly LaurentPoly::shifted(const Rational& by) const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), e + by, c);
  return out;
}

LaurentPoly LaurentPoly::scaled(const Rational& factor) const {
  LaurentPoly out;
  if (factor == 0) return out;
  for (const auto& [e, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), e, c * factor);
  return out;
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out = a;
  for (const auto& [e, c] : b.terms_) out.add_term(e, c);
  return out;
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out = a;
  for (const auto& [e, c] : b.terms_) out.add_term(e, -c);
  return out;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
  }
  return out;
}

LaurentPoly exact_divide(const LaurentPoly& num, const LaurentPoly& den) {
  if (den.is_zero()) throw InvalidParameter("division by the zero polynomial");
  if (num.is_zero()) return {};

  Integer g = num.grain();
  mpz_lcm(g.get_mpz_t(), g.get_mpz_t(), den.grain().get_mpz_t());

  // Shift both to ordinary polynomials in u = q^{1/g}.
  const long num_lo = lattice_index(num.min_exponent(), g);
  const long den_lo = lattice_index(den.min_exponent(), g);
  const long num_deg = lattice_index(num.max_exponent(), g) - num_lo;
  const long den_deg = lattice_index(den.max_exponent(), g) - den_lo;
  if (num_deg < den_deg) {
    throw NonExactDivision("numerator degree below denominator degree");
  }

  std::vector<Rational> rem(static_cast<std::size_t>(num_deg) + 1);
  for (const auto& [e, c] : num.terms()) {
    rem[static_cast<std::size_t>(lattice_index(e, g) - num_lo)] = c;
  }
  std::vector<std::pair<long, Rational>> divisor;  // sparse, offset from top
  for (const auto& [e, c] : den.terms()) {
    divisor.emplace_back(lattice_index(e, g) - den_lo, c);
  }
  const Rational lead = den.terms().rbegin()->second;

  LaurentPoly quotient;
  const Rational shift = Rational(num_lo - den_lo) / g;
  for (long i = num_deg; i >= den_deg; --i) {
    const Rational& r = rem[static_cast<std::size_t>(i)];
    if (r == 0) continue;
    const Rational q = r / lead;
    const long qdeg = i - den_deg;
    for (const auto& [offset, c] : divisor) {
      rem[static_cast<std::size_t>(qdeg + offset)] -= q * c;
    }
    quotient.add_term(Rational(qdeg) / g + shift, q);
  }
  for (long i = 0; i < den_deg; ++i) {
    if (rem[static_cast<std::size_t>(i)] != 0) {
      throw NonExactDivision("nonzero remainder in exact Laurent division");
    }
  }
  return quotient;
}

// ---------------------------------------------------------------------------
// QSeries

QSeries::QSeries(const Rational& order) : order_(order) {}

QSeries::QSeries(const TermMap& terms, const Rational& order) : order_(order) {
  for (const auto& [e, c] : terms) {
    if (!(e < order_)) break;
    if (c != 0) terms_.emplace_hint(terms_.end(), e, c);
  }
}

QSeries QSeries::from_poly(const LaurentPoly& poly, const Rational& order) {
  return QSeries(poly.terms(), order);
}

Rational QSeries::coefficient(const Rational& exponent) const {
  if (!(exponent < order_)) {
    throw std::out_of_range("coefficient requested at or beyond series order");
  }
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational QSeries::valuation() const {
  return terms_.empty() ? order_ : terms_.begin()->first;
}

Integer QSeries::grain() const { return lcm_denominators(terms_); }

void QSeries::add_term(const Rational& exponent, const Rational& coefficient) {
  if (exponent < order_) accumulate(terms_, exponent, coefficient);
}

QSeries QSeries::truncated(const Rational& order) const {
  return QSeries(terms_, std::min(order, order_));
}

QSeries QSeries::shifted(const Rational& by) const {
  QSeries out(order_ + by);
  for (const auto& [e, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), e + by, c);
  return out;
}

QSeries QSeries::scaled(const Rational& factor) const {
  QSeries out(order_);
  if (factor == 0) return out;
  for (const auto& [e, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), e, c * factor);
  return out;
}

QSeries operator+(const QSeries& a, const QSeries& b) {
  QSeries out = a.truncated(b.order_);
  for (const auto& [e, c] : b.terms_) out.add_term(e, c);
  return out;
}

QSeries operator-(const QSeries& a, const QSeries& b) {
  QSeries out = a.truncated(b.order_);
  for (const auto& [e, c] : b.terms_) out.add_term(e, -c);
  return out;
}

QSeries operator*(const QSeries& a, const QSeries& b) {
  const Rational order =
      std::min(a.order_ + b.valuation(), b.order_ + a.valuation());
  QSeries out(order);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      const Rational e = ea + eb;
      if (!(e < order)) break;
      accumulate(out.terms_, e, ca * cb);
    }
  }
  return out;
}

QSeries operator*(const LaurentPoly& a, const QSeries& b) {
  if (a.is_zero()) return QSeries(b.order_ + Rational(1000000));
  const Rational order = b.order_ + a.min_exponent();
  QSeries out(order);
  for (const auto& [ea, ca] : a.terms()) {
    for (const auto& [eb, cb] : b.terms_) {
      const Rational e = ea + eb;
      if (!(e < order)) break;
      accumulate(out.terms_, e, ca * cb);
    }
  }
  return out;
}

QSeries inverse(const QSeries& series) {
  if (series.is_zero()) {
    throw InvalidParameter("cannot invert a series with no known nonzero term");
  }
  const Rational v = series.valuation();
  const Rational c0 = series.terms().begin()->second;
  const Rational rel_order = series.order() - v;

  // Normalized: 1 + sum a_i u^i, u = q^{1/g}.
  Integer g = 1;
  for (const auto& [e, c] : series.terms()) {
    const Rational d = e - v;
    mpz_lcm(g.get_mpz_t(), g.get_mpz_t(), d.get_den_mpz_t());
  }
  std::vector<std::pair<long, Rational>> a;
  for (const auto& [e, c] : series.terms()) {
    if (e == v) continue;
    a.emplace_back(lattice_index(e - v, g), c / c0);
  }
  // Indices j with j/g < rel_order.
  Rational bound = rel_order * g;
  Integer count = floor(bound);
  if (Rational(count) == bound) count -= 1;
  const long J = to_long(count) + 1;

  std::vector<Rational> d(static_cast<std::size_t>(std::max(J, 0L)));
  if (J > 0) d[0] = 1;
  for (long j = 1; j < J; ++j) {
    Rational acc = 0;
    for (const auto& [i, ai] : a) {
      if (i > j) break;
      acc += ai * d[static_cast<std::size_t>(j - i)];
    }
    d[static_cast<std::size_t>(j)] = -acc;
  }

  QSeries out(series.order() - 2 * v);
  for (long j = 0; j < J; ++j) {
    out.add_term(Rational(j) / g - v, d[static_cast<std::size_t>(j)] / c0);
  }
  return out;
}

QSeries eta_series(const Rational& order) {
  if (!(order > 0)) throw InvalidParameter("eta_series needs a positive order");
  const Rational shift(1, 24);
  QSeries out(order);
  if (!(shift < order)) return out;
  // Integer exponents j with j + 1/24 < order.
  Integer top = floor(order - shift);
  if (Rational(top) + shift == order) top -= 1;
  const long D = to_long(top);
  std::vector<Integer> prod(static_cast<std::size_t>(D) + 1);
  prod[0] = 1;
  for (long n = 1; n <= D; ++n) {
    for (long j = D; j >= n; --j) {
      prod[static_cast<std::size_t>(j)] -= prod[static_cast<std::size_t>(j - n)];
    }
  }
  for (long j = 0; j <= D; ++j) {
    if (prod[static_cast<std::size_t>(j)] != 0) {
      out.add_term(Rational(j) + shift, Rational(prod[static_cast<std::size_t>(j)]));
    }
  }
  return out;
}

QSeries divide_by_eta(const QSeries& numerator, const Rational& order) {
  const Rational shift(1, 24);
  if (numerator.order() < order + shift) {
    throw InvalidParameter("numerator not known far enough for eta division");
  }
  // inverse(eta) has order eta_order - 1/12; valuation of 1/eta is -1/24.
  const Rational inv_order = order - numerator.valuation() + 1;
  const QSeries inv_eta = inverse(eta_series(inv_order + Rational(1, 12)));
  QSeries out = (numerator * inv_eta).truncated(order);
  if (out.order() < order) {
    throw std::logic_error("eta division lost order");
  }
  return out;
}

Rational agreement_order(const QSeries& a, const QSeries& b) {
  const Rational cap = std::min(a.order(), b.order());
  auto ia = a.terms().begin();
  auto ib = b.terms().begin();
  while (true) {
    const bool ea = ia == a.terms().end() || !(ia->first < cap);
    const bool eb = ib == b.terms().end() || !(ib->first < cap);
    if (ea && eb) return cap;
    if (ea) return ib->first;
    if (eb) return ia->first;
    if (ia->first < ib->first) return ia->first;
    if (ib->first < ia->first) return ib->first;
    if (ia->second != ib->second) return ia->first;
    ++ia;
    ++ib;
  }
}

APComplex eval_series_at_tau(const QSeries& series, const APComplex& tau,
                             Precision prec) {
  if (tau.imag().sign() <= 0) {
    throw InvalidParameter("eval_series_at_tau needs Im(tau) > 0");
  }
  const Precision work{prec.bits() + 32};
  const APComplex two_pi_i_tau =
      APComplex(BigFloat(0, work), BigFloat::pi(work) * BigFloat(2, work)) * tau;
  APComplex acc(work);
  for (const auto& [e, c] : series.terms()) {
    const APComplex z = two_pi_i_tau * e;
    acc += z.exp() * c;
  }
  return acc.rounded(prec);
}

// ---------------------------------------------------------------------------
// QZSeries

QZSeries::QZSeries(const Rational& order) : order_(order) {}

Rational QZSeries::coefficient(const Rational& q_exponent, long z_exponent) const {
  if (!(q_exponent < order_)) {
    throw std::out_of_range("coefficient requested at or beyond series order");
  }
  auto it = terms_.find(q_exponent);
  if (it == terms_.end()) return 0;
  auto jt = it->second.find(z_exponent);
  return jt == it->second.end() ? Rational(0) : jt->second;
}

void QZSeries::add_term(const Rational& q_exponent, long z_exponent,
                        const Rational& coefficient) {
  if (coefficient == 0 || !(q_exponent < order_)) return;
  auto& zpoly = terms_[q_exponent];
  auto [it, inserted] = zpoly.try_emplace(z_exponent, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) zpoly.erase(it);
  }
  if (zpoly.empty()) terms_.erase(q_exponent);
}

QSeries QZSeries::specialize_z_one() const {
  QSeries out(order_);
  for (const auto& [e, zpoly] : terms_) {
    Rational sum = 0;
    for (const auto& [z, c] : zpoly) sum += c;
    out.add_term(e, sum);
  }
  return out;
}

Rational QZSeries::valuation() const {
  return terms_.empty() ? order_ : terms_.begin()->first;
}

QZSeries operator+(const QZSeries& a, const QZSeries& b) {
  QZSeries out(std::min(a.order_, b.order_));
  for (const auto* s : {&a, &b}) {
    for (const auto& [e, zpoly] : s->terms_) {
      for (const auto& [z, c] : zpoly) out.add_term(e, z, c);
    }
  }
  return out;
}

QZSeries operator-(const QZSeries& a, const QZSeries& b) {
  QZSeries out(std::min(a.order_, b.order_));
  for (const auto& [e, zpoly] : a.terms_) {
    for (const auto& [z, c] : zpoly) out.add_term(e, z, c);
  }
  for (const auto& [e, zpoly] : b.terms_) {
    for (const auto& [z, c] : zpoly) out.add_term(e, z, -c);
  }
  return out;
}

QZSeries operator*(const QZSeries& a, const QZSeries& b) {
  const Rational order =
      std::min(a.order_ + b.valuation(), b.order_ + a.valuation());
  QZSeries out(order);
  for (const auto& [ea, pa] : a.terms_) {
    for (const auto& [eb, pb] : b.terms_) {
      const Rational e = ea + eb;
      if (!(e < order)) break;
      for (const auto& [za, ca] : pa) {
        for (const auto& [zb, cb] : pb) out.add_term(e, za + zb, ca * cb);
      }
    }
  }
  return out;
}

QZSeries operator*(const QSeries& a, const QZSeries& b) {
  const Rational order =
      std::min(a.order() + b.valuation(), b.order_ + a.valuation());
  QZSeries out(order);
  for (const auto& [ea, ca] : a.terms()) {
    for (const auto& [eb, pb] : b.terms_) {
      const Rational e = ea + eb;
      if (!(e < order)) break;
      for (const auto& [zb, cb] : pb) out.add_term(e, zb, ca * cb);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Text

std::string to_text(const QSeries& series) {
  std::string out = "order " + to_string(series.order()) + "\n";
  for (const auto& [e, c] : series.terms()) out += format_term(e, c) + "\n";
  return out;
}

std::string to_text(const LaurentPoly& poly) {
  std::string out = "exact\n";
  for (const auto& [e, c] : poly.terms()) out += format_term(e, c) + "\n";
  return out;
}

QSeries qseries_from_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string header;
  if (!std::getline(in, header) || header.rfind("order ", 0) != 0) {
    throw InvalidParameter("series text must start with 'order a/b'");
  }
  const Rational order = parse_rational(header.substr(6));
  TermMap terms = parse_terms(in);
  if (!terms.empty() && !(terms.rbegin()->first < order)) {
    throw InvalidParameter("series text has a term at or beyond its order");
  }
  return QSeries(terms, order);
}

LaurentPoly laurent_from_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string header;
  if (!std::getline(in, header) || header != "exact") {
    throw InvalidParameter("polynomial text must start with 'exact'");
  }
  return LaurentPoly(parse_terms(in));
}

std::string to_display(const TermMap& terms) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    const auto& [e, c] = *it;
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (e == 0) {
      out += to_string(mag);
      continue;
    }
    if (mag != 1) out += to_string(mag) + "*";
    out += "q^(" + to_string(e) + ")";
  }
  return out;
}

std::string to_csv(const TermMap& terms) {
  std::string out = "exponent,coefficient\n";
  for (const auto& [e, c] : terms) out += to_string(e) + "," + to_string(c) + "\n";
  return out;
}

}  // namespace qtorus
