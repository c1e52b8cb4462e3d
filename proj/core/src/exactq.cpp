#include "qtorus/exactq.hpp"

#include "qtorus/errors.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

namespace qtorus {

namespace {

// Extra bits carried through transcendental evaluation and summation.
constexpr long kGuardBits = 32;

Precision with_guard(Precision p) { return Precision{p.bits() + kGuardBits}; }

Precision max_precision(const BigFloat& a, const BigFloat& b) {
  return a.precision().bits() >= b.precision().bits() ? a.precision()
                                                      : b.precision();
}

std::vector<Integer> poly_divide_exact(std::vector<Integer> num,
                                       const std::vector<Integer>& den) {
  // den is monic; returns the quotient, remainder must vanish.
  const std::size_t dn = den.size() - 1;
  if (num.size() < den.size()) return {};
  std::vector<Integer> quot(num.size() - dn);
  for (std::size_t i = num.size(); i-- > dn;) {
    const Integer c = num[i];
    if (c == 0) continue;
    quot[i - dn] = c;
    for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
  }
  return quot;
}

std::vector<Integer> cyclotomic_memo(long M,
                                     std::map<long, std::vector<Integer>>& memo) {
  if (auto it = memo.find(M); it != memo.end()) return it->second;
  std::vector<Integer> poly(static_cast<std::size_t>(M) + 1);
  poly[0] = -1;
  poly[static_cast<std::size_t>(M)] = 1;
  for (long d = 1; d < M; ++d) {
    if (M % d != 0) continue;
    poly = poly_divide_exact(std::move(poly), cyclotomic_memo(d, memo));
  }
  memo.emplace(M, poly);
  return poly;
}

}  // namespace

// ---------------------------------------------------------------------------
// Rationals

Rational make_rational(long num, long den) {
  if (den == 0) throw InvalidParameter("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw InvalidParameter("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (!s.empty() && s.front() == '+') s.erase(0, 1);
  if (s.empty() || s.find_first_of(" \t\n") != std::string::npos) {
    throw InvalidParameter("malformed rational: '" + std::string(text) + "'");
  }
  Rational r;
  if (r.set_str(s, 10) != 0 || r.get_den() == 0) {
    throw InvalidParameter("malformed rational: '" + std::string(text) + "'");
  }
  r.canonicalize();
  if (r.get_str() != s) {
    throw InvalidParameter("non-canonical rational: '" + std::string(text) +
                           "'");
  }
  return r;
}

bool is_integer(const Rational& r) { return r.get_den() == 1; }

Integer floor(const Rational& r) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

long to_long(const Integer& z) {
  if (!z.fits_slong_p()) throw InvalidParameter("integer out of range");
  return z.get_si();
}

Precision::Precision(long bits) : bits_(bits) {
  if (bits < 53) {
    throw InvalidParameter("precision must be at least 53 bits, got " +
                           std::to_string(bits));
  }
}

// ---------------------------------------------------------------------------
// BigFloat

BigFloat::BigFloat(Precision prec) {
  mpfr_init2(value_, prec.bits());
  mpfr_set_zero(value_, 1);
}

BigFloat::BigFloat(long value, Precision prec) {
  mpfr_init2(value_, prec.bits());
  mpfr_set_si(value_, value, MPFR_RNDN);
}

BigFloat::BigFloat(const Rational& value, Precision prec) {
  mpfr_init2(value_, prec.bits());
  mpfr_set_q(value_, value.get_mpq_t(), MPFR_RNDN);
}

BigFloat::BigFloat(const BigFloat& other) {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
  // `other` is left holding an initialized (NaN) value of the same precision.
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_swap(value_, other.value_);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
  if (this != &other) {
    mpfr_set_prec(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
  if (this != &other) mpfr_swap(value_, other.value_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(value_); }

BigFloat BigFloat::pi(Precision prec) {
  BigFloat r(prec);
  mpfr_const_pi(r.value_, MPFR_RNDN);
  return r;
}

Precision BigFloat::precision() const {
  return Precision{static_cast<long>(mpfr_get_prec(value_))};
}

double BigFloat::to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }

std::string BigFloat::to_string(int digits) const {
  std::vector<char> buf(static_cast<std::size_t>(digits) + 32);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Re", digits - 1, value_);
  return std::string(buf.data());
}

bool BigFloat::is_zero() const { return mpfr_zero_p(value_) != 0; }

int BigFloat::sign() const { return mpfr_sgn(value_); }

BigFloat BigFloat::abs() const {
  BigFloat r(precision());
  mpfr_abs(r.value_, value_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::sqrt() const {
  BigFloat r(precision());
  mpfr_sqrt(r.value_, value_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::rounded(Precision prec) const {
  BigFloat r(prec);
  mpfr_set(r.value_, value_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::operator-() const {
  BigFloat r(precision());
  mpfr_neg(r.value_, value_, MPFR_RNDN);
  return r;
}

BigFloat operator+(const BigFloat& a, const BigFloat& b) {
  BigFloat r(max_precision(a, b));
  mpfr_add(r.value_, a.value_, b.value_, MPFR_RNDN);
  return r;
}

BigFloat operator-(const BigFloat& a, const BigFloat& b) {
  BigFloat r(max_precision(a, b));
  mpfr_sub(r.value_, a.value_, b.value_, MPFR_RNDN);
  return r;
}

BigFloat operator*(const BigFloat& a, const BigFloat& b) {
  BigFloat r(max_precision(a, b));
  mpfr_mul(r.value_, a.value_, b.value_, MPFR_RNDN);
  return r;
}

BigFloat operator/(const BigFloat& a, const BigFloat& b) {
  BigFloat r(max_precision(a, b));
  mpfr_div(r.value_, a.value_, b.value_, MPFR_RNDN);
  return r;
}

bool operator<(const BigFloat& a, const BigFloat& b) {
  return mpfr_less_p(a.value_, b.value_) != 0;
}

bool operator<=(const BigFloat& a, const BigFloat& b) {
  return mpfr_lessequal_p(a.value_, b.value_) != 0;
}

bool operator==(const BigFloat& a, const BigFloat& b) {
  return mpfr_equal_p(a.value_, b.value_) != 0;
}

// ---------------------------------------------------------------------------
// APComplex

APComplex::APComplex(Precision prec) : re_(prec), im_(prec) {}

APComplex::APComplex(BigFloat re, BigFloat im)
    : re_(std::move(re)), im_(std::move(im)) {
  // Both parts live at the common precision.
  const Precision p = max_precision(re_, im_);
  if (re_.precision() != p) re_ = re_.rounded(p);
  if (im_.precision() != p) im_ = im_.rounded(p);
}

APComplex::APComplex(const Rational& re, const Rational& im, Precision prec)
    : re_(re, prec), im_(im, prec) {}

APComplex APComplex::exp_i_pi(const Rational& x, Precision prec) {
  // Reduce to [0, 2) exactly, so large arguments lose nothing.
  Rational half = x / 2;
  Rational reduced = x - 2 * Rational(floor(half));
  if (reduced == 0) return APComplex(Rational(1), Rational(0), prec);
  if (reduced == Rational(1, 2)) return APComplex(Rational(0), Rational(1), prec);
  if (reduced == 1) return APComplex(Rational(-1), Rational(0), prec);
  if (reduced == Rational(3, 2)) return APComplex(Rational(0), Rational(-1), prec);

  const Precision work = with_guard(prec);
  BigFloat theta = BigFloat::pi(work) * BigFloat(reduced, work);
  BigFloat s(work), c(work);
  mpfr_sin_cos(s.get(), c.get(), theta.get(), MPFR_RNDN);
  BigFloat re(prec), im(prec);
  mpfr_set(re.get(), c.get(), MPFR_RNDN);
  mpfr_set(im.get(), s.get(), MPFR_RNDN);
  return APComplex(std::move(re), std::move(im));
}

APComplex APComplex::polar(const BigFloat& r, const Rational& x) {
  return exp_i_pi(x, r.precision()) * r;
}

Precision APComplex::precision() const { return re_.precision(); }

APComplex APComplex::rounded(Precision prec) const {
  return APComplex(re_.rounded(prec), im_.rounded(prec));
}

BigFloat APComplex::abs() const {
  BigFloat r(precision());
  mpfr_hypot(r.get(), re_.get(), im_.get(), MPFR_RNDN);
  return r;
}

APComplex APComplex::conj() const { return APComplex(re_, -im_); }

APComplex APComplex::operator-() const { return APComplex(-re_, -im_); }

APComplex APComplex::sqrt() const {
  const Precision p = precision();
  if (re_.is_zero() && im_.is_zero()) return APComplex(p);
  const BigFloat r = abs();
  const BigFloat two(2, p);
  if (re_.sign() >= 0) {
    BigFloat a = ((r + re_) / two).sqrt();
    return APComplex(a, im_ / (two * a));
  }
  BigFloat b = ((r - re_) / two).sqrt();
  BigFloat a = im_.abs() / (two * b);
  if (im_.sign() < 0) b = -b;
  return APComplex(std::move(a), std::move(b));
}

APComplex APComplex::exp() const {
  const Precision p = precision();
  BigFloat mag(p);
  mpfr_exp(mag.get(), re_.get(), MPFR_RNDN);
  BigFloat s(p), c(p);
  mpfr_sin_cos(s.get(), c.get(), im_.get(), MPFR_RNDN);
  return APComplex(mag * c, mag * s);
}

std::complex<double> APComplex::to_complex() const {
  return {re_.to_double(), im_.to_double()};
}

std::string APComplex::to_string(int digits) const {
  std::string im = im_.to_string(digits);
  if (im.front() != '-') im = "+" + im;
  return re_.to_string(digits) + " " + im.substr(0, 1) + " " + im.substr(1) +
         "i";
}

APComplex& APComplex::operator+=(const APComplex& other) {
  *this = *this + other;
  return *this;
}

APComplex& APComplex::operator-=(const APComplex& other) {
  *this = *this - other;
  return *this;
}

APComplex operator+(const APComplex& a, const APComplex& b) {
  return APComplex(a.re_ + b.re_, a.im_ + b.im_);
}

APComplex operator-(const APComplex& a, const APComplex& b) {
  return APComplex(a.re_ - b.re_, a.im_ - b.im_);
}

APComplex operator*(const APComplex& a, const APComplex& b) {
  return APComplex(a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_);
}

APComplex operator*(const APComplex& a, const BigFloat& b) {
  return APComplex(a.re_ * b, a.im_ * b);
}

APComplex operator*(const APComplex& a, const Rational& b) {
  return a * BigFloat(b, a.precision());
}

APComplex operator/(const APComplex& a, const APComplex& b) {
  const BigFloat den = b.re_ * b.re_ + b.im_ * b.im_;
  return APComplex((a.re_ * b.re_ + a.im_ * b.im_) / den,
                   (a.im_ * b.re_ - a.re_ * b.im_) / den);
}

// ---------------------------------------------------------------------------
// Bernoulli

Rational bernoulli_number(unsigned n) {
  // sum_{k=0}^{j} C(j+1, k) B_k = 0 for j >= 1.
  std::vector<Rational> b(n + 1);
  b[0] = 1;
  for (unsigned j = 1; j <= n; ++j) {
    Rational acc = 0;
    Integer binom = 1;  // C(j+1, k)
    for (unsigned k = 0; k < j; ++k) {
      acc += binom * b[k];
      binom = binom * (j + 1 - k) / (k + 1);
    }
    b[j] = -acc / (j + 1);
  }
  return b[n];
}

Rational bernoulli_polynomial(unsigned n, const Rational& x) {
  Rational acc = 0;
  Integer binom = 1;  // C(n, k)
  for (unsigned k = 0; k <= n; ++k) {
    Rational power = 1;
    for (unsigned e = 0; e < n - k; ++e) power *= x;
    acc += binom * bernoulli_number(k) * power;
    binom = binom * (n - k) / (k + 1);
  }
  return acc;
}

// ---------------------------------------------------------------------------
// Periodic characters

PeriodicChar::PeriodicChar(std::vector<long> values) : values_(std::move(values)) {
  if (values_.empty()) throw InvalidParameter("periodic function needs period >= 1");
  if (std::accumulate(values_.begin(), values_.end(), 0L) != 0) {
    throw InvalidParameter("periodic function must have mean zero");
  }
}

long PeriodicChar::operator()(long k) const {
  const long M = period();
  return values_[static_cast<std::size_t>(((k % M) + M) % M)];
}

std::vector<long> PeriodicChar::one_period() const {
  std::vector<long> out(values_.begin() + 1, values_.end());
  out.push_back(values_.front());
  return out;
}

PeriodicChar PeriodicChar::inflate(long c) const {
  if (c < 1) throw InvalidParameter("inflation factor must be positive");
  std::vector<long> out;
  out.reserve(values_.size() * static_cast<std::size_t>(c));
  for (long i = 0; i < c; ++i) out.insert(out.end(), values_.begin(), values_.end());
  return PeriodicChar(std::move(out));
}

PeriodicChar psi_pattern(long p, long a) {
  if (p < 1) throw InvalidParameter("psi period parameter p must be >= 1");
  const long M = 2 * p;
  std::vector<long> v(static_cast<std::size_t>(M), 0);
  v[static_cast<std::size_t>(((a % M) + M) % M)] += 1;
  v[static_cast<std::size_t>(((-a % M) + M) % M)] -= 1;
  return PeriodicChar(std::move(v));
}

PeriodicChar make_psi(long p, long a) {
  if (p < 2 || a <= 0 || a >= p) {
    throw InvalidParameter("psi_{2p}^{(a)} needs p >= 2 and 0 < a < p (p=" +
                           std::to_string(p) + ", a=" + std::to_string(a) + ")");
  }
  return psi_pattern(p, a);
}

PeriodicChar make_chi(long s, long t, long n, long m) {
  if (s < 1 || t < 1 || std::gcd(s, t) != 1) {
    throw InvalidParameter("chi needs coprime s, t >= 1");
  }
  if (n <= 0 || n >= s || m <= 0 || m >= t) {
    throw InvalidParameter("chi needs 0 < n < s and 0 < m < t");
  }
  const long M = 2 * s * t;
  auto mod = [M](long k) { return static_cast<std::size_t>(((k % M) + M) % M); };
  std::vector<long> v(static_cast<std::size_t>(M), 0);
  const long minus = n * t - m * s;
  const long plus = n * t + m * s;
  v[mod(minus)] = 1;
  v[mod(-minus)] = 1;
  v[mod(plus)] = -1;
  v[mod(-plus)] = -1;
  return PeriodicChar(std::move(v));
}

Rational l_value(const PeriodicChar& f, unsigned n) {
  const long M = f.period();
  Rational sum = 0;
  for (long k = 1; k <= M; ++k) {
    const long v = f(k);
    if (v != 0) sum += v * bernoulli_polynomial(n + 1, make_rational(k, M));
  }
  Integer Mn = 1;
  for (unsigned i = 0; i < n; ++i) Mn *= M;
  return -Rational(Mn) / (n + 1) * sum;
}

// ---------------------------------------------------------------------------
// Roots of unity

APComplex eval_at_root(std::span<const Term> terms, long N, Precision prec) {
  if (N < 1) throw InvalidParameter("root of unity order must be >= 1");
  const Precision work = with_guard(prec);
  APComplex acc(work);
  for (const auto& [e, c] : terms) {
    acc += APComplex::exp_i_pi(2 * e / N, work) * c;
  }
  return acc.rounded(prec);
}

std::vector<Integer> cyclotomic_polynomial(long M) {
  if (M < 1) throw InvalidParameter("cyclotomic order must be >= 1");
  std::map<long, std::vector<Integer>> memo;
  return cyclotomic_memo(M, memo);
}

CyclotomicSum::CyclotomicSum(long M) : M_(M), raw_(static_cast<std::size_t>(M)) {
  if (M < 1) throw InvalidParameter("cyclotomic order must be >= 1");
}

void CyclotomicSum::add(const Integer& power, long coefficient) {
  Integer r;
  mpz_fdiv_r_ui(r.get_mpz_t(), power.get_mpz_t(), static_cast<unsigned long>(M_));
  raw_[r.get_ui()] += coefficient;
}

std::vector<Integer> CyclotomicSum::coordinates() const {
  const std::vector<Integer> phi = cyclotomic_polynomial(M_);
  const std::size_t deg = phi.size() - 1;
  std::vector<Integer> rem = raw_;
  for (std::size_t i = rem.size(); i-- > deg;) {
    const Integer c = rem[i];
    if (c == 0) continue;
    for (std::size_t j = 0; j <= deg; ++j) rem[i - deg + j] -= c * phi[j];
  }
  rem.resize(deg);
  return rem;
}

bool CyclotomicSum::is_zero() const {
  const auto coords = coordinates();
  return std::all_of(coords.begin(), coords.end(),
                     [](const Integer& c) { return c == 0; });
}

}  // namespace qtorus
