/**
 * @file voa.hpp
 * @brief Characters of (s,t)-log VOA modules and their sl_2 Atiyah-Bott
 * (Weyl-alternating) constructions.
 *
 * Functions named *_numerator return eta * character as an exact series;
 * the others return the character itself, divided by eta through exact
 * series inversion. Sl_2 weights are integers in units of the fundamental
 * weight (alpha = 2, rho = 1); the dot action of the reflection is
 * beta -> -beta - 2.
 */

#pragma once

#include "qtorus/exactq.hpp"
#include "qtorus/qseries.hpp"

#include <string>

namespace qtorus {

enum class Sign { Plus, Minus };

std::string to_string(Sign sign);
/// "+" / "-" / "plus" / "minus".
Sign parse_sign(std::string_view text);

struct VoaLabel {
  long s;
  long t;
  long n;
  long m;
  Sign sign = Sign::Plus;

  /// Irreducible-module window: gcd(s,t) = 1, 0 < n < s, 0 < m < t.
  void validate() const;
};

/// (ms - nt + stk)^2 / 4st.
Rational delta(long s, long t, long n, long m, long k);

/// 1 - 6 (s-t)^2 / st.
Rational central_charge(long s, long t);

/// ch V^+ = sum_k q^{Delta_{n,m,2k}} / eta, ch V^- with 2k+1; 1 <= n <= s,
/// 1 <= m <= t.
QSeries char_lattice(const VoaLabel& label, const Rational& order);

/// eta * ch X^+ = sum_k k^2 (q^{(2stk-nt-ms)^2/4st} - q^{(2stk-nt+ms)^2/4st});
/// eta * ch X^- uses k(k+1) and the half-step shift 2stk + st.
QSeries char_X_numerator(const VoaLabel& label, const Rational& order);
QSeries char_X(const VoaLabel& label, const Rational& order);

/// eta * (weight-zero part). Plus: the |k|-weighted bilateral sum; it is
/// also rebuilt from Eichler integrals (singlet_eichler_combination) and the
/// two must agree termwise, else IdentityViolation. Minus: the weight-zero
/// slice is empty for odd lattice weights, so this returns the lowest
/// nonempty slice (h = fundamental weight), the k(k+1) form reweighted by
/// min(|k|, |k+1|).
QSeries char_singlet(const VoaLabel& label, const Rational& order);

/// (1/st)(tilde Phi^{(n,m)} + (nt-ms)/2 tilde Psi_{st}^{(nt-ms)}
///        - (nt+ms)/2 tilde Psi_{st}^{(nt+ms)}),
/// with out-of-window Psi indices read as the periodic +-1 pattern.
QSeries singlet_eichler_combination(long s, long t, long n, long m,
                                    const Rational& order);

/// k (q^{Delta_{s-n,m,-2k+1}} - q^{Delta_{s-n,t-m,-2k}} - q^{Delta_{n,m,-2k}}
///    + q^{Delta_{n,t-m,-2k-1}}), i.e. eta times the character of the
/// Virasoro module labelled by the odd index 2k-1. k >= 1.
QSeries jmod_numerator(long s, long t, long n, long m, long k, const Rational& order);
QSeries char_Jmod(long s, long t, long n, long m, long k, const Rational& order);

/// Dimension of the gamma weight space of L(beta): 1 iff |gamma| <= beta
/// and gamma = beta mod 2. beta >= 0.
long sl2_weight_multiplicity(long beta, long gamma);

/// (z^{beta+1} - z^{-beta-1}) / (z - z^{-1}) as a Laurent polynomial in z.
QZSeries::ZPoly weyl_character(long beta);

/// Character of the weight-gamma part of the (1,t) module labelled m,
/// 1 <= m <= t, from sum_{beta} m_{beta,gamma} (ch V^{h=beta} - ch V^{h=-beta-2}).
/// gamma = 0 gives (1/eta) sum_{k>=0} (q^{Delta_{m,-2k}} - q^{Delta_{t-m,-2k-1}})
/// with Delta_{m,k} = (m - t + kt)^2 / 4t.
QSeries ab_char_1t_numerator(long t, long m, long gamma, const Rational& order);
QSeries ab_char_1t(long t, long m, long gamma, const Rational& order);

/// The Atiyah-Bott double sum over k, k' >= 0, ungraded:
///   plus:  sum m_{2k,0}   (q^{Delta_{s-n,m,-2j+1}} - q^{Delta_{s-n,t-m,-2j}}
///                          - q^{Delta_{n,m,-2j}} + q^{Delta_{n,t-m,-2j-1}}),
///   minus: sum m_{2k+1,1} (q^{Delta_{s-n,m,-2j}} - q^{Delta_{s-n,t-m,-2j-1}}
///                          - q^{Delta_{n,m,-2j-1}} + q^{Delta_{n,t-m,-2j-2}}),
/// with j = k + k' + 1.
QSeries ab_char_st_numerator(const VoaLabel& label, const Rational& order);
QSeries ab_char_st(const VoaLabel& label, const Rational& order);

/// The z-graded version: the multiplicity is replaced by the Weyl character
/// ch_z L(2k) (plus) or ch_z L(2k+1) (minus). At z = 1 it reproduces
/// char_X. The minus grading is not displayed in the literature and follows
/// the same diagonal pattern.
QZSeries ab_char_st_graded_numerator(const VoaLabel& label, const Rational& order);
QZSeries ab_char_st_graded(const VoaLabel& label, const Rational& order);

}  // namespace qtorus
