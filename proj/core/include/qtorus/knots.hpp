/**
 * @file knots.hpp
 * @brief Colored Jones polynomials of torus knots and of the 2- and
 * 3-component torus links obtained by cabling, the labelled Laurent families
 * built from them, and Kashaev invariants (values at q = e^{2 pi i/N}).
 *
 * All polynomials are normalized so that the unknot has J_N = 1. The sums
 * over half-integer r run over an integer index with r rebuilt as a
 * Rational, so no floating bounds appear anywhere.
 */

#pragma once

#include "qtorus/exactq.hpp"
#include "qtorus/qseries.hpp"

namespace qtorus {

/// Parameters of T_{s,t} (components = 1), T_{2s,2t} (2) or T_{3s,3t} (3),
/// colored by the N-dimensional representation. (n, m) selects a member of
/// the labelled Laurent family; (1, 1) is the link itself.
struct TorusParams {
  long s = 2;
  long t = 3;
  long N = 1;
  long n = 1;
  long m = 1;
  int components = 1;

  /// gcd(s,t) = 1, s,t >= 1, N >= 1, n,m >= 1, components in {1,2,3}.
  void validate() const;
};

/// Throws InvalidParameter unless s,t >= 1 and gcd(s,t) = 1.
void require_coprime(long s, long t);

/// J_N(q; T_{s,t}), 0-framing.
LaurentPoly jones_torus_knot(long s, long t, long N);

/// J_N(q; T_{2,2p}).
LaurentPoly jones_T2_2p(long p, long N);

/// J_N(q; T_{2s,2t}) from the double (j,k) sum.
LaurentPoly jones_torus_link(long s, long t, long N);

/// J_N(q; T_{3s,3t}) from the triple (b,c,r) sum.
LaurentPoly jones_torus_link3(long s, long t, long N);

/// The labelled family for T_{2s,2t}; any n, m >= 1 is accepted.
/// For (n,m) = (1,1) it equals q^{-st(1-N^2)} J_N(q; T_{2s,2t}).
LaurentPoly jones_family_two(long s, long t, long n, long m, long N);

/// The labelled family for T_{3s,3t}; for (1,1) it equals
/// q^{-(9/4)st(1-N^2)} J_N(q; T_{3s,3t}).
LaurentPoly jones_family_three(long s, long t, long n, long m, long N);

/// The polynomial selected by `params.components` (the labelled family
/// when components >= 2 and (n,m) != (1,1)).
LaurentPoly jones_polynomial(const TorusParams& params);

/// The two-component family at q = zeta_N through the reduced closed form
///   -( f(0) + (1/N) sum_{k=1}^{N-1} [(N-k) f(k) + k f(k-N)] ),
/// with f(r) = A zeta^A - B zeta^B for the two summand exponents A, B.
/// The overall minus sign comes from zeta_N^{N/2} = -1 in the derivative
/// of the denominator.
APComplex family_two_at_root_reduced(long s, long t, long n, long m, long N,
                                     Precision prec);

/// The same value by evaluating the polynomial; both routes are computed
/// and must agree to 2^{-prec+16} (relative to max(1, |value|)), else
/// PrecisionFailure.
APComplex family_two_at_root(long s, long t, long n, long m, long N,
                             Precision prec);

/// <K>_N = J_N(zeta_N; K). For two-component links the value is also
/// rebuilt as zeta_N^{st} times the reduced closed form and the two routes
/// are cross-checked as in family_two_at_root.
APComplex kashaev_invariant(const TorusParams& params, Precision prec);

}  // namespace qtorus
