/**
 * @file harness.hpp
 * @brief Executable checks of the identities tying the knot invariants, the
 * Eichler integrals and the VOA characters together, with machine-readable
 * reports and a deterministic parallel suite runner.
 *
 * Every check computes its two sides through separate code paths: the
 * polynomial route (knots) against the series/character route (thetas,
 * voa). Large-N limits are checked at finite N below an explicit
 * stabilization exponent; see tail_gate and triple_gate.
 */

#pragma once

#include "qtorus/exactq.hpp"
#include "qtorus/thetas.hpp"
#include "qtorus/voa.hpp"

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace qtorus {

enum class IdentityId {
  Tail,
  KashaevEichler,
  KashaevKnot,
  Gauss,
  QuantumModularity,
  Triple,
  AtiyahBott,
  Transform,
};

enum class Mode { Exact, Numeric };

std::string to_string(IdentityId id);
IdentityId parse_identity(std::string_view text);
std::string to_string(Mode mode);
Mode parse_mode(std::string_view text);

using ParamValue = std::variant<long, std::string>;
using Params = std::vector<std::pair<std::string, ParamValue>>;

struct VerifyReport {
  IdentityId identity = IdentityId::Tail;
  Params params;
  Mode mode = Mode::Exact;
  /// Exact mode: first exponent where the two sides differ (capped at the
  /// requested order), when the check compares series.
  std::optional<Rational> agreement_order;
  /// Numeric mode: the measured error (rounded to double).
  std::optional<double> abs_error;
  bool passed = false;
  long runtime_ms = 0;
  /// Free-form supporting facts (ratios, gate values, coordinates).
  std::string detail;

  friend bool operator==(const VerifyReport&, const VerifyReport&) = default;
};

/// {"identity_id", "params", "mode", "agreement_order" | "abs_error",
///  "passed", "runtime_ms", "detail"}; rationals as "a/b" strings.
std::string to_json(const VerifyReport& report, bool with_timing = true);
std::string to_json(const std::vector<VerifyReport>& reports, bool with_timing = true);
VerifyReport report_from_json(std::string_view text);
std::vector<VerifyReport> reports_from_json(std::string_view text);
/// Fixed-width table, one row per report, with a pass count footer.
std::string summary_table(const std::vector<VerifyReport>& reports);

// ---------------------------------------------------------------------------
// Stabilization gates. Below the gate exponent, the finite-N expression
// equals its large-N limit exactly; the first discrepancy sits at the gate.

/// min(N + Delta_{n,m,0}, lowest exponent of the (N+1)-th Virasoro bracket).
Rational tail_gate(long s, long t, long n, long m, long N);
/// N + the lowest exponent of the Phi series subtracted for this parity.
Rational triple_gate(long s, long t, long n, long m, long N);
/// Smallest N >= 1 whose gate reaches `order`.
long tail_needed_N(long s, long t, long n, long m, const Rational& order);
long triple_needed_N(long s, long t, long n, long m, const Rational& order);

// ---------------------------------------------------------------------------
// Checks.

/// q^{((nt)^2+(ms)^2)/4st - N/2} J_N - N Phi^{(n,m)} against eta * ch X^+ at
/// weight zero, up to `order`. Throws StabilizationTooLow when the gate is
/// below `order`.
VerifyReport verify_tail(long s, long t, long n, long m, long N, const Rational& order);

/// (1/N) zeta^{((nt)^2+(ms)^2)/4st} J_N(zeta) against
/// -tilde Phi(1/N) - (nt-ms)/2 tilde Psi^{(nt-ms)}(1/N)
///                 + (nt+ms)/2 tilde Psi^{(nt+ms)}(1/N); tolerance 2^{-prec/2}.
VerifyReport verify_kashaev_eichler(long s, long t, long n, long m, long N, Precision prec);

struct T22pKnot {
  long p;
};
struct TstKnot {
  long s;
  long t;
};
using KnotKind = std::variant<T22pKnot, TstKnot>;

/// <T_{2,2p}>_N = -pN zeta^{(3p^2-1)/4p} tilde Psi_p^{(p-1)}(1/N) or
/// <T_{s,t}>_N = zeta^{(s^2t^2-s^2-t^2)/4st} tilde Phi^{(s-1,1)}(1/N).
VerifyReport verify_kashaev_knot(const KnotKind& kind, long N, Precision prec);

/// sum_{k<N} (zeta^{(2stk-(nt+ms))^2/4st} - zeta^{(2stk+(nt-ms))^2/4st}) = 0,
/// exactly in Q(zeta_{4stN}) or below 1e-25 numerically.
VerifyReport verify_gauss(long s, long t, long n, long m, long N, Mode mode,
                          Precision prec = Precision{});

/// Asymptotic-expansion errors at a geometric list of N must shrink like
/// N^{-K-1}: each consecutive ratio within [rho^{-K-2}, rho^{-K}], rho the
/// common ratio of the list (2 for 20, 40, 80).
VerifyReport verify_quantum_modularity(const ThetaKind& kind, const std::vector<long>& Ns,
                                       long K, Precision prec);

/// Odd N: q^{...} J^{(3)}_N - (3N^2+1)/4 Phi^{(n,m)} against eta ch X^+;
/// even N: q^{...} J^{(3)}_N + (3N^2/4) Phi^{(s-n,m)} against eta ch X^-.
VerifyReport verify_triple(long s, long t, long n, long m, long N, const Rational& order);

/// s >= 2: the ungraded Atiyah-Bott sum equals the singlet to `order` and
/// the graded one at z = 1 equals ch X to `graded_order` (numerators).
/// s = 1: the (1,t) weight-zero character equals tilde Psi_t^{(t-m)}.
VerifyReport verify_ab(long s, long t, long n, long m, Sign sign, const Rational& order,
                       const Rational& graded_order);

/// S-transformation residual at tau = tau_re + i tau_im below 2^{-prec/2},
/// and the exact T check.
VerifyReport verify_transform(const ThetaKind& kind, const Rational& tau_re,
                              const Rational& tau_im, const Rational& order, Precision prec);

// ---------------------------------------------------------------------------
// Suite.

struct SuiteOptions {
  Precision precision{};
  /// Comparison order for the tail, triple and Atiyah-Bott checks.
  Rational order = 12;
  unsigned threads = 1;
};

struct SuiteItem {
  IdentityId identity;
  Params params;
  std::function<VerifyReport()> run;
};

/// The standard grid: (s,t) in {(2,3),(3,4),(2,5),(3,5)}, every in-window
/// label, N chosen by the gates.
std::vector<SuiteItem> standard_suite(const SuiteOptions& options);

/// Runs items on `threads` workers; the output order is the input order
/// regardless of scheduling. An exception inside an item becomes a failed
/// report carrying the message.
std::vector<VerifyReport> run_suite(const std::vector<SuiteItem>& items, unsigned threads);

}  // namespace qtorus
