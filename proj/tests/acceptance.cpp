// Acceptance run: one PASS/FAIL line per criterion, at the stated tolerances.
//
// Criterion 3 asks for order-30 tail agreement with N <= 15. The tail of
// J_N first departs from the singlet character at exponent N + Delta_{n,m,0}
// (see the tail gate), so order 30 needs N >= 30 and no N <= 15 can reach
// it. The line is printed as a known failure together with the check at
// the smallest certifying N; it does not fail the process. Any other FAIL
// does.

#include "qtorus/errors.hpp"
#include "qtorus/harness.hpp"
#include "qtorus/knots.hpp"
#include "qtorus/qseries.hpp"
#include "qtorus/thetas.hpp"
#include "qtorus/voa.hpp"

#ifdef QTORUS_HAVE_CLI
#include "cli.hpp"
#endif

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

using namespace qtorus;

namespace {

struct Outcome {
  bool passed;
  std::string detail;
};

int unexpected_failures = 0;

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void criterion(int id, const char* title, const std::function<Outcome()>& body,
               bool known_unattainable = false) {
  const auto start = std::chrono::steady_clock::now();
  Outcome outcome;
  try {
    outcome = body();
  } catch (const std::exception& e) {
    outcome = {false, std::string("exception: ") + e.what()};
  }
  const double elapsed = seconds_since(start);
  const char* tag = outcome.passed ? "PASS" : (known_unattainable ? "FAIL (known)" : "FAIL");
  std::printf("%-12s C%-2d %-44s %7.3fs  %s\n", tag, id, title, elapsed, outcome.detail.c_str());
  std::fflush(stdout);
  if (!outcome.passed && !known_unattainable) ++unexpected_failures;
}

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

using Label = std::array<long, 4>;

std::vector<Label> labels_of(const std::vector<std::pair<long, long>>& grid) {
  std::vector<Label> out;
  for (const auto& [s, t] : grid)
    for (long n = 1; n < s; ++n)
      for (long m = 1; m < t; ++m) out.push_back({s, t, n, m});
  return out;
}

const std::vector<std::pair<long, long>> kSmallGrid = {{2, 3}, {3, 4}, {2, 5}};

}  // namespace

int main() {
  const Precision prec{128};

  criterion(1, "trefoil colored Jones at N = 2", [] {
    const auto start = std::chrono::steady_clock::now();
    const LaurentPoly j = jones_torus_knot(2, 3, 2);
    const double ms = seconds_since(start) * 1e3;
    LaurentPoly expected;
    expected.add_term(-1, 1);
    expected.add_term(-3, 1);
    expected.add_term(-4, -1);
    const bool ok = j == expected && ms < 10.0;
    return Outcome{ok, to_display(j.terms()) + " in " + fmt(ms) + " ms (limit 10 ms)"};
  });

  criterion(2, "pentagonal identity to order 200", [] {
    const auto start = std::chrono::steady_clock::now();
    const bool equal = theta_series(PhiKind{2, 3, 1, 1}, 200) == eta_series(200);
    const double s = seconds_since(start);
    return Outcome{equal && s < 1.0, std::string(equal ? "equal termwise" : "differ") + " in " +
                                         fmt(s) + " s (limit 1 s)"};
  });

  const std::vector<Label> tail_labels = {
      {2, 3, 1, 1}, {2, 3, 1, 2}, {3, 4, 1, 1}, {3, 4, 2, 3}, {2, 5, 1, 2}};
  criterion(
      3, "tail theorem, order 30, N <= 15",
      [&] {
        std::string detail;
        bool ok = true;
        for (const auto& [s, t, n, m] : tail_labels) {
          const long needed = tail_needed_N(s, t, n, m, 30);
          if (needed > 15) {
            ok = false;
            detail += "(" + std::to_string(s) + "," + std::to_string(t) + "," + std::to_string(n) +
                      "," + std::to_string(m) + ") needs N=" + std::to_string(needed) +
                      " [N=15 gate q^" + to_string(tail_gate(s, t, n, m, 15)) + "]; ";
          }
        }
        return Outcome{ok, detail + "first discrepancy sits at q^(N + Delta_{n,m,0})"};
      },
      /*known_unattainable=*/true);

  criterion(3, "tail theorem, order 30, at the certifying N", [&] {
    const auto start = std::chrono::steady_clock::now();
    bool ok = true;
    std::string detail;
    for (const auto& [s, t, n, m] : tail_labels) {
      const long N = tail_needed_N(s, t, n, m, 30);
      const VerifyReport r = verify_tail(s, t, n, m, N, 30);
      ok = ok && r.passed;
      detail += "N=" + std::to_string(N) + ":q^" + to_string(*r.agreement_order) + " ";
    }
    const double sec = seconds_since(start);
    return Outcome{ok && sec < 30.0, detail + "(" + fmt(sec) + " s, limit 30 s)"};
  });

  criterion(4, "Kashaev-Eichler identity, 128 bits", [&] {
    const auto start = std::chrono::steady_clock::now();
    double worst = 0;
    bool ok = true;
    long count = 0;
    for (const auto& [s, t, n, m] : labels_of(kSmallGrid)) {
      for (long N : {2L, 3L, 5L, 8L}) {
        const VerifyReport r = verify_kashaev_eichler(s, t, n, m, N, prec);
        worst = std::max(worst, *r.abs_error);
        ok = ok && *r.abs_error < 1e-15;
        ++count;
      }
    }
    const double sec = seconds_since(start);
    return Outcome{ok && sec < 60.0, std::to_string(count) + " cases, max error " + fmt(worst) +
                                         " (< 1e-15), " + fmt(sec) + " s"};
  });

  criterion(5, "torus-knot Eichler identities, N = 2..10", [&] {
    double worst = 0;
    bool ok = true;
    for (long N = 2; N <= 10; ++N) {
      for (const KnotKind& kind : {KnotKind{T22pKnot{2}}, KnotKind{T22pKnot{3}},
                                   KnotKind{TstKnot{2, 3}}, KnotKind{TstKnot{3, 4}}}) {
        const VerifyReport r = verify_kashaev_knot(kind, N, prec);
        worst = std::max(worst, *r.abs_error);
        ok = ok && *r.abs_error < 1e-15;
      }
    }
    return Outcome{ok, "36 cases, max error " + fmt(worst) + " (< 1e-15)"};
  });

  criterion(6, "Gauss sums vanish exactly, N <= 12", [&] {
    long count = 0;
    bool ok = true;
    for (const auto& [s, t, n, m] : labels_of(kSmallGrid)) {
      for (long N = 1; N <= 12; ++N) {
        ok = ok && verify_gauss(s, t, n, m, N, Mode::Exact).passed;
        ++count;
      }
    }
    return Outcome{ok, std::to_string(count) + " sums, all zero in cyclotomic coordinates"};
  });

  criterion(7, "Atiyah-Bott equivalences (100 / 50)", [&] {
    const auto start = std::chrono::steady_clock::now();
    bool ok = true;
    long count = 0;
    for (const auto& [s, t, n, m] : labels_of(kSmallGrid)) {
      for (Sign sign : {Sign::Plus, Sign::Minus}) {
        ok = ok && verify_ab(s, t, n, m, sign, 100, 50).passed;
        ++count;
      }
    }
    // (1,2): the character is tilde Psi_2^{(1)} / eta.
    const bool one_two = verify_ab(1, 2, 1, 1, Sign::Plus, 100, 100).passed &&
                         ab_char_1t_numerator(2, 1, 0, 100) == eichler_series(PsiKind{2, 1}, 100);
    const double sec = seconds_since(start);
    return Outcome{ok && one_two && sec < 30.0,
                   std::to_string(count) + " labels x signs; (1,2) " +
                       (one_two ? "reproduces" : "misses") + " tilde Psi_2^(1); " + fmt(sec) + " s"};
  });

  criterion(8, "triple-link limits, orders 12 and 15", [&] {
    bool ok = true;
    std::string detail;
    for (const auto& [s, t, n, m] : std::vector<Label>{{2, 3, 1, 1}, {3, 4, 1, 1}}) {
      for (long order : {12L, 15L}) {
        for (long parity : {0L, 1L}) {
          long N = triple_needed_N(s, t, n, m, order);
          if (N % 2 != parity) ++N;
          while (triple_gate(s, t, n, m, N) < order) N += 2;
          const VerifyReport r = verify_triple(s, t, n, m, N, order);
          ok = ok && r.passed;
          detail += "N=" + std::to_string(N) + (r.passed ? " ok " : " BAD ");
        }
      }
    }
    return Outcome{ok, detail};
  });

  criterion(9, "quantum-modularity error scaling", [&] {
    bool ok = true;
    std::string detail;
    for (const ThetaKind& kind : {ThetaKind{PsiKind{2, 1}}, ThetaKind{PhiKind{2, 3, 1, 1}}}) {
      for (long K = 0; K <= 2; ++K) {
        const VerifyReport r = verify_quantum_modularity(kind, {20, 40, 80}, K, prec);
        ok = ok && r.passed;
        const auto pos = r.detail.find("ratios ");
        detail += to_string(kind) + " K=" + std::to_string(K) + " [" +
                  r.detail.substr(pos + 7, r.detail.find(';', pos) - pos - 7) + "] ";
      }
    }
    return Outcome{ok, detail};
  });

  criterion(10, "S-transform residuals at tau = i", [&] {
    std::vector<ThetaKind> kinds;
    for (long p = 2; p <= 4; ++p)
      for (long a = 1; a < p; ++a) kinds.push_back(PsiKind{p, a});
    for (const auto& [s, t, n, m] : labels_of({{2, 3}, {3, 4}})) kinds.push_back(PhiKind{s, t, n, m});
    double worst = 0;
    bool ok = true;
    for (const auto& kind : kinds) {
      const VerifyReport r = verify_transform(kind, 0, 1, 40, prec);
      worst = std::max(worst, *r.abs_error);
      ok = ok && r.passed && *r.abs_error < 1e-20;
    }
    return Outcome{ok, std::to_string(kinds.size()) + " kinds, max residual " + fmt(worst) +
                           " (< 1e-20), T diagonal"};
  });

  criterion(11, "suite reproducible across 1/4/8 threads", [&] {
    std::vector<std::string> outputs;
    for (const char* threads : {"1", "4", "8"}) {
#ifdef QTORUS_HAVE_CLI
      const char* argv[] = {"qtorus", "--threads", threads, "--omit-timing", "suite"};
      std::ostringstream out, err;
      cli::run(5, argv, out, err);
      outputs.push_back(out.str());
#else
      SuiteOptions options;
      options.threads = static_cast<unsigned>(std::stoul(threads));
      outputs.push_back(to_json(run_suite(standard_suite(options), options.threads), false));
#endif
    }
    const bool same = outputs[0] == outputs[1] && outputs[1] == outputs[2] && !outputs[0].empty();
    const auto reports = reports_from_json(outputs[0]);
    long passed = 0;
    for (const auto& r : reports) passed += r.passed ? 1 : 0;
    return Outcome{same, std::string(same ? "byte-identical" : "outputs differ") + " (" +
                             std::to_string(reports.size()) + " reports, " +
                             std::to_string(passed) + " passing)"};
  });

  std::printf("unexpected failures: %d\n", unexpected_failures);
  return unexpected_failures == 0 ? 0 : 1;
}
