#include <doctest.h>

#include "qtorus/errors.hpp"
#include "qtorus/harness.hpp"
#include "qtorus/knots.hpp"

#include <array>
#include <vector>

using namespace qtorus;

namespace {

Rational r(long a, long b = 1) { return make_rational(a, b); }

}  // namespace

TEST_CASE("tail gate is sound and tight") {
  for (const auto& [s, t, n, m] : std::vector<std::array<long, 4>>{
           {2, 3, 1, 1}, {2, 3, 1, 2}, {3, 4, 1, 1}, {3, 4, 2, 3}, {2, 5, 1, 2}}) {
    for (long N = 2; N <= 9; ++N) {
      // Compare far past the gate: agreement must reach the gate and stop there.
      const Rational gate = tail_gate(s, t, n, m, N);
      const VerifyReport report = verify_tail(s, t, n, m, N, gate);
      CHECK(report.passed);
      try {
        verify_tail(s, t, n, m, N, gate + 1);
        FAIL("gate not enforced");
      } catch (const StabilizationTooLow& e) {
        CHECK(e.needed_N() > N);
        CHECK(verify_tail(s, t, n, m, e.needed_N(), gate + 1).passed);
      }
    }
  }
}

TEST_CASE("tail gate matches the first discrepancy") {
  // Recompute both sides past the gate through the public pieces: the
  // finite-N expression first departs from the limit exactly at the gate.
  for (const auto& [s, t, n, m] : std::vector<std::array<long, 4>>{
           {2, 3, 1, 1}, {3, 4, 2, 3}, {2, 5, 1, 2}, {3, 5, 2, 1}}) {
    for (long N = 2; N <= 7; ++N) {
      const Rational gate = tail_gate(s, t, n, m, N);
      const Rational order = gate + 2;
      const Rational shift = make_rational(n * t * n * t + m * s * m * s, 4 * s * t) - r(N, 2);
      const QSeries lhs =
          QSeries::from_poly(jones_family_two(s, t, n, m, N).shifted(shift), order) -
          theta_series(PhiKind{s, t, n, m}, order).scaled(N);
      CHECK(agreement_order(lhs, char_singlet(VoaLabel{s, t, n, m}, order)) == gate);
    }
  }
  CHECK(tail_gate(2, 3, 1, 1, 4) == 4 + r(1, 24));
  CHECK(tail_needed_N(2, 3, 1, 1, r(30)) == 30);
  CHECK(tail_needed_N(2, 3, 1, 1, r(5)) == 5);
  CHECK_THROWS_AS(verify_tail(2, 3, 1, 1, 3, r(30)), StabilizationTooLow);
}

TEST_CASE("tail examples") {
  CHECK(verify_tail(3, 4, 1, 2, 10, r(10)).passed);
  const VerifyReport report = verify_tail(2, 3, 1, 1, 12, r(12));
  CHECK(report.passed);
  CHECK(*report.agreement_order == 12);
}

TEST_CASE("Kashaev invariants against Eichler limits") {
  for (const auto& [s, t, n, m] : std::vector<std::array<long, 4>>{
           {2, 3, 1, 1}, {2, 5, 1, 2}, {3, 4, 2, 3}}) {
    for (long N : {1L, 2L, 5L, 8L}) {
      const VerifyReport report = verify_kashaev_eichler(s, t, n, m, N, Precision{128});
      CHECK(report.passed);
      CHECK(*report.abs_error < 1e-15);
    }
  }
  for (long N = 1; N <= 6; ++N) {
    CHECK(verify_kashaev_knot(T22pKnot{2}, N, Precision{128}).passed);
    CHECK(verify_kashaev_knot(T22pKnot{3}, N, Precision{128}).passed);
    CHECK(verify_kashaev_knot(TstKnot{2, 3}, N, Precision{128}).passed);
    CHECK(verify_kashaev_knot(TstKnot{3, 4}, N, Precision{128}).passed);
  }
  CHECK_THROWS_AS(verify_kashaev_knot(T22pKnot{1}, 3, Precision{128}), InvalidParameter);
}

TEST_CASE("Gauss sums vanish") {
  CHECK(verify_gauss(2, 3, 1, 1, 7, Mode::Exact).passed);
  CHECK(verify_gauss(2, 3, 1, 1, 1, Mode::Exact).passed);
  const VerifyReport numeric = verify_gauss(3, 4, 2, 3, 5, Mode::Numeric);
  CHECK(numeric.passed);
  CHECK(*numeric.abs_error < 1e-25);
}

TEST_CASE("triple-link limits") {
  const long N_odd = 13, N_even = 12;
  CHECK(triple_gate(2, 3, 1, 1, N_odd) >= 12);
  CHECK(triple_gate(2, 3, 1, 1, N_even) >= 12);
  CHECK(verify_triple(2, 3, 1, 1, N_odd, r(12)).passed);
  CHECK(verify_triple(2, 3, 1, 1, N_even, r(12)).passed);
  CHECK_THROWS_AS(verify_triple(2, 3, 1, 1, 1, r(12)), StabilizationTooLow);
  // Gate soundness for both parities.
  for (long N = 2; N <= 7; ++N) {
    CHECK(verify_triple(3, 4, 1, 1, N, triple_gate(3, 4, 1, 1, N)).passed);
  }
}

TEST_CASE("Atiyah-Bott and transform checks") {
  CHECK(verify_ab(2, 3, 1, 1, Sign::Plus, r(60), r(40)).passed);
  CHECK(verify_ab(3, 4, 1, 3, Sign::Minus, r(40), r(30)).passed);
  CHECK(verify_ab(1, 2, 1, 1, Sign::Plus, r(60), r(60)).passed);
  CHECK(verify_transform(PsiKind{3, 1}, 0, 1, r(40), Precision{128}).passed);
  CHECK(verify_transform(PhiKind{2, 3, 1, 1}, r(1, 2), 1, r(40), Precision{128}).passed);
}

TEST_CASE("quantum modularity scaling") {
  const VerifyReport psi = verify_quantum_modularity(PsiKind{2, 1}, {20, 40, 80}, 1, Precision{128});
  CHECK(psi.passed);
  const VerifyReport single = verify_quantum_modularity(PsiKind{2, 1}, {20}, 0, Precision{128});
  CHECK(single.passed);
  CHECK_THROWS_AS(verify_quantum_modularity(PsiKind{2, 1}, {20, 30, 80}, 1, Precision{128}),
                  InvalidParameter);
}

TEST_CASE("report JSON round trip") {
  const std::vector<VerifyReport> reports = {
      verify_tail(2, 3, 1, 2, 6, r(5)), verify_gauss(2, 5, 1, 2, 4, Mode::Numeric),
      verify_quantum_modularity(PhiKind{2, 3, 1, 1}, {20, 40}, 0, Precision{96})};
  for (const auto& report : reports) CHECK(report_from_json(to_json(report)) == report);
  CHECK(reports_from_json(to_json(reports)) == reports);
  CHECK_THROWS_AS(report_from_json("{\"identity_id\": 3}"), InvalidParameter);
  const std::string table = summary_table(reports);
  CHECK(table.find("3/3 passed") != std::string::npos);
}

TEST_CASE("suite runner is order-preserving") {
  std::vector<SuiteItem> items;
  for (long N = 1; N <= 8; ++N) {
    items.push_back({IdentityId::Gauss, {{"N", N}},
                     [=] { return verify_gauss(3, 5, 2, 1, N, Mode::Exact); }});
  }
  items.push_back({IdentityId::Tail, {{"N", 2L}}, [] { return verify_tail(2, 3, 1, 1, 2, r(30)); }});
  auto strip = [](std::vector<VerifyReport> v) {
    for (auto& x : v) x.runtime_ms = 0;
    return v;
  };
  const auto one = strip(run_suite(items, 1));
  const auto four = strip(run_suite(items, 4));
  CHECK(one == four);
  CHECK(one.back().passed == false);
  CHECK(one.back().detail.find("needs N >=") != std::string::npos);
}
