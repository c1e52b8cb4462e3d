#include "cli.hpp"

#include "qtorus/errors.hpp"
#include "qtorus/harness.hpp"
#include "qtorus/knots.hpp"
#include "qtorus/qseries.hpp"
#include "qtorus/thetas.hpp"
#include "qtorus/voa.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <ostream>
#include <sstream>
#include <thread>

namespace qtorus::cli {

namespace {

using Json = nlohmann::ordered_json;

enum class Output { Text, Json, Csv };

struct CliConfig {
  long precision_bits = Precision::kDefaultBits;
  std::string order = "50";
  std::string output;  // empty: the subcommand's natural format
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  bool omit_timing = false;

  Precision precision() const { return Precision{precision_bits}; }

  Rational order_value() const {
    const Rational o = parse_rational(order);
    if (o <= 0) throw InvalidParameter("order must be > 0");
    return o;
  }

  Output format(Output fallback) const {
    if (output.empty()) return fallback;
    if (output == "text") return Output::Text;
    if (output == "json") return Output::Json;
    return Output::Csv;
  }
};

// Flags shared by the computing subcommands; unused ones keep defaults.
struct Args {
  long s = 2, t = 3, n = 1, m = 1, N = 1, components = 1;
  long p = 2, K = 0, gamma = 0;
  std::string kind;
  std::string sign = "+";
  std::string route = "direct";
  std::string mode = "exact";
  std::string knot = "Tst";
  std::string tau_re = "0", tau_im = "1";
  std::string graded_order;
  std::vector<long> Ns{20, 40, 80};
  bool eta_numerator = false;
};

int digits_for(Precision prec) { return static_cast<int>(prec.bits() * 0.30103); }

Json integer_json(const Integer& z) {
  if (z.fits_slong_p()) return Json(z.get_si());
  return Json(z.get_str());
}

void emit_terms(std::ostream& out, Output format, const TermMap& terms,
                const std::optional<Rational>& order) {
  switch (format) {
    case Output::Text: {
      std::string text = terms.empty() ? "0" : to_display(terms);
      if (order) text += " + O(q^(" + to_string(*order) + "))";
      out << text << "\n";
      break;
    }
    case Output::Json: {
      Json j;
      if (order) j["order"] = to_string(*order);
      Json arr = Json::array();
      for (const auto& [e, c] : terms) {
        arr.push_back({integer_json(e.get_num()), integer_json(e.get_den()),
                       integer_json(c.get_num()), integer_json(c.get_den())});
      }
      j["terms"] = std::move(arr);
      out << j.dump() << "\n";
      break;
    }
    case Output::Csv:
      out << to_csv(terms);
      break;
  }
}

void emit_zseries(std::ostream& out, Output format, const QZSeries& series) {
  switch (format) {
    case Output::Text:
      for (const auto& [e, zpoly] : series.terms()) {
        TermMap z;
        for (const auto& [k, c] : zpoly) z.emplace(Rational(k), c);
        std::string poly = to_display(z);
        // to_display speaks q; here the inner variable is z.
        for (std::size_t pos = 0; (pos = poly.find('q', pos)) != std::string::npos;) poly[pos] = 'z';
        out << "q^(" << to_string(e) << "): " << poly << "\n";
      }
      out << "O(q^(" << to_string(series.order()) << "))\n";
      break;
    case Output::Json: {
      Json arr = Json::array();
      for (const auto& [e, zpoly] : series.terms()) {
        for (const auto& [k, c] : zpoly) {
          arr.push_back({integer_json(e.get_num()), integer_json(e.get_den()), k,
                         integer_json(c.get_num()), integer_json(c.get_den())});
        }
      }
      Json j;
      j["order"] = to_string(series.order());
      j["terms"] = std::move(arr);
      out << j.dump() << "\n";
      break;
    }
    case Output::Csv:
      out << "exponent,z_exponent,coefficient\n";
      for (const auto& [e, zpoly] : series.terms()) {
        for (const auto& [k, c] : zpoly) out << to_string(e) << "," << k << "," << to_string(c) << "\n";
      }
      break;
  }
}

void emit_complex(std::ostream& out, Output format, const APComplex& z, Precision prec) {
  const int digits = digits_for(prec);
  switch (format) {
    case Output::Text:
      out << z.to_string(digits) << "\n";
      break;
    case Output::Json: {
      Json j;
      j["re"] = z.real().to_string(digits);
      j["im"] = z.imag().to_string(digits);
      out << j.dump() << "\n";
      break;
    }
    case Output::Csv:
      out << "re,im\n" << z.real().to_string(digits) << "," << z.imag().to_string(digits) << "\n";
      break;
  }
}

int emit_reports(std::ostream& out, std::ostream& err, Output format,
                 const std::vector<VerifyReport>& reports, bool with_timing, bool single) {
  switch (format) {
    case Output::Json:
      out << (single ? to_json(reports.front(), with_timing) : to_json(reports, with_timing)) << "\n";
      if (!single) err << summary_table(reports);
      break;
    case Output::Text:
      out << summary_table(reports);
      break;
    case Output::Csv: {
      out << "identity,mode,agreement_order,abs_error,passed\n";
      for (const auto& r : reports) {
        out << to_string(r.identity) << "," << to_string(r.mode) << ","
            << (r.agreement_order ? to_string(*r.agreement_order) : "") << ","
            << (r.abs_error ? (std::ostringstream() << *r.abs_error).str() : "") << ","
            << (r.passed ? "true" : "false") << "\n";
      }
      break;
    }
  }
  for (const auto& r : reports) {
    if (!r.passed) return 1;
  }
  return 0;
}

TorusParams torus_params(const Args& a) {
  TorusParams params;
  params.s = a.s;
  params.t = a.t;
  params.N = a.N;
  params.n = a.n;
  params.m = a.m;
  params.components = a.components;
  return params;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CliConfig config;
  Args args;

  CLI::App app{"qtorus: torus-knot invariants, false theta functions and log-VOA characters"};
  app.name("qtorus");
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--precision", config.precision_bits, "working precision in bits (>= 53)")
      ->envname("QTORUS_PRECISION")
      ->check(CLI::Range(53L, 1L << 20));
  app.add_option("--order", config.order, "series order, an integer or a/b (> 0)")
      ->envname("QTORUS_ORDER");
  app.add_option("--output", config.output, "text | json | csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--threads", config.threads, "worker threads for `suite`")
      ->envname("QTORUS_THREADS")
      ->check(CLI::Range(1u, 1024u));
  app.add_flag("--omit-timing", config.omit_timing, "leave runtime_ms out of JSON reports");

  auto label_flags = [&](CLI::App* sub, bool required) {
    auto* so = sub->add_option("--s", args.s, "torus parameter s");
    auto* to = sub->add_option("--t", args.t, "torus parameter t");
    sub->add_option("--n", args.n, "label n");
    sub->add_option("--m", args.m, "label m");
    if (required) {
      so->required();
      to->required();
    }
  };
  auto color_flag = [&](CLI::App* sub, bool required) {
    auto* o = sub->add_option("--N", args.N, "color / root-of-unity order N");
    if (required) o->required();
  };
  auto kind_flag = [&](CLI::App* sub) {
    sub->add_option("--kind", args.kind, "Psi{p,a} or Phi{s,t,n,m}")->required();
  };

  auto* jones = app.add_subcommand("jones", "colored Jones polynomial (exact)");
  label_flags(jones, true);
  color_flag(jones, true);
  jones->add_option("--components", args.components, "1 knot, 2 or 3 link components")
      ->check(CLI::Range(1, 3));

  auto* kashaev = app.add_subcommand("kashaev", "Kashaev invariant: the Jones polynomial at q = e^{2 pi i/N}");
  label_flags(kashaev, true);
  color_flag(kashaev, true);
  kashaev->add_option("--components", args.components, "1, 2 or 3")->check(CLI::Range(1, 3));

  auto* theta = app.add_subcommand("theta", "unary theta series Psi / Phi");
  kind_flag(theta);
  auto* eichler = app.add_subcommand("eichler", "Eichler integral series");
  kind_flag(eichler);
  auto* limit = app.add_subcommand("eichler-limit", "Eichler integral at tau -> 1/N");
  kind_flag(limit);
  color_flag(limit, true);
  auto* asym = app.add_subcommand("asymptotic", "asymptotic expansion in 1/N against the limit");
  kind_flag(asym);
  color_flag(asym, true);
  asym->add_option("--K", args.K, "truncation index")->check(CLI::Range(0, 20));

  auto* voa = app.add_subcommand("voa-char", "log-VOA module characters");
  label_flags(voa, true);
  voa->add_option("--sign", args.sign, "+ or -");
  voa->add_option("--route", args.route, "direct | singlet | ab | ab-graded | lattice")
      ->check(CLI::IsMember({"direct", "singlet", "ab", "ab-graded", "lattice"}));
  voa->add_option("--gamma", args.gamma, "sl_2 weight for the s = 1 Atiyah-Bott route");
  voa->add_flag("--eta-numerator", args.eta_numerator, "print eta * character");

  auto* verify = app.add_subcommand("verify", "check one identity");
  verify->require_subcommand(1);
  auto* v_tail = verify->add_subcommand("tail", "large-N tail against the singlet character");
  label_flags(v_tail, true);
  color_flag(v_tail, true);
  auto* v_ke = verify->add_subcommand("kashaev-eichler", "labelled Kashaev invariant against Eichler limits");
  label_flags(v_ke, true);
  color_flag(v_ke, true);
  auto* v_knot = verify->add_subcommand("kashaev-knot", "torus-knot Kashaev invariants against Eichler limits");
  v_knot->add_option("--knot", args.knot, "T2_2p or Tst")->check(CLI::IsMember({"T2_2p", "Tst"}));
  v_knot->add_option("--p", args.p, "p for T(2,2p)");
  label_flags(v_knot, false);
  color_flag(v_knot, true);
  auto* v_gauss = verify->add_subcommand("gauss", "Gauss-sum vanishing");
  label_flags(v_gauss, true);
  color_flag(v_gauss, true);
  v_gauss->add_option("--mode", args.mode, "exact | numeric")
      ->check(CLI::IsMember({"exact", "numeric"}));
  auto* v_qm = verify->add_subcommand("quantum-modularity", "error scaling of the asymptotic expansion");
  kind_flag(v_qm);
  v_qm->add_option("--Ns", args.Ns, "geometric list of N")->delimiter(',');
  v_qm->add_option("--K", args.K, "truncation index")->check(CLI::Range(0, 4));
  auto* v_triple = verify->add_subcommand("triple", "three-component large-N limits");
  label_flags(v_triple, true);
  color_flag(v_triple, true);
  auto* v_ab = verify->add_subcommand("ab", "Atiyah-Bott character equivalences");
  label_flags(v_ab, true);
  v_ab->add_option("--sign", args.sign, "+ or -");
  v_ab->add_option("--graded-order", args.graded_order, "order for the graded check (default: --order)");
  auto* v_transform = verify->add_subcommand("transform", "S/T transformation of theta series");
  kind_flag(v_transform);
  v_transform->add_option("--tau-re", args.tau_re, "Re tau (rational)");
  v_transform->add_option("--tau-im", args.tau_im, "Im tau (rational, > 0)");

  auto* suite = app.add_subcommand("suite", "run the standard verification grid");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    err << app.help();
    return 2;
  }

  try {
    const Precision prec = config.precision();
    const bool timing = !config.omit_timing;

    if (*jones) {
      const LaurentPoly poly = jones_polynomial(torus_params(args));
      emit_terms(out, config.format(Output::Text), poly.terms(), std::nullopt);
      return 0;
    }
    if (*kashaev) {
      emit_complex(out, config.format(Output::Text), kashaev_invariant(torus_params(args), prec), prec);
      return 0;
    }
    if (*theta || *eichler) {
      const ThetaKind kind = parse_theta_kind(args.kind);
      const Rational order = config.order_value();
      const QSeries series = *theta ? theta_series(kind, order) : eichler_series(kind, order);
      emit_terms(out, config.format(Output::Text), series.terms(), order);
      return 0;
    }
    if (*limit) {
      emit_complex(out, config.format(Output::Text),
                   eichler_limit(parse_theta_kind(args.kind), args.N, prec), prec);
      return 0;
    }
    if (*asym) {
      const AsymptoticReport report =
          asymptotic_expansion(parse_theta_kind(args.kind), args.N, args.K, prec);
      const int digits = digits_for(prec);
      const Output format = config.format(Output::Text);
      if (format == Output::Json) {
        Json j;
        j["N"] = report.N;
        j["K"] = report.K;
        j["lhs"] = {{"re", report.lhs.real().to_string(digits)}, {"im", report.lhs.imag().to_string(digits)}};
        j["rhs"] = {{"re", report.rhs.real().to_string(digits)}, {"im", report.rhs.imag().to_string(digits)}};
        j["abs_error"] = report.abs_error.to_string(6);
        j["predicted_next_term"] = report.predicted_next_term.to_string(6);
        out << j.dump() << "\n";
      } else if (format == Output::Csv) {
        out << "N,K,abs_error,predicted_next_term\n"
            << report.N << "," << report.K << "," << report.abs_error.to_string(6) << ","
            << report.predicted_next_term.to_string(6) << "\n";
      } else {
        out << "lhs                 " << report.lhs.to_string(digits) << "\n"
            << "rhs                 " << report.rhs.to_string(digits) << "\n"
            << "abs_error           " << report.abs_error.to_string(6) << "\n"
            << "predicted_next_term " << report.predicted_next_term.to_string(6) << "\n";
      }
      return 0;
    }
    if (*voa) {
      const Rational order = config.order_value();
      const Output format = config.format(Output::Text);
      const VoaLabel label{args.s, args.t, args.n, args.m, parse_sign(args.sign)};
      const bool numerator = args.eta_numerator;
      if (args.route == "ab-graded") {
        if (args.s == 1) throw InvalidParameter("the graded route needs s >= 2");
        emit_zseries(out, format,
                     numerator ? ab_char_st_graded_numerator(label, order) : ab_char_st_graded(label, order));
        return 0;
      }
      const Rational shift = numerator ? Rational(0) : make_rational(1, 24);
      QSeries num(order);
      if (args.route == "ab" && args.s == 1) {
        num = ab_char_1t_numerator(args.t, args.m, args.gamma, order + shift);
      } else if (args.route == "lattice") {
        const QSeries ch = char_lattice(label, order);
        emit_terms(out, format, (numerator ? ch * eta_series(order + 1) : ch).truncated(order).terms(), order);
        return 0;
      } else if (args.route == "direct") {
        num = char_X_numerator(label, order + shift);
      } else if (args.route == "singlet") {
        num = char_singlet(label, order + shift);
      } else {
        num = ab_char_st_numerator(label, order + shift);
      }
      const QSeries series = numerator ? num : divide_by_eta(num, order);
      emit_terms(out, format, series.terms(), order);
      return 0;
    }
    if (*verify) {
      const Output format = config.format(Output::Json);
      VerifyReport report;
      if (*v_tail) {
        report = verify_tail(args.s, args.t, args.n, args.m, args.N, config.order_value());
      } else if (*v_ke) {
        report = verify_kashaev_eichler(args.s, args.t, args.n, args.m, args.N, prec);
      } else if (*v_knot) {
        const KnotKind kind = args.knot == "T2_2p" ? KnotKind{T22pKnot{args.p}}
                                                   : KnotKind{TstKnot{args.s, args.t}};
        report = verify_kashaev_knot(kind, args.N, prec);
      } else if (*v_gauss) {
        report = verify_gauss(args.s, args.t, args.n, args.m, args.N, parse_mode(args.mode), prec);
      } else if (*v_qm) {
        report = verify_quantum_modularity(parse_theta_kind(args.kind), args.Ns, args.K, prec);
      } else if (*v_triple) {
        report = verify_triple(args.s, args.t, args.n, args.m, args.N, config.order_value());
      } else if (*v_ab) {
        const Rational order = config.order_value();
        const Rational graded = args.graded_order.empty() ? order : parse_rational(args.graded_order);
        report = verify_ab(args.s, args.t, args.n, args.m, parse_sign(args.sign), order, graded);
      } else {
        report = verify_transform(parse_theta_kind(args.kind), parse_rational(args.tau_re),
                                  parse_rational(args.tau_im), config.order_value(), prec);
      }
      return emit_reports(out, err, format, {report}, timing, true);
    }
    if (*suite) {
      SuiteOptions options;
      options.precision = prec;
      // The grid is large; an explicit --order / QTORUS_ORDER overrides 12.
      const bool order_given = app.get_option("--order")->count() > 0 ||
                               std::getenv("QTORUS_ORDER") != nullptr;
      if (order_given) options.order = config.order_value();
      options.threads = config.threads;
      const auto reports = run_suite(standard_suite(options), options.threads);
      return emit_reports(out, err, config.format(Output::Json), reports, timing, false);
    }
  } catch (const StabilizationTooLow& e) {
    err << "error: " << e.what() << "\n";
    err << "suggested: --N " << e.needed_N() << "\n";
    return 2;
  } catch (const InvalidParameter& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "failure: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace qtorus::cli
