#pragma once

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <CLI11.hpp>

#include "gencat/gencat.hpp"

// Command-line front end. Every command prints a parameter echo, a header row
// and data rows to `out` as CSV (comma separated, '.' decimal) or JSON lines.
// Exit codes: 0 success, 2 usage or parameter error, 1 internal numeric failure.

namespace gencat::cli {

enum class Format { csv, json };

inline std::string format_double(double x) {
  if (!std::isfinite(x)) return std::isnan(x) ? "nan" : (x > 0 ? "inf" : "-inf");
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

struct Raw {
  std::string json;  // emitted verbatim in JSON, quoted in CSV
};

using Field = std::variant<std::monostate, double, std::int64_t, std::uint64_t, bool, std::string, Raw>;

inline std::string json_escape(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      default: out += c;
    }
  }
  return out + "\"";
}

inline std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += (c == '"') ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

inline std::string render(const Field& f, Format fmt) {
  return std::visit(
      [fmt](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::monostate>) {
          return fmt == Format::json ? "null" : "";
        } else if constexpr (std::is_same_v<T, double>) {
          if (fmt == Format::json && !std::isfinite(v)) return "null";
          return format_double(v);
        } else if constexpr (std::is_same_v<T, bool>) {
          return v ? "true" : "false";
        } else if constexpr (std::is_same_v<T, std::string>) {
          return fmt == Format::json ? json_escape(v) : csv_quote(v);
        } else if constexpr (std::is_same_v<T, Raw>) {
          return fmt == Format::json ? v.json : csv_quote(v.json);
        } else {
          return std::to_string(v);
        }
      },
      f);
}

/// Streams one run: parameter echo, column header, rows.
class RecordWriter {
public:
  RecordWriter(std::ostream& out, Format fmt) : out_(out), fmt_(fmt) {}

  void params(const std::string& command, const std::vector<std::pair<std::string, Field>>& kv) {
    if (fmt_ == Format::csv) {
      out_ << "# command=" << command;
      for (const auto& [k, v] : kv) out_ << ' ' << k << '=' << render(v, Format::csv);
      out_ << '\n';
    } else {
      out_ << "{\"record\":\"params\",\"command\":" << json_escape(command);
      for (const auto& [k, v] : kv) out_ << ',' << json_escape(k) << ':' << render(v, Format::json);
      out_ << "}\n";
    }
  }

  void columns(std::vector<std::string> names) {
    columns_ = std::move(names);
    if (fmt_ == Format::csv) {
      for (std::size_t i = 0; i < columns_.size(); ++i) out_ << (i ? "," : "") << columns_[i];
      out_ << '\n';
    }
  }

  void row(const std::vector<Field>& values, const char* record = "row") {
    if (fmt_ == Format::csv) {
      for (std::size_t i = 0; i < values.size(); ++i) out_ << (i ? "," : "") << render(values[i], Format::csv);
      out_ << '\n';
    } else {
      out_ << "{\"record\":\"" << record << '"';
      for (std::size_t i = 0; i < values.size() && i < columns_.size(); ++i)
        out_ << ',' << json_escape(columns_[i]) << ':' << render(values[i], Format::json);
      out_ << "}\n";
    }
  }

private:
  std::ostream& out_;
  Format fmt_;
  std::vector<std::string> columns_;
};

/// Parses "re,im" or "re".
inline std::complex<double> parse_complex(const std::string& s) {
  auto parse_one = [&](const std::string& part) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(part, &used);
    } catch (const std::exception&) {
      throw DomainError("cannot parse complex number '" + s + "' (expected re,im)");
    }
    if (used != part.size()) throw DomainError("cannot parse complex number '" + s + "' (expected re,im)");
    return v;
  };
  const auto comma = s.find(',');
  if (comma == std::string::npos) return {parse_one(s), 0.0};
  return {parse_one(s.substr(0, comma)), parse_one(s.substr(comma + 1))};
}

inline std::string coefficient_list(const IntPolynomial& p) {
  std::string s = "[";
  const auto& c = p.coeffs();
  if (c.empty()) s += "0";
  for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + c[i].str();
  return s + "]";
}

/// Limit of e_0^T X^n e_0: pi_{n/2}(d) for even n, 0 for odd n.
inline double moment_limit(double d, int n) {
  if (n % 2) return 0.0;
  return pi_closed_form(n / 2).evaluate(d);
}

/// n-th semicircle moment.
inline double semicircle_moment(int n) {
  if (n % 2) return 0.0;
  return static_cast<double>(catalan(n / 2));
}

struct Options {
  std::string format = "csv";
  // pi
  int n = 0;
  std::string method = "closed";
  std::optional<double> d_opt;
  // weyl / jacobi / sim
  double d = 1.0;
  std::string z = "3,0";
  int terms = 10;
  int depth = 400;
  // sim
  std::size_t size = 400;
  std::string dist = "gaussian";
  std::uint64_t seed = 1;
  std::size_t trials = 10;
  int n_max = 6;
  std::size_t k = 1;
  unsigned threads = 0;
};

inline Format parse_format(const std::string& s) {
  if (s == "csv") return Format::csv;
  if (s == "json") return Format::json;
  throw DomainError("unknown format '" + s + "'");
}

inline IntPolynomial pi_by_method(const std::string& m, int n) {
  if (m == "enum") return pi_enumerate(n);
  if (m == "conv") return pi_convolution(n).back();
  if (m == "linear") return pi_linear(n);
  if (m == "closed") return pi_closed_form(n);
  throw DomainError("unknown method '" + m + "' (expected enum, conv, linear, closed or all)");
}

inline void cmd_pi(const Options& o, std::ostream& out) {
  if (o.n < 0) throw DomainError("--n must be nonnegative");
  std::vector<std::pair<std::string, IntPolynomial>> results;
  if (o.method == "all") {
    for (const char* m : {"enum", "conv", "linear", "closed"}) results.emplace_back(m, pi_by_method(m, o.n));
  } else {
    results.emplace_back(o.method, pi_by_method(o.method, o.n));
  }

  RecordWriter w(out, parse_format(o.format));
  std::vector<std::pair<std::string, Field>> echo{{"n", std::int64_t{o.n}}, {"method", o.method}};
  if (o.d_opt) echo.emplace_back("d", *o.d_opt);
  w.params("pi", echo);
  std::vector<std::string> cols{"n", "method", "coefficients"};
  if (o.d_opt) {
    cols.emplace_back("d");
    cols.emplace_back("value");
  }
  w.columns(cols);
  for (const auto& [m, p] : results) {
    std::vector<Field> row{std::int64_t{o.n}, m, Raw{coefficient_list(p)}};
    if (o.d_opt) {
      row.emplace_back(*o.d_opt);
      row.emplace_back(p.evaluate(*o.d_opt));
    }
    w.row(row);
  }
  if (o.method == "all") {
    bool agree = true;
    for (const auto& r : results) agree = agree && r.second == results.front().second;
    std::vector<Field> verdict{std::int64_t{o.n}, std::string("verdict"), std::string(agree ? "AGREE" : "DISAGREE")};
    if (o.d_opt) {
      verdict.emplace_back(std::monostate{});
      verdict.emplace_back(std::monostate{});
    }
    w.row(verdict, "summary");
  }
}

inline void cmd_weyl(const std::string& sub, const Options& o, std::ostream& out) {
  RecordWriter w(out, parse_format(o.format));
  if (sub == "eval") {
    const auto z = parse_complex(o.z);
    const auto q = weyl::q_limit(o.d, z);
    const auto s = weyl::semicircle_stieltjes(z);
    w.params("weyl eval", {{"d", o.d}, {"z", o.z}});
    w.columns({"d", "z_re", "z_im", "q_re", "q_im", "stieltjes_re", "stieltjes_im"});
    w.row({o.d, z.real(), z.imag(), q.real(), q.imag(), s.real(), s.imag()});
  } else if (sub == "series") {
    const auto coeffs = weyl::neg_inv_q_series(o.d, o.terms);
    w.params("weyl series", {{"d", o.d}, {"K", std::int64_t{o.terms}}});
    w.columns({"power", "coefficient"});
    for (std::size_t k = 0; k < coeffs.size(); ++k) w.row({-static_cast<std::int64_t>(2 * k + 1), coeffs[k]});
  } else if (sub == "roots") {
    const auto set = weyl::limit_outliers(o.d);
    w.params("weyl roots", {{"d", o.d}});
    w.columns({"kind", "re", "im"});
    if (set.values.empty()) w.row({std::string(to_string(set.kind)), std::monostate{}, std::monostate{}});
    for (const auto& v : set.values) w.row({std::string(to_string(set.kind)), v.real(), v.imag()});
  } else {
    throw DomainError("unknown weyl subcommand '" + sub + "'");
  }
}

inline void cmd_jacobi(const Options& o, std::ostream& out) {
  RecordWriter w(out, parse_format(o.format));
  const auto z = parse_complex(o.z);
  const auto g = randmat::jacobi_continued_fraction(o.d, z, o.depth);
  const auto r = o.d * g;
  const auto target = -1.0 / weyl::q_limit(o.d, z);
  w.params("jacobi", {{"d", o.d}, {"z", o.z}, {"depth", std::int64_t{o.depth}}});
  w.columns({"d", "z_re", "z_im", "depth", "continued_fraction_re", "continued_fraction_im", "resolvent_re",
             "resolvent_im", "neg_inv_q_re", "neg_inv_q_im", "abs_diff"});
  w.row({o.d, z.real(), z.imag(), std::int64_t{o.depth}, g.real(), g.imag(), r.real(), r.imag(), target.real(),
         target.imag(), std::abs(r - target)});
}

inline randmat::EnsembleConfig ensemble(const Options& o) {
  randmat::EnsembleConfig cfg{o.size, o.d, randmat::parse_distribution(o.dist), o.seed};
  cfg.validate();
  return cfg;
}

inline std::vector<std::pair<std::string, Field>> sim_echo(const Options& o) {
  return {{"size", std::uint64_t{o.size}}, {"d", o.d},
          {"dist", o.dist},                {"seed", std::uint64_t{o.seed}},
          {"trials", std::uint64_t{o.trials}}, {"n_max", std::int64_t{o.n_max}},
          {"k", std::uint64_t{o.k}}};
}

inline Field optional_field(const std::optional<double>& x) {
  return x ? Field{*x} : Field{std::monostate{}};
}

inline void cmd_sim(const std::string& sub, const Options& o, std::ostream& out) {
  RecordWriter w(out, parse_format(o.format));
  const auto cfg = ensemble(o);
  if (o.trials < 1) throw DomainError("--trials must be positive");

  if (sub == "moments") {
    if (o.n_max < 1) throw DomainError("--n-max must be at least 1");
    if (o.trials < 2) throw DomainError("--trials must be at least 2 for moments");
    w.params("sim moments", sim_echo(o));
    const auto rows = randmat::monte_carlo_moments(cfg, o.n_max, o.trials, o.threads);
    w.columns({"n", "mean", "stderr", "limit"});
    for (const auto& r : rows) w.row({std::int64_t{r.n}, r.mean, r.std_error, moment_limit(o.d, r.n)});
  } else if (sub == "outliers") {
    w.params("sim outliers", sim_echo(o));
    const auto limits = weyl::limit_outliers(o.d);
    if (o.d > 0.0) {
      struct TrialRoots {
        std::optional<double> lo, hi;
        std::optional<double> residual;
      };
      auto res = randmat::run_trials(
          o.trials,
          [&](std::size_t t) {
            const auto m = randmat::build_secular(randmat::sample_wigner(cfg, t));
            const auto r = randmat::real_outliers(m, o.d);
            TrialRoots tr{r.lower, r.upper, std::nullopt};
            if (r.lower || r.upper)
              tr.residual = std::max(r.lower ? r.lower_residual : 0.0, r.upper ? r.upper_residual : 0.0);
            return tr;
          },
          o.threads);
      w.columns({"trial", "root_minus", "root_plus", "residual"});
      std::vector<double> los, his;
      for (std::size_t t = 0; t < res.size(); ++t) {
        w.row({std::uint64_t{t}, optional_field(res[t].lo), optional_field(res[t].hi), optional_field(res[t].residual)});
        if (res[t].lo) los.push_back(*res[t].lo);
        if (res[t].hi) his.push_back(*res[t].hi);
      }
      w.row({std::string("median"), los.empty() ? Field{} : Field{randmat::median(los)},
             his.empty() ? Field{} : Field{randmat::median(his)}, Field{}},
            "summary");
      if (limits.kind == weyl::OutlierKind::real_pair)
        w.row({std::string("limit"), limits.values[1].real(), limits.values[0].real(), Field{}}, "summary");
      else
        w.row({std::string("limit"), Field{}, Field{}, Field{}}, "summary");
    } else {
      auto res = randmat::run_trials(
          o.trials,
          [&](std::size_t t) { return randmat::complex_outlier(randmat::build_secular(randmat::sample_wigner(cfg, t)), o.d); },
          o.threads);
      w.columns({"trial", "root_re", "root_im", "residual", "status"});
      std::vector<double> re, im;
      for (std::size_t t = 0; t < res.size(); ++t) {
        const auto& r = res[t];
        w.row({std::uint64_t{t}, r.root ? Field{r.root->real()} : Field{}, r.root ? Field{r.root->imag()} : Field{},
               r.residual, std::string(randmat::to_string(r.status))});
        if (r.root) {
          re.push_back(r.root->real());
          im.push_back(r.root->imag());
        }
      }
      w.row({std::string("median"), re.empty() ? Field{} : Field{randmat::median(re)},
             im.empty() ? Field{} : Field{randmat::median(im)}, Field{}, Field{}},
            "summary");
      w.row({std::string("limit"), limits.values[0].real(), limits.values[0].imag(), Field{}, Field{}}, "summary");
    }
  } else if (sub == "measure") {
    if (o.n_max < 0) throw DomainError("--n-max must be nonnegative");
    w.params("sim measure", sim_echo(o));
    std::vector<std::string> cols{"trial", "a"};
    for (int n = 0; n <= o.n_max; ++n) cols.push_back("m" + std::to_string(n));
    w.columns(cols);
    auto res = randmat::run_trials(
        o.trials,
        [&](std::size_t t) {
          const auto m = randmat::build_secular(randmat::sample_wigner(cfg, t));
          std::vector<double> v{m.a};
          for (int n = 0; n <= o.n_max; ++n) v.push_back(randmat::measure_moments(m, n));
          return v;
        },
        o.threads);
    std::vector<std::vector<double>> by_col(static_cast<std::size_t>(o.n_max) + 2);
    for (std::size_t t = 0; t < res.size(); ++t) {
      std::vector<Field> row{std::uint64_t{t}};
      for (std::size_t c = 0; c < res[t].size(); ++c) {
        row.emplace_back(res[t][c]);
        by_col[c].push_back(res[t][c]);
      }
      w.row(row);
    }
    std::vector<Field> mean{std::string("mean")}, limit{std::string("limit"), 0.0};
    for (auto& col : by_col) mean.emplace_back(randmat::summarize(col).mean);
    for (int n = 0; n <= o.n_max; ++n) limit.emplace_back(semicircle_moment(n));
    w.row(mean, "summary");
    w.row(limit, "summary");
  } else if (sub == "permsim") {
    w.params("sim permsim", sim_echo(o));
    const auto sample = randmat::sample_wigner(cfg, 0);
    const std::vector<std::complex<double>> zs{{3, 0}, {0, 2}, {-4, 0}, {1, 2}, {-2, -3}};
    const auto rep = randmat::permutation_similarity_report(sample, o.d, o.k, zs);
    w.columns({"k", "points", "result"});
    w.row({std::uint64_t{o.k}, std::int64_t{rep.points_checked}, rep.agree});
  } else {
    throw DomainError("unknown sim subcommand '" + sub + "'");
  }
}

/// Parses argv and runs one command. Never throws.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generalized Catalan polynomials, limit Weyl functions and Monte Carlo checks", "gencat"};
  app.require_subcommand(1);
  Options o;
  auto add_format = [&](CLI::App* c) {
    c->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  };

  auto* pi = app.add_subcommand("pi", "Generalized Catalan polynomial pi_n(d)");
  pi->add_option("--n", o.n, "Order n")->required();
  pi->add_option("--method", o.method, "enum, conv, linear, closed or all");
  pi->add_option("--d", o.d_opt, "Also evaluate at d");
  add_format(pi);

  auto* wy = app.add_subcommand("weyl", "Limit Weyl function");
  wy->require_subcommand(1);
  auto* w_eval = wy->add_subcommand("eval", "Evaluate Q_d(z)");
  w_eval->add_option("--d", o.d)->required();
  w_eval->add_option("--z", o.z, "re,im")->required();
  auto* w_series = wy->add_subcommand("series", "Coefficients of -1/Q_d at infinity");
  w_series->add_option("--d", o.d)->required();
  w_series->add_option("--K", o.terms, "Number of odd-power terms")->required();
  auto* w_roots = wy->add_subcommand("roots", "Zeros of Q_d off [-2,2]");
  w_roots->add_option("--d", o.d)->required();
  for (auto* c : {w_eval, w_series, w_roots}) add_format(c);

  auto* sim = app.add_subcommand("sim", "Monte Carlo over X = H W");
  sim->require_subcommand(1);
  std::vector<CLI::App*> sims;
  for (const char* name : {"moments", "outliers", "measure", "permsim"}) {
    auto* c = sim->add_subcommand(name);
    c->add_option("--size,-N", o.size, "Bulk size N (matrix is N+1 square)");
    c->add_option("--d", o.d, "Parameter d")->required();
    c->add_option("--dist", o.dist)->check(CLI::IsMember({"rademacher", "gaussian", "uniform"}));
    c->add_option("--seed", o.seed, "Master seed");
    c->add_option("--trials", o.trials);
    c->add_option("--n-max", o.n_max);
    c->add_option("--k", o.k, "Position of d for permsim");
    c->add_option("--threads", o.threads, "Worker threads (0 = all cores)");
    add_format(c);
    sims.push_back(c);
  }

  auto* jac = app.add_subcommand("jacobi", "Continued-fraction resolvent of the Jacobi operator");
  jac->add_option("--d", o.d)->required();
  jac->add_option("--z", o.z, "re,im")->required();
  jac->add_option("--depth", o.depth);
  add_format(jac);

  std::vector<std::string> args;
  for (int i = argc - 1; i > 0; --i) args.emplace_back(argv[i]);
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  const auto t0 = std::chrono::steady_clock::now();
  try {
    if (pi->parsed()) {
      cmd_pi(o, out);
    } else if (wy->parsed()) {
      cmd_weyl(w_eval->parsed() ? "eval" : w_series->parsed() ? "series" : "roots", o, out);
    } else if (jac->parsed()) {
      cmd_jacobi(o, out);
    } else {
      for (auto* c : sims)
        if (c->parsed()) cmd_sim(c->get_name(), o, out);
    }
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "numeric failure: " << e.what() << '\n';
    return 1;
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  err << "# wall_time_s=" << format_double(secs) << '\n';
  return 0;
}

}  // namespace gencat::cli
