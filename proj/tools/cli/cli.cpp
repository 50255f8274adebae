// Copyright (C) 2026 The logconcave Authors
// SPDX-License-Identifier: Apache-2.0

#include "cli.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "logconcave/bounds.hpp"
#include "logconcave/maxprod.hpp"
#include "logconcave/row_cache.hpp"
#include "logconcave/series.hpp"
#include "logconcave/verify.hpp"

namespace logconcave::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

// Raised for bad input discovered after flag parsing (unreadable rule file,
// negative exponent, ...). Mapped to the usage exit code.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

std::string md_cell(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '|') out += "\\|";
    else out += c;
  }
  return out;
}

void render(const Table& t, OutputFormat fmt, std::ostream& out) {
  switch (fmt) {
    case OutputFormat::Csv:
    case OutputFormat::Tsv: {
      const char sep = fmt == OutputFormat::Csv ? ',' : '\t';
      auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
          if (i) out << sep;
          out << (fmt == OutputFormat::Csv ? csv_cell(cells[i]) : cells[i]);
        }
        out << '\n';
      };
      line(t.columns);
      for (const auto& r : t.rows) line(r);
      break;
    }
    case OutputFormat::Markdown: {
      out << '|';
      for (const auto& c : t.columns) out << ' ' << md_cell(c) << " |";
      out << "\n|";
      for (std::size_t i = 0; i < t.columns.size(); ++i) out << "---|";
      out << '\n';
      for (const auto& r : t.rows) {
        out << '|';
        for (const auto& c : r) out << ' ' << md_cell(c) << " |";
        out << '\n';
      }
      break;
    }
    case OutputFormat::Json: {
      ordered_json arr = ordered_json::array();
      for (const auto& r : t.rows) {
        ordered_json obj;
        for (std::size_t i = 0; i < t.columns.size(); ++i) obj[t.columns[i]] = r[i];
        arr.push_back(obj);
      }
      out << arr.dump(2) << '\n';
      break;
    }
  }
}

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

std::string join_parts(const std::vector<unsigned>& parts) {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) s += '+';
    s += std::to_string(parts[i]);
  }
  return s;
}

std::vector<BigInt> read_rule_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("--rule-file: cannot open '" + path + "'");
  std::vector<BigInt> values;
  std::string token;
  while (in >> token) {
    BigInt v;
    if (v.set_str(token, 10) != 0) {
      throw UsageError("--rule-file: '" + token + "' is not an integer (entry " +
                       std::to_string(values.size() + 1) + ")");
    }
    if (v < 0) {
      throw UsageError("--rule-file: negative exponent " + token + " at n=" +
                       std::to_string(values.size() + 1));
    }
    values.push_back(std::move(v));
  }
  return values;
}

}  // namespace

std::optional<std::filesystem::path> default_cache_dir() {
  if (const char* env = std::getenv("LOGCONCAVE_CACHE"); env && *env) return std::filesystem::path(env);
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) {
    return std::filesystem::path(xdg) / "logconcave";
  }
  if (const char* home = std::getenv("HOME"); home && *home) {
    return std::filesystem::path(home) / ".cache" / "logconcave";
  }
  return std::nullopt;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        bool stdout_is_tty) {
  CLI::App app{"Exact coefficients and log-concavity of prod (1-q^n)^(-n^(d-1))", "logconcave"};
  app.require_subcommand(1);
  app.fallthrough();

  CliConfig cfg;
  std::string format_name;
  std::string cache_dir;
  bool no_cache = false;
  app.add_option("--format", format_name, "Output format")
      ->check(CLI::IsMember({"tsv", "csv", "json", "md"}));
  app.add_option("--cache-dir", cache_dir, "Row cache directory (env LOGCONCAVE_CACHE)");
  app.add_flag("--no-cache", no_cache, "Do not read or write cached rows");
  app.add_option("--jobs", cfg.jobs, "Worker threads (0 = all cores)");
  app.add_flag("--verbose", cfg.verbose, "Timing information on stderr");

  unsigned d = 0;
  std::uint64_t n = 0;
  unsigned top = 3;

  auto* compute = app.add_subcommand("compute", "Print p_d(0..N)");
  compute->add_option("--d", d)->required()->check(CLI::Range(1u, 100000u));
  compute->add_option("--n", n)->required()->check(CLI::Range(std::uint64_t{0}, std::uint64_t{10'000'000}));

  auto* delta_cmd = app.add_subcommand("delta", "Print Delta_d(n) and its class");
  delta_cmd->add_option("--d", d)->required()->check(CLI::Range(1u, 100000u));
  delta_cmd->add_option("--n", n)->required()->check(CLI::Range(std::uint64_t{1}, std::uint64_t{10'000'000}));

  unsigned dmax = 20;
  std::uint64_t nmax = 26;
  auto* land = app.add_subcommand("landscape", "Exception grid for d <= dmax, n <= nmax");
  land->add_option("--dmax", dmax)->check(CLI::Range(1u, 100000u));
  land->add_option("--nmax", nmax)->check(CLI::Range(std::uint64_t{1}, std::uint64_t{10'000'000}));

  auto* maxprod_cmd = app.add_subcommand("maxprod", "Largest part products over partitions of n");
  maxprod_cmd->add_option("--n", n)->required()->check(CLI::Range(std::uint64_t{2}, std::uint64_t{kSpectrumCap}));
  maxprod_cmd->add_option("--top", top)->check(CLI::Range(1u, 1000u));

  auto* bounds_cmd = app.add_subcommand("bounds", "Rational bounds on p_d(n)");
  bounds_cmd->add_option("--n", n)->required()->check(CLI::Range(std::uint64_t{2}, std::uint64_t{100000}));
  bounds_cmd->add_option("--d", d)->required()->check(CLI::Range(1u, 100000u));

  auto* constants_cmd = app.add_subcommand("constants", "Threshold constants for n");
  constants_cmd->add_option("--n", n)->required()->check(CLI::Range(std::uint64_t{6}, std::uint64_t{1'000'000}));

  unsigned from = 7;
  unsigned to = 59;
  unsigned step = 1;
  auto* fig = app.add_subcommand("figure2", "C1, C2, C1~, C2~ series as CSV");
  fig->add_option("--from", from)->check(CLI::Range(6u, 1'000'000u));
  fig->add_option("--to", to)->check(CLI::Range(6u, 1'000'000u));
  fig->add_option("--step", step)->check(CLI::Range(1u, 1'000'000u));

  std::string suite = "all";
  std::optional<std::uint64_t> verify_nmax;
  std::optional<unsigned> verify_dmax;
  auto* verify_cmd = app.add_subcommand("verify", "Reproduce tables and theorem checks");
  verify_cmd->add_option("--suite", suite)
      ->check(CLI::IsMember({"table1", "table2", "table3", "table4", "theorem1", "corollary",
                             "boundary", "conjectures", "all"}));
  verify_cmd->add_option("--nmax", verify_nmax, "n cap for table1 (default 2000) and conjectures (200)");
  verify_cmd->add_option("--dmax", verify_dmax,
                         "d cap for theorem1 (200), corollary (120) and conjectures (60)");

  std::string rule_file;
  auto* custom = app.add_subcommand("custom-alpha", "Coefficients for exponents read from a file");
  custom->add_option("--rule-file", rule_file, "Whitespace-separated alpha_1 alpha_2 ...")->required();
  custom->add_option("--n", n)->required()->check(CLI::Range(std::uint64_t{0}, std::uint64_t{1'000'000}));

  std::vector<std::string> argv_storage;
  argv_storage.reserve(args.size() + 1);
  argv_storage.emplace_back("logconcave");
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    std::string msg = e.what();
    if (const auto nl = msg.find('\n'); nl != std::string::npos) msg.resize(nl);
    err << "logconcave: usage error: " << msg << '\n';
    return kExitUsage;
  }

  if (format_name.empty()) {
    cfg.format = stdout_is_tty ? OutputFormat::Markdown : OutputFormat::Csv;
  } else {
    static const std::map<std::string, OutputFormat> kFormats = {
        {"tsv", OutputFormat::Tsv}, {"csv", OutputFormat::Csv},
        {"json", OutputFormat::Json}, {"md", OutputFormat::Markdown}};
    cfg.format = kFormats.at(format_name);
  }
  if (!no_cache) cfg.cache_dir = cache_dir.empty() ? default_cache_dir() : std::filesystem::path(cache_dir);
  cfg.subcommand = app.get_subcommands().front()->get_name();

  RowCache cache(cfg.cache_dir);
  VerifyOptions vopts;
  vopts.jobs = cfg.jobs;
  vopts.cache = &cache;

  const auto started = std::chrono::steady_clock::now();
  int rc = kExitOk;
  try {
    if (cfg.subcommand == "compute") {
      const auto row = cache.power_row(d, n);
      Table t{{"n", "p"}, {}};
      for (std::uint64_t i = 0; i <= n; ++i) t.rows.push_back({std::to_string(i), (*row)[i].get_str()});
      render(t, cfg.format, out);
    } else if (cfg.subcommand == "delta") {
      const auto dc = classify(d, n, &cache);
      Table t{{"n", "d", "delta", "class"},
              {{std::to_string(dc.n), std::to_string(dc.d), dc.delta.get_str(),
                std::string(to_string(dc.cls))}}};
      render(t, cfg.format, out);
    } else if (cfg.subcommand == "landscape") {
      const auto grid = landscape(dmax, nmax, vopts);
      switch (cfg.format) {
        case OutputFormat::Markdown: out << grid.to_markdown(); break;
        case OutputFormat::Csv: out << grid.to_csv(','); break;
        case OutputFormat::Tsv: out << grid.to_csv('\t'); break;
        case OutputFormat::Json: {
          ordered_json j;
          j["d_max"] = dmax;
          j["n_max"] = nmax;
          ordered_json ex = ordered_json::object();
          for (unsigned dd = 1; dd <= dmax; ++dd) {
            ordered_json ns = ordered_json::array();
            for (auto v : grid.exceptions_for_d(dd)) ns.push_back(v);
            ex[std::to_string(dd)] = ns;
          }
          j["exceptions"] = ex;
          out << j.dump(2) << '\n';
          break;
        }
      }
    } else if (cfg.subcommand == "maxprod") {
      const auto records = product_spectrum(static_cast<unsigned>(n), top);
      Table t{{"position", "rank", "value", "witnesses"}, {}};
      for (const auto& r : records) {
        std::string ws;
        for (std::size_t i = 0; i < r.witnesses.size(); ++i) {
          if (i) ws += ' ';
          ws += join_parts(r.witnesses[i]);
        }
        t.rows.push_back({std::to_string(r.position), std::string(to_string(r.rank)),
                          r.value.get_str(), ws});
      }
      render(t, cfg.format, out);
    } else if (cfg.subcommand == "bounds") {
      const auto nn = static_cast<unsigned>(n);
      const auto p1 = cache.power_row(1, nn + 1);
      const auto b = pd_bounds(nn, d, *p1);
      std::string cert;
      if (nn >= 6) cert = std::string(to_string(bound_ratio_certificate(nn, d, *p1)));
      Table t{{"n", "d", "residue", "lower", "upper", "improved_upper", "certificate"},
              {{std::to_string(b.n), std::to_string(b.d), std::to_string(b.residue),
                b.lower.get_str(), b.upper.get_str(),
                b.improved_upper ? b.improved_upper->get_str() : std::string(), cert}}};
      render(t, cfg.format, out);
    } else if (cfg.subcommand == "constants") {
      const auto tc = threshold_constants(static_cast<unsigned>(n));
      const auto& c = tc.c();
      const auto& tilde = tc.c_tilde();
      const auto& star = tc.c_star();
      Table t{{"n", "residue", "C", "ceil_C", "C_tilde", "ceil_C_tilde", "C_star", "ceil_C_star"},
              {{std::to_string(n), std::to_string(n % 3), fmt_double(c.value),
                std::to_string(c.ceiling), tilde ? fmt_double(tilde->value) : std::string(),
                tilde ? std::to_string(tilde->ceiling) : std::string(), fmt_double(star.value),
                std::to_string(star.ceiling)}}};
      render(t, cfg.format, out);
    } else if (cfg.subcommand == "figure2") {
      if (from > to) throw UsageError("--from must not exceed --to");
      const auto rows = figure2_data(from, to, step);
      if (cfg.format == OutputFormat::Json) {
        ordered_json arr = ordered_json::array();
        for (const auto& r : rows) {
          ordered_json o;
          o["n"] = r.n;
          o["C1"] = r.c1 ? ordered_json(*r.c1) : ordered_json(nullptr);
          o["C2"] = r.c2 ? ordered_json(*r.c2) : ordered_json(nullptr);
          o["C1_tilde"] = r.c1_tilde ? ordered_json(*r.c1_tilde) : ordered_json(nullptr);
          o["C2_tilde"] = r.c2_tilde ? ordered_json(*r.c2_tilde) : ordered_json(nullptr);
          arr.push_back(o);
        }
        out << arr.dump(2) << '\n';
      } else {
        write_figure2_csv(out, rows);
      }
    } else if (cfg.subcommand == "verify") {
      if (suite == "table1" && verify_nmax && *verify_nmax < 26) throw UsageError("--nmax: table1 needs >= 26");
      if (suite == "theorem1" && verify_dmax && *verify_dmax < 20) throw UsageError("--dmax: theorem1 needs >= 20");
      if (suite == "corollary" && verify_dmax && *verify_dmax < 60) throw UsageError("--dmax: corollary needs >= 60");
      if (suite == "conjectures" && verify_dmax && *verify_dmax < 21) throw UsageError("--dmax: conjectures needs >= 21");
      if (suite == "conjectures" && verify_nmax && *verify_nmax < 8) throw UsageError("--nmax: conjectures needs >= 8");
      std::vector<VerificationReport> reports;
      auto want = [&](const char* name) { return suite == "all" || suite == name; };
      if (want("table1")) reports.push_back(table1_suite(verify_nmax.value_or(2000), vopts));
      if (want("table2")) reports.push_back(table2_suite(vopts));
      if (want("table3")) reports.push_back(table3_suite());
      if (want("table4")) reports.push_back(table4_suite(vopts));
      if (want("theorem1")) reports.push_back(theorem_eins_suite(verify_dmax.value_or(200), vopts));
      if (want("corollary")) reports.push_back(corollary_suite(verify_dmax.value_or(120), vopts));
      if (want("boundary")) reports.push_back(boundary_case_suite(vopts));
      if (want("conjectures")) {
        reports.push_back(conjecture_scan(verify_nmax.value_or(200), verify_dmax.value_or(60), vopts));
      }
      switch (cfg.format) {
        case OutputFormat::Json: out << to_json(reports) << '\n'; break;
        case OutputFormat::Markdown:
          for (const auto& r : reports) out << to_markdown(r) << '\n';
          break;
        default: {
          Table t{{"suite", "status", "claim", "holds", "epistemic", "detail"}, {}};
          for (const auto& r : reports) {
            for (const auto& c : r.details) {
              t.rows.push_back({r.suite, std::string(to_string(r.status)), c.claim,
                                c.holds ? "yes" : "no", c.epistemic, c.detail});
            }
          }
          render(t, cfg.format, out);
        }
      }
      for (const auto& r : reports) {
        if (!is_success(r.status)) rc = kExitFailure;
      }
    } else if (cfg.subcommand == "custom-alpha") {
      auto values = read_rule_file(rule_file);
      if (values.size() < n) {
        throw UsageError("--rule-file: need alpha_1..alpha_" + std::to_string(n) + ", file has " +
                         std::to_string(values.size()) + " entries");
      }
      const auto seq = ExponentSequence::from_values(std::move(values), rule_file);
      const auto row = compute_row(seq, n);
      Table t{{"n", "p"}, {}};
      for (std::uint64_t i = 0; i <= n; ++i) t.rows.push_back({std::to_string(i), row[i].get_str()});
      render(t, cfg.format, out);
    }
  } catch (const UsageError& e) {
    err << "logconcave: usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "logconcave: usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "logconcave: usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "logconcave: error: " << e.what() << '\n';
    return kExitFailure;
  }

  if (cfg.verbose) {
    const auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    err << "logconcave: " << cfg.subcommand << " finished in " << secs << " s\n";
  }
  return rc;
}

}  // namespace logconcave::cli
