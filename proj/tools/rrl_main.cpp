// Command-line front end. Exit codes: 0 success, 1 a verification or
// conjecture check failed (or an internal invariant tripped), 2 bad usage.
// Timing goes to stderr so stdout stays byte-identical between runs.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "rrl/report.hpp"
#include "rrl/sweep.hpp"

namespace {

// Routes a report to stdout or to --out.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw std::invalid_argument("cannot open output file: " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

void emit_fields(const rrl::report::FieldList& fields, const std::string& format,
                 std::ostream& os) {
  if (format == "json")
    os << fields.to_json().dump(2) << '\n';
  else if (format == "csv")
    os << fields.to_csv();
  else
    os << fields.to_table();
}

int run_props(int N, int m, bool exact, const std::string& format,
              const std::string& out) {
  Sink sink(out);
  emit_fields(rrl::report::props_fields(rrl::RingLattice(N, m), exact), format,
              sink.stream());
  return 0;
}

int run_spectrum(int N, int m, const std::string& kind, const std::string& format,
                 const std::string& out) {
  const rrl::RingLattice g(N, m);
  const rrl::report::SpectrumRendering r{
      rrl::full_spectrum(g, rrl::parse_kind(kind))};
  Sink sink(out);
  if (format == "json")
    sink.stream() << r.to_json().dump(2) << '\n';
  else if (format == "csv")
    sink.stream() << r.to_csv();
  else
    sink.stream() << r.to_table();
  return 0;
}

int run_extremes(int N, int m, const std::string& format, const std::string& out) {
  Sink sink(out);
  emit_fields(rrl::report::extremes_fields(rrl::RingLattice(N, m)), format,
              sink.stream());
  return 0;
}

int run_verify(int n_max, double tol, const std::string& format,
               const std::string& out) {
  const rrl::VerifyReport rep = rrl::verify_spectra(n_max, tol);
  Sink sink(out);
  if (format == "json")
    sink.stream() << rrl::report::verify_json(rep).dump(2) << '\n';
  else
    sink.stream() << rrl::verify_text(rep);
  std::cerr << "verify took " << rrl::textio::fmt15(rep.seconds) << "s\n";
  return rep.pass() ? 0 : 1;
}

int run_sweep_cmd(int n_min, int n_max, int workers, bool allow_large,
                  const std::string& format, const std::string& out) {
  const rrl::SweepResult res = rrl::run_sweep(n_min, n_max, workers, allow_large);
  {
    Sink sink(out);
    if (format == "jsonl")
      rrl::write_jsonl(res, sink.stream());
    else
      rrl::write_csv(res, sink.stream());
  }
  std::cerr << rrl::summary_text(res.summary);
  if (!res.summary.all_hold()) {
    std::cerr << "conjecture counterexample found\n";
    return 1;
  }
  return 0;
}

int run_consensus(int N, int m, int steps, std::uint64_t seed, double scale,
                  bool errors, const std::string& format, const std::string& out) {
  const rrl::RingLattice g(N, m);
  auto x0 = rrl::consensus::random_state(N, seed);
  for (double& v : x0) v *= scale;
  const auto tr = rrl::consensus::run_from_state(g, std::move(x0), steps);
  const auto est = rrl::consensus::empirical_rate(tr);
  const auto fields = rrl::report::consensus_fields(g, tr, est);

  Sink sink(out);
  std::ostream& os = sink.stream();
  if (format == "json") {
    auto j = fields.to_json();
    if (errors) {
      auto arr = rrl::report::json::array();
      for (double e : tr.errors) arr.push_back(rrl::report::num(e));
      j["errors"] = arr;
    }
    os << j.dump(2) << '\n';
  } else if (format == "csv") {
    // with --errors the csv is the time series itself; scalars live in json
    if (errors) {
      os << "t,error\n";
      for (std::size_t t = 0; t < tr.errors.size(); ++t)
        os << t << ',' << rrl::textio::fmt15(tr.errors[t]) << '\n';
    } else {
      os << fields.to_csv();
    }
  } else {
    os << fields.to_table();
    if (errors) {
      rrl::textio::TextTable series;
      series.header = {"t", "error"};
      for (std::size_t t = 0; t < tr.errors.size(); ++t)
        series.add_row({std::to_string(t), rrl::textio::fmt15(tr.errors[t])});
      os << '\n' << series.render();
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"regular ring lattices: closed-form spectra, extremal structure, "
               "averaging dynamics"};
  app.require_subcommand(1);

  int N = 0, m = 0;
  std::string format = "table", out, kind = "laplacian";
  bool exact = false;

  auto add_pair = [&N, &m](CLI::App* sub) {
    sub->add_option("--n", N, "number of vertices (>= 4)")->required();
    sub->add_option("--m", m, "band width, 1 <= m < n/2")->required();
  };
  auto add_io = [&format, &out](CLI::App* sub,
                                const std::vector<std::string>& formats) {
    sub->add_option("--format", format, "output format")
        ->check(CLI::IsMember(formats))
        ->capture_default_str();
    sub->add_option("--out", out, "write to file instead of stdout");
  };

  CLI::App* props = app.add_subcommand("props", "basic graph invariants");
  add_pair(props);
  add_io(props, {"json", "csv", "table"});
  props->add_flag("--exact", exact,
                  "add brute-force girth/diameter/chromatic columns");

  CLI::App* spectrum =
      app.add_subcommand("spectrum", "all N eigenvalues of one matrix");
  add_pair(spectrum);
  add_io(spectrum, {"json", "csv", "table"});
  spectrum->add_option("--kind", kind, "matrix to diagonalize")
      ->check(CLI::IsMember({"adjacency", "laplacian", "randic",
                             "normalized_laplacian"}))
      ->capture_default_str();

  CLI::App* extremes =
      app.add_subcommand("extremes", "connectivity, radii, extremal indices");
  add_pair(extremes);
  add_io(extremes, {"json", "csv", "table"});

  int verify_n_max = 128;
  double tol = 1e-9;
  CLI::App* verify =
      app.add_subcommand("verify", "closed forms against DFT and dense solves");
  verify->add_option("--n-max", verify_n_max, "largest N to verify")
      ->check(CLI::Range(4, 4096))
      ->capture_default_str();
  verify->add_option("--tol", tol, "index-wise tolerance for the DFT route")
      ->capture_default_str();
  add_io(verify, {"json", "table"});

  int n_min = 4, n_max = 200, workers = 0;
  bool allow_large = false;
  CLI::App* sweep = app.add_subcommand(
      "sweep", "one record per admissible (N, m); fails on a counterexample");
  sweep->add_option("--n-min", n_min, "first N")->capture_default_str();
  sweep->add_option("--n-max", n_max, "last N")->capture_default_str();
  sweep->add_option("--workers", workers,
                    "worker threads (0 = RRL_WORKERS or hardware)")
      ->capture_default_str();
  sweep->add_flag("--allow-large", allow_large,
                  "permit N beyond 2000 (hard cap 10000)");
  format = "csv";
  add_io(sweep, {"csv", "jsonl"});

  int steps = 300;
  std::uint64_t seed = 42;
  double scale = 1.0;
  bool errors = false;
  CLI::App* cons = app.add_subcommand(
      "consensus", "run the averaging dynamics and fit the contraction rate");
  add_pair(cons);
  cons->add_option("--steps", steps, "update steps")
      ->check(CLI::Range(0, 1000000))
      ->capture_default_str();
  cons->add_option("--seed", seed, "rng seed for the start state")
      ->capture_default_str();
  cons->add_option("--scale", scale, "amplitude factor for the start state")
      ->capture_default_str();
  cons->add_flag("--errors", errors, "emit the error trace as well");
  format = "table";
  add_io(cons, {"json", "csv", "table"});

  // subcommands see their own default format
  props->preparse_callback([&format](std::size_t) { format = "table"; });
  spectrum->preparse_callback([&format](std::size_t) { format = "table"; });
  extremes->preparse_callback([&format](std::size_t) { format = "table"; });
  verify->preparse_callback([&format](std::size_t) { format = "table"; });
  sweep->preparse_callback([&format](std::size_t) { format = "csv"; });
  cons->preparse_callback([&format](std::size_t) { format = "table"; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (app.got_subcommand(props)) return run_props(N, m, exact, format, out);
    if (app.got_subcommand(spectrum))
      return run_spectrum(N, m, kind, format, out);
    if (app.got_subcommand(extremes)) return run_extremes(N, m, format, out);
    if (app.got_subcommand(verify))
      return run_verify(verify_n_max, tol, format, out);
    if (app.got_subcommand(sweep))
      return run_sweep_cmd(n_min, n_max, workers, allow_large, format, out);
    if (app.got_subcommand(cons))
      return run_consensus(N, m, steps, seed, scale, errors, format, out);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::length_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal check failed: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
