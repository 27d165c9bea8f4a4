// Command-line front end.  Four subcommands:
//   bound   closed-form entropy bounds for one flow (all k or a single k)
//   hull    upper hull boundary and axis crossing for one (flow, k)
//   verify  full identity battery for one flow against the brute oracle
//   fuzz    the same battery over a deterministic stream of random flows
// Exit codes: 0 success, 1 a verification check failed, 2 usage or input
// error.

#include <CLI11.hpp>

#include <atomic>
#include <cstdint>
#include <exception>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "cuspbound/bounds.hpp"
#include "cuspbound/hull.hpp"
#include "cuspbound/oracle.hpp"
#include "cuspbound/rational.hpp"
#include "cuspbound/serialize.hpp"

namespace {

// ---------------------------------------------------------------------------
// Output plumbing
// ---------------------------------------------------------------------------

// Writes text to the given file, or to stdout when the path is empty, always
// ending with exactly one trailing newline.
void write_output(const std::string& text, const std::string& out_path) {
  std::string body = text;
  if (body.empty() || body.back() != '\n') {
    body.push_back('\n');
  }
  if (out_path.empty()) {
    std::cout << body;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot open output file: " + out_path);
  }
  out << body;
}

cusp::FlowVector parse_flow(const std::string& alpha_str, bool project) {
  return cusp::FlowVector::from_raw(cusp::parse_rational_list(alpha_str),
                                    project);
}

// ---------------------------------------------------------------------------
// bound
// ---------------------------------------------------------------------------

int run_bound(const std::string& alpha_str, bool project, int k, bool have_k,
              const std::string& format, const std::string& out_path) {
  const cusp::FlowVector flow = parse_flow(alpha_str, project);
  cusp::BoundReport report = cusp::compute_bound_report(flow);
  if (have_k) {
    if (k < 1 || k >= flow.dimension()) {
      throw std::invalid_argument("--k must lie between 1 and d-1");
    }
    std::erase_if(report.per_k,
                  [k](const cusp::PerKBound& row) { return row.k != k; });
  }
  if (format == "json") {
    write_output(cusp::report_to_json(report).dump(2), out_path);
  } else if (format == "csv") {
    write_output(cusp::report_to_csv(report), out_path);
  } else {
    write_output(cusp::report_to_table(report), out_path);
  }
  return 0;
}

// ---------------------------------------------------------------------------
// hull
// ---------------------------------------------------------------------------

int run_hull(const std::string& alpha_str, bool project, int k,
             const std::string& format, const std::string& out_path) {
  const cusp::FlowVector flow = parse_flow(alpha_str, project);
  const cusp::HullBoundary boundary = cusp::upper_boundary(k, flow);
  const cusp::CrossingResult crossing = cusp::crossing_edge(boundary);
  if (format == "json") {
    write_output(cusp::hull_to_json(boundary, crossing).dump(2), out_path);
  } else if (format == "csv") {
    write_output(cusp::hull_to_csv(boundary), out_path);
  } else if (format == "svg") {
    write_output(cusp::hull_to_svg(boundary, crossing), out_path);
  } else {
    write_output(cusp::hull_to_table(boundary, crossing), out_path);
  }
  return 0;
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

int run_verify(const std::string& alpha_str, bool project, int limit,
               const std::string& format, const std::string& out_path) {
  const cusp::FlowVector flow = parse_flow(alpha_str, project);
  const int perm_limit = limit > 0 ? limit : cusp::kPermutationEnumLimit;
  const int para_limit = limit > 0 ? limit : cusp::kParabolicEnumLimit;
  const cusp::VerificationReport report =
      cusp::verify_all(flow, perm_limit, para_limit);
  if (format == "json") {
    write_output(cusp::verification_to_json(report).dump(2), out_path);
  } else {
    write_output(cusp::verification_to_table(report), out_path);
  }
  return report.all_pass ? 0 : 1;
}

// ---------------------------------------------------------------------------
// fuzz
// ---------------------------------------------------------------------------

std::string join_flow(const cusp::FlowVector& flow) {
  std::string text;
  for (int i = 0; i < flow.dimension(); ++i) {
    if (i > 0) {
      text += ",";
    }
    text += cusp::format_rational(flow.entry(i));
  }
  return text;
}

int run_fuzz(int d, int trials, std::uint64_t seed, int max_den, int jobs,
             int limit, const std::string& format,
             const std::string& out_path) {
  if (d < 2) {
    throw std::invalid_argument("--d must be at least 2");
  }
  if (trials < 1) {
    throw std::invalid_argument("--trials must be positive");
  }
  if (max_den < 1) {
    throw std::invalid_argument("--max-den must be positive");
  }
  if (jobs < 1) {
    throw std::invalid_argument("--jobs must be positive");
  }
  const int perm_limit = limit > 0 ? limit : cusp::kPermutationEnumLimit;
  const int para_limit = limit > 0 ? limit : cusp::kParabolicEnumLimit;

  // Trials land in preassigned slots, so the report is byte-identical no
  // matter how many workers ran them.
  std::vector<std::optional<cusp::VerificationReport>> slots(trials);
  std::atomic<int> next{0};
  const int worker_count = std::min(jobs, trials);
  std::vector<std::exception_ptr> errors(worker_count);
  std::vector<std::thread> workers;
  workers.reserve(worker_count);
  for (int w = 0; w < worker_count; ++w) {
    workers.emplace_back([&, w] {
      try {
        for (int t = next.fetch_add(1); t < trials; t = next.fetch_add(1)) {
          const cusp::FlowVector flow =
              cusp::random_flow(d, cusp::mix_seed(seed, t), 12, max_den);
          slots[t] = cusp::verify_all(flow, perm_limit, para_limit);
        }
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (std::thread& worker : workers) {
    worker.join();
  }
  for (const std::exception_ptr& error : errors) {
    if (error) {
      std::rethrow_exception(error);
    }
  }

  bool all_pass = true;
  for (const auto& slot : slots) {
    all_pass = all_pass && slot->all_pass;
  }

  if (format == "json") {
    cusp::Json doc;
    doc["d"] = d;
    doc["trials"] = trials;
    doc["seed"] = seed;
    doc["max_den"] = max_den;
    doc["results"] = cusp::Json::array();
    for (int t = 0; t < trials; ++t) {
      const cusp::VerificationReport& report = *slots[t];
      cusp::Json row;
      row["trial"] = t;
      row["flow"] = cusp::flow_to_json(report.flow);
      row["all_pass"] = report.all_pass;
      row["failures"] = cusp::Json::array();
      for (const cusp::CheckResult& check : report.checks) {
        if (!check.pass) {
          row["failures"].push_back(check.name);
        }
      }
      doc["results"].push_back(std::move(row));
    }
    doc["all_pass"] = all_pass;
    write_output(doc.dump(2), out_path);
  } else {
    std::ostringstream table;
    int failed = 0;
    for (int t = 0; t < trials; ++t) {
      const cusp::VerificationReport& report = *slots[t];
      table << "trial " << t << ": "
            << (report.all_pass ? "pass" : "FAIL") << "  alpha = "
            << join_flow(report.flow) << "\n";
      if (!report.all_pass) {
        ++failed;
        for (const cusp::CheckResult& check : report.checks) {
          if (!check.pass) {
            table << "    failed " << check.name << ": expected "
                  << check.expected << ", got " << check.actual << "\n";
          }
        }
      }
    }
    table << trials << " trials, " << (trials - failed) << " passed, "
          << failed << " failed\n";
    write_output(table.str(), out_path);
  }
  return all_pass ? 0 : 1;
}

}  // namespace

// ---------------------------------------------------------------------------
// Entry point
// ---------------------------------------------------------------------------

int main(int argc, char** argv) {
  CLI::App app{
      "Exact entropy-in-the-cusp bounds for diagonal flows on "
      "SL_d(R)/SL_d(Z)"};
  app.require_subcommand(1);

  std::string alpha_str;
  bool project = false;
  int k = 0;
  bool all_k = false;
  std::string format = "table";
  std::string out_path;
  std::uint64_t seed = 1;
  int trials = 100;
  int d = 0;
  int max_den = 6;
  int jobs = 1;
  int limit = 0;

  CLI::App* bound_cmd = app.add_subcommand(
      "bound", "Closed-form entropy bounds for one flow");
  bound_cmd
      ->add_option("--alpha", alpha_str,
                   "Comma-separated rational eigenvalues, e.g. 1,1/2,-3/2")
      ->required();
  bound_cmd->add_flag("--project", project,
                      "Subtract the mean instead of requiring zero sum");
  CLI::Option* bound_k =
      bound_cmd->add_option("--k", k, "Report a single cusp direction");
  CLI::Option* bound_all =
      bound_cmd->add_flag("--all-k", all_k,
                          "Report every cusp direction (default)");
  bound_k->excludes(bound_all);
  bound_all->excludes(bound_k);
  bound_cmd->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "table"}))
      ->capture_default_str();
  bound_cmd->add_option("--out", out_path,
                        "Write to this file instead of stdout");

  CLI::App* hull_cmd = app.add_subcommand(
      "hull", "Upper hull boundary and axis crossing for one direction");
  hull_cmd
      ->add_option("--alpha", alpha_str,
                   "Comma-separated rational eigenvalues")
      ->required();
  hull_cmd->add_flag("--project", project,
                     "Subtract the mean instead of requiring zero sum");
  hull_cmd->add_option("--k", k, "Cusp direction (1 <= k <= d-1)")
      ->required();
  hull_cmd->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "table", "svg"}))
      ->capture_default_str();
  hull_cmd->add_option("--out", out_path,
                       "Write to this file instead of stdout");

  CLI::App* verify_cmd = app.add_subcommand(
      "verify", "Check every identity for one flow against brute force");
  verify_cmd
      ->add_option("--alpha", alpha_str,
                   "Comma-separated rational eigenvalues")
      ->required();
  verify_cmd->add_flag("--project", project,
                       "Subtract the mean instead of requiring zero sum");
  verify_cmd->add_option(
      "--limit", limit,
      "Raise the enumeration guard (default 8 for cosets, 7 for parabolics)");
  verify_cmd->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "table"}))
      ->capture_default_str();
  verify_cmd->add_option("--out", out_path,
                         "Write to this file instead of stdout");

  CLI::App* fuzz_cmd = app.add_subcommand(
      "fuzz", "Verify a deterministic stream of random flows");
  fuzz_cmd->add_option("--d", d, "Flow dimension")->required();
  fuzz_cmd->add_option("--trials", trials, "Number of random flows")
      ->capture_default_str();
  fuzz_cmd->add_option("--seed", seed, "Stream seed")->capture_default_str();
  fuzz_cmd
      ->add_option("--max-den", max_den,
                   "Largest denominator drawn for eigenvalues")
      ->capture_default_str();
  fuzz_cmd->add_option("--jobs", jobs, "Worker threads")
      ->capture_default_str();
  fuzz_cmd->add_option(
      "--limit", limit,
      "Raise the enumeration guard (default 8 for cosets, 7 for parabolics)");
  fuzz_cmd->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "table"}))
      ->capture_default_str();
  fuzz_cmd->add_option("--out", out_path,
                       "Write to this file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(bound_cmd)) {
      return run_bound(alpha_str, project, k, bound_k->count() > 0, format,
                       out_path);
    }
    if (app.got_subcommand(hull_cmd)) {
      return run_hull(alpha_str, project, k, format, out_path);
    }
    if (app.got_subcommand(verify_cmd)) {
      return run_verify(alpha_str, project, limit, format, out_path);
    }
    return run_fuzz(d, trials, seed, max_den, jobs, limit, format, out_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
