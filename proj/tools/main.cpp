#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <thread>

#include "CLI11.hpp"
#include "cuspsys/error.hpp"
#include "cuspsys/presets.hpp"
#include "cuspsys/surface_io.hpp"
#include "report.hpp"

namespace {

using namespace cuspsys;
using cli::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitSurface = 2;
constexpr int kExitBudget = 3;

struct Request {
  std::string command;
  std::optional<std::string> preset;
  std::optional<int> g;
  std::optional<std::string> file;
  std::optional<std::int64_t> trace_max;
  std::uint64_t node_cap = 100'000'000;
  int threads = 0;
  std::string format = "json";
  std::optional<std::string> out;
  // bounds
  std::optional<int> genus;
  std::optional<int> cusps;
  std::optional<double> length;
  std::optional<std::int64_t> trace;
  // verify
  int max_genus = 5;
  std::uint64_t seed = 20240601;
  bool formulas_only = false;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

ordered_json request_json(const Request& r) {
  auto opt = [](const auto& v) { return v ? ordered_json(*v) : ordered_json(nullptr); };
  ordered_json j{{"command", r.command}};
  if (r.command == "bounds") {
    j["genus"] = opt(r.genus);
    j["cusps"] = opt(r.cusps);
    j["length"] = opt(r.length);
    j["trace"] = opt(r.trace);
  } else if (r.command == "verify") {
    j["max_genus"] = r.max_genus;
    j["seed"] = r.seed;
    j["formulas_only"] = r.formulas_only;
    j["threads"] = r.threads;
  } else {
    j["preset"] = opt(r.preset);
    j["g"] = opt(r.g);
    j["file"] = opt(r.file);
    j["trace_max"] = opt(r.trace_max);
    j["node_cap"] = r.node_cap;
    j["threads"] = r.threads;
  }
  j["format"] = r.format;
  return j;
}

IdealTriangulation load(const Request& r) {
  if (r.preset && r.file) throw UsageError("give either --preset or --file, not both");
  if (r.file) return load_surface(*r.file);
  if (!r.preset) throw UsageError("a surface is required: --preset NAME [--g G] or --file PATH");
  return preset(*r.preset, r.g);
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kUnpairedSide:
    case ErrorKind::kNonOrientable:
    case ErrorKind::kDisconnected:
    case ErrorKind::kParse:
      return kExitSurface;
    case ErrorKind::kBudgetExceeded:
      return kExitBudget;
    default:
      return kExitUsage;
  }
}

struct Output {
  ordered_json result;
  std::optional<cli::CsvTable> csv;
  bool complete = true;
};

SystoleOptions systole_options(const Request& r) {
  SystoleOptions o;
  o.trace_max = r.trace_max;
  o.node_cap = r.node_cap;
  o.threads = r.threads;
  o.allow_partial = true;
  return o;
}

Output run_enumerate(const Request& r) {
  if (!r.trace_max) throw UsageError("enumerate needs --trace-max");
  const RibbonGraph graph(load(r));
  EnumerationOptions o;
  o.trace_max = *r.trace_max;
  o.node_cap = r.node_cap;
  o.threads = r.threads;
  o.allow_partial = true;
  const EnumerationResult res = enumerate_classes(graph, o);
  const auto rows = cli::word_rows(res.classes);
  Output out;
  out.complete = res.complete;
  out.result = {{"topology", cli::to_json(topology(graph))},
                {"trace_max", *r.trace_max},
                {"nodes", res.nodes},
                {"class_count", res.classes.size()},
                {"classes", cli::to_json(rows)}};
  out.csv = cli::rows_csv(rows);
  return out;
}

ordered_json systole_record(const RibbonGraph& graph, const SystoleResult& s) {
  return {{"topology", cli::to_json(topology(graph))},
          {"trace", s.trace},
          {"length", s.length},
          {"kissing_number", s.systoles.size()},
          {"budget", cli::to_json(s.budget, s.certified)},
          {"nodes", s.nodes},
          {"systoles", cli::to_json(cli::word_rows(s.systoles))}};
}

Output run_systole(const Request& r) {
  const RibbonGraph graph(load(r));
  const SystoleResult s = systole(graph, systole_options(r));
  Output out;
  out.complete = s.complete;
  out.result = systole_record(graph, s);
  out.csv = cli::rows_csv(cli::word_rows(s.systoles));
  return out;
}

Output run_kiss(const Request& r) {
  const RibbonGraph graph(load(r));
  const SystoleResult s = systole(graph, systole_options(r));
  Output out;
  out.complete = s.complete;
  out.result = {{"kissing_number", s.systoles.size()}, {"trace", s.trace}, {"length", s.length}};
  out.csv = cli::CsvTable{{"kissing_number", "trace", "length"},
                          {std::to_string(s.systoles.size()), std::to_string(s.trace),
                           std::to_string(s.length)}};
  return out;
}

Output run_classify(const Request& r) {
  const RibbonGraph graph(load(r));
  const SystoleResult s = systole(graph, systole_options(r));
  const ClassificationResult c = classify_systoles(graph, s.systoles);
  Output out;
  out.complete = s.complete;
  out.result = systole_record(graph, s);
  out.result["classification"] = cli::classification_json(graph, s.systoles, c);
  out.csv = cli::classification_csv(s.systoles, c);
  return out;
}

Output run_bounds(const Request& r) {
  if (!r.genus || !r.cusps) throw UsageError("bounds needs --genus and --cusps");
  if (r.length && r.trace) throw UsageError("give either --length or --trace, not both");
  std::optional<SystoleLength> length;
  if (r.trace) length = SystoleLength::from_trace(*r.trace);
  if (r.length) length = SystoleLength{*r.length, std::nullopt};
  const Signature sig{*r.genus, *r.cusps};
  sig.validate();
  const BoundReport report = bound_report(sig, length);
  Output out;
  out.result = cli::to_json(report);
  out.csv = cli::bounds_csv(report);
  return out;
}

Output run_verify(const Request& r) {
  VerificationOptions o;
  o.max_genus = r.max_genus;
  o.seed = r.seed;
  o.threads = r.threads;
  o.surfaces = !r.formulas_only;
  const VerificationReport report = run_verification(o);
  for (const SysboundRow& row : report.sysbound_table) {
    std::cerr << "sysbound g=" << row.genus << "  case1=" << row.case_many_cusps
              << "  case2=" << row.case_close_pair << "  case3=" << row.case_self_loop
              << "  2log(g)+8=" << row.packaged
              << (row.close_pair_exceeds ? "  FLAG: case 2 exceeds 2 log g + 8" : "") << '\n';
  }
  for (const Check& c : report.checks) {
    std::cerr << (c.passed ? "PASS " : "FAIL ") << "[" << c.criterion << "] " << c.name
              << (c.detail.empty() ? "" : " (" + c.detail + ")") << '\n';
  }
  Output out;
  out.result = cli::to_json(report);
  out.csv = cli::verify_csv(report);
  return out;
}

void emit(const Request& r, const std::string& text) {
  if (r.out && r.command != "build") {  // build's --out is the surface file
    std::ofstream f(*r.out);
    if (!f) throw UsageError("cannot write " + *r.out);
    f << text;
  } else {
    std::cout << text;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cusped zero-shear hyperbolic surfaces: systoles, kissing numbers and bounds"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "cuspsys 0.1.0");
  Request req;

  const int hw = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  req.threads = hw;

  auto output_opts = [&](CLI::App* sub) {
    sub->add_option("--format", req.format, "Report format")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--out", req.out, "Write the report to this path instead of stdout");
  };
  auto surface_opts = [&](CLI::App* sub) {
    auto* p = sub->add_option("--preset", req.preset, "Preset surface: torus16, genus, sphere4");
    sub->add_option("--g", req.g, "Genus for the genus preset (>= 2)");
    auto* f = sub->add_option("--file", req.file, "Surface gluing file");
    p->excludes(f);
  };
  auto search_opts = [&](CLI::App* sub) {
    sub->add_option("--trace-max", req.trace_max, "Trace bound for the search")->check(CLI::Range(2LL, 1LL << 40));
    sub->add_option("--node-cap", req.node_cap, "Search node cap");
    sub->add_option("--threads", req.threads, "Worker threads")
        ->envname("CUSPSYS_THREADS")
        ->check(CLI::Range(1, 1024));
  };

  auto* build = app.add_subcommand("build", "Validate a surface and write its gluing table");
  surface_opts(build);
  build->add_option("--format", req.format, "Report format")->check(CLI::IsMember({"json", "csv"}));
  build->add_option("--out", req.out, "Surface file to write (stdout if absent)");

  auto* enumerate = app.add_subcommand("enumerate", "Closed geodesic classes up to a trace bound");
  surface_opts(enumerate);
  search_opts(enumerate);
  output_opts(enumerate);

  for (const auto& [name, help] : {std::pair{"systole", "Systole length and systole classes"},
                                   std::pair{"kiss", "Kissing number"},
                                   std::pair{"classify", "A/B/C classification of the systoles"}}) {
    auto* sub = app.add_subcommand(name, help);
    surface_opts(sub);
    search_opts(sub);
    output_opts(sub);
  }

  auto* bounds = app.add_subcommand("bounds", "Evaluate the systole and kissing-number bounds");
  bounds->add_option("--genus", req.genus, "Genus g")->check(CLI::NonNegativeNumber);
  bounds->add_option("--cusps", req.cusps, "Number of cusps n")->check(CLI::NonNegativeNumber);
  auto* len = bounds->add_option("--length", req.length, "Systole length");
  auto* tr = bounds->add_option("--trace", req.trace, "Systole trace (exact length 2 arccosh(t/2))");
  len->excludes(tr);
  output_opts(bounds);

  auto* verify = app.add_subcommand("verify", "Run the verification battery");
  verify->add_option("--max-genus", req.max_genus, "Largest genus preset checked")->check(CLI::Range(2, 8));
  verify->add_option("--seed", req.seed, "Random seed");
  verify->add_flag("--formulas-only", req.formulas_only, "Skip the surface checks");
  verify->add_option("--threads", req.threads, "Worker threads")
      ->envname("CUSPSYS_THREADS")
      ->check(CLI::Range(1, 1024));
  output_opts(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }
  req.command = app.get_subcommands().front()->get_name();

  const auto start = std::chrono::steady_clock::now();
  Output out;
  int code = kExitOk;
  try {
    if (req.command == "build") {
      const IdealTriangulation tri = load(req);
      if (!req.out) {
        write_gluing_table(std::cout, tri.gluing_table());
        return kExitOk;
      }
      save_surface(*req.out, tri);
      const RibbonGraph graph(tri);
      out.result = {{"topology", cli::to_json(topology(tri))},
                    {"face_census", cli::census_json(graph)},
                    {"surface_file", *req.out}};
      cli::CsvTable t{{"degree", "count"}};
      for (const auto& [d, n] : graph.face_census()) t.push_back({std::to_string(d), std::to_string(n)});
      out.csv = t;
    } else if (req.command == "enumerate") {
      out = run_enumerate(req);
    } else if (req.command == "systole") {
      out = run_systole(req);
    } else if (req.command == "kiss") {
      out = run_kiss(req);
    } else if (req.command == "classify") {
      out = run_classify(req);
    } else if (req.command == "bounds") {
      out = run_bounds(req);
    } else {
      out = run_verify(req);
      if (!out.result["passed"].get<bool>()) code = kExitUsage;
    }
  } catch (const UsageError& e) {
    std::cerr << "cuspsys: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "cuspsys: " << to_string(e.kind()) << ": " << e.what() << '\n';
    if (e.kind() != ErrorKind::kBudgetExceeded) return exit_code_for(e.kind());
    out.complete = false;
    out.result = {{"error", e.what()}};
    out.csv.reset();
  } catch (const std::exception& e) {
    std::cerr << "cuspsys: " << e.what() << '\n';
    return kExitUsage;
  }
  if (!out.complete) {
    code = kExitBudget;
    std::cerr << "cuspsys: node cap reached; the report is partial\n";
  }

  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::string text;
  if (req.format == "csv") {
    text = out.csv ? cli::render_csv(*out.csv) : std::string("error\n") + out.result.value("error", "") + "\n";
  } else {
    ordered_json report{{"tool", "cuspsys"},
                        {"version", "0.1.0"},
                        {"request", request_json(req)},
                        {"complete", out.complete},
                        {"timing", {{"seconds", seconds}}},
                        {"result", out.result}};
    text = report.dump(2) + "\n";
  }
  try {
    emit(req, text);
  } catch (const UsageError& e) {
    std::cerr << "cuspsys: " << e.what() << '\n';
    return kExitUsage;
  }
  return code;
}
