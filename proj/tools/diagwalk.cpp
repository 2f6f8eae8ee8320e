// Command-line front end: count, walks, graph, verify.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "diagwalk/diagonal.hpp"
#include "diagwalk/gp_graph.hpp"
#include "diagwalk/literals.hpp"
#include "diagwalk/neps.hpp"
#include "diagwalk/verify.hpp"

using namespace diagwalk;
using Json = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitVerifyFailed = 3;

enum class Format { Json, Csv, Table };

Format parse_format(const std::string& text) {
  if (text == "json") return Format::Json;
  if (text == "csv") return Format::Csv;
  return Format::Table;
}

std::uint64_t enumeration_cap(std::uint64_t flag_value) {
  if (flag_value != 0) return flag_value;
  if (const char* env = std::getenv("DIAGWALK_ENUM_CAP")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw Error(Errc::ParseError, std::string("DIAGWALK_ENUM_CAP is not an integer: ") + env);
    }
  }
  return kDefaultEnumerationCap;
}

Json report_json(const DivisibilityReport& report) {
  Json cases = Json::array();
  for (char c : report.cases) cases.push_back(std::string(1, c));
  return Json{{"p", report.p},
              {"a", report.a},
              {"b", report.b},
              {"k_integer", report.k_integer},
              {"cases", cases},
              {"notes", report.notes}};
}

// Plain "key: value" rendering of a flat record.
void print_table(const Json& record) {
  std::size_t width = 0;
  for (const auto& [key, value] : record.items()) width = std::max(width, key.size());
  for (const auto& [key, value] : record.items()) {
    std::cout << key << std::string(width - key.size() + 2, ' ');
    if (value.is_string())
      std::cout << value.get<std::string>();
    else
      std::cout << value.dump();
    std::cout << '\n';
  }
}

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  }
};

struct CountArgs {
  std::uint32_t p = 0, a = 0, b = 0;
  std::string alpha;
  unsigned s = 0;
  bool nonzero_only = false;
  std::string method = "formula";
  std::string format = "json";
  std::uint64_t cap = 0;
  bool timing = false;
};

int run_count(const CountArgs& args) {
  const Timer timer;
  const auto method = parse_method(args.method);
  if (!method) throw Error(Errc::ParseError, "unknown method '" + args.method + "'");
  const DiagonalSystem sys(args.p, args.a, args.b);
  const FieldElement alpha = parse_element(sys.field(), args.alpha);
  const CountMode mode = args.nonzero_only ? CountMode::Nonzero : CountMode::All;
  const SolutionCount count = sys.count(alpha, args.s, mode, *method, enumeration_cap(args.cap));

  const Format format = parse_format(args.format);
  if (format == Format::Csv) {
    std::cout << "p,a,b,k,q,alpha,n,mode,method,count\n"
              << sys.p() << ',' << sys.a() << ',' << sys.b() << ',' << sys.k() << ',' << sys.q() << ",\""
              << args.alpha << "\"," << args.s << ',' << to_string(mode) << ',' << to_string(*method) << ','
              << to_decimal(count) << '\n';
    return kExitOk;
  }
  Json record{{"command", "count"},
              {"p", sys.p()},
              {"a", sys.a()},
              {"b", sys.b()},
              {"k", sys.k()},
              {"q", sys.q()},
              {"alpha", args.alpha},
              {"r_or_s", args.s},
              {"mode", std::string(to_string(mode))},
              {"count", to_decimal(count)},
              {"method", std::string(to_string(*method))}};
  if (format == Format::Json) record["divisibility"] = report_json(remark_cases(sys.p(), sys.a(), sys.b()));
  if (args.timing) record["elapsed_ms"] = timer.ms();
  if (format == Format::Json)
    std::cout << record.dump(2) << '\n';
  else
    print_table(record);
  return kExitOk;
}

struct WalksArgs {
  bool gp = false;
  std::uint32_t p = 0, m = 0;
  std::uint64_t k = 0;
  std::string neps;
  std::string basis;
  std::string from, to;
  unsigned length = 0;
  std::string format = "json";
  bool timing = false;
};

std::vector<std::uint64_t> parse_sizes(const std::string& text) {
  std::vector<std::uint64_t> out;
  for (auto v : parse_coefficients(text)) {
    if (v == 0) throw Error(Errc::ParseError, "factor sizes must be positive");
    out.push_back(v);
  }
  return out;
}

std::size_t parse_vertex(const std::string& text) {
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos)
    throw Error(Errc::ParseError, "vertex must be a nonnegative integer: '" + text + "'");
  return std::stoull(text);
}

int run_walks(const WalksArgs& args) {
  const Timer timer;
  Json record{{"command", "walks"}};
  std::string formula_route;
  BigInt formula;
  std::optional<BigInt> matrix;

  if (args.gp) {
    if (args.p == 0 || args.m == 0 || args.k == 0)
      throw Error(Errc::ParseError, "--gp needs --p, --m and --k");
    const FiniteField field = build_field(args.p, args.m);
    const FieldElement x = parse_element(field, args.from);
    const FieldElement y = parse_element(field, args.to);
    const GpGraphParams params = gp_params(field, args.k);
    const auto decompositions = hamming_parameters(args.p, args.m, args.k);
    if (!decompositions.empty()) {
      const HammingView view(field, args.k, decompositions.front());
      formula = hamming_walks(view.b(), view.alphabet(), args.length, view.agreement(x, y));
      formula_route = "hamming";
    } else {
      // Walks from x to y correspond to solutions of x_1^k + ... + x_r^k = y - x.
      formula = convolution_count(field, args.k, field.sub(y, x), args.length, true) /
                ipow(BigInt(args.k), args.length);
      formula_route = "convolution";
    }
    if (field.order() <= kMaxDenseOrder)
      matrix = walk_count_power(gp_graph(field, args.k), args.length, x.index(), y.index());
    record["graph"] = "gp";
    record["p"] = args.p;
    record["m"] = args.m;
    record["k"] = args.k;
    record["q"] = field.order();
    record["connected"] = params.connected;
    record["undirected"] = params.undirected;
  } else {
    if (args.neps.empty() || args.basis.empty()) throw Error(Errc::ParseError, "either --gp or --neps with --basis");
    const auto sizes = parse_sizes(args.neps);
    const NepsBasis basis = NepsBasis::parse(args.basis);
    if (basis.arity() != sizes.size())
      throw Error(Errc::ArityMismatch, "basis arity differs from the number of factors");
    std::vector<std::size_t> dims(sizes.begin(), sizes.end());
    std::size_t total = 1;
    for (auto s : sizes) {
      if (total > std::numeric_limits<std::size_t>::max() / s) throw Error(Errc::ProductTooLarge, "product overflow");
      total *= s;
    }
    const std::size_t vi = parse_vertex(args.from);
    const std::size_t vj = parse_vertex(args.to);
    if (vi >= total || vj >= total)
      throw Error(Errc::VertexOutOfRange, "vertices must lie in [0, " + std::to_string(total) + ")");
    formula = neps_complete_walks(sizes, basis, args.length, agreement_pattern(dims, vi, vj));
    formula_route = "neps-complete";
    if (total <= kMaxDenseOrder) {
      std::vector<DenseGraph> factors;
      for (auto s : sizes) factors.push_back(complete_graph(s));
      matrix = walk_count_power(neps_construct(factors, basis), args.length, vi, vj);
    }
    record["graph"] = "neps";
    record["factors"] = args.neps;
    record["basis"] = basis.to_string();
    record["vertices"] = total;
  }
  record["from"] = args.from;
  record["to"] = args.to;
  record["length"] = args.length;
  record["formula"] = to_decimal(formula);
  record["formula_route"] = formula_route;
  record["matrix_power"] = matrix ? Json(to_decimal(*matrix)) : Json(nullptr);
  record["agree"] = !matrix || *matrix == formula;
  if (args.timing) record["elapsed_ms"] = timer.ms();

  const Format format = parse_format(args.format);
  if (format == Format::Json) {
    std::cout << record.dump(2) << '\n';
  } else if (format == Format::Csv) {
    std::cout << "graph,from,to,length,formula,matrix_power\n"
              << record["graph"].get<std::string>() << ",\"" << args.from << "\",\"" << args.to << "\","
              << args.length << ',' << to_decimal(formula) << ',' << (matrix ? to_decimal(*matrix) : "") << '\n';
  } else {
    print_table(record);
  }
  return matrix && *matrix != formula ? kExitVerifyFailed : kExitOk;
}

struct GraphArgs {
  bool gp = false;
  std::uint32_t p = 0, m = 0;
  std::uint64_t k = 0;
  std::string neps;
  std::string basis;
};

int run_graph(const GraphArgs& args) {
  if (args.gp) {
    const FiniteField field = build_field(args.p, args.m);
    std::cout << gp_graph(field, args.k).adjacency_list();
    return kExitOk;
  }
  if (args.neps.empty() || args.basis.empty()) throw Error(Errc::ParseError, "either --gp or --neps with --basis");
  std::vector<DenseGraph> factors;
  for (auto s : parse_sizes(args.neps)) factors.push_back(complete_graph(s));
  std::cout << neps_construct(factors, NepsBasis::parse(args.basis)).adjacency_list();
  return kExitOk;
}

struct VerifyArgs {
  std::vector<std::string> roster;
  unsigned max_r = 4;
  std::uint64_t cap = 0;
  unsigned neps_instances = 200;
  std::uint64_t seed = VerifyOptions{}.seed;
  bool inject_fault = false;
  std::string format = "table";
};

int run_verify(const VerifyArgs& args) {
  VerifyOptions options;
  if (!args.roster.empty()) {
    options.roster.clear();
    for (const auto& r : args.roster)
      for (const auto& entry : parse_roster(r)) options.roster.push_back(entry);
  }
  options.max_r = args.max_r;
  options.enumeration_cap = enumeration_cap(args.cap);
  options.neps_instances = args.neps_instances;
  options.seed = args.seed;
  options.inject_fault = args.inject_fault;

  const VerifyReport report = run_verification(options);
  if (parse_format(args.format) == Format::Json) {
    Json suites = Json::array();
    for (const auto& r : report.results)
      suites.push_back(Json{{"suite", r.suite},
                            {"scope", r.scope},
                            {"passed", r.passed},
                            {"checks", r.checks},
                            {"skipped", r.skipped},
                            {"counterexample", r.counterexample}});
    std::cout << Json{{"command", "verify"}, {"passed", report.passed()}, {"suites", suites}}.dump(2) << '\n';
  } else {
    for (const auto& r : report.results) {
      std::cout << (r.passed ? "PASS" : "FAIL") << "  " << r.suite << "  [" << r.scope << "]  checks=" << r.checks;
      if (r.skipped > 0) std::cout << " skipped=" << r.skipped;
      std::cout << '\n';
    }
    if (const SuiteResult* failure = report.first_failure())
      std::cout << "counterexample (" << failure->suite << ", " << failure->scope << "): " << failure->counterexample
                << '\n';
    std::cout << (report.passed() ? "all suites passed" : "verification FAILED") << '\n';
  }
  return report.passed() ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact solution counts for diagonal equations via walks in NEPS and Hamming graphs"};
  app.require_subcommand(1);
  const std::vector<std::string> formats{"json", "csv", "table"};

  CountArgs count;
  auto* count_cmd = app.add_subcommand("count", "Solutions of x_1^k + ... + x_s^k = alpha over F_{p^{ab}}");
  count_cmd->add_option("--p", count.p, "Characteristic")->required();
  count_cmd->add_option("--a", count.a, "Subfield degree")->required();
  count_cmd->add_option("--b", count.b, "Number of Hamming coordinates (> 1)")->required();
  count_cmd->add_option("--alpha", count.alpha, "Right-hand side: 0 | pow:<e> | c0,c1,...")->required();
  count_cmd->add_option("--s", count.s, "Number of summands")->required();
  count_cmd->add_flag("--nonzero-only", count.nonzero_only, "Count over (F^*)^s instead of F^s");
  count_cmd->add_option("--method", count.method, "formula | brute | convolution | walk")
      ->check(CLI::IsMember({"formula", "brute", "convolution", "walk"}));
  count_cmd->add_option("--format", count.format)->check(CLI::IsMember(formats));
  count_cmd->add_option("--cap", count.cap, "Enumeration cap for --method brute (env DIAGWALK_ENUM_CAP)");
  count_cmd->add_flag("--timing", count.timing, "Include elapsed milliseconds");

  WalksArgs walks;
  auto* walks_cmd = app.add_subcommand("walks", "Walk counts by closed formula and by matrix power");
  walks_cmd->add_flag("--gp", walks.gp, "Generalized Paley graph on F_{p^m} with R_k");
  walks_cmd->add_option("--p", walks.p);
  walks_cmd->add_option("--m", walks.m);
  walks_cmd->add_option("--k", walks.k);
  walks_cmd->add_option("--neps", walks.neps, "Complete-graph factor sizes, e.g. 3,4");
  walks_cmd->add_option("--basis", walks.basis, "Basis literal, e.g. 11 or \"10;01\"");
  walks_cmd->add_option("--from", walks.from, "Start vertex (element literal for --gp)")->required();
  walks_cmd->add_option("--to", walks.to, "End vertex")->required();
  walks_cmd->add_option("--length", walks.length)->required();
  walks_cmd->add_option("--format", walks.format)->check(CLI::IsMember(formats));
  walks_cmd->add_flag("--timing", walks.timing);

  GraphArgs graph;
  auto* graph_cmd = app.add_subcommand("graph", "Print a graph as an adjacency list");
  graph_cmd->add_flag("--gp", graph.gp);
  graph_cmd->add_option("--p", graph.p);
  graph_cmd->add_option("--m", graph.m);
  graph_cmd->add_option("--k", graph.k);
  graph_cmd->add_option("--neps", graph.neps);
  graph_cmd->add_option("--basis", graph.basis);

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Run the formula-versus-oracle suites");
  verify_cmd->add_option("--roster", verify.roster, "p,a,b triples, e.g. 3,1,2 or \"3,1,2;5,1,2\"");
  verify_cmd->add_option("--max-r", verify.max_r);
  verify_cmd->add_option("--cap", verify.cap, "Enumeration cap (env DIAGWALK_ENUM_CAP)");
  verify_cmd->add_option("--neps-instances", verify.neps_instances);
  verify_cmd->add_option("--seed", verify.seed);
  verify_cmd->add_flag("--inject-fault", verify.inject_fault)->group("");
  verify_cmd->add_option("--format", verify.format)->check(CLI::IsMember(formats));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*count_cmd) return run_count(count);
    if (*walks_cmd) return run_walks(walks);
    if (*graph_cmd) return run_graph(graph);
    if (*verify_cmd) return run_verify(verify);
  } catch (const KNotIntegerError& e) {
    std::cerr << "error: " << e.what() << '\n' << report_json(e.report()).dump(2) << '\n';
    return kExitInvalid;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.code() == Errc::ParseError ? kExitUsage : kExitInvalid;
  }
  return kExitUsage;
}
