#include "sumsetlab/cli.hpp"

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "sumsetlab/bounds.hpp"
#include "sumsetlab/constructions.hpp"
#include "sumsetlab/errors.hpp"
#include "sumsetlab/group.hpp"
#include "sumsetlab/layered_graph.hpp"
#include "sumsetlab/magnification.hpp"
#include "sumsetlab/partition.hpp"
#include "sumsetlab/suite.hpp"

namespace sumsetlab {

namespace {

nlohmann::json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(path + ": " + e.what());
  }
}

GSet read_set(const std::string& path) { return gset_from_json(read_json(path)); }
LayeredGraph read_graph(const std::string& path) { return graph_from_json(read_json(path)); }

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw InputError("cannot write " + path.string());
  f << text;
}

std::string dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

struct Common {
  std::size_t cap = kUnlimited;
  std::size_t max_bottom = kSubsetEnumerationCap;
  std::size_t max_edges = 10'000;
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact sumset growth, magnification ratios and certified bounds", "sumsetlab"};
  // "-h" would clash with the --h summand option.
  app.set_help_flag("--help", "Print this help message and exit");
  app.require_subcommand(1);
  Common common;

  // sumset
  auto* sumset_cmd = app.add_subcommand("sumset", "Cardinalities |A + iB| for i = 0..h and the set A + hB");
  std::string a_path, b_path, c_path, g_path;
  unsigned h = 1;
  bool cardinality_only = false;
  sumset_cmd->add_option("A", a_path, "set A (JSON)")->required();
  sumset_cmd->add_option("B", b_path, "set B (JSON)")->required();
  sumset_cmd->add_option("--h", h, "number of summands of B")->required()->check(CLI::PositiveNumber);
  sumset_cmd->add_flag("--cardinality-only", cardinality_only, "omit the elements of A + hB");
  sumset_cmd->add_option("--cap", common.cap, "sumset cardinality guard");

  // graph
  auto* graph_cmd = app.add_subcommand("graph", "Build or check layered graphs");
  graph_cmd->require_subcommand(1);
  auto* build_cmd = graph_cmd->add_subcommand("build", "Addition graph G_+(A, B) of height h");
  build_cmd->add_option("A", a_path)->required();
  build_cmd->add_option("B", b_path)->required();
  build_cmd->add_option("--h", h)->required()->check(CLI::PositiveNumber);
  build_cmd->add_option("--cap", common.cap, "sumset cardinality guard");
  auto* restrict_cmd = graph_cmd->add_subcommand("restrict", "Restricted addition graph G_R(A, B, C) of height h");
  restrict_cmd->add_option("A", a_path)->required();
  restrict_cmd->add_option("B", b_path)->required();
  restrict_cmd->add_option("C", c_path)->required();
  restrict_cmd->add_option("--h", h)->required()->check(CLI::PositiveNumber);
  restrict_cmd->add_option("--cap", common.cap, "sumset cardinality guard");
  auto* check_cmd = graph_cmd->add_subcommand("check", "Upward and downward lifting conditions");
  check_cmd->add_option("G", g_path)->required();
  check_cmd->add_option("--max-edges", common.max_edges, "edge guard for the check");

  // mag
  auto* mag_cmd = app.add_subcommand("mag", "Magnification ratio D_i and its maximal tight set");
  std::size_t level = 1;
  bool oracle = false;
  mag_cmd->add_option("G", g_path)->required();
  mag_cmd->add_option("--level", level, "level i")->required()->check(CLI::PositiveNumber);
  mag_cmd->add_flag("--oracle", oracle, "enumerate all subsets instead of using flows");
  mag_cmd->add_option("--max-bottom", common.max_bottom, "subset-enumeration guard");

  // partition
  auto* part_cmd = app.add_subcommand("partition", "Peel V_0 into maximal tight blocks");
  bool with_subgraphs = false;
  part_cmd->add_option("G", g_path)->required();
  part_cmd->add_flag("--subgraphs", with_subgraphs, "include each block subgraph");
  part_cmd->add_option("--max-edges", common.max_edges, "edge guard for commutativity checks");

  // bounds
  auto* bounds_cmd = app.add_subcommand("bounds", "Every bound for (A, B, h) with verdicts, as JSON and CSV");
  std::string csv_path;
  std::string instance = "instance";
  bounds_cmd->add_option("A", a_path)->required();
  bounds_cmd->add_option("B", b_path)->required();
  bounds_cmd->add_option("--h", h)->required()->check(CLI::PositiveNumber);
  bounds_cmd->add_option("--csv", csv_path, "also write header and row to this file");
  bounds_cmd->add_option("--instance", instance, "instance name for the CSV row");
  bounds_cmd->add_option("--cap", common.cap, "sumset cardinality guard");

  // construct
  auto* construct_cmd = app.add_subcommand("construct", "Extremal example generators");
  construct_cmd->require_subcommand(1);
  std::string out_dir = ".";
  std::int64_t a_param = 0, l_param = 1;
  std::string alpha_text;
  auto* ex1_cmd = construct_cmd->add_subcommand("example1", "grid plus independent points in Z_b^k");
  ex1_cmd->add_option("--h", h)->required()->check(CLI::PositiveNumber);
  ex1_cmd->add_option("--a", a_param)->required();
  ex1_cmd->add_option("--l", l_param)->required();
  ex1_cmd->add_option("--out-dir", out_dir, "where A.json, B.json and spec.json go");
  auto* ex2_cmd = construct_cmd->add_subcommand("example2", "subgroup sum plus coset points");
  ex2_cmd->add_option("--h", h)->required()->check(CLI::PositiveNumber);
  ex2_cmd->add_option("--a", a_param)->required();
  ex2_cmd->add_option("--alpha", alpha_text, "alpha as p/q or a decimal")->required();
  ex2_cmd->add_option("--out-dir", out_dir, "where A.json, B.json and spec.json go");

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "Batch verification");
  verify_cmd->require_subcommand(1);
  auto* suite_cmd = verify_cmd->add_subcommand("suite", "Run the acceptance property suite");
  std::uint64_t seed = 42;
  std::optional<std::size_t> cases;
  unsigned threads = 0;
  std::vector<int> only;
  bool as_json = false;
  suite_cmd->add_option("--seed", seed, "generator seed");
  suite_cmd->add_option("--cases", cases, "cases per randomized criterion")->check(CLI::PositiveNumber);
  suite_cmd->add_option("--threads", threads, "worker threads (SUMSETLAB_THREADS caps this)");
  suite_cmd->add_option("--only", only, "criterion ids to run")->check(CLI::Range(1, kCriterionCount));
  suite_cmd->add_flag("--json", as_json, "emit the report as JSON");

  std::vector<std::string> argv_store{"sumsetlab"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_store) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitInputError;
  }

  try {
    if (*sumset_cmd) {
      GSet a = read_set(a_path);
      GSet b = read_set(b_path);
      if (a.space() != b.space()) throw InputError("A and B live in different group spaces");
      nlohmann::json j;
      j["schema"] = 1;
      j["h"] = h;
      GSet cur = a;
      std::vector<std::size_t> cards{cur.size()};
      for (unsigned i = 1; i <= h; ++i) {
        cur = sumset(cur, b, common.cap);
        cards.push_back(cur.size());
      }
      j["cardinalities"] = cards;
      if (!cardinality_only) j["sumset"] = to_json(cur);
      out << dump(j);
      return kExitPass;
    }
    if (*build_cmd) {
      out << dump(to_json(build_addition_graph(read_set(a_path), read_set(b_path), h, common.cap)));
      return kExitPass;
    }
    if (*restrict_cmd) {
      out << dump(to_json(
          build_restricted_graph(read_set(a_path), read_set(b_path), read_set(c_path), h, common.cap)));
      return kExitPass;
    }
    if (*check_cmd) {
      auto rep = check_commutative(read_graph(g_path), {common.max_edges});
      nlohmann::json j;
      j["schema"] = 1;
      j["upward"] = rep.upward_ok;
      j["downward"] = rep.downward_ok;
      j["commutative"] = rep.commutative();
      auto v = nlohmann::json::array();
      for (const auto& x : rep.violations) {
        v.push_back({{"direction", x.direction == CommutativityViolation::Direction::upward ? "upward" : "downward"},
                     {"path", {x.first, x.second, x.third}}});
      }
      j["violations"] = v;
      out << dump(j);
      return rep.commutative() ? kExitPass : kExitVerdictFailed;
    }
    if (*mag_cmd) {
      auto g = read_graph(g_path);
      auto res = oracle ? magnification_bruteforce(g, level, common.max_bottom).result : magnification_flow(g, level);
      out << dump(to_json(res));
      return kExitPass;
    }
    if (*part_cmd) {
      auto g = read_graph(g_path);
      auto p = partition_graph(g, {true, common.max_edges});
      auto v = verify_partition(g, p, {true, common.max_edges});
      auto j = to_json(p, with_subgraphs);
      j["schema"] = 1;
      j["verified"] = v.ok();
      j["top_sum"] = v.top_sum;
      if (!v.messages.empty()) j["messages"] = v.messages;
      out << dump(j);
      return v.ok() ? kExitPass : kExitVerdictFailed;
    }
    if (*bounds_cmd) {
      auto rep = bound_report(read_set(a_path), read_set(b_path), h, {common.cap});
      auto j = to_json(rep);
      j["csv"] = {{"header", csv_header()}, {"row", csv_row(rep, instance)}};
      if (!csv_path.empty()) write_file(csv_path, csv_header() + "\n" + csv_row(rep, instance) + "\n");
      out << dump(j);
      if (!rep.all_pass()) {
        for (const auto& b : rep.bounds) {
          if (b.pass && !*b.pass) err << instance << ": bound " << b.name << " failed\n";
        }
        return kExitVerdictFailed;
      }
      return kExitPass;
    }
    if (*ex1_cmd || *ex2_cmd) {
      auto c = *ex1_cmd ? example1(h, a_param, l_param) : example2(h, a_param, Ratio::parse(alpha_text));
      std::filesystem::path dir(out_dir);
      std::error_code ec;
      std::filesystem::create_directories(dir, ec);
      write_file(dir / "A.json", dump(to_json(c.a)));
      write_file(dir / "B.json", dump(to_json(c.b)));
      write_file(dir / "spec.json", dump(to_json(c.spec)));
      out << dump(to_json(c.spec));
      return kExitPass;
    }
    if (*suite_cmd) {
      SuiteOptions opts;
      opts.seed = seed;
      opts.cases = cases;
      opts.threads = threads;
      opts.only = only;
      auto rep = run_suite(opts);
      out << (as_json ? dump(to_json(rep)) : format_text(rep));
      return rep.pass() ? kExitPass : kExitVerdictFailed;
    }
  } catch (const GuardError& e) {
    err << "guard exceeded: " << e.guard() << ": " << e.what() << "\n";
    return kExitInputError;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const nlohmann::json::exception& e) {
    err << "input error: " << e.what() << "\n";
    return kExitInputError;
  }
  err << "usage error: no command\n";
  return kExitInputError;
}

}  // namespace sumsetlab
