// affmod: replays the algebraic checks on B_n, C_1, C_2 and prints a
// summary table plus one JSON object per report.

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>

#include "CLI11.hpp"
#include "affmod/verifier.hpp"

namespace {

struct Options {
  std::optional<unsigned> n;
  std::vector<std::string> lambdas;
  long box = 5;
  std::string field;
  std::string json_path;
  std::string table_path;
  bool quiet = false;
  std::string a, b, pairs;
  std::string probe_set = "full";
};

void print_table(const std::vector<affmod::VerificationReport>& reports) {
  std::size_t w = 8;
  for (const auto& r : reports) w = std::max(w, r.claim_id.size());
  std::cout << std::left << std::setw(static_cast<int>(w) + 2) << "claim" << std::setw(23) << "status" << std::right
            << std::setw(10) << "ms" << "  detail\n";
  for (const auto& r : reports) {
    std::cout << std::left << std::setw(static_cast<int>(w) + 2) << r.claim_id << std::setw(23)
              << affmod::to_string(r.status) << std::right << std::setw(10) << std::fixed << std::setprecision(2)
              << r.wall_ms << "  " << r.detail << "\n";
  }
}

void write_json_lines(const std::vector<affmod::VerificationReport>& reports, const std::string& path) {
  if (path.empty()) return;
  if (path == "-") {
    for (const auto& r : reports) std::cout << affmod::to_json(r).dump() << "\n";
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  for (const auto& r : reports) out << affmod::to_json(r).dump() << "\n";
}

template <class Field>
std::vector<affmod::VerificationReport> run(const std::string& command, const Options& opt, const Field& field) {
  using namespace affmod;
  RunConfig cfg;
  if (!opt.lambdas.empty()) {
    cfg.lambdas.clear();
    for (const auto& l : opt.lambdas) cfg.lambdas.push_back(parse_rational_literal(l));
  }
  cfg.box = opt.box;
  if (!opt.pairs.empty()) cfg.samuel_pairs = read_expression_pairs(opt.pairs);
  if (!opt.a.empty() || !opt.b.empty()) cfg.samuel_pairs.emplace_back(opt.a, opt.b);

  auto ns = [&](unsigned lo) {
    std::vector<unsigned> out;
    if (opt.n)
      out.push_back(*opt.n);
    else
      for (unsigned n = lo; n <= 5; ++n) out.push_back(n);
    return out;
  };

  std::vector<VerificationReport> out;
  if (command == "fibers") {
    auto lambdas = lambda_values(cfg, field);
    nlohmann::json table = nlohmann::json::array();
    for (unsigned n : ns(1)) {
      out.push_back(cmd_fibers(n, lambdas, field));
      for (auto& row : fiber_rows_json(fiber_table(n, lambdas, field), field)) table.push_back(row);
    }
    if (!opt.table_path.empty()) {
      std::ofstream t(opt.table_path);
      if (!t) throw std::runtime_error("cannot write " + opt.table_path);
      t << table.dump(2) << "\n";
    }
  } else if (command == "takanori") {
    out.push_back(cmd_takanori(field));
    out.push_back(cmd_b1_swap(field));
  } else if (command == "samuel") {
    if (cfg.samuel_pairs.empty())
      for (unsigned n : ns(1)) out.push_back(cmd_samuel(n, field));
    for (const auto& [a, b] : cfg.samuel_pairs) out.push_back(cmd_samuel_pair(a, b, field));
  } else if (command == "localization") {
    for (unsigned n : ns(1)) out.push_back(cmd_localization(n, field));
  } else if (command == "main-identities") {
    for (unsigned n : ns(2)) out.push_back(cmd_main_identities(n, field));
  } else if (command == "degree-probe") {
    if (opt.probe_set != "full" && opt.probe_set != "xyu") throw std::invalid_argument("--probe-set is full or xyu");
    auto set = opt.probe_set == "full" ? ProbeSet::Full : ProbeSet::WithoutSwapped;
    out.push_back(cmd_degree_probe(opt.n.value_or(5), opt.box, set, field));
    if (set == ProbeSet::Full) out.push_back(cmd_probe_needs_v(field));
  } else if (command == "all") {
    if (opt.n) cfg.n_max = *opt.n;
    out = cmd_all(cfg, field);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact checks for the rings B_n = k[x, y][(x - 1)/(x^n y - 1)], C_1 and C_2"};
  app.require_subcommand(1);
  Options opt;
  const char* env_field = std::getenv("AFFMOD_FIELD");
  opt.field = env_field ? env_field : "rational";

  app.add_option("--n", opt.n, "single n (n_max for degree-probe and all)")->check(CLI::PositiveNumber);
  app.add_option("--lambda", opt.lambdas, "fiber value, repeatable; rational literals such as 1/2");
  app.add_option("--box", opt.box, "weights range over [-box, box]^2")->check(CLI::NonNegativeNumber);
  app.add_option("--field", opt.field, "rational or fp:PRIME (default from AFFMOD_FIELD)");
  app.add_option("--json", opt.json_path, "write JSON lines here ('-' for stdout)");
  app.add_flag("--quiet", opt.quiet, "no summary table");
  app.add_option("--a", opt.a, "samuel: the element a");
  app.add_option("--b", opt.b, "samuel: the element b");
  app.add_option("--pairs", opt.pairs, "file of 'a, b' lines checked with samuel")->check(CLI::ExistingFile);
  app.add_option("--table", opt.table_path, "fibers: write the classified fiber table as JSON");
  app.add_option("--probe-set", opt.probe_set, "degree-probe: full or xyu");

  const std::vector<std::pair<std::string, std::string>> commands{
      {"fibers", "classify the fibers of x, u, y"},
      {"takanori", "the isomorphisms between C_1, C_2 and B_1"},
      {"samuel", "hypotheses making A[b/a] factorial with trivial units"},
      {"localization", "k[x, 1/x, y, 1/t] = k[x, 1/x, t, 1/t]"},
      {"main-identities", "polynomial identities and degree bookkeeping of the non-isomorphism argument"},
      {"degree-probe", "weight-family search for non-negative degree functions"},
      {"all", "every command at default parameters"},
  };
  for (const auto& [name, help] : commands) app.add_subcommand(name, help)->fallthrough();

  CLI11_PARSE(app, argc, argv);
  std::string command = app.get_subcommands().front()->get_name();

  try {
    if ((opt.a.empty()) != (opt.b.empty())) throw std::invalid_argument("--a and --b go together");
    auto field = affmod::parse_field_spec(opt.field);
    auto reports = std::visit([&](const auto& f) { return run(command, opt, f); }, field);
    if (!opt.quiet) print_table(reports);
    write_json_lines(reports, opt.json_path);
    if (affmod::any_failed(reports)) {
      for (const auto& r : reports)
        if (r.status == affmod::Status::Failed) std::cerr << "failed: " << r.claim_id << ": " << r.detail << "\n";
      return 1;
    }
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
