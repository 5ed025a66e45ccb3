// realclass: real conjugacy classes, the real-class prime graph, and the
// statement suite, from the command line.
//
//   realclass analyze dihedral 6
//   realclass analyze groups.txt --json out.json
//   realclass verify --corpus builtin --jobs 4
//   realclass hunt --corpus builtin
//   realclass example48
//   realclass search48 --out corpus/order48.groups
//
// Exit codes: 0 success, 1 verification failure or example not found,
// 2 usage or input error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "realclass/realclass.hpp"

namespace {

using namespace realclass;

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

void write_output(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

std::vector<GroupSpec> analyze_targets(const std::vector<std::string>& targets) {
  if (!targets.empty() && is_family_name(targets[0])) return {family(targets)};
  std::vector<GroupSpec> out;
  for (const auto& t : targets) {
    auto specs = load_corpus(t);
    out.insert(out.end(), specs.begin(), specs.end());
  }
  return out;
}

std::vector<std::string> split_ids(const std::vector<std::string>& raw) {
  std::vector<std::string> out;
  for (const auto& chunk : raw) {
    std::stringstream in(chunk);
    for (std::string id; std::getline(in, id, ',');)
      if (!id.empty()) out.push_back(id);
  }
  return out.empty() ? all_statement_ids() : out;
}

void print_failures(const std::vector<Report>& reports) {
  for (const auto& r : reports) {
    if (r.error) {
      std::cerr << "skipped " << r.spec.name << ": " << *r.error << "\n";
      continue;
    }
    for (const auto& v : r.verdicts)
      if (v.applicable && !v.passed)
        std::cerr << "FAIL " << v.statement << " on " << r.spec.name << ": "
                  << v.witness.value_or("(no witness)") << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Real conjugacy classes and their prime graph for finite permutation groups"};
  app.require_subcommand(1);
  const std::size_t hardware = std::max(1u, std::thread::hardware_concurrency());

  std::vector<std::string> targets;
  std::string analyze_json;
  std::vector<std::string> analyze_ids;
  auto* analyze = app.add_subcommand("analyze", "Report on groups given as files or a family expression");
  analyze->add_option("target", targets, "group file, corpus directory, or family expression")->required();
  analyze->add_option("--json", analyze_json, "write the JSON report here instead of stdout");
  analyze->add_option("--statements", analyze_ids, "comma-separated statement ids");

  std::string corpus = "builtin";
  std::vector<std::string> verify_ids;
  std::size_t jobs = hardware;
  std::string verify_json;
  auto* verify = app.add_subcommand("verify", "Run the statement suite over a corpus");
  verify->add_option("--statements", verify_ids, "comma-separated statement ids");
  verify->add_option("--corpus", corpus, "'builtin', a corpus directory, a manifest, or a group file");
  verify->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
  verify->add_option("--json", verify_json, "also write every report as JSON");

  std::string hunt_json;
  auto* hunt = app.add_subcommand("hunt", "List 2-closed groups whose real-class prime graph is disconnected");
  hunt->add_option("--corpus", corpus, "'builtin', a corpus directory, a manifest, or a group file");
  hunt->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
  hunt->add_option("--json", hunt_json, "write JSON here instead of stdout");

  auto* example48 = app.add_subcommand("example48", "Find the order-48 group with real class sizes 1, 3, 8");
  example48->add_option("--corpus", corpus, "'builtin', a corpus directory, a manifest, or a group file");

  std::string search_out;
  auto* search48 = app.add_subcommand("search48", "Enumerate Alt4:C4 candidates as a group file");
  search48->add_option("--out", search_out, "output path (default stdout)");

  auto* list = app.add_subcommand("statements", "List statement ids in suite order");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*list) {
      for (const auto& id : all_statement_ids()) std::cout << id << "\n";
      return kOk;
    }
    if (*analyze) {
      const auto specs = analyze_targets(targets);
      const auto reports = sweep(specs, split_ids(analyze_ids), 1);
      json out = json::array();
      for (const auto& r : reports) out.push_back(to_json(r));
      write_output(render(out), analyze_json);
      return kOk;
    }
    if (*verify) {
      const auto specs = load_corpus(corpus);
      const auto reports = sweep(specs, split_ids(verify_ids), jobs);
      const auto summary = summarize(reports);
      print_failures(reports);
      if (!verify_json.empty()) {
        json out = {{"summary", to_json(summary)}, {"reports", json::array()}};
        for (const auto& r : reports) out["reports"].push_back(to_json(r));
        write_output(render(out), verify_json);
      }
      std::cout << "groups " << summary.groups << ", skipped " << summary.skipped << ", verdicts "
                << summary.verdicts << ", passed " << summary.passed << ", failed "
                << summary.failed << ", inapplicable " << summary.inapplicable << "\n";
      return summary.failed == 0 ? kOk : kFailed;
    }
    if (*hunt) {
      write_output(render(to_json(hunt_conjecture(load_corpus(corpus), jobs))), hunt_json);
      return kOk;
    }
    if (*example48) {
      const auto result = find_example48(load_corpus(corpus));
      std::cout << render(to_json(result));
      return result.match ? kOk : kFailed;
    }
    if (*search48) {
      write_output("# Alt4:C4 for every C4 -> Sym4, one per invariant profile, plus two decoys\n" +
                       format_group_specs(order48_candidates()),
                   search_out);
      return kOk;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
