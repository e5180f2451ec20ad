// metabel: irreducible metabelian SL(n) representations of a knot group.
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "metabel/analysis.hpp"
#include "metabel/errors.hpp"
#include "metabel/knotio.hpp"
#include "metabel/report_json.hpp"

namespace {

constexpr int kExitInput = 2;
constexpr int kExitInvariant = 3;

struct KnotInput {
  std::string braid;
  std::string file;
  int n = 0;
  CLI::Option* braid_opt = nullptr;
  CLI::Option* file_opt = nullptr;
};

void add_knot_options(CLI::App* cmd, KnotInput& in) {
  in.braid_opt = cmd->add_option("--braid", in.braid, "braid word as signed generator indices, e.g. \"1 -2 1 -2\"");
  in.file_opt = cmd->add_option("--file", in.file, "presentation file");
  in.braid_opt->excludes(in.file_opt);
  cmd->add_option("--n", in.n, "cover degree / representation dimension")->required();
}

metabel::GroupPresentation load(const KnotInput& in, std::string& descriptor) {
  const bool have_braid = in.braid_opt->count() > 0;
  if (have_braid == (in.file_opt->count() > 0)) throw metabel::InputError("give exactly one of --braid or --file");
  if (have_braid) {
    descriptor = "braid: " + in.braid;
    return metabel::braid_to_presentation(metabel::parse_braid(in.braid));
  }
  descriptor = "file: " + in.file;
  return metabel::load_presentation_file(in.file);
}

void emit(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out);
  if (!f) throw metabel::InputError("cannot write '" + out + "'");
  f << text;
}

std::string error_json(const std::string& kind, const std::string& message, int b1 = -1, int n = -1) {
  nlohmann::json j;
  j["schema_version"] = metabel::kSchemaVersion;
  j["error"] = {{"kind", kind}, {"message", message}};
  if (b1 >= 0) {
    j["error"]["b1Ln"] = b1;
    j["error"]["n"] = n;
    j["error"]["sufficient_condition"] = "n a prime power";
  }
  return j.dump(2) + "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Irreducible metabelian SL(n) representations of knot groups"};
  app.require_subcommand(1);

  KnotInput ain;
  std::string format = "json", checks = "all", out;
  bool timing = false;
  auto* analyze = app.add_subcommand("analyze", "enumerate classes and run every check");
  add_knot_options(analyze, ain);
  analyze->add_option("--format", format)->check(CLI::IsMember({"json", "table"}));
  analyze->add_option("--checks", checks)->check(CLI::IsMember({"all", "fast"}));
  analyze->add_option("--out", out, "write the report here instead of stdout");
  analyze->add_flag("--timing", timing, "record wall time in the report");

  KnotInput hin;
  auto* homology = app.add_subcommand("homology", "print H_1 of the n-fold branched cover");
  add_knot_options(homology, hin);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (*homology) {
      std::string descriptor;
      const auto p = load(hin, descriptor);
      if (hin.n < 1) throw metabel::InputError("--n must be at least 1");
      const auto h = metabel::branched_homology(metabel::alexander_module(p), hin.n);
      std::cout << metabel::format_homology(h);
      return 0;
    }
    std::string descriptor;
    const auto p = load(ain, descriptor);
    metabel::AnalysisOptions opts;
    opts.all_checks = checks == "all";
    opts.timing = timing || format == "table";
    const auto report = metabel::analyze(p, descriptor, ain.n, opts);
    emit(format == "json" ? metabel::dump_report(report) : metabel::format_table(report), out);
    return 0;
  } catch (const metabel::InfiniteCharacterGroup& e) {
    std::cerr << "metabel: " << e.what() << "\n";
    if (format == "json") std::cout << error_json("infinite_character_group", e.what(), e.b1, e.n);
    return kExitInput;
  } catch (const metabel::InputError& e) {
    std::cerr << "metabel: " << e.what() << "\n";
    return kExitInput;
  } catch (const metabel::InvariantViolation& e) {
    std::cerr << "metabel: invariant violated: " << e.what() << "\n";
    return kExitInvariant;
  } catch (const std::exception& e) {
    std::cerr << "metabel: internal error: " << e.what() << "\n";
    return kExitInvariant;
  }
}
