#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "skewbrace/analysis.hpp"
#include "skewbrace/constructions.hpp"
#include "skewbrace/enumeration.hpp"
#include "skewbrace/io.hpp"

namespace fs = std::filesystem;
using namespace skewbrace;

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitInconsistency = 3;

void write_named_brace(const SkewBrace& brace, const std::string& name, const fs::path& out,
                       const std::map<std::string, std::string>& metadata = {}) {
  BraceDoc doc = doc_from_brace(brace, name);
  doc.metadata = metadata;
  save_brace_doc(doc, out);
  std::cout << "wrote " << out.string() << " (order " << brace.order() << ")\n";
}

int run(int argc, char** argv) {
  CLI::App app{"finite skew braces: validation, series, commutators, Yang-Baxter solutions"};
  app.require_subcommand(1);

  // verify
  std::string verify_file;
  auto* verify = app.add_subcommand("verify", "load a brace document and validate it");
  verify->add_option("file", verify_file, "brace document")->required();

  // analyze
  std::string analyze_file, analyze_format = "text";
  auto* analyze_cmd = app.add_subcommand("analyze", "full structural report");
  analyze_cmd->add_option("file", analyze_file, "brace document")->required();
  analyze_cmd->add_option("--format", analyze_format, "text or struct")
      ->check(CLI::IsMember({"text", "struct"}));

  // series
  std::string series_file, series_kind = "zeta";
  auto* series_cmd = app.add_subcommand("series", "print one nilpotency series");
  series_cmd->add_option("file", series_file, "brace document")->required();
  series_cmd->add_option("--kind", series_kind, "zeta, gamma, left, right or mixed")
      ->check(CLI::IsMember({"zeta", "gamma", "left", "right", "mixed"}));

  // commutator
  std::string comm_file;
  std::vector<int> comm_left, comm_right;
  auto* comm_cmd = app.add_subcommand("commutator",
                                      "commutator of the ideal closures of two generator sets");
  comm_cmd->add_option("file", comm_file, "brace document")->required();
  comm_cmd->add_option("--left", comm_left, "generators of the left ideal")
      ->required()
      ->delimiter(',');
  comm_cmd->add_option("--right", comm_right, "generators of the right ideal")
      ->required()
      ->delimiter(',');

  // construct
  auto* construct = app.add_subcommand("construct", "build a brace and write it out");
  construct->require_subcommand(1);

  std::string c_group, c_out, c_name;
  auto* c_trivial = construct->add_subcommand("trivial", "brace (G, +, +) from a group");
  c_trivial->add_option("--group", c_group, "group document")->required();
  c_trivial->add_option("-o,--out", c_out, "output file")->required();
  c_trivial->add_option("--name", c_name, "name for the document");

  auto* c_opposite = construct->add_subcommand("opposite", "brace (G, +, +op) from a group");
  c_opposite->add_option("--group", c_group, "group document")->required();
  c_opposite->add_option("-o,--out", c_out, "output file")->required();
  c_opposite->add_option("--name", c_name, "name for the document");

  std::string c_brace, c_kernel, c_theta;
  auto* c_bilinear =
      construct->add_subcommand("bilinear", "central extension of a brace by a bilinear map");
  c_bilinear->add_option("--brace", c_brace, "base brace document")->required();
  c_bilinear->add_option("--kernel", c_kernel, "abelian group document")->required();
  c_bilinear->add_option("--theta", c_theta, "matrix of kernel indices, |H| x |H|")->required();
  c_bilinear->add_option("-o,--out", c_out, "output file")->required();
  c_bilinear->add_option("--name", c_name, "name for the document");

  std::string c_e, c_f, c_a, c_omega;
  auto* c_heis = construct->add_subcommand(
      "heisenberg", "twisted product of three abelian groups along a bilinear map");
  c_heis->add_option("--e-group", c_e, "first group document")->required();
  c_heis->add_option("--f-group", c_f, "second group document")->required();
  c_heis->add_option("--a-group", c_a, "third group document")->required();
  c_heis->add_option("--omega", c_omega, "matrix of third-group indices, |E| x |F|")->required();
  c_heis->add_option("-o,--out", c_out, "output file")->required();
  c_heis->add_option("--name", c_name, "name for the document");

  std::string c_quotient, c_phi;
  auto* c_rebuild =
      construct->add_subcommand("rebuild", "central extension from quotient, kernel and cocycles");
  c_rebuild->add_option("--quotient", c_quotient, "quotient brace document")->required();
  c_rebuild->add_option("--kernel", c_kernel, "abelian group document")->required();
  c_rebuild->add_option("--theta", c_theta, "additive cocycle matrix")->required();
  c_rebuild->add_option("--phi", c_phi, "circle cocycle matrix")->required();
  c_rebuild->add_option("-o,--out", c_out, "output file")->required();
  c_rebuild->add_option("--name", c_name, "name for the document");

  // ybe
  std::string ybe_file;
  bool ybe_emit = false;
  auto* ybe_cmd = app.add_subcommand("ybe", "canonical Yang-Baxter solution of a brace");
  ybe_cmd->add_option("file", ybe_file, "brace document")->required();
  ybe_cmd->add_flag("--emit", ybe_emit, "print the full solution table");

  // enumerate
  std::string enum_group, enum_out;
  bool enum_up_to_iso = false;
  auto* enum_cmd = app.add_subcommand("enumerate", "all braces on a given additive group");
  enum_cmd->add_option("--group", enum_group, "group document")->required();
  enum_cmd->add_flag("--up-to-iso", enum_up_to_iso, "write only class representatives");
  enum_cmd->add_option("-o,--out", enum_out, "output directory")->required();

  // conjectures
  std::string conj_dir;
  auto* conj_cmd = app.add_subcommand("conjectures", "open-question scan over a corpus");
  conj_cmd->add_option("dir", conj_dir, "directory of brace documents")->required();

  CLI11_PARSE(app, argc, argv);

  if (*verify) {
    const BraceDoc doc = load_brace_doc(verify_file);
    const SkewBrace brace = make_brace_tables(doc.add, doc.circ);
    std::cout << "valid skew brace"
              << (doc.name.empty() ? "" : " '" + doc.name + "'") << " of order "
              << brace.order() << "\n";
  } else if (*analyze_cmd) {
    const BraceDoc doc = load_brace_doc(analyze_file);
    const SkewBrace brace = make_brace_tables(doc.add, doc.circ);
    const AnalysisReport report = analyze(brace, doc.name);
    std::cout << (analyze_format == "struct" ? report_to_json(report)
                                             : report_to_text(report));
  } else if (*series_cmd) {
    const SkewBrace brace = load_brace(series_file);
    SeriesReport report = [&] {
      if (series_kind == "zeta") return upper_central_series(brace);
      if (series_kind == "gamma") return lower_central_series(brace);
      const StarSeries stars = star_series(brace);
      if (series_kind == "left") return stars.left;
      if (series_kind == "right") return stars.right;
      return stars.mixed;
    }();
    for (std::size_t i = 0; i < report.stages.size(); ++i)
      std::cout << "stage " << i + (series_kind == "zeta" || series_kind == "gamma" ? 0 : 1)
                << ": " << report.stages[i].to_string() << "\n";
    std::cout << "class: "
              << (report.class_index ? std::to_string(*report.class_index) : "none") << "\n";
  } else if (*comm_cmd) {
    const SkewBrace brace = load_brace(comm_file);
    for (int g : comm_left)
      if (g < 0 || g >= brace.order())
        throw ValidationError(ValidationError::Kind::PreconditionViolated,
                              "generator " + std::to_string(g) + " outside the carrier");
    for (int g : comm_right)
      if (g < 0 || g >= brace.order())
        throw ValidationError(ValidationError::Kind::PreconditionViolated,
                              "generator " + std::to_string(g) + " outside the carrier");
    const ElementSet left =
        ideal_closure(brace, ElementSet::of(brace.order(), comm_left));
    const ElementSet right =
        ideal_closure(brace, ElementSet::of(brace.order(), comm_right));
    std::cout << "left ideal: " << left.to_string() << "\n";
    std::cout << "right ideal: " << right.to_string() << "\n";
    std::cout << "commutator: " << smith_commutator(brace, left, right).to_string() << "\n";
  } else if (*c_trivial || *c_opposite) {
    const FiniteGroup g = load_group(c_group);
    const SkewBrace brace = *c_trivial ? trivial_brace(g) : opposite_brace(g);
    write_named_brace(brace, c_name, c_out,
                      {{"construction", *c_trivial ? "trivial" : "opposite"}});
  } else if (*c_bilinear) {
    const SkewBrace h = load_brace(c_brace);
    const FiniteGroup k = load_group(c_kernel);
    const SkewBrace brace = bilinear_brace(h, k, load_int_matrix(c_theta));
    write_named_brace(brace, c_name, c_out, {{"construction", "bilinear"}});
  } else if (*c_heis) {
    const SkewBrace brace = heisenberg_brace(load_group(c_e), load_group(c_f),
                                             load_group(c_a), load_int_matrix(c_omega));
    write_named_brace(brace, c_name, c_out, {{"construction", "heisenberg"}});
  } else if (*c_rebuild) {
    const SkewBrace quotient = load_brace(c_quotient);
    const FiniteGroup kernel = load_group(c_kernel);
    const auto theta = load_int_matrix(c_theta);
    const auto phi = load_int_matrix(c_phi);
    Cocycles cocycles;
    cocycles.quotient_order = quotient.order();
    cocycles.kernel_order = kernel.order();
    for (const auto& row : theta) cocycles.theta.insert(cocycles.theta.end(), row.begin(), row.end());
    for (const auto& row : phi) cocycles.phi.insert(cocycles.phi.end(), row.begin(), row.end());
    const SkewBrace brace = rebuild_from_cocycles(quotient, kernel, cocycles);
    write_named_brace(brace, c_name, c_out, {{"construction", "rebuild"}});
  } else if (*ybe_cmd) {
    const SkewBrace brace = load_brace(ybe_file);
    const Solution solution = canonical_solution(brace);
    const BraidCheck braid = check_ybe(solution);
    const DegeneracyCheck deg = check_nondegenerate_involutive(solution);
    std::cout << "braid relation: " << (braid.holds ? "holds" : "fails") << "\n";
    std::cout << "nondegenerate: " << (deg.nondegenerate ? "yes" : "no") << "\n";
    std::cout << "involutive: " << (deg.involutive ? "yes" : "no") << "\n";
    if (ybe_emit)
      for (int x = 0; x < solution.size; ++x)
        for (int y = 0; y < solution.size; ++y) {
          const auto [u, v] = solution.apply(x, y);
          std::cout << x << " " << y << " -> " << u << " " << v << "\n";
        }
  } else if (*enum_cmd) {
    const FiniteGroup g = load_group(enum_group);
    BraceFamily family = enumerate_braces_on(g);
    family = classify_up_to_iso(std::move(family));
    fs::create_directories(enum_out);
    std::vector<int> chosen;
    if (enum_up_to_iso) {
      chosen = family.iso_classes;
    } else {
      chosen.resize(family.braces.size());
      for (std::size_t i = 0; i < chosen.size(); ++i) chosen[i] = static_cast<int>(i);
    }
    int written = 0;
    for (int index : chosen) {
      char suffix[16];
      std::snprintf(suffix, sizeof suffix, "%03d", written);
      const fs::path out = fs::path(enum_out) / ("brace_" + std::string(suffix) + ".txt");
      BraceDoc doc = doc_from_brace(family.braces[index], "brace_" + std::string(suffix));
      doc.metadata["iso_class"] = std::to_string(family.class_of[index]);
      save_brace_doc(doc, out);
      ++written;
    }
    std::cout << "braces: " << family.braces.size()
              << "  iso classes: " << family.iso_classes.size() << "  written: " << written
              << "\n";
  } else if (*conj_cmd) {
    const ConjectureSuiteSummary summary = run_conjecture_suite(conj_dir);
    std::cout << summary_to_text(summary);
    if (summary.inconsistencies > 0) return kExitInconsistency;
  }

  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const InternalInconsistency& e) {
    std::cerr << "internal inconsistency: " << e.what() << "\n";
    return kExitInconsistency;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
}
