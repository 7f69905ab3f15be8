#include "skewbrace/analysis.hpp"

#include <algorithm>
#include <future>
#include <sstream>

#include <json.hpp>

#include "skewbrace/io.hpp"

namespace skewbrace {

namespace {

const char* series_label(SeriesKind kind) {
  switch (kind) {
    case SeriesKind::UpperCentral: return "upper central";
    case SeriesKind::LowerCentral: return "lower central";
    case SeriesKind::LeftStar: return "left star";
    case SeriesKind::RightStar: return "right star";
    case SeriesKind::MixedStar: return "mixed star";
  }
  return "?";
}

std::string yesno(bool b) { return b ? "yes" : "no"; }

std::string class_or_none(const std::optional<int>& c) {
  return c ? std::to_string(*c) : "none";
}

void render_series(std::ostringstream& os, const SeriesReport& s) {
  os << series_label(s.kind) << ": ";
  for (std::size_t i = 0; i + 1 < s.stages.size(); ++i) {
    if (i) os << (s.kind == SeriesKind::UpperCentral ? " < " : " > ");
    os << s.stages[i].to_string();
  }
  if (s.stages.size() == 1) os << s.stages[0].to_string();
  os << "  class " << class_or_none(s.class_index) << "\n";
}

nlohmann::json set_to_json(const ElementSet& s) { return nlohmann::json(s.members()); }

nlohmann::json series_to_json(const SeriesReport& s) {
  nlohmann::json stages = nlohmann::json::array();
  for (const auto& stage : s.stages) stages.push_back(set_to_json(stage));
  nlohmann::json j{{"kind", series_label(s.kind)},
                   {"stages", stages},
                   {"stabilized", s.stabilized}};
  if (s.class_index)
    j["class"] = *s.class_index;
  else
    j["class"] = nullptr;
  return j;
}

}  // namespace

namespace {

ConjectureVerdicts conjecture_verdicts_with(const SkewBrace& b, CommutatorOracle& oracle) {
  ConjectureVerdicts v;

  const DistinguishedSets sets = distinguished_sets(b);
  v.fix_kernel_is_ideal = is_ideal(b, sets.fix.intersect(sets.lambda_kernel));

  const SeriesReport lower = lower_central_series(b);
  v.gammas_all_left_ideals = true;
  v.gammas_all_ideals = true;
  for (const auto& stage : lower.stages) {
    v.gammas_all_left_ideals = v.gammas_all_left_ideals && is_left_ideal(b, stage);
    v.gammas_all_ideals = v.gammas_all_ideals && is_ideal(b, stage);
  }

  const CommutatorEqualityReport eq = conjecture_commutator_equality(oracle);
  v.commutator_equality = eq.equality_everywhere;
  v.commutator_raw_set_ideal = eq.raw_ideal_everywhere;
  return v;
}

}  // namespace

ConjectureVerdicts conjecture_verdicts(const SkewBrace& b) {
  CommutatorOracle oracle(b);
  return conjecture_verdicts_with(b, oracle);
}

AnalysisReport analyze(const SkewBrace& b, const std::string& name) {
  AnalysisReport report;
  report.name = name;
  report.order = b.order();

  const IdentityReport identities = verify_identities(b);
  if (!identities.all_passed())
    throw InternalInconsistency("a structural identity failed on a validated brace");

  report.distinguished = distinguished_sets(b);
  report.ideals = all_ideals(b);
  report.upper = upper_central_series(b);
  report.lower = lower_central_series(b);
  report.stars = star_series(b);
  report.nilpotency = nilpotency_report(b);
  report.abelian = is_abelian_brace(b);

  CommutatorOracle oracle(b);
  report.biggest_central_ideal = largest_central_ideal(oracle);

  report.commutators.reserve(report.ideals.size() * report.ideals.size());
  for (const auto& lhs : report.ideals)
    for (const auto& rhs : report.ideals) report.commutators.push_back(oracle.of(lhs, rhs));

  report.conjectures = conjecture_verdicts_with(b, oracle);

  const Solution solution = canonical_solution(b);
  const DegeneracyCheck deg = check_nondegenerate_involutive(solution);
  report.ybe_nondegenerate = deg.nondegenerate;
  report.ybe_involutive = deg.involutive;

  return report;
}

std::string report_to_text(const AnalysisReport& report) {
  std::ostringstream os;
  os << "brace " << (report.name.empty() ? "(unnamed)" : report.name) << "  order "
     << report.order << "\n";
  os << "abelian: " << yesno(report.abelian) << "\n";
  os << "fix: " << report.distinguished.fix.to_string() << "\n";
  os << "ker lambda: " << report.distinguished.lambda_kernel.to_string() << "\n";
  os << "socle: " << report.distinguished.socle.to_string() << "\n";
  os << "center: " << report.distinguished.center.to_string() << "\n";
  os << "biggest central ideal: " << report.biggest_central_ideal.to_string() << "\n";

  os << "ideals (" << report.ideals.size() << "):";
  for (const auto& ideal : report.ideals) os << " " << ideal.to_string();
  os << "\n";

  render_series(os, report.upper);
  render_series(os, report.lower);
  render_series(os, report.stars.left);
  render_series(os, report.stars.right);
  render_series(os, report.stars.mixed);

  os << "centrally nilpotent class: " << class_or_none(report.nilpotency.centrally_nilpotent_class)
     << "\n";
  os << "additive group class: " << class_or_none(report.nilpotency.add_group_class)
     << "  circle group class: " << class_or_none(report.nilpotency.circ_group_class) << "\n";
  os << "nilpotent type: " << yesno(report.nilpotency.nilpotent_type)
     << "  star nilpotent: " << yesno(report.nilpotency.star_nilpotent()) << "\n";

  os << "commutators:\n";
  const std::size_t k = report.ideals.size();
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      os << "  [" << report.ideals[i].to_string() << ", " << report.ideals[j].to_string()
         << "] = " << report.commutators[i * k + j].to_string() << "\n";

  os << "conjectures: fix-kernel ideal " << yesno(report.conjectures.fix_kernel_is_ideal)
     << "; gammas left ideals " << yesno(report.conjectures.gammas_all_left_ideals)
     << "; gammas ideals " << yesno(report.conjectures.gammas_all_ideals)
     << "; commutator equality " << yesno(report.conjectures.commutator_equality)
     << "; raw commutator set ideal " << yesno(report.conjectures.commutator_raw_set_ideal)
     << "\n";

  os << "ybe: nondegenerate " << yesno(report.ybe_nondegenerate) << ", involutive "
     << yesno(report.ybe_involutive) << "\n";
  return os.str();
}

std::string report_to_json(const AnalysisReport& report) {
  nlohmann::json j;
  j["name"] = report.name;
  j["order"] = report.order;
  j["abelian"] = report.abelian;
  j["fix"] = set_to_json(report.distinguished.fix);
  j["ker_lambda"] = set_to_json(report.distinguished.lambda_kernel);
  j["socle"] = set_to_json(report.distinguished.socle);
  j["center"] = set_to_json(report.distinguished.center);
  j["biggest_central_ideal"] = set_to_json(report.biggest_central_ideal);

  nlohmann::json ideals = nlohmann::json::array();
  for (const auto& ideal : report.ideals) ideals.push_back(set_to_json(ideal));
  j["ideals"] = ideals;

  j["series"] = {series_to_json(report.upper), series_to_json(report.lower),
                 series_to_json(report.stars.left), series_to_json(report.stars.right),
                 series_to_json(report.stars.mixed)};

  nlohmann::json nil;
  auto opt = [](const std::optional<int>& v) {
    return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
  };
  nil["centrally_nilpotent_class"] = opt(report.nilpotency.centrally_nilpotent_class);
  nil["left_star_class"] = opt(report.nilpotency.left_star_class);
  nil["right_star_class"] = opt(report.nilpotency.right_star_class);
  nil["mixed_star_class"] = opt(report.nilpotency.mixed_star_class);
  nil["add_group_class"] = opt(report.nilpotency.add_group_class);
  nil["circ_group_class"] = opt(report.nilpotency.circ_group_class);
  nil["nilpotent_type"] = report.nilpotency.nilpotent_type;
  nil["circ_nilpotent"] = report.nilpotency.circ_nilpotent;
  j["nilpotency"] = nil;

  nlohmann::json comms = nlohmann::json::array();
  const std::size_t k = report.ideals.size();
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t c = 0; c < k; ++c)
      comms.push_back({{"lhs", static_cast<int>(i)},
                       {"rhs", static_cast<int>(c)},
                       {"value", set_to_json(report.commutators[i * k + c])}});
  j["commutators"] = comms;

  j["conjectures"] = {
      {"fix_kernel_is_ideal", report.conjectures.fix_kernel_is_ideal},
      {"gammas_all_left_ideals", report.conjectures.gammas_all_left_ideals},
      {"gammas_all_ideals", report.conjectures.gammas_all_ideals},
      {"commutator_equality", report.conjectures.commutator_equality},
      {"commutator_raw_set_ideal", report.conjectures.commutator_raw_set_ideal},
  };

  j["ybe"] = {{"nondegenerate", report.ybe_nondegenerate},
              {"involutive", report.ybe_involutive}};

  return j.dump(2) + "\n";
}

ConjectureSuiteSummary run_conjecture_suite(const std::filesystem::path& directory) {
  std::vector<std::filesystem::path> paths;
  if (std::filesystem::exists(directory))
    for (const auto& entry : std::filesystem::directory_iterator(directory))
      if (entry.is_regular_file()) paths.push_back(entry.path());
  std::sort(paths.begin(), paths.end());

  struct Outcome {
    std::optional<ConjectureVerdicts> verdicts;
    std::string error;
    bool inconsistent = false;
  };

  // Fixed pool over a shared index; results land in file order.
  std::vector<Outcome> outcomes(paths.size());
  {
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (std::size_t i = next.fetch_add(1); i < paths.size(); i = next.fetch_add(1)) {
        Outcome& outcome = outcomes[i];
        try {
          const SkewBrace b = load_brace(paths[i]);
          outcome.verdicts = conjecture_verdicts(b);
        } catch (const InternalInconsistency& e) {
          outcome.error = e.what();
          outcome.inconsistent = true;
        } catch (const std::exception& e) {
          outcome.error = e.what();
        }
      }
    };
    const std::size_t workers =
        std::min<std::size_t>(std::max(1u, std::thread::hardware_concurrency()), paths.size());
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w + 1 < workers; ++w) pool.emplace_back(worker);
    if (!paths.empty()) worker();
    for (auto& t : pool) t.join();
  }

  ConjectureSuiteSummary summary;
  for (std::size_t i = 0; i < paths.size(); ++i) {
    Outcome& outcome = outcomes[i];
    ConjectureSuiteSummary::FileEntry entry;
    entry.filename = paths[i].filename().string();
    entry.error = outcome.error;
    entry.verdicts = outcome.verdicts;
    if (outcome.inconsistent) ++summary.inconsistencies;
    if (outcome.verdicts) {
      ++summary.analyzed;
      summary.fix_kernel_everywhere &= outcome.verdicts->fix_kernel_is_ideal;
      summary.gammas_left_ideals_everywhere &= outcome.verdicts->gammas_all_left_ideals;
      summary.gammas_ideals_everywhere &= outcome.verdicts->gammas_all_ideals;
      summary.commutator_equality_everywhere &= outcome.verdicts->commutator_equality;
      summary.commutator_raw_ideal_everywhere &= outcome.verdicts->commutator_raw_set_ideal;
    } else {
      ++summary.failed_files;
    }
    summary.files.push_back(std::move(entry));
  }
  return summary;
}

std::string summary_to_text(const ConjectureSuiteSummary& summary) {
  std::ostringstream os;
  for (const auto& entry : summary.files) {
    os << entry.filename << ": ";
    if (entry.verdicts) {
      os << "fix-kernel ideal " << yesno(entry.verdicts->fix_kernel_is_ideal)
         << "; gammas left ideals " << yesno(entry.verdicts->gammas_all_left_ideals)
         << "; gammas ideals " << yesno(entry.verdicts->gammas_all_ideals)
         << "; commutator equality " << yesno(entry.verdicts->commutator_equality)
         << "; raw set ideal " << yesno(entry.verdicts->commutator_raw_set_ideal) << "\n";
    } else {
      os << "error: " << entry.error << "\n";
    }
  }
  os << "analyzed " << summary.analyzed << " braces, " << summary.failed_files
     << " files failed\n";
  if (summary.analyzed > 0) {
    os << "fix-kernel ideal everywhere: " << yesno(summary.fix_kernel_everywhere) << "\n";
    os << "gamma stages left ideals everywhere: "
       << yesno(summary.gammas_left_ideals_everywhere) << "\n";
    os << "gamma stages ideals everywhere: " << yesno(summary.gammas_ideals_everywhere) << "\n";
    os << "commutator equality everywhere: " << yesno(summary.commutator_equality_everywhere)
       << "\n";
    os << "raw commutator set ideal everywhere: "
       << yesno(summary.commutator_raw_ideal_everywhere) << "\n";
  }
  return os.str();
}

}  // namespace skewbrace
