#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "skewbrace/commutator.hpp"
#include "skewbrace/series.hpp"
#include "skewbrace/ybe.hpp"

namespace skewbrace {

// Verdicts for the three questions the library can only answer per brace:
// whether Fix intersect ker lambda is an ideal, whether the lower central
// stages are (left) ideals, and whether the commutator coincides with the
// ideal generated by the star products and the additive commutator.
struct ConjectureVerdicts {
  bool fix_kernel_is_ideal = false;
  bool gammas_all_left_ideals = false;
  bool gammas_all_ideals = false;
  bool commutator_equality = false;
  bool commutator_raw_set_ideal = false;
};

struct AnalysisReport {
  std::string name;
  int order = 0;

  DistinguishedSets distinguished;
  std::vector<ElementSet> ideals;

  SeriesReport upper;
  SeriesReport lower;
  StarSeries stars;
  NilpotencyReport nilpotency;

  bool abelian = false;
  ElementSet biggest_central_ideal;

  // commutators[i * ideals.size() + j] = smith_commutator(ideals[i], ideals[j])
  std::vector<ElementSet> commutators;

  ConjectureVerdicts conjectures;

  bool ybe_nondegenerate = false;
  bool ybe_involutive = false;
};

AnalysisReport analyze(const SkewBrace& b, const std::string& name = "");

std::string report_to_text(const AnalysisReport& report);
std::string report_to_json(const AnalysisReport& report);

ConjectureVerdicts conjecture_verdicts(const SkewBrace& b);

struct ConjectureSuiteSummary {
  struct FileEntry {
    std::string filename;
    std::optional<ConjectureVerdicts> verdicts;
    std::string error;  // parse/validation failure for this file
  };
  std::vector<FileEntry> files;
  int analyzed = 0;
  int failed_files = 0;
  int inconsistencies = 0;  // theorem violations seen while scanning
  bool fix_kernel_everywhere = true;
  bool gammas_left_ideals_everywhere = true;
  bool gammas_ideals_everywhere = true;
  bool commutator_equality_everywhere = true;
  bool commutator_raw_ideal_everywhere = true;
};

// Scans every regular file in the directory (sorted by filename, processed
// concurrently) and aggregates the verdicts. Unreadable files become error
// entries; they never abort the scan.
ConjectureSuiteSummary run_conjecture_suite(const std::filesystem::path& directory);

std::string summary_to_text(const ConjectureSuiteSummary& summary);

}  // namespace skewbrace
