#pragma once

#include <optional>
#include <vector>

#include "skewbrace/substructures.hpp"

namespace skewbrace {

enum class SeriesKind { UpperCentral, LowerCentral, LeftStar, RightStar, MixedStar };

// stages[i] holds stage i for the central series and stage i+1 for the
// star series, whose customary numbering starts at 1 with the full brace.
// The last two recorded stages are equal once the series has stabilized.
struct SeriesReport {
  SeriesKind kind;
  std::vector<ElementSet> stages;
  bool stabilized = false;
  // Least n with stage_n = A (upper central) or stage_n = 0 (the others),
  // in the numbering above; absent when the series stalls elsewhere.
  std::optional<int> class_index;

  const ElementSet& stage(int index) const;  // index in the series numbering
};

// zeta_0 = 0 and zeta_{n+1} collects the x with x*y, y*x and the additive
// commutator [x,y] all inside zeta_n. Every stage is checked to be an ideal
// and against the center of the corresponding quotient brace.
SeriesReport upper_central_series(const SkewBrace& b);

// Gamma_0 = seed, Gamma_{n+1} = < Gamma_n * A, A * Gamma_n, [Gamma_n, A] >.
SeriesReport lower_central_series(const SkewBrace& b, const ElementSet& seed);
SeriesReport lower_central_series(const SkewBrace& b);

struct StarSeries {
  SeriesReport left;   // A^{n+1} = A * A^n
  SeriesReport right;  // A^{(n+1)} = A^{(n)} * A
  SeriesReport mixed;  // A^{[n+1]} generated by all A^{[i]} * A^{[n+1-i]}
};

StarSeries star_series(const SkewBrace& b);

struct NilpotencyReport {
  std::optional<int> centrally_nilpotent_class;
  std::optional<int> left_star_class;
  std::optional<int> right_star_class;
  std::optional<int> mixed_star_class;
  std::optional<int> add_group_class;
  std::optional<int> circ_group_class;
  bool nilpotent_type = false;   // additive group nilpotent
  bool circ_nilpotent = false;

  bool star_nilpotent() const { return left_star_class && right_star_class; }
  bool centrally_nilpotent() const { return centrally_nilpotent_class.has_value(); }
};

// Gathers every class at once and re-verifies the equivalences tying them
// together (upper vs lower class, the finite-case criterion, and the
// shifting lemma between the two central series). Any mismatch raises
// InternalInconsistency.
NilpotencyReport nilpotency_report(const SkewBrace& b);

}  // namespace skewbrace
