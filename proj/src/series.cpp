#include "skewbrace/series.hpp"

#include <algorithm>

namespace skewbrace {

namespace {

int first_stage_index(SeriesKind kind) {
  switch (kind) {
    case SeriesKind::UpperCentral:
    case SeriesKind::LowerCentral:
      return 0;
    default:
      return 1;
  }
}

// Computes class_index and trims a stabilized tail down to one repeat.
void finalize(SeriesReport& report, const ElementSet& target) {
  auto& stages = report.stages;
  while (stages.size() >= 3 && stages[stages.size() - 1] == stages[stages.size() - 2] &&
         stages[stages.size() - 2] == stages[stages.size() - 3])
    stages.pop_back();
  report.stabilized =
      stages.size() >= 2 && stages[stages.size() - 1] == stages[stages.size() - 2];

  report.class_index.reset();
  const int base = first_stage_index(report.kind);
  for (std::size_t i = 0; i < stages.size(); ++i) {
    if (stages[i] == target) {
      report.class_index = base + static_cast<int>(i);
      break;
    }
  }
}

}  // namespace

const ElementSet& SeriesReport::stage(int index) const {
  const int i = index - first_stage_index(kind);
  if (i < static_cast<int>(stages.size())) return stages[i];
  return stages.back();
}

SeriesReport upper_central_series(const SkewBrace& b) {
  const int n = b.order();
  SeriesReport report{SeriesKind::UpperCentral, {}, false, std::nullopt};
  report.stages.push_back(ElementSet::single(n, 0));

  for (;;) {
    const ElementSet& prev = report.stages.back();
    ElementSet next(n);
    for (int x = 0; x < n; ++x) {
      bool in = true;
      for (int y = 0; y < n && in; ++y)
        in = prev.contains(b.star(x, y)) && prev.contains(b.star(y, x)) &&
             prev.contains(b.add(b.add(b.add(b.neg(x), b.neg(y)), x), y));
      if (in) next.insert(x);
    }

    if (!is_ideal(b, next))
      throw InternalInconsistency("upper central stage " + next.to_string() +
                                  " is not an ideal");

    // The new stage must be the preimage of the center of the quotient
    // modulo the previous one.
    {
      QuotientBrace q = quotient_brace(b, prev);
      const ElementSet qcenter = brace_center(q.brace);
      ElementSet pulled(n);
      for (int x = 0; x < n; ++x)
        if (qcenter.contains(q.projection[x])) pulled.insert(x);
      if (pulled != next)
        throw InternalInconsistency("upper central stage disagrees with the quotient center");
    }

    const bool done = next == prev;
    report.stages.push_back(next);
    if (done) break;
  }

  finalize(report, ElementSet::full(n));
  return report;
}

SeriesReport lower_central_series(const SkewBrace& b, const ElementSet& seed) {
  const int n = b.order();
  const ElementSet whole = ElementSet::full(n);
  SeriesReport report{SeriesKind::LowerCentral, {}, false, std::nullopt};
  report.stages.push_back(seed);

  for (;;) {
    const ElementSet& prev = report.stages.back();
    ElementSet next = star_product(b, prev, whole)
                          .unite(star_product(b, whole, prev))
                          .unite(group_commutator(b.add_group(), prev, whole));
    next = subgroup_closure(b.add_group(), next);
    const bool done = next == prev;
    report.stages.push_back(next);
    if (done) break;
  }

  finalize(report, ElementSet::single(n, 0));
  return report;
}

SeriesReport lower_central_series(const SkewBrace& b) {
  return lower_central_series(b, ElementSet::full(b.order()));
}

StarSeries star_series(const SkewBrace& b) {
  const int n = b.order();
  const ElementSet whole = ElementSet::full(n);
  const ElementSet zero = ElementSet::single(n, 0);

  SeriesReport left{SeriesKind::LeftStar, {whole}, false, std::nullopt};
  for (;;) {
    ElementSet next = star_product(b, whole, left.stages.back());
    const bool done = next == left.stages.back();
    left.stages.push_back(next);
    if (done) break;
  }
  finalize(left, zero);

  SeriesReport right{SeriesKind::RightStar, {whole}, false, std::nullopt};
  for (;;) {
    ElementSet next = star_product(b, right.stages.back(), whole);
    const bool done = next == right.stages.back();
    right.stages.push_back(next);
    if (done) break;
  }
  finalize(right, zero);

  // The mixed recursion draws on every earlier stage, so one repeat does
  // not yet prove stabilization; a plateau longer than the order does,
  // since the stages decrease.
  SeriesReport mixed{SeriesKind::MixedStar, {whole}, false, std::nullopt};
  {
    int plateau = 0;
    while (!(mixed.stages.back() == zero) && plateau <= n) {
      const auto& s = mixed.stages;
      ElementSet next(n);
      const int k = static_cast<int>(s.size());
      for (int i = 0; i < k; ++i) next = next.unite(star_product(b, s[i], s[k - 1 - i]));
      next = subgroup_closure(b.add_group(), next);
      plateau = (next == s.back()) ? plateau + 1 : 0;
      mixed.stages.push_back(next);
    }
    if (mixed.stages.back() == zero) mixed.stages.push_back(zero);
  }
  finalize(mixed, zero);

  return StarSeries{std::move(left), std::move(right), std::move(mixed)};
}

NilpotencyReport nilpotency_report(const SkewBrace& b) {
  const int n = b.order();
  const SeriesReport upper = upper_central_series(b);
  const SeriesReport lower = lower_central_series(b);
  const StarSeries stars = star_series(b);

  NilpotencyReport report;
  report.centrally_nilpotent_class = upper.class_index;
  report.left_star_class = stars.left.class_index;
  report.right_star_class = stars.right.class_index;
  report.mixed_star_class = stars.mixed.class_index;
  report.add_group_class = group_nilpotency_class(b.add_group());
  report.circ_group_class = group_nilpotency_class(b.circ_group());
  report.nilpotent_type = report.add_group_class.has_value();
  report.circ_nilpotent = report.circ_group_class.has_value();

  if (upper.class_index != lower.class_index)
    throw InternalInconsistency("upper and lower central series disagree on the class");

  // Gamma_n(A) lies in zeta_k(A) exactly when A lies in zeta_{n+k}(A).
  const ElementSet whole = ElementSet::full(n);
  const int gamma_count = static_cast<int>(lower.stages.size());
  const int zeta_count = static_cast<int>(upper.stages.size());
  for (int gi = 0; gi < gamma_count; ++gi)
    for (int zi = 0; zi < zeta_count; ++zi) {
      const bool lhs = lower.stages[gi].subset_of(upper.stage(zi));
      const bool rhs = whole.subset_of(upper.stage(gi + zi));
      if (lhs != rhs)
        throw InternalInconsistency("central series shifting lemma fails at (" +
                                    std::to_string(gi) + ", " + std::to_string(zi) + ")");
    }

  const bool both_star_and_type =
      report.left_star_class && report.right_star_class && report.nilpotent_type;
  const bool right_type_circ =
      report.right_star_class && report.nilpotent_type && report.circ_nilpotent;
  const bool central = report.centrally_nilpotent();
  if (both_star_and_type != central || right_type_circ != central)
    throw InternalInconsistency("finite nilpotency criteria disagree");

  if (central &&
      !(report.left_star_class && report.right_star_class && report.mixed_star_class &&
        report.add_group_class && report.circ_group_class))
    throw InternalInconsistency(
        "centrally nilpotent brace is missing a star or group nilpotency class");

  return report;
}

}  // namespace skewbrace
