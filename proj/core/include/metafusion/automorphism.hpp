#pragma once

#include <array>
#include <optional>
#include <vector>

#include "metafusion/metacyclic.hpp"
#include "metafusion/morphism.hpp"
#include "metafusion/report.hpp"

namespace metafusion {

struct AutGroupSummary {
  long long order = 0;
  bool is_2_group = false;
  long long odd_part = 1;
  std::vector<std::array<int, 2>> generator_images;
};

struct AutComputation {
  AutGroupSummary summary;
  /// Full element permutations; filled only when requested.
  std::vector<Automorphism> automorphisms;
};

/// Enumerates Aut(P) as all generator-image pairs that extend to a
/// bijective homomorphism. `gens` must generate P; order cap 256.
/// Full maps are materialized only when with_maps is set.
AutComputation compute_aut(const GroupTablePtr& p, const std::array<int, 2>& gens,
                           bool with_maps = false);

/// Same computation through the defining relations of a built metacyclic
/// group; candidate pairs are screened by element order and the relations
/// before the generation check.
AutComputation compute_aut(const MetacyclicGroup& g, bool with_maps = false);

/// Verdict rows for the automorphism 2-group sweep: over every metacyclic
/// isomorphism type of order <= max_order, Aut(P) must be a 2-group unless
/// P is homocyclic or the quaternion group of order 8, and must have a
/// nontrivial odd part in exactly those cases. max_order <= 256.
SweepReport lemma1_sweep(long long max_order);

struct QuotientAutomorphism {
  QuotientTable quotient;
  Automorphism induced;
};

/// Automorphism induced on parent/N by phi; requires phi(N) = N.
QuotientAutomorphism restrict_to_quotient(const GroupTablePtr& parent,
                                          const Automorphism& phi, const Subgroup& n);

}  // namespace metafusion
