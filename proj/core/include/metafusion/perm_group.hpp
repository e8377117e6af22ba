#pragma once

#include <optional>
#include <string>
#include <vector>

#include "metafusion/fusion.hpp"
#include "metafusion/group_table.hpp"
#include "metafusion/metacyclic.hpp"
#include "metafusion/report.hpp"
#include "metafusion/subgroup.hpp"

namespace metafusion {

/// A permutation group on 0..degree-1 given by generators.
struct PermGroup {
  int degree = 0;
  std::vector<std::vector<int>> generators;
};

inline constexpr int kPermElementCap = 10000;

/// Parses {"degree": d, "generators": [[images...], ...]} with 0-based
/// points; throws std::invalid_argument on malformed input.
PermGroup perm_group_from_json(const std::string& json_text);
PermGroup load_perm_group(const std::string& path);

/// Breadth-first closure of the generators, deterministic order, identity
/// first. Throws when the element cap is exceeded.
std::vector<std::vector<int>> enumerate_elements(const PermGroup& g,
                                                 int cap = kPermElementCap);

/// The enumerated group as an explicit table (order cap 1024); labels use
/// cycle notation.
GroupTablePtr perm_group_table(const PermGroup& g);

/// A Sylow 2-subgroup by normalizer ascent: grow a 2-subgroup by adjoining
/// 2-elements of its normalizer until the full 2-part of |G| is reached.
Subgroup sylow_2(const GroupTablePtr& g);

/// True iff the odd-order elements form a subgroup of full odd order (the
/// normal 2-complement).
bool has_normal_2_complement(const GroupTablePtr& g);

/// Independent route for tests: search all subgroups for a normal one of
/// odd order and 2-power index.
bool has_normal_2_complement_oracle(const GroupTablePtr& g);

struct WitnessReport {
  std::string name;
  long long group_order = 0;
  long long sylow_order = 0;
  bool sylow_metacyclic = false;
  std::optional<Family> sylow_family;
  std::optional<Verdict> verdict;
  bool normal_2_complement = false;
  /// forced-nilpotent Sylow must come with a normal 2-complement
  bool consistent = true;
};

/// Consistency check of one group against the 2-nilpotency criterion.
WitnessReport witness_check(const PermGroup& g, const std::string& name);

/// Runs witness_check over every *.json file in a corpus directory,
/// sorted by filename.
SweepReport witness_corpus(const std::string& dir);

/// Single-file variant in the same report schema.
SweepReport witness_file(const std::string& path);

std::string cycle_notation(const std::vector<int>& perm);

}  // namespace metafusion
