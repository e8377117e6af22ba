#pragma once

#include <vector>

#include "metafusion/group_table.hpp"

namespace metafusion {

/// An element subset of a parent table, closed under multiplication and
/// inverse. Members are sorted ascending; generators close to exactly the
/// member set. Instances are only produced by the operations below, which
/// establish the invariants by construction.
struct Subgroup {
  GroupTablePtr parent;
  std::vector<int> members;     // sorted
  std::vector<int> generators;

  int size() const { return static_cast<int>(members.size()); }
  bool contains(int g) const;
  bool contains(const Subgroup& other) const;
  bool same_members(const Subgroup& other) const { return members == other.members; }
};

struct ConjugacyPartition {
  std::vector<std::vector<int>> classes;  // disjoint, covering, identity first
  int count() const { return static_cast<int>(classes.size()); }
};

/// A subgroup re-indexed as a group table of its own. to_parent[i] is the
/// parent index of subtable element i; to_sub is the inverse map (-1 for
/// parent elements outside the subgroup).
struct SubTable {
  GroupTablePtr table;
  std::vector<int> to_parent;
  std::vector<int> to_sub;
};

/// Coset table of parent/N. coset_of[g] is the quotient index of gN,
/// rep_of[c] the minimal parent representative of coset c.
struct QuotientTable {
  GroupTablePtr table;
  std::vector<int> coset_of;
  std::vector<int> rep_of;
};

Subgroup trivial_subgroup(const GroupTablePtr& parent);
Subgroup whole_group(const GroupTablePtr& parent);

/// Smallest subgroup containing gens; empty gens give the trivial subgroup.
Subgroup generate_closure(const GroupTablePtr& parent, const std::vector<int>& gens);

Subgroup normalizer(const GroupTablePtr& parent, const Subgroup& q);
Subgroup centralizer(const GroupTablePtr& parent, const Subgroup& q);
Subgroup center(const GroupTablePtr& parent);
Subgroup derived_subgroup(const GroupTablePtr& parent);

/// Frattini subgroup. For 2-groups this is the closure of all squares and
/// commutators; the result is checked against the maximal-subgroup
/// intersection for orders <= 64. Non-2-groups always use the
/// maximal-subgroup intersection.
Subgroup frattini(const GroupTablePtr& parent);
/// Subgroup generated by all involutions.
Subgroup omega(const GroupTablePtr& parent);

ConjugacyPartition conjugacy_classes(const GroupTablePtr& parent);

std::vector<Subgroup> lower_central_series(const GroupTablePtr& parent);
/// Length of the lower central series minus one; requires a nilpotent input.
int nilpotency_class(const GroupTablePtr& parent);

bool is_normal(const GroupTablePtr& parent, const Subgroup& n);

/// Coset multiplication table of parent/N; throws std::logic_error when N
/// is not normal.
QuotientTable quotient(const GroupTablePtr& parent, const Subgroup& n);

SubTable subtable(const Subgroup& s);

enum class SubgroupScan {
  Auto,         // PairClosure for metacyclic-params tables, Fixpoint otherwise
  PairClosure,  // closures of all element pairs; complete for 2-generated parents
  Fixpoint,     // closure-extension iteration; complete for every parent
};

/// Every subgroup exactly once, sorted by (size, members). Parent order is
/// capped at 512.
std::vector<Subgroup> all_subgroups(const GroupTablePtr& parent,
                                    SubgroupScan method = SubgroupScan::Auto);

/// Invariant factors of an abelian group, sorted descending.
/// Throws std::logic_error on nonabelian input.
std::vector<long long> invariant_factors(const GroupTablePtr& parent);

/// Exactly two equal invariant factors.
bool is_homocyclic_factors(const std::vector<long long>& factors);

int count_involutions(const GroupTablePtr& parent);
bool is_cyclic(const GroupTablePtr& parent);

}  // namespace metafusion
