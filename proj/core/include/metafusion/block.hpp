#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "metafusion/metacyclic.hpp"
#include "metafusion/report.hpp"

namespace metafusion {

/// Which fusion behaviour a block with the given defect group exhibits.
/// The selector is explicit input: where several fusion systems share a
/// defect group the calculator never guesses among them.
enum class FusionCase {
  Nilpotent,
  DihedralL2,
  DihedralL3,
  Quaternion8,
  QuaternionA,
  QuaternionB,
  SemidihedralA,
  SemidihedralB,
  SemidihedralC,
  HomocyclicE3,
};

std::string to_string(FusionCase c);
std::optional<FusionCase> fusion_case_from_string(const std::string& text);

/// A defect group given either by presentation parameters or by family and
/// order.
struct DefectGroupDescriptor {
  std::optional<MetacyclicParams> params;
  std::optional<std::pair<FamilyTag, long long>> family_order;

  static DefectGroupDescriptor from_params(const MetacyclicParams& p);
  static DefectGroupDescriptor from_family(FamilyTag tag, long long order);

  /// Concrete parameters (family descriptors resolve through
  /// standard_family) plus the recognized family of the built group.
  MetacyclicParams resolve_params() const;
  Family resolve_family() const;
};

struct BlockInvariants {
  long long k = 0;                    // ordinary irreducible characters
  std::map<int, long long> heights;   // height i -> k_i, absent heights are zero
  long long l = 0;                    // irreducible Brauer characters

  long long height(int i) const;
  long long height_sum() const;
};

/// Ordinary character degrees of the group presented by params, as a map
/// degree -> count. Computed by the orbit method on the characters of the
/// cyclic normal subgroup <x>: an orbit of multiplication by r on Z/2^m of
/// size t contributes 2^n / t irreducible characters of degree t. The
/// result is cross-checked against a brute-force conjugacy class count and
/// the degree-square sum; a mismatch throws std::logic_error.
std::map<long long, long long> character_degree_distribution(const MetacyclicParams& p);

std::vector<FusionCase> admissible_cases(const DefectGroupDescriptor& d);

/// k(B), the height distribution k_i(B), and l(B) for an admissible
/// (defect group, fusion case) pair; inadmissible pairs are refused with
/// std::invalid_argument.
BlockInvariants block_invariants(const DefectGroupDescriptor& d, FusionCase c);

/// One row per admissible fusion case of the descriptor, in the columns
/// (family, order, case, k, k0, k1, k_{n-2}, l).
SweepReport theorem4_table(const DefectGroupDescriptor& d);

/// Nilpotent-case cross-check sweep over every metacyclic type of order
/// <= max_order: class count, degree-square sum and degree-one count must
/// match the table-derived values. max_order <= 256.
SweepReport degrees_sweep(long long max_order);

}  // namespace metafusion
