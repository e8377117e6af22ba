#pragma once

#include <optional>
#include <string>
#include <vector>

#include "metafusion/group_table.hpp"
#include "metafusion/subgroup.hpp"

namespace metafusion {

/// Presentation parameters of a metacyclic 2-group
///   < x, y | x^(2^m) = 1, y x y^-1 = x^r, y^(2^n) = x^s >
/// with r odd, 0 <= r,s < 2^m, subject to the consistency congruences
/// r^(2^n) = 1 (mod 2^m) and s(r-1) = 0 (mod 2^m). The resulting group has
/// order 2^(m+n). Degenerate axes are canonicalized: m = 0 forces (r,s) =
/// (1,0), and n = 0 forces (r,s) = (1,0).
struct MetacyclicParams {
  int m = 0;
  int n = 0;
  long long r = 1;
  long long s = 0;

  long long order() const { return 1LL << (m + n); }
  std::string str() const;  // "m,n,r,s"

  friend auto operator<=>(const MetacyclicParams&, const MetacyclicParams&) = default;
};

/// Parses "m,n,r,s"; throws std::invalid_argument on malformed input.
MetacyclicParams parse_params(const std::string& text);

/// nullopt when valid, otherwise a description of the violated condition.
std::optional<std::string> validate(const MetacyclicParams& p);

/// Normal form x^i y^j; element index is i * 2^n + j.
struct NormalFormElement {
  int i = 0;
  int j = 0;
};

int normal_form_index(const MetacyclicParams& p, const NormalFormElement& e);
NormalFormElement normal_form_of(const MetacyclicParams& p, int index);

enum class FamilyTag {
  Cyclic,
  Homocyclic,
  AbelianOther,
  Dihedral,
  Semidihedral,
  Quaternion,
  Modular,
  OtherMetacyclic,
};

std::string to_string(FamilyTag tag);
std::optional<FamilyTag> family_tag_from_string(const std::string& text);

struct Family {
  FamilyTag tag;
  long long order;
};

/// A built metacyclic group together with its designated generators.
struct MetacyclicGroup {
  MetacyclicParams params;
  GroupTablePtr table;
  int x = 0;  // index of x (identity when m = 0)
  int y = 0;  // index of y (identity when n = 0)
};

/// Multiplication table of the presented group. Throws on invalid
/// parameters or when m + n > 9.
GroupTablePtr build(const MetacyclicParams& p);
MetacyclicGroup build_group(const MetacyclicParams& p);

/// Canonical parameters for the named families:
///   dihedral 2^k (k>=3), quaternion 2^k (k>=3), semidihedral 2^k (k>=4),
///   modular 2^k (k>=4), homocyclic 2^k (k even), cyclic 2^k (k>=0).
MetacyclicParams standard_family(FamilyTag tag, long long order);

/// Recognizes the family of a 2-group table; nullopt when the input is not
/// metacyclic. Requires a 2-group of order <= 512.
std::optional<Family> classify(const GroupTablePtr& table);

/// True when some cyclic normal subgroup has cyclic quotient.
bool is_metacyclic(const GroupTablePtr& table);

struct MetacyclicType {
  MetacyclicParams params;
  Family family;
};

/// All isomorphism types of metacyclic 2-groups of order <= max_order,
/// one canonical parameter tuple each, deduplicated by explicit
/// isomorphism search and sorted by (order, family, params).
std::vector<MetacyclicType> enumerate_all(long long max_order);

/// True when `candidate` is isomorphic to the group presented by `params`.
/// Searches generator images satisfying the defining relations.
bool isomorphic_to_params(const MetacyclicParams& params, const GroupTable& candidate);

}  // namespace metafusion
