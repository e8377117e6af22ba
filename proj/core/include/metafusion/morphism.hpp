#pragma once

#include <array>
#include <optional>
#include <vector>

#include "metafusion/group_table.hpp"
#include "metafusion/subgroup.hpp"

namespace metafusion {

/// An automorphism as an explicit element permutation plus the images of
/// the two designated generators it was extended from.
struct Automorphism {
  std::array<int, 2> gen_images{0, 0};
  std::vector<int> map;  // map[g] is the image of g

  bool is_identity() const;
  int order() const;  // permutation order
};

Automorphism compose(const Automorphism& f, const Automorphism& g);  // f after g

/// Attempts to extend gens[k] -> images[k] to a homomorphism from `from`
/// into `to` by walking the Cayley graph of `from` and checking every edge.
/// Returns the full map when consistent, nullopt otherwise. `gens` must
/// generate `from`.
std::optional<std::vector<int>> extend_generator_map(const GroupTable& from,
                                                     const std::vector<int>& gens,
                                                     const GroupTable& to,
                                                     const std::vector<int>& images);

/// Deterministic generating pair of a table known to be 2-generated
/// (cyclic groups get the identity as second generator). Throws when no
/// pair generates.
std::array<int, 2> find_generating_pair(const GroupTable& t);

/// Exhaustive check that map respects every product; used by tests.
bool is_full_homomorphism(const GroupTable& t, const std::vector<int>& map);

}  // namespace metafusion
