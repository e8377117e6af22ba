#include "metafusion/morphism.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace metafusion {

bool Automorphism::is_identity() const {
  for (size_t g = 0; g < map.size(); ++g)
    if (map[g] != static_cast<int>(g)) return false;
  return true;
}

int Automorphism::order() const {
  // lcm of cycle lengths
  std::vector<char> seen(map.size(), 0);
  long long ord = 1;
  for (size_t g = 0; g < map.size(); ++g) {
    if (seen[g]) continue;
    int len = 0;
    size_t p = g;
    while (!seen[p]) {
      seen[p] = 1;
      p = static_cast<size_t>(map[p]);
      ++len;
    }
    ord = std::lcm(ord, static_cast<long long>(len));
  }
  return static_cast<int>(ord);
}

Automorphism compose(const Automorphism& f, const Automorphism& g) {
  Automorphism out;
  out.map.resize(g.map.size());
  for (size_t i = 0; i < g.map.size(); ++i) out.map[i] = f.map[g.map[i]];
  out.gen_images = {f.map[g.gen_images[0]], f.map[g.gen_images[1]]};
  return out;
}

std::optional<std::vector<int>> extend_generator_map(const GroupTable& from,
                                                     const std::vector<int>& gens,
                                                     const GroupTable& to,
                                                     const std::vector<int>& images) {
  if (gens.size() != images.size())
    throw std::invalid_argument("extend_generator_map: size mismatch");

  std::vector<int> map(from.order(), -1);
  map[GroupTable::identity()] = GroupTable::identity();
  std::vector<int> queue{GroupTable::identity()};
  for (size_t head = 0; head < queue.size(); ++head) {
    const int g = queue[head];
    for (size_t k = 0; k < gens.size(); ++k) {
      const int gs = from.mul(g, gens[k]);
      const int hs = to.mul(map[g], images[k]);
      if (map[gs] < 0) {
        map[gs] = hs;
        queue.push_back(gs);
      } else if (map[gs] != hs) {
        return std::nullopt;
      }
    }
  }
  if (static_cast<int>(queue.size()) != from.order())
    throw std::invalid_argument("extend_generator_map: gens do not generate");
  return map;
}

std::array<int, 2> find_generating_pair(const GroupTable& t) {
  if (t.order() == 1) return {0, 0};

  // prefer high-order first generators; scan second generators ascending
  std::vector<int> by_order(t.order());
  std::iota(by_order.begin(), by_order.end(), 0);
  std::stable_sort(by_order.begin(), by_order.end(), [&](int a, int b) {
    return t.element_order(a) > t.element_order(b);
  });

  auto table = std::vector<char>(t.order());
  auto closure_size = [&](int a, int b) {
    std::fill(table.begin(), table.end(), 0);
    std::vector<int> queue{0};
    table[0] = 1;
    for (size_t head = 0; head < queue.size(); ++head) {
      for (int s : {a, b}) {
        const int h = t.mul(queue[head], s);
        if (!table[h]) {
          table[h] = 1;
          queue.push_back(h);
        }
      }
    }
    return static_cast<int>(queue.size());
  };

  for (int a : by_order) {
    if (t.element_order(a) == t.order()) return {a, 0};  // cyclic
    for (int b = 0; b < t.order(); ++b) {
      if (closure_size(a, b) == t.order()) return {a, b};
    }
  }
  throw std::invalid_argument("find_generating_pair: group is not 2-generated");
}

bool is_full_homomorphism(const GroupTable& t, const std::vector<int>& map) {
  if (static_cast<int>(map.size()) != t.order()) return false;
  for (int a = 0; a < t.order(); ++a)
    for (int b = 0; b < t.order(); ++b)
      if (map[t.mul(a, b)] != t.mul(map[a], map[b])) return false;
  return true;
}

}  // namespace metafusion
