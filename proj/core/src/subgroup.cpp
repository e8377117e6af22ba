#include "metafusion/subgroup.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace metafusion {

namespace {

// Right-multiplication closure from the identity. Finite, so closure under
// products implies closure under inverses.
std::vector<int> close(const GroupTable& t, const std::vector<int>& gens) {
  std::vector<char> seen(t.order(), 0);
  std::vector<int> queue{GroupTable::identity()};
  seen[GroupTable::identity()] = 1;
  for (size_t head = 0; head < queue.size(); ++head) {
    const int g = queue[head];
    for (int s : gens) {
      const int h = t.mul(g, s);
      if (!seen[h]) {
        seen[h] = 1;
        queue.push_back(h);
      }
    }
  }
  std::sort(queue.begin(), queue.end());
  return queue;
}

// Greedy minimal-ish generating set for a sorted member list.
std::vector<int> reduce_generators(const GroupTable& t, const std::vector<int>& members) {
  std::vector<int> gens;
  std::vector<int> cl{GroupTable::identity()};
  for (int g : members) {
    if (std::binary_search(cl.begin(), cl.end(), g)) continue;
    gens.push_back(g);
    cl = close(t, gens);
    if (cl.size() == members.size()) break;
  }
  return gens;
}

Subgroup from_members(const GroupTablePtr& parent, std::vector<int> members) {
  std::sort(members.begin(), members.end());
  Subgroup s;
  s.parent = parent;
  s.generators = reduce_generators(*parent, members);
  s.members = std::move(members);
  return s;
}

}  // namespace

bool Subgroup::contains(int g) const {
  return std::binary_search(members.begin(), members.end(), g);
}

bool Subgroup::contains(const Subgroup& other) const {
  return std::includes(members.begin(), members.end(),
                       other.members.begin(), other.members.end());
}

Subgroup trivial_subgroup(const GroupTablePtr& parent) {
  return Subgroup{parent, {GroupTable::identity()}, {}};
}

Subgroup whole_group(const GroupTablePtr& parent) {
  std::vector<int> all(parent->order());
  std::iota(all.begin(), all.end(), 0);
  return Subgroup{parent, std::move(all), reduce_generators(*parent, [&] {
                    std::vector<int> m(parent->order());
                    std::iota(m.begin(), m.end(), 0);
                    return m;
                  }())};
}

Subgroup generate_closure(const GroupTablePtr& parent, const std::vector<int>& gens) {
  for (int g : gens) {
    if (g < 0 || g >= parent->order())
      throw std::invalid_argument("generate_closure: element index out of range");
  }
  Subgroup s;
  s.parent = parent;
  s.members = close(*parent, gens);
  s.generators = gens;
  // drop generators that repeat or equal the identity, keep closure equal
  std::vector<int> cleaned;
  for (int g : gens)
    if (g != GroupTable::identity() &&
        std::find(cleaned.begin(), cleaned.end(), g) == cleaned.end())
      cleaned.push_back(g);
  s.generators = cleaned;
  return s;
}

Subgroup normalizer(const GroupTablePtr& parent, const Subgroup& q) {
  const auto& t = *parent;
  std::vector<int> members;
  for (int g = 0; g < t.order(); ++g) {
    bool ok = true;
    for (int x : q.members) {
      if (!q.contains(t.conjugate(g, x))) {
        ok = false;
        break;
      }
    }
    if (ok) members.push_back(g);
  }
  return from_members(parent, std::move(members));
}

Subgroup centralizer(const GroupTablePtr& parent, const Subgroup& q) {
  const auto& t = *parent;
  std::vector<int> members;
  for (int g = 0; g < t.order(); ++g) {
    bool ok = true;
    for (int x : q.members) {
      if (t.mul(g, x) != t.mul(x, g)) {
        ok = false;
        break;
      }
    }
    if (ok) members.push_back(g);
  }
  return from_members(parent, std::move(members));
}

Subgroup center(const GroupTablePtr& parent) {
  return centralizer(parent, whole_group(parent));
}

Subgroup derived_subgroup(const GroupTablePtr& parent) {
  const auto& t = *parent;
  std::set<int> comms;
  for (int a = 0; a < t.order(); ++a)
    for (int b = 0; b < t.order(); ++b) comms.insert(t.commutator(a, b));
  std::vector<int> gens(comms.begin(), comms.end());
  auto s = generate_closure(parent, gens);
  s.generators = reduce_generators(t, s.members);
  return s;
}

namespace {

Subgroup frattini_by_maximal_intersection(const GroupTablePtr& parent) {
  auto subs = all_subgroups(parent);
  // maximal proper subgroups: proper and not contained in a larger proper one
  std::vector<const Subgroup*> maximal;
  for (const auto& h : subs) {
    if (h.size() == parent->order()) continue;
    bool is_max = true;
    for (const auto& k : subs) {
      if (k.size() == parent->order() || k.size() <= h.size()) continue;
      if (k.contains(h)) {
        is_max = false;
        break;
      }
    }
    if (is_max) maximal.push_back(&h);
  }
  if (maximal.empty()) return whole_group(parent);  // trivial group
  std::vector<int> inter = maximal[0]->members;
  for (size_t i = 1; i < maximal.size(); ++i) {
    std::vector<int> next;
    std::set_intersection(inter.begin(), inter.end(),
                          maximal[i]->members.begin(), maximal[i]->members.end(),
                          std::back_inserter(next));
    inter = std::move(next);
  }
  return from_members(parent, std::move(inter));
}

}  // namespace

Subgroup frattini(const GroupTablePtr& parent) {
  const auto& t = *parent;
  if (!t.is_2_group()) return frattini_by_maximal_intersection(parent);

  std::set<int> gens;
  for (int g = 0; g < t.order(); ++g) gens.insert(t.mul(g, g));
  for (int a = 0; a < t.order(); ++a)
    for (int b = 0; b < t.order(); ++b) gens.insert(t.commutator(a, b));
  auto s = generate_closure(parent, {gens.begin(), gens.end()});
  s.generators = reduce_generators(t, s.members);

  if (t.order() <= 64) {
    auto dual = frattini_by_maximal_intersection(parent);
    if (!s.same_members(dual))
      throw std::logic_error("frattini: squares-and-commutators disagrees with "
                             "maximal-subgroup intersection");
  }
  return s;
}

Subgroup omega(const GroupTablePtr& parent) {
  const auto& t = *parent;
  std::vector<int> invs;
  for (int g = 1; g < t.order(); ++g)
    if (t.mul(g, g) == GroupTable::identity()) invs.push_back(g);
  return generate_closure(parent, invs);
}

ConjugacyPartition conjugacy_classes(const GroupTablePtr& parent) {
  const auto& t = *parent;
  ConjugacyPartition p;
  std::vector<char> seen(t.order(), 0);
  for (int g = 0; g < t.order(); ++g) {
    if (seen[g]) continue;
    std::set<int> cls;
    for (int h = 0; h < t.order(); ++h) cls.insert(t.conjugate(h, g));
    std::vector<int> c(cls.begin(), cls.end());
    for (int x : c) seen[x] = 1;
    p.classes.push_back(std::move(c));
  }
  return p;
}

std::vector<Subgroup> lower_central_series(const GroupTablePtr& parent) {
  std::vector<Subgroup> series{whole_group(parent)};
  while (true) {
    const Subgroup& prev = series.back();
    std::set<int> comms;
    for (int a : prev.members)
      for (int b = 0; b < parent->order(); ++b)
        comms.insert(parent->commutator(a, b));
    auto next = generate_closure(parent, {comms.begin(), comms.end()});
    next.generators = reduce_generators(*parent, next.members);
    if (next.size() == prev.size()) break;  // stabilized (trivial iff nilpotent)
    series.push_back(std::move(next));
    if (series.back().size() == 1) break;
  }
  return series;
}

int nilpotency_class(const GroupTablePtr& parent) {
  auto series = lower_central_series(parent);
  if (series.back().size() != 1)
    throw std::logic_error("nilpotency_class: input is not nilpotent");
  return static_cast<int>(series.size()) - 1;
}

bool is_normal(const GroupTablePtr& parent, const Subgroup& n) {
  for (int g = 0; g < parent->order(); ++g)
    for (int x : n.members)
      if (!n.contains(parent->conjugate(g, x))) return false;
  return true;
}

QuotientTable quotient(const GroupTablePtr& parent, const Subgroup& n) {
  if (!is_normal(parent, n))
    throw std::logic_error("quotient: subgroup is not normal in parent");
  const auto& t = *parent;
  const int order = t.order();

  std::vector<int> coset_of(order, -1);
  std::vector<int> rep_of;
  for (int g = 0; g < order; ++g) {
    if (coset_of[g] >= 0) continue;
    const int id = static_cast<int>(rep_of.size());
    rep_of.push_back(g);  // g is minimal in its coset: smaller elements are assigned
    for (int x : n.members) coset_of[t.mul(g, x)] = id;
  }

  const int q = static_cast<int>(rep_of.size());
  std::vector<std::vector<int>> mul(q, std::vector<int>(q));
  std::vector<std::string> labels(q);
  for (int a = 0; a < q; ++a) {
    labels[a] = t.label(rep_of[a]);
    for (int b = 0; b < q; ++b) mul[a][b] = coset_of[t.mul(rep_of[a], rep_of[b])];
  }

  QuotientTable result;
  result.table = GroupTable::create(std::move(mul), std::move(labels), TableSource::Quotient);
  result.coset_of = std::move(coset_of);
  result.rep_of = std::move(rep_of);
  return result;
}

SubTable subtable(const Subgroup& s) {
  const auto& t = *s.parent;
  const int m = s.size();
  std::vector<int> to_sub(t.order(), -1);
  for (int i = 0; i < m; ++i) to_sub[s.members[i]] = i;

  std::vector<std::vector<int>> mul(m, std::vector<int>(m));
  std::vector<std::string> labels(m);
  for (int i = 0; i < m; ++i) {
    labels[i] = t.label(s.members[i]);
    for (int j = 0; j < m; ++j) {
      const int p = t.mul(s.members[i], s.members[j]);
      const int q = to_sub[p];
      if (q < 0) throw std::logic_error("subtable: member set is not closed");
      mul[i][j] = q;
    }
  }

  SubTable result;
  result.table = GroupTable::create(std::move(mul), std::move(labels),
                                    TableSource::SubgroupRestriction);
  result.to_parent = s.members;
  result.to_sub = std::move(to_sub);
  return result;
}

std::vector<Subgroup> all_subgroups(const GroupTablePtr& parent, SubgroupScan method) {
  const auto& t = *parent;
  if (t.order() > 512)
    throw std::invalid_argument("all_subgroups: order cap 512 exceeded");

  if (method == SubgroupScan::Auto) {
    method = t.source() == TableSource::MetacyclicParams ? SubgroupScan::PairClosure
                                                         : SubgroupScan::Fixpoint;
  }

  std::set<std::vector<int>> seen;
  std::vector<Subgroup> out;
  auto add = [&](Subgroup s) -> bool {
    if (seen.insert(s.members).second) {
      out.push_back(std::move(s));
      return true;
    }
    return false;
  };

  add(trivial_subgroup(parent));
  if (method == SubgroupScan::PairClosure) {
    for (int a = 1; a < t.order(); ++a) {
      add(generate_closure(parent, {a}));
      for (int b = a + 1; b < t.order(); ++b)
        add(generate_closure(parent, {a, b}));
    }
  } else {
    for (int a = 1; a < t.order(); ++a) add(generate_closure(parent, {a}));
    // extend every known subgroup by one element until no new ones appear
    for (size_t head = 0; head < out.size(); ++head) {
      if (out[head].size() == t.order()) continue;
      const auto gens = out[head].generators;
      const auto members = out[head].members;  // copy: out grows
      for (int g = 1; g < t.order(); ++g) {
        if (std::binary_search(members.begin(), members.end(), g)) continue;
        auto ext = gens;
        ext.push_back(g);
        add(generate_closure(parent, ext));
      }
    }
  }

  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.members < b.members;
  });
  return out;
}

std::vector<long long> invariant_factors(const GroupTablePtr& parent) {
  const auto& t = *parent;
  if (!t.is_abelian())
    throw std::logic_error("invariant_factors: input is not abelian");
  if (t.order() == 1) return {};

  // per prime p: counts of elements killed by p^j give the conjugate
  // partition of the p-part exponents
  std::map<long long, std::vector<int>> prime_exponents;
  long long n = t.order();
  for (long long p = 2; p * p <= n; ++p)
    while (n % p == 0) {
      prime_exponents[p];
      n /= p;
    }
  if (n > 1) prime_exponents[n];

  for (auto& [p, exps] : prime_exponents) {
    std::vector<int> log_counts{0};  // log_p #{g : g^(p^j) = 1}, j = 0,1,...
    long long pj = 1;
    while (true) {
      pj *= p;
      int cnt = 0;
      for (int g = 0; g < t.order(); ++g)
        if (t.power(g, pj) == GroupTable::identity()) ++cnt;
      int e = 0;
      long long c = cnt;
      while (c % p == 0) {
        c /= p;
        ++e;
      }
      if (e == log_counts.back()) break;
      log_counts.push_back(e);
      if (pj > t.order()) break;
    }
    // d_j = #factors with p-exponent >= j; conjugate to get the exponents
    std::vector<int> d;
    for (size_t j = 1; j < log_counts.size(); ++j)
      d.push_back(log_counts[j] - log_counts[j - 1]);
    const int rank = d.empty() ? 0 : d[0];
    for (int i = 1; i <= rank; ++i) {
      int a = 0;
      for (int dj : d)
        if (dj >= i) ++a;
      exps.push_back(a);
    }
    std::sort(exps.begin(), exps.end(), std::greater<>());
  }

  size_t rank = 0;
  for (const auto& [p, exps] : prime_exponents) rank = std::max(rank, exps.size());
  std::vector<long long> factors(rank, 1);
  for (const auto& [p, exps] : prime_exponents)
    for (size_t i = 0; i < exps.size(); ++i)
      for (int e = 0; e < exps[i]; ++e) factors[i] *= p;
  return factors;
}

bool is_homocyclic_factors(const std::vector<long long>& factors) {
  return factors.size() == 2 && factors[0] == factors[1];
}

int count_involutions(const GroupTablePtr& parent) {
  int c = 0;
  for (int g = 1; g < parent->order(); ++g)
    if (parent->mul(g, g) == GroupTable::identity()) ++c;
  return c;
}

bool is_cyclic(const GroupTablePtr& parent) {
  for (int g = 0; g < parent->order(); ++g)
    if (parent->element_order(g) == parent->order()) return true;
  return false;
}

}  // namespace metafusion
