#include "metafusion/automorphism.hpp"

#include <algorithm>
#include <stdexcept>

namespace metafusion {

namespace {

AutGroupSummary summarize(std::vector<std::array<int, 2>> pairs) {
  AutGroupSummary s;
  s.order = static_cast<long long>(pairs.size());
  s.odd_part = odd_part(s.order);
  s.is_2_group = s.odd_part == 1;
  s.generator_images = std::move(pairs);
  return s;
}

bool generates_all(const GroupTable& t, int a, int b, std::vector<char>& scratch) {
  std::fill(scratch.begin(), scratch.end(), 0);
  std::vector<int> queue{0};
  scratch[0] = 1;
  for (size_t head = 0; head < queue.size(); ++head) {
    for (int s : {a, b}) {
      const int h = t.mul(queue[head], s);
      if (!scratch[h]) {
        scratch[h] = 1;
        queue.push_back(h);
      }
    }
  }
  return static_cast<int>(queue.size()) == t.order();
}

bool is_bijection(const std::vector<int>& map, std::vector<char>& scratch) {
  std::fill(scratch.begin(), scratch.end(), 0);
  for (int v : map) {
    if (scratch[v]) return false;
    scratch[v] = 1;
  }
  return true;
}

}  // namespace

AutComputation compute_aut(const GroupTablePtr& p, const std::array<int, 2>& gens,
                           bool with_maps) {
  const auto& t = *p;
  if (t.order() > 256)
    throw std::invalid_argument("compute_aut: order cap 256 exceeded");

  std::vector<char> scratch(t.order());
  if (!generates_all(t, gens[0], gens[1], scratch))
    throw std::invalid_argument("compute_aut: gens do not generate the group");

  const int o0 = t.element_order(gens[0]);
  const int o1 = t.element_order(gens[1]);
  std::vector<int> cand0, cand1;
  for (int g = 0; g < t.order(); ++g) {
    if (t.element_order(g) == o0) cand0.push_back(g);
    if (t.element_order(g) == o1) cand1.push_back(g);
  }

  AutComputation out;
  std::vector<std::array<int, 2>> pairs;
  const std::vector<int> gen_list{gens[0], gens[1]};
  for (int a : cand0) {
    for (int b : cand1) {
      auto map = extend_generator_map(t, gen_list, t, {a, b});
      if (!map || !is_bijection(*map, scratch)) continue;
      pairs.push_back({a, b});
      if (with_maps) out.automorphisms.push_back(Automorphism{{a, b}, std::move(*map)});
    }
  }
  out.summary = summarize(std::move(pairs));
  return out;
}

AutComputation compute_aut(const MetacyclicGroup& g, bool with_maps) {
  const auto& t = *g.table;
  if (t.order() > 256)
    throw std::invalid_argument("compute_aut: order cap 256 exceeded");
  const auto& p = g.params;
  const long long xq = 1LL << p.m;
  const long long yq = 1LL << p.n;

  const int o_x = t.element_order(g.x);
  const int o_y = t.element_order(g.y);
  std::vector<int> cand0, cand1;
  for (int h = 0; h < t.order(); ++h) {
    if (t.element_order(h) == o_x) cand0.push_back(h);
    if (t.element_order(h) == o_y) cand1.push_back(h);
  }

  std::vector<char> scratch(t.order());
  AutComputation out;
  std::vector<std::array<int, 2>> pairs;
  for (int a : cand0) {
    const int a_r = t.power(a, p.r);
    const int a_s = t.power(a, p.s);
    for (int b : cand1) {
      if (t.conjugate(b, a) != a_r) continue;
      if (t.power(b, yq) != a_s) continue;
      if (!generates_all(t, a, b, scratch)) continue;
      pairs.push_back({a, b});
      if (with_maps) {
        // extend via normal forms: x^i y^j -> a^i b^j
        std::vector<int> apow(xq), bpow(yq);
        apow[0] = 0;
        for (long long i = 1; i < xq; ++i) apow[i] = t.mul(apow[i - 1], a);
        bpow[0] = 0;
        for (long long j = 1; j < yq; ++j) bpow[j] = t.mul(bpow[j - 1], b);
        std::vector<int> map(t.order());
        for (int e = 0; e < t.order(); ++e) {
          const auto nf = normal_form_of(p, e);
          map[e] = t.mul(apow[nf.i], bpow[nf.j]);
        }
        out.automorphisms.push_back(Automorphism{{a, b}, std::move(map)});
      }
    }
  }
  out.summary = summarize(std::move(pairs));
  return out;
}

SweepReport lemma1_sweep(long long max_order) {
  if (max_order > 256)
    throw std::invalid_argument("lemma1_sweep: max_order cap 256 exceeded");

  SweepReport report;
  report.check = "lemma1";
  report.max_order = max_order;
  report.columns = {"order", "params", "family", "aut_order", "odd_part", "verdict"};

  std::vector<std::string> exceptions;
  for (const auto& type : enumerate_all(max_order)) {
    auto g = build_group(type.params);
    auto aut = compute_aut(g);
    const bool expect_odd =
        type.family.tag == FamilyTag::Homocyclic ||
        (type.family.tag == FamilyTag::Quaternion && type.family.order == 8);
    const bool pass = expect_odd ? aut.summary.odd_part > 1 : aut.summary.is_2_group;
    if (expect_odd && pass)
      exceptions.push_back(type.params.str() + " (" + to_string(type.family.tag) + ")");
    report.add_row({std::to_string(type.family.order), type.params.str(),
                    to_string(type.family.tag), std::to_string(aut.summary.order),
                    std::to_string(aut.summary.odd_part), pass ? "ok" : "FAIL"},
                   pass);
  }

  std::string joined;
  for (const auto& e : exceptions) joined += (joined.empty() ? "" : "; ") + e;
  report.note("non_2_group_exceptions", joined.empty() ? "none" : joined);
  return report;
}

QuotientAutomorphism restrict_to_quotient(const GroupTablePtr& parent,
                                          const Automorphism& phi, const Subgroup& n) {
  // phi must stabilize N setwise
  for (int x : n.members)
    if (!n.contains(phi.map[x]))
      throw std::logic_error("restrict_to_quotient: automorphism does not stabilize N");

  QuotientAutomorphism out;
  out.quotient = quotient(parent, n);
  const auto& q = out.quotient;
  out.induced.map.resize(q.table->order());
  for (int c = 0; c < q.table->order(); ++c)
    out.induced.map[c] = q.coset_of[phi.map[q.rep_of[c]]];
  // well-definedness across every coset member
  for (int g = 0; g < parent->order(); ++g)
    if (q.coset_of[phi.map[g]] != out.induced.map[q.coset_of[g]])
      throw std::logic_error("restrict_to_quotient: induced map is not well defined");
  out.induced.gen_images = {q.coset_of[phi.gen_images[0]], q.coset_of[phi.gen_images[1]]};
  return out;
}

}  // namespace metafusion
