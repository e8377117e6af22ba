#include "metafusion/fusion.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace metafusion {

namespace {

// parent-indexed members of Phi(Q), computed inside Q's own table
std::vector<int> frattini_members_in_parent(const Subgroup& q) {
  auto st = subtable(q);
  auto phi = frattini(st.table);
  std::vector<int> out;
  out.reserve(phi.members.size());
  for (int i : phi.members) out.push_back(st.to_parent[i]);
  std::sort(out.begin(), out.end());
  return out;
}

// k with |Q| = 4^k when Q is homocyclic C_{2^k} x C_{2^k}
int homocyclic_k(const Subgroup& q) {
  int k = 0;
  long long sz = q.size();
  while (sz > 1) {
    sz /= 4;
    ++k;
  }
  return k;
}

}  // namespace

FrattiniAction action_on_frattini_quotient(const GroupTablePtr& p, const Subgroup& q) {
  const auto& t = *p;

  const auto phi_members = frattini_members_in_parent(q);
  if (q.size() != 4 * static_cast<int>(phi_members.size()))
    throw std::logic_error(
        "action_on_frattini_quotient: Q/Phi(Q) does not have order 4");

  FrattiniAction out;
  out.normalizer_of_q = normalizer(p, q);

  // index the four Phi(Q)-cosets inside Q; the identity coset gets index 0
  out.coset_of_v.assign(t.order(), -1);
  std::vector<int> v_reps;
  for (int g : q.members) {
    if (out.coset_of_v[g] >= 0) continue;
    const int id = static_cast<int>(v_reps.size());
    v_reps.push_back(g);
    for (int f : phi_members) out.coset_of_v[t.mul(g, f)] = id;
  }
  if (v_reps.size() != 4)
    throw std::logic_error("action_on_frattini_quotient: coset indexing failed");

  // acting group N_P(Q)/Q
  auto nst = subtable(out.normalizer_of_q);
  std::vector<int> q_in_n;
  q_in_n.reserve(q.members.size());
  for (int g : q.members) q_in_n.push_back(nst.to_sub[g]);
  std::sort(q_in_n.begin(), q_in_n.end());
  Subgroup q_sub{nst.table, q_in_n, {}};
  out.acting = quotient(nst.table, q_sub);

  // permutation of the cosets induced by each acting coset representative
  auto perm_of = [&](int n_elt) {
    std::vector<int> perm(4);
    for (int v = 0; v < 4; ++v) perm[v] = out.coset_of_v[t.conjugate(n_elt, v_reps[v])];
    for (int g : q.members)
      if (out.coset_of_v[t.conjugate(n_elt, g)] != perm[out.coset_of_v[g]])
        throw std::logic_error("action_on_frattini_quotient: action not well defined");
    return perm;
  };

  out.perms.resize(out.acting.table->order());
  for (int c = 0; c < out.acting.table->order(); ++c)
    out.perms[c] = perm_of(nst.to_parent[out.acting.rep_of[c]]);

  const std::vector<int> id_perm{0, 1, 2, 3};
  out.kernel_size = 0;
  for (int n : out.normalizer_of_q.members)
    if (perm_of(n) == id_perm) ++out.kernel_size;
  if (out.kernel_size < q.size())
    throw std::logic_error("action_on_frattini_quotient: Q does not act trivially");
  out.faithful = out.kernel_size == q.size();
  return out;
}

SweepReport lemma2_sweep(long long max_order) {
  if (max_order > 128)
    throw std::invalid_argument("lemma2_sweep: max_order cap 128 exceeded");

  SweepReport report;
  report.check = "lemma2";
  report.max_order = max_order;
  report.columns = {"params", "q_size", "q_shape", "faithful", "subgroups_of_type",
                    "verdict"};

  for (const auto& type : enumerate_all(max_order)) {
    auto g = build_group(type.params);
    auto subs = all_subgroups(g.table);

    // proper homocyclic C_{2^k}^2 subgroups with k >= 2, tallied per k
    std::map<int, std::vector<const Subgroup*>> by_k;
    for (const auto& q : subs) {
      if (q.size() < 16 || q.size() == g.table->order()) continue;
      auto st = subtable(q);
      if (!st.table->is_abelian()) continue;
      auto factors = invariant_factors(st.table);
      if (is_homocyclic_factors(factors)) by_k[homocyclic_k(q)].push_back(&q);
    }

    for (const auto& [k, qs] : by_k) {
      for (const Subgroup* q : qs) {
        auto action = action_on_frattini_quotient(g.table, *q);
        const bool pass = !action.faithful;
        report.add_row({type.params.str(), std::to_string(q->size()), "homocyclic",
                        action.faithful ? "true" : "false",
                        std::to_string(qs.size()), pass ? "ok" : "FAIL"},
                       pass);
      }
    }
  }
  return report;
}

std::string to_string(EliminationReason r) {
  switch (r) {
    case EliminationReason::AutIs2Group: return "aut-is-2group";
    case EliminationReason::QuaternionExcluded: return "quaternion-excluded";
    case EliminationReason::NotCentric: return "not-centric";
    case EliminationReason::OmegaArgument: return "omega-argument";
    case EliminationReason::KernelArgument: return "kernel-argument";
  }
  return "unknown";
}

std::vector<EssentialCandidateReport> essential_candidates(const GroupTablePtr& p) {
  const auto& t = *p;
  if (!t.is_2_group() || t.order() > 256)
    throw std::invalid_argument("essential_candidates: needs a 2-group of order <= 256");
  if (!is_metacyclic(p))
    throw std::invalid_argument("essential_candidates: parent must be metacyclic");

  const auto omega_p = omega(p);
  std::vector<EssentialCandidateReport> out;

  for (const auto& q : all_subgroups(p)) {
    if (q.size() == t.order()) continue;  // proper subgroups only

    EssentialCandidateReport rep;
    rep.subgroup = q;

    auto st = subtable(q);
    rep.shape = classify(st.table);
    auto aut = compute_aut(st.table, find_generating_pair(*st.table));
    rep.aut_order = aut.summary.order;
    rep.aut_odd_part = aut.summary.odd_part;
    rep.aut_not_2group = !aut.summary.is_2_group;

    rep.centric_in_p = q.contains(centralizer(p, q));

    const bool homocyclic = rep.shape && rep.shape->tag == FamilyTag::Homocyclic;
    std::optional<FrattiniAction> action;
    if (homocyclic) {
      action = action_on_frattini_quotient(p, q);
      rep.action_faithful = action->faithful;
    }

    // elimination stages in proof order; first match wins
    if (!rep.aut_not_2group) {
      rep.reason = EliminationReason::AutIs2Group;
    } else if (rep.shape && rep.shape->tag == FamilyTag::Quaternion) {
      rep.reason = EliminationReason::QuaternionExcluded;
    } else if (!rep.centric_in_p) {
      rep.reason = EliminationReason::NotCentric;
    } else if (homocyclic && q.size() == 4 && t.order() > 8 &&
               omega_p.same_members(q)) {
      // Q = Omega(P) is normal and P/Q embeds in Aut(C2 x C2), which has
      // 2-part 2: impossible for |P| > 8, so Q cannot be essential
      rep.reason = EliminationReason::OmegaArgument;
    } else if (homocyclic && q.size() >= 16 && !action->faithful) {
      // the kernel of the N_P(Q)/Q action forces O_2 != 1 in any
      // automorphism group between Aut_P(Q) and Aut(Q)
      rep.reason = EliminationReason::KernelArgument;
    } else {
      rep.candidate = true;
    }
    out.push_back(std::move(rep));
  }
  return out;
}

std::optional<Subgroup> has_strongly_p_embedded(const GroupTablePtr& g, int p) {
  const auto& t = *g;
  for (const auto& h : all_subgroups(g)) {
    if (h.size() == t.order() || h.size() % p != 0) continue;
    bool strongly = true;
    for (int x = 0; x < t.order() && strongly; ++x) {
      if (h.contains(x)) continue;
      int inter = 0;
      const int xi = t.inv(x);
      for (int m : h.members)
        if (h.contains(t.conjugate(xi, m))) ++inter;
      if (inter % p == 0) strongly = false;
    }
    if (strongly) return h;
  }
  return std::nullopt;
}

std::string to_string(VerdictTag tag) {
  return tag == VerdictTag::ForcedNilpotent ? "forced-nilpotent" : "not-forced";
}

std::string to_string(ObstructionReason r) {
  switch (r) {
    case ObstructionReason::None: return "none";
    case ObstructionReason::MaximalClass: return "maximal-class";
    case ObstructionReason::Homocyclic: return "homocyclic";
  }
  return "unknown";
}

Verdict nilpotency_verdict(const GroupTablePtr& p, bool cross_check) {
  auto fam = classify(p);
  if (!fam) throw std::invalid_argument("nilpotency_verdict: input is not metacyclic");

  Verdict v;
  switch (fam->tag) {
    case FamilyTag::Dihedral:
    case FamilyTag::Semidihedral:
    case FamilyTag::Quaternion:
      v = {VerdictTag::NotForced, ObstructionReason::MaximalClass};
      break;
    case FamilyTag::Homocyclic:
      v = {VerdictTag::NotForced, ObstructionReason::Homocyclic};
      break;
    default:
      v = {VerdictTag::ForcedNilpotent, ObstructionReason::None};
      break;
  }

  if (cross_check && v.tag == VerdictTag::ForcedNilpotent) {
    for (const auto& rep : essential_candidates(p))
      if (rep.candidate)
        throw std::logic_error("nilpotency_verdict: forced verdict with a surviving "
                               "essential candidate");
    auto aut = compute_aut(p, find_generating_pair(*p));
    if (!aut.summary.is_2_group)
      throw std::logic_error("nilpotency_verdict: forced verdict but Aut(P) is not "
                             "a 2-group");
  }
  return v;
}

SweepReport theorem3_sweep(long long max_order) {
  if (max_order > 128)
    throw std::invalid_argument("theorem3_sweep: max_order cap 128 exceeded");

  SweepReport report;
  report.check = "theorem3";
  report.max_order = max_order;
  report.columns = {"params", "family", "verdict", "reason",
                    "candidates", "aut_odd_part", "status"};

  for (const auto& type : enumerate_all(max_order)) {
    auto g = build_group(type.params);
    auto verdict = nilpotency_verdict(g.table);
    int candidates = 0;
    for (const auto& rep : essential_candidates(g.table))
      if (rep.candidate) ++candidates;
    auto aut = compute_aut(g);

    bool pass = true;
    std::string status = "recorded";
    if (verdict.tag == VerdictTag::ForcedNilpotent) {
      pass = candidates == 0 && aut.summary.is_2_group;
      status = pass ? "ok" : "FAIL";
    }
    report.add_row({type.params.str(), to_string(type.family.tag),
                    to_string(verdict.tag), to_string(verdict.reason),
                    std::to_string(candidates),
                    std::to_string(aut.summary.odd_part), status},
                   pass);
  }
  return report;
}

SweepReport essential_report(const MetacyclicParams& params) {
  auto g = build_group(params);

  SweepReport report;
  report.check = "essential";
  report.max_order = g.table->order();
  report.columns = {"params", "q_size", "q_shape", "verdict", "reason"};
  for (const auto& rep : essential_candidates(g.table)) {
    report.add_row({params.str(), std::to_string(rep.subgroup.size()),
                    rep.shape ? to_string(rep.shape->tag) : "not-metacyclic",
                    rep.candidate ? "candidate" : "eliminated",
                    rep.reason ? to_string(*rep.reason) : "-"},
                   true);
  }
  report.note("candidates", std::to_string(std::count_if(
                                report.rows.begin(), report.rows.end(),
                                [](const auto& r) { return r[3] == "candidate"; })));
  return report;
}

}  // namespace metafusion
