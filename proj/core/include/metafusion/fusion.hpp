#pragma once

#include <optional>
#include <string>
#include <vector>

#include "metafusion/automorphism.hpp"
#include "metafusion/metacyclic.hpp"
#include "metafusion/report.hpp"
#include "metafusion/subgroup.hpp"

namespace metafusion {

/// Conjugation action of N_P(Q)/Q on the four cosets of Phi(Q) in Q.
/// Requires |Q/Phi(Q)| = 4 (Q noncyclic with two generators).
struct FrattiniAction {
  Subgroup normalizer_of_q;            // N_P(Q)
  QuotientTable acting;                // N_P(Q)/Q
  std::vector<int> coset_of_v;         // parent element of Q -> index of its Phi(Q)-coset
  std::vector<std::vector<int>> perms; // per acting element, permutation of the 4 cosets
  int kernel_size = 0;                 // elements of N_P(Q) acting trivially
  bool faithful = false;               // kernel of the N_P(Q)/Q action is trivial
};

FrattiniAction action_on_frattini_quotient(const GroupTablePtr& p, const Subgroup& q);

/// Non-faithfulness sweep: over every metacyclic type of order <= max_order
/// and every subgroup isomorphic to C_{2^k} x C_{2^k} with k >= 2, the
/// induced action must be non-faithful. Also tallies, per (P, k), how many
/// such subgroups exist (recorded, not asserted). max_order <= 128.
SweepReport lemma2_sweep(long long max_order);

enum class EliminationReason {
  AutIs2Group,
  QuaternionExcluded,
  NotCentric,
  OmegaArgument,
  KernelArgument,
};

std::string to_string(EliminationReason r);

struct EssentialCandidateReport {
  Subgroup subgroup;
  std::optional<Family> shape;
  bool centric_in_p = false;
  bool aut_not_2group = false;
  long long aut_order = 0;
  long long aut_odd_part = 1;
  std::optional<bool> action_faithful;  // filled when Q is homocyclic
  bool candidate = false;
  std::optional<EliminationReason> reason;
};

/// Filters every proper subgroup of a metacyclic 2-group through the
/// necessary conditions for essentiality: Aut(Q) not a 2-group, Q not
/// quaternion, Q self-centralizing, and for homocyclic Q either the
/// omega argument (k = 1) or the non-faithful-action kernel argument
/// (k >= 2). Survivors are reported as candidates; an empty list together
/// with Aut(P) a 2-group certifies that every fusion system on P is
/// nilpotent. Order cap 256.
std::vector<EssentialCandidateReport> essential_candidates(const GroupTablePtr& p);

/// Witness subgroup when G has a strongly p-embedded subgroup: a proper H
/// of order divisible by p with p dividing no |H ∩ gHg^-1| for g outside
/// H. Brute force over all subgroups.
std::optional<Subgroup> has_strongly_p_embedded(const GroupTablePtr& g, int p);

enum class VerdictTag { ForcedNilpotent, NotForced };
enum class ObstructionReason { None, MaximalClass, Homocyclic };

struct Verdict {
  VerdictTag tag = VerdictTag::ForcedNilpotent;
  ObstructionReason reason = ObstructionReason::None;
};

std::string to_string(VerdictTag tag);
std::string to_string(ObstructionReason r);

/// forced-nilpotent for every metacyclic 2-group that is neither of
/// maximal class nor homocyclic. With cross_check set, a forced verdict
/// additionally verifies the two pillars (empty candidate list, Aut(P) a
/// 2-group) and throws std::logic_error if either fails.
Verdict nilpotency_verdict(const GroupTablePtr& p, bool cross_check = false);

/// Per-type sweep: forced-nilpotent types must have an empty candidate
/// list and a 2-group automorphism group; not-forced types have their
/// obstruction recorded. max_order <= 128.
SweepReport theorem3_sweep(long long max_order);

/// Per-subgroup candidate report rows in the fusion TSV schema
/// (params, q_size, q_shape, verdict, reason).
SweepReport essential_report(const MetacyclicParams& params);

}  // namespace metafusion
