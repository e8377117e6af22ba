#include "metafusion/block.hpp"

#include <algorithm>
#include <stdexcept>

#include "metafusion/subgroup.hpp"

namespace metafusion {

namespace {

long long pow2(int e) { return 1LL << e; }

int log2_exact(long long n) {
  int e = 0;
  while (pow2(e) < n) ++e;
  if (pow2(e) != n) throw std::invalid_argument("order is not a power of two");
  return e;
}

}  // namespace

std::string to_string(FusionCase c) {
  switch (c) {
    case FusionCase::Nilpotent: return "nilpotent";
    case FusionCase::DihedralL2: return "dihedral-l2";
    case FusionCase::DihedralL3: return "dihedral-l3";
    case FusionCase::Quaternion8: return "quaternion8";
    case FusionCase::QuaternionA: return "quaternion-a";
    case FusionCase::QuaternionB: return "quaternion-b";
    case FusionCase::SemidihedralA: return "semidihedral-a";
    case FusionCase::SemidihedralB: return "semidihedral-b";
    case FusionCase::SemidihedralC: return "semidihedral-c";
    case FusionCase::HomocyclicE3: return "homocyclic-e3";
  }
  return "unknown";
}

std::optional<FusionCase> fusion_case_from_string(const std::string& text) {
  for (FusionCase c : {FusionCase::Nilpotent, FusionCase::DihedralL2,
                       FusionCase::DihedralL3, FusionCase::Quaternion8,
                       FusionCase::QuaternionA, FusionCase::QuaternionB,
                       FusionCase::SemidihedralA, FusionCase::SemidihedralB,
                       FusionCase::SemidihedralC, FusionCase::HomocyclicE3}) {
    if (to_string(c) == text) return c;
  }
  return std::nullopt;
}

DefectGroupDescriptor DefectGroupDescriptor::from_params(const MetacyclicParams& p) {
  DefectGroupDescriptor d;
  d.params = p;
  return d;
}

DefectGroupDescriptor DefectGroupDescriptor::from_family(FamilyTag tag, long long order) {
  DefectGroupDescriptor d;
  d.family_order = {tag, order};
  return d;
}

MetacyclicParams DefectGroupDescriptor::resolve_params() const {
  if (params) return *params;
  if (family_order) return standard_family(family_order->first, family_order->second);
  throw std::invalid_argument("defect group descriptor is empty");
}

Family DefectGroupDescriptor::resolve_family() const {
  auto fam = classify(build(resolve_params()));
  if (!fam) throw std::logic_error("defect group descriptor resolved to a "
                                   "non-metacyclic group");
  return *fam;
}

long long BlockInvariants::height(int i) const {
  auto it = heights.find(i);
  return it == heights.end() ? 0 : it->second;
}

long long BlockInvariants::height_sum() const {
  long long sum = 0;
  for (const auto& [i, ki] : heights) sum += ki;
  return sum;
}

std::map<long long, long long> character_degree_distribution(const MetacyclicParams& p) {
  if (auto bad = validate(p))
    throw std::invalid_argument("character_degree_distribution: " + *bad);

  const long long xq = pow2(p.m);
  const long long yq = pow2(p.n);

  // orbits of i -> i*r on Z/2^m
  std::map<long long, long long> dist;  // degree -> count
  std::vector<char> seen(xq, 0);
  for (long long i = 0; i < xq; ++i) {
    if (seen[i]) continue;
    long long t = 0, j = i;
    do {
      seen[j] = 1;
      j = (j * p.r) % xq;
      ++t;
    } while (j != i);
    dist[t] += yq / t;  // orbit of size t: 2^n/t characters of degree t
  }

  // cross-checks against the explicit table
  auto table = build(p);
  long long count_sum = 0, square_sum = 0;
  for (const auto& [deg, cnt] : dist) {
    count_sum += cnt;
    square_sum += cnt * deg * deg;
  }
  if (square_sum != table->order())
    throw std::logic_error("character_degree_distribution: degree-square sum " +
                           std::to_string(square_sum) + " != group order");
  const long long classes = conjugacy_classes(table).count();
  if (count_sum != classes)
    throw std::logic_error("character_degree_distribution: character count " +
                           std::to_string(count_sum) + " != class count " +
                           std::to_string(classes));
  return dist;
}

std::vector<FusionCase> admissible_cases(const DefectGroupDescriptor& d) {
  const auto fam = d.resolve_family();
  std::vector<FusionCase> cases{FusionCase::Nilpotent};
  switch (fam.tag) {
    case FamilyTag::Dihedral:
      cases.push_back(FusionCase::DihedralL2);
      cases.push_back(FusionCase::DihedralL3);
      break;
    case FamilyTag::Quaternion:
      if (fam.order == 8) {
        cases.push_back(FusionCase::Quaternion8);
      } else {
        cases.push_back(FusionCase::QuaternionA);
        cases.push_back(FusionCase::QuaternionB);
      }
      break;
    case FamilyTag::Semidihedral:
      cases.push_back(FusionCase::SemidihedralA);
      cases.push_back(FusionCase::SemidihedralB);
      cases.push_back(FusionCase::SemidihedralC);
      break;
    case FamilyTag::Homocyclic:
      cases.push_back(FusionCase::HomocyclicE3);
      break;
    default:
      break;  // families covered by the nilpotency theorem: nilpotent only
  }
  return cases;
}

BlockInvariants block_invariants(const DefectGroupDescriptor& d, FusionCase c) {
  const auto params = d.resolve_params();
  const auto fam = d.resolve_family();
  const auto cases = admissible_cases(d);
  if (std::find(cases.begin(), cases.end(), c) == cases.end())
    throw std::invalid_argument("block_invariants: case " + to_string(c) +
                                " is not admissible for a " + to_string(fam.tag) +
                                " defect group of order " + std::to_string(fam.order));

  BlockInvariants b;
  const int n = log2_exact(fam.order);

  switch (c) {
    case FusionCase::Nilpotent: {
      // heights are read off the character degrees of D itself
      for (const auto& [deg, cnt] : character_degree_distribution(params)) {
        int i = 0;
        while (pow2(i) < deg) ++i;
        b.heights[i] = cnt;
        b.k += cnt;
      }
      b.l = 1;
      auto table = build(params);
      const long long k0 = table->order() / derived_subgroup(table).size();
      if (b.height(0) != k0)
        throw std::logic_error("block_invariants: degree-one count != |D:D'|");
      break;
    }
    case FusionCase::DihedralL2:
    case FusionCase::DihedralL3:
      b.k = pow2(n - 2) + 3;
      b.heights[0] = 4;
      b.heights[1] = pow2(n - 2) - 1;
      b.l = c == FusionCase::DihedralL2 ? 2 : 3;
      break;
    case FusionCase::Quaternion8:
      b.k = 7;
      b.heights[0] = 4;
      b.heights[1] = 3;
      b.l = 3;
      break;
    case FusionCase::QuaternionA:
      b.k = pow2(n - 2) + 4;
      b.heights[0] = 4;
      b.heights[1] = pow2(n - 2) - 1;
      b.heights[n - 2] += 1;
      b.l = 2;
      break;
    case FusionCase::QuaternionB:
      b.k = pow2(n - 2) + 5;
      b.heights[0] = 4;
      b.heights[1] = pow2(n - 2) - 1;
      b.heights[n - 2] += 2;
      b.l = 3;
      break;
    case FusionCase::SemidihedralA:
      b.k = pow2(n - 2) + 3;
      b.heights[0] = 4;
      b.heights[1] = pow2(n - 2) - 1;
      b.l = 2;
      break;
    case FusionCase::SemidihedralB:
    case FusionCase::SemidihedralC:
      b.k = pow2(n - 2) + 4;
      b.heights[0] = 4;
      b.heights[1] = pow2(n - 2) - 1;
      b.heights[n - 2] += 1;
      b.l = c == FusionCase::SemidihedralB ? 2 : 3;
      break;
    case FusionCase::HomocyclicE3:
      b.k = (fam.order + 8) / 3;
      b.heights[0] = b.k;
      b.l = 3;
      break;
  }

  if (b.height_sum() != b.k)
    throw std::logic_error("block_invariants: height sum != k");
  return b;
}

SweepReport theorem4_table(const DefectGroupDescriptor& d) {
  const auto fam = d.resolve_family();
  const int n = log2_exact(fam.order);

  SweepReport report;
  report.check = "theorem4";
  report.max_order = fam.order;
  report.columns = {"family", "order", "case", "k", "k0", "k1", "k_{n-2}", "l"};
  for (FusionCase c : admissible_cases(d)) {
    auto b = block_invariants(d, c);
    report.add_row({to_string(fam.tag), std::to_string(fam.order), to_string(c),
                    std::to_string(b.k), std::to_string(b.height(0)),
                    std::to_string(b.height(1)),
                    n >= 2 ? std::to_string(b.height(n - 2)) : "0",
                    std::to_string(b.l)},
                   true);
  }
  return report;
}

SweepReport degrees_sweep(long long max_order) {
  if (max_order > 256)
    throw std::invalid_argument("degrees_sweep: max_order cap 256 exceeded");

  SweepReport report;
  report.check = "degrees";
  report.max_order = max_order;
  report.columns = {"params", "family", "k", "classes", "square_sum",
                    "k0", "derived_index", "verdict"};

  for (const auto& type : enumerate_all(max_order)) {
    auto table = build(type.params);
    bool pass = true;
    long long k = 0, square_sum = 0, k0 = 0;
    std::string note;
    try {
      // the distribution itself asserts k = classes and square sum = |D|
      auto dist = character_degree_distribution(type.params);
      for (const auto& [deg, cnt] : dist) {
        k += cnt;
        square_sum += cnt * deg * deg;
        if (deg == 1) k0 = cnt;
      }
    } catch (const std::logic_error& e) {
      pass = false;
      note = e.what();
    }
    const long long classes = conjugacy_classes(table).count();
    const long long derived_index = table->order() / derived_subgroup(table).size();
    pass = pass && k == classes && square_sum == table->order() && k0 == derived_index;
    report.add_row({type.params.str(), to_string(type.family.tag), std::to_string(k),
                    std::to_string(classes), std::to_string(square_sum),
                    std::to_string(k0), std::to_string(derived_index),
                    pass ? "ok" : "FAIL" + (note.empty() ? "" : " " + note)},
                   pass);
  }
  return report;
}

}  // namespace metafusion
