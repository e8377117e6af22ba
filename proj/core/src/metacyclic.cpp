#include "metafusion/metacyclic.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace metafusion {

namespace {

long long pow2(int e) { return 1LL << e; }

long long powmod(long long base, long long exp, long long mod) {
  long long acc = 1 % mod;
  base %= mod;
  while (exp > 0) {
    if (exp & 1) acc = (acc * base) % mod;
    base = (base * base) % mod;
    exp >>= 1;
  }
  return acc;
}

std::string monomial_label(int i, int j) {
  std::string out;
  if (i == 1) out = "x";
  else if (i > 1) out = "x^" + std::to_string(i);
  if (j > 0) {
    if (!out.empty()) out += " ";
    out += j == 1 ? "y" : "y^" + std::to_string(j);
  }
  return out.empty() ? "1" : out;
}

}  // namespace

std::string MetacyclicParams::str() const {
  std::ostringstream os;
  os << m << "," << n << "," << r << "," << s;
  return os.str();
}

MetacyclicParams parse_params(const std::string& text) {
  std::istringstream is(text);
  MetacyclicParams p;
  char c1 = 0, c2 = 0, c3 = 0;
  if (!(is >> p.m >> c1 >> p.n >> c2 >> p.r >> c3 >> p.s) || c1 != ',' ||
      c2 != ',' || c3 != ',' || !(is >> std::ws).eof()) {
    throw std::invalid_argument("params: expected \"m,n,r,s\", got \"" + text + "\"");
  }
  return p;
}

std::optional<std::string> validate(const MetacyclicParams& p) {
  if (p.m < 0 || p.n < 0) return "m and n must be nonnegative";
  if (p.m == 0) {
    if (p.r != 1 || p.s != 0) return "m = 0 requires r = 1 and s = 0";
    return std::nullopt;
  }
  if (p.n == 0 && (p.r != 1 || p.s != 0)) return "n = 0 requires r = 1 and s = 0";
  const long long q = pow2(p.m);
  if (p.r % 2 == 0) return "r = " + std::to_string(p.r) + " is not odd";
  if (p.r < 0 || p.r >= q) return "r out of range [0, 2^m)";
  if (p.s < 0 || p.s >= q) return "s out of range [0, 2^m)";
  if (powmod(p.r, pow2(p.n), q) != 1 % q) {
    return "r^(2^n) = " + std::to_string(powmod(p.r, pow2(p.n), q)) +
           " mod " + std::to_string(q) + " != 1";
  }
  if ((p.s * (p.r - 1)) % q != 0) {
    return "s*(r-1) = " + std::to_string((p.s * (p.r - 1)) % q) + " mod " +
           std::to_string(q) + " != 0";
  }
  return std::nullopt;
}

int normal_form_index(const MetacyclicParams& p, const NormalFormElement& e) {
  return e.i * static_cast<int>(pow2(p.n)) + e.j;
}

NormalFormElement normal_form_of(const MetacyclicParams& p, int index) {
  const int q = static_cast<int>(pow2(p.n));
  return NormalFormElement{index / q, index % q};
}

GroupTablePtr build(const MetacyclicParams& p) { return build_group(p).table; }

MetacyclicGroup build_group(const MetacyclicParams& p) {
  if (auto bad = validate(p))
    throw std::invalid_argument("build: invalid params " + p.str() + ": " + *bad);
  if (p.m + p.n > 9)
    throw std::invalid_argument("build: order cap 2^9 exceeded for " + p.str());

  const long long xq = pow2(p.m);
  const long long yq = pow2(p.n);
  const int order = static_cast<int>(xq * yq);

  // precomputed conjugation exponents r^j mod 2^m
  std::vector<long long> rpow(yq);
  for (long long j = 0; j < yq; ++j) rpow[j] = powmod(p.r, j, xq);

  std::vector<std::vector<int>> mul(order, std::vector<int>(order));
  std::vector<std::string> labels(order);
  for (int a = 0; a < order; ++a) {
    const long long i1 = a / yq, j1 = a % yq;
    labels[a] = monomial_label(static_cast<int>(i1), static_cast<int>(j1));
    for (int b = 0; b < order; ++b) {
      const long long i2 = b / yq, j2 = b % yq;
      // x^i1 y^j1 x^i2 y^j2 = x^(i1 + i2 r^j1) y^(j1+j2), with the y-exponent
      // overflow folded through y^(2^n) = x^s (central in <x,y> by s(r-1)=0)
      long long i = (i1 + i2 * rpow[j1]) % xq;
      long long j = j1 + j2;
      if (j >= yq) {
        j -= yq;
        i = (i + p.s) % xq;
      }
      mul[a][b] = static_cast<int>(i * yq + j);
    }
  }

  MetacyclicGroup g;
  g.params = p;
  g.table = GroupTable::create(std::move(mul), std::move(labels),
                               TableSource::MetacyclicParams);
  g.x = p.m > 0 ? static_cast<int>(yq) : 0;
  g.y = p.n > 0 ? 1 : 0;
  return g;
}

std::string to_string(FamilyTag tag) {
  switch (tag) {
    case FamilyTag::Cyclic: return "cyclic";
    case FamilyTag::Homocyclic: return "homocyclic";
    case FamilyTag::AbelianOther: return "abelian-other";
    case FamilyTag::Dihedral: return "dihedral";
    case FamilyTag::Semidihedral: return "semidihedral";
    case FamilyTag::Quaternion: return "quaternion";
    case FamilyTag::Modular: return "modular";
    case FamilyTag::OtherMetacyclic: return "other-metacyclic";
  }
  return "unknown";
}

std::optional<FamilyTag> family_tag_from_string(const std::string& text) {
  static const std::map<std::string, FamilyTag> names = {
      {"cyclic", FamilyTag::Cyclic},
      {"homocyclic", FamilyTag::Homocyclic},
      {"abelian-other", FamilyTag::AbelianOther},
      {"dihedral", FamilyTag::Dihedral},
      {"semidihedral", FamilyTag::Semidihedral},
      {"quaternion", FamilyTag::Quaternion},
      {"modular", FamilyTag::Modular},
      {"other-metacyclic", FamilyTag::OtherMetacyclic},
  };
  auto it = names.find(text);
  if (it == names.end()) return std::nullopt;
  return it->second;
}

MetacyclicParams standard_family(FamilyTag tag, long long order) {
  if (!is_power_of_two(order))
    throw std::invalid_argument("standard_family: order must be a power of two");
  int k = 0;
  while (pow2(k) < order) ++k;

  switch (tag) {
    case FamilyTag::Cyclic:
      return {k, 0, 1, 0};
    case FamilyTag::Homocyclic:
      if (k < 2 || k % 2 != 0)
        throw std::invalid_argument("standard_family: homocyclic needs a square order >= 4");
      return {k / 2, k / 2, 1, 0};
    case FamilyTag::Dihedral:
      if (k < 3) throw std::invalid_argument("standard_family: dihedral needs order >= 8");
      return {k - 1, 1, pow2(k - 1) - 1, 0};
    case FamilyTag::Quaternion:
      if (k < 3) throw std::invalid_argument("standard_family: quaternion needs order >= 8");
      return {k - 1, 1, pow2(k - 1) - 1, pow2(k - 2)};
    case FamilyTag::Semidihedral:
      if (k < 4) throw std::invalid_argument("standard_family: semidihedral needs order >= 16");
      return {k - 1, 1, pow2(k - 2) - 1, 0};
    case FamilyTag::Modular:
      if (k < 4) throw std::invalid_argument("standard_family: modular needs order >= 16");
      return {k - 1, 1, pow2(k - 2) + 1, 0};
    case FamilyTag::AbelianOther:
    case FamilyTag::OtherMetacyclic:
      throw std::invalid_argument("standard_family: no canonical parameters for tag " +
                                  to_string(tag));
  }
  throw std::invalid_argument("standard_family: unknown tag");
}

bool is_metacyclic(const GroupTablePtr& table) {
  const auto& t = *table;
  if (t.is_abelian()) return invariant_factors(table).size() <= 2;

  std::set<std::vector<int>> seen;
  for (int g = 1; g < t.order(); ++g) {
    auto c = generate_closure(table, {g});
    if (!seen.insert(c.members).second) continue;
    if (!is_normal(table, c)) continue;
    auto q = quotient(table, c);
    if (is_cyclic(q.table)) return true;
  }
  return false;
}

std::optional<Family> classify(const GroupTablePtr& table) {
  const auto& t = *table;
  if (!t.is_2_group() || t.order() > 512)
    throw std::invalid_argument("classify: input must be a 2-group of order <= 512");
  const long long order = t.order();

  if (t.is_abelian()) {
    auto factors = invariant_factors(table);
    if (factors.size() <= 1) return Family{FamilyTag::Cyclic, order};
    if (factors.size() == 2) {
      return Family{factors[0] == factors[1] ? FamilyTag::Homocyclic
                                             : FamilyTag::AbelianOther,
                    order};
    }
    return std::nullopt;  // abelian of rank >= 3 is not metacyclic
  }

  int log2_order = 0;
  while (pow2(log2_order) < order) ++log2_order;
  const int cls = nilpotency_class(table);

  if (order >= 8 && cls == log2_order - 1) {
    // maximal class: discriminate by involution count
    const int inv = count_involutions(table);
    if (inv == 1) return Family{FamilyTag::Quaternion, order};
    if (inv == static_cast<int>(pow2(log2_order - 1)) + 1)
      return Family{FamilyTag::Dihedral, order};
    if (order >= 16 && inv == static_cast<int>(pow2(log2_order - 2)) + 1)
      return Family{FamilyTag::Semidihedral, order};
    // not reached for genuine 2-groups of maximal class; fall through
  } else {
    // nonabelian, not maximal class, cyclic subgroup of index 2 => modular
    for (int g = 0; g < t.order(); ++g)
      if (t.element_order(g) * 2 == order) return Family{FamilyTag::Modular, order};
  }

  if (is_metacyclic(table)) return Family{FamilyTag::OtherMetacyclic, order};
  return std::nullopt;
}

bool isomorphic_to_params(const MetacyclicParams& params, const GroupTable& candidate) {
  if (candidate.order() != params.order()) return false;

  const long long xq = pow2(params.m);
  const long long o_x = xq;
  const long long o_y =
      params.n == 0 ? 1
                    : pow2(params.n) * (params.s == 0 ? 1 : xq / std::gcd(xq, params.s));

  std::vector<int> xs, ys;
  for (int g = 0; g < candidate.order(); ++g) {
    if (candidate.element_order(g) == o_x) xs.push_back(g);
    if (candidate.element_order(g) == o_y) ys.push_back(g);
  }

  std::vector<char> seen(candidate.order());
  for (int a : xs) {
    for (int b : ys) {
      // defining relations: b a b^-1 = a^r and b^(2^n) = a^s
      if (candidate.conjugate(b, a) != candidate.power(a, params.r)) continue;
      if (candidate.power(b, pow2(params.n)) != candidate.power(a, params.s)) continue;
      // surjectivity: images must generate
      std::fill(seen.begin(), seen.end(), 0);
      std::vector<int> queue{0};
      seen[0] = 1;
      for (size_t head = 0; head < queue.size(); ++head) {
        for (int s : {a, b}) {
          const int h = candidate.mul(queue[head], s);
          if (!seen[h]) {
            seen[h] = 1;
            queue.push_back(h);
          }
        }
      }
      if (static_cast<int>(queue.size()) == candidate.order()) return true;
    }
  }
  return false;
}

namespace {

struct Fingerprint {
  long long order;
  bool abelian;
  long long exponent;
  int involutions;
  int classes;
  int nil_class;
  int center_size;
  int derived_size;
  int omega_size;
  std::vector<long long> abelianization;
  std::vector<std::pair<int, int>> order_profile;

  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

Fingerprint fingerprint_of(const GroupTablePtr& table) {
  Fingerprint f;
  f.order = table->order();
  f.abelian = table->is_abelian();
  f.exponent = table->exponent();
  f.involutions = count_involutions(table);
  f.classes = conjugacy_classes(table).count();
  f.nil_class = nilpotency_class(table);
  f.center_size = center(table).size();
  auto derived = derived_subgroup(table);
  f.derived_size = derived.size();
  f.omega_size = omega(table).size();
  f.abelianization = invariant_factors(quotient(table, derived).table);
  std::map<int, int> profile;
  for (int g = 0; g < table->order(); ++g) ++profile[table->element_order(g)];
  f.order_profile.assign(profile.begin(), profile.end());
  return f;
}

std::vector<MetacyclicParams> tuples_for(int m, int n) {
  if (m == 0 || n == 0) return {MetacyclicParams{m, n, 1, 0}};
  const long long q = pow2(m);
  std::vector<MetacyclicParams> out;
  for (long long r = 1; r < q; r += 2) {
    if (powmod(r, pow2(n), q) != 1 % q) continue;
    for (long long s = 0; s < q; ++s) {
      if ((s * (r - 1)) % q != 0) continue;
      out.push_back(MetacyclicParams{m, n, r, s});
    }
  }
  return out;
}

int family_rank(FamilyTag tag) { return static_cast<int>(tag); }

}  // namespace

std::vector<MetacyclicType> enumerate_all(long long max_order) {
  if (max_order < 1 || max_order > 256)
    throw std::invalid_argument("enumerate_all: max_order must be in [1, 256]");

  struct Entry {
    MetacyclicType type;
    Fingerprint fp;
  };
  std::vector<Entry> entries;

  for (int e = 0; pow2(e) <= max_order; ++e) {
    for (int m = 0; m <= e; ++m) {
      const int n = e - m;
      for (const auto& p : tuples_for(m, n)) {
        auto g = build_group(p);
        auto fp = fingerprint_of(g.table);
        bool known = false;
        for (const auto& entry : entries) {
          if (entry.fp == fp && isomorphic_to_params(entry.type.params, *g.table)) {
            known = true;
            break;
          }
        }
        if (known) continue;
        auto fam = classify(g.table);
        if (!fam)
          throw std::logic_error("enumerate_all: built group not recognized as metacyclic");
        entries.push_back(Entry{MetacyclicType{p, *fam}, std::move(fp)});
      }
    }
  }

  std::vector<MetacyclicType> out;
  out.reserve(entries.size());
  for (auto& e : entries) out.push_back(e.type);
  std::sort(out.begin(), out.end(), [](const MetacyclicType& a, const MetacyclicType& b) {
    if (a.family.order != b.family.order) return a.family.order < b.family.order;
    if (a.family.tag != b.family.tag)
      return family_rank(a.family.tag) < family_rank(b.family.tag);
    return a.params < b.params;
  });
  return out;
}

}  // namespace metafusion
