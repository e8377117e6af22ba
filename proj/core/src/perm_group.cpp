#include "metafusion/perm_group.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace metafusion {

namespace {

using Perm = std::vector<int>;

Perm identity_perm(int degree) {
  Perm p(degree);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Perm compose(const Perm& f, const Perm& g) {  // apply g, then f
  Perm out(f.size());
  for (size_t i = 0; i < f.size(); ++i) out[i] = f[g[i]];
  return out;
}

void check_perm(const Perm& p, int degree) {
  if (static_cast<int>(p.size()) != degree)
    throw std::invalid_argument("permutation length != degree");
  std::vector<char> seen(degree, 0);
  for (int v : p) {
    if (v < 0 || v >= degree || seen[v])
      throw std::invalid_argument("generator is not a permutation");
    seen[v] = 1;
  }
}

}  // namespace

std::string cycle_notation(const Perm& p) {
  std::vector<char> seen(p.size(), 0);
  std::string out;
  for (size_t i = 0; i < p.size(); ++i) {
    if (seen[i] || p[i] == static_cast<int>(i)) continue;
    out += "(";
    size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = 1;
      out += (first ? "" : " ") + std::to_string(j);
      first = false;
      j = static_cast<size_t>(p[j]);
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

PermGroup perm_group_from_json(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("permutation group JSON: ") + e.what());
  }
  if (!j.contains("degree") || !j["degree"].is_number_integer())
    throw std::invalid_argument("permutation group JSON: missing integer \"degree\"");
  if (!j.contains("generators") || !j["generators"].is_array())
    throw std::invalid_argument("permutation group JSON: missing array \"generators\"");

  PermGroup g;
  g.degree = j["degree"].get<int>();
  if (g.degree < 0 || g.degree > 4096)
    throw std::invalid_argument("permutation group JSON: degree out of range");
  for (const auto& gen : j["generators"]) {
    if (!gen.is_array())
      throw std::invalid_argument("permutation group JSON: generator is not an array");
    Perm p = gen.get<Perm>();
    check_perm(p, g.degree);
    g.generators.push_back(std::move(p));
  }
  return g;
}

PermGroup load_perm_group(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return perm_group_from_json(buf.str());
}

std::vector<Perm> enumerate_elements(const PermGroup& g, int cap) {
  const Perm id = identity_perm(g.degree);
  std::map<Perm, int> index;
  std::vector<Perm> elements{id};
  index[id] = 0;
  for (size_t head = 0; head < elements.size(); ++head) {
    for (const auto& gen : g.generators) {
      Perm next = compose(elements[head], gen);
      auto [it, inserted] = index.emplace(next, static_cast<int>(elements.size()));
      if (inserted) {
        elements.push_back(std::move(next));
        if (static_cast<int>(elements.size()) > cap)
          throw std::invalid_argument("enumerate_elements: cap exceeded");
      }
    }
  }
  return elements;
}

GroupTablePtr perm_group_table(const PermGroup& g) {
  auto elements = enumerate_elements(g, GroupTable::kMaxOrder);
  const int order = static_cast<int>(elements.size());

  std::map<Perm, int> index;
  for (int i = 0; i < order; ++i) index[elements[i]] = i;

  std::vector<std::vector<int>> mul(order, std::vector<int>(order));
  std::vector<std::string> labels(order);
  for (int a = 0; a < order; ++a) {
    labels[a] = cycle_notation(elements[a]);
    for (int b = 0; b < order; ++b)
      mul[a][b] = index.at(compose(elements[a], elements[b]));
  }
  return GroupTable::create(std::move(mul), std::move(labels),
                            TableSource::PermutationGenerators);
}

Subgroup sylow_2(const GroupTablePtr& g) {
  const auto& t = *g;
  const long long target = two_part(t.order());

  // seed: a 2-element of maximal order (lowest index among those)
  int seed = GroupTable::identity();
  for (int x = 0; x < t.order(); ++x)
    if (is_power_of_two(t.element_order(x)) &&
        t.element_order(x) > t.element_order(seed))
      seed = x;
  Subgroup p = generate_closure(g, seed == 0 ? std::vector<int>{}
                                             : std::vector<int>{seed});

  while (p.size() < target) {
    // any 2-element of N_G(P) outside P extends P to a larger 2-group
    auto n = normalizer(g, p);
    int pick = -1;
    for (int x : n.members) {
      if (p.contains(x) || !is_power_of_two(t.element_order(x))) continue;
      pick = x;
      break;
    }
    if (pick < 0)
      throw std::logic_error("sylow_2: normalizer ascent stalled");
    auto gens = p.generators;
    gens.push_back(pick);
    p = generate_closure(g, gens);
    if (!is_power_of_two(p.size()))
      throw std::logic_error("sylow_2: ascent left the 2-subgroup lattice");
  }
  return p;
}

bool has_normal_2_complement(const GroupTablePtr& g) {
  const auto& t = *g;
  std::vector<int> k;
  for (int x = 0; x < t.order(); ++x)
    if (t.element_order(x) % 2 == 1) k.push_back(x);
  if (static_cast<long long>(k.size()) != odd_part(t.order())) return false;
  // closure under multiplication makes the odd-order set the complement
  std::vector<char> in_k(t.order(), 0);
  for (int x : k) in_k[x] = 1;
  for (int a : k)
    for (int b : k)
      if (!in_k[t.mul(a, b)]) return false;
  return true;
}

bool has_normal_2_complement_oracle(const GroupTablePtr& g) {
  for (const auto& h : all_subgroups(g)) {
    if (h.size() % 2 == 0) continue;
    if (!is_power_of_two(g->order() / h.size())) continue;
    if (is_normal(g, h)) return true;
  }
  return false;
}

WitnessReport witness_check(const PermGroup& g, const std::string& name) {
  WitnessReport rep;
  rep.name = name;

  auto table = perm_group_table(g);
  rep.group_order = table->order();
  auto sylow = sylow_2(table);
  rep.sylow_order = sylow.size();
  if (rep.sylow_order != two_part(rep.group_order))
    throw std::logic_error("witness_check: sylow_2 returned the wrong order");

  auto st = subtable(sylow);
  rep.sylow_family = classify(st.table);
  rep.sylow_metacyclic = rep.sylow_family.has_value();
  rep.normal_2_complement = has_normal_2_complement(table);

  if (rep.sylow_metacyclic) {
    rep.verdict = nilpotency_verdict(st.table);
    if (rep.verdict->tag == VerdictTag::ForcedNilpotent && !rep.normal_2_complement)
      rep.consistent = false;
  }
  return rep;
}

namespace {

void add_witness_row(SweepReport& report, const WitnessReport& w) {
  report.add_row(
      {w.name, std::to_string(w.group_order), std::to_string(w.sylow_order),
       w.sylow_family ? to_string(w.sylow_family->tag) : "out-of-scope",
       w.verdict ? to_string(w.verdict->tag) +
                       (w.verdict->tag == VerdictTag::NotForced
                            ? "(" + to_string(w.verdict->reason) + ")"
                            : "")
                 : "-",
       w.normal_2_complement ? "true" : "false",
       w.consistent ? "ok" : "FAIL"},
      w.consistent);
}

SweepReport make_witness_report() {
  SweepReport report;
  report.check = "witness";
  report.columns = {"name", "order", "sylow_order", "sylow_family",
                    "verdict", "normal_2_complement", "status"};
  return report;
}

}  // namespace

SweepReport witness_corpus(const std::string& dir) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir))
    throw std::invalid_argument("witness_corpus: not a directory: " + dir);

  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.path().extension() == ".json") files.push_back(entry.path());
  std::sort(files.begin(), files.end());

  auto report = make_witness_report();
  for (const auto& f : files) {
    auto g = load_perm_group(f.string());
    add_witness_row(report, witness_check(g, f.stem().string()));
  }
  return report;
}

SweepReport witness_file(const std::string& path) {
  auto report = make_witness_report();
  auto g = load_perm_group(path);
  add_witness_row(report, witness_check(g, std::filesystem::path(path).stem().string()));
  return report;
}

}  // namespace metafusion
