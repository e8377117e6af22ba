#include <algorithm>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "metafusion/metacyclic.hpp"
#include "metafusion/subgroup.hpp"

using namespace metafusion;

namespace {

MetacyclicGroup d8() { return build_group(parse_params("2,1,3,0")); }
MetacyclicGroup q8() { return build_group(parse_params("2,1,3,2")); }

bool closed(const Subgroup& s) {
  for (int a : s.members)
    for (int b : s.members)
      if (!s.contains(s.parent->mul(a, b))) return false;
  for (int a : s.members)
    if (!s.contains(s.parent->inv(a))) return false;
  return s.contains(GroupTable::identity());
}

}  // namespace

TEST_CASE("generate_closure examples") {
  SUBCASE("empty generating set gives the trivial subgroup") {
    auto g = d8();
    auto s = generate_closure(g.table, {});
    CHECK(s.size() == 1);
    CHECK(s.members == std::vector<int>{0});
  }
  SUBCASE("<x> in D8 has order 4") {
    auto g = d8();
    auto s = generate_closure(g.table, {g.x});
    CHECK(s.size() == 4);
    CHECK(closed(s));
  }
  SUBCASE("<y> in Q8 has order 4 and contains x^2") {
    auto g = q8();
    auto s = generate_closure(g.table, {g.y});
    CHECK(s.size() == 4);
    const int x2 = g.table->mul(g.x, g.x);
    CHECK(s.contains(x2));
  }
  SUBCASE("invalid index is an input error") {
    auto g = d8();
    CHECK_THROWS_AS(generate_closure(g.table, {42}), std::invalid_argument);
  }
}

TEST_CASE("normalizer") {
  SUBCASE("abelian parent: whole group") {
    auto g = build_group(parse_params("2,2,1,0"));  // C4 x C4
    auto q = generate_closure(g.table, {g.x});
    CHECK(normalizer(g.table, q).size() == 16);
  }
  SUBCASE("normal subgroup: whole group") {
    auto g = d8();
    auto q = generate_closure(g.table, {g.x});  // index 2, normal
    CHECK(normalizer(g.table, q).size() == 8);
  }
  SUBCASE("reflection in D8 has normalizer of order 4") {
    auto g = d8();
    auto q = generate_closure(g.table, {g.y});  // order 2, not central
    CHECK(q.size() == 2);
    CHECK(normalizer(g.table, q).size() == 4);
  }
}

TEST_CASE("centralizer and center") {
  SUBCASE("trivial subgroup centralizes everything") {
    auto g = d8();
    CHECK(centralizer(g.table, trivial_subgroup(g.table)).size() == 8);
  }
  SUBCASE("abelian parent") {
    auto g = build_group(parse_params("3,0,1,0"));  // C8
    auto q = generate_closure(g.table, {g.x});
    CHECK(centralizer(g.table, q).size() == 8);
  }
  SUBCASE("<x> in Q8 is self-centralizing") {
    auto g = q8();
    auto q = generate_closure(g.table, {g.x});
    auto c = centralizer(g.table, q);
    CHECK(c.size() == 4);
    CHECK(c.same_members(q));
  }
  SUBCASE("center of D8 has order 2") {
    auto g = d8();
    CHECK(center(g.table).size() == 2);
  }
}

TEST_CASE("derived subgroup of D16 has index 4") {
  auto g = build_group(standard_family(FamilyTag::Dihedral, 16));
  auto d = derived_subgroup(g.table);
  CHECK(d.size() == 4);
  CHECK(is_cyclic(subtable(d).table));
  CHECK(g.table->order() / d.size() == 4);
}

TEST_CASE("frattini") {
  SUBCASE("elementary abelian C2 x C2 has trivial frattini") {
    auto g = build_group(parse_params("1,1,1,0"));
    CHECK(frattini(g.table).size() == 1);
  }
  SUBCASE("frattini of Q8 is <x^2>") {
    auto g = q8();
    auto f = frattini(g.table);
    CHECK(f.size() == 2);
    CHECK(f.contains(g.table->mul(g.x, g.x)));
  }
  SUBCASE("squares-and-commutators agrees with maximal intersection up to 64") {
    // the dual computation is asserted inside frattini() for order <= 64;
    // run it across every metacyclic type to exercise the assertion
    for (const auto& type : enumerate_all(64)) {
      auto t = build(type.params);
      CHECK_NOTHROW(frattini(t));
    }
  }
}

TEST_CASE("omega of Q8 is the unique involution") {
  auto g = q8();
  auto o = omega(g.table);
  CHECK(o.size() == 2);
  CHECK(o.contains(g.table->mul(g.x, g.x)));
}

TEST_CASE("conjugacy classes") {
  SUBCASE("abelian groups split into singletons") {
    auto g = build_group(parse_params("2,1,1,0"));  // C4 x C2
    auto p = conjugacy_classes(g.table);
    CHECK(p.count() == 8);
    for (const auto& c : p.classes) CHECK(c.size() == 1);
  }
  SUBCASE("D8 has 5 classes") {
    CHECK(conjugacy_classes(d8().table).count() == 5);
  }
  SUBCASE("M16 has 10 classes") {
    auto g = build_group(parse_params("3,1,5,0"));
    CHECK(conjugacy_classes(g.table).count() == 10);
  }
  SUBCASE("class equation: sizes sum to the order and divide it") {
    for (const auto& text : {"2,1,3,0", "3,1,5,0", "3,2,3,0"}) {
      auto t = build(parse_params(text));
      auto p = conjugacy_classes(t);
      long long sum = 0;
      for (const auto& c : p.classes) {
        sum += static_cast<long long>(c.size());
        CHECK(t->order() % c.size() == 0);
      }
      CHECK(sum == t->order());
      CHECK(p.classes[0] == std::vector<int>{0});
    }
  }
}

TEST_CASE("lower central series and nilpotency class") {
  CHECK(nilpotency_class(build(parse_params("2,2,1,0"))) == 1);  // C4 x C4
  CHECK(nilpotency_class(q8().table) == 2);
  CHECK(nilpotency_class(build(standard_family(FamilyTag::Dihedral, 16))) == 3);
  CHECK(nilpotency_class(build(parse_params("0,0,1,0"))) == 0);  // trivial group
}

TEST_CASE("quotient") {
  SUBCASE("by the whole group") {
    auto g = d8();
    auto q = quotient(g.table, whole_group(g.table));
    CHECK(q.table->order() == 1);
  }
  SUBCASE("by the trivial subgroup") {
    auto g = d8();
    auto q = quotient(g.table, trivial_subgroup(g.table));
    CHECK(q.table->order() == 8);
    CHECK(conjugacy_classes(q.table).count() == 5);
  }
  SUBCASE("D8 mod center is C2 x C2") {
    auto g = d8();
    auto q = quotient(g.table, center(g.table));
    CHECK(q.table->order() == 4);
    CHECK(q.table->exponent() == 2);
  }
  SUBCASE("non-normal subgroup is refused") {
    auto g = d8();
    auto refl = generate_closure(g.table, {g.y});
    CHECK_THROWS_AS(quotient(g.table, refl), std::logic_error);
  }
  SUBCASE("order is always |P|/|N|") {
    auto g = build_group(parse_params("3,2,3,0"));
    for (const auto& n : all_subgroups(g.table)) {
      if (!is_normal(g.table, n)) continue;
      CHECK(quotient(g.table, n).table->order() == g.table->order() / n.size());
    }
  }
}

TEST_CASE("all_subgroups") {
  SUBCASE("C4 has 3 subgroups") {
    CHECK(all_subgroups(build(parse_params("2,0,1,0"))).size() == 3);
  }
  SUBCASE("Q8 has 6 subgroups") {
    CHECK(all_subgroups(q8().table).size() == 6);
  }
  SUBCASE("D8 has 10 subgroups") {
    CHECK(all_subgroups(d8().table).size() == 10);
  }
  SUBCASE("pair closure matches fixpoint iteration up to order 64") {
    for (const auto& type : enumerate_all(64)) {
      auto t = build(type.params);
      auto a = all_subgroups(t, SubgroupScan::PairClosure);
      auto b = all_subgroups(t, SubgroupScan::Fixpoint);
      REQUIRE(a.size() == b.size());
      for (size_t i = 0; i < a.size(); ++i) CHECK(a[i].members == b[i].members);
    }
  }
  SUBCASE("every returned subgroup is closed with Lagrange index") {
    auto g = build_group(parse_params("3,1,3,4"));
    for (const auto& s : all_subgroups(g.table)) {
      CHECK(closed(s));
      CHECK(g.table->order() % s.size() == 0);
      CHECK(generate_closure(g.table, s.generators).members == s.members);
    }
  }
}

TEST_CASE("invariant factors") {
  CHECK(invariant_factors(build(parse_params("3,0,1,0"))) ==
        std::vector<long long>{8});
  CHECK(invariant_factors(build(parse_params("2,2,1,0"))) ==
        std::vector<long long>{4, 4});
  CHECK(invariant_factors(build(parse_params("3,1,1,0"))) ==
        std::vector<long long>{8, 2});
  CHECK(is_homocyclic_factors({4, 4}));
  CHECK(!is_homocyclic_factors({8, 2}));
  CHECK(!is_homocyclic_factors({2, 2, 2}));
  CHECK_THROWS_AS(invariant_factors(d8().table), std::logic_error);
}

TEST_CASE("random closures satisfy closure and Lagrange") {
  std::mt19937 rng(11);
  for (const auto& text : {"3,2,3,0", "4,1,15,8", "2,3,3,2"}) {
    auto g = build_group(parse_params(text));
    std::uniform_int_distribution<int> pick(0, g.table->order() - 1);
    for (int i = 0; i < 25; ++i) {
      auto s = generate_closure(g.table, {pick(rng), pick(rng)});
      CHECK(closed(s));
      CHECK(g.table->order() % s.size() == 0);
    }
  }
}
