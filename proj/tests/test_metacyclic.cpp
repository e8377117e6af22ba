#include <map>
#include <set>
#include <stdexcept>

#include "doctest.h"
#include "metafusion/metacyclic.hpp"
#include "metafusion/subgroup.hpp"

using namespace metafusion;

TEST_CASE("params parsing and printing") {
  auto p = parse_params("3,1,5,0");
  CHECK(p.m == 3);
  CHECK(p.n == 1);
  CHECK(p.r == 5);
  CHECK(p.s == 0);
  CHECK(p.str() == "3,1,5,0");
  CHECK_THROWS_AS(parse_params("3,1,5"), std::invalid_argument);
  CHECK_THROWS_AS(parse_params("a,b,c,d"), std::invalid_argument);
  CHECK_THROWS_AS(parse_params("3,1,5,0,extra"), std::invalid_argument);
}

TEST_CASE("validate") {
  CHECK(!validate({2, 1, 3, 0}));  // D8
  CHECK(!validate({2, 1, 3, 2}));  // Q8
  SUBCASE("violated power congruence is reported") {
    auto bad = validate({3, 1, 3, 1});
    REQUIRE(bad.has_value());
    CHECK(bad->find("s*(r-1)") != std::string::npos);
  }
  SUBCASE("even r is rejected") {
    auto bad = validate({3, 1, 4, 0});
    REQUIRE(bad.has_value());
    CHECK(bad->find("odd") != std::string::npos);
  }
  SUBCASE("r congruence") {
    auto bad = validate({4, 1, 3, 0});  // 3^2 = 9 != 1 mod 16
    REQUIRE(bad.has_value());
    CHECK(bad->find("r^(2^n)") != std::string::npos);
  }
}

TEST_CASE("build") {
  SUBCASE("D8: two elements of order 4, five involutions") {
    auto t = build({2, 1, 3, 0});
    REQUIRE(t->order() == 8);
    std::map<int, int> profile;
    for (int g = 0; g < 8; ++g) ++profile[t->element_order(g)];
    CHECK(profile[4] == 2);
    CHECK(profile[2] == 5);
  }
  SUBCASE("Q8: unique involution") {
    auto t = build({2, 1, 3, 2});
    CHECK(count_involutions(t) == 1);
  }
  SUBCASE("C2 x C2") {
    auto t = build({1, 1, 1, 0});
    CHECK(t->order() == 4);
    CHECK(t->exponent() == 2);
  }
  SUBCASE("invalid params refused") {
    CHECK_THROWS_AS(build({3, 1, 3, 1}), std::invalid_argument);
  }
  SUBCASE("order cap 2^9") {
    CHECK_NOTHROW(build({5, 4, 1, 0}));
    CHECK_THROWS_AS(build({6, 4, 1, 0}), std::invalid_argument);
  }
  SUBCASE("<x> is normal with cyclic quotient") {
    for (const auto& text : {"3,2,3,0", "4,1,15,8", "3,3,5,0", "2,3,3,2"}) {
      auto g = build_group(parse_params(text));
      auto x = generate_closure(g.table, {g.x});
      CHECK(is_cyclic(subtable(x).table));
      REQUIRE(is_normal(g.table, x));
      CHECK(is_cyclic(quotient(g.table, x).table));
    }
  }
}

TEST_CASE("standard families") {
  CHECK(standard_family(FamilyTag::Quaternion, 8) == MetacyclicParams{2, 1, 3, 2});
  CHECK(standard_family(FamilyTag::Semidihedral, 16) == MetacyclicParams{3, 1, 3, 0});
  CHECK(standard_family(FamilyTag::Homocyclic, 16) == MetacyclicParams{2, 2, 1, 0});
  CHECK(standard_family(FamilyTag::Dihedral, 8) == MetacyclicParams{2, 1, 3, 0});
  CHECK(standard_family(FamilyTag::Modular, 16) == MetacyclicParams{3, 1, 5, 0});
  CHECK_THROWS_AS(standard_family(FamilyTag::Semidihedral, 8), std::invalid_argument);
  CHECK_THROWS_AS(standard_family(FamilyTag::Homocyclic, 8), std::invalid_argument);
  CHECK_THROWS_AS(standard_family(FamilyTag::Dihedral, 4), std::invalid_argument);
}

TEST_CASE("classify") {
  SUBCASE("families round-trip through build") {
    struct Case {
      FamilyTag tag;
      long long min_order;
    };
    for (const auto& c : {Case{FamilyTag::Cyclic, 1}, Case{FamilyTag::Dihedral, 8},
                          Case{FamilyTag::Quaternion, 8},
                          Case{FamilyTag::Semidihedral, 16},
                          Case{FamilyTag::Modular, 16}}) {
      for (long long order = c.min_order; order <= 256; order *= 2) {
        auto fam = classify(build(standard_family(c.tag, order)));
        REQUIRE(fam.has_value());
        CHECK(fam->tag == c.tag);
        CHECK(fam->order == order);
      }
    }
    for (long long order : {4, 16, 64, 256}) {
      auto fam = classify(build(standard_family(FamilyTag::Homocyclic, order)));
      REQUIRE(fam.has_value());
      CHECK(fam->tag == FamilyTag::Homocyclic);
    }
  }
  SUBCASE("D16 recognized through its 9 involutions") {
    auto t = build(standard_family(FamilyTag::Dihedral, 16));
    CHECK(count_involutions(t) == 9);
    CHECK(classify(t)->tag == FamilyTag::Dihedral);
  }
  SUBCASE("modular M16") {
    CHECK(classify(build({3, 1, 5, 0}))->tag == FamilyTag::Modular);
  }
  SUBCASE("abelian split") {
    CHECK(classify(build({3, 1, 1, 0}))->tag == FamilyTag::AbelianOther);
    CHECK(classify(build({2, 2, 1, 0}))->tag == FamilyTag::Homocyclic);
    CHECK(classify(build({0, 3, 1, 0}))->tag == FamilyTag::Cyclic);
  }
  SUBCASE("other-metacyclic exists at order 16") {
    // C4 x| C4: nonabelian, not maximal class, no cyclic index-2 subgroup
    auto fam = classify(build({2, 2, 3, 0}));
    REQUIRE(fam.has_value());
    CHECK(fam->tag == FamilyTag::OtherMetacyclic);
  }
}

TEST_CASE("dihedral groups have maximal class") {
  for (long long order = 8; order <= 256; order *= 2) {
    auto t = build(standard_family(FamilyTag::Dihedral, order));
    int log2 = 0;
    while ((1LL << log2) < order) ++log2;
    CHECK(nilpotency_class(t) == log2 - 1);
  }
}

TEST_CASE("enumerate_all") {
  SUBCASE("exactly two types of order 4") {
    auto types = enumerate_all(4);
    std::set<std::string> families;
    int count4 = 0;
    for (const auto& t : types)
      if (t.family.order == 4) {
        ++count4;
        families.insert(to_string(t.family.tag));
      }
    CHECK(count4 == 2);
    CHECK(families == std::set<std::string>{"cyclic", "homocyclic"});
  }
  SUBCASE("order-8 slice has exactly the four metacyclic types") {
    auto types = enumerate_all(8);
    std::multiset<std::string> families;
    for (const auto& t : types)
      if (t.family.order == 8) families.insert(to_string(t.family.tag));
    CHECK(families == std::multiset<std::string>{"abelian-other", "cyclic",
                                                 "dihedral", "quaternion"});
  }
  SUBCASE("every emitted tuple validates") {
    for (const auto& t : enumerate_all(64)) CHECK(!validate(t.params));
  }
  SUBCASE("no two entries are isomorphic and every tuple is covered") {
    // oracle: bucket by invariant fingerprint, then confirm explicit
    // isomorphism inside buckets against the chosen representatives
    auto types = enumerate_all(32);
    for (size_t i = 0; i < types.size(); ++i) {
      auto ti = build(types[i].params);
      for (size_t j = i + 1; j < types.size(); ++j) {
        if (types[i].family.order != types[j].family.order) continue;
        CHECK(!isomorphic_to_params(types[j].params, *ti));
      }
    }
    // coverage: every valid tuple of order <= 32 is isomorphic to a type
    for (int m = 0; m <= 5; ++m) {
      for (int n = 0; m + n <= 5; ++n) {
        for (long long r = 1; r < (1 << m); r += 2) {
          for (long long s = 0; s < (1 << m); ++s) {
            MetacyclicParams p{m, n, r, s};
            if (m == 0 && (r != 1 || s != 0)) continue;
            if (n == 0 && (r != 1 || s != 0)) continue;
            if (validate(p)) continue;
            auto t = build(p);
            int matches = 0;
            for (const auto& type : types)
              if (type.family.order == t->order() &&
                  isomorphic_to_params(type.params, *t))
                ++matches;
            CHECK(matches == 1);
          }
        }
      }
    }
  }
  SUBCASE("known type counts per order") {
    auto types = enumerate_all(64);
    std::map<long long, int> per_order;
    for (const auto& t : types) ++per_order[t.family.order];
    CHECK(per_order[1] == 1);
    CHECK(per_order[2] == 1);
    CHECK(per_order[4] == 2);
    CHECK(per_order[8] == 4);
    CHECK(per_order[16] == 8);
  }
}

TEST_CASE("isomorphic_to_params") {
  SUBCASE("same group, different presentations") {
    // C8 as pure cyclic and as an extension with s = 1
    CHECK(isomorphic_to_params({3, 0, 1, 0}, *build({2, 1, 1, 1})));
    CHECK(isomorphic_to_params({0, 3, 1, 0}, *build({3, 0, 1, 0})));
  }
  SUBCASE("D8 and Q8 are not isomorphic") {
    CHECK(!isomorphic_to_params({2, 1, 3, 0}, *build({2, 1, 3, 2})));
  }
  SUBCASE("order mismatch") {
    CHECK(!isomorphic_to_params({2, 1, 3, 0}, *build({3, 1, 3, 0})));
  }
}
