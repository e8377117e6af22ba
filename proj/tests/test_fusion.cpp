#include <map>
#include <stdexcept>

#include "doctest.h"
#include "metafusion/fusion.hpp"
#include "metafusion/perm_group.hpp"

using namespace metafusion;

namespace {

// the unique (up to conjugacy) Klein four subgroup through y in a dihedral group
Subgroup klein_in(const MetacyclicGroup& g) {
  const int z = g.table->power(g.x, g.table->element_order(g.x) / 2);
  return generate_closure(g.table, {z, g.y});
}

}  // namespace

TEST_CASE("action on the Frattini quotient") {
  SUBCASE("abelian parent acts trivially") {
    auto g = build_group({3, 3, 1, 0});  // C8 x C8
    auto x2y2 = generate_closure(g.table, {g.table->mul(g.x, g.x),
                                           g.table->mul(g.y, g.y)});
    REQUIRE(x2y2.size() == 16);  // C4 x C4
    auto action = action_on_frattini_quotient(g.table, x2y2);
    CHECK(!action.faithful);
    CHECK(action.acting.table->order() == 4);
    for (const auto& perm : action.perms)
      CHECK(perm == std::vector<int>{0, 1, 2, 3});
  }
  SUBCASE("C4 x C4 inside the order-64 group (3,3,5,0)") {
    auto g = build_group({3, 3, 5, 0});
    auto q = generate_closure(g.table, {g.table->mul(g.x, g.x),
                                        g.table->mul(g.y, g.y)});
    REQUIRE(q.size() == 16);
    auto st = subtable(q);
    REQUIRE(invariant_factors(st.table) == std::vector<long long>{4, 4});
    CHECK(!action_on_frattini_quotient(g.table, q).faithful);
  }
  SUBCASE("Klein four in D8: the N/Q action is faithful of order 2") {
    auto g = build_group({2, 1, 3, 0});
    auto q = klein_in(g);
    REQUIRE(q.size() == 4);
    auto action = action_on_frattini_quotient(g.table, q);
    CHECK(action.faithful);
    CHECK(action.normalizer_of_q.size() == 8);
    CHECK(action.acting.table->order() == 2);
  }
  SUBCASE("cyclic subgroup is a contract violation") {
    auto g = build_group({2, 1, 3, 0});
    auto c = generate_closure(g.table, {g.x});
    CHECK_THROWS_AS(action_on_frattini_quotient(g.table, c), std::logic_error);
  }
}

TEST_CASE("lemma2 sweep") {
  SUBCASE("no faithful instance up to order 64") {
    auto report = lemma2_sweep(64);
    CHECK(report.ok());
    CHECK(report.fail_count == 0);
    for (const auto& row : report.rows) CHECK(row[3] == "false");
  }
  SUBCASE("uniqueness tally for (3,3,5,0) at k = 2") {
    auto report = lemma2_sweep(64);
    bool found = false;
    for (const auto& row : report.rows) {
      if (row[0] == "3,3,5,0" && row[1] == "16") {
        found = true;
        CHECK(row[4] == "1");  // exactly one C4 x C4 subgroup
      }
    }
    CHECK(found);
  }
  SUBCASE("cap enforced") {
    CHECK_THROWS_AS(lemma2_sweep(256), std::invalid_argument);
  }
}

TEST_CASE("essential candidate filter") {
  SUBCASE("M16 has no candidates") {
    auto reports = essential_candidates(build({3, 1, 5, 0}));
    for (const auto& rep : reports) CHECK(!rep.candidate);
  }
  SUBCASE("C2 x C8 has no candidates") {
    auto reports = essential_candidates(build({3, 1, 1, 0}));
    for (const auto& rep : reports) CHECK(!rep.candidate);
  }
  SUBCASE("the two Klein fours of D8 survive") {
    auto reports = essential_candidates(build({2, 1, 3, 0}));
    int candidates = 0;
    for (const auto& rep : reports) {
      if (!rep.candidate) continue;
      ++candidates;
      CHECK(rep.subgroup.size() == 4);
      CHECK(rep.centric_in_p);
      CHECK(rep.aut_not_2group);
      CHECK(rep.aut_order == 6);
      REQUIRE(rep.shape.has_value());
      CHECK(rep.shape->tag == FamilyTag::Homocyclic);
    }
    CHECK(candidates == 2);
  }
  SUBCASE("candidate implies centric and non-2-group automorphisms") {
    for (const auto& text : {"2,1,3,0", "3,1,3,0", "3,1,7,4", "2,2,3,0"}) {
      for (const auto& rep : essential_candidates(build(parse_params(text)))) {
        if (rep.candidate) {
          CHECK(rep.centric_in_p);
          CHECK(rep.aut_not_2group);
          CHECK(!rep.reason.has_value());
        } else {
          CHECK(rep.reason.has_value());
        }
      }
    }
  }
  SUBCASE("quaternion subgroups are eliminated by name") {
    auto reports = essential_candidates(build({3, 1, 7, 4}));  // Q16
    bool saw_q8 = false;
    for (const auto& rep : reports) {
      if (rep.shape && rep.shape->tag == FamilyTag::Quaternion) {
        saw_q8 = true;
        REQUIRE(rep.reason.has_value());
        CHECK(*rep.reason == EliminationReason::QuaternionExcluded);
      }
    }
    CHECK(saw_q8);
  }
  SUBCASE("non-metacyclic parent refused") {
    PermGroup a4{4, {{1, 2, 0, 3}, {1, 0, 3, 2}}};
    auto table = perm_group_table(a4);
    CHECK_THROWS_AS(essential_candidates(table), std::invalid_argument);
  }
}

TEST_CASE("omega argument: centric Klein fours force maximal class") {
  // mechanical content of the k = 1 proof step: in a metacyclic 2-group of
  // order > 8 that is not of maximal class, no Klein four subgroup is
  // self-centralizing (Q = Omega(P) would embed P/Q into Aut(Q))
  for (const auto& type : enumerate_all(64)) {
    if (type.family.order <= 8) continue;
    auto g = build_group(type.params);
    const bool max_class = type.family.tag == FamilyTag::Dihedral ||
                           type.family.tag == FamilyTag::Semidihedral ||
                           type.family.tag == FamilyTag::Quaternion;
    if (max_class) continue;
    for (const auto& q : all_subgroups(g.table)) {
      if (q.size() != 4) continue;
      auto st = subtable(q);
      if (st.table->exponent() != 2) continue;  // want C2 x C2
      CHECK(!q.contains(centralizer(g.table, q)));
      // and when Q = Omega(P), the faithful P/Q-action bound |P| <= 8 holds
      if (omega(g.table).same_members(q)) {
        auto cent = centralizer(g.table, q);
        CHECK(g.table->order() / cent.size() <= 2);  // image in Aut(C2^2) has 2-part 2
      }
    }
  }
}

TEST_CASE("kernel argument instances carry a nontrivial kernel") {
  for (const auto& type : enumerate_all(64)) {
    auto g = build_group(type.params);
    for (const auto& rep : essential_candidates(g.table)) {
      if (rep.reason && *rep.reason == EliminationReason::KernelArgument) {
        auto action = action_on_frattini_quotient(g.table, rep.subgroup);
        CHECK(action.kernel_size > rep.subgroup.size());
      }
    }
  }
}

TEST_CASE("strongly 2-embedded subgroups") {
  SUBCASE("S3 has one") {
    PermGroup s3{3, {{1, 0, 2}, {1, 2, 0}}};
    auto table = perm_group_table(s3);
    auto witness = has_strongly_p_embedded(table, 2);
    REQUIRE(witness.has_value());
    CHECK(witness->size() % 2 == 0);
  }
  SUBCASE("2-groups never do") {
    CHECK(!has_strongly_p_embedded(build({2, 1, 3, 0}), 2));
    CHECK(!has_strongly_p_embedded(build({2, 2, 1, 0}), 2));
    CHECK(!has_strongly_p_embedded(build({3, 1, 5, 0}), 2));
  }
  SUBCASE("A4 does not (O_2(A4) is nontrivial)") {
    PermGroup a4{4, {{1, 2, 0, 3}, {1, 0, 3, 2}}};
    CHECK(!has_strongly_p_embedded(perm_group_table(a4), 2));
  }
}

TEST_CASE("nilpotency verdict") {
  CHECK(nilpotency_verdict(build({2, 1, 3, 0})).tag == VerdictTag::NotForced);
  CHECK(nilpotency_verdict(build({2, 1, 3, 0})).reason == ObstructionReason::MaximalClass);
  CHECK(nilpotency_verdict(build({2, 2, 1, 0})).reason == ObstructionReason::Homocyclic);
  CHECK(nilpotency_verdict(build({1, 1, 1, 0})).reason == ObstructionReason::Homocyclic);
  CHECK(nilpotency_verdict(build({3, 1, 5, 0})).tag == VerdictTag::ForcedNilpotent);
  CHECK_NOTHROW(nilpotency_verdict(build({3, 1, 5, 0}), /*cross_check=*/true));
  SUBCASE("non-metacyclic input refused") {
    PermGroup c2cubed{6, {{1, 0, 2, 3, 4, 5}, {0, 1, 3, 2, 4, 5}, {0, 1, 2, 3, 5, 4}}};
    auto table = perm_group_table(c2cubed);
    CHECK_THROWS_AS(nilpotency_verdict(table), std::invalid_argument);
  }
}

TEST_CASE("theorem3 sweep") {
  auto report = theorem3_sweep(64);
  CHECK(report.ok());

  std::map<std::string, std::pair<std::string, std::string>> by_params;
  for (const auto& row : report.rows)
    by_params[row[0]] = {row[2], row[4]};  // verdict, candidate count

  SUBCASE("forced types have no candidates") {
    for (const auto& row : report.rows) {
      if (row[2] == "forced-nilpotent") {
        CHECK(row[4] == "0");
        CHECK(row[5] == "1");  // aut odd part
      }
    }
  }
  SUBCASE("dihedral types 8..64 have nonempty candidate lists") {
    for (long long order : {8, 16, 32, 64}) {
      auto params = standard_family(FamilyTag::Dihedral, order);
      REQUIRE(by_params.count(params.str()));
      CHECK(by_params[params.str()].first == "not-forced");
      CHECK(by_params[params.str()].second != "0");
    }
  }
  SUBCASE("homocyclic obstruction is the odd automorphism part") {
    for (const auto& row : report.rows) {
      if (row[1] == "homocyclic") {
        CHECK(row[2] == "not-forced");
        CHECK(std::stoll(row[5]) > 1);
      }
    }
  }
  SUBCASE("verdict consistency with the family recognizer") {
    for (const auto& row : report.rows) {
      const bool not_forced = row[2] == "not-forced";
      const bool obstructed_family =
          row[1] == "dihedral" || row[1] == "semidihedral" ||
          row[1] == "quaternion" || row[1] == "homocyclic";
      CHECK(not_forced == obstructed_family);
    }
  }
}
