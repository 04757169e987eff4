#include <random>

#include "doctest.h"
#include "predom/error.hpp"
#include "predom/predomain.hpp"
#include "support.hpp"

using namespace predom;
using predom::testing::chain3;
using predom::testing::chain3_rel;
using predom::testing::code_is_transitive;
using predom::testing::p4;
using predom::testing::all_topologies;
using predom::testing::upsets_of;


TEST_CASE("validate_predomain examples") {
  auto rep = validate_predomain(chain3_rel());
  CHECK((rep.trans && rep.ip0 && rep.ip1 && rep.ip2 && rep.ip_full));

  auto bare = validate_predomain(Relation::from_pairs(3, {{0, 1}, {1, 2}, {0, 2}}));
  CHECK_FALSE(bare.ip0);
  REQUIRE(bare.ip0_witness);
  CHECK(*bare.ip0_witness == 0);
  CHECK_FALSE(bare.valid());

  CHECK(validate_predomain(p4().rel()).valid());
  CHECK_THROWS_AS(Predomain::numbered(Relation::from_pairs(2, {{0, 1}})), NotAPredomain);
}

TEST_CASE("IP is equivalent to IP0 and IP2 on transitive relations") {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << (n * n)); ++code) {
      auto rep = validate_predomain(Relation::from_code(n, code));
      if (rep.trans) {
        REQUIRE(rep.ip_full == (rep.ip0 && rep.ip2));
      }
    }
  }
}

TEST_CASE("IP needs transitivity to split into IP0 and IP2") {
  std::size_t split_only = 0;
  for (std::size_t n = 1; n <= 4; ++n) {
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << (n * n)); ++code) {
      auto rep = validate_predomain(Relation::from_code(n, code));
      REQUIRE((!rep.ip_full || (rep.ip0 && rep.ip2)));
      if (rep.ip_full != (rep.ip0 && rep.ip2)) {
        REQUIRE(n == 4);
        ++split_only;
      }
    }
  }
  CHECK(split_only == 71);

  // A looped 3-cycle below 3: pairs interpolate, the whole cycle does not.
  auto r = Relation::from_pairs(
      4, {{0, 0}, {0, 1}, {0, 3}, {1, 1}, {1, 2}, {1, 3}, {2, 0}, {2, 2}, {2, 3}});
  auto rep = validate_predomain(r);
  CHECK_FALSE(rep.trans);
  CHECK(rep.ip0);
  CHECK(rep.ip2);
  CHECK_FALSE(rep.ip_full);
}

TEST_CASE("down and up sets") {
  auto p = p4();
  CHECK(down_set(p, "a") == Subset(4, {0}));
  CHECK(down_set(p, "c") == Subset(4, {0, 2}));
  CHECK(up_set(p, "c") == Subset(4, {2, 3}));
  CHECK_THROWS_AS(down_set(p, "zz"), UnknownElement);
  CHECK(down_set(Relation::from_pairs(2, {{0, 1}}), 0).empty());
}

TEST_CASE("natural preorder") {
  auto leq = natural_preorder(p4());
  CHECK(leq.holds(1, 2));  // a <= c
  CHECK_FALSE(leq.holds(2, 1));
  CHECK(natural_preorder(Relation::identity(4)) == Relation::identity(4));

  auto c = natural_preorder(chain3());
  CHECK(c.holds(0, 1));
  CHECK(c.holds(1, 2));
  CHECK(c.holds(2, 1));
  CHECK_FALSE(classify_relation(c).antisymmetric);
}

TEST_CASE("stratification") {
  auto p = p4();
  auto s = stratify(p);
  CHECK(s.rel().holds(1, 3));   // a r_s b
  CHECK_FALSE(p.rel().holds(1, 3));
  CHECK_FALSE(is_stratified(p));
  auto gaps = stratification_gaps(p);
  CHECK(std::find(gaps.begin(), gaps.end(), std::pair<std::size_t, std::size_t>{1, 3})
        != gaps.end());

  auto c = chain3();
  CHECK(c.rel().is_subset_of(stratify(c).rel()));
  CHECK(stratify(stratify(c)).rel() == stratify(c).rel());
  auto id = Predomain::numbered(Relation::identity(3));
  CHECK(stratify(id).rel() == id.rel());
}

TEST_CASE("stratification laws over all predomains of size <= 4") {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << (n * n)); ++code) {
      if (!code_is_transitive(n, code)) {
        continue;
      }
      auto r = Relation::from_code(n, code);
      if (!validate_predomain(r).valid()) {
        continue;
      }
      auto p   = Predomain::numbered(r);
      auto s   = stratify(p);
      auto leq = natural_preorder(r);
      REQUIRE(r.is_subset_of(s.rel()));
      REQUIRE(stratify(s).rel() == s.rel());
      REQUIRE(r.is_subset_of(leq));
      // Property (2): a r c <= b gives a r b.
      // Property (3): a <= c r b gives a r b, iff stratified.
      bool prop3 = true;
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          for (std::size_t c = 0; c < n; ++c) {
            if (r.holds(a, c) && leq.holds(c, b)) {
              REQUIRE(r.holds(a, b));
            }
            if (leq.holds(a, c) && r.holds(c, b) && !r.holds(a, b)) {
              prop3 = false;
            }
          }
        }
      }
      REQUIRE(prop3 == is_stratified(p));
      // Stratifying does not change the natural preorder.
      REQUIRE(natural_preorder(s) == leq);
    }
  }
}

TEST_CASE("c-space topology") {
  auto t = cspace_topology(p4());
  CHECK(t.is_open(Subset(4, {2, 3})));
  CHECK_FALSE(t.is_open(Subset(4, {3})));

  auto c = cspace_topology(chain3());
  CHECK(c.opens()
        == std::vector<Subset>{Subset(3), Subset(3, {1, 2}), Subset::full(3)});
  CHECK(is_cspace(c));
  CHECK(c.specialization_preorder() == natural_preorder(chain3()));
}

TEST_CASE("finite topology validation") {
  CHECK_THROWS_AS(FiniteTopology(2, {Subset::full(2)}), PreconditionError);
  CHECK_THROWS_AS(FiniteTopology(3, {Subset(3), Subset(3, {0}), Subset(3, {1}), Subset::full(3)}),
                  PreconditionError);
}

TEST_CASE("topological way-below") {
  auto p = p4();
  CHECK(topological_waybelow(cspace_topology(p)) == stratify(p).rel());
  auto c = chain3();
  CHECK(topological_waybelow(cspace_topology(c)) == stratify(c).rel());

  FiniteTopology indiscrete(2, {Subset(2), Subset::full(2)});
  CHECK(topological_waybelow(indiscrete) == Relation::full(2));
}

TEST_CASE("round trips over all predomains and topologies of size <= 4") {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << (n * n)); ++code) {
      if (!code_is_transitive(n, code)) {
        continue;
      }
      auto r = Relation::from_code(n, code);
      if (!validate_predomain(r).valid()) {
        continue;
      }
      auto p = Predomain::numbered(r);
      auto t = cspace_topology(p);
      REQUIRE(topological_waybelow(t) == stratify(p).rel());
      REQUIRE(t == upsets_of(natural_preorder(r)));
    }
    for (auto const& t : all_topologies(n)) {
      REQUIRE(is_cspace(t));
      auto back = Predomain::numbered(topological_waybelow(t));
      REQUIRE(is_stratified(back));
      REQUIRE(cspace_topology(back) == t);
    }
  }
}

TEST_CASE("continuous maps") {
  auto p  = p4();
  auto id = check_continuous_map(p, p, {0, 1, 2, 3});
  CHECK((id.continuous && id.rel_preserving && id.open_map));

  auto c     = chain3();
  auto konst = check_continuous_map(c, c, {1, 1, 1});
  CHECK(konst.continuous);

  auto f = check_continuous_map(c, c, {0, 2, 2});
  CHECK_FALSE(f.rel_preserving);
}

TEST_CASE("continuity of maps agrees with topological continuity") {
  // Continuity in the relational sense is continuity for the c-space topologies.
  std::vector<Predomain> ps;
  for (std::size_t n = 1; n <= 3; ++n) {
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << (n * n)); ++code) {
      auto r = Relation::from_code(n, code);
      if (code_is_transitive(n, code) && validate_predomain(r).valid()) {
        ps.push_back(Predomain::numbered(r));
      }
    }
  }
  std::size_t interpolating_only = 0;
  for (auto const& p : ps) {
    for (auto const& q : ps) {
      auto tp = cspace_topology(p);
      auto tq = cspace_topology(q);
      std::size_t maps = 1;
      for (std::size_t i = 0; i < p.size(); ++i) {
        maps *= q.size();
      }
      for (std::size_t m = 0; m < maps; ++m) {
        ElementMap f(p.size());
        auto       rest = m;
        for (auto& v : f) {
          v = rest % q.size();
          rest /= q.size();
        }
        auto rep = check_continuous_map(p, q, f);
        REQUIRE(rep.continuous == is_continuous(tp, tq, f));
        if (rep.continuous) {
          REQUIRE(rep.interpolates);
        }
        if (rep.interpolates && !rep.continuous) {
          ++interpolating_only;
        }
        // The finite collapse: every monotone map between finite
        // Alexandrov spaces maps opens to sets with open saturation.
        REQUIRE(rep.open_map);
      }
    }
  }
  // The interpolation condition alone does not force continuity.
  CHECK(interpolating_only == 36738);
}

TEST_CASE("interpolation condition without continuity") {
  auto p = Predomain::numbered(Relation::from_pairs(2, {{0, 0}, {0, 1}}));
  auto q = Predomain::numbered(Relation::from_pairs(2, {{0, 0}, {0, 1}, {1, 1}}));
  auto rep = check_continuous_map(p, q, {1, 0});
  CHECK(rep.interpolates);
  CHECK_FALSE(rep.continuous);
}

TEST_CASE("separately continuous maps out of finite spaces are jointly continuous") {
  std::vector<FiniteTopology> xs;
  for (std::size_t n = 1; n <= 3; ++n) {
    for (auto& t : all_topologies(n)) {
      xs.push_back(t);
    }
  }
  auto ys = all_topologies(2);
  auto zs = all_topologies(2);
  std::size_t separate_only = 0;
  for (auto const& x : xs) {
    REQUIRE(is_cspace(x));
    for (auto const& y : ys) {
      for (auto const& z : zs) {
        auto const cells = x.size() * y.size();
        for (std::uint64_t m = 0; m < (std::uint64_t{1} << cells); ++m) {
          ElementMap f(cells);
          for (std::size_t i = 0; i < cells; ++i) {
            f[i] = (m >> i) & 1U;
          }
          bool sep   = check_separate_continuity(x, y, z, f);
          bool joint = check_joint_continuity(x, y, z, f);
          if (joint) {
            REQUIRE(sep);
          }
          if (sep && !joint) {
            ++separate_only;
          }
        }
      }
    }
  }
  // Every finite space is a c-space, so no counterexample exists here.
  CHECK(separate_only == 0);

  FiniteTopology indiscrete(2, {Subset(2), Subset::full(2)});
  CHECK(check_joint_continuity(xs.back(), ys.front(), indiscrete,
                               ElementMap(xs.back().size() * 2, 1)));
}

TEST_CASE("dense subsets restrict to predomains with cofinal down-sets") {
  for (std::size_t n = 1; n <= 5; ++n) {
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << (n * n)); ++code) {
      if (!code_is_transitive(n, code)) {
        continue;
      }
      auto r = Relation::from_code(n, code);
      if (!validate_predomain(r).valid()) {
        continue;
      }
      for (std::uint64_t q = 1; q <= full_mask(n); ++q) {
        Subset qs(n, q);
        if (!is_dense_subset(r, qs)) {
          continue;
        }
        REQUIRE(validate_predomain(r.restricted_to(qs)).valid());
        for (std::size_t c = 0; c < n; ++c) {
          REQUIRE(is_cofinal(r, r.preimage(c), r.preimage(c) & qs));
        }
      }
    }
  }
}

TEST_CASE("random predomains stay valid under stratification") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    auto n = std::uniform_int_distribution<std::size_t>(1, 10)(rng);
    auto r = predom::testing::random_predomain(n, rng);
    auto p = Predomain::numbered(r);
    REQUIRE(validate_predomain(stratify(p).rel()).valid());
    REQUIRE(topological_waybelow(cspace_topology(p)) == stratify(p).rel());
  }
}
