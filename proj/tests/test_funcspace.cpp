#include <random>

#include "doctest.h"
#include "laws.hpp"
#include "predom/error.hpp"
#include "predom/funcspace.hpp"
#include "support.hpp"

using namespace predom;
using namespace predom::testing;

namespace {
  FnValues fn(std::initializer_list<char const*> values) {
    FnValues out;
    for (auto v : values) {
      out.push_back(parse_ext(v));
    }
    return out;
  }
}  // namespace

TEST_CASE("lower semicontinuity examples") {
  auto c = chain3();
  CHECK(is_lsc(c, fn({"3", "3", "3"})));
  CHECK_FALSE(is_lsc(c, fn({"0", "5", "7"})));
  CHECK_FALSE(is_lsc_by_preimages(c, fn({"0", "5", "7"})));
  // The preimage of ]5, inf] is {2}, which is not open.
  CHECK_FALSE(cspace_topology(c).is_open(Subset(3, {2})));
  CHECK(is_lsc(c, fn({"0", "5", "5"})));
  CHECK(is_lsc_by_preimages(c, fn({"0", "5", "5"})));
}

TEST_CASE("fast and preimage lsc tests agree") {
  for (auto const& p : all_predomains(4)) {
    for (auto const& f : all_functions(p.size(), small_grid())) {
      REQUIRE(is_lsc(p, f) == is_lsc_by_preimages(p, f));
    }
  }
}

TEST_CASE("envelope examples") {
  auto c = chain3();
  CHECK(env(c, fn({"0", "5", "7"})) == fn({"0", "5", "5"}));
  CHECK(env(c, fn({"0", "0", "0"})) == fn({"0", "0", "0"}));
  CHECK(env(c, fn({"0", "inf", "inf"})) == fn({"0", "inf", "inf"}));
  CHECK_THROWS_AS(env(c, fn({"1", "0", "0"})), PreconditionError);
}

TEST_CASE("adjoint examples") {
  auto c = chain3();
  CHECK(adjoint_alpha(c, fn({"0", "5", "5"})) == fn({"0", "5", "5"}));
  CHECK(adjoint_alpha(c, fn({"inf", "inf", "inf"})) == fn({"inf", "inf", "inf"}));
  CHECK_THROWS_AS(adjoint_alpha(c, fn({"0", "5", "7"})), PreconditionError);
  auto g = fn({"1", "4", "4"});
  CHECK(pointwise_leq(g, adjoint_alpha(c, env(c, g))));
}

TEST_CASE("subbasic opens") {
  auto c = chain3();
  CHECK(in_V(fn({"0", "5", "5"}), 1, ExtRational(3)));
  CHECK(in_W(c, fn({"0", "2", "2"}), 1, ExtRational(3)));
  CHECK_FALSE(in_V(fn({"inf", "inf", "inf"}), 0, ExtRational::infinity()));
}

TEST_CASE("separation examples") {
  auto c   = chain3();
  auto sep = separate(c, fn({"0", "4", "4"}), fn({"0", "2", "2"}));
  CHECK(sep.y == 1);
  CHECK(sep.r == ExtRational(3));

  auto single = Predomain::numbered(Relation::identity(1));
  auto s1     = separate(single, fn({"3"}), fn({"2"}));
  CHECK(s1.y == 0);
  CHECK(s1.r == parse_ext("5/2"));

  auto s2 = separate(c, fn({"0", "inf", "inf"}), fn({"0", "5", "5"}));
  CHECK(s2.r == ExtRational(6));
  CHECK(s2.y == 1);

  CHECK_THROWS_AS(separate(c, fn({"0", "1", "1"}), fn({"0", "2", "2"})), PreconditionError);
}

TEST_CASE("convergence of eventually constant sequences") {
  auto c = chain3();
  auto f = fn({"0", "5", "5"});
  TailSequence constant{{fn({"1", "1", "1"})}, f};
  CHECK(converges_up(c, constant, f));
  CHECK(converges_lo(c, constant, f));
  CHECK(converges_interval(c, constant, f));

  TailSequence shifted{{}, pointwise_sum(f, constant_fn(3, ExtRational(1)))};
  CHECK(converges_up(c, shifted, f));
  CHECK_FALSE(converges_lo(c, shifted, f));

  TailSequence below{{}, fn({"0", "3", "3"})};
  CHECK(converges_up(c, below, f) == pointwise_leq(f, below.tail));
  CHECK(converges_lo(c, below, f));
}

TEST_CASE("envelope laws on predomains of size <= 2") {
  auto const grid = small_grid();
  for (auto const& p : all_predomains(2)) {
    auto const fs = all_functions(p.size(), grid);
    for (auto const& g1 : fs) {
      if (!is_monotone(p, g1)) {
        continue;
      }
      for (auto const& g2 : fs) {
        if (!is_monotone(p, g2)) {
          continue;
        }
        for (auto const& f : fs) {
          if (is_lsc(p, f)) {
            REQUIRE(env_law_failure(p, g1, g2, f, Rational(3, 2)).empty());
          }
        }
      }
    }
  }
}

TEST_CASE("image of env is exactly LSC") {
  for (auto const& p : all_predomains(3)) {
    for (auto const& g : all_functions(p.size(), small_grid())) {
      if (is_rel_monotone(p, g)) {
        REQUIRE(is_lsc(p, env(p, g)));
      }
      if (is_lsc(p, g)) {
        REQUIRE(env(p, g) == g);
      }
    }
  }
}

TEST_CASE("separation on CHAIN3 and P4 is disjoint") {
  std::vector<ExtRational> scan_grid{ExtRational(0), parse_ext("1/2"), ExtRational(1),
                                     parse_ext("3/2"), ExtRational(2), ExtRational(3),
                                     ExtRational::infinity()};
  for (auto const& p : {chain3(), p4()}) {
    std::vector<FnValues> lsc;
    for (auto const& f : all_functions(p.size(), small_grid())) {
      if (is_lsc(p, f)) {
        lsc.push_back(f);
      }
    }
    std::vector<FnValues> scan;
    for (auto const& g : all_functions(p.size(), scan_grid)) {
      if (is_rel_monotone(p, g)) {
        scan.push_back(g);
      }
    }
    for (auto const& f : lsc) {
      for (auto const& h : lsc) {
        if (pointwise_leq(f, h)) {
          continue;
        }
        auto sep = separate(p, f, h);
        REQUIRE(in_V(f, sep.y, sep.r));
        REQUIRE(in_W(p, h, sep.y, sep.r));
        REQUIRE(separation_disjoint(p, sep, scan));
      }
    }
  }
}
