#include <random>

#include "doctest.h"
#include "predom/error.hpp"
#include "predom/order_core.hpp"
#include "predom/rational.hpp"
#include "support.hpp"

using namespace predom;
using predom::testing::chain3_rel;
using predom::testing::code_is_transitive;

TEST_CASE("carrier validation") {
  CHECK_THROWS_AS(Carrier({}), PreconditionError);
  CHECK_THROWS_AS(Carrier({"a", "a"}), PreconditionError);
  CHECK_THROWS_AS(Carrier({"a", ""}), PreconditionError);
  Carrier c({"x", "y"});
  CHECK(c.index_of("y") == 1);
  CHECK_THROWS_AS(c.index_of("z"), UnknownElement);
}

TEST_CASE("rationals parse and print in lowest terms") {
  CHECK(format_rational(parse_rational("6/4")) == "3/2");
  CHECK(format_rational(parse_rational("-2/4")) == "-1/2");
  CHECK(format_ext(parse_ext("inf")) == "inf");
  CHECK_THROWS_AS(parse_rational("1/0"), PreconditionError);
  CHECK_THROWS_AS(parse_ext("-1"), PreconditionError);
  CHECK(ExtRational(3) + ExtRational::infinity() == ExtRational::infinity());
  CHECK(multiply(ExtRational::infinity(), ExtRational(0), ScalarMode::Upper) == ExtRational(0));
  CHECK(multiply(ExtRational::infinity(), ExtRational(0), ScalarMode::Lower)
        == ExtRational::infinity());
  CHECK_THROWS_AS(multiply(ExtRational::infinity(), ExtRational(1), ScalarMode::Interval),
                  PreconditionError);
}

TEST_CASE("transitive closure examples") {
  CHECK(transitive_closure(Relation(3)) == Relation(3));
  auto r = transitive_closure(Relation::from_pairs(3, {{0, 1}, {1, 2}}));
  CHECK(r.holds(0, 2));
  CHECK(r.pair_count() == 3);
  auto p4 = predom::testing::p4().rel();
  CHECK(transitive_closure(p4) == p4);
}

TEST_CASE("transitive closure is idempotent and monotone") {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << (n * n)); ++code) {
      auto r = Relation::from_code(n, code);
      auto c = transitive_closure(r);
      REQUIRE(transitive_closure(c) == c);
      REQUIRE(r.is_subset_of(c));
      REQUIRE(classify_relation(c).transitive);
      for (std::size_t bit = 0; bit < n * n; ++bit) {
        auto bigger = Relation::from_code(n, code | (std::uint64_t{1} << bit));
        REQUIRE(c.is_subset_of(transitive_closure(bigger)));
      }
    }
  }
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 2000; ++trial) {
    auto     n = std::uniform_int_distribution<std::size_t>(1, 12)(rng);
    Relation r(n);
    Relation s(n);
    std::bernoulli_distribution coin(0.15);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (coin(rng)) {
          r.set(i, j);
          s.set(i, j);
        } else if (coin(rng)) {
          s.set(i, j);
        }
      }
    }
    auto c = transitive_closure(r);
    REQUIRE(transitive_closure(c) == c);
    REQUIRE(c.is_subset_of(transitive_closure(s)));
  }
}

TEST_CASE("closure is idempotent on all relations of size 5") {
  // Transitive relations are exactly the fixed points of the closure.
  std::size_t fixed = 0;
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << 25); ++code) {
    if (code_is_transitive(5, code)) {
      ++fixed;
    }
  }
  CHECK(fixed == 154303);
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20000; ++trial) {
    auto r = Relation::from_code(5, rng() & ((std::uint64_t{1} << 25) - 1));
    auto c = transitive_closure(r);
    REQUIRE(transitive_closure(c) == c);
  }
}

TEST_CASE("classification") {
  auto id = classify_relation(Relation::identity(3));
  CHECK((id.transitive && id.reflexive && id.antisymmetric));
  CHECK_FALSE(classify_relation(Relation::from_pairs(3, {{0, 1}, {1, 2}})).transitive);
  auto c3 = classify_relation(chain3_rel());
  CHECK(c3.transitive);
  CHECK_FALSE(c3.reflexive);
  CHECK(c3.antisymmetric);
}

TEST_CASE("directed and cofinal subsets") {
  auto r = chain3_rel();
  CHECK_FALSE(is_directed(r, Subset(3)));
  CHECK(is_directed(r, Subset(3, {0, 1})));
  CHECK_FALSE(is_directed(r, Subset(3, {0, 2})));
  Subset d(3, {0, 1});
  CHECK(is_cofinal(r, d, d));
  CHECK(is_cofinal(r, d, Subset(3, {1})));
  CHECK_FALSE(is_cofinal(r, d, Subset(3, {0})));
  CHECK_THROWS_AS(is_cofinal(r, d, Subset(3, {2})), PreconditionError);
}

namespace {
  // Literal all-finite-F definition, used as an oracle.
  bool directed_by_all_subsets(Relation const& r, Subset const& d) {
    auto const full = d.mask();
    std::uint64_t f = 0;
    while (true) {
      bool found = false;
      for (auto c : d.elements()) {
        if (Subset(r.size(), f).is_subset_of(r.preimage(c))) {
          found = true;
          break;
        }
      }
      if (!found) {
        return false;
      }
      if (f == full) {
        return true;
      }
      f = (f - full) & full;
    }
  }
}  // namespace

TEST_CASE("single-witness directedness matches the all-subsets definition") {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << (n * n)); ++code) {
      auto r = Relation::from_code(n, code);
      for (std::uint64_t m = 0; m <= full_mask(n); ++m) {
        REQUIRE(is_directed(r, Subset(n, m)) == directed_by_all_subsets(r, Subset(n, m)));
      }
    }
  }
}

TEST_CASE("cofinal subsets of directed sets are directed") {
  for (std::size_t n = 1; n <= 5; ++n) {
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << (n * n)); ++code) {
      if (!code_is_transitive(n, code)) {
        continue;
      }
      auto r = Relation::from_code(n, code);
      for (std::uint64_t d = 1; d <= full_mask(n); ++d) {
        Subset ds(n, d);
        if (!is_directed(r, ds)) {
          continue;
        }
        for (std::uint64_t s = d;; s = (s - 1) & d) {
          if (is_cofinal(r, ds, Subset(n, s))) {
            REQUIRE(is_directed(r, Subset(n, s)));
          }
          if (s == 0) {
            break;
          }
        }
      }
    }
  }
}
