#include <random>

#include "doctest.h"
#include "predom/cstar_model.hpp"
#include "predom/error.hpp"
#include "predom/predomain.hpp"

using namespace predom;

namespace {
  PositiveElement el(FinXModel const& m, std::vector<Rational> v) {
    return PositiveElement(m, std::move(v));
  }
  Rational q(long p, long d = 1) { return Rational(p, d); }

  std::vector<Rational> grid5() { return {q(0), q(1, 4), q(1, 2), q(3, 4), q(1)}; }

  // Exists eps > 0 with a <= (b - eps)+, trying every positive gap and 1.
  bool approx_oracle(PositiveElement const& a, PositiveElement const& b) {
    std::vector<Rational> eps{q(1)};
    for (std::size_t x = 0; x < a.size(); ++x) {
      if (b[x] > a[x]) {
        eps.push_back(b[x] - a[x]);
      }
    }
    for (auto const& e : eps) {
      if (pointwise_leq(a, cutdown(b, e))) {
        return true;
      }
    }
    return false;
  }

  // Largest k/64 (k <= 256) satisfying the inequality.
  template <class Ok>
  std::optional<Rational> fine_max(Ok ok) {
    std::optional<Rational> best;
    for (int k = 1; k <= 256; ++k) {
      if (ok(q(k, 64))) {
        best = q(k, 64);
      }
    }
    return best;
  }
}  // namespace

TEST_CASE("cutdown") {
  auto m = FinXModel::numbered(2);
  CHECK(cutdown(el(m, {q(1), q(0)}), q(1, 2)) == el(m, {q(1, 2), q(0)}));
  CHECK(cutdown(el(m, {q(1), q(1, 3)}), q(1)).is_zero());
  auto one = PositiveElement::constant(m, q(1));
  for (auto e : {q(1, 2), q(1, 3), q(7, 8)}) {
    auto c = cutdown(one, e);
    CHECK(c == PositiveElement::constant(m, 1 - e));
    CHECK(approx_rel(c, one).holds);
  }
  CHECK_THROWS_AS(cutdown(one, q(0)), PreconditionError);
  CHECK_THROWS_AS(el(m, {q(-1), q(0)}), PreconditionError);
  CHECK_THROWS_AS(el(m, {q(1)}), PreconditionError);
}

TEST_CASE("approximation examples") {
  auto m = FinXModel::numbered(2);
  auto r = approx_rel(el(m, {q(1, 2), q(0)}), el(m, {q(1), q(1)}));
  CHECK(r.holds);
  CHECK(r.eps == q(1, 2));
  CHECK_FALSE(approx_rel(el(m, {q(1), q(0)}), el(m, {q(1), q(1)})).holds);
  CHECK(approx_rel(PositiveElement::zero(m), PositiveElement::zero(m)).holds);
  CHECK_THROWS_AS(approx_rel(PositiveElement::zero(m), PositiveElement::zero(FinXModel::numbered(3))),
                  PreconditionError);
}

TEST_CASE("closed form of << agrees with the eps definition") {
  for (std::size_t n = 1; n <= 2; ++n) {
    auto m     = FinXModel::numbered(n);
    auto elems = grid_elements(m, grid5());
    for (auto const& a : elems) {
      for (auto const& b : elems) {
        auto r = approx_rel(a, b);
        REQUIRE(r.holds == approx_oracle(a, b));
        if (r.holds) {
          REQUIRE(pointwise_leq(a, cutdown(b, *r.eps)));
        }
      }
    }
  }
}

TEST_CASE("model axioms over grids") {
  auto one = validate_model_precuntz(FinXModel::numbered(1), grid5());
  CHECK(one.valid());
  CHECK(one.elements_checked == 5);
  // 0 << 0, but 1/4 + 0 is not << 1/4 + 0.
  CHECK_FALSE(one.one_sided_additive);

  auto two = validate_model_precuntz(FinXModel::numbered(2), {q(0), q(1, 4), q(1, 2), q(1)});
  CHECK(two.valid());
  CHECK(two.failed.empty());
  CHECK_FALSE(two.one_sided_additive);
  REQUIRE(two.one_sided_witness.size() == 3);
  auto const& w = two.one_sided_witness;
  CHECK(approx_rel(w[0], w[1]).holds);
  CHECK_FALSE(approx_rel(w[0] + w[2], w[1] + w[2]).holds);
}

TEST_CASE("one-sided additivity fails on sampled functions") {
  // (x - 1/2)+, (x - 1/4)+ and x sampled at x = 1/4 and x = 3/4.
  FinXModel m({"1/4", "3/4"});
  auto f  = el(m, {q(0), q(1, 4)});
  auto f2 = el(m, {q(0), q(1, 2)});
  auto g  = el(m, {q(1, 4), q(3, 4)});
  CHECK(approx_rel(f, f2).holds);
  CHECK_FALSE(approx_rel(f + g, f2 + g).holds);
}

TEST_CASE("random additivity instances") {
  std::mt19937_64 rng(7);
  auto            m = FinXModel::numbered(3);
  auto            g = grid5();
  std::uniform_int_distribution<std::size_t> pick(0, g.size() - 1);
  auto draw = [&] { return el(m, {g[pick(rng)], g[pick(rng)], g[pick(rng)]}); };
  int  hits = 0;
  while (hits < 100) {
    auto f = draw(), f2 = draw(), h = draw(), h2 = draw();
    if (!approx_rel(f, f2).holds || !approx_rel(h, h2).holds) {
      continue;
    }
    REQUIRE(approx_rel(f + h, f2 + h2).holds);
    ++hits;
  }
}

TEST_CASE("delta examples") {
  auto m2 = FinXModel::numbered(2);
  auto m1 = FinXModel::numbered(1);
  CHECK(find_delta_add(el(m2, {q(1), q(0)}), el(m2, {q(0), q(1)}), q(1, 2)) == q(1, 2));
  CHECK(find_delta_add(el(m2, {q(1), q(0)}), el(m2, {q(0), q(1)}), q(2)) == q(2));
  CHECK(find_delta_add(el(m1, {q(1)}), el(m1, {q(1)}), q(1, 4)) == q(1, 2));
  CHECK(find_delta_split(el(m1, {q(1)}), el(m1, {q(1)}), q(1, 2)) == q(1, 4));
  CHECK(find_delta_split(el(m1, {q(1)}), el(m1, {q(0)}), q(1, 2)) == q(1, 2));
  // Both summands vanish where the other is positive, so the split needs
  // no halving.
  CHECK(find_delta_split(el(m2, {q(1), q(0)}), el(m2, {q(0), q(1)}), q(1, 2)) == q(1, 2));
}

TEST_CASE("deltas are exact and maximal") {
  std::mt19937_64 rng(11);
  auto            g = grid5();
  std::uniform_int_distribution<std::size_t> pick(0, g.size() - 1);
  std::uniform_int_distribution<int>         eps_pick(1, 8);
  std::uniform_int_distribution<std::size_t> size_pick(1, 3);
  for (int trial = 0; trial < 300; ++trial) {
    auto                  m = FinXModel::numbered(size_pick(rng));
    std::vector<Rational> av(m.size()), bv(m.size());
    for (std::size_t x = 0; x < m.size(); ++x) {
      av[x] = g[pick(rng)];
      bv[x] = g[pick(rng)];
    }
    auto a = el(m, av), b = el(m, bv);
    auto eps = q(eps_pick(rng), 8);

    auto add_ok = [&](Rational const& d) {
      return pointwise_leq(cutdown(a, eps) + cutdown(b, eps), cutdown(a + b, d));
    };
    auto split_ok = [&](Rational const& d) {
      return pointwise_leq(cutdown(a + b, eps), cutdown(a, d) + cutdown(b, d));
    };
    auto da = find_delta_add(a, b, eps);
    auto ds = find_delta_split(a, b, eps);
    REQUIRE(add_ok(da));
    REQUIRE(split_ok(ds));
    REQUIRE(ds >= eps / 2);
    if (!(cutdown(a, eps) + cutdown(b, eps)).is_zero()) {
      REQUIRE(fine_max(add_ok) == da);
    }
    if (!cutdown(a + b, eps).is_zero()) {
      REQUIRE(fine_max(split_ok) == ds);
    }
  }
}

TEST_CASE("cutdowns of nearby elements") {
  auto m = FinXModel::numbered(1);
  auto r = kr_check(el(m, {q(1)}), el(m, {q(3, 4)}), q(1, 2));
  CHECK(r.hypothesis);
  CHECK(r.conclusion);
  CHECK(r.refined);
  CHECK(r.delta == q(1, 8));
  CHECK(norm_dist(el(m, {q(1)}), el(m, {q(3, 4)})) == q(1, 4));
  CHECK(pointwise_leq(cutdown(el(m, {q(1)}), q(1, 2)), cutdown(el(m, {q(3, 4)}), q(1, 8))));
  CHECK_FALSE(kr_check(el(m, {q(1)}), el(m, {q(0)}), q(1)).hypothesis);
  CHECK(kr_check(el(m, {q(1)}), el(m, {q(1)}), q(1, 3)).refined);
}

TEST_CASE("Cuntz-Pedersen preorder is pointwise order") {
  auto m = FinXModel::numbered(2);
  auto r = natural_vs_cp_preorder(el(m, {q(1), q(0)}), el(m, {q(0), q(1)}));
  CHECK_FALSE(r.pointwise);
  CHECK_FALSE(r.cp);
  CHECK(r.eps_witness == q(1, 2));
  for (std::size_t n = 1; n <= 2; ++n) {
    auto elems = grid_elements(FinXModel::numbered(n), grid5());
    for (auto const& a : elems) {
      for (auto const& b : elems) {
        auto rep = natural_vs_cp_preorder(a, b);
        REQUIRE(rep.cp == pointwise_leq(a, b));
        if (rep.pointwise) {
          auto chain = cp_chain(a, b, q(1, 4));
          REQUIRE(chain.verified);
          REQUIRE(model_natural_leq(a, b));
        } else {
          REQUIRE_FALSE(model_natural_leq(a, b));
        }
      }
    }
  }
  CHECK_THROWS_AS(cp_chain(el(m, {q(1), q(0)}), el(m, {q(0), q(1)}), q(1)), PreconditionError);
}

TEST_CASE("natural preorder of grid sub-predomains") {
  // Relations on a fine grid; the down-sets it sees are enough to separate
  // coarse grid points.
  struct Case {
    std::size_t           points;
    std::vector<Rational> coarse;
    std::vector<Rational> fine;
  };
  std::vector<Case> cases{
      {1, grid5(), {q(0), q(1, 8), q(1, 4), q(3, 8), q(1, 2), q(5, 8), q(3, 4), q(7, 8), q(1)}},
      {2, {q(0), q(1, 2), q(1)}, grid5()},
  };
  for (auto const& cs : cases) {
    auto       m     = FinXModel::numbered(cs.points);
    auto const fine  = grid_elements(m, cs.fine);
    auto const n     = fine.size();
    Relation   r(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (approx_rel(fine[i], fine[j]).holds) {
          r.set(i, j);
        }
      }
    }
    auto const leq = natural_preorder(r);
    for (auto const& a : grid_elements(m, cs.coarse)) {
      for (auto const& b : grid_elements(m, cs.coarse)) {
        auto ia = std::find(fine.begin(), fine.end(), a) - fine.begin();
        auto ib = std::find(fine.begin(), fine.end(), b) - fine.begin();
        REQUIRE(leq.holds(ia, ib) == pointwise_leq(a, b));
      }
    }
  }
}

TEST_CASE("trace examples") {
  auto m  = FinXModel::numbered(2);
  auto a  = el(m, {q(2, 3), q(1, 4)});
  auto z  = TraceVector(m, {ExtRational(0), ExtRational(0)});
  auto d0 = TraceVector::point_mass(m, 0);
  auto inf = TraceVector(m, {ExtRational::infinity(), ExtRational(1)});
  CHECK(trace_eval(z, a) == ExtRational(0));
  CHECK(trace_eval(d0, a) == ExtRational(q(2, 3)));
  CHECK(trace_eval(inf, a).is_infinite());
  CHECK(trace_eval(inf, el(m, {q(0), q(1, 4)})) == ExtRational(q(1, 4)));
  CHECK(trace_eval(inf, PositiveElement::zero(m)).is_zero());

  auto samples = grid_elements(m, {q(0), q(1, 2), q(1)});
  for (auto const& t : {z, d0, inf}) {
    auto rep = trace_lsc_check(t, samples);
    CHECK(rep.hom);
    CHECK(rep.order_lsc);
    CHECK(rep.norm_lsc);
  }
}

TEST_CASE("traces are lsc homs and homogeneous") {
  std::mt19937_64 rng(3);
  std::vector<ExtRational> weights{ExtRational(0), ExtRational(q(1, 3)), ExtRational(1),
                                   ExtRational(5), ExtRational::infinity()};
  std::uniform_int_distribution<std::size_t> pick(0, weights.size() - 1);
  auto m       = FinXModel::numbered(3);
  auto samples = grid_elements(m, {q(0), q(1, 2), q(1)});
  for (int i = 0; i < 40; ++i) {
    TraceVector t(m, {weights[pick(rng)], weights[pick(rng)], weights[pick(rng)]});
    auto rep = trace_lsc_check(t, samples);
    REQUIRE(rep.hom);
    REQUIRE(rep.order_lsc);
    REQUIRE(rep.norm_lsc);
    for (auto const& a : samples) {
      for (auto s : {q(1, 2), q(3), q(7, 5)}) {
        std::vector<Rational> sv;
        for (auto const& v : a.values()) {
          sv.push_back(s * v);
        }
        REQUIRE(trace_eval(t, el(m, sv)) == multiply(ExtRational(s), trace_eval(t, a), ScalarMode::Upper));
      }
    }
  }
}

TEST_CASE("point masses separate") {
  auto m = FinXModel::numbered(2);
  for (auto const& a : grid_elements(m, grid5())) {
    for (auto const& b : grid_elements(m, grid5())) {
      auto x = separating_point(a, b);
      REQUIRE(x.has_value() == !pointwise_leq(a, b));
      if (x) {
        auto t = TraceVector::point_mass(m, *x);
        REQUIRE(trace_eval(t, b) < trace_eval(t, a));
      }
    }
  }
}

TEST_CASE("bidual examples") {
  auto m      = FinXModel::numbered(2);
  auto a      = el(m, {q(1), q(1, 4)});
  auto b      = el(m, {q(1, 2), q(3, 4)});
  auto family = weight_family(m, {ExtRational(0), ExtRational(q(1, 2)), ExtRational(1),
                                  ExtRational(2), ExtRational::infinity()});
  CHECK(family.size() == 25);

  auto single = bidual_check(m, {a}, family);
  CHECK(single.generator == a);
  CHECK(single.matches);
  CHECK(single.traces_checked == 25);

  auto zero = bidual_check(m, {PositiveElement::zero(m)}, family);
  CHECK(zero.generator.is_zero());
  CHECK(zero.matches);

  auto both = bidual_check(m, {a, b}, family);
  CHECK(both.generator == el(m, {q(1), q(3, 4)}));
  CHECK(both.matches);

  CHECK_THROWS_AS(bidual_check(m, {}, family), PreconditionError);
  CHECK_THROWS_AS(bidual_check(m, {el(FinXModel::numbered(1), {q(1)})}, family),
                  PreconditionError);
}
