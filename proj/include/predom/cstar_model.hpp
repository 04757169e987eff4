#pragma once

// The commutative model C0(X)+ for a finite discrete X: nonnegative rational
// functions on X with a << b iff a <= (b - eps)+ for some eps > 0, cutdowns,
// the delta inequalities for cutdowns, and traces given by weight vectors.
//
// In a commutative algebra x x* = x* x, so Cuntz-Pedersen equivalence is
// equality and the subequivalence a <~ b is pointwise <=. Every trace on the
// model is taken to be a weighted sum of point evaluations.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "predom/order_core.hpp"
#include "predom/rational.hpp"

namespace predom {

/// A finite set of points.
class FinXModel {
 public:
  explicit FinXModel(std::vector<std::string> points) : points_(std::move(points)) {}
  static FinXModel numbered(std::size_t n) { return FinXModel(Carrier::numbered(n)); }

  Carrier const& points() const noexcept { return points_; }
  std::size_t    size() const noexcept { return points_.size(); }

  friend bool operator==(FinXModel const&, FinXModel const&) = default;

 private:
  explicit FinXModel(Carrier c) : points_(std::move(c)) {}
  Carrier points_;
};

/// A nonnegative rational function on the points of a model.
class PositiveElement {
 public:
  /// Throws PreconditionError on a negative value or a size mismatch.
  PositiveElement(FinXModel model, std::vector<Rational> values);

  static PositiveElement zero(FinXModel const& m);
  static PositiveElement constant(FinXModel const& m, Rational const& q);

  FinXModel const&             model() const noexcept { return model_; }
  std::vector<Rational> const& values() const noexcept { return values_; }
  Rational const&              operator[](std::size_t x) const { return values_.at(x); }
  std::size_t                  size() const noexcept { return values_.size(); }
  bool                         is_zero() const;

  friend bool operator==(PositiveElement const&, PositiveElement const&) = default;

 private:
  FinXModel             model_;
  std::vector<Rational> values_;
};

PositiveElement operator+(PositiveElement const& a, PositiveElement const& b);
/// Pointwise maximum.
PositiveElement join(PositiveElement const& a, PositiveElement const& b);
/// Pointwise a <= b. This is also a <~ b in the commutative model.
bool pointwise_leq(PositiveElement const& a, PositiveElement const& b);

/// Pointwise max(a(x) - eps, 0). Throws PreconditionError unless eps > 0.
PositiveElement cutdown(PositiveElement const& a, Rational const& eps);

struct Approximation {
  bool holds;
  /// Largest eps with a <= (b - eps)+, or 1 when a = 0 (every eps works).
  std::optional<Rational> eps;
};

/// a << b: every x has a(x) = 0 or a(x) < b(x).
Approximation approx_rel(PositiveElement const& a, PositiveElement const& b);

/// Checks of the preCuntz axioms over every function with values in a grid.
struct ModelReport {
  bool transitive            = true;
  bool has_zero_below        = true;  // 0 << f for every f
  bool interpolates          = true;  // f1, f2 << h gives f1, f2 << z << h
  bool additive              = true;
  bool addition_continuous   = true;
  bool first_countable       = true;  // (f - 1/n)+ chain, n <= 16
  bool one_sided_additive    = true;  // not expected to hold
  std::size_t elements_checked = 0;

  /// Elements of the first failing tuple, for whichever check failed first.
  std::vector<PositiveElement> witness;
  std::string                  failed;
  /// (a, a', b) with a << a' but not a + b << a' + b.
  std::vector<PositiveElement> one_sided_witness;

  bool valid() const noexcept {
    return transitive && has_zero_below && interpolates && additive && addition_continuous
           && first_countable;
  }
};

/// Exhaustive over grid^X. The interpolant is the midpoint of max(f1, f2) and
/// h on the support of h, the continuity witnesses are cutdowns by a third of
/// the smallest gap. Both are verified exactly, not looked up in the grid.
ModelReport validate_model_precuntz(FinXModel const& m, std::vector<Rational> const& grid);

/// Every function X -> grid, in lexicographic order.
std::vector<PositiveElement> grid_elements(FinXModel const& m, std::vector<Rational> const& grid);

/// Largest delta with (a - eps)+ + (b - eps)+ <= (a + b - delta)+. When the
/// left side vanishes every delta works and eps is returned.
Rational find_delta_add(PositiveElement const& a, PositiveElement const& b, Rational const& eps);
/// Largest delta with (a + b - eps)+ <= (a - delta)+ + (b - delta)+, or eps
/// when the left side vanishes. Always at least eps / 2.
Rational find_delta_split(PositiveElement const& a, PositiveElement const& b, Rational const& eps);

/// max over x of |a(x) - b(x)|.
Rational norm_dist(PositiveElement const& a, PositiveElement const& b);

struct KrReport {
  bool hypothesis;  // norm_dist(a, b) < eps
  /// (a - eps)+ <= b and (a - eps)+ <= (b - delta)+, when the hypothesis holds.
  bool                    conclusion = false;
  bool                    refined    = false;
  std::optional<Rational> delta;
};

/// delta = (eps - norm_dist) / 2, which keeps (b - delta)+ within eps of a.
KrReport kr_check(PositiveElement const& a, PositiveElement const& b, Rational const& eps);

struct PreorderReport {
  bool pointwise;
  /// For every eps > 0 some delta > 0 has (a - eps)+ <= (b - delta)+.
  bool cp;
  /// An eps admitting no delta, when cp fails.
  std::optional<Rational> eps_witness;
};

/// Decides the Cuntz-Pedersen preorder by testing the finitely many eps where
/// the existence of delta can change. Throws InternalInconsistency if it
/// differs from pointwise <=.
PreorderReport natural_vs_cp_preorder(PositiveElement const& a, PositiveElement const& b);

/// (a - eps)+ <= (b - eps)+ <= (b - eps/2)+ for a <= b. Each step is a <=
/// since the equivalence steps of the general argument are equalities here.
struct CpChain {
  std::vector<PositiveElement> terms;
  Rational                     delta;
  bool                         verified;
};
CpChain cp_chain(PositiveElement const& a, PositiveElement const& b, Rational const& eps);

/// Natural preorder of the model: down-set inclusion, decided from the closed
/// form of <<.
bool model_natural_leq(PositiveElement const& a, PositiveElement const& b);

/// A trace as weights on points; infinite weights allowed.
class TraceVector {
 public:
  TraceVector(FinXModel model, std::vector<ExtRational> weights);
  static TraceVector point_mass(FinXModel const& m, std::size_t x);

  FinXModel const&                model() const noexcept { return model_; }
  std::vector<ExtRational> const& weights() const noexcept { return weights_; }

 private:
  FinXModel                model_;
  std::vector<ExtRational> weights_;
};

/// Sum of w(x) a(x) with inf * 0 = 0.
ExtRational trace_eval(TraceVector const& t, PositiveElement const& a);

struct TraceReport {
  bool hom       = true;
  bool order_lsc = true;  // t(f) > r gives g << f with t(g) > r
  bool norm_lsc  = true;  // t(f) > r gives eta with t(h) > r near f
};

/// Checks the three properties at every sample and every pair of samples.
/// Throws InternalInconsistency if the two lsc notions disagree.
TraceReport trace_lsc_check(TraceVector const& t, std::vector<PositiveElement> const& samples);

/// A point where a exceeds b, if any.
std::optional<std::size_t> separating_point(PositiveElement const& a, PositiveElement const& b);

/// All traces with weights drawn from the given values.
std::vector<TraceVector> weight_family(FinXModel const& m, std::vector<ExtRational> const& values);

struct BidualReport {
  /// The ideal is {f | f << generator}.
  PositiveElement generator;
  bool            matches;
  std::size_t     traces_checked;
};

/// For the functional presented as the supremum of the evaluations at
/// presented[i]: the ideal below their pointwise join, with its hat compared
/// to the presented functional on every trace of the family. Throws
/// PreconditionError on an empty presentation or mixed models.
BidualReport bidual_check(FinXModel const& m, std::vector<PositiveElement> const& presented,
                          std::vector<TraceVector> const& family);

}  // namespace predom
