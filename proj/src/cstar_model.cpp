#include "predom/cstar_model.hpp"

#include <algorithm>

#include "predom/error.hpp"

namespace predom {

namespace {

  void require_same(PositiveElement const& a, PositiveElement const& b) {
    if (!(a.model() == b.model())) {
      throw PreconditionError("elements belong to different models");
    }
  }

  void require_positive(Rational const& eps) {
    if (eps <= 0) {
      throw PreconditionError("eps must be positive");
    }
  }

  Rational positive_part(Rational const& q) {
    return q > 0 ? q : Rational(0);
  }

}  // namespace

PositiveElement::PositiveElement(FinXModel model, std::vector<Rational> values)
    : model_(std::move(model)), values_(std::move(values)) {
  if (values_.size() != model_.size()) {
    throw PreconditionError("element needs one value per point");
  }
  for (auto const& v : values_) {
    if (v < 0) {
      throw PreconditionError("element values must be nonnegative");
    }
  }
}

PositiveElement PositiveElement::zero(FinXModel const& m) {
  return constant(m, Rational(0));
}

PositiveElement PositiveElement::constant(FinXModel const& m, Rational const& q) {
  return PositiveElement(m, std::vector<Rational>(m.size(), q));
}

bool PositiveElement::is_zero() const {
  return std::all_of(values_.begin(), values_.end(), [](Rational const& v) { return v == 0; });
}

PositiveElement operator+(PositiveElement const& a, PositiveElement const& b) {
  require_same(a, b);
  std::vector<Rational> out(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) {
    out[x] = a[x] + b[x];
  }
  return PositiveElement(a.model(), std::move(out));
}

PositiveElement join(PositiveElement const& a, PositiveElement const& b) {
  require_same(a, b);
  std::vector<Rational> out(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) {
    out[x] = std::max(a[x], b[x]);
  }
  return PositiveElement(a.model(), std::move(out));
}

bool pointwise_leq(PositiveElement const& a, PositiveElement const& b) {
  require_same(a, b);
  for (std::size_t x = 0; x < a.size(); ++x) {
    if (a[x] > b[x]) {
      return false;
    }
  }
  return true;
}

PositiveElement cutdown(PositiveElement const& a, Rational const& eps) {
  require_positive(eps);
  std::vector<Rational> out(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) {
    out[x] = positive_part(a[x] - eps);
  }
  return PositiveElement(a.model(), std::move(out));
}

Approximation approx_rel(PositiveElement const& a, PositiveElement const& b) {
  require_same(a, b);
  std::optional<Rational> gap;
  for (std::size_t x = 0; x < a.size(); ++x) {
    if (a[x] == 0) {
      continue;
    }
    if (a[x] >= b[x]) {
      return {false, std::nullopt};
    }
    Rational const g = b[x] - a[x];
    gap              = gap ? std::min(*gap, g) : g;
  }
  return {true, gap.value_or(Rational(1))};
}

std::vector<PositiveElement> grid_elements(FinXModel const& m, std::vector<Rational> const& grid) {
  if (grid.empty()) {
    throw PreconditionError("grid is empty");
  }
  std::vector<PositiveElement> out;
  std::vector<std::size_t>     digit(m.size(), 0);
  while (true) {
    std::vector<Rational> values(m.size());
    for (std::size_t x = 0; x < m.size(); ++x) {
      values[x] = grid[digit[x]];
    }
    out.emplace_back(m, std::move(values));
    std::size_t pos = m.size();
    while (pos > 0) {
      --pos;
      if (++digit[pos] < grid.size()) {
        break;
      }
      digit[pos] = 0;
      if (pos == 0) {
        return out;
      }
    }
  }
}

ModelReport validate_model_precuntz(FinXModel const& m, std::vector<Rational> const& grid) {
  auto const  elems = grid_elements(m, grid);
  auto const  n     = elems.size();
  ModelReport rep;
  rep.elements_checked = n;

  auto fail = [&rep](bool& flag, char const* name, std::vector<PositiveElement> w) {
    if (flag) {
      flag = false;
      if (rep.failed.empty()) {
        rep.failed  = name;
        rep.witness = std::move(w);
      }
    }
  };

  std::vector<std::vector<char>> rel(n, std::vector<char>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      rel[i][j] = approx_rel(elems[i], elems[j]).holds ? 1 : 0;
    }
  }
  auto const zero = PositiveElement::zero(m);

  for (std::size_t h = 0; h < n; ++h) {
    if (!approx_rel(zero, elems[h]).holds) {
      fail(rep.has_zero_below, "zero", {elems[h]});
    }
    for (std::size_t a = 0; a < n; ++a) {
      if (!rel[a][h]) {
        continue;
      }
      for (std::size_t c = 0; c < n; ++c) {
        if (rel[c][a] && !rel[c][h]) {
          fail(rep.transitive, "transitive", {elems[c], elems[a], elems[h]});
        }
      }
      for (std::size_t b = a; b < n; ++b) {
        if (!rel[b][h]) {
          continue;
        }
        std::vector<Rational> z(m.size());
        for (std::size_t x = 0; x < m.size(); ++x) {
          if (elems[h][x] > 0) {
            z[x] = (std::max(elems[a][x], elems[b][x]) + elems[h][x]) / 2;
          }
        }
        PositiveElement zz(m, std::move(z));
        if (!approx_rel(elems[a], zz).holds || !approx_rel(elems[b], zz).holds
            || !approx_rel(zz, elems[h]).holds) {
          fail(rep.interpolates, "interpolation", {elems[a], elems[b], elems[h]});
        }
      }
    }
  }

  // Additivity and the one-sided form over all related pairs.
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t a2 = 0; a2 < n; ++a2) {
      if (!rel[a][a2]) {
        continue;
      }
      for (std::size_t b = 0; b < n; ++b) {
        if (rep.one_sided_additive
            && !approx_rel(elems[a] + elems[b], elems[a2] + elems[b]).holds) {
          rep.one_sided_additive = false;
          rep.one_sided_witness  = {elems[a], elems[a2], elems[b]};
        }
        for (std::size_t b2 = 0; b2 < n; ++b2) {
          if (rel[b][b2] && !approx_rel(elems[a] + elems[b], elems[a2] + elems[b2]).holds) {
            fail(rep.additive, "additive", {elems[a], elems[a2], elems[b], elems[b2]});
          }
        }
      }
    }
  }

  // c << a + b gives a' << a, b' << b with c << a' + b'.
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a; b < n; ++b) {
      auto const s = elems[a] + elems[b];
      for (std::size_t c = 0; c < n; ++c) {
        auto const ap = approx_rel(elems[c], s);
        if (!ap.holds) {
          continue;
        }
        auto const eta = *ap.eps / 3;
        auto const a2  = cutdown(elems[a], eta);
        auto const b2  = cutdown(elems[b], eta);
        if (!approx_rel(a2, elems[a]).holds || !approx_rel(b2, elems[b]).holds
            || !approx_rel(elems[c], a2 + b2).holds) {
          fail(rep.addition_continuous, "continuity", {elems[a], elems[b], elems[c]});
        }
      }
    }
  }

  // (f - 1/k)+ is <<-increasing, below f, and eventually above each g << f.
  for (std::size_t f = 0; f < n; ++f) {
    std::vector<PositiveElement> chain;
    for (int k = 1; k <= 16; ++k) {
      chain.push_back(cutdown(elems[f], Rational(1, k)));
    }
    for (std::size_t k = 0; k + 1 < chain.size(); ++k) {
      if (!approx_rel(chain[k], chain[k + 1]).holds || !approx_rel(chain[k], elems[f]).holds) {
        fail(rep.first_countable, "first countable", {elems[f]});
      }
    }
    for (std::size_t g = 0; g < n; ++g) {
      if (!rel[g][f]) {
        continue;
      }
      bool const reached = std::any_of(chain.begin(), chain.end(), [&](auto const& c) {
        return approx_rel(elems[g], c).holds;
      });
      if (!reached) {
        fail(rep.first_countable, "first countable", {elems[g], elems[f]});
      }
    }
  }
  return rep;
}

Rational find_delta_add(PositiveElement const& a, PositiveElement const& b, Rational const& eps) {
  require_same(a, b);
  require_positive(eps);
  std::optional<Rational> delta;
  for (std::size_t x = 0; x < a.size(); ++x) {
    Rational const left = positive_part(a[x] - eps) + positive_part(b[x] - eps);
    if (left > 0) {
      Rational const d = a[x] + b[x] - left;
      delta            = delta ? std::min(*delta, d) : d;
    }
  }
  auto const out = delta.value_or(eps);
  if (!pointwise_leq(cutdown(a, eps) + cutdown(b, eps), cutdown(a + b, out))) {
    throw InternalInconsistency("delta for the sum inequality fails");
  }
  return out;
}

Rational find_delta_split(PositiveElement const& a, PositiveElement const& b,
                          Rational const& eps) {
  require_same(a, b);
  require_positive(eps);
  // Per point the right side is a + b - 2d up to min(a, b), then max(a, b) - d.
  std::optional<Rational> delta;
  for (std::size_t x = 0; x < a.size(); ++x) {
    if (a[x] + b[x] <= eps) {
      continue;
    }
    auto const     lo = std::min(a[x], b[x]);
    Rational const d  = lo * 2 >= eps ? Rational(eps / 2) : Rational(eps - lo);
    delta             = delta ? std::min(*delta, d) : d;
  }
  auto const out = delta.value_or(eps);
  if (!pointwise_leq(cutdown(a + b, eps), cutdown(a, out) + cutdown(b, out))) {
    throw InternalInconsistency("delta for the split inequality fails");
  }
  return out;
}

Rational norm_dist(PositiveElement const& a, PositiveElement const& b) {
  require_same(a, b);
  Rational d(0);
  for (std::size_t x = 0; x < a.size(); ++x) {
    d = std::max(d, Rational(abs(a[x] - b[x])));
  }
  return d;
}

KrReport kr_check(PositiveElement const& a, PositiveElement const& b, Rational const& eps) {
  require_positive(eps);
  auto const d = norm_dist(a, b);
  KrReport   rep{d < eps, false, false, std::nullopt};
  if (!rep.hypothesis) {
    return rep;
  }
  auto const left  = cutdown(a, eps);
  Rational   delta = (eps - d) / 2;
  rep.delta        = delta;
  rep.conclusion   = pointwise_leq(left, b);
  rep.refined      = pointwise_leq(left, cutdown(b, delta)) && norm_dist(a, cutdown(b, delta)) < eps;
  if (!rep.conclusion || !rep.refined) {
    throw InternalInconsistency("cutdown inequality fails within distance eps");
  }
  return rep;
}

PreorderReport natural_vs_cp_preorder(PositiveElement const& a, PositiveElement const& b) {
  require_same(a, b);
  PreorderReport rep{pointwise_leq(a, b), true, std::nullopt};

  // For fixed eps some delta works iff a(x) - eps < b(x) wherever a(x) > eps.
  // That fails exactly for eps in (0, a(x) - b(x)), so the half gaps decide.
  std::vector<Rational> candidates;
  for (std::size_t x = 0; x < a.size(); ++x) {
    if (a[x] > b[x]) {
      candidates.push_back((a[x] - b[x]) / 2);
    }
  }
  std::sort(candidates.begin(), candidates.end(), std::greater<>());
  for (auto const& eps : candidates) {
    auto const left = cutdown(a, eps);
    bool       some = true;
    for (std::size_t x = 0; x < a.size(); ++x) {
      if (left[x] > 0 && left[x] >= b[x]) {
        some = false;
      }
    }
    if (!some) {
      rep.cp          = false;
      rep.eps_witness = eps;
      break;
    }
  }
  if (rep.cp != rep.pointwise) {
    throw InternalInconsistency("Cuntz-Pedersen preorder differs from pointwise order");
  }
  return rep;
}

CpChain cp_chain(PositiveElement const& a, PositiveElement const& b, Rational const& eps) {
  if (!pointwise_leq(a, b)) {
    throw PreconditionError("cp_chain needs a <= b");
  }
  CpChain chain{{cutdown(a, eps), cutdown(b, eps), cutdown(b, eps / 2)}, eps / 2, true};
  for (std::size_t i = 0; i + 1 < chain.terms.size(); ++i) {
    chain.verified = chain.verified && pointwise_leq(chain.terms[i], chain.terms[i + 1]);
  }
  return chain;
}

bool model_natural_leq(PositiveElement const& a, PositiveElement const& b) {
  require_same(a, b);
  // An h << a outside the down-set of b exists iff some point has a(x) > b(x):
  // take h(x) = b(x) there, or a(x) / 2 when b(x) = 0, and 0 elsewhere.
  for (std::size_t x = 0; x < a.size(); ++x) {
    if (a[x] > b[x]) {
      std::vector<Rational> h(a.size());
      h[x] = b[x] > 0 ? b[x] : Rational(a[x] / 2);
      PositiveElement hh(a.model(), std::move(h));
      if (!approx_rel(hh, a).holds || approx_rel(hh, b).holds) {
        throw InternalInconsistency("down-set separator is misplaced");
      }
      return false;
    }
  }
  return true;
}

TraceVector::TraceVector(FinXModel model, std::vector<ExtRational> weights)
    : model_(std::move(model)), weights_(std::move(weights)) {
  if (weights_.size() != model_.size()) {
    throw PreconditionError("trace needs one weight per point");
  }
}

TraceVector TraceVector::point_mass(FinXModel const& m, std::size_t x) {
  if (x >= m.size()) {
    throw PreconditionError("point index out of range");
  }
  std::vector<ExtRational> w(m.size(), ExtRational(0));
  w[x] = ExtRational(1);
  return TraceVector(m, std::move(w));
}

ExtRational trace_eval(TraceVector const& t, PositiveElement const& a) {
  if (!(t.model() == a.model())) {
    throw PreconditionError("trace and element belong to different models");
  }
  ExtRational sum(0);
  for (std::size_t x = 0; x < a.size(); ++x) {
    sum += multiply(t.weights()[x], ExtRational(a[x]), ScalarMode::Upper);
  }
  return sum;
}

namespace {

  // Thresholds strictly below t(f) worth testing.
  std::vector<ExtRational> thresholds_below(ExtRational const& v) {
    if (v.is_zero()) {
      return {};
    }
    if (v.is_infinite()) {
      return {ExtRational(0), ExtRational(1), ExtRational(1000)};
    }
    std::vector<ExtRational> out{ExtRational(0)};
    for (int k = 1; k <= 8; k *= 2) {
      Rational const r = v.finite() - v.finite() / k / 2;
      out.emplace_back(r);
    }
    return out;
  }

  // Some g << f with t(g) > r, by cutdowns of f at eps = m / 2^j.
  bool order_lsc_at(TraceVector const& t, PositiveElement const& f, ExtRational const& r) {
    Rational smallest(0);
    for (std::size_t x = 0; x < f.size(); ++x) {
      if (f[x] > 0 && (smallest == 0 || f[x] < smallest)) {
        smallest = f[x];
      }
    }
    if (smallest == 0) {
      return false;
    }
    Rational eps = smallest / 2;
    for (int j = 0; j < 64; ++j, eps /= 2) {
      auto const g = cutdown(f, eps);
      if (approx_rel(g, f).holds && r < trace_eval(t, g)) {
        return true;
      }
    }
    return false;
  }

  // Some eta such that every h with values in f + {-3eta/4, 0, 3eta/4}
  // (clamped at 0) has t(h) > r.
  bool norm_lsc_at(TraceVector const& t, PositiveElement const& f, ExtRational const& r) {
    auto const n = f.size();
    std::size_t cube = 1;
    for (std::size_t x = 0; x < n; ++x) {
      cube *= 3;
    }
    Rational eta(1);
    for (int j = 0; j < 64; ++j, eta /= 2) {
      bool all = true;
      for (std::size_t code = 0; code < cube && all; ++code) {
        std::vector<Rational> h(n);
        auto                  rest = code;
        for (std::size_t x = 0; x < n; ++x) {
          Rational const off = Rational(static_cast<int>(rest % 3) - 1) * eta * 3 / 4;
          h[x]               = positive_part(f[x] + off);
          rest /= 3;
        }
        all = r < trace_eval(t, PositiveElement(f.model(), std::move(h)));
      }
      if (all) {
        return true;
      }
    }
    return false;
  }

}  // namespace

TraceReport trace_lsc_check(TraceVector const& t, std::vector<PositiveElement> const& samples) {
  TraceReport rep;
  if (!trace_eval(t, PositiveElement::zero(t.model())).is_zero()) {
    rep.hom = false;
  }
  for (auto const& a : samples) {
    for (auto const& b : samples) {
      if (trace_eval(t, a + b) != trace_eval(t, a) + trace_eval(t, b)) {
        rep.hom = false;
      }
    }
    auto const v = trace_eval(t, a);
    for (auto const& r : thresholds_below(v)) {
      bool const order = order_lsc_at(t, a, r);
      bool const norm  = norm_lsc_at(t, a, r);
      if (order != norm) {
        throw InternalInconsistency("order and norm lower semicontinuity disagree");
      }
      rep.order_lsc = rep.order_lsc && order;
      rep.norm_lsc  = rep.norm_lsc && norm;
    }
  }
  return rep;
}

std::optional<std::size_t> separating_point(PositiveElement const& a, PositiveElement const& b) {
  require_same(a, b);
  for (std::size_t x = 0; x < a.size(); ++x) {
    if (a[x] > b[x]) {
      return x;
    }
  }
  return std::nullopt;
}

std::vector<TraceVector> weight_family(FinXModel const& m, std::vector<ExtRational> const& values) {
  if (values.empty()) {
    throw PreconditionError("weight values are empty");
  }
  std::vector<TraceVector> out;
  std::size_t              total = 1;
  for (std::size_t x = 0; x < m.size(); ++x) {
    total *= values.size();
  }
  for (std::size_t code = 0; code < total; ++code) {
    std::vector<ExtRational> w(m.size());
    auto                     rest = code;
    for (auto& v : w) {
      v = values[rest % values.size()];
      rest /= values.size();
    }
    out.emplace_back(m, std::move(w));
  }
  return out;
}

BidualReport bidual_check(FinXModel const& m, std::vector<PositiveElement> const& presented,
                          std::vector<TraceVector> const& family) {
  if (presented.empty()) {
    throw PreconditionError("functional needs at least one evaluation");
  }
  for (auto const& a : presented) {
    if (!(a.model() == m)) {
      throw PreconditionError("presented element belongs to another model");
    }
  }
  auto g = presented.front();
  for (auto const& a : presented) {
    g = join(g, a);
  }

  // The presented functional is the least hom above every evaluation: on a
  // point mass it is the largest a_i(x), elsewhere its additive extension.
  auto lambda = [&](TraceVector const& t) {
    ExtRational sum(0);
    for (std::size_t x = 0; x < m.size(); ++x) {
      Rational top(0);
      for (auto const& a : presented) {
        top = std::max(top, a[x]);
      }
      sum += multiply(t.weights()[x], ExtRational(top), ScalarMode::Upper);
    }
    return sum;
  };

  // The hat of J = {f << g}: f ranges independently over {0} and [0, g(x))
  // at each point, so the supremum splits over points. A weight w gives
  // sup of w * v for v < g(x), which is w * g(x), or inf when w = inf.
  auto hat = [&](TraceVector const& t) {
    ExtRational sum(0);
    for (std::size_t x = 0; x < m.size(); ++x) {
      auto const& w = t.weights()[x];
      if (g[x] == 0 || w.is_zero()) {
        continue;
      }
      sum += w.is_infinite() ? ExtRational::infinity() : ExtRational(w.finite() * g[x]);
    }
    return sum;
  };

  BidualReport rep{g, true, 0};
  for (auto const& t : family) {
    if (!(t.model() == m)) {
      throw PreconditionError("trace belongs to another model");
    }
    auto const j = hat(t);
    for (auto const& a : presented) {
      if (j < trace_eval(t, a)) {
        rep.matches = false;
      }
    }
    // Members of J stay below the supremum and cutdowns of g approach it.
    auto const below = trace_eval(t, cutdown(g, Rational(1, 1024)));
    if (!approx_rel(cutdown(g, Rational(1, 1024)), g).holds || j < below) {
      throw InternalInconsistency("cutdown of the generator escapes its ideal");
    }
    rep.matches = rep.matches && j == lambda(t);
    ++rep.traces_checked;
  }
  return rep;
}

}  // namespace predom
