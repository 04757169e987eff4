#include "predom/funcspace.hpp"

#include "predom/error.hpp"

namespace predom {

namespace {

  void require_size(Predomain const& p, FnValues const& f) {
    if (f.size() != p.size()) {
      throw PreconditionError("function is not total on the carrier");
    }
  }

  void require_same(FnValues const& f, FnValues const& g) {
    if (f.size() != g.size()) {
      throw PreconditionError("functions live on different carriers");
    }
  }

  // Maximum of f over a nonempty set.
  ExtRational max_over(FnValues const& f, Subset const& s) {
    ExtRational best(0);
    for (auto z : s.elements()) {
      best = max(best, f[z]);
    }
    return best;
  }

}  // namespace

FnValues constant_fn(std::size_t n, ExtRational const& v) {
  return FnValues(n, v);
}

FnValues pointwise_sup(FnValues const& f, FnValues const& g) {
  require_same(f, g);
  FnValues out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    out[i] = max(f[i], g[i]);
  }
  return out;
}

FnValues pointwise_inf(FnValues const& f, FnValues const& g) {
  require_same(f, g);
  FnValues out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    out[i] = min(f[i], g[i]);
  }
  return out;
}

FnValues pointwise_sum(FnValues const& f, FnValues const& g) {
  require_same(f, g);
  FnValues out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    out[i] = f[i] + g[i];
  }
  return out;
}

FnValues scale(ExtRational const& q, FnValues const& f, ScalarMode mode) {
  FnValues out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    out[i] = multiply(q, f[i], mode);
  }
  return out;
}

bool pointwise_leq(FnValues const& f, FnValues const& g) {
  require_same(f, g);
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (g[i] < f[i]) {
      return false;
    }
  }
  return true;
}

bool is_rel_monotone(Predomain const& p, FnValues const& f) {
  require_size(p, f);
  for (auto [x, y] : p.rel().pairs()) {
    if (f[y] < f[x]) {
      return false;
    }
  }
  return true;
}

bool is_monotone(Predomain const& p, FnValues const& f) {
  require_size(p, f);
  for (auto [x, y] : natural_preorder(p).pairs()) {
    if (f[y] < f[x]) {
      return false;
    }
  }
  return true;
}

bool is_lsc(Predomain const& p, FnValues const& f) {
  if (!is_rel_monotone(p, f)) {
    return false;
  }
  for (std::size_t x = 0; x < p.size(); ++x) {
    if (max_over(f, p.rel().preimage(x)) != f[x]) {
      return false;
    }
  }
  return true;
}

bool is_lsc_by_preimages(Predomain const& p, FnValues const& f) {
  require_size(p, f);
  auto const          topo = cspace_topology(p);
  std::vector<Rational> thresholds{Rational(0)};
  for (auto const& v : f) {
    if (v.is_finite()) {
      thresholds.push_back(v.finite());
    }
  }
  for (auto const& r : thresholds) {
    Subset pre(p.size());
    for (std::size_t x = 0; x < p.size(); ++x) {
      if (ExtRational(r) < f[x]) {
        pre.insert(x);
      }
    }
    if (!topo.is_open(pre)) {
      return false;
    }
  }
  return true;
}

FnValues env(Predomain const& p, FnValues const& g) {
  if (!is_rel_monotone(p, g)) {
    throw PreconditionError("env needs a monotone function");
  }
  FnValues out(g.size());
  for (std::size_t x = 0; x < g.size(); ++x) {
    out[x] = max_over(g, p.rel().preimage(x));
  }
  return out;
}

FnValues adjoint_alpha(Predomain const& p, FnValues const& f) {
  if (!is_lsc(p, f)) {
    throw PreconditionError("adjoint_alpha needs a lower semicontinuous function");
  }
  auto const n = p.size();
  FnValues   h(n, ExtRational::infinity());
  for (std::size_t y = 0; y < n; ++y) {
    for (auto z : p.rel().image(y).elements()) {
      h[y] = min(h[y], f[z]);
    }
  }
  auto const leq = natural_preorder(p);
  FnValues   out(n, ExtRational::infinity());
  for (std::size_t y = 0; y < n; ++y) {
    for (auto above : leq.image(y).elements()) {
      out[y] = min(out[y], h[above]);
    }
  }
  return out;
}

bool in_V(FnValues const& f, std::size_t x, ExtRational const& r) {
  return r < f.at(x);
}

bool in_W(Predomain const& p, FnValues const& f, std::size_t y, ExtRational const& r) {
  require_size(p, f);
  for (auto x : p.rel().image(y).elements()) {
    if (f[x] < r) {
      return true;
    }
  }
  return false;
}

Separation separate(Predomain const& p, FnValues const& f, FnValues const& h) {
  if (!is_lsc(p, f) || !is_lsc(p, h)) {
    throw PreconditionError("separate needs lower semicontinuous functions");
  }
  std::size_t x0 = p.size();
  for (std::size_t x = 0; x < p.size(); ++x) {
    if (h[x] < f[x]) {
      x0 = x;
      break;
    }
  }
  if (x0 == p.size()) {
    throw PreconditionError("f <= h, nothing to separate");
  }
  ExtRational const r = f[x0].is_infinite() ? h[x0] + ExtRational(1) : midpoint(f[x0], h[x0]);
  for (auto y : p.rel().preimage(x0).elements()) {
    if (r < f[y]) {
      Separation sep{y, r};
      if (!in_V(f, y, r) || !in_W(p, h, y, r)) {
        throw InternalInconsistency("separating neighbourhoods miss their functions");
      }
      return sep;
    }
  }
  throw InternalInconsistency("lower semicontinuous f has no approximant above r");
}

bool converges_up(Predomain const& p, TailSequence const& seq, FnValues const& f) {
  require_size(p, f);
  require_size(p, seq.tail);
  return pointwise_leq(f, seq.tail);
}

bool converges_lo(Predomain const& p, TailSequence const& seq, FnValues const& f) {
  require_size(p, f);
  require_size(p, seq.tail);
  for (auto [y, x] : p.rel().pairs()) {
    if (f[x] < seq.tail[y]) {
      return false;
    }
  }
  return true;
}

bool converges_interval(Predomain const& p, TailSequence const& seq, FnValues const& f) {
  return converges_up(p, seq, f) && converges_lo(p, seq, f);
}

}  // namespace predom
