#include "predom/dual_cone.hpp"

#include "predom/error.hpp"

namespace predom {

HomReport check_hom(PreCuntz const& c, FnValues const& f) {
  auto const& m = c.monoid();
  if (f.size() != c.size()) {
    throw PreconditionError("function is not total on the monoid");
  }
  HomReport rep{true, is_monotone(c.predomain(), f), is_lsc(c.predomain(), f), std::nullopt};
  if (!f[m.zero()].is_zero()) {
    rep.hom         = false;
    rep.hom_witness = {m.zero(), m.zero()};
    return rep;
  }
  for (std::size_t a = 0; a < c.size() && rep.hom; ++a) {
    for (std::size_t b = a; b < c.size(); ++b) {
      if (f[m.add(a, b)] != f[a] + f[b]) {
        rep.hom         = false;
        rep.hom_witness = {a, b};
        break;
      }
    }
  }
  return rep;
}

DualPoint::DualPoint(PreCuntz const& c, FnValues f) : f_(std::move(f)) {
  auto const rep = check_hom(c, f_);
  if (!rep.hom || !rep.lsc) {
    throw PreconditionError("not a lower semicontinuous homomorphism");
  }
}

DualPoint env_hom(PreCuntz const& c, FnValues const& gamma) {
  auto const in = check_hom(c, gamma);
  if (!in.hom || !in.monotone) {
    throw PreconditionError("env_hom needs a monotone homomorphism");
  }
  auto       out = env(c.predomain(), gamma);
  auto const rep = check_hom(c, out);
  if (!rep.hom || !rep.lsc || !pointwise_leq(out, gamma)) {
    throw InternalInconsistency("envelope of a monotone hom is not an lsc hom below it");
  }
  return DualPoint(c, std::move(out));
}

std::vector<FnValues> monotone_homs(PreCuntz const& c, std::vector<ExtRational> const& grid) {
  auto const  n     = c.size();
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    total *= grid.size();
    if (total > (std::size_t{1} << 24)) {
      throw BoundExceeded("too many grid functions");
    }
  }
  std::vector<FnValues> out;
  for (std::size_t code = 0; code < total; ++code) {
    FnValues f(n);
    auto     rest = code;
    for (auto& v : f) {
      v = grid[rest % grid.size()];
      rest /= grid.size();
    }
    auto const rep = check_hom(c, f);
    if (rep.hom && rep.monotone) {
      out.push_back(std::move(f));
    }
  }
  return out;
}

std::vector<DualPoint> dual_points(PreCuntz const& c, std::vector<ExtRational> const& grid) {
  std::vector<DualPoint> out;
  for (auto& f : monotone_homs(c, grid)) {
    if (is_lsc(c.predomain(), f)) {
      out.emplace_back(c, std::move(f));
    }
  }
  return out;
}

Evaluation evaluation(PreCuntz const& c, std::size_t x) {
  if (x >= c.size()) {
    throw PreconditionError("element index out of range");
  }
  return Evaluation{x};
}

Evaluation evaluation(PreCuntz const& c, std::string_view label) {
  return Evaluation{c.predomain().carrier().index_of(label)};
}

ExtRational IdealHat::operator()(DualPoint const& phi) const {
  ExtRational best(0);
  for (auto x : ideal.elements()) {
    best = max(best, phi(x));
  }
  return best;
}

IdealHat ideal_hat(PreCuntz const& c, Subset const& j) {
  if (!is_round_ideal(c.predomain().rel(), j)) {
    throw PreconditionError("not a round ideal");
  }
  return IdealHat{j};
}

HatComparison hat_preserves_waybelow_check(PreCuntz const& c, Subset const& i, Subset const& j,
                                           std::vector<DualPoint> const& family) {
  auto const& r = c.predomain().rel();
  if (!is_round_ideal(r, i) || !is_round_ideal(r, j)) {
    throw PreconditionError("not a round ideal");
  }
  bool way = false;
  for (auto b : j.elements()) {
    way = way || i.is_subset_of(r.preimage(b));
  }
  if (!way) {
    throw PreconditionError("ideals are not way-below");
  }
  auto const    ih = ideal_hat(c, i);
  auto const    jh = ideal_hat(c, j);
  HatComparison out{true, {}};
  for (std::size_t k = 0; k < family.size(); ++k) {
    auto const a = ih(family[k]);
    auto const b = jh(family[k]);
    if (b < a) {
      out.below = false;
    } else if (a < b) {
      out.strict.push_back(k);
    }
  }
  return out;
}

HatComparison hat_preserves_waybelow_check(PositiveElement const& f, PositiveElement const& g,
                                           std::vector<TraceVector> const& family) {
  if (!approx_rel(f, g).holds) {
    throw PreconditionError("elements are not way-below");
  }
  HatComparison out{true, {}};
  for (std::size_t k = 0; k < family.size(); ++k) {
    auto const a = trace_eval(family[k], f);
    auto const b = trace_eval(family[k], g);
    if (b < a) {
      out.below = false;
    } else if (a < b) {
      out.strict.push_back(k);
    }
  }
  return out;
}

std::optional<std::pair<std::size_t, std::size_t>> unseparated_pair(
    PreCuntz const& c, std::vector<DualPoint> const& family) {
  auto const leq = natural_preorder(c.predomain());
  for (std::size_t x = 0; x < c.size(); ++x) {
    for (std::size_t y = 0; y < c.size(); ++y) {
      if (leq.holds(x, y)) {
        continue;
      }
      bool separated = false;
      for (auto const& phi : family) {
        separated = separated || phi(y) < phi(x);
      }
      if (!separated) {
        return std::pair{x, y};
      }
    }
  }
  return std::nullopt;
}

bool hat_order_embedding(PreCuntz const& c, std::vector<DualPoint> const& family) {
  auto const ideals = enumerate_round_ideals(c.predomain()).ideals;
  for (auto const& i : ideals) {
    for (auto const& j : ideals) {
      bool below = true;
      for (auto const& phi : family) {
        below = below && !(IdealHat{j}(phi) < IdealHat{i}(phi));
      }
      if (below != i.is_subset_of(j)) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace predom
