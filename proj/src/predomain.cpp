#include "predom/predomain.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "predom/error.hpp"

namespace predom {

namespace {

  // Cheap axiom check used by the constructor: Trans, IP0 and IP2.
  std::optional<std::string> axiom_failure(Relation const& r) {
    auto const n = r.size();
    for (std::size_t a = 0; a < n; ++a) {
      for (auto b : r.image(a).elements()) {
        if (!r.image(b).is_subset_of(r.image(a))) {
          return "relation is not transitive";
        }
      }
    }
    for (std::size_t c = 0; c < n; ++c) {
      auto const below = r.preimage(c);
      if (below.empty()) {
        return "element " + std::to_string(c) + " has nothing below it (IP0)";
      }
      auto const members = below.elements();
      for (std::size_t i = 0; i < members.size(); ++i) {
        for (std::size_t j = i; j < members.size(); ++j) {
          Subset pair(n, {members[i], members[j]});
          bool   found = false;
          for (auto b : members) {
            if (pair.is_subset_of(r.preimage(b))) {
              found = true;
              break;
            }
          }
          if (!found) {
            return "no interpolant for a pair below element " + std::to_string(c)
                   + " (IP2)";
          }
        }
      }
    }
    return std::nullopt;
  }

  bool open_in(Relation const& r, std::uint64_t u) {
    for (auto m = u; m != 0; m &= m - 1) {
      auto const x = static_cast<std::size_t>(std::countr_zero(m));
      if ((r.image(x).mask() & ~u) != 0) {
        return false;
      }
      if ((r.preimage(x).mask() & u) == 0) {
        return false;
      }
    }
    return true;
  }

  std::vector<Subset> all_opens_of(Relation const& r) {
    auto const n = r.size();
    if (n > kTopologyBound) {
      throw BoundExceeded("topology enumeration is limited to "
                          + std::to_string(kTopologyBound) + " elements");
    }
    std::vector<Subset> opens;
    for (std::uint64_t u = 0; u <= full_mask(n); ++u) {
      if (open_in(r, u)) {
        opens.emplace_back(n, u);
      }
    }
    return opens;
  }

  bool contains_sorted(std::vector<Subset> const& v, Subset const& s) {
    return std::binary_search(v.begin(), v.end(), s);
  }

}  // namespace

Predomain::Predomain(Carrier carrier, Relation rel)
    : carrier_(std::move(carrier)), rel_(std::move(rel)) {
  if (rel_.size() != carrier_.size()) {
    throw PreconditionError("relation and carrier sizes differ");
  }
  if (auto why = axiom_failure(rel_)) {
    throw NotAPredomain(*why);
  }
}

Predomain Predomain::numbered(Relation rel) {
  auto n = rel.size();
  return Predomain(Carrier::numbered(n), std::move(rel));
}

PredomainReport validate_predomain(Relation const& r) {
  PredomainReport rep;
  auto const      n = r.size();

  for (std::size_t a = 0; a < n && rep.trans; ++a) {
    for (auto b : r.image(a).elements()) {
      auto missing = r.image(b) - r.image(a);
      if (!missing.empty()) {
        rep.trans         = false;
        rep.trans_witness = {a, b, missing.elements().front()};
        break;
      }
    }
  }

  for (std::size_t c = 0; c < n; ++c) {
    auto const below   = r.preimage(c);
    auto const members = below.elements();
    if (below.empty() && rep.ip0) {
      rep.ip0         = false;
      rep.ip0_witness = c;
    }
    auto interpolates = [&](Subset const& f) {
      for (auto b : members) {
        if (f.is_subset_of(r.preimage(b))) {
          return true;
        }
      }
      return false;
    };
    for (std::size_t i = 0; i < members.size(); ++i) {
      if (rep.ip1 && !interpolates(Subset(n, {members[i]}))) {
        rep.ip1         = false;
        rep.ip1_witness = std::pair{members[i], c};
      }
      for (std::size_t j = i; j < members.size() && rep.ip2; ++j) {
        if (!interpolates(Subset(n, {members[i], members[j]}))) {
          rep.ip2         = false;
          rep.ip2_witness = {members[i], members[j], c};
        }
      }
    }

    if (rep.ip_full) {
      if (below.count() > kInterpolationBruteForceBound) {
        throw BoundExceeded("interpolation brute force is limited to down-sets of "
                            + std::to_string(kInterpolationBruteForceBound)
                            + " elements");
      }
      // Every F with F r c is a subset of the down-set of c, including F = {}.
      auto const   full = below.mask();
      std::uint64_t f   = 0;
      while (true) {
        if (!interpolates(Subset(n, f))) {
          rep.ip_full         = false;
          rep.ip_full_witness = std::pair{Subset(n, f), c};
          break;
        }
        if (f == full) {
          break;
        }
        f = (f - full) & full;  // next submask in increasing order
      }
    }
  }

  if (rep.trans && rep.ip_full != (rep.ip0 && rep.ip2)) {
    throw InternalInconsistency(
        "interpolation by brute force disagrees with IP0 and IP2");
  }
  return rep;
}

Subset down_set(Relation const& r, std::size_t c) {
  return r.preimage(c);
}

Subset up_set(Relation const& r, std::size_t c) {
  return r.image(c);
}

Subset down_set(Predomain const& p, std::string_view label) {
  return down_set(p.rel(), p.carrier().index_of(label));
}

Subset up_set(Predomain const& p, std::string_view label) {
  return up_set(p.rel(), p.carrier().index_of(label));
}

Relation natural_preorder(Relation const& r) {
  auto const n = r.size();
  Relation   out(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (r.preimage(a).is_subset_of(r.preimage(b))) {
        out.set(a, b);
      }
    }
  }
  return out;
}

Relation natural_preorder(Predomain const& p) {
  return natural_preorder(p.rel());
}

Predomain stratify(Predomain const& p) {
  auto const&    r = p.rel();
  auto const     n = r.size();
  Relation const leq = natural_preorder(r);
  Relation       s(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (!(leq.image(a) & r.preimage(b)).empty()) {
        s.set(a, b);
      }
    }
  }
  try {
    return Predomain(p.carrier(), std::move(s));
  } catch (NotAPredomain const& e) {
    throw InternalInconsistency(std::string("stratification is not a predomain: ")
                                + e.what());
  }
}

std::vector<std::pair<std::size_t, std::size_t>> stratification_gaps(Predomain const& p) {
  auto const s = stratify(p);
  std::vector<std::pair<std::size_t, std::size_t>> gaps;
  for (auto [a, b] : s.rel().pairs()) {
    if (!p.rel().holds(a, b)) {
      gaps.emplace_back(a, b);
    }
  }
  return gaps;
}

bool is_stratified(Predomain const& p) {
  return stratification_gaps(p).empty();
}

bool is_dense_subset(Relation const& r, Subset const& q) {
  for (auto [a, c] : r.pairs()) {
    bool found = false;
    for (auto b : q.elements()) {
      if (r.holds(a, b) && r.holds(b, c)) {
        found = true;
        break;
      }
    }
    if (!found) {
      return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------

FiniteTopology::FiniteTopology(std::size_t n, std::vector<Subset> opens)
    : n_(n), opens_(std::move(opens)) {
  std::sort(opens_.begin(), opens_.end());
  opens_.erase(std::unique(opens_.begin(), opens_.end()), opens_.end());
  for (auto const& u : opens_) {
    if (u.universe() != n) {
      throw PreconditionError("open set over the wrong universe");
    }
  }
  if (!contains_sorted(opens_, Subset(n)) || !contains_sorted(opens_, Subset::full(n))) {
    throw PreconditionError("a topology contains the empty set and the space");
  }
  for (std::size_t i = 0; i < opens_.size(); ++i) {
    for (std::size_t j = i + 1; j < opens_.size(); ++j) {
      if (!contains_sorted(opens_, opens_[i] | opens_[j])
          || !contains_sorted(opens_, opens_[i] & opens_[j])) {
        throw PreconditionError("family is not closed under union and intersection");
      }
    }
  }
}

bool FiniteTopology::is_open(Subset const& s) const {
  return contains_sorted(opens_, s);
}

Subset FiniteTopology::saturation(std::size_t x) const {
  auto sat = Subset::full(n_);
  for (auto const& u : opens_) {
    if (u.contains(x)) {
      sat = sat & u;
    }
  }
  return sat;
}

Relation FiniteTopology::specialization_preorder() const {
  Relation out(n_);
  for (std::size_t x = 0; x < n_; ++x) {
    for (auto y : saturation(x).elements()) {
      out.set(x, y);
    }
  }
  return out;
}

FiniteTopology cspace_topology(Predomain const& p) {
  auto const& r     = p.rel();
  auto const  n     = r.size();
  auto        opens = all_opens_of(r);

  // The up-sets of single elements are open and form a basis.
  for (std::size_t x = 0; x < n; ++x) {
    if (!contains_sorted(opens, r.image(x))) {
      throw InternalInconsistency("up-set of an element is not open");
    }
  }
  for (auto const& u : opens) {
    Subset covered(n);
    for (std::size_t x = 0; x < n; ++x) {
      if (r.image(x).is_subset_of(u)) {
        covered = covered | r.image(x);
      }
    }
    if (covered != u) {
      throw InternalInconsistency("element up-sets do not form a basis");
    }
  }

  // Intersections of opens are open by interpolation, so the family is a
  // topology; skip the quadratic closure check of the public constructor.
  Relation spec(n);
  for (std::size_t x = 0; x < n; ++x) {
    auto sat = Subset::full(n);
    for (auto const& u : opens) {
      if (u.contains(x)) {
        sat = sat & u;
      }
    }
    for (auto y : sat.elements()) {
      spec.set(x, y);
    }
  }
  if (spec != natural_preorder(r)) {
    throw InternalInconsistency("specialization preorder differs from natural preorder");
  }
  if (opens.size() <= 1024) {
    return FiniteTopology(n, std::move(opens));
  }
  // Large families are already validated by the basis check above.
  return FiniteTopology(FiniteTopology::Trusted{}, n, std::move(opens));
}

Relation topological_waybelow(FiniteTopology const& t) {
  auto const n = t.size();
  Relation   out(n);
  for (std::size_t a = 0; a < n; ++a) {
    auto const up = t.saturation(a);
    for (auto const& u : t.opens()) {
      if (u.is_subset_of(up)) {
        for (auto b : u.elements()) {
          out.set(a, b);
        }
      }
    }
  }
  return out;
}

bool is_cspace(FiniteTopology const& t) {
  auto const n = t.size();
  std::vector<Subset> sat(n);
  for (std::size_t x = 0; x < n; ++x) {
    sat[x] = t.saturation(x);
  }
  auto neighbourhood_of = [&](Subset const& s, std::size_t b) {
    for (auto const& v : t.opens()) {
      if (v.contains(b) && v.is_subset_of(s)) {
        return true;
      }
    }
    return false;
  };
  for (std::size_t b = 0; b < n; ++b) {
    for (auto const& u : t.opens()) {
      if (!u.contains(b)) {
        continue;
      }
      bool found = false;
      for (std::size_t x = 0; x < n && !found; ++x) {
        found = sat[x].is_subset_of(u) && neighbourhood_of(sat[x], b);
      }
      if (!found) {
        return false;
      }
    }
  }
  return true;
}

bool is_continuous(FiniteTopology const& from, FiniteTopology const& to,
                   ElementMap const& f) {
  if (f.size() != from.size()) {
    throw PreconditionError("map is not total on its domain");
  }
  for (auto const& w : to.opens()) {
    Subset pre(from.size());
    for (std::size_t x = 0; x < f.size(); ++x) {
      if (w.contains(f[x])) {
        pre.insert(x);
      }
    }
    if (!from.is_open(pre)) {
      return false;
    }
  }
  return true;
}

MapReport check_continuous_map(Predomain const& p, Predomain const& q,
                               ElementMap const& f) {
  if (f.size() != p.size()) {
    throw PreconditionError("map is not total on its domain");
  }
  for (auto y : f) {
    if (y >= q.size()) {
      throw PreconditionError("map target out of range");
    }
  }
  auto const& rp = p.rel();
  auto const& rq = q.rel();
  MapReport   rep{true, true, true, true};

  for (std::size_t b = 0; b < p.size() && rep.interpolates; ++b) {
    for (auto c : rq.preimage(f[b]).elements()) {
      bool found = false;
      for (auto a : rp.preimage(b).elements()) {
        if (rq.holds(c, f[a])) {
          found = true;
          break;
        }
      }
      if (!found) {
        rep.interpolates = false;
        break;
      }
    }
  }

  // The up-sets of Q form a basis, so continuity means each preimage of an
  // up-set is open: closed upward along r, plus the interpolation condition.
  bool upward = true;
  for (std::size_t c = 0; c < q.size() && upward; ++c) {
    std::uint64_t pre = 0;
    for (std::size_t x = 0; x < p.size(); ++x) {
      if (rq.holds(c, f[x])) {
        pre |= std::uint64_t{1} << x;
      }
    }
    for (auto m = pre; m != 0 && upward; m &= m - 1) {
      auto const a = static_cast<std::size_t>(std::countr_zero(m));
      upward = (rp.image(a).mask() & ~pre) == 0;
    }
  }
  rep.continuous = upward && rep.interpolates;

  for (auto [a, b] : rp.pairs()) {
    if (!rq.holds(f[a], f[b])) {
      rep.rel_preserving = false;
      break;
    }
  }

  auto const spec_q = natural_preorder(rq);
  for (auto const& u : all_opens_of(rp)) {
    Subset up(q.size());
    for (auto x : u.elements()) {
      up = up | spec_q.image(f[x]);
    }
    if (!open_in(rq, up.mask())) {
      rep.open_map = false;
      break;
    }
  }

  if (rep.continuous) {
    auto const leq_p = natural_preorder(rp);
    for (auto [a, b] : leq_p.pairs()) {
      if (!spec_q.holds(f[a], f[b])) {
        throw InternalInconsistency("continuous map fails to preserve natural preorder");
      }
    }
  }
  return rep;
}

bool check_joint_continuity(FiniteTopology const& x, FiniteTopology const& y,
                            FiniteTopology const& z, ElementMap const& f) {
  auto const nx = x.size();
  auto const ny = y.size();
  if (nx * ny > kMaxCarrierSize) {
    throw BoundExceeded("product space too large");
  }
  if (f.size() != nx * ny) {
    throw PreconditionError("map is not total on the product");
  }
  for (auto const& w : z.opens()) {
    // Preimage of w, as a set of product points.
    std::uint64_t pre = 0;
    for (std::size_t p = 0; p < f.size(); ++p) {
      if (w.contains(f[p])) {
        pre |= std::uint64_t{1} << p;
      }
    }
    for (std::size_t p = 0; p < f.size(); ++p) {
      if (((pre >> p) & 1U) == 0) {
        continue;
      }
      auto const px = p / ny;
      auto const py = p % ny;
      bool       inside = false;
      for (auto const& u : x.opens()) {
        if (!u.contains(px)) {
          continue;
        }
        for (auto const& v : y.opens()) {
          if (!v.contains(py)) {
            continue;
          }
          std::uint64_t rect = 0;
          for (auto i : u.elements()) {
            for (auto j : v.elements()) {
              rect |= std::uint64_t{1} << (i * ny + j);
            }
          }
          if ((rect & ~pre) == 0) {
            inside = true;
            break;
          }
        }
        if (inside) {
          break;
        }
      }
      if (!inside) {
        return false;
      }
    }
  }
  return true;
}

bool check_separate_continuity(FiniteTopology const& x, FiniteTopology const& y,
                               FiniteTopology const& z, ElementMap const& f) {
  auto const nx = x.size();
  auto const ny = y.size();
  if (f.size() != nx * ny) {
    throw PreconditionError("map is not total on the product");
  }
  for (std::size_t j = 0; j < ny; ++j) {
    ElementMap section(nx);
    for (std::size_t i = 0; i < nx; ++i) {
      section[i] = f[i * ny + j];
    }
    if (!is_continuous(x, z, section)) {
      return false;
    }
  }
  for (std::size_t i = 0; i < nx; ++i) {
    ElementMap section(ny);
    for (std::size_t j = 0; j < ny; ++j) {
      section[j] = f[i * ny + j];
    }
    if (!is_continuous(y, z, section)) {
      return false;
    }
  }
  return true;
}

}  // namespace predom
