#include "predom/completion.hpp"

#include <algorithm>

#include "predom/error.hpp"

namespace predom {

bool is_round_ideal(Relation const& r, Subset const& s) {
  for (auto x : s.elements()) {
    if (!r.preimage(x).is_subset_of(s)) {
      return false;
    }
  }
  return is_directed(r, s);
}

std::size_t CompletionPoset::index_of(Subset const& s) const {
  auto it = std::lower_bound(ideals.begin(), ideals.end(), s);
  if (it == ideals.end() || *it != s) {
    throw PreconditionError("not a round ideal of this completion");
  }
  return static_cast<std::size_t>(it - ideals.begin());
}

CompletionPoset enumerate_round_ideals(Predomain const& p, std::size_t bound) {
  auto const  n = p.size();
  auto const& r = p.rel();
  if (n > bound) {
    throw BoundExceeded("round ideal enumeration is limited to " + std::to_string(bound)
                        + " elements");
  }
  CompletionPoset c;
  for (std::uint64_t m = 1; m <= full_mask(n); ++m) {
    Subset s(n, m);
    if (is_round_ideal(r, s)) {
      c.ideals.push_back(s);
    }
  }

  // On a finite carrier directedness with F = J gives c in J with J r c, so
  // J is the down-set of a self-related c.
  for (auto const& ideal : c.ideals) {
    bool principal = false;
    for (auto g : ideal.elements()) {
      principal = principal || (r.holds(g, g) && r.preimage(g) == ideal);
    }
    if (!principal) {
      throw InternalInconsistency("round ideal without a self-related generator");
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    if (!std::binary_search(c.ideals.begin(), c.ideals.end(), r.preimage(a))) {
      throw InternalInconsistency("principal down-set is not a round ideal");
    }
  }

  auto const k = c.ideals.size();
  c.leq        = Relation(k);
  c.waybelow   = Relation(k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (c.ideals[i].is_subset_of(c.ideals[j])) {
        c.leq.set(i, j);
      }
      for (auto b : c.ideals[j].elements()) {
        if (c.ideals[i].is_subset_of(r.preimage(b))) {
          c.waybelow.set(i, j);
          break;
        }
      }
    }
  }
  return c;
}

Subset principal_ideal(Predomain const& p, std::size_t a) {
  if (a >= p.size()) {
    throw PreconditionError("element index out of range");
  }
  return p.rel().preimage(a);
}

Subset principal_ideal(Predomain const& p, std::string_view label) {
  return principal_ideal(p, p.carrier().index_of(label));
}

std::string ideal_label(Predomain const& p, Subset const& ideal) {
  std::string out = "{";
  bool        first = true;
  for (auto x : ideal.elements()) {
    if (!first) {
      out += ",";
    }
    out += p.carrier().name(x);
    first = false;
  }
  return out + "}";
}

// ---------------------------------------------------------------------------

FinitePoset::FinitePoset(Carrier carrier, Relation leq)
    : carrier_(std::move(carrier)), leq_(std::move(leq)) {
  if (leq_.size() != carrier_.size()) {
    throw PreconditionError("order and carrier sizes differ");
  }
  auto cls = classify_relation(leq_);
  if (!cls.reflexive || !cls.transitive || !cls.antisymmetric) {
    throw PreconditionError("relation is not a partial order");
  }
}

FinitePoset FinitePoset::of_completion(Predomain const& p, CompletionPoset const& c) {
  std::vector<std::string> names;
  for (auto const& ideal : c.ideals) {
    names.push_back(ideal_label(p, ideal));
  }
  return FinitePoset(Carrier(std::move(names)), c.leq);
}

std::optional<std::size_t> FinitePoset::sup(Subset const& s) const {
  auto upper = Subset::full(size());
  for (auto x : s.elements()) {
    upper = upper & leq_.image(x);
  }
  for (auto u : upper.elements()) {
    if (upper.is_subset_of(leq_.image(u))) {
      return u;
    }
  }
  return std::nullopt;
}

Relation waybelow_oracle(FinitePoset const& q) {
  auto const  n   = q.size();
  auto const& leq = q.leq();
  if (n > kTopologyBound) {
    throw BoundExceeded("way-below oracle enumerates all subsets");
  }
  // Collect (member set, supremum) of every directed subset with a supremum.
  std::vector<std::pair<Subset, std::size_t>> directed;
  for (std::uint64_t m = 1; m <= full_mask(n); ++m) {
    Subset d(n, m);
    auto   members = d.elements();
    bool   ok      = true;
    for (std::size_t i = 0; i < members.size() && ok; ++i) {
      for (std::size_t j = i + 1; j < members.size() && ok; ++j) {
        ok = !(leq.image(members[i]) & leq.image(members[j]) & d).empty();
      }
    }
    if (!ok) {
      continue;
    }
    if (auto s = q.sup(d)) {
      directed.emplace_back(d, *s);
    }
  }
  Relation out(n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      bool way = true;
      for (auto const& [d, s] : directed) {
        if (leq.holds(y, s) && (leq.image(x) & d).empty()) {
          way = false;
          break;
        }
      }
      if (way) {
        out.set(x, y);
      }
    }
  }
  return out;
}

Relation waybelow_oracle(CompletionPoset const& c) {
  return waybelow_oracle(FinitePoset(Carrier::numbered(c.size()), c.leq));
}

EmbeddingReport check_principal_embedding(Predomain const& p, CompletionPoset const& c) {
  auto const n = p.size();
  auto       q = Predomain(FinitePoset::of_completion(p, c).carrier(), c.waybelow);
  ElementMap f(n);
  for (std::size_t a = 0; a < n; ++a) {
    f[a] = c.index_of(principal_ideal(p, a));
  }
  auto const      maps = check_continuous_map(p, q, f);
  EmbeddingReport rep{maps.continuous, maps.rel_preserving, true, true};

  auto const leq = natural_preorder(p);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      bool const equivalent = leq.holds(a, b) && leq.holds(b, a);
      if ((f[a] == f[b]) != equivalent) {
        rep.injective_up_to_preorder = false;
      }
    }
  }

  auto const tp = cspace_topology(p);
  auto const tq = cspace_topology(q);
  for (auto const& u : tp.opens()) {
    bool found = false;
    for (auto const& v : tq.opens()) {
      Subset pre(n);
      for (std::size_t a = 0; a < n; ++a) {
        if (v.contains(f[a])) {
          pre.insert(a);
        }
      }
      if (pre == u) {
        found = true;
        break;
      }
    }
    if (!found) {
      rep.initial = false;
      break;
    }
  }
  return rep;
}

bool ext_waybelow(ExtRational const& x, ExtRational const& y) {
  return x.is_zero() || x < y;
}

FnValues extend_continuous(Predomain const& p, CompletionPoset const& c, FnValues const& f) {
  if (!is_lsc(p, f)) {
    throw PreconditionError("extension needs a lower semicontinuous function");
  }
  FnValues ext(c.size());
  for (std::size_t j = 0; j < c.size(); ++j) {
    ExtRational best(0);
    for (auto a : c.ideals[j].elements()) {
      best = max(best, f[a]);
    }
    ext[j] = best;
  }

  for (std::size_t a = 0; a < p.size(); ++a) {
    if (ext[c.index_of(principal_ideal(p, a))] != f[a]) {
      throw InternalInconsistency("extension does not restrict to f");
    }
  }
  for (auto [i, j] : c.leq.pairs()) {
    if (ext[j] < ext[i]) {
      throw InternalInconsistency("extension is not monotone");
    }
  }
  bool f_keeps = true;
  for (auto [a, b] : p.rel().pairs()) {
    f_keeps = f_keeps && ext_waybelow(f[a], f[b]);
  }
  bool ext_keeps = true;
  for (auto [i, j] : c.waybelow.pairs()) {
    ext_keeps = ext_keeps && ext_waybelow(ext[i], ext[j]);
  }
  if (f_keeps != ext_keeps) {
    throw InternalInconsistency("extension preserves way-below differently from f");
  }
  return ext;
}

ElementMap extend_continuous(Predomain const& p, CompletionPoset const& c,
                             FinitePoset const& target, ElementMap const& f) {
  if (f.size() != p.size()) {
    throw PreconditionError("map is not total on its domain");
  }
  auto const topo = cspace_topology(p);
  for (std::size_t y = 0; y < target.size(); ++y) {
    Subset pre(p.size());
    for (std::size_t a = 0; a < p.size(); ++a) {
      if (f[a] >= target.size()) {
        throw PreconditionError("map target out of range");
      }
      if (target.leq().holds(y, f[a])) {
        pre.insert(a);
      }
    }
    if (!topo.is_open(pre)) {
      throw PreconditionError("map is not continuous");
    }
  }

  ElementMap ext(c.size());
  for (std::size_t j = 0; j < c.size(); ++j) {
    Subset image(target.size());
    for (auto a : c.ideals[j].elements()) {
      image.insert(f[a]);
    }
    auto s = target.sup(image);
    if (!s) {
      throw InternalInconsistency("image of a round ideal has no supremum");
    }
    ext[j] = *s;
  }

  for (std::size_t a = 0; a < p.size(); ++a) {
    if (ext[c.index_of(principal_ideal(p, a))] != f[a]) {
      throw InternalInconsistency("extension does not restrict to f");
    }
  }
  for (auto [i, j] : c.leq.pairs()) {
    if (!target.leq().holds(ext[i], ext[j])) {
      throw InternalInconsistency("extension is not monotone");
    }
  }
  auto const way       = waybelow_oracle(target);
  bool       f_keeps   = true;
  bool       ext_keeps = true;
  for (auto [a, b] : p.rel().pairs()) {
    f_keeps = f_keeps && way.holds(f[a], f[b]);
  }
  for (auto [i, j] : c.waybelow.pairs()) {
    ext_keeps = ext_keeps && way.holds(ext[i], ext[j]);
  }
  if (f_keeps != ext_keeps) {
    throw InternalInconsistency("extension preserves way-below differently from f");
  }
  return ext;
}

ElementMap functor_map(Predomain const& p, CompletionPoset const& cp, Predomain const& q,
                       CompletionPoset const& cq, ElementMap const& f) {
  if (!check_continuous_map(p, q, f).continuous) {
    throw PreconditionError("map is not continuous");
  }
  ElementMap out(cp.size());
  for (std::size_t j = 0; j < cp.size(); ++j) {
    Subset image(q.size());
    for (auto a : cp.ideals[j].elements()) {
      image = image | q.rel().preimage(f[a]);
    }
    if (!is_round_ideal(q.rel(), image)) {
      throw InternalInconsistency("image of a round ideal is not a round ideal");
    }
    out[j] = cq.index_of(image);
  }
  for (std::size_t a = 0; a < p.size(); ++a) {
    if (cq.ideals[out[cp.index_of(principal_ideal(p, a))]] != principal_ideal(q, f[a])) {
      throw InternalInconsistency("RI(f) does not commute with principal ideals");
    }
  }
  return out;
}

}  // namespace predom
