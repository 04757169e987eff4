#include "predom/cuntz.hpp"

#include <algorithm>

#include "predom/error.hpp"

namespace predom {

MonoidTable::MonoidTable(Carrier carrier, std::size_t zero, std::vector<std::size_t> add)
    : carrier_(std::move(carrier)), zero_(zero), table_(std::move(add)) {
  auto const n = carrier_.size();
  if (zero_ >= n) {
    throw PreconditionError("zero is not an element");
  }
  if (table_.size() != n * n) {
    throw PreconditionError("addition table has the wrong shape");
  }
  for (auto v : table_) {
    if (v >= n) {
      throw PreconditionError("addition table entry out of range");
    }
  }
}

MonoidTable MonoidTable::truncated(std::size_t n) {
  std::vector<std::size_t> add((n + 1) * (n + 1));
  for (std::size_t a = 0; a <= n; ++a) {
    for (std::size_t b = 0; b <= n; ++b) {
      add[a * (n + 1) + b] = std::min(a + b, n);
    }
  }
  return MonoidTable(Carrier::numbered(n + 1), 0, std::move(add));
}

PreCuntzReport validate_precuntz(MonoidTable const& m, Relation const& r) {
  auto const n = m.size();
  if (r.size() != n) {
    throw PreconditionError("relation and monoid carriers differ");
  }
  PreCuntzReport rep;

  for (std::size_t a = 0; a < n; ++a) {
    if (m.add(m.zero(), a) != a) {
      rep.has_identity = false;
      rep.law_witness  = rep.law_witness.value_or(std::array{m.zero(), a, a});
    }
    for (std::size_t b = 0; b < n; ++b) {
      if (m.add(a, b) != m.add(b, a)) {
        rep.commutative = false;
        rep.law_witness = rep.law_witness.value_or(std::array{a, b, a});
      }
      for (std::size_t c = 0; c < n && rep.associative; ++c) {
        if (m.add(m.add(a, b), c) != m.add(a, m.add(b, c))) {
          rep.associative = false;
          rep.law_witness = rep.law_witness.value_or(std::array{a, b, c});
        }
      }
    }
  }

  rep.axioms = validate_predomain(r);

  for (std::size_t a = 0; a < n; ++a) {
    if (!r.holds(m.zero(), a)) {
      rep.zero_below_all = false;
      rep.zero_witness   = a;
      break;
    }
  }

  auto const pairs = r.pairs();
  for (auto [a, a2] : pairs) {
    for (auto [b, b2] : pairs) {
      if (rep.additive && !r.holds(m.add(a, b), m.add(a2, b2))) {
        rep.additive         = false;
        rep.additive_witness = {a, a2, b, b2};
      }
    }
    for (std::size_t b = 0; b < n && rep.one_sided_additive; ++b) {
      if (!r.holds(m.add(a, b), m.add(a2, b))) {
        rep.one_sided_additive = false;
        rep.one_sided_witness  = {a, a2, b};
      }
    }
  }

  for (std::size_t a = 0; a < n && rep.addition_continuous; ++a) {
    for (std::size_t b = 0; b < n && rep.addition_continuous; ++b) {
      for (auto c : r.preimage(m.add(a, b)).elements()) {
        bool found = false;
        for (auto a2 : r.preimage(a).elements()) {
          for (auto b2 : r.preimage(b).elements()) {
            if (r.holds(c, m.add(a2, b2))) {
              found = true;
              break;
            }
          }
          if (found) {
            break;
          }
        }
        if (!found) {
          rep.addition_continuous = false;
          rep.continuity_witness  = {a, b, c};
          break;
        }
      }
    }
  }

  if (rep.axioms.valid() && n * n <= kMaxCarrierSize) {
    auto const t = cspace_topology(Predomain::numbered(r));
    rep.addition_jointly_continuous = check_joint_continuity(t, t, t, m.table());
    if (rep.additive && *rep.addition_jointly_continuous != rep.addition_continuous) {
      throw InternalInconsistency(
          "continuity of addition disagrees with joint continuity on an additive predomain");
    }
  }
  return rep;
}

PreCuntz::PreCuntz(MonoidTable monoid, Relation rel)
    : monoid_(std::move(monoid)), pd_(monoid_.carrier(), rel) {
  if (!validate_precuntz(monoid_, pd_.rel()).valid()) {
    throw NotAPreCuntz("not a preCuntz semigroup");
  }
}

PreCuntz PreCuntz::truncated(std::size_t n) {
  Relation leq(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    for (std::size_t j = i; j <= n; ++j) {
      leq.set(i, j);
    }
  }
  return PreCuntz(MonoidTable::truncated(n), std::move(leq));
}

Subset ideal_sum(PreCuntz const& c, Subset const& i, Subset const& j) {
  auto const& r = c.predomain().rel();
  if (!is_round_ideal(r, i) || !is_round_ideal(r, j)) {
    throw PreconditionError("summands must be round ideals");
  }
  Subset out(c.size());
  for (auto a : i.elements()) {
    for (auto b : j.elements()) {
      out = out | r.preimage(c.monoid().add(a, b));
    }
  }
  if (!is_round_ideal(r, out)) {
    throw InternalInconsistency("sum of round ideals is not a round ideal");
  }
  return out;
}

CompletionMonoid completion_monoid(PreCuntz const& c, std::size_t bound) {
  auto const& p    = c.predomain();
  auto        poset = enumerate_round_ideals(p, bound);
  auto const  k    = poset.size();

  std::vector<std::size_t> add(k * k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      add[i * k + j] = poset.index_of(ideal_sum(c, poset.ideals[i], poset.ideals[j]));
    }
  }
  auto const  zero = poset.index_of(principal_ideal(p, c.monoid().zero()));
  MonoidTable monoid(FinitePoset::of_completion(p, poset).carrier(), zero, std::move(add));

  if (!validate_precuntz(monoid, poset.waybelow).valid()) {
    throw InternalInconsistency("completion is not a preCuntz semigroup");
  }
  auto const& m = c.monoid();
  for (std::size_t a = 0; a < c.size(); ++a) {
    auto const ia = poset.index_of(principal_ideal(p, a));
    for (std::size_t b = 0; b < c.size(); ++b) {
      auto const ib = poset.index_of(principal_ideal(p, b));
      if (poset.index_of(principal_ideal(p, m.add(a, b))) != monoid.add(ia, ib)) {
        throw InternalInconsistency("down-set map is not additive");
      }
      if (p.rel().holds(a, b) && !poset.waybelow.holds(ia, ib)) {
        throw InternalInconsistency("down-set map does not preserve way-below");
      }
    }
  }
  return CompletionMonoid{std::move(poset), std::move(monoid)};
}

PosetMonoid PosetMonoid::truncated(std::size_t n) {
  auto leq = Relation(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    for (std::size_t j = i; j <= n; ++j) {
      leq.set(i, j);
    }
  }
  return PosetMonoid{FinitePoset(Carrier::numbered(n + 1), std::move(leq)),
                     MonoidTable::truncated(n)};
}

bool is_monoid_hom(MonoidTable const& from, MonoidTable const& to, ElementMap const& f) {
  if (f.size() != from.size()) {
    throw PreconditionError("map is not total on its domain");
  }
  if (f[from.zero()] != to.zero()) {
    return false;
  }
  for (std::size_t a = 0; a < from.size(); ++a) {
    for (std::size_t b = 0; b < from.size(); ++b) {
      if (f[from.add(a, b)] != to.add(f[a], f[b])) {
        return false;
      }
    }
  }
  return true;
}

bool is_monoid_hom(MonoidTable const& from, FnValues const& f) {
  if (f.size() != from.size()) {
    throw PreconditionError("function is not total on the monoid");
  }
  if (!f[from.zero()].is_zero()) {
    return false;
  }
  for (std::size_t a = 0; a < from.size(); ++a) {
    for (std::size_t b = 0; b < from.size(); ++b) {
      if (f[from.add(a, b)] != f[a] + f[b]) {
        return false;
      }
    }
  }
  return true;
}

ElementMap extend_monoid_hom(PreCuntz const& c, CompletionMonoid const& cc,
                             PosetMonoid const& target, ElementMap const& f) {
  if (!is_monoid_hom(c.monoid(), target.monoid, f)) {
    throw PreconditionError("map is not a monoid homomorphism");
  }
  auto ext = extend_continuous(c.predomain(), cc.poset, target.order, f);
  if (!is_monoid_hom(cc.monoid, target.monoid, ext)) {
    throw InternalInconsistency("extension of a homomorphism is not a homomorphism");
  }
  return ext;
}

FnValues extend_monoid_hom(PreCuntz const& c, CompletionMonoid const& cc, FnValues const& f) {
  if (!is_monoid_hom(c.monoid(), f)) {
    throw PreconditionError("function is not a monoid homomorphism");
  }
  auto ext = extend_continuous(c.predomain(), cc.poset, f);
  if (!is_monoid_hom(cc.monoid, ext)) {
    throw InternalInconsistency("extension of a homomorphism is not a homomorphism");
  }
  return ext;
}

std::vector<MonoidTable> find_compatible_monoids(Predomain const& p) {
  auto const n = p.size();
  if (n > 4) {
    throw BoundExceeded("monoid search is limited to 4 elements");
  }
  std::vector<MonoidTable> found;
  for (std::size_t zero = 0; zero < n; ++zero) {
    if (p.rel().image(zero) != Subset::full(n)) {
      continue;
    }
    std::vector<std::pair<std::size_t, std::size_t>> free;
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = a; b < n; ++b) {
        if (a != zero && b != zero) {
          free.emplace_back(a, b);
        }
      }
    }
    std::size_t total = 1;
    for (std::size_t i = 0; i < free.size(); ++i) {
      total *= n;
    }
    for (std::size_t code = 0; code < total; ++code) {
      std::vector<std::size_t> add(n * n);
      for (std::size_t a = 0; a < n; ++a) {
        add[zero * n + a] = a;
        add[a * n + zero] = a;
      }
      auto rest = code;
      for (auto [a, b] : free) {
        add[a * n + b] = rest % n;
        add[b * n + a] = rest % n;
        rest /= n;
      }
      MonoidTable m(p.carrier(), zero, std::move(add));
      if (validate_precuntz(m, p.rel()).valid()) {
        found.push_back(std::move(m));
      }
    }
  }
  return found;
}

}  // namespace predom
