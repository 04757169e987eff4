#include "predom/order_core.hpp"

#include <bit>

#include "predom/error.hpp"

namespace predom {

Carrier::Carrier(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.empty()) {
    throw PreconditionError("a carrier needs at least one element");
  }
  if (names_.size() > kMaxCarrierSize) {
    throw BoundExceeded("carriers are limited to "
                        + std::to_string(kMaxCarrierSize) + " elements");
  }
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i].empty()) {
      throw PreconditionError("element labels must be nonempty");
    }
    if (!index_.emplace(names_[i], i).second) {
      throw PreconditionError("duplicate element label '" + names_[i] + "'");
    }
  }
}

Carrier Carrier::numbered(std::size_t n) {
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back(std::to_string(i));
  }
  return Carrier(std::move(names));
}

bool Carrier::contains(std::string_view label) const {
  return index_.find(std::string(label)) != index_.end();
}

std::size_t Carrier::index_of(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) {
    throw UnknownElement(std::string(label));
  }
  return it->second;
}

std::uint64_t full_mask(std::size_t n) {
  return n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
}

Subset::Subset(std::size_t n, std::uint64_t mask) : n_(n), bits_(mask) {
  if (n > kMaxCarrierSize) {
    throw BoundExceeded("subset universe too large");
  }
  if ((mask & ~full_mask(n)) != 0) {
    throw PreconditionError("subset mask has bits outside its universe");
  }
}

Subset::Subset(std::size_t n, std::initializer_list<std::size_t> members)
    : Subset(n) {
  for (auto i : members) {
    insert(i);
  }
}

Subset Subset::full(std::size_t n) {
  return Subset(n, full_mask(n));
}

std::size_t Subset::count() const noexcept {
  return static_cast<std::size_t>(std::popcount(bits_));
}

void Subset::insert(std::size_t i) {
  if (i >= n_) {
    throw PreconditionError("subset member out of range");
  }
  bits_ |= std::uint64_t{1} << i;
}

void Subset::erase(std::size_t i) {
  if (i < n_) {
    bits_ &= ~(std::uint64_t{1} << i);
  }
}

std::vector<std::size_t> Subset::elements() const {
  std::vector<std::size_t> out;
  for (auto m = bits_; m != 0; m &= m - 1) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(m)));
  }
  return out;
}

Relation::Relation(std::size_t n) : rows_(n, 0), cols_(n, 0) {
  if (n > kMaxCarrierSize) {
    throw BoundExceeded("relation carrier too large");
  }
}

Relation Relation::identity(std::size_t n) {
  Relation r(n);
  for (std::size_t i = 0; i < n; ++i) {
    r.set(i, i);
  }
  return r;
}

Relation Relation::full(std::size_t n) {
  Relation r(n);
  for (std::size_t i = 0; i < n; ++i) {
    r.rows_[i] = full_mask(n);
    r.cols_[i] = full_mask(n);
  }
  return r;
}

Relation Relation::from_pairs(
    std::size_t n, std::vector<std::pair<std::size_t, std::size_t>> const& pairs) {
  Relation r(n);
  for (auto [i, j] : pairs) {
    if (i >= n || j >= n) {
      throw PreconditionError("relation pair out of range");
    }
    r.set(i, j);
  }
  return r;
}

Relation Relation::from_code(std::size_t n, std::uint64_t code) {
  if (n * n > 64) {
    throw BoundExceeded("relation code needs n*n <= 64");
  }
  Relation r(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (((code >> (i * n + j)) & 1U) != 0) {
        r.set(i, j);
      }
    }
  }
  return r;
}

void Relation::set(std::size_t i, std::size_t j, bool value) {
  auto const bj = std::uint64_t{1} << j;
  auto const bi = std::uint64_t{1} << i;
  if (value) {
    rows_[i] |= bj;
    cols_[j] |= bi;
  } else {
    rows_[i] &= ~bj;
    cols_[j] &= ~bi;
  }
}

std::size_t Relation::pair_count() const {
  std::size_t total = 0;
  for (auto row : rows_) {
    total += static_cast<std::size_t>(std::popcount(row));
  }
  return total;
}

std::vector<std::pair<std::size_t, std::size_t>> Relation::pairs() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < size(); ++i) {
    for (auto j : image(i).elements()) {
      out.emplace_back(i, j);
    }
  }
  return out;
}

bool Relation::is_subset_of(Relation const& other) const {
  if (other.size() != size()) {
    return false;
  }
  for (std::size_t i = 0; i < size(); ++i) {
    if ((rows_[i] & ~other.rows_[i]) != 0) {
      return false;
    }
  }
  return true;
}

Relation Relation::restricted_to(Subset const& keep) const {
  auto const members = keep.elements();
  Relation   out(members.size());
  for (std::size_t a = 0; a < members.size(); ++a) {
    for (std::size_t b = 0; b < members.size(); ++b) {
      if (holds(members[a], members[b])) {
        out.set(a, b);
      }
    }
  }
  return out;
}

Relation transitive_closure(Relation const& r) {
  // Warshall: after step k, paths through {0..k} are closed.
  Relation out = r;
  auto const n = r.size();
  for (std::size_t k = 0; k < n; ++k) {
    auto const via = out.image(k);
    for (auto i : out.preimage(k).elements()) {
      for (auto j : (via - out.image(i)).elements()) {
        out.set(i, j);
      }
    }
  }
  return out;
}

RelationClass classify_relation(Relation const& r) {
  RelationClass cls{true, true, true};
  auto const    n = r.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (!r.holds(i, i)) {
      cls.reflexive = false;
    }
    for (auto j : r.image(i).elements()) {
      if (!r.image(j).is_subset_of(r.image(i))) {
        cls.transitive = false;
      }
      if (j != i && r.holds(j, i)) {
        cls.antisymmetric = false;
      }
    }
  }
  return cls;
}

bool is_directed(Relation const& r, Subset const& d) {
  if (d.empty()) {
    return false;
  }
  for (auto c : d.elements()) {
    if (d.is_subset_of(r.preimage(c))) {
      return true;
    }
  }
  return false;
}

bool is_cofinal(Relation const& r, Subset const& d, Subset const& d_sub) {
  if (!d_sub.is_subset_of(d)) {
    throw PreconditionError("cofinal candidate is not a subset of the set");
  }
  for (auto x : d.elements()) {
    if ((r.image(x) & d_sub).empty()) {
      return false;
    }
  }
  return true;
}

}  // namespace predom
