#pragma once

// Finite carriers, subsets and dense binary relations.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace predom {

/// Largest carrier representable by the bit-set types below.
inline constexpr std::size_t kMaxCarrierSize = 64;

/// Ordered list of distinct, nonempty element labels. Never empty.
class Carrier {
 public:
  explicit Carrier(std::vector<std::string> names);

  /// Elements labelled "0", "1", ..., "n-1".
  static Carrier numbered(std::size_t n);

  std::size_t size() const noexcept { return names_.size(); }
  std::string const& name(std::size_t i) const { return names_.at(i); }
  std::vector<std::string> const& names() const noexcept { return names_; }

  bool contains(std::string_view label) const;
  /// Throws UnknownElement.
  std::size_t index_of(std::string_view label) const;

  friend bool operator==(Carrier const& a, Carrier const& b) {
    return a.names_ == b.names_;
  }

 private:
  std::vector<std::string>                     names_;
  std::unordered_map<std::string, std::size_t> index_;
};

/// A subset of {0, ..., n-1}, one bit per element.
class Subset {
 public:
  Subset() = default;
  explicit Subset(std::size_t n, std::uint64_t mask = 0);
  Subset(std::size_t n, std::initializer_list<std::size_t> members);

  static Subset full(std::size_t n);

  std::size_t   universe() const noexcept { return n_; }
  std::uint64_t mask() const noexcept { return bits_; }
  std::size_t   count() const noexcept;
  bool          empty() const noexcept { return bits_ == 0; }

  bool contains(std::size_t i) const noexcept {
    return i < n_ && ((bits_ >> i) & 1U) != 0;
  }
  void insert(std::size_t i);
  void erase(std::size_t i);

  bool is_subset_of(Subset const& other) const noexcept {
    return (bits_ & ~other.bits_) == 0;
  }

  std::vector<std::size_t> elements() const;

  Subset operator|(Subset const& o) const { return Subset(n_, bits_ | o.bits_); }
  Subset operator&(Subset const& o) const { return Subset(n_, bits_ & o.bits_); }
  Subset operator-(Subset const& o) const { return Subset(n_, bits_ & ~o.bits_); }

  friend bool operator==(Subset const&, Subset const&) = default;
  friend auto operator<=>(Subset const& a, Subset const& b) {
    return a.bits_ <=> b.bits_;
  }

 private:
  std::size_t   n_    = 0;
  std::uint64_t bits_ = 0;
};

std::uint64_t full_mask(std::size_t n);

/// Square truth table over {0, ..., n-1}. Row i is {j | i r j}, column j is
/// {i | i r j}; both are kept so either slice is a single word.
class Relation {
 public:
  Relation() = default;
  explicit Relation(std::size_t n);

  static Relation identity(std::size_t n);
  static Relation full(std::size_t n);
  static Relation from_pairs(std::size_t n,
                             std::vector<std::pair<std::size_t, std::size_t>> const& pairs);
  /// Row-major bit i*n + j encodes (i, j). Requires n*n <= 64.
  static Relation from_code(std::size_t n, std::uint64_t code);

  std::size_t size() const noexcept { return rows_.size(); }

  bool holds(std::size_t i, std::size_t j) const {
    return ((rows_[i] >> j) & 1U) != 0;
  }
  void set(std::size_t i, std::size_t j, bool value = true);

  /// {j | i r j}
  Subset image(std::size_t i) const { return Subset(size(), rows_[i]); }
  /// {i | i r j}
  Subset preimage(std::size_t j) const { return Subset(size(), cols_[j]); }

  std::size_t                                      pair_count() const;
  std::vector<std::pair<std::size_t, std::size_t>> pairs() const;

  bool is_subset_of(Relation const& other) const;
  /// Restriction to the members of `keep`, reindexed in increasing order.
  Relation restricted_to(Subset const& keep) const;

  friend bool operator==(Relation const& a, Relation const& b) {
    return a.rows_ == b.rows_;
  }

 private:
  std::vector<std::uint64_t> rows_;
  std::vector<std::uint64_t> cols_;
};

/// Smallest transitive relation containing r.
Relation transitive_closure(Relation const& r);

struct RelationClass {
  bool transitive;
  bool reflexive;
  bool antisymmetric;
};

RelationClass classify_relation(Relation const& r);

/// d is nonempty and some c in d satisfies x r c for every x in d. For finite
/// d this is the finite-subset definition of directedness (take F = d).
bool is_directed(Relation const& r, Subset const& d);

/// Every x in d has some x' in d_sub with x r x'. Throws PreconditionError
/// when d_sub is not contained in d.
bool is_cofinal(Relation const& r, Subset const& d, Subset const& d_sub);

}  // namespace predom
