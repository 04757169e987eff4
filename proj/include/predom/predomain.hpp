#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "predom/order_core.hpp"

namespace predom {

/// A carrier with a transitive relation satisfying finite interpolation:
/// whenever every member of a finite F is related to c, some b has F r b r c.
/// The constructor checks the axioms (transitivity, IP0 and IP2) and throws
/// NotAPredomain on failure, so every instance is validated.
class Predomain {
 public:
  Predomain(Carrier carrier, Relation rel);

  /// Carrier labelled "0".."n-1".
  static Predomain numbered(Relation rel);

  Carrier const&  carrier() const noexcept { return carrier_; }
  Relation const& rel() const noexcept { return rel_; }
  std::size_t     size() const noexcept { return carrier_.size(); }

 private:
  Carrier  carrier_;
  Relation rel_;
};

/// Axiom report. Witness fields are set exactly when the matching flag is false.
struct PredomainReport {
  bool trans   = true;
  bool ip0     = true;
  bool ip1     = true;
  bool ip2     = true;
  bool ip_full = true;

  std::optional<std::array<std::size_t, 3>> trans_witness;  // a r b r c, not a r c
  std::optional<std::size_t>                ip0_witness;    // nothing below c
  std::optional<std::pair<std::size_t, std::size_t>> ip1_witness;  // (a, c)
  std::optional<std::array<std::size_t, 3>> ip2_witness;    // (a1, a2, c)
  std::optional<std::pair<Subset, std::size_t>> ip_full_witness;  // (F, c)

  bool valid() const noexcept { return trans && ip_full; }
};

/// Subsets F of the down-set of some c larger than this are not enumerated.
inline constexpr std::size_t kInterpolationBruteForceBound = 24;

/// Checks every axiom; ip_full is decided by brute force over all finite F
/// below each c. On transitive relations ip_full must equal ip0 && ip2;
/// a mismatch throws InternalInconsistency.
PredomainReport validate_predomain(Relation const& r);

/// {b | b r c} / {a | c r a}
Subset down_set(Relation const& r, std::size_t c);
Subset up_set(Relation const& r, std::size_t c);
Subset down_set(Predomain const& p, std::string_view label);
Subset up_set(Predomain const& p, std::string_view label);

/// a <= a' iff down_set(a) is contained in down_set(a'). Always a preorder.
Relation natural_preorder(Relation const& r);
Relation natural_preorder(Predomain const& p);

/// a r_s b iff some c r b has down_set(a) contained in down_set(c).
Predomain stratify(Predomain const& p);

/// Pairs related by the stratification but not by the original relation,
/// in row-major order. Empty iff p is stratified.
std::vector<std::pair<std::size_t, std::size_t>> stratification_gaps(Predomain const& p);
bool is_stratified(Predomain const& p);

/// Every pair a r b has some b' in q with a r b' r b.
bool is_dense_subset(Relation const& r, Subset const& q);

// ---------------------------------------------------------------------------
// Finite topologies

/// Family of open subsets of {0..n-1}, closed under union and intersection and
/// containing the empty set and the whole space. Opens are sorted by mask.
class FiniteTopology {
 public:
  /// Throws PreconditionError if the family is not a topology.
  FiniteTopology(std::size_t n, std::vector<Subset> opens);

  std::size_t                size() const noexcept { return n_; }
  std::vector<Subset> const& opens() const noexcept { return opens_; }
  bool                       is_open(Subset const& s) const;

  /// Intersection of all opens containing x.
  Subset saturation(std::size_t x) const;
  /// x <= y iff every open containing x contains y.
  Relation specialization_preorder() const;

  friend bool operator==(FiniteTopology const&, FiniteTopology const&) = default;

 private:
  struct Trusted {};
  FiniteTopology(Trusted, std::size_t n, std::vector<Subset> opens)
      : n_(n), opens_(std::move(opens)) {}
  friend FiniteTopology cspace_topology(Predomain const& p);

  std::size_t         n_;
  std::vector<Subset> opens_;
};

/// Carriers beyond this are not filtered subset by subset.
inline constexpr std::size_t kTopologyBound = 16;

/// U is open iff it is closed upward along r and every member has some
/// r-predecessor inside U.
FiniteTopology cspace_topology(Predomain const& p);

/// a r_t b iff some open U satisfies b in U and U inside the saturation of a.
Relation topological_waybelow(FiniteTopology const& t);

/// Every point has a neighbourhood basis of saturations.
bool is_cspace(FiniteTopology const& t);

/// Map given as target index per source index.
using ElementMap = std::vector<std::size_t>;

/// Preimages of opens are open.
bool is_continuous(FiniteTopology const& from, FiniteTopology const& to,
                   ElementMap const& f);

struct MapReport {
  /// Preimages of c-space opens are open.
  bool continuous;
  /// c r f(b) implies some a r b with c r f(a). Necessary for continuity but
  /// not sufficient: preimages must also be closed upward along r.
  bool interpolates;
  bool rel_preserving;  // a r b implies f(a) r f(b)
  bool open_map;        // saturation of f(U) is open for every open U
};

/// Throws InternalInconsistency if a continuous map fails to preserve the
/// natural preorders.
MapReport check_continuous_map(Predomain const& p, Predomain const& q,
                               ElementMap const& f);

/// f on X x Y, indexed x * |Y| + y. True iff f is continuous for the product
/// topology. Requires |X| * |Y| <= 64.
bool check_joint_continuity(FiniteTopology const& x, FiniteTopology const& y,
                            FiniteTopology const& z, ElementMap const& f);

/// Each section x -> f(x, y) and y -> f(x, y) is continuous.
bool check_separate_continuity(FiniteTopology const& x, FiniteTopology const& y,
                               FiniteTopology const& z, ElementMap const& f);

}  // namespace predom
