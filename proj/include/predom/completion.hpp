#pragma once

// Round ideals and the round ideal completion of a finite predomain.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "predom/funcspace.hpp"
#include "predom/predomain.hpp"

namespace predom {

/// r-directed and r-downward closed. The empty set is never directed.
bool is_round_ideal(Relation const& r, Subset const& s);

/// Round ideals sorted by member mask, with inclusion and the characterized
/// way-below relation (I << J iff I is inside the down-set of some b in J).
struct CompletionPoset {
  std::vector<Subset> ideals;
  Relation            leq;
  Relation            waybelow;

  std::size_t size() const noexcept { return ideals.size(); }
  /// Throws PreconditionError if s is not one of the ideals.
  std::size_t index_of(Subset const& s) const;
};

inline constexpr std::size_t kCompletionBound = 14;

/// Filters all subsets of the carrier. Asserts that every ideal is the
/// down-set of a self-related generator.
CompletionPoset enumerate_round_ideals(Predomain const& p,
                                       std::size_t bound = kCompletionBound);

Subset principal_ideal(Predomain const& p, std::string_view label);
Subset principal_ideal(Predomain const& p, std::size_t a);

/// "{bot,c}"
std::string ideal_label(Predomain const& p, Subset const& ideal);

/// A finite partially ordered set.
class FinitePoset {
 public:
  /// Throws PreconditionError unless leq is reflexive, transitive and
  /// antisymmetric.
  FinitePoset(Carrier carrier, Relation leq);

  static FinitePoset of_completion(Predomain const& p, CompletionPoset const& c);

  Carrier const&  carrier() const noexcept { return carrier_; }
  Relation const& leq() const noexcept { return leq_; }
  std::size_t     size() const noexcept { return carrier_.size(); }

  /// Least upper bound of s, if any.
  std::optional<std::size_t> sup(Subset const& s) const;

 private:
  Carrier  carrier_;
  Relation leq_;
};

/// x << y iff every directed D with a supremum above y has a member above x.
/// Computed by enumerating all subsets, so the poset must be small.
Relation waybelow_oracle(FinitePoset const& q);
Relation waybelow_oracle(CompletionPoset const& c);

/// How a -> down-set(a) sits inside the completion.
struct EmbeddingReport {
  bool continuous;
  bool rel_preserving;
  /// Ideals agree exactly when the natural preorder identifies the elements.
  bool injective_up_to_preorder;
  /// Every c-space open is the preimage of an open of the completion.
  bool initial;
};

EmbeddingReport check_principal_embedding(Predomain const& p, CompletionPoset const& c);

/// x << y in the extended nonnegative rationals: x = 0 or x < y.
bool ext_waybelow(ExtRational const& x, ExtRational const& y);

/// Extension of an lsc function to the completion: the maximum of f over each
/// ideal, indexed like c.ideals. Throws PreconditionError if f is not lsc.
FnValues extend_continuous(Predomain const& p, CompletionPoset const& c, FnValues const& f);

/// Extension of a map into a finite poset, continuous for the Alexandrov
/// topology of the target: the supremum of f over each ideal.
ElementMap extend_continuous(Predomain const& p, CompletionPoset const& c,
                             FinitePoset const& target, ElementMap const& f);

/// The image of each ideal of p under RI(f), as an index into cq.
ElementMap functor_map(Predomain const& p, CompletionPoset const& cp, Predomain const& q,
                       CompletionPoset const& cq, ElementMap const& f);

}  // namespace predom
