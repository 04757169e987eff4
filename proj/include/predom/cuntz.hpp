#pragma once

// Commutative monoids carrying a predomain relation: preCuntz validation,
// ideal sums and the completion monoid.

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "predom/completion.hpp"
#include "predom/predomain.hpp"

namespace predom {

/// Addition table over a carrier. The constructor checks shape and range
/// only; the monoid laws are reported by validate_precuntz.
class MonoidTable {
 public:
  /// add is row-major: add[a * n + b] = a + b.
  MonoidTable(Carrier carrier, std::size_t zero, std::vector<std::size_t> add);

  /// {0..n} with min(a + b, n).
  static MonoidTable truncated(std::size_t n);

  Carrier const& carrier() const noexcept { return carrier_; }
  std::size_t    size() const noexcept { return carrier_.size(); }
  std::size_t    zero() const noexcept { return zero_; }
  std::size_t    add(std::size_t a, std::size_t b) const { return table_[a * size() + b]; }
  std::vector<std::size_t> const& table() const noexcept { return table_; }

 private:
  Carrier                  carrier_;
  std::size_t              zero_;
  std::vector<std::size_t> table_;
};

struct PreCuntzReport {
  bool commutative  = true;
  bool associative  = true;
  bool has_identity = true;

  PredomainReport axioms;

  bool zero_below_all = true;
  /// a r a' and b r b' give a+b r a'+b'.
  bool additive = true;
  /// c r a+b gives a' r a, b' r b with c r a'+b'.
  bool addition_continuous = true;
  /// + is continuous for the product of c-space topologies. Decided only for
  /// predomains with at most 8 elements.
  std::optional<bool> addition_jointly_continuous;
  /// a r a' gives a+b r a'+b for every b. Not required.
  bool one_sided_additive = true;

  std::optional<std::array<std::size_t, 3>> law_witness;        // (a, b, c)
  std::optional<std::size_t>                zero_witness;       // a with not 0 r a
  std::optional<std::array<std::size_t, 4>> additive_witness;   // (a, a', b, b')
  std::optional<std::array<std::size_t, 3>> continuity_witness; // (a, b, c)
  std::optional<std::array<std::size_t, 3>> one_sided_witness;  // (a, a', b)

  bool monoid() const noexcept { return commutative && associative && has_identity; }
  bool valid() const noexcept {
    return monoid() && axioms.valid() && zero_below_all && additive && addition_continuous;
  }
};

/// Checks the monoid laws, the predomain axioms, additivity and continuity of
/// addition. For additive predomains the pointwise continuity condition and
/// joint continuity of + must agree; a mismatch throws InternalInconsistency.
PreCuntzReport validate_precuntz(MonoidTable const& m, Relation const& r);

/// A validated preCuntz semigroup.
class PreCuntz {
 public:
  /// Throws NotAPreCuntz if validate_precuntz fails.
  PreCuntz(MonoidTable monoid, Relation rel);

  /// TN(n): {0..n}, saturating addition, r = <=.
  static PreCuntz truncated(std::size_t n);

  MonoidTable const& monoid() const noexcept { return monoid_; }
  Predomain const&   predomain() const noexcept { return pd_; }
  std::size_t        size() const noexcept { return monoid_.size(); }

 private:
  MonoidTable monoid_;
  Predomain   pd_;
};

/// Union of the down-sets of a + b for a in i, b in j.
Subset ideal_sum(PreCuntz const& c, Subset const& i, Subset const& j);

/// The round ideal completion with ideal_sum, zero = down-set of 0 and the
/// way-below relation of the completion.
struct CompletionMonoid {
  CompletionPoset poset;
  MonoidTable     monoid;
  std::size_t     size() const noexcept { return poset.size(); }
};

/// Asserts that the result validates as a preCuntz semigroup and that
/// a -> down-set(a) is a monoid homomorphism preserving way-below.
CompletionMonoid completion_monoid(PreCuntz const& c, std::size_t bound = kCompletionBound);

/// A finite poset with a monoid structure on the same carrier.
struct PosetMonoid {
  FinitePoset order;
  MonoidTable monoid;

  /// {0..n} with <= and saturating addition.
  static PosetMonoid truncated(std::size_t n);
};

/// f(0) = 0 and f(a + b) = f(a) + f(b).
bool is_monoid_hom(MonoidTable const& from, MonoidTable const& to, ElementMap const& f);
bool is_monoid_hom(MonoidTable const& from, FnValues const& f);

/// Extension of a continuous monoid homomorphism to the completion, indexed
/// like cc.poset.ideals. Asserts the extension is again a homomorphism.
ElementMap extend_monoid_hom(PreCuntz const& c, CompletionMonoid const& cc,
                             PosetMonoid const& target, ElementMap const& f);
FnValues   extend_monoid_hom(PreCuntz const& c, CompletionMonoid const& cc, FnValues const& f);

/// Every (zero, addition table) on the carrier of p making it a preCuntz
/// semigroup. Exhaustive, so p may have at most 4 elements.
std::vector<MonoidTable> find_compatible_monoids(Predomain const& p);

}  // namespace predom
