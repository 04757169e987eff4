#pragma once

// Monoid homomorphisms from a preCuntz semigroup into the extended
// nonnegative rationals: monotone ones (M') and lower semicontinuous ones
// (M*), the envelope retraction M' -> M*, point evaluations and the hats of
// round ideals. M* is infinite, so everything here works on finite families.

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "predom/cstar_model.hpp"
#include "predom/cuntz.hpp"
#include "predom/funcspace.hpp"

namespace predom {

struct HomReport {
  bool hom;
  bool monotone;  // for the natural preorder
  bool lsc;
  /// (a, b) with f(a + b) != f(a) + f(b); (0, 0) when f(0) != 0.
  std::optional<std::array<std::size_t, 2>> hom_witness;
};

HomReport check_hom(PreCuntz const& c, FnValues const& f);

/// A lower semicontinuous monoid homomorphism.
class DualPoint {
 public:
  /// Throws PreconditionError unless f is an lsc hom.
  DualPoint(PreCuntz const& c, FnValues f);

  FnValues const& values() const noexcept { return f_; }
  ExtRational const& operator()(std::size_t x) const { return f_.at(x); }

  friend bool operator==(DualPoint const&, DualPoint const&) = default;

 private:
  FnValues f_;
};

/// env of a monotone hom. Asserts the result is a hom, lsc and below gamma.
DualPoint env_hom(PreCuntz const& c, FnValues const& gamma);

/// Every f with values in grid, f(0) = 0, additive and monotone.
std::vector<FnValues> monotone_homs(PreCuntz const& c, std::vector<ExtRational> const& grid);
/// The lsc ones among monotone_homs.
std::vector<DualPoint> dual_points(PreCuntz const& c, std::vector<ExtRational> const& grid);

/// x-hat: phi -> phi(x).
struct Evaluation {
  std::size_t x;
  ExtRational operator()(DualPoint const& phi) const { return phi(x); }
};
Evaluation evaluation(PreCuntz const& c, std::size_t x);
Evaluation evaluation(PreCuntz const& c, std::string_view label);

/// J-hat: phi -> max of phi over J.
struct IdealHat {
  Subset      ideal;
  ExtRational operator()(DualPoint const& phi) const;
};
/// Throws PreconditionError unless j is a round ideal.
IdealHat ideal_hat(PreCuntz const& c, Subset const& j);

struct HatComparison {
  bool below;  // I-hat <= J-hat on the family
  /// Family members with I-hat < J-hat.
  std::vector<std::size_t> strict;
};

/// Requires i << j in the completion. Compares the hats on the family only;
/// way-below in the bidual is not decided.
HatComparison hat_preserves_waybelow_check(PreCuntz const& c, Subset const& i, Subset const& j,
                                           std::vector<DualPoint> const& family);

/// The model version for the principal ideals below f << g. A trace t gives
/// the hat sup{t(h) | h << f}, which is t(f) with inf * 0 = 0.
HatComparison hat_preserves_waybelow_check(PositiveElement const& f, PositiveElement const& g,
                                           std::vector<TraceVector> const& family);

/// A pair x, y with x not below y in the natural preorder that no member of
/// the family separates by phi(x) > phi(y).
std::optional<std::pair<std::size_t, std::size_t>> unseparated_pair(
    PreCuntz const& c, std::vector<DualPoint> const& family);

/// I subset J iff I-hat <= J-hat on the family, over all round ideals.
bool hat_order_embedding(PreCuntz const& c, std::vector<DualPoint> const& family);

}  // namespace predom
