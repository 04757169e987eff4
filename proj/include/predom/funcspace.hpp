#pragma once

// Extended-rational valued functions on a finite predomain: monotone and
// lower semicontinuous functions, the envelope operator and its adjoint,
// subbasic opens of the upper and lower topologies, separation, and
// convergence of eventually constant sequences.

#include <cstddef>
#include <utility>
#include <vector>

#include "predom/predomain.hpp"
#include "predom/rational.hpp"

namespace predom {

/// One value per carrier element, in carrier order.
using FnValues = std::vector<ExtRational>;

FnValues constant_fn(std::size_t n, ExtRational const& v);
FnValues pointwise_sup(FnValues const& f, FnValues const& g);
FnValues pointwise_inf(FnValues const& f, FnValues const& g);
FnValues pointwise_sum(FnValues const& f, FnValues const& g);
FnValues scale(ExtRational const& q, FnValues const& f, ScalarMode mode);
bool     pointwise_leq(FnValues const& f, FnValues const& g);

/// x r y implies f(x) <= f(y).
bool is_rel_monotone(Predomain const& p, FnValues const& f);
/// Monotone for the natural preorder.
bool is_monotone(Predomain const& p, FnValues const& f);

/// r-monotone and f(x) = max over z r x of f(z).
bool is_lsc(Predomain const& p, FnValues const& f);
/// Every preimage of ]r, inf] is open in the c-space topology, for r = 0 and
/// every finite value of f. Enumerates the topology, so n <= 16.
bool is_lsc_by_preimages(Predomain const& p, FnValues const& f);

/// env(g)(x) = max over y r x of g(y). Requires g r-monotone.
FnValues env(Predomain const& p, FnValues const& g);

/// Largest monotone g with env(g) <= f: the greatest monotone minorant of
/// h(y) = min over z with y r z of f(z), where the empty minimum is inf.
/// Requires f lsc.
FnValues adjoint_alpha(Predomain const& p, FnValues const& f);

/// f in V(x, r) iff f(x) > r.
bool in_V(FnValues const& f, std::size_t x, ExtRational const& r);
/// f in W(y, r) iff f(x) < r for some x with y r x.
bool in_W(Predomain const& p, FnValues const& f, std::size_t y, ExtRational const& r);

struct Separation {
  std::size_t y;
  ExtRational r;
};

/// For lsc f, h with f not below h: (y, r) such that f is in V(y, r), h is in
/// W(y, r) and no r-monotone function lies in both.
Separation separate(Predomain const& p, FnValues const& f, FnValues const& h);

/// Finitely many terms followed by one value repeated forever.
struct TailSequence {
  std::vector<FnValues> prefix;
  FnValues              tail;
};

/// f(x) <= liminf of the sequence at x, for every x.
bool converges_up(Predomain const& p, TailSequence const& seq, FnValues const& f);
/// limsup of the sequence at y <= f(x) whenever y r x.
bool converges_lo(Predomain const& p, TailSequence const& seq, FnValues const& f);
/// Both of the above.
bool converges_interval(Predomain const& p, TailSequence const& seq, FnValues const& f);

}  // namespace predom
