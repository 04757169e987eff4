#pragma once

// Shared fixtures and generators for the test binaries.

#include <cstdint>
#include <random>

#include "predom/order_core.hpp"
#include "predom/predomain.hpp"

namespace predom::testing {

inline Relation chain3_rel() {
  return Relation::from_pairs(3, {{0, 0}, {0, 1}, {0, 2}, {1, 1}, {1, 2}});
}

inline Predomain chain3() {
  return Predomain::numbered(chain3_rel());
}

// bot=0 a=1 c=2 b=3
inline Predomain p4() {
  return Predomain(Carrier({"bot", "a", "c", "b"}),
                   Relation::from_pairs(4, {{0, 0}, {0, 1}, {0, 2}, {0, 3}, {2, 2}, {2, 3}}));
}

// Transitive relation on n points: random pairs, closure, random self-loops,
// closure again.
inline Relation random_transitive(std::size_t n, std::mt19937_64& rng) {
  Relation r(n);
  std::bernoulli_distribution edge(1.5 / static_cast<double>(n));
  std::bernoulli_distribution loop(0.5);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && edge(rng)) {
        r.set(i, j);
      }
    }
  }
  r = transitive_closure(r);
  for (std::size_t i = 0; i < n; ++i) {
    if (loop(rng)) {
      r.set(i, i);
    }
  }
  return transitive_closure(r);
}

// A random predomain on n points; falls back to the reflexive closure.
inline Relation random_predomain(std::size_t n, std::mt19937_64& rng) {
  for (int attempt = 0; attempt < 64; ++attempt) {
    auto r = random_transitive(n, rng);
    if (validate_predomain(r).valid()) {
      return r;
    }
  }
  auto r = random_transitive(n, rng);
  for (std::size_t i = 0; i < n; ++i) {
    r.set(i, i);
  }
  return r;
}

// Fast transitivity filter on a row-major code.
inline bool code_is_transitive(std::size_t n, std::uint64_t code) {
  auto const row_mask = (std::uint64_t{1} << n) - 1;
  for (std::size_t a = 0; a < n; ++a) {
    auto const row = (code >> (a * n)) & row_mask;
    for (std::size_t b = 0; b < n; ++b) {
      if (((row >> b) & 1U) != 0) {
        auto const rb = (code >> (b * n)) & row_mask;
        if ((rb & ~row) != 0) {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace predom::testing

#include "predom/funcspace.hpp"

namespace predom::testing {

// {0..n} ordered by <=, the relation of the truncated naturals.
inline Relation tn_rel(std::size_t n) {
  Relation r(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    for (std::size_t j = i; j <= n; ++j) {
      r.set(i, j);
    }
  }
  return r;
}

inline std::vector<ExtRational> small_grid() {
  return {ExtRational(0), ExtRational(1), ExtRational(2), ExtRational::infinity()};
}

// Every function from n points into the grid, as index vectors in base |grid|.
inline std::vector<FnValues> all_functions(std::size_t n, std::vector<ExtRational> const& grid) {
  std::vector<FnValues> out;
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    total *= grid.size();
  }
  out.reserve(total);
  for (std::size_t m = 0; m < total; ++m) {
    FnValues f(n);
    auto     rest = m;
    for (auto& v : f) {
      v = grid[rest % grid.size()];
      rest /= grid.size();
    }
    out.push_back(std::move(f));
  }
  return out;
}

// All validated predomains on 1..max_n points.
inline std::vector<Predomain> all_predomains(std::size_t max_n) {
  std::vector<Predomain> out;
  for (std::size_t n = 1; n <= max_n; ++n) {
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << (n * n)); ++code) {
      if (!code_is_transitive(n, code)) {
        continue;
      }
      auto r = Relation::from_code(n, code);
      if (validate_predomain(r).valid()) {
        out.push_back(Predomain::numbered(r));
      }
    }
  }
  return out;
}

// Alexandrov topology of a preorder: the up-closed sets.
inline FiniteTopology upsets_of(Relation const& preorder) {
  auto const n = preorder.size();
  std::vector<Subset> opens;
  for (std::uint64_t u = 0; u <= full_mask(n); ++u) {
    bool closed = true;
    for (auto x : Subset(n, u).elements()) {
      closed = closed && preorder.image(x).is_subset_of(Subset(n, u));
    }
    if (closed) {
      opens.emplace_back(n, u);
    }
  }
  return FiniteTopology(n, opens);
}

// Every topology on n points; finite topologies are the Alexandrov
// topologies of preorders.
inline std::vector<FiniteTopology> all_topologies(std::size_t n) {
  std::vector<FiniteTopology> out;
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << (n * n)); ++code) {
    auto r = Relation::from_code(n, code);
    auto c = classify_relation(r);
    if (c.transitive && c.reflexive) {
      out.push_back(upsets_of(r));
    }
  }
  return out;
}

}  // namespace predom::testing
