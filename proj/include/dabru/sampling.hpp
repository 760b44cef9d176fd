#pragma once

#include "dabru/bruhat.hpp"
#include "dabru/rng.hpp"

namespace dabru {

// Random W_T elements and up-edges at desk scale. Kept deliberately small in
// coordinates so that lengths and windows stay tractable.

inline WP<AffineGround> sample_wt(const AffineGround& g, SplitRng& rng) {
  AffCoweight mu;
  mu.nu.resize(g.rank());
  for (int i = 0; i < g.rank(); ++i) mu.nu[i] = rng.next_int(-2, 2);
  mu.level = rng.next_int(1, 2);
  mu.central = rng.next_int(-2, 2);
  AffWeylElt w = g.identity();
  const int len = rng.next_int(0, 5);
  for (int i = 0; i < len; ++i)
    w = g.mult(w, g.simple_reflection(rng.next_int(0, g.rank())));
  return WP<AffineGround>{mu, w};
}

inline WP<FiniteGround> sample_wt(const FiniteGround& g, SplitRng& rng) {
  IntVec mu(g.rank());
  for (int i = 0; i < g.rank(); ++i) mu[i] = rng.next_int(-3, 3);
  FiniteWeylElt w = g.identity();
  const int len = rng.next_int(0, 5);
  for (int i = 0; i < len; ++i)
    w = g.mult(w, g.simple_reflection(rng.next_int(0, g.rank() - 1)));
  return WP<FiniteGround>{mu, w};
}

template <class G>
DARoot<G> sample_da_root(const G& g, SplitRng& rng) {
  const auto roots = g.positive_roots_within(2);
  const auto beta = roots[rng.next_u64() % roots.size()];
  return DARoot<G>{beta, rng.next_int(-3, 3)};
}

// A seeded up-edge (x, gamma): if the sampled pair points downward, the
// reversed pair (x s_gamma, gamma) points upward, so every W_T-compatible
// draw yields an edge.
template <class G>
std::pair<WP<G>, DARoot<G>> sample_up_edge(const G& g, SplitRng& rng,
                                           int max_tries = 1000) {
  for (int t = 0; t < max_tries; ++t) {
    const WP<G> x = sample_wt(g, rng);
    const DARoot<G> c = sample_da_root(g, rng);
    if (!in_WT(g, x)) continue;
    const auto e = edge(g, x, c);
    if (!e) continue;
    if (e->direction == EdgeDir::Up) return {x, c};
    return {wp_mult(g, x, da_reflection(g, c)), c};
  }
  throw InternalError("sample_up_edge: no edge found within retry budget");
}

}  // namespace dabru
