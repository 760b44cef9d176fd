#pragma once

#include <map>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "dabru/bruhat.hpp"
#include "dabru/rootsys.hpp"

namespace dabru {

// Word in the affine Coxeter generators s_0, ..., s_rank (0 = affine node).
struct CoxeterElt {
  std::vector<int> word;
};

// Independent classical engine for the affine Weyl group of a finite
// simply-laced system, acting by matrices on affine-root coordinates
// (theta-coords, delta-coeff). Shares only rootsys data with the main
// engine: lengths come from a descent-greedy walk to the identity and the
// order from the lifting-property recursion, not from any daweyl code.
class CoxeterOracle {
 public:
  explicit CoxeterOracle(const std::string& label);

  int num_gens() const { return rank_ + 1; }

  IntMat matrix(const CoxeterElt& e) const;
  int cox_length(const CoxeterElt& e) const;
  bool cox_leq(const CoxeterElt& a, const CoxeterElt& b) const;
  std::vector<int> reduced_word(const CoxeterElt& e) const;

  // All group elements of length <= L, as reduced words, via breadth-first
  // search of the Cayley graph.
  std::vector<CoxeterElt> elements_up_to(int L) const;

  // The corresponding W_T element over the finite ground: generator i >= 1
  // maps to s_{alpha_i[0]} and the affine generator to s_{theta_h[-1]}.
  WP<FiniteGround> identify(const CoxeterElt& e, const FiniteGround& g) const;

 private:
  int length_of_matrix(IntMat m) const;
  bool leq_matrices(const IntMat& a, const IntMat& b) const;
  bool is_descent(const IntMat& m, int i) const;  // m(alpha_i) < 0

  int rank_;
  std::vector<IntMat> gens_;       // (rank+1) x (rank+1)
  std::vector<IntVec> alphas_;     // simple affine roots in these coordinates
  mutable std::map<std::string, bool> leq_memo_;
};

// ---------------------------------------------------------------------------
// Brute-force double-affine oracles (generic over the ground)
// ---------------------------------------------------------------------------

// Certified bounds that any complete Inv^{++} scan must dominate. Every
// member is the x^-1 pullback of a psi-image root theta[m] with theta in the
// candidate set and m in its bounded window, so scanning the pullback grid
// suffices.
template <class G>
std::pair<int, int> brute_inv_pp_bounds(const G& g, const WP<G>& x, const DARoot<G>& c) {
  const auto mu2 = detail::shifted_coweight(g, x, c);
  const WP<G> xi = wp_inverse(g, x);
  int maxR = 0, maxN = 0;
  for (const auto& theta : inv_pp_candidates(g, x, c)) {
    const int bound = std::abs(g.pairing(mu2, theta)) + 2;
    for (int m = -bound; m <= bound; ++m) {
      const auto pulled = da_act(g, xi, DARoot<G>{theta, m});
      if constexpr (std::is_same_v<G, AffineGround>) {
        maxR = std::max(maxR, std::abs(pulled.root.beta.r));
      }
      maxN = std::max(maxN, std::abs(pulled.root.n));
    }
  }
  return {maxR, maxN};
}

// Direct grid scan of the defining conditions of Inv^{++}.
template <class G>
std::vector<DARoot<G>> brute_inv_pp(const G& g, const WP<G>& x, const DARoot<G>& c,
                                    int R, int N) {
  if (!is_up_edge(g, x, c)) throw UsageError("brute_inv_pp: not an up-edge");
  const auto [needR, needN] = brute_inv_pp_bounds(g, x, c);
  if (R < needR || N < needN)
    throw UsageError("brute_inv_pp: bounds below the certified candidate bounds");
  const WP<G> s = da_reflection(g, c);
  std::vector<DARoot<G>> out;
  for (const auto& beta : g.positive_roots_within(R))
    for (int m = -N; m <= N; ++m) {
      const DARoot<G> r{beta, m};
      const SignedDA<G> sr = da_act(g, s, r);
      if (sr.sign >= 0) continue;                 // gamma[m] in Inv(s_beta[n])
      if (da_act(g, x, r).sign <= 0) continue;    // x(gamma[m]) > 0
      if (da_act(g, x, sr.root).sign <= 0) continue;  // x(-s(gamma[m])) > 0
      out.push_back(r);
    }
  detail::sort_da(g, out);
  return out;
}

// All z with x <= z <= y within the given edge budget, certified by leq.
template <class G>
std::vector<WP<G>> brute_interval(const G& g, const WP<G>& x, const WP<G>& y,
                                  int budgetR, int budgetN) {
  if (ell(g, y) - ell(g, x) > 4)
    throw UsageError("brute_interval: length gap exceeds the explosion guard");
  std::vector<WP<G>> out;
  std::set<std::string> seen;
  std::deque<WP<G>> queue;
  if (leq(g, x, y, budgetR, budgetN).verdict != LeqVerdict::Yes) return out;
  queue.push_back(x);
  seen.insert(wp_key(g, x));
  const auto cands = candidate_roots(g, budgetR, budgetN);
  const int cap = ell(g, y);
  while (!queue.empty()) {
    const WP<G> z = queue.front();
    queue.pop_front();
    out.push_back(z);
    for (const auto& t : cands) {
      const auto e = edge(g, z, t);
      if (!e || e->direction != EdgeDir::Up) continue;
      const WP<G> nz = wp_mult(g, z, da_reflection(g, t));
      if (ell(g, nz) > cap) continue;
      const std::string key = wp_key(g, nz);
      if (seen.count(key)) continue;
      if (leq(g, nz, y, budgetR, budgetN).verdict != LeqVerdict::Yes) continue;
      seen.insert(key);
      queue.push_back(nz);
    }
  }
  return out;
}

}  // namespace dabru
