#pragma once

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "dabru/length.hpp"

namespace dabru {

enum class EdgeDir { Up, Down };

template <class G>
struct Edge {
  WP<G> x;
  DARoot<G> gamma;
  EdgeDir direction = EdgeDir::Up;
};

// Declared relation x <-> x s_gamma; none when x s_gamma leaves W_T.
template <class G>
std::optional<Edge<G>> edge(const G& g, const WP<G>& x, const DARoot<G>& gamma) {
  if (!in_WT(g, x)) throw DomainError("edge: x not in W_T");
  const WP<G> y = wp_mult(g, x, da_reflection(g, gamma));
  if (!in_WT(g, y)) return std::nullopt;
  const int s = da_act(g, x, gamma).sign;
  return Edge<G>{x, gamma, s > 0 ? EdgeDir::Up : EdgeDir::Down};
}

template <class G>
bool is_up_edge(const G& g, const WP<G>& x, const DARoot<G>& gamma) {
  const auto e = edge(g, x, gamma);
  return e && e->direction == EdgeDir::Up;
}

namespace detail {

// mu + n w(beta_vee) — the coweight of x s_{beta[n]}.
template <class G>
typename G::Coweight shifted_coweight(const G& g, const WP<G>& x, const DARoot<G>& c) {
  const auto wb = g.act_root(x.w, c.beta);
  return g.cw_add(x.mu, g.cw_scale(g.coroot(wb), c.n));
}

template <class G>
void sort_da(const G& g, std::vector<DARoot<G>>& v) {
  std::sort(v.begin(), v.end(), [&](const DARoot<G>& a, const DARoot<G>& b) {
    return da_key(g, a) < da_key(g, b);
  });
}

}  // namespace detail

// Candidate finite data for the Inv^{++} enumeration: ground roots theta that
// can support an element of im(psi), per the finiteness argument. Complete by
// construction: theta needs <nu~, theta> < 0, or theta in Inv(s_{w(beta)}),
// or <mu + n w(beta_vee), theta> < 0.
template <class G>
std::vector<typename G::Root> inv_pp_candidates(const G& g, const WP<G>& x,
                                                const DARoot<G>& c) {
  const auto wb = g.act_root(x.w, c.beta);
  const auto swb = g.reflection(wb);
  const auto mu2 = detail::shifted_coweight(g, x, c);
  const auto nu_t = g.act_cw(swb, mu2);  // s_{w(beta)}(mu + n w(beta_vee))

  std::vector<typename G::Root> out;
  std::set<std::string> seen;
  auto add = [&](const typename G::Root& r) {
    if (seen.insert(g.root_key(r)).second) out.push_back(r);
  };
  for (const auto& r : g.neg_pairing_roots(nu_t)) add(r);
  for (const auto& r : g.inv_weyl(swb)) add(r);
  for (const auto& r : g.neg_pairing_roots(mu2)) add(r);
  return out;
}

// Inv^{++}_x(s_{beta[n]}) = {gamma[m] in Inv(s_{beta[n]}) : x(gamma[m]) > 0
// and x(-s_{beta[n]}(gamma[m])) > 0}, enumerated exactly through its psi
// image: theta[m] with s_{beta[n]}x^{-1}(theta[m]) < 0, x^{-1}(theta[m]) > 0,
// x s_{beta[n]} x^{-1}(theta[m]) < 0, pulled back along x^{-1}. The m-window
// per theta is complete because membership in an inversion set confines m to
// an interval with endpoints 0 and <mu + n w(beta_vee), theta>.
template <class G>
std::vector<DARoot<G>> inv_pp(const G& g, const WP<G>& x, const DARoot<G>& c) {
  if (!is_up_edge(g, x, c)) throw UsageError("inv_pp: not an up-edge");
  const WP<G> s = da_reflection(g, c);
  const WP<G> xi = wp_inverse(g, x);
  const WP<G> sxi = wp_mult(g, s, xi);    // s_{beta[n]} w^-1 pi^-mu
  const WP<G> conj = wp_mult(g, x, sxi);  // pi^mu w s_{beta[n]} w^-1 pi^-mu
  const auto mu2 = detail::shifted_coweight(g, x, c);

  std::vector<DARoot<G>> out;
  std::set<std::string> seen;
  for (const auto& theta : inv_pp_candidates(g, x, c)) {
    const int bound = std::abs(g.pairing(mu2, theta)) + 2;
    for (int m = -bound; m <= bound; ++m) {
      const DARoot<G> tm{theta, m};
      if (da_act(g, sxi, tm).sign >= 0) continue;
      if (da_act(g, xi, tm).sign <= 0) continue;
      if (da_act(g, conj, tm).sign >= 0) continue;
      const SignedDA<G> pulled = da_act(g, xi, tm);
      if (seen.insert(da_key(g, pulled.root)).second) out.push_back(pulled.root);
    }
  }
  detail::sort_da(g, out);

  // Sanity: the set is iota-stable and contains beta[n] itself.
  bool has_c = false;
  for (const auto& r : out) {
    const SignedDA<G> img = da_act(g, s, r);
    if (img.sign >= 0) throw InternalError("inv_pp: member not in Inv(s_beta[n])");
    if (!seen.count(da_key(g, img.root)))
      throw InternalError("inv_pp: set not iota-stable");
    if (da_eq(r, c)) has_c = true;
  }
  if (!has_c) throw InternalError("inv_pp: beta[n] missing from its own set");
  return out;
}

// Direct test of the three defining conditions, bypassing enumeration.
template <class G>
bool in_inv_pp(const G& g, const WP<G>& x, const DARoot<G>& c, const DARoot<G>& r) {
  const WP<G> s = da_reflection(g, c);
  const SignedDA<G> sr = da_act(g, s, r);
  if (sr.sign >= 0) return false;
  if (da_act(g, x, r).sign <= 0) return false;
  // x(-s(gamma)) where s(gamma) = -sr.root
  return da_act(g, x, sr.root).sign > 0;
}

// phi: Inv(w^-1 pi^-mu) -> Inv(s_{beta[n]} w^-1 pi^-mu); identity where the
// conjugated image is negative, conjugation by x s_{beta[n]} x^-1 otherwise.
template <class G>
DARoot<G> phi(const G& g, const WP<G>& x, const DARoot<G>& c, const DARoot<G>& eta) {
  if (!inv_member(g, x, eta)) throw UsageError("phi: eta not an inversion of x^-1");
  const WP<G> s = da_reflection(g, c);
  const WP<G> sxi = wp_mult(g, s, wp_inverse(g, x));
  if (da_act(g, sxi, eta).sign < 0) return eta;
  const SignedDA<G> img = da_act(g, wp_mult(g, x, sxi), eta);
  if (img.sign <= 0) throw InternalError("phi: conjugated image not positive");
  return img.root;
}

// psi(gamma) = x(gamma), for gamma in Inv^{++}.
template <class G>
DARoot<G> psi(const G& g, const WP<G>& x, const DARoot<G>& c, const DARoot<G>& r) {
  if (!in_inv_pp(g, x, c, r)) throw UsageError("psi: root not in Inv^{++}");
  const SignedDA<G> img = da_act(g, x, r);
  if (img.sign <= 0) throw InternalError("psi: image not positive");
  return img.root;
}

// Ground supports of the psi image, used for window condition (3).
template <class G>
std::vector<typename G::Root> psi_supports(const G& g, const WP<G>& x,
                                           const std::vector<DARoot<G>>& ipp) {
  std::vector<typename G::Root> out;
  std::set<std::string> seen;
  for (const auto& r : ipp) {
    const auto img = da_act(g, x, r);
    if (seen.insert(g.root_key(img.root.beta)).second) out.push_back(img.root.beta);
  }
  return out;
}

template <class G>
Window<G> build_window(const G& g, const WP<G>& x, const DARoot<G>& c,
                       const std::vector<typename G::Root>& extra = {}) {
  if (!is_up_edge(g, x, c)) throw DomainError("build_window: not an up-edge");
  const auto ipp = inv_pp(g, x, c);
  return build_window_impl(g, x, c, psi_supports(g, x, ipp), extra);
}

// Inv_S(s_{beta[n]} w^-1 pi^-mu) == im(phi|_S) disjoint-union im(psi).
template <class G>
bool decomposition_check(const G& g, const WP<G>& x, const DARoot<G>& c,
                         const Window<G>& S) {
  if (!is_up_edge(g, x, c)) throw UsageError("decomposition_check: not an up-edge");
  const WP<G> y = wp_mult(g, x, da_reflection(g, c));
  // Inv(s_{beta[n]} w^-1 pi^-mu) = Inv(y^-1)
  std::set<std::string> target;
  for (const auto& r : inv_window_enum(g, S, y)) target.insert(da_key(g, r));

  std::set<std::string> phis, psis;
  for (const auto& eta : inv_window_enum(g, S, x)) {
    const DARoot<G> img = phi(g, x, c, eta);
    if (!phis.insert(da_key(g, img)).second) return false;  // injectivity
    if (!target.count(da_key(g, img))) return false;        // lands in target
  }
  for (const auto& r : inv_pp(g, x, c)) {
    const DARoot<G> img = psi(g, x, c, r);
    if (!psis.insert(da_key(g, img)).second) return false;
    if (!target.count(da_key(g, img))) return false;
    if (phis.count(da_key(g, img))) return false;  // disjointness
  }
  return target.size() == phis.size() + psis.size();
}

// Main theorem as a checkable identity: ell(x s) - ell(x) = #Inv^{++} >= 1.
template <class G>
bool length_diff_check(const G& g, const WP<G>& x, const DARoot<G>& c) {
  const auto e = edge(g, x, c);
  if (!e) throw UsageError("length_diff_check: x s_gamma not in W_T");
  if (e->direction == EdgeDir::Down) {
    // reversed statement, applied at the upper endpoint
    const WP<G> y = wp_mult(g, x, da_reflection(g, c));
    return length_diff_check(g, y, c);
  }
  const WP<G> y = wp_mult(g, x, da_reflection(g, c));
  const int diff = ell(g, y) - ell(g, x);
  const int count = static_cast<int>(inv_pp(g, x, c).size());
  return diff == count && count >= 1;
}

template <class G>
bool is_cover(const G& g, const WP<G>& x, const DARoot<G>& c) {
  if (!is_up_edge(g, x, c)) throw UsageError("is_cover: not an up-edge");
  const WP<G> y = wp_mult(g, x, da_reflection(g, c));
  return ell(g, y) == ell(g, x) + 1;
}

// ---------------------------------------------------------------------------
// Chains
// ---------------------------------------------------------------------------

template <class G>
struct Chain {
  std::vector<WP<G>> elements;  // one more than steps
  std::vector<DARoot<G>> steps;
  std::string method;
};

// Every consecutive pair must be a verified up-edge.
template <class G>
bool verify_chain(const G& g, const Chain<G>& ch) {
  if (ch.elements.size() != ch.steps.size() + 1) return false;
  for (size_t i = 0; i < ch.steps.size(); ++i) {
    if (!is_up_edge(g, ch.elements[i], ch.steps[i])) return false;
    const WP<G> next = wp_mult(g, ch.elements[i], da_reflection(g, ch.steps[i]));
    if (!wp_eq(next, ch.elements[i + 1])) return false;
    if (ell(g, ch.elements[i + 1]) <= ell(g, ch.elements[i])) return false;
  }
  return true;
}

namespace detail {

inline std::string rn_str(const DARootRN& c) {
  return int_vec_key(c.betaFin) + "[" + std::to_string(c.r) + "," +
         std::to_string(c.n) + "]";
}

// Assemble x -> x s_t1 -> x s_t1 s_t2 -> x s_gamma and verify; the t's must
// compose: s_t1 s_t2 s_t3 = s_gamma.
inline std::optional<Chain<AffineGround>> try_chain(
    const AffineGround& g, const WP<AffineGround>& x, const DARoot<AffineGround>& c,
    const DARootRN& t1, const DARootRN& t2, const DARootRN& t3,
    const std::string& method) {
  const DARoot<AffineGround> d1 = rn_to_da(g, t1);
  const DARoot<AffineGround> d2 = rn_to_da(g, t2);
  const DARoot<AffineGround> d3 = rn_to_da(g, t3);
  const WP<AffineGround> s1 = da_reflection(g, d1);
  const WP<AffineGround> s2 = da_reflection(g, d2);
  const WP<AffineGround> s3 = da_reflection(g, d3);
  if (!wp_eq(wp_mult(g, wp_mult(g, s1, s2), s3), da_reflection(g, c)))
    return std::nullopt;

  Chain<AffineGround> ch;
  ch.method = method;
  ch.elements.push_back(x);
  ch.steps = {d1, d2, d3};
  WP<AffineGround> z = x;
  for (const auto& st : ch.steps) {
    z = wp_mult(g, z, da_reflection(g, st));
    ch.elements.push_back(z);
  }
  if (!verify_chain(g, ch)) return std::nullopt;
  return ch;
}

}  // namespace detail

// A verified 3-step chain x -> z1 -> z2 -> x s_gamma witnessing that the edge
// is not a cover. Dispatch: multi-root escape first, then the rank-one cases
// in normal position (w(beta) > 0, sigma(r,n) > 0), then a verified search
// over same-line reflection triples for the remaining positions.
inline Chain<AffineGround> shorten_chain(const AffineGround& g,
                                         const WP<AffineGround>& x,
                                         const DARoot<AffineGround>& c) {
  if (!is_up_edge(g, x, c)) throw UsageError("shorten_chain: not an up-edge");
  const auto ipp = inv_pp(g, x, c);
  if (ipp.size() < 2) throw UsageError("shorten_chain: #Inv^{++} < 2 (cover)");

  const DARootRN crn = da_to_rn(g, c);
  const IntVec& beta = crn.betaFin;
  const int r = crn.r, n = crn.n;

  // Escape chain: some theta[s,m] in Inv^{++} with theta != beta gives
  // x -> x s_theta -> x s_gamma s_theta -> x s_gamma.
  for (const auto& m : ipp) {
    const DARootRN mrn = da_to_rn(g, m);
    if (mrn.betaFin == beta) continue;
    // middle reflection: s_{theta[s,m]}(beta[r,n]) = beta[r,n] - theta[s,m]
    const SignedDA<AffineGround> mid = da_act(g, da_reflection(g, m), c);
    if (mid.sign <= 0) throw InternalError("shorten_chain: escape image negative");
    const DARootRN t2 = da_to_rn(g, mid.root);
    if (auto ch = detail::try_chain(g, x, c, mrn, t2, mrn, "escape")) return *ch;
    throw InternalError("shorten_chain: escape chain failed verification at " +
                        detail::rn_str(mrn));
  }

  // Rank-one: every member lies over beta. Collect the (s,m) index set.
  std::set<std::pair<int, int>> idx;
  for (const auto& m : ipp) {
    const DARootRN mrn = da_to_rn(g, m);
    idx.insert({mrn.r, mrn.n});
  }
  auto in_ipp = [&](int s, int m) { return idx.count({s, m}) > 0; };
  auto x_pos = [&](int s, int m) {
    return rn_act(g, x, DARootRN{beta, s, m}).sign > 0;
  };
  auto rn = [&](int s, int m) { return DARootRN{beta, s, m}; };
  const int l = x.mu.level;
  const IntVec wbeta = g.fin().act_root(x.w.u, beta);
  const bool normal =
      FiniteRootSystem::is_positive_vec(wbeta) && sigma_rn(r, n) > 0;

  if (normal) {
    std::optional<Chain<AffineGround>> ch;
    if (sigma_rn(r, n - 1) == -1) {
      if (r == 0) {
        // asserted not to occur with #Inv^{++} >= 2; fall through to the
        // generic search and let the caller see the diagnostic if it fails
      } else if (r > 0) {  // n = 0
        if (in_ipp(r - 1, n))
          ch = detail::try_chain(g, x, c, rn(r - 1, n), rn(-1, n), rn(0, n),
                                 "case1-rpos");
      } else {  // r < 0, n = 1
        if (in_ipp(r - 1, 1)) {
          int cc = 1;
          while (cc < 10000 && x_pos(r - cc - 1, 1)) ++cc;
          ch = detail::try_chain(g, x, c, rn(r - cc, 1), rn(r, 1), rn(r + cc, 1),
                                 "case1-rneg");
        } else if (r == -1 && in_ipp(-2, 2)) {
          ch = detail::try_chain(g, x, c, rn(0, 0), rn(1, -1), rn(0, 0),
                                 "case1-rneg-edge");
        }
      }
    } else if (n > 0 && in_ipp(r, n - 1)) {
      ch = detail::try_chain(g, x, c, rn(r, n - 1), rn(r, -1), rn(r, 0), "case2");
    } else if (n > 0) {
      // Case 3: Inv^{++} sits on the line of slope -l through (r,n). When a
      // member falls off that line the rank-one analysis does not apply as
      // stated; leave ch empty and let the verified search below handle it.
      bool on_line = true;
      for (const auto& p : idx)
        if (p.second + l * p.first != n + l * r) on_line = false;
      if (on_line) {
        int cc = 1;
        while (cc < 10000 && x_pos(r + cc + 1, n - (cc + 1) * l)) ++cc;
        ch = detail::try_chain(g, x, c, rn(r + cc, n - cc * l),
                               rn(r + 2 * cc, n - 2 * cc * l),
                               rn(r + cc, n - cc * l), "case3");
      }
    }
    if (ch) return *ch;
  }

  // Generic verified search: reflections over the same beta with indices
  // t1 - gamma + t3 composing to s_gamma exactly; window grows on demand.
  int lo_s = r, hi_s = r, lo_m = n, hi_m = n;
  for (const auto& p : idx) {
    lo_s = std::min(lo_s, p.first);
    hi_s = std::max(hi_s, p.first);
    lo_m = std::min(lo_m, p.second);
    hi_m = std::max(hi_m, p.second);
  }
  for (int grow = 2; grow <= 16; grow *= 2) {
    for (int a1 = lo_s - grow; a1 <= hi_s + grow; ++a1)
      for (int b1 = lo_m - grow; b1 <= hi_m + grow; ++b1)
        for (int a3 = lo_s - grow; a3 <= hi_s + grow; ++a3)
          for (int b3 = lo_m - grow; b3 <= hi_m + grow; ++b3) {
            if (a1 == r && b1 == n) continue;
            if (auto ch = detail::try_chain(g, x, c, rn(a1, b1),
                                            rn(a1 - r + a3, b1 - n + b3),
                                            rn(a3, b3), "search"))
              return *ch;
          }
  }
  throw InternalError("shorten_chain: no chain found for x=" + wp_key(g, x) +
                      " gamma=" + detail::rn_str(crn) +
                      " #invpp=" + std::to_string(ipp.size()));
}

// ---------------------------------------------------------------------------
// Budgeted order queries
// ---------------------------------------------------------------------------

enum class LeqVerdict { Yes, No, Inconclusive };

template <class G>
struct LeqResult {
  LeqVerdict verdict = LeqVerdict::Inconclusive;
  Chain<G> chain;  // certificate when verdict == Yes
};

// Candidate step reflections for the budgeted searches, deterministically
// ordered.
template <class G>
std::vector<DARoot<G>> candidate_roots(const G& g, int budgetR, int budgetN) {
  std::vector<DARoot<G>> out;
  for (const auto& beta : g.positive_roots_within(budgetR))
    for (int m = -budgetN; m <= budgetN; ++m) out.push_back(DARoot<G>{beta, m});
  detail::sort_da(g, out);
  return out;
}

// BFS upward from x along budgeted up-edges, pruned by ell(y). Exhaustive
// within the budget: a No verdict is unconditional only insofar as the
// candidate set covers all relevant reflections (true for the finite ground
// with budgets derived from the endpoints; reported as such by callers).
template <class G>
LeqResult<G> leq(const G& g, const WP<G>& x, const WP<G>& y, int budgetR, int budgetN,
                 int max_states = 200000) {
  if (!in_WT(g, x) || !in_WT(g, y)) throw DomainError("leq: endpoints not in W_T");
  LeqResult<G> res;
  if (wp_eq(x, y)) {
    res.verdict = LeqVerdict::Yes;
    res.chain.elements = {x};
    return res;
  }
  const int target_len = ell(g, y);
  if (ell(g, x) >= target_len) {
    res.verdict = LeqVerdict::No;
    return res;
  }
  const auto cands = candidate_roots(g, budgetR, budgetN);
  const std::string ykey = wp_key(g, y);

  struct Node {
    WP<G> elt;
    int parent = -1;
    int step = -1;  // index into cands
  };
  std::vector<Node> nodes;
  std::map<std::string, int> seen;
  std::deque<int> queue;
  nodes.push_back(Node{x, -1, -1});
  seen[wp_key(g, x)] = 0;
  queue.push_back(0);
  bool truncated = false;

  while (!queue.empty()) {
    const int cur = queue.front();
    queue.pop_front();
    const WP<G> z = nodes[cur].elt;
    for (size_t ci = 0; ci < cands.size(); ++ci) {
      const auto e = edge(g, z, cands[ci]);
      if (!e || e->direction != EdgeDir::Up) continue;
      const WP<G> nz = wp_mult(g, z, da_reflection(g, cands[ci]));
      const int nlen = ell(g, nz);
      if (nlen > target_len) continue;
      const std::string key = wp_key(g, nz);
      if (seen.count(key)) continue;
      if (static_cast<int>(nodes.size()) >= max_states) {
        truncated = true;
        continue;
      }
      nodes.push_back(Node{nz, cur, static_cast<int>(ci)});
      const int id = static_cast<int>(nodes.size()) - 1;
      seen[key] = id;
      if (key == ykey) {
        // reconstruct certificate
        std::vector<int> path;
        for (int t = id; t != -1; t = nodes[t].parent) path.push_back(t);
        std::reverse(path.begin(), path.end());
        res.verdict = LeqVerdict::Yes;
        for (int t : path) res.chain.elements.push_back(nodes[t].elt);
        for (size_t i = 1; i < path.size(); ++i)
          res.chain.steps.push_back(cands[nodes[path[i]].step]);
        res.chain.method = "bfs";
        return res;
      }
      queue.push_back(id);
    }
  }
  res.verdict = truncated ? LeqVerdict::Inconclusive : LeqVerdict::No;
  return res;
}

struct DeodharResult {
  int count = 0;
  int required = 0;
  bool confirmed = false;  // count >= required
};

// Windowed count of reflections t with x <= y t <= z; compared against
// ell(z) - ell(x). A short count is inconclusive, never a refutation.
template <class G>
DeodharResult deodhar_count(const G& g, const WP<G>& x, const WP<G>& y, const WP<G>& z,
                            int budgetR, int budgetN) {
  DeodharResult res;
  res.required = ell(g, z) - ell(g, x);
  for (const auto& t : candidate_roots(g, budgetR, budgetN)) {
    const WP<G> yt = wp_mult(g, y, da_reflection(g, t));
    if (!in_WT(g, yt)) continue;
    if (leq(g, x, yt, budgetR, budgetN).verdict != LeqVerdict::Yes) continue;
    if (leq(g, yt, z, budgetR, budgetN).verdict != LeqVerdict::Yes) continue;
    ++res.count;
    if (res.count >= res.required) break;  // confirmed; no need to keep counting
  }
  res.confirmed = res.count >= res.required;
  return res;
}

}  // namespace dabru
