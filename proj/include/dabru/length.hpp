#pragma once

#include <cstdlib>
#include <set>
#include <string>
#include <vector>

#include "dabru/daweyl.hpp"

namespace dabru {

// Length value in Z + Z*eps, ordered lexicographically (integer part first).
struct EpsLength {
  int base = 0;
  int eps = 0;

  bool operator==(const EpsLength& o) const { return base == o.base && eps == o.eps; }
  bool operator<(const EpsLength& o) const {
    if (base != o.base) return base < o.base;
    return eps < o.eps;
  }
};

// A finite set of positive ground roots used to localize infinite inversion
// sets.
template <class G>
using Window = std::vector<typename G::Root>;

namespace detail {

template <class G>
bool root_in(const G&, const std::vector<typename G::Root>& v,
             const typename G::Root& r) {
  for (const auto& a : v)
    if (a == r) return true;
  return false;
}

}  // namespace detail

// ell_eps(pi^mu w) = two_ht(mu_+) + eps * (#{eta in Inv(w^-1): <mu,eta> >= 0}
//                                          - #{eta in Inv(w^-1): <mu,eta> < 0})
template <class G>
EpsLength ell_eps(const G& g, const WP<G>& x) {
  if (!in_WT(g, x)) throw DomainError("ell_eps: element not in W_T");
  const auto dom = g.dominant_translate(x.mu);
  EpsLength out;
  out.base = g.two_ht(dom.rep);
  for (const auto& eta : g.inv_weyl(g.inverse(x.w)))
    out.eps += (g.pairing(x.mu, eta) >= 0) ? 1 : -1;
  return out;
}

template <class G>
int ell(const G& g, const WP<G>& x) {
  const EpsLength e = ell_eps(g, x);
  return e.base + e.eps;
}

// ell(pi^mu) = two_ht(mu) - sum over positive eta with <mu,eta> < 0 of
// <mu, 2 eta>.
template <class G>
int ell_translation(const G& g, const typename G::Coweight& mu) {
  if (!g.tits_member(mu)) throw DomainError("ell_translation: outside Tits cone");
  int out = g.two_ht(mu);
  for (const auto& eta : g.neg_pairing_roots(mu)) out -= 2 * g.pairing(mu, eta);
  return out;
}

// The four-case closed form for ell(pi^mu w); only eta with <mu,eta> < 0 or
// eta in Inv(w^-1) contribute, so the sum is finite.
template <class G>
int ell_closed_form(const G& g, const WP<G>& x) {
  if (!in_WT(g, x)) throw DomainError("ell_closed_form: element not in W_T");
  const auto inv = g.inv_weyl(g.inverse(x.w));
  int out = g.two_ht(x.mu);
  for (const auto& eta : g.neg_pairing_roots(x.mu)) {
    const int p = g.pairing(x.mu, eta);
    out += -2 * p - (detail::root_in(g, inv, eta) ? 1 : 0);
  }
  for (const auto& eta : inv)
    if (g.pairing(x.mu, eta) >= 0) out += 1;
  return out;
}

// Membership eta[m] in Inv(w^-1 pi^-mu), by the four-interval criterion:
//   [p, 0)  if p < 0 and eta not in Inv(w^-1)
//   (p, 0)  if p < 0 and eta in Inv(w^-1)
//   [0, p]  if p >= 0 and eta in Inv(w^-1)
//   [0, p)  if p >= 0 and eta not in Inv(w^-1)
// where p = <mu, eta>. Here x denotes pi^mu w and the set inverted is x^-1.
template <class G>
bool inv_member(const G& g, const WP<G>& x, const DARoot<G>& c) {
  const int p = g.pairing(x.mu, c.beta);
  const bool in_inv =
      !g.positive(g.act_root(g.inverse(x.w), c.beta));
  const int m = c.n;
  if (p < 0) {
    if (in_inv) return p < m && m < 0;
    return p <= m && m < 0;
  }
  if (in_inv) return 0 <= m && m <= p;
  return 0 <= m && m < p;
}

// All eta[m] in Inv(w^-1 pi^-mu) with eta in S.
template <class G>
std::vector<DARoot<G>> inv_window_enum(const G& g, const Window<G>& S, const WP<G>& x) {
  const auto winv = g.inverse(x.w);
  std::vector<DARoot<G>> out;
  for (const auto& eta : S) {
    const int p = g.pairing(x.mu, eta);
    const bool in_inv = !g.positive(g.act_root(winv, eta));
    int lo, hi;  // inclusive range of m
    if (p < 0) {
      lo = in_inv ? p + 1 : p;
      hi = -1;
    } else {
      lo = 0;
      hi = in_inv ? p : p - 1;
    }
    for (int m = lo; m <= hi; ++m) out.push_back(DARoot<G>{eta, m});
  }
  return out;
}

// Closed form for #Inv_S(w^-1 pi^-mu): sum over eta in S of |<mu,eta>| with a
// -1/+1 correction when eta in Inv(w^-1).
template <class G>
int inv_window_count(const G& g, const Window<G>& S, const WP<G>& x) {
  const auto inv = g.inv_weyl(g.inverse(x.w));
  int out = 0;
  for (const auto& eta : S) {
    const int p = g.pairing(x.mu, eta);
    out += std::abs(p);
    if (detail::root_in(g, inv, eta)) out += (p < 0) ? -1 : 1;
  }
  return out;
}

struct WindowFlags {
  bool closed_under_swb = false;       // (1)
  bool contains_inv_sets = false;      // (2)
  bool contains_psi_supports = false;  // (3)
  bool contains_neg_mu = false;        // (4)
  bool contains_neg_mu2 = false;       // (5)

  bool all() const {
    return closed_under_swb && contains_inv_sets && contains_psi_supports &&
           contains_neg_mu && contains_neg_mu2;
  }
};

namespace detail {

// |s_wb|(eta): apply the reflection through wb and normalize the sign.
template <class G>
typename G::Root abs_reflect(const G& g, const typename G::Weyl& swb,
                             const typename G::Root& eta) {
  auto img = g.act_root(swb, eta);
  if (!g.positive(img)) img = g.negate(img);
  return img;
}

template <class G>
void add_root(const G& g, Window<G>& S, std::set<std::string>& seen,
              const typename G::Root& r) {
  if (seen.insert(g.root_key(r)).second) S.push_back(r);
}

}  // namespace detail

// Minimal window for the edge (x, beta[n]) satisfying containment conditions
// (2), (4), (5) plus the supplied psi-image supports (3), then closed under
// |s_{w(beta)}| for (1). Extra positive roots may be forced in (enlarged
// windows); the closure is re-run after adding them.
template <class G>
Window<G> build_window_impl(const G& g, const WP<G>& x, const DARoot<G>& c,
                            const std::vector<typename G::Root>& psi_supports,
                            const std::vector<typename G::Root>& extra = {}) {
  const auto wb = g.act_root(x.w, c.beta);
  const auto swb = g.reflection(wb);
  const auto mu2 = g.cw_add(x.mu, g.cw_scale(g.coroot(wb), c.n));

  Window<G> S;
  std::set<std::string> seen;
  for (const auto& r : g.inv_weyl(swb)) detail::add_root(g, S, seen, r);
  for (const auto& r : g.inv_weyl(g.inverse(x.w))) detail::add_root(g, S, seen, r);
  for (const auto& r : psi_supports) detail::add_root(g, S, seen, r);
  for (const auto& r : g.neg_pairing_roots(x.mu)) detail::add_root(g, S, seen, r);
  for (const auto& r : g.neg_pairing_roots(mu2)) detail::add_root(g, S, seen, r);
  for (const auto& r : extra) detail::add_root(g, S, seen, r);
  // |s_{w(beta)}| is an involution on positive roots other than |wb| itself,
  // so a single pass closes the set.
  const size_t base = S.size();
  for (size_t i = 0; i < base; ++i)
    detail::add_root(g, S, seen, detail::abs_reflect(g, swb, S[i]));
  return S;
}

template <class G>
WindowFlags window_condition_flags(const G& g, const WP<G>& x, const DARoot<G>& c,
                                   const Window<G>& S,
                                   const std::vector<typename G::Root>& psi_supports) {
  const auto wb = g.act_root(x.w, c.beta);
  const auto swb = g.reflection(wb);
  const auto mu2 = g.cw_add(x.mu, g.cw_scale(g.coroot(wb), c.n));

  WindowFlags f;
  f.closed_under_swb = true;
  for (const auto& r : S)
    if (!detail::root_in(g, S, detail::abs_reflect(g, swb, r))) f.closed_under_swb = false;

  f.contains_inv_sets = true;
  for (const auto& r : g.inv_weyl(swb))
    if (!detail::root_in(g, S, r)) f.contains_inv_sets = false;
  for (const auto& r : g.inv_weyl(g.inverse(x.w)))
    if (!detail::root_in(g, S, r)) f.contains_inv_sets = false;

  f.contains_psi_supports = true;
  for (const auto& r : psi_supports)
    if (!detail::root_in(g, S, r)) f.contains_psi_supports = false;

  f.contains_neg_mu = true;
  for (const auto& r : g.neg_pairing_roots(x.mu))
    if (!detail::root_in(g, S, r)) f.contains_neg_mu = false;

  f.contains_neg_mu2 = true;
  for (const auto& r : g.neg_pairing_roots(mu2))
    if (!detail::root_in(g, S, r)) f.contains_neg_mu2 = false;

  return f;
}

// 2 ht(beta_vee) = sum over gamma in S of <beta_vee, gamma>, for S containing
// Inv(s_beta) and closed under |s_beta|.
template <class G>
bool height_identity_check(const G& g, const typename G::Root& beta, const Window<G>& S) {
  const auto sb = g.reflection(beta);
  for (const auto& r : g.inv_weyl(sb))
    if (!detail::root_in(g, S, r))
      throw UsageError("height_identity_check: window misses Inv(s_beta)");
  for (const auto& r : S)
    if (!detail::root_in(g, S, detail::abs_reflect(g, sb, r)))
      throw UsageError("height_identity_check: window not closed under |s_beta|");
  const auto bv = g.coroot(beta);
  int sum = 0;
  for (const auto& r : S) sum += g.pairing(bv, r);
  return g.two_ht(bv) == sum;
}

// Minimal admissible window for the height identity: Inv(s_beta) itself
// (already |s_beta|-stable); optionally enlarged by extra roots then closed.
template <class G>
Window<G> height_window(const G& g, const typename G::Root& beta,
                        const std::vector<typename G::Root>& extra = {}) {
  const auto sb = g.reflection(beta);
  Window<G> S;
  std::set<std::string> seen;
  for (const auto& r : g.inv_weyl(sb)) detail::add_root(g, S, seen, r);
  for (const auto& r : extra) detail::add_root(g, S, seen, r);
  const size_t base = S.size();
  for (size_t i = 0; i < base; ++i)
    detail::add_root(g, S, seen, detail::abs_reflect(g, sb, S[i]));
  return S;
}

}  // namespace dabru
