#pragma once

#include <string>

#include "dabru/affine.hpp"
#include "dabru/rootsys.hpp"

namespace dabru {

// ---------------------------------------------------------------------------
// Double-affine roots over a generic ground datum G and the semigroup
// W_T inside W_P = P x| W. Elements pi^mu w act on roots beta + n*pi by
//   pi^mu w (beta + n pi) = w(beta) + (n + <mu, w(beta)>) pi.
// ---------------------------------------------------------------------------

// Raw (unnormalized) double-affine root beta + n*pi, beta any ground real
// root. Positive iff (beta > 0 and n >= 0) or (beta < 0 and n > 0).
template <class G>
struct RawDA {
  typename G::Root beta;
  int n = 0;
};

// Normalized positive double-affine root beta[n] = sgn(n)(beta + n pi),
// with beta a positive ground root and sgn(n) = +1 iff n >= 0.
template <class G>
struct DARoot {
  typename G::Root beta;
  int n = 0;
};

template <class G>
struct SignedDA {
  DARoot<G> root;
  int sign = 1;  // the signed value is sign * root
};

// pi^mu w; membership in W_T <=> mu lies in the Tits cone.
template <class G>
struct WP {
  typename G::Coweight mu;
  typename G::Weyl w;
};

template <class G>
bool raw_positive(const G& g, const RawDA<G>& a) {
  if (g.positive(a.beta)) return a.n >= 0;
  return a.n > 0;
}

template <class G>
RawDA<G> raw_negate(const G& g, const RawDA<G>& a) {
  return RawDA<G>{g.negate(a.beta), -a.n};
}

// beta[n] as a raw root: sgn(n)(beta + n pi).
template <class G>
RawDA<G> da_raw(const G& g, const DARoot<G>& c) {
  if (c.n >= 0) return RawDA<G>{c.beta, c.n};
  return RawDA<G>{g.negate(c.beta), -c.n};
}

// Unique expression of a raw root as +/- beta[n] with beta > 0.
template <class G>
SignedDA<G> da_normalize(const G& g, const RawDA<G>& a) {
  if (g.positive(a.beta)) return SignedDA<G>{DARoot<G>{a.beta, a.n}, a.n >= 0 ? 1 : -1};
  return SignedDA<G>{DARoot<G>{g.negate(a.beta), -a.n}, a.n > 0 ? 1 : -1};
}

template <class G>
bool da_eq(const DARoot<G>& a, const DARoot<G>& b) {
  return a.n == b.n && a.beta == b.beta;
}

template <class G>
RawDA<G> raw_act(const G& g, const WP<G>& x, const RawDA<G>& a) {
  RawDA<G> out;
  out.beta = g.act_root(x.w, a.beta);
  out.n = a.n + g.pairing(x.mu, out.beta);
  return out;
}

template <class G>
SignedDA<G> da_act(const G& g, const WP<G>& x, const DARoot<G>& c) {
  return da_normalize(g, raw_act(g, x, da_raw(g, c)));
}

// s_{beta[n]} = pi^{n beta_vee} s_beta, an involution in W_P (not always in
// W_T).
template <class G>
WP<G> da_reflection(const G& g, const DARoot<G>& c) {
  return WP<G>{g.cw_scale(g.coroot(c.beta), c.n), g.reflection(c.beta)};
}

template <class G>
WP<G> wp_identity(const G& g) {
  return WP<G>{g.cw_zero(), g.identity()};
}

template <class G>
WP<G> wp_mult(const G& g, const WP<G>& x, const WP<G>& y) {
  // (pi^mu w)(pi^lam v) = pi^{mu + w(lam)} wv
  return WP<G>{g.cw_add(x.mu, g.act_cw(x.w, y.mu)), g.mult(x.w, y.w)};
}

template <class G>
WP<G> wp_inverse(const G& g, const WP<G>& x) {
  const auto wi = g.inverse(x.w);
  return WP<G>{g.cw_scale(g.act_cw(wi, x.mu), -1), wi};
}

template <class G>
bool wp_eq(const WP<G>& x, const WP<G>& y) {
  return x.mu == y.mu && x.w == y.w;
}

template <class G>
bool in_WT(const G& g, const WP<G>& x) {
  return g.tits_member(x.mu);
}

template <class G>
std::string da_key(const G& g, const DARoot<G>& c) {
  return g.root_key(c.beta) + "[" + std::to_string(c.n) + "]";
}

template <class G>
std::string wp_key(const G& g, const WP<G>& x) {
  return "pi" + g.cw_key(x.mu) + "." + g.weyl_key(x.w);
}

// ---------------------------------------------------------------------------
// (r,n)-indexing over an untwisted affine ground of ADE ground type:
// beta[r,n] = sigma(r,n)(beta + r delta + n pi) with beta a positive finite
// root.
// ---------------------------------------------------------------------------

inline int sigma_rn(int r, int n) {
  return (n > 0 || (n == 0 && r >= 0)) ? 1 : -1;
}

struct DARootRN {
  IntVec betaFin;  // positive finite root, simple-root coordinates
  int r = 0;
  int n = 0;

  bool operator==(const DARootRN& o) const {
    return r == o.r && n == o.n && betaFin == o.betaFin;
  }
};

struct SignedRN {
  DARootRN root;
  int sign = 1;
};

inline DARoot<AffineGround> rn_to_da(const AffineGround& g, const DARootRN& c) {
  RawDA<AffineGround> raw{AffRoot{c.betaFin, c.r}, c.n};
  if (sigma_rn(c.r, c.n) < 0) raw = raw_negate(g, raw);
  const SignedDA<AffineGround> norm = da_normalize(g, raw);
  if (norm.sign != 1) throw InternalError("rn_to_da: beta[r,n] normalized negative");
  return norm.root;
}

inline DARootRN da_to_rn(const AffineGround& g, const DARoot<AffineGround>& c) {
  RawDA<AffineGround> raw = da_raw(g, c);
  if (!FiniteRootSystem::is_positive_vec(raw.beta.theta)) raw = raw_negate(g, raw);
  return DARootRN{raw.beta.theta, raw.beta.r, raw.n};
}

inline SignedRN rn_normalize(const AffineGround& g, const SignedDA<AffineGround>& v) {
  return SignedRN{da_to_rn(g, v.root), v.sign};
}

// <beta[r,n], theta[s,m]> = sigma(r,n) sigma(s,m) (beta, theta), the normalized
// inner product with all square lengths 2.
inline int rn_pairing(const AffineGround& g, const DARootRN& a, const DARootRN& b) {
  int ip = 0;
  const IntVec bt = mat_apply(g.fin().cartan(), b.betaFin);
  for (int i = 0; i < g.rank(); ++i) ip += a.betaFin[i] * bt[i];
  return sigma_rn(a.r, a.n) * sigma_rn(b.r, b.n) * ip;
}

// |s_{beta[r,n]}| on roots over the same finite beta: 180-degree rotation of
// the (r,n) index about the center.
inline DARootRN rn_rotate(const DARootRN& center, const DARootRN& c) {
  if (!(center.betaFin == c.betaFin))
    throw UsageError("rn_rotate: mismatched finite root");
  return DARootRN{c.betaFin, 2 * center.r - c.r, 2 * center.n - c.n};
}

// Action in (r,n) coordinates: write x = pi^{l Lambda_0} pi^{mu} t^{nu} w,
// put a = -<nu, w(beta)>, b = -<mu, w(beta)>; then
//   x(beta[s,m]) = sigma(s,m) sigma(s-a, m-b+l(s-a)) w(beta)[s-a, m-b+l(s-a)]
// when w(beta) > 0, and the negated mirror expression when w(beta) < 0.
inline SignedRN rn_act(const AffineGround& g, const WP<AffineGround>& x,
                       const DARootRN& c) {
  const int l = x.mu.level;
  const IntVec wb = g.fin().act_root(x.w.u, c.betaFin);
  const int a = -g.lam_pairing(x.w.lam, wb);
  const int b = -g.fin().pairing(x.mu.nu, wb);
  const int s = c.r, m = c.n;
  if (FiniteRootSystem::is_positive_vec(wb)) {
    const int r2 = s - a, n2 = m - b + l * (s - a);
    return SignedRN{DARootRN{wb, r2, n2}, sigma_rn(s, m) * sigma_rn(r2, n2)};
  }
  IntVec nb = wb;
  for (int& v : nb) v = -v;
  const int r2 = a - s, n2 = b - m + l * (a - s);
  return SignedRN{DARootRN{nb, r2, n2}, -sigma_rn(s, m) * sigma_rn(r2, n2)};
}

}  // namespace dabru
