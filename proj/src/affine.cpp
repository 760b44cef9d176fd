#include "dabru/affine.hpp"

#include <algorithm>
#include <cstdlib>

namespace dabru {

AffRoot AffineGround::negate(const Root& a) const {
  Root out = a;
  out.r = -out.r;
  for (int& c : out.theta) c = -c;
  return out;
}

AffCoweight AffineGround::cw_add(const Coweight& a, const Coweight& b) const {
  Coweight out = a;
  for (int i = 0; i < rank(); ++i) out.nu[i] += b.nu[i];
  out.level += b.level;
  out.central += b.central;
  return out;
}

AffCoweight AffineGround::cw_scale(const Coweight& a, int k) const {
  Coweight out = a;
  for (int& c : out.nu) c *= k;
  out.level *= k;
  out.central *= k;
  return out;
}

int AffineGround::lam_pairing(const IntVec& lam, const IntVec& theta) const {
  const IntVec at = mat_apply(fin_.cartan(), theta);
  int s = 0;
  for (int i = 0; i < rank(); ++i) s += lam[i] * at[i];
  return s;
}

AffWeylElt AffineGround::mult(const Weyl& a, const Weyl& b) const {
  // (t^lam u)(t^lam' u') = t^{lam + u(lam')} (u u'); u permutes coroots by
  // the same matrix as roots in simply-laced type.
  IntVec lam = fin_.act_root(a.u, b.lam);
  for (int i = 0; i < rank(); ++i) lam[i] += a.lam[i];
  return Weyl{lam, fin_.mult(a.u, b.u)};
}

AffWeylElt AffineGround::inverse(const Weyl& w) const {
  const FiniteWeylElt ui = fin_.inverse(w.u);
  IntVec lam = fin_.act_root(ui, w.lam);
  for (int& c : lam) c = -c;
  return Weyl{lam, ui};
}

AffWeylElt AffineGround::reflection(const Root& a) const {
  if (!fin_.is_root(a.theta)) throw DomainError("reflection: not an affine real root");
  IntVec lam = a.theta;
  for (int& c : lam) c *= a.r;
  return Weyl{lam, fin_.reflection(a.theta)};
}

AffWeylElt AffineGround::simple_reflection(int i) const {
  if (i < 0 || i > rank()) throw UsageError("simple_reflection: index out of range");
  if (i == 0) {
    // alpha_0 = delta - theta_h
    Root a0{fin_.highest_root(), 1};
    for (int& c : a0.theta) c = -c;
    return reflection(a0);
  }
  return Weyl{IntVec(rank(), 0), fin_.simple_reflection(i - 1)};
}

AffRoot AffineGround::act_root(const Weyl& w, const Root& a) const {
  Root out;
  out.theta = fin_.act_root(w.u, a.theta);
  out.r = a.r + lam_pairing(w.lam, out.theta);
  return out;
}

AffCoweight AffineGround::act_cw(const Weyl& w, const Coweight& mu) const {
  Coweight out;
  out.nu = fin_.act_coweight(w.u, mu.nu);
  out.level = mu.level;
  out.central = mu.central;
  // t^lam: (nu, l, k) |-> (nu - l lam, l, k + <nu, lam> - l (lam,lam)/2),
  // the unique level/pairing-preserving extension of the action on roots.
  const IntVec lam_cw = mat_apply(fin_.cartan(), w.lam);
  int nu_lam = 0;
  for (int i = 0; i < rank(); ++i) nu_lam += out.nu[i] * w.lam[i];
  int lam_lam = 0;
  for (int i = 0; i < rank(); ++i) lam_lam += w.lam[i] * lam_cw[i];
  out.central += nu_lam - mu.level * (lam_lam / 2);
  for (int i = 0; i < rank(); ++i) out.nu[i] -= mu.level * lam_cw[i];
  return out;
}

AffineGround::DomRes AffineGround::dominant_translate(const Coweight& mu, int cap) const {
  if (!tits_member(mu))
    throw DomainError("dominant_translate: coweight outside the dominant Tits cone orbit");
  const IntVec& hr = fin_.highest_root();
  Coweight rep = mu;
  Weyl w = identity();
  for (int step = 0; step < cap; ++step) {
    int i = -1;
    if (rep.level - fin_.pairing(rep.nu, hr) < 0) i = 0;
    if (i < 0)
      for (int j = 0; j < rank(); ++j)
        if (rep.nu[j] < 0) {
          i = j + 1;
          break;
        }
    if (i < 0) return DomRes{rep, w};
    const Weyl s = simple_reflection(i);
    rep = act_cw(s, rep);
    w = mult(s, w);
  }
  throw InternalError("dominant_translate: step cap exceeded");
}

std::vector<AffRoot> AffineGround::inv_weyl(const Weyl& w) const {
  int bound = 0;
  for (const IntVec& theta : fin_.positive_roots())
    bound = std::max(bound, std::abs(lam_pairing(w.lam, theta)));
  std::vector<Root> out;
  for (int r = 0; r <= bound; ++r)
    for (const IntVec& theta : fin_.positive_roots())
      for (int sgn : {1, -1}) {
        if (r == 0 && sgn < 0) continue;
        Root a{theta, r};
        if (sgn < 0)
          for (int& c : a.theta) c = -c;
        if (!positive(act_root(w, a))) out.push_back(a);
      }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<AffRoot> AffineGround::neg_pairing_roots(const Coweight& mu) const {
  std::vector<Root> out;
  if (mu.level <= 0) {
    bool nu_zero = true;
    for (int c : mu.nu)
      if (c != 0) nu_zero = false;
    if (mu.level == 0 && nu_zero) return out;
    throw DomainError("neg_pairing_roots: infinite set at non-positive level");
  }
  for (const IntVec& ptheta : fin_.positive_roots())
    for (int sgn : {1, -1}) {
      IntVec theta = ptheta;
      if (sgn < 0)
        for (int& c : theta) c = -c;
      const int p0 = fin_.pairing(mu.nu, theta);
      for (int r = (sgn > 0 ? 0 : 1); p0 + r * mu.level < 0; ++r)
        out.push_back(Root{theta, r});
    }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<AffRoot> AffineGround::positive_roots_within(int R) const {
  std::vector<Root> out;
  for (int r = 0; r <= R; ++r)
    for (const IntVec& theta : fin_.positive_roots())
      for (int sgn : {1, -1}) {
        if (r == 0 && sgn < 0) continue;
        Root a{theta, r};
        if (sgn < 0)
          for (int& c : a.theta) c = -c;
        out.push_back(a);
      }
  return out;
}

std::string AffineGround::weyl_key(const Weyl& w) const {
  std::string s = "t" + int_vec_key(w.lam) + "|";
  for (const IntVec& row : w.u.root_mat) s += int_vec_key(row);
  return s;
}

}  // namespace dabru
