#pragma once

#include <string>
#include <utility>
#include <vector>

#include "dabru/rootsys.hpp"

namespace dabru {

// Real affine root theta + r*delta, theta a finite root in simple-root
// coordinates.
struct AffRoot {
  IntVec theta;
  int r = 0;

  bool operator==(const AffRoot& o) const { return r == o.r && theta == o.theta; }
  bool operator<(const AffRoot& o) const {
    if (r != o.r) return r < o.r;
    return theta < o.theta;
  }
};

// Affine coweight nu + level*d + central*c, nu in fundamental-coweight
// coordinates of the finite part.
struct AffCoweight {
  IntVec nu;
  int level = 0;
  int central = 0;

  bool operator==(const AffCoweight& o) const {
    return level == o.level && central == o.central && nu == o.nu;
  }
};

// Affine Weyl group element t^lam * u with lam in simple-coroot coordinates
// (in simply-laced type these coincide with simple-root coordinates under
// theta <-> theta^vee).
struct AffWeylElt {
  IntVec lam;
  FiniteWeylElt u;

  bool operator==(const AffWeylElt& o) const { return lam == o.lam && u == o.u; }
};

// Untwisted affine root datum over a simply-laced finite ground, realizing
// the same ground-datum interface as FiniteGround. W_T over this ground is
// the double-affine setting.
//
// Conventions: the affine simple root alpha_0 = delta - theta_h, and
// translations act on real roots by t^lam(theta + s delta) =
// theta + (s + <lam, theta>) delta, so s_{theta+r delta} = t^{r theta^vee}
// s_theta and in particular s_0 = t^{-theta_h^vee} s_{theta_h}. The action
// on coweights is pinned by invariance of the pairing.
class AffineGround {
 public:
  using Root = AffRoot;
  using Coweight = AffCoweight;
  using Weyl = AffWeylElt;

  explicit AffineGround(FiniteRootSystem fin) : fin_(std::move(fin)) {}
  static AffineGround from_label(const std::string& label) {
    return AffineGround(FiniteRootSystem::from_label(label));
  }

  const FiniteRootSystem& fin() const { return fin_; }
  int rank() const { return fin_.rank(); }

  bool positive(const Root& a) const {
    return a.r > 0 || (a.r == 0 && FiniteRootSystem::is_positive_vec(a.theta));
  }
  Root negate(const Root& a) const;
  bool is_root(const Root& a) const { return fin_.is_root(a.theta); }

  // <nu + l*d + k*c, theta + r*delta> = <nu, theta> + l*r
  int pairing(const Coweight& mu, const Root& a) const {
    return fin_.pairing(mu.nu, a.theta) + mu.level * a.r;
  }
  // (theta + r*delta)^vee = theta^vee + r*c
  Coweight coroot(const Root& a) const {
    return Coweight{fin_.coroot(a.theta), 0, a.r};
  }

  Coweight cw_zero() const { return Coweight{IntVec(rank(), 0), 0, 0}; }
  Coweight cw_add(const Coweight& a, const Coweight& b) const;
  Coweight cw_scale(const Coweight& a, int k) const;
  bool cw_is_zero(const Coweight& a) const {
    if (a.level != 0 || a.central != 0) return false;
    for (int c : a.nu)
      if (c != 0) return false;
    return true;
  }

  Weyl identity() const { return Weyl{IntVec(rank(), 0), fin_.identity()}; }
  Weyl mult(const Weyl& a, const Weyl& b) const;
  Weyl inverse(const Weyl& w) const;
  Weyl reflection(const Root& a) const;  // t^{r theta^vee} s_theta
  int num_simple() const { return rank() + 1; }
  // i = 0 is the affine node; i in [1, rank] are the finite simples.
  Weyl simple_reflection(int i) const;

  Root act_root(const Weyl& w, const Root& a) const;
  Coweight act_cw(const Weyl& w, const Coweight& mu) const;

  // Dominant Tits cone orbit membership: positive level, or level zero with
  // trivial finite part (the central direction is fixed by everything).
  bool tits_member(const Coweight& mu) const {
    if (mu.level > 0) return true;
    if (mu.level < 0) return false;
    for (int c : mu.nu)
      if (c != 0) return false;
    return true;
  }

  struct DomRes {
    Coweight rep;
    Weyl witness;  // witness(mu) = rep
  };
  // Greedy descent to the dominant chamber, lowest simple index first
  // (alpha_0 is index 0). Requires tits_member(mu).
  DomRes dominant_translate(const Coweight& mu, int cap = 100000) const;

  // <mu, 2 rho> with 2 rho = 2 rho_fin + 2 h^vee Lambda_0.
  int two_ht(const Coweight& mu) const {
    return fin_.two_ht(mu.nu) + 2 * mu.central * fin_.dual_coxeter_number();
  }

  std::vector<Root> inv_weyl(const Weyl& w) const;
  // Positive affine roots pairing strictly negatively against mu. Finite
  // for positive level and for the zero coweight; throws otherwise.
  std::vector<Root> neg_pairing_roots(const Coweight& mu) const;
  // Positive affine roots with delta-coefficient at most R.
  std::vector<Root> positive_roots_within(int R) const;

  std::string root_key(const Root& a) const {
    return int_vec_key(a.theta) + "+" + std::to_string(a.r) + "d";
  }
  std::string cw_key(const Coweight& m) const {
    return int_vec_key(m.nu) + "+" + std::to_string(m.level) + "d+" +
           std::to_string(m.central) + "c";
  }
  std::string weyl_key(const Weyl& w) const;

  // <lam, theta> with lam in simple-coroot and theta in simple-root
  // coordinates: lam . (A theta).
  int lam_pairing(const IntVec& lam, const IntVec& theta) const;

 private:
  FiniteRootSystem fin_;
};

}  // namespace dabru
