#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "dabru/errors.hpp"

namespace dabru {

using IntVec = std::vector<int>;
using IntMat = std::vector<IntVec>;

IntVec mat_apply(const IntMat& m, const IntVec& v);
IntMat mat_mult(const IntMat& a, const IntMat& b);
IntMat mat_transpose(const IntMat& m);
IntMat mat_identity(int n);

// Simply-laced Cartan datum: A_n (n>=1), D_n (n>=4), E_6, E_7, E_8.
struct CartanDatum {
  std::string label;
  int rank = 0;
  IntMat cartan;

  static CartanDatum from_label(const std::string& label);
};

// A finite Weyl group element, stored as its action matrix on simple-root
// coordinates together with the matrix of the dual action on
// fundamental-coweight coordinates. Equality is equality of root matrices.
struct FiniteWeylElt {
  IntMat root_mat;
  IntMat cw_mat;

  bool operator==(const FiniteWeylElt& o) const { return root_mat == o.root_mat; }
};

// Finite simply-laced root system: enumerated positive roots, exact integer
// pairings, coroots, rho data, and Weyl group arithmetic.
//
// Conventions: roots live in simple-root integer coordinates, coweights in
// fundamental-coweight integer coordinates, so every pairing is a dot
// product. In simply-laced type the coroot of a root has the same simple
// coordinates, re-expressed via alpha_i^vee = sum_j a_ij omega_j^vee.
class FiniteRootSystem {
 public:
  explicit FiniteRootSystem(CartanDatum datum);
  static FiniteRootSystem from_label(const std::string& label) {
    return FiniteRootSystem(CartanDatum::from_label(label));
  }

  int rank() const { return datum_.rank; }
  const std::string& label() const { return datum_.label; }
  const IntMat& cartan() const { return datum_.cartan; }

  const std::vector<IntVec>& positive_roots() const { return positive_roots_; }
  bool is_root(const IntVec& coords) const;
  static bool is_positive_vec(const IntVec& coords);

  const IntVec& highest_root() const { return highest_root_; }
  int dual_coxeter_number() const { return dual_coxeter_; }
  static int height(const IntVec& root);

  // <nu, theta> with nu in fundamental-coweight and theta in simple-root
  // coordinates.
  int pairing(const IntVec& coweight, const IntVec& root) const;

  // Coroot of a (+ or -) root, in fundamental-coweight coordinates.
  IntVec coroot(const IntVec& root) const;

  // <nu, 2 rho_fin> = sum over positive roots of <nu, gamma>.
  int two_ht(const IntVec& coweight) const;

  FiniteWeylElt identity() const;
  FiniteWeylElt simple_reflection(int i) const;  // i in [0, rank)
  FiniteWeylElt reflection(const IntVec& root) const;
  FiniteWeylElt mult(const FiniteWeylElt& a, const FiniteWeylElt& b) const;
  FiniteWeylElt inverse(const FiniteWeylElt& w) const;

  IntVec act_root(const FiniteWeylElt& w, const IntVec& root) const;
  IntVec act_coweight(const FiniteWeylElt& w, const IntVec& coweight) const;

  // {theta > 0 : w(theta) < 0}
  std::vector<IntVec> inversions(const FiniteWeylElt& w) const;

 private:
  void enumerate_roots();

  CartanDatum datum_;
  std::vector<IntVec> positive_roots_;
  std::set<IntVec> root_set_;  // positive and negative
  IntVec highest_root_;
  IntVec positive_sum_;  // sum of all positive roots (= 2 rho_fin)
  int dual_coxeter_ = 0;
};

std::string int_vec_key(const IntVec& v);

// The finite instantiation of the ground-datum interface. Roots are +/-
// root coordinate vectors, coweights are fundamental-coweight vectors and
// the Tits cone is the whole lattice, so W_T over this ground is the
// single-affine Weyl group.
class FiniteGround {
 public:
  using Root = IntVec;
  using Coweight = IntVec;
  using Weyl = FiniteWeylElt;

  explicit FiniteGround(FiniteRootSystem fin) : fin_(std::move(fin)) {}
  static FiniteGround from_label(const std::string& label) {
    return FiniteGround(FiniteRootSystem::from_label(label));
  }

  const FiniteRootSystem& fin() const { return fin_; }
  int rank() const { return fin_.rank(); }

  bool positive(const Root& r) const { return FiniteRootSystem::is_positive_vec(r); }
  Root negate(const Root& r) const {
    Root out = r;
    for (int& c : out) c = -c;
    return out;
  }
  bool is_root(const Root& r) const { return fin_.is_root(r); }

  int pairing(const Coweight& mu, const Root& r) const { return fin_.pairing(mu, r); }
  Coweight coroot(const Root& r) const { return fin_.coroot(r); }

  Coweight cw_zero() const { return Coweight(rank(), 0); }
  Coweight cw_add(const Coweight& a, const Coweight& b) const {
    Coweight out = a;
    for (int i = 0; i < rank(); ++i) out[i] += b[i];
    return out;
  }
  Coweight cw_scale(const Coweight& a, int k) const {
    Coweight out = a;
    for (int& c : out) c *= k;
    return out;
  }
  bool cw_is_zero(const Coweight& a) const {
    for (int c : a)
      if (c != 0) return false;
    return true;
  }

  Weyl identity() const { return fin_.identity(); }
  Weyl mult(const Weyl& a, const Weyl& b) const { return fin_.mult(a, b); }
  Weyl inverse(const Weyl& w) const { return fin_.inverse(w); }
  Weyl reflection(const Root& r) const { return fin_.reflection(r); }
  int num_simple() const { return rank(); }
  Weyl simple_reflection(int i) const { return fin_.simple_reflection(i); }

  Root act_root(const Weyl& w, const Root& r) const { return fin_.act_root(w, r); }
  Coweight act_cw(const Weyl& w, const Coweight& mu) const {
    return fin_.act_coweight(w, mu);
  }

  bool tits_member(const Coweight&) const { return true; }

  struct DomRes {
    Coweight rep;
    Weyl witness;  // witness(mu) = rep
  };
  DomRes dominant_translate(const Coweight& mu, int cap = 10000) const;

  int two_ht(const Coweight& mu) const { return fin_.two_ht(mu); }

  std::vector<Root> inv_weyl(const Weyl& w) const { return fin_.inversions(w); }
  std::vector<Root> neg_pairing_roots(const Coweight& mu) const;
  std::vector<Root> positive_roots_within(int /*budget*/) const {
    return fin_.positive_roots();
  }

  std::string root_key(const Root& r) const { return int_vec_key(r); }
  std::string cw_key(const Coweight& m) const { return int_vec_key(m); }
  std::string weyl_key(const Weyl& w) const;

 private:
  FiniteRootSystem fin_;
};

}  // namespace dabru
