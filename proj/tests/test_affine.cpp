#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "dabru/oracle.hpp"

using namespace dabru;

TEST_CASE("pairings and coroots in the affine datum") {
  const AffineGround g = AffineGround::from_label("A1");
  const AffRoot alpha{IntVec{1}, 0};
  const AffRoot alpha_d{IntVec{1}, 1};  // alpha + delta
  // <alpha^vee + d, alpha + delta> = 2 + 1
  const AffCoweight mu{IntVec{2}, 1, 0};  // alpha^vee = 2 omega^vee, plus d
  CHECK(g.pairing(mu, alpha_d) == 3);
  CHECK(g.pairing(g.coroot(alpha_d), alpha_d) == 2);
  // two_ht(alpha^vee + c) = 2 + 2 h^vee = 6 for A1
  const AffCoweight av_c{IntVec{2}, 0, 1};
  CHECK(g.two_ht(av_c) == 6);
  // two_ht(c) = 2 h^vee = 4
  CHECK(g.two_ht(AffCoweight{IntVec{0}, 0, 1}) == 4);
}

TEST_CASE("translations move the delta coefficient by the pairing") {
  const AffineGround g = AffineGround::from_label("A2");
  const AffWeylElt t = AffWeylElt{IntVec{1, 0}, g.fin().identity()};  // t^{alpha_1^vee}
  for (const auto& theta : g.fin().positive_roots()) {
    const AffRoot a{theta, 0};
    const AffRoot img = g.act_root(t, a);
    CHECK(img.theta == theta);
    CHECK(img.r == g.lam_pairing(IntVec{1, 0}, theta));
  }
}

TEST_CASE("s_0 = t^{-theta_h^vee} s_{theta_h}") {
  const AffineGround g = AffineGround::from_label("A2");
  const AffWeylElt s0 = g.simple_reflection(0);
  const IntVec th = g.fin().highest_root();
  CHECK(s0.lam == IntVec{-1, -1});  // -theta_h^vee in simple-coroot coords
  CHECK(s0.u == g.fin().reflection(th));
  // s_0 negates alpha_0 = delta - theta_h
  const AffRoot a0{IntVec{-1, -1}, 1};
  CHECK(g.positive(a0));
  const AffRoot img = g.act_root(s0, a0);
  CHECK(img == g.negate(a0));
  CHECK(g.mult(s0, s0) == g.identity());
}

TEST_CASE("coweight action preserves the pairing and the quadratic correction") {
  const AffineGround g = AffineGround::from_label("A2");
  // a spread of Weyl elements including translations
  std::vector<AffWeylElt> ws = {g.identity()};
  for (int i = 0; i <= g.rank(); ++i) ws.push_back(g.simple_reflection(i));
  ws.push_back(g.mult(g.simple_reflection(0), g.simple_reflection(1)));
  ws.push_back(g.mult(ws[1], g.mult(ws[2], ws[3])));
  const AffCoweight mus[] = {{IntVec{1, -2}, 1, 0}, {IntVec{0, 3}, 2, -1},
                             {IntVec{-1, 0}, 0, 2}};
  for (const auto& w : ws)
    for (const auto& mu : mus)
      for (const auto& a : g.positive_roots_within(2))
        CHECK(g.pairing(g.act_cw(w, mu), g.act_root(w, a)) == g.pairing(mu, a));
  // worked value: t^{alpha^vee}(d) = -alpha^vee + d - c in A1
  const AffineGround g1 = AffineGround::from_label("A1");
  const AffWeylElt t{IntVec{1}, g1.fin().identity()};
  const AffCoweight d{IntVec{0}, 1, 0};
  const AffCoweight img = g1.act_cw(t, d);
  CHECK(img == AffCoweight{IntVec{-2}, 1, -1});
}

TEST_CASE("inversion sets match the Coxeter engine") {
  for (const std::string label : {"A1", "A2"}) {
    const AffineGround g = AffineGround::from_label(label);
    const CoxeterOracle orc(label);
    for (const auto& e : orc.elements_up_to(label == "A1" ? 8 : 6)) {
      AffWeylElt w = g.identity();
      for (int i : e.word) w = g.mult(w, g.simple_reflection(i));
      CHECK(static_cast<int>(g.inv_weyl(w).size()) == orc.cox_length(e));
    }
  }
}

TEST_CASE("dominant translate in the affine datum") {
  const AffineGround g = AffineGround::from_label("A1");
  const AffCoweight mu{IntVec{5}, 1, -2};
  const auto dom = g.dominant_translate(mu);
  CHECK(g.act_cw(dom.witness, mu) == dom.rep);
  CHECK(g.fin().pairing(dom.rep.nu, IntVec{1}) >= 0);
  CHECK(dom.rep.level - g.fin().pairing(dom.rep.nu, g.fin().highest_root()) >= 0);
  // worked value: alpha^vee + d is one s_0-step from dominance, landing on d + c
  const AffCoweight av_d{IntVec{2}, 1, 0};
  CHECK(g.dominant_translate(av_d).rep == AffCoweight{IntVec{0}, 1, 1});
  // outside the Tits cone
  CHECK_THROWS_AS(g.dominant_translate(AffCoweight{IntVec{1}, -1, 0}), DomainError);
  CHECK_THROWS_AS(g.dominant_translate(AffCoweight{IntVec{1}, 0, 0}), DomainError);
}

TEST_CASE("neg_pairing_roots") {
  const AffineGround g = AffineGround::from_label("A1");
  // level-0 nonzero coweights have infinitely many negative pairings
  CHECK_THROWS_AS(g.neg_pairing_roots(AffCoweight{IntVec{1}, 0, 0}), DomainError);
  CHECK(g.neg_pairing_roots(AffCoweight{IntVec{0}, 0, 3}).empty());
  // alpha^vee + d: only -alpha + delta pairs to -1
  const auto neg = g.neg_pairing_roots(AffCoweight{IntVec{2}, 1, 0});
  REQUIRE(neg.size() == 1);
  CHECK(neg[0] == AffRoot{IntVec{-1}, 1});
  for (const auto& r : neg) CHECK(g.positive(r));
}

TEST_CASE("two_ht parity") {
  const AffineGround g = AffineGround::from_label("A2");
  for (int a = -2; a <= 2; ++a)
    for (int b = -2; b <= 2; ++b)
      for (int k = -2; k <= 2; ++k) {
        // <mu, 2rho> of any integral coweight expressed in coroot-lattice
        // directions is even in simply-laced type
        const IntVec nu = {2 * a + (-1) * b, (-1) * a + 2 * b};  // A(a,b)
        CHECK(g.two_ht(AffCoweight{nu, 1, k}) % 2 == 0);
      }
}
