#include "doctest.h"
#include "tlkh/frobcob.hpp"

#include <stdexcept>

using namespace tlkh;

namespace {
FlatTangle empty_diagram(int circles = 0) {
  FlatTangle t;
  t.circles = circles;
  return t;
}
}  // namespace

TEST_CASE("gluing circle counts") {
  FlatTangle i2 = FlatTangle::identity(2), e1 = FlatTangle::turnback(2, 1);
  CHECK(glue(i2, i2).ncircles == 2);
  CHECK(glue(e1, e1).ncircles == 2);
  CHECK(glue(i2, e1).ncircles == 1);
  CHECK(glue(FlatTangle::identity(1), FlatTangle::identity(1)).ncircles == 1);
  CHECK_THROWS_AS(glue(i2, FlatTangle::cup()), std::invalid_argument);
}

TEST_CASE("hom basis sizes and degrees") {
  FlatTangle i1 = FlatTangle::identity(1), i2 = FlatTangle::identity(2),
             e1 = FlatTangle::turnback(2, 1);
  CHECK(hom_basis(i1, i1).size() == 2);
  CHECK(hom_basis(e1, e1).size() == 4);
  CHECK(hom_basis(i2, e1).size() == 2);
  // Degrees of Hom(I2, e1): the single circle labeled 1 or X.
  auto hb = hom_basis(i2, e1);
  CHECK(hb[0].second == -1);
  CHECK(hb[1].second == -3);
}

TEST_CASE("generator degrees") {
  FlatTangle i1 = FlatTangle::identity(1), i2 = FlatTangle::identity(2),
             e1 = FlatTangle::turnback(2, 1);
  CHECK(CobMorphism::identity(i1).qdeg() == 0);
  CHECK(CobMorphism::identity(i2).qdeg() == 0);
  CHECK(CobMorphism::dot(i1, 0).qdeg() == -2);
  CHECK(CobMorphism::saddle(i2, e1).qdeg() == -1);
  CHECK(CobMorphism::saddle(e1, i2).qdeg() == -1);
  FlatTangle c1 = empty_diagram(1);
  CHECK(CobMorphism::cap_circle(c1, 0, false).qdeg() == 1);
  CHECK(CobMorphism::cap_circle(c1, 0, true).qdeg() == -1);
  CHECK(CobMorphism::cup_circle(empty_diagram(), 0, false).qdeg() == 1);
  CHECK(CobMorphism::cup_circle(empty_diagram(), 0, true).qdeg() == -1);
  CHECK_THROWS_AS(CobMorphism::saddle(i2, i2), std::invalid_argument);
}

TEST_CASE("identity acts as a unit") {
  FlatTangle i2 = FlatTangle::identity(2), e1 = FlatTangle::turnback(2, 1);
  CobMorphism s = CobMorphism::saddle(i2, e1);
  CHECK(compose(CobMorphism::identity(i2), s) == s);
  CHECK(compose(s, CobMorphism::identity(e1)) == s);
  FlatTangle c1 = empty_diagram(1);
  CobMorphism idc = CobMorphism::identity(c1);
  CHECK(compose(idc, idc) == idc);
  CHECK(idc.terms().size() == 2);  // 1#X + X#1 on the circle pair
}

TEST_CASE("sphere relations") {
  FlatTangle e = empty_diagram(), c1 = empty_diagram(1);
  CobMorphism birth = CobMorphism::cup_circle(e, 0, false);
  CobMorphism birth_dot = CobMorphism::cup_circle(e, 0, true);
  CobMorphism death = CobMorphism::cap_circle(c1, 0, false);
  CobMorphism death_dot = CobMorphism::cap_circle(c1, 0, true);
  CHECK(compose(birth, death).is_zero());                    // sphere
  CHECK(compose(birth, death_dot) == CobMorphism::identity(e));  // dotted sphere
  CHECK(compose(birth_dot, death) == CobMorphism::identity(e));
  CHECK(compose(birth_dot, death_dot).is_zero());            // two dots
}

TEST_CASE("delooping maps are inverse isomorphisms") {
  FlatTangle e = empty_diagram(), c1 = empty_diagram(1);
  // The circle splits as q^{+1} + q^{-1}: projections are dotted death and
  // death; inclusions are birth and dotted birth.
  CobMorphism pi_plus = CobMorphism::cap_circle(c1, 0, true);
  CobMorphism pi_minus = CobMorphism::cap_circle(c1, 0, false);
  CobMorphism io_plus = CobMorphism::cup_circle(e, 0, false);
  CobMorphism io_minus = CobMorphism::cup_circle(e, 0, true);
  CHECK(compose(io_plus, pi_plus) == CobMorphism::identity(e));
  CHECK(compose(io_minus, pi_minus) == CobMorphism::identity(e));
  CHECK(compose(io_plus, pi_minus).is_zero());
  CHECK(compose(io_minus, pi_plus).is_zero());
  CobMorphism round_trip = compose(pi_plus, io_plus) + compose(pi_minus, io_minus);
  CHECK(round_trip == CobMorphism::identity(c1));
}

TEST_CASE("two dots annihilate") {
  FlatTangle i1 = FlatTangle::identity(1);
  CobMorphism d = CobMorphism::dot(i1, 0);
  CHECK(compose(d, d).is_zero());
}

TEST_CASE("neck cutting: tube equals sum of dotted identities") {
  FlatTangle i2 = FlatTangle::identity(2), e1 = FlatTangle::turnback(2, 1);
  CobMorphism tube = compose(CobMorphism::saddle(i2, e1), CobMorphism::saddle(e1, i2));
  CHECK(tube == CobMorphism::dot(i2, 0) + CobMorphism::dot(i2, 1));
}

TEST_CASE("composition is associative and q-additive") {
  FlatTangle i2 = FlatTangle::identity(2), e1 = FlatTangle::turnback(2, 1);
  CobMorphism s1 = CobMorphism::saddle(i2, e1);
  CobMorphism s2 = CobMorphism::saddle(e1, i2);
  CobMorphism d0 = CobMorphism::dot(e1, 0);
  CHECK(compose(compose(s1, d0), s2) == compose(s1, compose(d0, s2)));
  CHECK(compose(s1, d0).qdeg() == s1.qdeg() + d0.qdeg());

  // With free circles in the middle as well.
  FlatTangle e1c = e1;
  e1c.circles = 1;
  CobMorphism up = CobMorphism::cup_circle(e1, 0, false);  // e1 -> e1 + circle
  CobMorphism down = CobMorphism::cap_circle(e1c, 0, true);
  CHECK(compose(compose(s1, up), compose(down, s2)) ==
        compose(s1, compose(up, compose(down, s2))));
}

TEST_CASE("endomorphisms of a turnback multiply componentwise") {
  FlatTangle e1 = FlatTangle::turnback(2, 1);
  // Circles of glue(e1,e1): circle 0 = bottom pair, circle 1 = top pair.
  auto m = [&](Labeling mask) { return CobMorphism::from_labeling(e1, e1, mask, Int(1)); };
  CHECK(compose(m(0b01), m(0b00)) == m(0b01));   // X.1 = X on the bottom factor
  CHECK(compose(m(0b01), m(0b01)).is_zero());    // X.X = 0
  CHECK(compose(m(0b01), m(0b10)) == m(0b11));   // independent factors
}

TEST_CASE("vertical stacking") {
  FlatTangle i1 = FlatTangle::identity(1), i2 = FlatTangle::identity(2),
             e1 = FlatTangle::turnback(2, 1);

  SUBCASE("identity stacks to identity, including created circles") {
    CobMorphism v = vstack(CobMorphism::identity(e1), CobMorphism::identity(e1));
    FlatTangle e1c = e1;
    e1c.circles = 1;
    CHECK(v == CobMorphism::identity(e1c));
  }

  SUBCASE("cup over cap is the identity of a free circle") {
    CobMorphism v = vstack(CobMorphism::identity(FlatTangle::cup()),
                           CobMorphism::identity(FlatTangle::cap()));
    CHECK(v == CobMorphism::identity(empty_diagram(1)));
  }

  SUBCASE("whiskered saddle keeps q-degree") {
    CobMorphism s = CobMorphism::saddle(i2, e1);
    CobMorphism w = vstack(s, CobMorphism::identity(i2));
    CHECK(w.qdeg() == -1);
    CHECK(w.src() == i2);
    CHECK(w.tgt() == e1);
    // Stacking the identity of I2 changes nothing at all here.
    CHECK(w == s);
  }

  SUBCASE("interchange law") {
    CobMorphism f = CobMorphism::saddle(i2, e1);
    CobMorphism g = CobMorphism::dot(e1, 0);
    // (f then g upstairs) both orders of whiskering agree.
    CobMorphism a = compose(vstack(f, CobMorphism::identity(e1)),
                            vstack(CobMorphism::identity(e1), g));
    CobMorphism b = vstack(f, g);
    CHECK(a == b);
    CobMorphism c = compose(vstack(CobMorphism::identity(i2), g), vstack(f, CobMorphism::identity(e1)));
    CHECK(c == b);
  }

  SUBCASE("q-degree additivity") {
    CobMorphism f = CobMorphism::saddle(i2, e1);
    CobMorphism g = CobMorphism::dot(e1, 0);
    CHECK(vstack(f, g).qdeg() == f.qdeg() + g.qdeg());
    CHECK(vstack(g, f).qdeg() == f.qdeg() + g.qdeg());
  }

  SUBCASE("stacking saddles over turnbacks creates the middle annulus") {
    // e1 stacked on e1 with identity maps, then cap the carried circle with a
    // dot: composing back and forth must satisfy the Frobenius relations.
    CobMorphism idstack = vstack(CobMorphism::identity(e1), CobMorphism::identity(e1));
    FlatTangle e1c = e1;
    e1c.circles = 1;
    CobMorphism capd = CobMorphism::cap_circle(e1c, 0, true);
    CobMorphism composed = compose(idstack, capd);
    CHECK(composed.qdeg() == -1);
  }

  (void)i1;
}

TEST_CASE("horizontal stacking") {
  FlatTangle i1 = FlatTangle::identity(1), i2 = FlatTangle::identity(2),
             e1 = FlatTangle::turnback(2, 1);
  CHECK(hstack(CobMorphism::identity(i1), CobMorphism::identity(i1)) ==
        CobMorphism::identity(i2));
  // A dot on the left strand stays on the left strand.
  CobMorphism d = hstack(CobMorphism::dot(i1, 0), CobMorphism::identity(i1));
  CHECK(d == CobMorphism::dot(i2, 0));
  CobMorphism d2 = hstack(CobMorphism::identity(i1), CobMorphism::dot(i1, 0));
  CHECK(d2 == CobMorphism::dot(i2, 1));
  // Saddle next to a strand is the saddle of the bigger diagram.
  CobMorphism s = hstack(CobMorphism::saddle(i2, e1), CobMorphism::identity(i1));
  CHECK(s == CobMorphism::saddle(FlatTangle::identity(3), FlatTangle::turnback(3, 1)));
  CHECK(hstack(CobMorphism::identity(i1), CobMorphism::saddle(i2, e1)) ==
        CobMorphism::saddle(FlatTangle::identity(3), FlatTangle::turnback(3, 2)));
}
