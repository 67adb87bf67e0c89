#include "doctest.h"
#include "support/kh_cube.hpp"
#include "support/z_homology.hpp"
#include "tlkh/compile.hpp"

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

using namespace tlkh;
using namespace tlkh::testsupport;

namespace {

using HTable = std::map<std::pair<int, int>, ZHomGroup>;

HTable engine_closure_homology(const BraidWord& w) {
  return closed_homology(closure(braid_complex(w)));
}

Laurent lpoly(std::vector<std::pair<int, int>> terms) {
  Laurent p;
  for (auto [c, k] : terms) p += Laurent::monomial(c, k);
  return p;
}

}  // namespace

TEST_CASE("braid word parsing and validation") {
  BraidWord w = BraidWord::from_text(3, " 1 -2  1 ");
  CHECK(w.letters == std::vector<int>{1, -2, 1});
  CHECK(w.to_text() == "1 -2 1");
  CHECK(w.writhe() == 1);
  CHECK(w.mirrored().letters == std::vector<int>{-1, 2, -1});

  CHECK_THROWS_AS(BraidWord::from_text(2, "x"), std::invalid_argument);
  CHECK_THROWS_AS(BraidWord::from_text(2, "1 2"), std::invalid_argument);
  CHECK_THROWS_AS(BraidWord::from_text(2, "0"), std::invalid_argument);
  CHECK_THROWS_AS(BraidWord::from_text(0, ""), std::invalid_argument);
  CHECK_THROWS_AS(BraidWord::from_text(2, "1.5"), std::invalid_argument);
  CHECK_NOTHROW(BraidWord::from_text(1, ""));
}

TEST_CASE("torus and Jucys-Murphy words") {
  CHECK(torus_braid(2, 1).letters == std::vector<int>{-1});
  CHECK(torus_braid(3, 2).letters == std::vector<int>{-2, -1, -2, -1});
  CHECK(torus_braid(3, 0).letters.empty());
  for (int n = 2; n <= 5; ++n)
    for (int k = 0; k <= 3; ++k)
      CHECK(static_cast<int>(torus_braid(n, k).letters.size()) == k * (n - 1));
  for (int letter : torus_braid(4, 3).letters) CHECK(letter < 0);

  CHECK(jm_braid(2).letters == std::vector<int>{-1, -1});
  CHECK(jm_braid(3).letters == std::vector<int>{-2, -1, -1, -2});
  CHECK(jm_braid(4).letters == std::vector<int>{-3, -2, -1, -1, -2, -3});
}

TEST_CASE("crossing complex shapes") {
  Complex p = crossing_complex(3, 2, 1);
  REQUIRE(p.objects().size() == 2);
  CHECK(p.objects()[0].diag == FlatTangle::identity(3));
  CHECK(p.objects()[0].qshift == 1);
  CHECK(p.objects()[0].hdeg == 0);
  CHECK(p.objects()[1].diag == FlatTangle::turnback(3, 2));
  CHECK(p.objects()[1].qshift == 2);
  CHECK(p.objects()[1].hdeg == 1);

  Complex m = crossing_complex(2, 1, -1);
  CHECK(m.objects()[0].diag == FlatTangle::turnback(2, 1));
  CHECK(m.objects()[0].qshift == -2);
  CHECK(m.objects()[0].hdeg == -1);
  CHECK(m.objects()[1].qshift == -1);

  CHECK_THROWS_AS(crossing_complex(2, 2, 1), std::invalid_argument);
  CHECK_THROWS_AS(crossing_complex(1, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(crossing_complex(3, 1, 0), std::invalid_argument);
}

TEST_CASE("braid complex basics and concatenation") {
  BraidWord empty{3, {}};
  Complex e = braid_complex(empty);
  CHECK(e.objects().size() == 1);
  CHECK(e.objects()[0].diag == FlatTangle::identity(3));

  Complex whole = braid_complex(BraidWord{3, {1, 2, 1}});
  CHECK(whole.objects().size() == 8);
  Complex split = tensor_v(braid_complex(BraidWord{3, {1}}), braid_complex(BraidWord{3, {2, 1}}));
  CHECK(whole.objects() == split.objects());
  CHECK(whole.differential() == split.differential());
}

TEST_CASE("closure circle counts") {
  CHECK(closure_circles(FlatTangle::identity(1)) == 1);
  CHECK(closure_circles(FlatTangle::identity(2)) == 2);
  CHECK(closure_circles(FlatTangle::turnback(2, 1)) == 1);
  CHECK(closure_circles(FlatTangle::turnback(3, 1)) == 2);
  FlatTangle with_circle = FlatTangle::identity(2);
  with_circle.circles = 3;
  CHECK(closure_circles(with_circle) == 5);
}

TEST_CASE("kauffman bracket fixed values") {
  Laurent unknot = lpoly({{1, 1}, {1, -1}});
  CHECK(kauffman_bracket(BraidWord{1, {}}) == unknot);
  CHECK(kauffman_bracket(BraidWord{2, {}}) == unknot * unknot);
  // the crossing complexes carry their own writhe normalization, so kinks
  // leave the bracket alone
  CHECK(kauffman_bracket(BraidWord{2, {1}}) == unknot);
  CHECK(kauffman_bracket(BraidWord{2, {-1}}) == unknot);
  // positive Hopf link
  CHECK(kauffman_bracket(BraidWord{2, {1, 1}}) == lpoly({{1, 0}, {1, 2}, {1, 4}, {1, 6}}));
  // right-handed trefoil: chi of its Khovanov homology
  CHECK(kauffman_bracket(BraidWord{2, {1, 1, 1}}) == lpoly({{1, 1}, {1, 3}, {1, 5}, {-1, 9}}));
  // left-handed trefoil is the mirror
  CHECK(kauffman_bracket(BraidWord{2, {-1, -1, -1}}) ==
        lpoly({{1, -1}, {1, -3}, {1, -5}, {-1, -9}}));
}

TEST_CASE("euler characteristic of the closed complex matches the bracket") {
  std::vector<BraidWord> words = {
      {1, {}},          {2, {}},           {2, {1}},        {2, {-1}},
      {2, {1, 1}},      {2, {1, -1}},      {2, {1, 1, 1}},  {2, {-1, -1, -1}},
      {3, {1, 2, 1}},   {3, {-1, 2, -1}},  {3, {1, -2}},    {3, {2, 2, 2, 1}},
      {4, {1, 2, 3}},   {4, {-1, -2, -3, -2}},              {3, {-2, -1, -2, -1}},
      {2, {1, 1, 1, 1, 1, 1}},                              {4, {1, 2, 3, 1, 2, 3, 1, 2}},
  };
  for (const BraidWord& w : words) {
    CAPTURE(w.to_text());
    CHECK(graded_euler_characteristic(closure(braid_complex(w))) == kauffman_bracket(w));
  }
}

TEST_CASE("cube oracle is a complex") {
  for (const BraidWord& w : {BraidWord{2, {1, 1, 1}}, BraidWord{3, {1, -2, 1}},
                             BraidWord{3, {-2, -1, -2, -1}}, BraidWord{2, {-1, -1}}}) {
    CHECK(z_square_zero(kh_cube(w)));
  }
}

TEST_CASE("closure homology: engine equals brute-force cube") {
  std::vector<BraidWord> words = {
      {2, {1}},      {2, {-1}},        {2, {1, -1}},   {2, {1, 1}},
      {2, {1, 1, 1}}, {2, {-1, -1, -1}}, {3, {1, 2, 1}}, {3, {-2, -1, -2, -1}},
  };
  for (const BraidWord& w : words) {
    CAPTURE(w.to_text());
    CHECK(engine_closure_homology(w) == kh_closure_brute(w));
  }
}

TEST_CASE("frozen small link homology tables") {
  // one positive kink: unknot
  HTable unknot{{{-1, 0}, {1, {}}}, {{1, 0}, {1, {}}}};
  CHECK(engine_closure_homology(BraidWord{2, {1}}) == unknot);

  // positive Hopf link
  HTable hopf{{{0, 0}, {1, {}}}, {{2, 0}, {1, {}}}, {{4, 2}, {1, {}}}, {{6, 2}, {1, {}}}};
  CHECK(engine_closure_homology(BraidWord{2, {1, 1}}) == hopf);

  // right-handed trefoil, including its 2-torsion
  HTable rtrefoil{{{1, 0}, {1, {}}},
                  {{3, 0}, {1, {}}},
                  {{5, 2}, {1, {}}},
                  {{7, 3}, {0, {2}}},
                  {{9, 3}, {1, {}}}};
  CHECK(engine_closure_homology(BraidWord{2, {1, 1, 1}}) == rtrefoil);

  // left-handed trefoil (mirror): torsion sits one step off the mirror spot
  HTable ltrefoil{{{-1, 0}, {1, {}}},
                  {{-3, 0}, {1, {}}},
                  {{-5, -2}, {1, {}}},
                  {{-7, -2}, {0, {2}}},
                  {{-9, -3}, {1, {}}}};
  CHECK(engine_closure_homology(BraidWord{2, {-1, -1, -1}}) == ltrefoil);
}

TEST_CASE("Reidemeister moves at closure homology level") {
  // R2: sigma sigma^{-1} vs the identity braid on two strands
  CHECK(engine_closure_homology(BraidWord{2, {1, -1}}) ==
        engine_closure_homology(BraidWord{2, {}}));
  // R3: braid relation words
  CHECK(engine_closure_homology(BraidWord{3, {1, 2, 1}}) ==
        engine_closure_homology(BraidWord{3, {2, 1, 2}}));
  // R1 / Markov stabilization: kinked unknot vs bare circle
  CHECK(engine_closure_homology(BraidWord{2, {1}}) ==
        engine_closure_homology(BraidWord{1, {}}));
  CHECK(engine_closure_homology(BraidWord{2, {-1}}) ==
        engine_closure_homology(BraidWord{1, {}}));
}
