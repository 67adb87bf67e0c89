#include "doctest.h"
#include "support/fp_rank.hpp"
#include "support/kh_cube.hpp"
#include "support/z_homology.hpp"
#include "tlkh/compile.hpp"
#include "tlkh/homology.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

using namespace tlkh;
using namespace tlkh::testsupport;

namespace {

BigradedGroup closure_homology(const BraidWord& w) {
  return homology(closure(braid_complex(w)));
}

HomologyGroup zfree(long long r) { return HomologyGroup{r, {}}; }

// regrade the (q, h)-keyed oracle output to (i, q) and split invariant
// factors into prime powers
BigradedGroup from_brute(const std::map<std::pair<int, int>, ZHomGroup>& b) {
  BigradedGroup out;
  for (const auto& [qh, g] : b) {
    HomologyGroup hg;
    hg.free_rank = g.free_rank;
    for (const Int& t : g.torsion)
      for (const Int& pk : prime_power_factors(t)) hg.torsion.push_back(pk);
    std::sort(hg.torsion.begin(), hg.torsion.end());
    out.entries[{qh.second, qh.first}] = std::move(hg);
  }
  return out;
}

}  // namespace

TEST_CASE("prime power factorization") {
  CHECK(prime_power_factors(2) == std::vector<Int>{Int(2)});
  CHECK(prime_power_factors(12) == std::vector<Int>{Int(3), Int(4)});
  CHECK(prime_power_factors(8) == std::vector<Int>{Int(8)});
  CHECK(prime_power_factors(360) == std::vector<Int>{Int(5), Int(8), Int(9)});
  CHECK_THROWS_AS(prime_power_factors(Int(1)), std::invalid_argument);
  CHECK_THROWS_AS(prime_power_factors(Int(0)), std::invalid_argument);
}

TEST_CASE("unknot homology and its json form") {
  BigradedGroup h = closure_homology(BraidWord{1, {}});
  BigradedGroup expect;
  expect.entries[{0, -1}] = zfree(1);
  expect.entries[{0, 1}] = zfree(1);
  CHECK(h == expect);
  CHECK(h.to_json() ==
        R"({"-1":{"0":{"free":1,"torsion":[]}},"1":{"0":{"free":1,"torsion":[]}}})");
}

TEST_CASE("trefoil homology: production equals brute oracle including torsion") {
  BraidWord w{2, {1, 1, 1}};
  BigradedGroup h = closure_homology(w);
  CHECK(h == from_brute(kh_closure_brute(w)));
  CHECK(h.entries.at({3, 7}) == HomologyGroup{0, {Int(2)}});
  CHECK(h.to_json().find("\"torsion\":[2]") != std::string::npos);
}

TEST_CASE("cinquefoil table") {
  BraidWord w{2, {1, 1, 1, 1, 1}};
  BigradedGroup h = closure_homology(w);
  BigradedGroup expect;
  expect.entries[{0, 3}] = zfree(1);
  expect.entries[{0, 5}] = zfree(1);
  expect.entries[{2, 7}] = zfree(1);
  expect.entries[{3, 9}] = HomologyGroup{0, {Int(2)}};
  expect.entries[{3, 11}] = zfree(1);
  expect.entries[{4, 11}] = zfree(1);
  expect.entries[{5, 13}] = HomologyGroup{0, {Int(2)}};
  expect.entries[{5, 15}] = zfree(1);
  CHECK(h == expect);
  CHECK(h == from_brute(kh_closure_brute(w)));
}

TEST_CASE("euler characteristic of homology equals the bracket") {
  std::vector<BraidWord> words = {
      {2, {1, 1}}, {2, {1, 1, 1, 1, 1}}, {3, {1, 2, 1}}, {3, {-2, -1, -2, -1}}, {4, {1, -2, 3}}};
  for (const BraidWord& w : words) {
    CAPTURE(w.to_text());
    CHECK(euler_characteristic(closure_homology(w)) == kauffman_bracket(w));
  }
}

TEST_CASE("poincare polynomials over Z and F_p") {
  BigradedGroup h = closure_homology(BraidWord{2, {1, 1, 1}});
  std::map<std::pair<int, int>, Int> ez{{{0, 1}, 1}, {{0, 3}, 1}, {{2, 5}, 1}, {{3, 9}, 1}};
  CHECK(poincare(h) == ez);
  // the Z/2 at (3,7) contributes mod 2 at both (3,7) and (2,7)
  std::map<std::pair<int, int>, Int> e2{{{0, 1}, 1}, {{0, 3}, 1}, {{2, 5}, 1},
                                        {{2, 7}, 1}, {{3, 7}, 1}, {{3, 9}, 1}};
  CHECK(poincare(h, 2) == e2);
  // odd primes see only the free part
  CHECK(poincare(h, 3) == ez);
  Int total2 = 0, totalz = 0;
  for (const auto& [k, v] : poincare(h, 2)) total2 += v;
  for (const auto& [k, v] : poincare(h)) totalz += v;
  CHECK(total2 == totalz + 2);
  CHECK_THROWS_AS(poincare(h, 4), std::invalid_argument);
}

TEST_CASE("mod-p dimensions agree with direct F_p elimination") {
  std::vector<BraidWord> words = {{2, {1, 1, 1}}, {2, {1, 1, 1, 1, 1}}, {3, {-2, -1, -2, -1}}};
  for (const BraidWord& w : words) {
    ZComplex z = kh_cube(w);
    BigradedGroup h = homology(z);
    for (int p : {2, 3, 5}) {
      CAPTURE(w.to_text());
      CAPTURE(p);
      std::map<std::pair<int, int>, Int> direct;
      for (const auto& [qh, d] : fp_homology_dims(z, p)) direct[{qh.second, qh.first}] = d;
      CHECK(poincare(h, p) == direct);
    }
  }
}

TEST_CASE("homology rejects complexes with boundary") {
  CHECK_THROWS_AS(homology(braid_complex(BraidWord{2, {1}})), std::invalid_argument);
}

TEST_CASE("windowed homology filters quantum degrees") {
  ZComplex z = kh_cube(BraidWord{2, {1, 1, 1}});
  BigradedGroup whole = homology(z);
  BigradedGroup window = homology(z, 5, 7);
  BigradedGroup expect;
  for (const auto& [iq, g] : whole.entries)
    if (iq.second >= 5 && iq.second <= 7) expect.entries[iq] = g;
  CHECK(window == expect);
  CHECK(window.entries.size() == 2);
}
