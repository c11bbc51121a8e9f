#include <set>

#include "bgk/bands.hpp"
#include "bgk/classify.hpp"
#include "bgk/constructions.hpp"
#include "corpus.hpp"
#include "doctest.h"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace bgk;
using namespace bgk::test;

namespace {

BandWord rotate(const BandWord& w, size_t k) {
  BandWord r;
  for (size_t i = 0; i < w.steps.size(); ++i) r.steps.push_back(w.steps[(i + k) % w.steps.size()]);
  return r;
}

// two 2-cycles glued at one vertex
BrauerGSet figure_eight() {
  Proto p;
  // vertex 0: 0,1,2,3 ; vertex 1: 4,5 ; vertex 2: 6,7
  p.g = {1, 2, 3, 0, 5, 4, 7, 6};
  p.tau = {4, 5, 6, 7, 0, 1, 2, 3};
  p.deg.assign(8, 0);
  trivial_degrees(p);
  return to_gset(p, "eight");
}

}  // namespace

TEST_CASE("canonical bands: rotation and inversion") {
  BrauerGSet E = fixture("E_case3_r3_l1");
  auto bands = enumerate_bands(E, band_bound(E));
  REQUIRE_FALSE(bands.empty());
  for (auto& b : bands) {
    CHECK(band_valid(E, b));
    CHECK(canonical_band(E, b) == b);
    CHECK(canonical_band(E, band_inverse(E, b)) == b);
    for (size_t k = 0; k < b.steps.size(); ++k) CHECK(canonical_band(E, rotate(b, k)) == b);
    CHECK(band_primitive(b));
    std::string text;
    for (auto& st : b.steps) text += E.ids[st.e] + " " + std::to_string(st.k) + " " + std::to_string(st.l) + ";";
    CHECK(parse_band(E, text) == b);
    CHECK(format_band(E, b) == format_walk(E, band_period_walk(E, b)));
    Walk p = band_period_walk(E, b);
    CHECK(walk_target(E, p) == p.source);
  }
  for (size_t i = 0; i < bands.size(); ++i)
    for (size_t j = i + 1; j < bands.size(); ++j) CHECK_FALSE(canonical_band(E, bands[i]) == canonical_band(E, bands[j]));
  BandWord bad{{BandStep{0, 0, 1}}};
  CHECK_THROWS_AS(canonical_band(E, bad), Error);
}

TEST_CASE("no bands on Brauer trees") {
  for (auto& P : brauer_trees(1, 5)) {
    BrauerGSet T = to_gset(P, "t");
    CHECK(enumerate_bands(T, band_bound(T) + 2).empty());
    auto c = band_count(T);
    CHECK(c.finite);
    CHECK(c.n == 0);
  }
}

TEST_CASE("band counts on small examples") {
  BrauerGSet W = fixture("weakly");
  CHECK(enumerate_bands(W, 2).size() == 2);
  CHECK(enumerate_bands(W, 6).size() == 2);
  auto cw = band_count(W);
  CHECK(cw.finite);
  CHECK(cw.n == 2);

  for (int m : {1, 3, 5}) {
    BrauerGSet C = to_gset(unicyclic(m, 0).front(), "odd");
    CHECK(band_count(C).n == 1);
  }
  CHECK(band_count(fixture("twocycle")).n == 2);

  auto c8 = band_count(figure_eight());
  CHECK_FALSE(c8.finite);
  CHECK(classify_rep_type(figure_eight()).tag == RepTag::NonDomesticTame);

  BrauerGSet split = from_arrays({"a", "b", "c", "d"}, {0, 1, 2, 3}, {1, 0, 3, 2}, {1, 1, 1, 1});
  CHECK_THROWS_AS(band_count(split), Error);
}

TEST_CASE("enumeration against the unpruned search") {
  auto corpus = exhaustive_fms(6, 4);
  for (auto& E : corpus) {
    for (int k = 1; k <= 4; ++k) {
      auto lib = enumerate_bands(E, k);
      std::set<BandWord> got(lib.begin(), lib.end());
      CHECK(got.size() == lib.size());
      CHECK(got == band_oracle(E, k));
    }
  }
}

TEST_CASE("max_classes stops early") {
  BrauerGSet E = figure_eight();
  auto few = enumerate_bands(E, 6, 3);
  CHECK(few.size() <= 3);
  CHECK(enumerate_bands(E, 6).size() > 3);
}

TEST_CASE("bands project to bands") {
  auto corpus = exhaustive_fms(8, 6);
  for (auto& E : corpus) {
    if (classify_rep_type(E).tag == RepTag::NonDomesticTame) continue;
    auto Q = quotient_by_sigma(E);
    for (auto& b : enumerate_bands(E, band_bound(E))) {
      BandWord img;
      for (auto s : b.steps) img.steps.push_back({Q.projection.map[s.e], s.k, s.l});
      CHECK(band_valid(Q.quotient, img));
    }
  }
}

TEST_CASE("band bound is the sum of d - 1") {
  BrauerGSet W = fixture("weakly");
  CHECK(band_bound(W) == 4);
  CHECK(band_bound(fixture("twocycle")) == 4);
  CHECK(band_bound(fixture("star3")) == 6);
}
