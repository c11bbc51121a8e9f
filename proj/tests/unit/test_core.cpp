#include <algorithm>
#include <random>
#include <set>

#include "bgk/constructions.hpp"
#include "bgk/core.hpp"
#include "corpus.hpp"
#include "doctest.h"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace bgk;
using namespace bgk::test;

TEST_CASE("validate: one vertex with two doubles") {
  RawGSet r = raw_fixture("ex1");
  auto rep = validate(r);
  CHECK(rep.valid());
  CHECK(rep.is_modified_bg);
  CHECK_FALSE(rep.is_fms_bg);
  auto st = vertex_stats(build(r));
  CHECK(st.n() == 1);
  CHECK(st.l() == 2);
  CHECK(st.k() == 0);
}

TEST_CASE("validate: degree not constant on an orbit") {
  RawGSet r = raw_fixture("ex1");
  r.degree["f"] = 3;
  auto rep = validate(r);
  REQUIRE_FALSE(rep.valid());
  CHECK(rep.malformed.empty());
  bool at_e = false;
  for (auto& v : rep.violations) at_e |= v.axiom == "mf1" && v.witness == "e";
  CHECK(at_e);
  CHECK_THROWS_AS(build(r), Error);
}

TEST_CASE("validate: U smaller than E") {
  auto rep = validate(raw_fixture("ex2"));
  CHECK(rep.valid());
  CHECK_FALSE(rep.is_fms_bg);
  CHECK_FALSE(rep.is_modified_bg);
}

TEST_CASE("validate: unknown identifiers are malformed, not violations") {
  RawGSet r = raw_fixture("ex1");
  r.g["e"] = "zz";
  auto rep = validate(r);
  CHECK_FALSE(rep.malformed.empty());
}

TEST_CASE("validate: tau and sigma axioms") {
  RawGSet r = raw_fixture("weakly");
  r.tau["a"] = "b";
  auto rep = validate(r);
  CHECK_FALSE(rep.valid());
  bool inv = false;
  for (auto& v : rep.violations) inv |= v.axiom == "tau-involution";
  CHECK(inv);

  // sigma = g^2 on a 4-cycle; pairing a with b breaks tau sigma = sigma tau
  RawGSet s = raw_fixture("weakly");
  s.tau = {{"a", "b"}, {"b", "a"}, {"c", "d"}, {"d", "c"}};
  auto rep2 = validate(s);
  bool mf2 = false;
  for (auto& v : rep2.violations) mf2 |= v.axiom == "mf2";
  CHECK_FALSE(mf2);
  s.tau = {{"a", "b"}, {"b", "a"}, {"c", "c"}, {"d", "d"}};
  auto rep3 = validate(s);
  mf2 = false;
  for (auto& v : rep3.violations) mf2 |= v.axiom == "mf2";
  CHECK(mf2);
}

TEST_CASE("vertex stats") {
  for (std::string name : {"ex1", "ex2", "weakly", "twocycle", "star3", "E_case3_r3_l1"}) {
    BrauerGSet E = fixture(name);
    auto st = vertex_stats(E);
    int u = 0;
    for (int e = 0; e < E.size(); ++e) u += E.in_u(e);
    CHECK(2 * st.k() + st.l() == u);
    for (auto& v : st.vertices)
      CHECK(v.f_degree == Rational::make(v.degree, static_cast<long long>(v.half_edges.size())));
  }
  auto w = vertex_stats(fixture("weakly"));
  REQUIRE(w.n() == 1);
  CHECK(w.vertices[0].f_degree == Rational{1, 2});
}

TEST_CASE("nakayama") {
  auto s1 = nakayama(fixture("ex1"));
  CHECK(s1.order == 1);
  BrauerGSet W = fixture("weakly");
  auto s2 = nakayama(W);
  CHECK(s2.order == 2);
  for (int e = 0; e < W.size(); ++e) CHECK(s2.map[e] == W.g[W.g[e]]);
  BrauerGSet S = fixture("star3");
  auto s3 = nakayama(S);
  CHECK(s3.order == 1);
  CHECK(permutation_order({1, 2, 0, 4, 3}) == 6);
}

TEST_CASE("sigma commutes with tau and acts freely") {
  auto corpus = exhaustive_fms(6, 4);
  auto extra = random_fms(40, 11);
  corpus.insert(corpus.end(), extra.begin(), extra.end());
  for (auto& E : corpus) {
    auto s = nakayama(E);
    for (int e = 0; e < E.size(); ++e) CHECK(E.tau[s.map[e]] == s.map[E.tau[e]]);
    std::vector<int> p(E.size());
    std::iota(p.begin(), p.end(), 0);
    for (long long k = 1; k < s.order; ++k) {
      for (int e = 0; e < E.size(); ++e) p[e] = s.map[p[e]];
      for (int e = 0; e < E.size(); ++e) CHECK(p[e] != e);
    }
  }
}

TEST_CASE("walk parsing and formatting") {
  BrauerGSet E = fixture("ex2");
  Walk w = W(E, "e g^2 tau g^-1");
  CHECK(w.letters.size() == 4);
  CHECK(E.ids[walk_target(E, w)] == "e2");
  CHECK(format_walk(E, w) == "e g^2 tau g^-1");
  CHECK(walk_target(E, W(E, "e g tau")) == E.at("e1"));
}

TEST_CASE("walk outside U") {
  BrauerGSet E = fixture("ex2");
  CHECK_THROWS_AS(W(E, "e g^3 tau"), Error);
  CHECK_FALSE(walk_valid(E, Walk{E.at("e2"), {Letter::Tau}}));
}

TEST_CASE("normal form: backtracking") {
  BrauerGSet E = fixture("ex2");
  auto nf = walk_normal_form(E, W(E, "e g^-1 g"));
  CHECK(nf.special.source == E.at("e"));
  CHECK(nf.special.exps == std::vector<int>{0});
  CHECK(nf.power == 0);
}

TEST_CASE("normal form: the square move") {
  for (std::string name : {"ex1", "ex2", "weakly", "twocycle", "star3", "E_case1_r2"}) {
    BrauerGSet E = fixture(name);
    for (int e = 0; e < E.size(); ++e) {
      if (!E.in_u(e)) continue;
      // g^{d(e)} tau and tau g^{d(tau e)} both reach sigma tau e
      Walk a{e, std::vector<Letter>(E.deg[e], Letter::G)};
      a.letters.push_back(Letter::Tau);
      Walk b{e, {Letter::Tau}};
      b.letters.insert(b.letters.end(), E.deg[E.tau[e]], Letter::G);
      CHECK(walk_target(E, a) == walk_target(E, b));
      CHECK(walk_normal_form(E, a) == walk_normal_form(E, b));
      CHECK(walks_homotopic(E, a, b));
    }
  }
}

TEST_CASE("normal form: a full turn is not trivial") {
  BrauerGSet E = fixture("ex1");
  int e = E.at("e");
  Walk turn{e, {Letter::G, Letter::G}}, empty{e, {}};
  CHECK(walk_target(E, turn) == e);
  CHECK_FALSE(walks_homotopic(E, turn, empty));
  CHECK(walk_normal_form(E, turn).power == 1);
}

TEST_CASE("normal form: idempotent and sound") {
  std::mt19937 rng(5);
  for (std::string name : {"ex1", "ex2", "weakly", "twocycle", "star3", "E_case2_r2", "E_case3_r3_l1"}) {
    BrauerGSet E = fixture(name);
    for (int t = 0; t < 200; ++t) {
      Walk w{static_cast<int>(rng() % E.size()), {}};
      int x = w.source, len = static_cast<int>(rng() % 16);
      while (static_cast<int>(w.letters.size()) < len) {
        Letter l = static_cast<Letter>(rng() % 3);
        if (l == Letter::Tau && !E.in_u(x)) continue;
        w.letters.push_back(l);
        x = l == Letter::G ? E.g[x] : l == Letter::GInv ? E.ginv[x] : E.tau[x];
      }
      auto nf = walk_normal_form(E, w);
      CHECK(special_walk_valid(E, nf.special));
      Walk back = expand(E, nf);
      CHECK(walk_target(E, back) == walk_target(E, w));
      CHECK(walk_normal_form(E, back) == nf);
      CHECK(walks_homotopic(E, w, back));
      Walk loop = concat(w, inverse_walk(E, w));
      CHECK(walks_homotopic(E, loop, Walk{w.source, {}}));
    }
  }
}

TEST_CASE("normal form against the move search on the four half-edge example") {
  BrauerGSet E = fixture("ex2");
  std::mt19937 rng(17);
  for (int s = 0; s < E.size(); ++s) {
    auto H = homotopy_oracle(E, s, 12, 16);
    std::vector<std::vector<Letter>> walks;
    for (auto& [w, c] : H.cls) walks.push_back(w);
    std::shuffle(walks.begin(), walks.end(), rng);
    walks.resize(std::min<size_t>(walks.size(), 150));
    for (size_t i = 0; i < walks.size(); ++i)
      for (size_t j = i + 1; j < walks.size(); ++j) {
        Walk a{s, walks[i]}, b{s, walks[j]};
        if (walk_target(E, a) != walk_target(E, b)) continue;
        CHECK(walks_homotopic(E, a, b) == (H.cls.at(walks[i]) == H.cls.at(walks[j])));
      }
  }
}

TEST_CASE("walks_homotopic needs a common source") {
  BrauerGSet E = fixture("ex1");
  CHECK_THROWS_AS(walks_homotopic(E, Walk{0, {}}, Walk{1, {}}), Error);
}

TEST_CASE("connected components") {
  BrauerGSet E = fixture("ex1");
  CHECK(connected_components(E).size() == 1);
  CHECK(is_connected(E));
  BrauerGSet two = from_arrays({"a", "b", "c", "d"}, {1, 0, 3, 2}, {0, 1, 2, 3}, {2, 2, 2, 2});
  CHECK(connected_components(two).size() == 2);
  CHECK_FALSE(is_connected(two));
  BrauerGSet T = fixture("twocycle");
  CHECK(connected_components(hat(T).hat).size() == 2);
  CHECK(connected_components(hat(fixture("ex1")).hat).size() == 1);
}
