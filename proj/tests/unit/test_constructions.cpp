#include <numeric>
#include <random>

#include "bgk/classify.hpp"
#include "bgk/constructions.hpp"
#include "corpus.hpp"
#include "doctest.h"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace bgk;
using namespace bgk::test;

namespace {

void check_covering(const CoveringMap& c) {
  CHECK(covering_violations(c.source, c.target, c.map).empty());
}

std::vector<BrauerGSet> small_corpus() {
  auto c = exhaustive_fms(6, 4);
  auto r = random_fms(30, 3, 8, 20);
  c.insert(c.end(), r.begin(), r.end());
  return c;
}

}  // namespace

TEST_CASE("quotient by the trivial group") {
  BrauerGSet E = fixture("weakly");
  auto Q = quotient(E, {});
  CHECK(Q.group_order == 1);
  CHECK(are_isomorphic(Q.quotient, E));
  for (int e = 0; e < E.size(); ++e) CHECK(Q.quotient.ids[Q.projection.map[e]] == E.ids[e]);
  check_covering(Q.projection);
}

TEST_CASE("quotient of the weakly symmetric example") {
  BrauerGSet E = fixture("weakly");
  auto Q = quotient_by_sigma(E);
  CHECK(Q.group_order == 2);
  CHECK(Q.projection.sheet_count == 2);
  CHECK(are_isomorphic(Q.quotient, fixture("ex1")));
  check_covering(Q.projection);
  CHECK_FALSE(is_admissible(E, {nakayama(E).map}));
  CHECK(is_admissible(E, {}));
}

TEST_CASE("quotient rejects maps that are not automorphisms") {
  BrauerGSet E = fixture("weakly");
  CHECK_THROWS_AS(quotient(E, {{1, 0, 2, 3}}), Error);
  CHECK_FALSE(is_automorphism(E, {1, 0, 2, 3}));
  CHECK(is_automorphism(E, nakayama(E).map));
}

TEST_CASE("quotient fibres are group orbits") {
  for (auto& E : small_corpus()) {
    auto s = nakayama(E);
    auto Q = quotient_by_sigma(E);
    check_covering(Q.projection);
    CHECK(Q.group_order == s.order);
    CHECK(Q.projection.sheet_count == s.order);
    for (int e = 0; e < E.size(); ++e) {
      int x = e;
      for (long long k = 0; k < s.order; ++k, x = s.map[x]) CHECK(Q.projection.map[x] == Q.projection.map[e]);
    }
  }
}

TEST_CASE("hat of the one-vertex example is a 2-cycle") {
  auto H = hat(fixture("ex1"));
  auto st = vertex_stats(H.hat);
  CHECK(st.n() == 2);
  CHECK(st.k() == 2);
  CHECK(st.l() == 0);
  CHECK(are_isomorphic(H.hat, fixture("weakly_reduced")));
  CHECK(H.projection.sheet_count == 2);
  check_covering(H.projection);
}

TEST_CASE("hat properties") {
  std::vector<BrauerGSet> all = small_corpus();
  for (std::string name : {"ex1", "ex2", "weakly"}) all.push_back(fixture(name));
  for (auto& E : all) {
    auto H = hat(E);
    check_covering(H.projection);
    for (int e = 0; e < H.hat.size(); ++e)
      if (H.hat.in_u(e)) CHECK(H.hat.tau[e] != e);
    CHECK(is_automorphism(H.hat, H.swap));
    CHECK(are_isomorphic(quotient(H.hat, {H.swap}).quotient, E));
    if (!E.has_doubles()) CHECK(connected_components(H.hat).size() == 2 * connected_components(E).size());
  }
}

TEST_CASE("reduced form") {
  CHECK(are_isomorphic(reduced_form(fixture("weakly")), fixture("weakly_reduced")));
  BrauerGSet T = fixture("twocycle");
  CHECK(are_isomorphic(reduced_form(T), T));
  BrauerGSet B = fixture("base_case2");
  BrauerGSet E = construct_domestic(B, 2, 3);
  CHECK(is_admissible(E, {nakayama(E).map}));
  CHECK(are_isomorphic(reduced_form(E), B));
  CHECK_THROWS_AS(reduced_form(fixture("ex1")), Error);
  for (auto& X : small_corpus()) {
    BrauerGSet R = reduced_form(X);
    auto rep = validate(to_raw(R));
    CHECK(rep.is_modified_bg);
    CHECK_FALSE(R.has_doubles());
    CHECK(is_connected(R));
  }
}

TEST_CASE("special ball of the one-vertex example is a path") {
  BrauerGSet E = fixture("ex1");
  auto b = special_ball(E, E.at("e"), 3);
  auto st = vertex_stats(b.fragment);
  CHECK(st.n() == 7);
  CHECK(st.k() == 6);
  for (auto& v : st.vertices) {
    CHECK(v.half_edges.size() == 2);
    CHECK(v.f_degree == Rational{1, 1});
  }
  auto b0 = special_ball(E, E.at("e"), 0);
  CHECK(vertex_stats(b0.fragment).n() == 1);
  CHECK(b0.fragment.size() == 2);
}

TEST_CASE("special ball of a Brauer tree is the tree") {
  // star with three edges, trivial f-degree
  BrauerGSet S = from_arrays({"c1", "c2", "c3", "l1", "l2", "l3"}, {1, 2, 0, 3, 4, 5}, {3, 4, 5, 0, 1, 2},
                             {3, 3, 3, 1, 1, 1});
  for (int e = 0; e < S.size(); ++e) {
    auto b = special_ball(S, e, 4);
    auto iso = are_isomorphic(b.fragment, S);
    REQUIRE(iso);
    for (int x = 0; x < b.fragment.size(); ++x) CHECK(b.interior[x]);
    check_covering(make_covering(b.fragment, S, b.eval));
  }
}

TEST_CASE("special balls are f-degree trivial trees") {
  for (std::string name : {"ex2", "weakly", "twocycle", "star3", "E_case3_r3_l1"}) {
    BrauerGSet E = fixture(name);
    auto b = special_ball(E, 0, 3);
    auto st = vertex_stats(b.fragment);
    for (auto& v : st.vertices) CHECK(v.f_degree == Rational{1, 1});
    CHECK(st.k() == st.n() - static_cast<int>(connected_components(b.fragment).size()));
    for (int x = 0; x < b.fragment.size(); ++x) {
      CHECK(b.eval[x] == special_target(E, b.walks[x]));
      if (b.interior[x]) {
        // the last step around a vertex lands on sigma^-1 of the image
        bool wraps = b.walks[b.fragment.g[x]].exps.back() == 0;
        int y = b.eval[b.fragment.g[x]];
        CHECK((wraps ? E.sigma(y) : y) == E.g[b.eval[x]]);
        if (b.fragment.in_u(x)) CHECK(b.eval[b.fragment.tau[x]] == E.tau[b.eval[x]]);
      }
    }
  }
}

TEST_CASE("unfolding an exceptional tree") {
  // one edge, exceptional end of f-degree 2
  BrauerGSet B = from_arrays({"a", "b"}, {0, 1}, {1, 0}, {2, 1});
  auto c = unfold_exceptional_tree(B, B.at("a"));
  check_covering(c);
  CHECK(c.sheet_count == 2);
  auto st = vertex_stats(c.source);
  CHECK(st.k() == 2);
  CHECK(st.n() == 3);
  for (auto& v : st.vertices) CHECK(v.f_degree == Rational{1, 1});

  // two edges, m = 3
  BrauerGSet B2 = from_arrays({"a", "b", "c", "d"}, {1, 0, 2, 3}, {2, 3, 0, 1}, {6, 6, 1, 1});
  auto c2 = unfold_exceptional_tree(B2, B2.at("a"));
  CHECK(vertex_stats(c2.source).k() == 6);
  CHECK(c2.sheet_count == 3);

  BrauerGSet T = from_arrays({"a", "b", "c", "d"}, {1, 0, 2, 3}, {2, 3, 0, 1}, {2, 2, 1, 1});
  auto c3 = unfold_exceptional_tree(T, T.at("a"));
  CHECK(are_isomorphic(c3.source, T));
}

TEST_CASE("construct_domestic examples") {
  BrauerGSet W = construct_domestic(fixture("ex1"), 1, 1);
  CHECK(are_isomorphic(W, fixture("weakly")));
  BrauerGSet B2 = fixture("base_case2");
  CHECK(are_isomorphic(construct_domestic(B2, 2, 1), B2));
  BrauerGSet T = fixture("twocycle");
  auto iso = are_isomorphic(construct_domestic(T, 3, 3, 1), construct_domestic(T, 3, 3, 3));
  CHECK(iso.has_value());
  CHECK_FALSE(are_isomorphic(construct_domestic(T, 3, 3, 1), construct_domestic(T, 3, 3, 2)));
  CHECK_THROWS_AS(construct_domestic(T, 1, 1), Error);
  CHECK_THROWS_AS(construct_domestic(fixture("ex1"), 3, 1, 1), Error);
  CHECK_THROWS_AS(construct_domestic(T, 3, 2, 3), Error);
  CHECK_THROWS_AS(construct_domestic(T, 3, 0, 1), Error);
}

TEST_CASE("construct_domestic orders and quotients") {
  for (int r = 1; r <= 4; ++r) {
    for (auto& P : case1_bases(5)) {
      BrauerGSet B = to_gset(P, "b");
      BrauerGSet E = construct_domestic(B, 1, r);
      CHECK(nakayama(E).order == 2 * r);
      auto Q = quotient_by_sigma(E);
      CHECK(are_isomorphic(Q.quotient, B));
      for (auto& v : vertex_stats(Q.quotient).vertices) CHECK(v.f_degree.num % 2 == 1);
      CHECK(E.is_fms_bg());
      CHECK(is_connected(E));
    }
    for (auto& P : case2_bases(5)) {
      BrauerGSet B = to_gset(P, "b");
      BrauerGSet E = construct_domestic(B, 2, r);
      CHECK(nakayama(E).order == 2 * r - 1);
      CHECK(are_isomorphic(quotient_by_sigma(E).quotient, B));
    }
    for (auto& P : case3_bases(4, 1)) {
      BrauerGSet B = to_gset(P, "b");
      for (int l = 1; l <= r; ++l) {
        BrauerGSet E = construct_domestic(B, 3, r, l);
        CHECK(nakayama(E).order == r);
        CHECK(are_isomorphic(quotient_by_sigma(E).quotient, B));
      }
    }
  }
}

TEST_CASE("domestic instances are determined by the quotient and the order") {
  for (auto& E : exhaustive_fms(8, 6)) {
    RepType t = classify_rep_type(E);
    if (t.tag != RepTag::Domestic) continue;
    BrauerGSet B = quotient_by_sigma(E).quotient;
    if (t.domestic_case == 1 || t.domestic_case == 2) {
      CHECK(are_isomorphic(construct_domestic(B, t.domestic_case, static_cast<int>(t.r)), E));
    } else {
      bool found = false;
      for (int l = 1; l <= t.r && !found; ++l) found = are_isomorphic(construct_domestic(B, 3, static_cast<int>(t.r), l), E).has_value();
      CHECK(found);
    }
  }
}

TEST_CASE("isomorphism search against brute force") {
  auto c = exhaustive_fms(6, 3);
  for (size_t i = 0; i < c.size(); ++i) {
    auto self = are_isomorphic(c[i], c[i]);
    REQUIRE(self);
    CHECK(is_automorphism(c[i], *self));
    for (size_t j = i + 1; j < c.size(); ++j) {
      if (c[i].size() != c[j].size()) continue;
      CHECK_FALSE(are_isomorphic(c[i], c[j]));
    }
  }
  // relabelled copies are found, and the witness respects the structure
  std::mt19937 rng(9);
  for (size_t i = 0; i < c.size(); i += 7) {
    Proto p = to_proto(c[i]);
    std::vector<int> perm(p.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    Proto q = p;
    for (int e = 0; e < p.size(); ++e) {
      q.g[perm[e]] = perm[p.g[e]];
      q.tau[perm[e]] = perm[p.tau[e]];
      q.deg[perm[e]] = p.deg[e];
    }
    BrauerGSet A = to_gset(p), B = to_gset(q);
    CHECK(isomorphic_oracle(A, B));
    auto iso = are_isomorphic(A, B);
    REQUIRE(iso);
    for (int e = 0; e < A.size(); ++e) {
      CHECK((*iso)[A.g[e]] == B.g[(*iso)[e]]);
      CHECK((*iso)[A.tau[e]] == B.tau[(*iso)[e]]);
    }
  }
  CHECK_FALSE(are_isomorphic(fixture("E_case1_r2"), fixture("E_case2_r2")));
}

TEST_CASE("walk lifting") {
  for (std::string name : {"weakly", "E_case1_r2", "E_case3_r3_l1"}) {
    BrauerGSet E = fixture(name);
    auto Q = quotient_by_sigma(E);
    auto s = nakayama(E);
    for (int e = 0; e < E.size(); ++e) {
      int h = Q.projection.map[e];
      Walk turn{h, std::vector<Letter>(Q.quotient.deg[h], Letter::G)};
      Walk up = lift_walk(Q.projection, turn, e);
      CHECK(walk_target(E, up) == s.map[e]);
      CHECK(project_walk(Q.projection, up) == turn);
    }
    std::mt19937 rng(1);
    for (int t = 0; t < 100; ++t) {
      int x = static_cast<int>(rng() % Q.quotient.size());
      Walk w{x, {}};
      for (int k = 0; k < 12; ++k) {
        Letter l = static_cast<Letter>(rng() % 3);
        w.letters.push_back(l);
        x = l == Letter::G ? Q.quotient.g[x] : l == Letter::GInv ? Q.quotient.ginv[x] : Q.quotient.tau[x];
      }
      for (int e = 0; e < E.size(); ++e)
        if (Q.projection.map[e] == w.source) CHECK(project_walk(Q.projection, lift_walk(Q.projection, w, e)) == w);
    }
    std::vector<int> same(E.size());
    std::iota(same.begin(), same.end(), 0);
    Walk id{0, {Letter::G, Letter::Tau}};
    CHECK(lift_walk(make_covering(E, E, same), id, 0) == id);
    CHECK_THROWS_AS(lift_walk(Q.projection, Walk{Q.projection.map[0] == 0 ? 1 : 0, {}}, 0), Error);
  }
}
