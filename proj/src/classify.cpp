#include "bgk/classify.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <numeric>

namespace bgk {

ShapeStats shape_stats(const BrauerGSet& B) {
  if (!B.u_is_all()) throw Error("shape statistics need U = E");
  auto st = vertex_stats(B);
  ShapeStats s;
  s.n = st.n();
  s.k = st.k();
  s.l = st.l();
  s.rank = s.k - s.n + 1;
  for (int v = 0; v < s.n; ++v) {
    auto& f = st.vertices[v].f_degree;
    if (!f.integral()) throw Error("non-integral f-degree " + f.str() + " at vertex of " + B.ids[st.vertices[v].half_edges[0]]);
    s.degrees.push_back(f.num);
    if (f.num > 1) s.exceptional.push_back(v);
  }
  s.unicyclic = s.rank == 1 && is_connected(B);
  if (s.unicyclic && s.l == 0) {
    s.base = cycle_base(B);
    auto orbit_len = [&](int x) {
      int n = 0, y = x;
      do {
        y = B.g[B.tau[y]];
        ++n;
      } while (y != x);
      return n;
    };
    int outer = orbit_len(s.base), inner = orbit_len(B.tau[s.base]);
    // cycle edges survive leaf pruning
    std::vector<int> degree(s.n, 0);
    std::vector<char> alive(s.k, 1);
    for (auto& [a, b] : st.edges) {
      ++degree[st.vertex_of[a]];
      ++degree[st.vertex_of[b]];
    }
    for (bool changed = true; changed;) {
      changed = false;
      for (int i = 0; i < s.k; ++i) {
        if (!alive[i]) continue;
        int va = st.vertex_of[st.edges[i].first], vb = st.vertex_of[st.edges[i].second];
        if (va != vb && (degree[va] == 1 || degree[vb] == 1)) {
          alive[i] = 0;
          --degree[va];
          --degree[vb];
          changed = true;
        }
      }
    }
    s.m = static_cast<int>(std::count(alive.begin(), alive.end(), 1));
    s.p = (outer - s.m) / 2;
    s.q = (inner - s.m) / 2;
  }
  return s;
}

std::string rep_tag_name(RepTag t) {
  switch (t) {
    case RepTag::RepFinite: return "rep-finite";
    case RepTag::Domestic: return "domestic";
    case RepTag::NonDomesticTame: return "non-domestic";
  }
  return "?";
}

RepType classify_rep_type(const BrauerGSet& E) {
  if (!E.is_fms_bg()) throw Error("classification needs an f_ms-BG (U = E, tau without fixed points)");
  if (!is_connected(E)) throw Error("classification needs a connected f_ms-BG");
  Quotient Q = quotient_by_sigma(E);
  const BrauerGSet& B = Q.quotient;
  ShapeStats S = shape_stats(B);
  BrauerGSet R = B.has_doubles() ? hat(B).hat : B;
  ShapeStats SR = shape_stats(R);
  RepType t;
  t.sigma_order = Q.group_order;
  long long ord = Q.group_order;
  int big = 0, twos = 0;
  for (auto d : SR.degrees) {
    if (d > 1) ++big;
    if (d == 2) ++twos;
  }
  bool tree = SR.rank == 0;
  bool trivial = big == 0;
  if (tree && big <= 1) {
    t.tag = RepTag::RepFinite;
    if (S.l == 0) {
      t.subcase = 'a';
      t.r = ord;
      t.has_m = true;
      t.m = S.exceptional.empty() ? 1 : static_cast<int>(S.degrees[S.exceptional[0]]);
    } else {
      if (S.l != 1) throw Error("internal: rep-finite quotient with more than one double");
      t.subcase = 'b';
      int h = vertex_stats(B).doubles[0];
      int e = -1;
      for (int x = 0; x < E.size() && e < 0; ++x)
        if (Q.projection.map[x] == h) e = x;
      // least r with g^{|v| r}(tau e) = e
      int len = B.orbit_size(h);
      int x = E.tau[e];
      long long r = 0;
      do {
        x = E.gpow(x, len);
        ++r;
      } while (x != e);
      t.r = r;
    }
    return t;
  }
  bool dom = (tree && twos == 2 && big == 2) || (SR.rank == 1 && trivial);
  if (!dom) {
    t.tag = RepTag::NonDomesticTame;
    return t;
  }
  t.tag = RepTag::Domestic;
  bool all1 = S.exceptional.empty();
  int s2 = static_cast<int>(std::count(S.degrees.begin(), S.degrees.end(), 2));
  if (S.l == 2 && S.rank == 0 && all1) {
    t.domestic_case = 1;
    t.r = ord / 2;
  } else if (S.l == 0 && S.rank == 0 && s2 == 2 && static_cast<int>(S.exceptional.size()) == 2) {
    t.domestic_case = 2;
    t.r = (ord + 1) / 2;
  } else if (S.l == 0 && S.rank == 1 && all1) {
    t.domestic_case = 3;
    t.r = ord;
    t.m = S.m;
    t.p = S.p;
    t.q = S.q;
    t.has_m = true;
    // fiber shift of y = (g tau)^{m+2p} over the cycle base
    int b = S.base;
    int e = -1;
    for (int x = 0; x < E.size() && e < 0; ++x)
      if (Q.projection.map[x] == b) e = x;
    int y = e;
    for (int i = 0; i < S.m + 2 * S.p; ++i) y = E.g[E.tau[y]];
    long long s = 0;
    for (int x = e; x != y; x = E.sigma(x)) ++s;
    long long l = ((s - (S.m + S.p)) % ord + ord) % ord;
    t.l = static_cast<int>(l == 0 ? ord : l);
  } else {
    throw Error("internal: domestic reduced form but the quotient has none of the three shapes");
  }
  return t;
}

GroupPresentation pi1_presentation(const BrauerGSet& B, int base) {
  if (!is_connected(B)) throw Error("fundamental group presentation needs a connected input");
  auto st = vertex_stats(B);
  std::vector<long long> fd;
  for (auto& v : st.vertices) {
    if (!v.f_degree.integral()) throw Error("fundamental group presentation needs integral f-degrees");
    fd.push_back(v.f_degree.num);
  }
  if (base < 0) base = 0;
  GroupPresentation P;
  P.base = base;
  int n = st.n();
  std::vector<int> rep(n, -1), order;
  std::vector<Walk> path(n);
  std::vector<char> tree_edge(B.size(), 0);
  int v0 = st.vertex_of[base];
  rep[v0] = base;
  path[v0].source = base;
  order.push_back(v0);
  auto offset = [&](int from, int to) {  // i with g^i(from) = to
    int i = 0;
    for (int x = from; x != to; x = B.g[x]) ++i;
    return i;
  };
  for (size_t qi = 0; qi < order.size(); ++qi) {
    int u = order[qi];
    int h = rep[u];
    int x = h;
    do {
      int t = B.tau[x];
      int w = t < 0 ? -1 : st.vertex_of[t];
      if (t >= 0 && t != x && rep[w] < 0) {
        rep[w] = t;
        path[w] = path[u];
        path[w].letters.insert(path[w].letters.end(), offset(h, x), Letter::G);
        path[w].letters.push_back(Letter::Tau);
        tree_edge[x] = tree_edge[t] = 1;
        order.push_back(w);
      }
      x = B.g[x];
    } while (x != h);
  }
  auto back = [&](int v) { return inverse_walk(B, path[v]); };
  auto loop_at = [&](int v, const std::vector<Letter>& mid) {
    Walk w = path[v];
    w.letters.insert(w.letters.end(), mid.begin(), mid.end());
    return concat(w, back(v));
  };
  std::vector<int> a_index(n);
  for (size_t i = 0; i < order.size(); ++i) {
    int v = order[i];
    a_index[v] = static_cast<int>(i);
    P.generators.push_back("a" + std::to_string(i + 1));
    P.walks.push_back(loop_at(v, std::vector<Letter>(st.vertices[v].half_edges.size(), Letter::G)));
  }
  int nb = 0;
  std::vector<int> bgen, cgen;
  for (auto& [x, t] : st.edges) {
    if (tree_edge[x]) continue;
    int u = st.vertex_of[x], w = st.vertex_of[t];
    std::vector<Letter> mid(offset(rep[u], x), Letter::G);
    mid.push_back(Letter::Tau);
    mid.insert(mid.end(), offset(t, rep[w]), Letter::G);
    Walk wk = path[u];
    wk.letters.insert(wk.letters.end(), mid.begin(), mid.end());
    wk = concat(wk, back(w));
    bgen.push_back(static_cast<int>(P.generators.size()));
    P.generators.push_back("b" + std::to_string(++nb));
    P.walks.push_back(wk);
  }
  int nc = 0;
  for (int x : st.doubles) {
    int u = st.vertex_of[x];
    int i = offset(rep[u], x);
    std::vector<Letter> mid(i, Letter::G);
    mid.push_back(Letter::Tau);
    mid.insert(mid.end(), i, Letter::GInv);
    cgen.push_back(static_cast<int>(P.generators.size()));
    P.generators.push_back("c" + std::to_string(++nc));
    P.walks.push_back(loop_at(u, mid));
  }
  auto power = [](int g, long long k) {
    GroupWord w;
    for (long long i = 0; i < std::abs(k); ++i) w.push_back(k < 0 ? -(g + 1) : g + 1);
    return w;
  };
  auto cat = [](GroupWord a, const GroupWord& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
  };
  long long d1 = fd[order[0]];
  GroupWord z = power(0, d1), zi = power(0, -d1);
  for (size_t i = 1; i < order.size(); ++i) P.relators.push_back(cat(z, power(static_cast<int>(i), -fd[order[i]])));
  for (int b : bgen) P.relators.push_back(cat(cat(cat(z, power(b, 1)), zi), power(b, -1)));
  for (int c : cgen) P.relators.push_back(cat(cat(cat(z, power(c, 1)), zi), power(c, -1)));
  for (int c : cgen) P.relators.push_back(power(c, 2));
  return P;
}

Walk evaluate_word(const BrauerGSet& B, const GroupPresentation& P, const GroupWord& w) {
  Walk out;
  out.source = P.base;
  // the word is read right to left like composition: the last letter is walked first
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    int g = std::abs(*it) - 1;
    Walk piece = *it > 0 ? P.walks[g] : inverse_walk(B, P.walks[g]);
    out = concat(out, piece);
  }
  return out;
}

std::string format_word(const GroupPresentation& P, const GroupWord& w) {
  std::string s;
  size_t i = 0;
  while (i < w.size()) {
    size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    if (!s.empty()) s += " ";
    s += P.generators[std::abs(w[i]) - 1];
    long long e = static_cast<long long>(j - i) * (w[i] > 0 ? 1 : -1);
    if (e != 1) s += "^" + std::to_string(e);
    i = j;
  }
  return s.empty() ? "1" : s;
}

std::vector<long long> invariant_factors(std::vector<std::vector<long long>> A) {
  std::vector<long long> diag;
  size_t rows = A.size(), cols = rows ? A[0].size() : 0;
  size_t t = 0;
  while (t < rows && t < cols) {
    // pivot: smallest nonzero |entry| in the remaining block
    long long best = 0;
    size_t pr = 0, pc = 0;
    for (size_t i = t; i < rows; ++i)
      for (size_t j = t; j < cols; ++j)
        if (A[i][j] != 0 && (best == 0 || std::llabs(A[i][j]) < best)) {
          best = std::llabs(A[i][j]);
          pr = i;
          pc = j;
        }
    if (best == 0) break;
    std::swap(A[t], A[pr]);
    for (auto& row : A) std::swap(row[t], row[pc]);
    bool clean = true;
    for (size_t i = t + 1; i < rows; ++i) {
      long long q = A[i][t] / A[t][t];
      if (q)
        for (size_t j = t; j < cols; ++j) A[i][j] -= q * A[t][j];
      if (A[i][t]) clean = false;
    }
    for (size_t j = t + 1; j < cols; ++j) {
      long long q = A[t][j] / A[t][t];
      if (q)
        for (size_t i = t; i < rows; ++i) A[i][j] -= q * A[i][t];
      if (A[t][j]) clean = false;
    }
    if (!clean) continue;
    // pivot must divide the rest of the block
    bool divides = true;
    for (size_t i = t + 1; i < rows && divides; ++i)
      for (size_t j = t + 1; j < cols; ++j)
        if (A[i][j] % A[t][t]) {
          for (size_t jj = t; jj < cols; ++jj) A[t][jj] += A[i][jj];
          divides = false;
          break;
        }
    if (!divides) continue;
    diag.push_back(std::llabs(A[t][t]));
    ++t;
  }
  return diag;
}

namespace {

AbelianInvariants from_diagonal(std::vector<long long> diag, int gens) {
  // invariant factors of a diagonal: repeated gcd/lcm sweeps
  for (size_t i = 0; i < diag.size(); ++i)
    for (size_t j = i + 1; j < diag.size(); ++j) {
      long long a = diag[i], b = diag[j];
      long long g = std::gcd(a, b);
      diag[i] = g;
      diag[j] = g == 0 ? 0 : a / g * b;
    }
  AbelianInvariants out;
  out.free_rank = gens - static_cast<int>(diag.size());
  for (long long d : diag) {
    if (d == 0) ++out.free_rank;
    else if (d > 1) out.torsion.push_back(d);
  }
  std::sort(out.torsion.begin(), out.torsion.end());
  return out;
}

}  // namespace

AbelianInvariants abelianize(const GroupPresentation& P, const std::vector<GroupWord>& extra) {
  int ng = static_cast<int>(P.generators.size());
  std::vector<std::vector<long long>> M;
  auto add = [&](const GroupWord& w) {
    std::vector<long long> row(ng, 0);
    for (int x : w) row[std::abs(x) - 1] += x > 0 ? 1 : -1;
    M.push_back(row);
  };
  for (auto& w : P.relators) add(w);
  for (auto& w : extra) add(w);
  if (M.empty() || ng == 0) return from_diagonal({}, ng);
  auto diag = invariant_factors(M);
  return from_diagonal(diag, ng);
}

AbelianInvariants reduced_pi1_abelianization(const BrauerGSet& E) {
  Quotient Q = quotient_by_sigma(E);
  ShapeStats S = shape_stats(Q.quotient);
  std::vector<long long> diag(S.degrees.begin(), S.degrees.end());
  for (int i = 0; i < S.l; ++i) diag.push_back(2);
  int gens = static_cast<int>(diag.size()) + S.rank;
  return from_diagonal(diag, gens);
}

MonodromyAction monodromy(const CoveringMap& cov, int base, const std::vector<std::string>& names,
                          const std::vector<Walk>& walks) {
  if (base < 0 || base >= cov.target.size()) throw Error("base is not a half-edge of the target");
  MonodromyAction M;
  M.base = base;
  M.generators = names;
  M.walks = walks;
  for (int x = 0; x < cov.source.size(); ++x)
    if (cov.map[x] == base) M.fiber.push_back(x);
  std::vector<int> pos(cov.source.size(), -1);
  for (size_t i = 0; i < M.fiber.size(); ++i) pos[M.fiber[i]] = static_cast<int>(i);
  for (auto& w : walks) {
    if (w.source != base || walk_target(cov.target, w) != base) throw Error("generator walk is not closed at the base");
    std::vector<int> p;
    for (int x : M.fiber) p.push_back(pos[walk_target(cov.source, lift_walk(cov, w, x))]);
    M.perms.push_back(p);
  }
  std::vector<char> seen(M.fiber.size(), 0);
  std::deque<int> q;
  if (!M.fiber.empty()) {
    seen[0] = 1;
    q.push_back(0);
  }
  size_t cnt = M.fiber.empty() ? 0 : 1;
  while (!q.empty()) {
    int a = q.front();
    q.pop_front();
    for (auto& p : M.perms)
      if (!seen[p[a]]) {
        seen[p[a]] = 1;
        ++cnt;
        q.push_back(p[a]);
      }
  }
  M.transitive = cnt == M.fiber.size();
  return M;
}

MonodromyAction monodromy(const CoveringMap& cov, int base) {
  if (base < 0 || base >= cov.target.size()) throw Error("base is not a half-edge of the target");
  auto P = pi1_presentation(cov.target, base);
  return monodromy(cov, base, P.generators, P.walks);
}

std::string pi1_class_name(Pi1Class c) {
  switch (c) {
    case Pi1Class::Z: return "Z";
    case Pi1Class::AmalgamA2B2: return "<a,b | a^2=b^2>";
    case Pi1Class::ZxZ: return "ZxZ";
    case Pi1Class::Other: return "other";
  }
  return "?";
}

Pi1Class pi1_class(const BrauerGSet& E) {
  RepType t = classify_rep_type(E);
  if (t.tag == RepTag::RepFinite) return Pi1Class::Z;
  if (t.tag == RepTag::Domestic) return t.domestic_case == 3 ? Pi1Class::ZxZ : Pi1Class::AmalgamA2B2;
  return Pi1Class::Other;
}

}  // namespace bgk
