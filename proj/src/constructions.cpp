#include "bgk/constructions.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace bgk {

std::vector<std::string> covering_violations(const BrauerGSet& S, const BrauerGSet& T,
                                             const std::vector<int>& f) {
  std::vector<std::string> out;
  if (static_cast<int>(f.size()) != S.size()) return {"mapping size differs from source size"};
  for (int e = 0; e < S.size(); ++e) {
    if (f[e] < 0 || f[e] >= T.size()) {
      out.push_back("no image for " + S.ids[e]);
      continue;
    }
    if (f[S.g[e]] != T.g[f[e]]) out.push_back("not g-equivariant at " + S.ids[e]);
    if (S.in_u(e) != T.in_u(f[e])) out.push_back("U not preserved at " + S.ids[e]);
    else if (S.in_u(e) && f[S.tau[e]] != T.tau[f[e]]) out.push_back("not tau-equivariant at " + S.ids[e]);
    if (S.deg[e] != T.deg[f[e]]) out.push_back("degree changes at " + S.ids[e]);
  }
  return out;
}

CoveringMap make_covering(BrauerGSet source, BrauerGSet target, std::vector<int> map) {
  auto bad = covering_violations(source, target, map);
  if (!bad.empty()) throw Error("not a covering: " + bad.front());
  CoveringMap c{std::move(source), std::move(target), std::move(map), 0};
  std::vector<int> fiber(c.target.size(), 0);
  for (int x : c.map) ++fiber[x];
  int s = fiber.empty() ? 0 : fiber[0];
  for (int x : fiber)
    if (x != s) s = 0;
  c.sheet_count = s;
  return c;
}

bool is_automorphism(const BrauerGSet& E, const std::vector<int>& p) {
  if (static_cast<int>(p.size()) != E.size()) return false;
  std::vector<char> hit(E.size(), 0);
  for (int x : p) {
    if (x < 0 || x >= E.size() || hit[x]) return false;
    hit[x] = 1;
  }
  return covering_violations(E, E, p).empty();
}

namespace {

std::vector<int> compose(const std::vector<int>& a, const std::vector<int>& b) {  // a after b
  std::vector<int> r(b.size());
  for (size_t i = 0; i < b.size(); ++i) r[i] = a[b[i]];
  return r;
}

long long group_order(const std::vector<std::vector<int>>& gens, int n, std::size_t bound) {
  std::vector<int> id(n);
  std::iota(id.begin(), id.end(), 0);
  std::set<std::vector<int>> seen{id};
  std::deque<std::vector<int>> q{id};
  while (!q.empty()) {
    auto x = q.front();
    q.pop_front();
    for (auto& s : gens) {
      auto y = compose(s, x);
      if (seen.insert(y).second) {
        if (seen.size() > bound) throw Error("generated group exceeds the closure bound");
        q.push_back(std::move(y));
      }
    }
  }
  return static_cast<long long>(seen.size());
}

// orbit labels of the group generated by gens
std::vector<int> orbit_labels(const std::vector<std::vector<int>>& gens, int n) {
  std::vector<int> lab(n, -1);
  int c = 0;
  for (int e = 0; e < n; ++e) {
    if (lab[e] >= 0) continue;
    std::vector<int> st{e};
    lab[e] = c;
    while (!st.empty()) {
      int x = st.back();
      st.pop_back();
      for (auto& s : gens)
        if (lab[s[x]] < 0) {
          lab[s[x]] = c;
          st.push_back(s[x]);
        }
    }
    ++c;
  }
  return lab;
}

int gt(const BrauerGSet& E, int e) { return E.g[E.tau[e]]; }

}  // namespace

Quotient quotient(const BrauerGSet& E, const std::vector<std::vector<int>>& gens, std::size_t bound) {
  for (auto& s : gens)
    if (!is_automorphism(E, s)) throw Error("generator is not an automorphism");
  Quotient Q;
  Q.group_order = group_order(gens, E.size(), bound);
  auto lab = orbit_labels(gens, E.size());
  int m = lab.empty() ? 0 : *std::max_element(lab.begin(), lab.end()) + 1;
  std::vector<int> rep(m, -1);
  for (int e = 0; e < E.size(); ++e)
    if (rep[lab[e]] < 0) rep[lab[e]] = e;  // least id, since indices follow id order
  std::vector<std::string> ids(m);
  std::vector<int> g(m), tau(m), deg(m);
  for (int c = 0; c < m; ++c) {
    int e = rep[c];
    ids[c] = E.ids[e];
    g[c] = lab[E.g[e]];
    tau[c] = E.in_u(e) ? lab[E.tau[e]] : -1;
    deg[c] = E.deg[e];
  }
  BrauerGSet q = from_arrays(ids, g, tau, deg, E.name.empty() ? "" : E.name + "/group");
  std::vector<int> f(E.size());
  for (int e = 0; e < E.size(); ++e) f[e] = q.at(ids[lab[e]]);
  Q.quotient = q;
  Q.projection = make_covering(E, std::move(q), std::move(f));
  return Q;
}

Quotient quotient_by_sigma(const BrauerGSet& E) { return quotient(E, {nakayama(E).map}); }

bool is_admissible(const BrauerGSet& E, const std::vector<std::vector<int>>& gens, std::size_t bound) {
  group_order(gens, E.size(), bound);
  auto lab = orbit_labels(gens, E.size());
  for (int e = 0; e < E.size(); ++e)
    if (E.in_u(e) && E.tau[e] != e && lab[E.tau[e]] == lab[e]) return false;
  return true;
}

Hat hat(const BrauerGSet& E) {
  int n = E.size();
  std::vector<std::string> ids(2 * n);
  std::vector<int> g(2 * n), tau(2 * n), deg(2 * n);
  for (int c = 0; c < 2; ++c)
    for (int e = 0; e < n; ++e) {
      int i = c * n + e;
      ids[i] = E.ids[e] + ":" + std::to_string(c + 1);
      g[i] = c * n + E.g[e];
      deg[i] = E.deg[e];
      if (!E.in_u(e)) tau[i] = -1;
      else if (E.tau[e] == e) tau[i] = (1 - c) * n + e;
      else tau[i] = c * n + E.tau[e];
    }
  Hat H;
  H.hat = from_arrays(ids, g, tau, deg, E.name.empty() ? "" : "hat(" + E.name + ")");
  std::vector<int> f(2 * n);
  H.swap.resize(2 * n);
  for (int c = 0; c < 2; ++c)
    for (int e = 0; e < n; ++e) {
      int i = H.hat.at(ids[c * n + e]);
      f[i] = e;
      H.swap[i] = H.hat.at(ids[(1 - c) * n + e]);
    }
  H.projection = make_covering(H.hat, E, std::move(f));
  return H;
}

BrauerGSet reduced_form(const BrauerGSet& E) {
  if (!E.is_fms_bg()) throw Error("reduced form needs an f_ms-BG (U = E, tau without fixed points)");
  auto Q = quotient_by_sigma(E);
  auto st = vertex_stats(Q.quotient);
  for (auto& v : st.vertices)
    if (!v.f_degree.integral()) throw Error("E/<sigma> has a non-integral f-degree");
  if (!Q.quotient.has_doubles()) return Q.quotient;
  BrauerGSet R = hat(Q.quotient).hat;
  R.name = E.name.empty() ? "" : "R(" + E.name + ")";
  return R;
}

Ball special_ball(const BrauerGSet& E, int e, int radius) {
  if (radius < 0) throw Error("radius must be nonnegative");
  std::vector<SpecialWalk> walks;
  std::function<void(std::vector<int>&, int)> grow = [&](std::vector<int>& exps, int start) {
    for (int i = 0; i < E.deg[start]; ++i) {
      exps.push_back(i);
      walks.push_back({e, exps});
      int tip = E.gpow(start, i);
      bool may_continue = exps.size() == 1 || i > 0;
      if (may_continue && static_cast<int>(exps.size()) <= radius && E.in_u(tip)) grow(exps, E.tau[tip]);
      exps.pop_back();
    }
  };
  std::vector<int> ex;
  grow(ex, e);
  std::map<std::vector<int>, int> index;
  for (size_t i = 0; i < walks.size(); ++i) index[walks[i].exps] = static_cast<int>(i);
  int n = static_cast<int>(walks.size());
  std::vector<std::string> ids(n);
  std::vector<int> g(n), tau(n, -1), deg(n), eval(n);
  for (int i = 0; i < n; ++i) {
    auto& x = walks[i].exps;
    std::string id = E.ids[e] + "|";
    for (size_t j = 0; j < x.size(); ++j) id += (j ? "." : "") + std::to_string(x[j]);
    ids[i] = id;
    eval[i] = special_target(E, walks[i]);
    // start of the last run
    int s = e;
    for (size_t j = 0; j + 1 < x.size(); ++j) s = E.tau[E.gpow(s, x[j])];
    deg[i] = E.deg[s];
    auto y = x;
    if (y.back() + 1 < deg[i]) ++y.back();
    else y.back() = 0;
    g[i] = index.at(y);
    if (E.in_u(eval[i])) {
      auto z = x;
      if (x.size() == 1 || x.back() > 0) z.push_back(0);
      else z.pop_back();
      auto it = index.find(z);
      if (it != index.end()) tau[i] = it->second;
    }
  }
  Ball b;
  b.fragment = from_arrays(ids, g, tau, deg, "ball");
  b.walks.resize(n);
  b.eval.resize(n);
  b.interior.assign(n, 1);
  for (int i = 0; i < n; ++i) {
    int j = b.fragment.at(ids[i]);
    b.walks[j] = walks[i];
    b.eval[j] = eval[i];
  }
  for (int j = 0; j < n; ++j) {
    bool ok = true;
    for (int x = j;;) {
      if (b.fragment.in_u(x) != E.in_u(b.eval[x])) ok = false;
      x = b.fragment.g[x];
      if (x == j) break;
    }
    if (!ok)
      for (int x = j;;) {
        b.interior[x] = 0;
        x = b.fragment.g[x];
        if (x == j) break;
      }
  }
  return b;
}

CoveringMap unfold_exceptional_tree(const BrauerGSet& B, int h) {
  if (!B.u_is_all() || B.has_doubles()) throw Error("unfolding needs a Brauer graph without doubles");
  auto st = vertex_stats(B);
  if (!is_connected(B) || st.k() != st.n() - 1) throw Error("unfolding needs a Brauer tree");
  int exc = -1;
  for (int v = 0; v < st.n(); ++v) {
    if (!st.vertices[v].f_degree.integral()) throw Error("non-integral f-degree");
    if (st.vertices[v].f_degree.num > 1) {
      if (exc >= 0) throw Error("more than one exceptional vertex");
      exc = v;
    }
  }
  if (h < 0 || h >= B.size()) throw Error("unknown half-edge");
  if (exc >= 0 && st.vertex_of[h] != exc) throw Error("h must lie at the exceptional vertex");
  int cap = 2 * B.size() + 2;
  for (int radius = 1; radius <= cap; ++radius) {
    Ball b = special_ball(B, h, radius);
    if (!b.fragment.u_is_all()) continue;
    BrauerGSet T = b.fragment;
    T.name = B.name.empty() ? "unfolded" : "unfold(" + B.name + ")";
    return make_covering(std::move(T), B, b.eval);
  }
  throw Error("special ball did not close up");
}

int cycle_base(const BrauerGSet& B) {
  auto st = vertex_stats(B);
  // prune leaves of the underlying multigraph
  std::vector<int> degree(st.n(), 0);
  std::vector<char> alive_edge(st.k(), 1);
  for (auto& [a, b] : st.edges) {
    ++degree[st.vertex_of[a]];
    ++degree[st.vertex_of[b]];
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i < st.k(); ++i) {
      if (!alive_edge[i]) continue;
      int va = st.vertex_of[st.edges[i].first], vb = st.vertex_of[st.edges[i].second];
      if (va != vb && (degree[va] == 1 || degree[vb] == 1)) {
        alive_edge[i] = 0;
        --degree[va];
        --degree[vb];
        changed = true;
      }
    }
  }
  int best = -1;
  for (int i = 0; i < st.k(); ++i)
    if (alive_edge[i]) {
      int a = st.edges[i].first;
      if (best < 0 || a < best) best = a;
    }
  if (best < 0) throw Error("no cycle");
  return best;
}

namespace {

struct Shape {
  int n, k, l, rank;
  std::vector<long long> fdeg;
};

Shape shape_of(const BrauerGSet& B) {
  if (!B.u_is_all()) throw Error("base must have U = E");
  if (!is_connected(B)) throw Error("base must be connected");
  auto st = vertex_stats(B);
  Shape s{st.n(), st.k(), st.l(), st.k() - st.n() + 1, {}};
  for (auto& v : st.vertices) {
    if (!v.f_degree.integral()) throw Error("base must have integral f-degrees");
    s.fdeg.push_back(v.f_degree.num);
  }
  return s;
}

std::string shape_text(const Shape& s) {
  std::string d;
  for (auto x : s.fdeg) d += (d.empty() ? "" : ",") + std::to_string(x);
  return "l=" + std::to_string(s.l) + ", k-n+1=" + std::to_string(s.rank) + ", f-degrees (" + d + ")";
}

// j-index of every half-edge along the gt-orbit starting at b
std::vector<int> gt_index(const BrauerGSet& B, int b) {
  std::vector<int> j(B.size(), -1);
  int x = b;
  for (int i = 0; j[x] < 0; ++i) {
    j[x] = i;
    x = gt(B, x);
  }
  return j;
}

}  // namespace

BrauerGSet construct_domestic(const BrauerGSet& B, int which, int r, std::optional<int> l) {
  if (r < 1) throw Error("r must be positive");
  Shape s = shape_of(B);
  auto st = vertex_stats(B);
  int N = B.size();
  int R = 0;
  std::vector<int> bump(st.n(), 1);  // increment when entering b_v
  std::vector<int> j(N, -1), jin(N, -1);
  int b = 0;
  if (which == 1) {
    bool ok = s.l == 2 && s.rank == 0 &&
              std::all_of(s.fdeg.begin(), s.fdeg.end(), [](long long x) { return x == 1; });
    if (!ok) throw Error("case 1 needs l=2, k-n+1=0 and all f-degrees 1; got " + shape_text(s));
    R = 2 * r;
    j = gt_index(B, b);
  } else if (which == 2) {
    int twos = 0;
    bool ok = s.l == 0 && s.rank == 0;
    for (auto x : s.fdeg) {
      if (x == 2) ++twos;
      else if (x != 1) ok = false;
    }
    if (!ok || twos != 2)
      throw Error("case 2 needs l=0, k-n+1=0, two f-degrees 2 and the rest 1; got " + shape_text(s));
    R = 2 * r - 1;
    j = gt_index(B, b);
    for (int v = 0; v < st.n(); ++v)
      if (s.fdeg[v] == 2) bump[v] = r;
  } else if (which == 3) {
    bool ok = s.l == 0 && s.rank == 1 &&
              std::all_of(s.fdeg.begin(), s.fdeg.end(), [](long long x) { return x == 1; });
    if (!ok) throw Error("case 3 needs l=0, k-n+1=1 and all f-degrees 1; got " + shape_text(s));
    if (!l || *l < 1 || *l > r) throw Error("case 3 needs 1 <= l <= r");
    R = r;
    b = cycle_base(B);
    j = gt_index(B, b);
    jin = gt_index(B, B.tau[b]);
  } else {
    throw Error("case must be 1, 2 or 3");
  }
  for (int x = 0; x < N; ++x)
    if (j[x] < 0 && jin[x] < 0) throw Error("base half-edges are not covered by the expected gt-orbits");
  // b_v: least j among outer half-edges, otherwise least inner j'
  std::vector<int> bv(st.n(), -1);
  for (int v = 0; v < st.n(); ++v) {
    for (int x : st.vertices[v].half_edges)
      if (j[x] >= 0 && (bv[v] < 0 || j[x] < j[bv[v]])) bv[v] = x;
    if (bv[v] < 0)
      for (int x : st.vertices[v].half_edges)
        if (bv[v] < 0 || jin[x] < jin[bv[v]]) bv[v] = x;
  }
  std::vector<char> is_bv(N, 0);
  std::vector<int> bump_at(N, 0);
  for (int v = 0; v < st.n(); ++v) {
    is_bv[bv[v]] = 1;
    bump_at[bv[v]] = bump[v];
  }
  auto id = [&](int c, int jj) { return B.ids[c] + ":" + std::to_string(((jj % R) + R) % R + 1); };
  std::vector<std::string> ids;
  std::vector<int> g, tau, deg;
  auto idx = [&](int c, int jj) { return c * R + ((jj % R) + R) % R; };
  for (int c = 0; c < N; ++c)
    for (int jj = 0; jj < R; ++jj) {
      ids.push_back(id(c, jj));
      int gc = B.g[c];
      g.push_back(idx(gc, jj + (is_bv[gc] ? bump_at[gc] : 0)));
      int t = B.tau[c];
      int shift = 0;
      if (which == 1 && t == c) shift = r;
      if (which == 3 && c == b) shift = *l;
      if (which == 3 && c == B.tau[b]) shift = -*l;
      tau.push_back(idx(t, jj + shift));
      deg.push_back(B.deg[c]);
    }
  std::string nm = which == 1 ? "E_" + std::to_string(r)
                 : which == 2 ? "E'_" + std::to_string(r)
                              : "E_" + std::to_string(r) + "," + std::to_string(*l);
  if (!B.name.empty()) nm += "(" + B.name + ")";
  return from_arrays(ids, g, tau, deg, nm);
}

namespace {

struct Sig {
  int deg, orbit, u, dbl;
  auto operator<=>(const Sig&) const = default;
};

Sig sig(const BrauerGSet& E, int e) {
  return {E.deg[e], E.orbit_size(e), E.in_u(e) ? 1 : 0, E.tau[e] == e ? 1 : 0};
}

// extend a -> b over the component of a; fills f (entries -1 are unmapped)
bool propagate(const BrauerGSet& A, const BrauerGSet& Bs, int a, int b, std::vector<int>& f,
               std::vector<int>& finv) {
  std::vector<std::pair<int, int>> st{{a, b}};
  std::vector<int> touched;
  auto fail = [&] {
    for (int x : touched) {
      finv[f[x]] = -1;
      f[x] = -1;
    }
    return false;
  };
  while (!st.empty()) {
    auto [x, y] = st.back();
    st.pop_back();
    if (f[x] >= 0) {
      if (f[x] != y) return fail();
      continue;
    }
    if (finv[y] >= 0) return fail();
    if (A.deg[x] != Bs.deg[y] || A.in_u(x) != Bs.in_u(y)) return fail();
    f[x] = y;
    finv[y] = x;
    touched.push_back(x);
    st.push_back({A.g[x], Bs.g[y]});
    st.push_back({A.ginv[x], Bs.ginv[y]});
    if (A.in_u(x)) st.push_back({A.tau[x], Bs.tau[y]});
  }
  return true;
}

}  // namespace

std::optional<Isomorphism> are_isomorphic(const BrauerGSet& A, const BrauerGSet& Bs) {
  if (A.size() != Bs.size()) return std::nullopt;
  auto ca = connected_components(A);
  std::vector<int> f(A.size(), -1), finv(Bs.size(), -1);
  std::function<bool(size_t)> solve = [&](size_t ci) -> bool {
    if (ci == ca.size()) return true;
    int anchor = ca[ci][0];
    for (int x : ca[ci])
      if (sig(A, x) < sig(A, anchor)) anchor = x;
    Sig sa = sig(A, anchor);
    for (int y = 0; y < Bs.size(); ++y) {
      if (finv[y] >= 0 || sig(Bs, y) != sa) continue;
      auto f0 = f;
      if (!propagate(A, Bs, anchor, y, f, finv)) continue;
      if (solve(ci + 1)) return true;
      for (int x : ca[ci])
        if (f0[x] < 0 && f[x] >= 0) {
          finv[f[x]] = -1;
          f[x] = -1;
        }
    }
    return false;
  };
  if (!solve(0)) return std::nullopt;
  return f;
}

namespace {

std::string component_code(const BrauerGSet& E, const std::vector<int>& comp) {
  std::string best;
  for (int s : comp) {
    std::vector<int> lab(E.size(), -1), order;
    lab[s] = 0;
    order.push_back(s);
    for (size_t i = 0; i < order.size(); ++i) {
      int x = order[i];
      for (int y : {E.g[x], E.tau[x]})
        if (y >= 0 && lab[y] < 0) {
          lab[y] = static_cast<int>(order.size());
          order.push_back(y);
        }
    }
    std::string code;
    for (int x : order) {
      code += std::to_string(lab[E.g[x]]) + "," + (E.in_u(x) ? std::to_string(lab[E.tau[x]]) : "-") + "," +
              std::to_string(E.deg[x]) + ";";
    }
    if (best.empty() || code < best) best = code;
  }
  return best;
}

}  // namespace

std::string canonical_code(const BrauerGSet& E) {
  std::vector<std::string> parts;
  for (auto& c : connected_components(E)) parts.push_back(component_code(E, c));
  std::sort(parts.begin(), parts.end());
  std::string out;
  for (auto& p : parts) out += "[" + p + "]";
  return out;
}

Walk lift_walk(const CoveringMap& cov, const Walk& w, int start) {
  if (start < 0 || start >= cov.source.size() || cov.map[start] != w.source)
    throw Error("start does not lie over the source of the walk");
  walk_target(cov.target, w);
  Walk out;
  out.source = start;
  out.letters = w.letters;
  walk_target(cov.source, out);
  return out;
}

Walk project_walk(const CoveringMap& cov, const Walk& w) {
  Walk out;
  out.source = cov.map[w.source];
  out.letters = w.letters;
  return out;
}

}  // namespace bgk
