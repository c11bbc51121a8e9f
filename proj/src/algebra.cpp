#include "bgk/algebra.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "bgk/artheory.hpp"
#include "bgk/classify.hpp"

namespace bgk {

std::string flavor_name(Flavor f) {
  switch (f) {
    case Flavor::Full: return "full";
    case Flavor::Reduced: return "reduced";
    case Flavor::String: return "string";
    case Flavor::Riedtmann: return "riedtmann";
  }
  return "?";
}

Flavor parse_flavor(const std::string& s) {
  if (s == "full") return Flavor::Full;
  if (s == "reduced") return Flavor::Reduced;
  if (s == "string") return Flavor::String;
  if (s == "riedtmann") return Flavor::Riedtmann;
  throw Error("unknown flavor '" + s + "' (full, reduced, string, riedtmann)");
}

std::vector<int> quiver_vertex_of(const BrauerGSet& E) {
  if (!E.u_is_all()) throw Error("quiver needs U = E");
  std::vector<int> v(E.size(), -1);
  int n = 0;
  for (int e = 0; e < E.size(); ++e)
    if (v[e] < 0) v[e] = v[E.tau[e]] = n++;
  return v;
}

namespace {

void require_fms(const BrauerGSet& E) {
  if (!E.is_fms_bg()) throw Error("algebra needs an f_ms-BG (U = E, tau without fixed points)");
}

}  // namespace

AlgebraPresentation quiver_presentation(const BrauerGSet& E, Flavor f) {
  if (f == Flavor::Riedtmann) return riedtmann_presentation(rf_ar_descriptor(E));
  require_fms(E);
  AlgebraPresentation P;
  P.flavor = f;
  auto vq = quiver_vertex_of(E);
  std::vector<int> rep;
  for (int e = 0; e < E.size(); ++e)
    if (static_cast<int>(rep.size()) == vq[e]) {
      rep.push_back(e);
      P.vertices.push_back("P(" + E.ids[e] + ")");
    }
  bool all = f == Flavor::Full;
  std::vector<int> arrow(E.size(), -1);
  for (int e = 0; e < E.size(); ++e)
    if (all || E.deg[e] > 1) {
      arrow[e] = static_cast<int>(P.arrows.size());
      P.arrows.push_back({"L(" + E.ids[e] + ")", vq[e], vq[E.g[e]], e});
    }
  auto path_from = [&](int e, int len) {
    Path p;
    for (int i = 0; i < len; ++i, e = E.g[e]) p.push_back(arrow[e]);
    return p;
  };
  for (int v = 0; v < static_cast<int>(rep.size()); ++v) {
    int e = rep[v], h = E.tau[e];
    if (all || (E.deg[e] > 1 && E.deg[h] > 1)) P.relations.push_back({path_from(e, E.deg[e]), path_from(h, E.deg[h]), "commutativity"});
    if (!all && E.deg[e] == 1 && E.deg[h] == 1)
      P.warnings.push_back("edge " + P.vertices[v] + " has both degrees 1; the presentation is not admissible");
  }
  for (int e = 0; e < E.size(); ++e) {
    int e2 = E.tau[E.g[e]];
    if (arrow[e] >= 0 && arrow[e2] >= 0) P.relations.push_back({{arrow[e], arrow[e2]}, {}, "zero"});
  }
  for (int e = 0; e < E.size(); ++e) {
    if (arrow[e] < 0) continue;
    if (f == Flavor::Full || (f == Flavor::Reduced && E.deg[E.tau[e]] == 1))
      P.relations.push_back({path_from(e, E.deg[e] + 1), {}, "overlong"});
    if (f == Flavor::String) P.relations.push_back({path_from(e, E.deg[e]), {}, "maximal"});
  }
  return P;
}

std::string format_path(const AlgebraPresentation& P, const Path& p) {
  std::string s;
  for (auto it = p.rbegin(); it != p.rend(); ++it) {
    if (!s.empty()) s += " ";
    s += P.arrows[*it].name;
  }
  return s;
}

std::string format_relation(const AlgebraPresentation& P, const Relation& r) {
  if (r.zero()) return format_path(P, r.lhs);
  return format_path(P, r.lhs) + " - " + format_path(P, r.rhs);
}

void check_presentation(const AlgebraPresentation& P) {
  int na = static_cast<int>(P.arrows.size()), nv = static_cast<int>(P.vertices.size());
  for (auto& a : P.arrows)
    if (a.source < 0 || a.source >= nv || a.target < 0 || a.target >= nv) throw Error("arrow " + a.name + " has a bad endpoint");
  auto ends = [&](const Path& p) {
    if (p.empty()) throw Error("relation with an empty path");
    for (size_t i = 0; i < p.size(); ++i) {
      if (p[i] < 0 || p[i] >= na) throw Error("relation uses an unknown arrow");
      if (i && P.arrows[p[i - 1]].target != P.arrows[p[i]].source) throw Error("relation path " + format_path(P, p) + " is not composable");
    }
    return std::pair{P.arrows[p.front()].source, P.arrows[p.back()].target};
  };
  for (auto& r : P.relations) {
    auto a = ends(r.lhs);
    if (!r.zero() && ends(r.rhs) != a) throw Error("relation " + format_relation(P, r) + " mixes endpoints");
  }
}

namespace {

struct UnionFind {
  std::vector<int> p;
  explicit UnionFind(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
  void unite(int a, int b) { p[find(a)] = find(b); }
};

void sort_quotient(PathQuotient& Q) {
  std::vector<int> order(Q.paths.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    auto& x = Q.paths[a];
    auto& y = Q.paths[b];
    if (x.second.size() != y.second.size()) return x.second.size() < y.second.size();
    return x < y;
  });
  std::vector<std::pair<int, Path>> paths;
  std::vector<int> cls;
  for (int i : order) {
    paths.push_back(std::move(Q.paths[i]));
    cls.push_back(Q.cls[i]);
  }
  Q.paths = std::move(paths);
  Q.cls = std::move(cls);
}

PathQuotient quotient_at(const AlgebraPresentation& P, int max_len) {
  PathQuotient Q;
  Q.max_len = max_len;
  int nv = static_cast<int>(P.vertices.size());
  std::vector<std::vector<int>> out(nv);
  for (int a = 0; a < static_cast<int>(P.arrows.size()); ++a) out[P.arrows[a].source].push_back(a);
  std::map<std::pair<int, Path>, int> index;
  std::vector<int> endv;
  for (int v = 0; v < nv; ++v) {
    index[{v, {}}] = static_cast<int>(Q.paths.size());
    Q.paths.push_back({v, {}});
    endv.push_back(v);
  }
  size_t lo = 0;
  for (int len = 1; len <= max_len; ++len) {
    size_t hi = Q.paths.size();
    for (size_t i = lo; i < hi; ++i)
      for (int a : out[endv[i]]) {
        auto np = Q.paths[i];
        np.second.push_back(a);
        index[np] = static_cast<int>(Q.paths.size());
        Q.paths.push_back(np);
        endv.push_back(P.arrows[a].target);
      }
    lo = hi;
    if (Q.paths.size() > 4000000) throw Error("path quotient too large");
  }
  int N = static_cast<int>(Q.paths.size());
  UnionFind uf(N);
  std::vector<char> zero(N, 0);
  // relation sides indexed by first arrow
  std::vector<std::vector<std::pair<const Path*, const Path*>>> by_first(P.arrows.size());
  for (auto& r : P.relations) {
    by_first[r.lhs.front()].push_back({&r.lhs, r.zero() ? nullptr : &r.rhs});
    if (!r.zero()) by_first[r.rhs.front()].push_back({&r.rhs, &r.lhs});
  }
  for (int id = 0; id < N; ++id) {
    const Path& p = Q.paths[id].second;
    for (size_t i = 0; i < p.size(); ++i)
      for (auto [side, other] : by_first[p[i]]) {
        if (i + side->size() > p.size() || !std::equal(side->begin(), side->end(), p.begin() + i)) continue;
        if (!other) {
          zero[id] = 1;
          continue;
        }
        Path q(p.begin(), p.begin() + i);
        q.insert(q.end(), other->begin(), other->end());
        q.insert(q.end(), p.begin() + i + side->size(), p.end());
        if (static_cast<int>(q.size()) > max_len) zero[id] = 1;
        else uf.unite(id, index.at({Q.paths[id].first, q}));
      }
  }
  std::vector<char> zc(N, 0);
  for (int id = 0; id < N; ++id)
    if (zero[id]) zc[uf.find(id)] = 1;
  std::vector<int> compact(N, -1);
  Q.cls.assign(N, -1);
  int nc = 0;
  for (int id = 0; id < N; ++id) {
    int r = uf.find(id);
    if (zc[r]) continue;
    if (compact[r] < 0) compact[r] = nc++;
    Q.cls[id] = compact[r];
  }
  Q.dimension = nc;
  Q.truncation_ok = true;
  for (int id = 0; id < N; ++id)
    if (static_cast<int>(Q.paths[id].second.size()) == max_len && Q.cls[id] >= 0) Q.truncation_ok = false;
  // sorted by (length, vertex, arrows) for lookups
  sort_quotient(Q);
  return Q;
}

}  // namespace

int PathQuotient::class_of(int vertex, const Path& p) const {
  if (static_cast<int>(p.size()) > max_len) return -2;
  auto it = std::lower_bound(paths.begin(), paths.end(), std::pair<int, Path>{vertex, p},
                             [](const auto& a, const auto& b) {
                               if (a.second.size() != b.second.size()) return a.second.size() < b.second.size();
                               return a < b;
                             });
  if (it == paths.end() || it->first != vertex || it->second != p) throw Error("path is not composable");
  int c = cls[it - paths.begin()];
  return c < 0 ? -1 : c;
}

PathQuotient path_quotient(const AlgebraPresentation& P, int max_len) {
  check_presentation(P);
  if (max_len >= 0) return quotient_at(P, max_len);
  int longest = 1;
  for (auto& r : P.relations) longest = std::max<int>({longest, static_cast<int>(r.lhs.size()), static_cast<int>(r.rhs.size())});
  for (int L = longest + 1; L <= 4 * longest + 4; ++L) {
    auto Q = quotient_at(P, L);
    if (Q.truncation_ok) return Q;
  }
  throw Error("path quotient does not stabilize; the ideal is probably not admissible");
}

bool ideal_contains(const AlgebraPresentation& P, const PathQuotient& Q, const Relation& r) {
  auto cls = [&](const Path& p) {
    int c = Q.class_of(P.arrows[p.front()].source, p);
    return c == -2 ? -1 : c;
  };
  int a = cls(r.lhs);
  if (r.zero()) return a == -1;
  return a == cls(r.rhs);
}


std::optional<PresentationIso> presentation_isomorphism(const AlgebraPresentation& P,
                                                        const AlgebraPresentation& Q, bool exact) {
  int nv = static_cast<int>(P.vertices.size()), na = static_cast<int>(P.arrows.size());
  if (nv != static_cast<int>(Q.vertices.size()) || na != static_cast<int>(Q.arrows.size())) return std::nullopt;
  if (exact && P.relations.size() != Q.relations.size()) return std::nullopt;
  auto QP = path_quotient(P), QQ = path_quotient(Q);
  if (QP.dimension != QQ.dimension) return std::nullopt;
  auto succ_table = [](const AlgebraPresentation& A, const PathQuotient& QA) {
    int n = static_cast<int>(A.arrows.size());
    std::vector<std::vector<char>> s(n, std::vector<char>(n, 0));
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (A.arrows[a].target == A.arrows[b].source) s[a][b] = QA.class_of(A.arrows[a].source, {a, b}) >= 0 ? 2 : 1;
    return s;
  };
  auto SP = succ_table(P, QP), SQ = succ_table(Q, QQ);
  auto degs = [](const AlgebraPresentation& A) {
    std::vector<std::pair<int, int>> d(A.vertices.size());
    for (auto& a : A.arrows) {
      ++d[a.source].first;
      ++d[a.target].second;
    }
    return d;
  };
  auto DP = degs(P), DQ = degs(Q);
  // arrows ordered so each one touches an earlier vertex when possible
  std::vector<int> order;
  {
    std::vector<char> used(na, 0), seen(nv, 0);
    while (static_cast<int>(order.size()) < na) {
      int pick = -1;
      for (int a = 0; a < na && pick < 0; ++a)
        if (!used[a] && (seen[P.arrows[a].source] || seen[P.arrows[a].target])) pick = a;
      if (pick < 0)
        for (int a = 0; a < na && pick < 0; ++a)
          if (!used[a]) pick = a;
      used[pick] = 1;
      seen[P.arrows[pick].source] = seen[P.arrows[pick].target] = 1;
      order.push_back(pick);
    }
  }
  auto normalize = [](const AlgebraPresentation& A, const std::vector<int>* amap) {
    std::set<std::pair<Path, Path>> rels;
    for (auto& r : A.relations) {
      Path a = r.lhs, b = r.rhs;
      if (amap) {
        for (int& x : a) x = (*amap)[x];
        for (int& x : b) x = (*amap)[x];
      }
      if (!b.empty() && b < a) std::swap(a, b);
      rels.insert({a, b});
    }
    return rels;
  };
  auto target_rels = exact ? normalize(Q, nullptr) : std::set<std::pair<Path, Path>>{};
  std::vector<int> vmap(nv, -1), vinv(nv, -1), amap(na, -1), ainv(na, -1);
  std::optional<PresentationIso> result;
  auto finish = [&]() -> bool {
    auto vm = vmap, vi = vinv;
    int j = 0;
    for (int v = 0; v < nv; ++v)
      if (vm[v] < 0) {
        while (vi[j] >= 0) ++j;
        vm[v] = j;
        vi[j] = v;
      }
    if (exact) {
      if (normalize(P, &amap) != target_rels) return false;
    } else {
      for (auto& r : P.relations) {
        Relation m = r;
        for (int& x : m.lhs) x = amap[x];
        for (int& x : m.rhs) x = amap[x];
        if (!ideal_contains(Q, QQ, m)) return false;
      }
      for (auto& r : Q.relations) {
        Relation m = r;
        for (int& x : m.lhs) x = ainv[x];
        for (int& x : m.rhs) x = ainv[x];
        if (!ideal_contains(P, QP, m)) return false;
      }
    }
    result = PresentationIso{vm, amap};
    return true;
  };
  std::function<bool(size_t)> go = [&](size_t i) -> bool {
    if (i == order.size()) return finish();
    int a = order[i];
    int s = P.arrows[a].source, t = P.arrows[a].target;
    for (int b = 0; b < na; ++b) {
      if (ainv[b] >= 0) continue;
      int s2 = Q.arrows[b].source, t2 = Q.arrows[b].target;
      if ((s == t) != (s2 == t2)) continue;
      if (DP[s] != DQ[s2] || DP[t] != DQ[t2]) continue;
      if (vmap[s] >= 0 ? vmap[s] != s2 : vinv[s2] >= 0) continue;
      if (vmap[t] >= 0 ? vmap[t] != t2 : (vinv[t2] >= 0 && !(t == s && t2 == s2))) continue;
      bool ok = true;
      for (size_t k = 0; k < i && ok; ++k) {
        int a2 = order[k], b2 = amap[a2];
        ok = SP[a][a2] == SQ[b][b2] && SP[a2][a] == SQ[b2][b];
      }
      if (!ok || SP[a][a] != SQ[b][b]) continue;
      bool news = vmap[s] < 0, newt = vmap[t] < 0 && t != s;
      vmap[s] = s2;
      vinv[s2] = s;
      vmap[t] = t2;
      vinv[t2] = t;
      amap[a] = b;
      ainv[b] = a;
      if (go(i + 1)) return true;
      amap[a] = -1;
      ainv[b] = -1;
      if (news) {
        vmap[s] = -1;
        vinv[s2] = -1;
      }
      if (newt) {
        vmap[t] = -1;
        vinv[t2] = -1;
      }
    }
    return false;
  };
  go(0);
  return result;
}

long long algebra_dimension(const BrauerGSet& E) {
  require_fms(E);
  return path_quotient(quiver_presentation(E, Flavor::Full)).dimension;
}

// ---- strings

namespace {

struct StringCtx {
  const BrauerGSet& E;
  std::vector<int> vq;
  explicit StringCtx(const BrauerGSet& e) : E(e), vq(quiver_vertex_of(e)) {}
  int from(StrLetter c) const { return c.inverse ? vq[E.g[c.e]] : vq[c.e]; }
  int to(StrLetter c) const { return c.inverse ? vq[c.e] : vq[E.g[c.e]]; }
  bool letter_ok(StrLetter c) const { return c.e >= 0 && c.e < E.size() && E.deg[c.e] > 1; }
  bool pair_ok(StrLetter a, StrLetter b) const {
    if (to(a) != from(b)) return false;
    if (!a.inverse && !b.inverse) return b.e == E.g[a.e];
    if (a.inverse && b.inverse) return a.e == E.g[b.e];
    return a.e != b.e;
  }
  int end(const StringWord& s) const { return s.letters.empty() ? s.vertex : to(s.letters.back()); }
  bool can_append(const StringWord& s, StrLetter c) const {
    if (!letter_ok(c) || from(c) != end(s)) return false;
    if (s.letters.empty()) return true;
    if (!pair_ok(s.letters.back(), c)) return false;
    int run = 1;
    for (auto it = s.letters.rbegin(); it != s.letters.rend() && it->inverse == c.inverse; ++it) ++run;
    return run <= E.deg[c.e] - 1;
  }
  std::vector<StrLetter> letters_at(int v) const {
    std::vector<StrLetter> out;
    for (int x = 0; x < E.size(); ++x) {
      if (E.deg[x] <= 1) continue;
      if (vq[x] == v) out.push_back({x, false});
      if (vq[E.g[x]] == v) out.push_back({x, true});
    }
    std::sort(out.begin(), out.end());
    return out;
  }
  bool valid(const StringWord& s) const {
    int nv = vq.empty() ? 0 : *std::max_element(vq.begin(), vq.end()) + 1;
    if (s.vertex < 0 || s.vertex >= nv) return false;
    StringWord t{{}, s.vertex};
    for (auto c : s.letters) {
      if (!can_append(t, c)) return false;
      t.letters.push_back(c);
    }
    return true;
  }
  StringWord inverse(const StringWord& s) const {
    StringWord r;
    r.vertex = end(s);
    for (auto it = s.letters.rbegin(); it != s.letters.rend(); ++it) r.letters.push_back({it->e, !it->inverse});
    return r;
  }
};

}  // namespace

int string_end(const BrauerGSet& E, const StringWord& s) { return StringCtx(E).end(s); }

bool string_valid(const BrauerGSet& E, const StringWord& s) {
  require_fms(E);
  return StringCtx(E).valid(s);
}

StringWord string_inverse(const BrauerGSet& E, const StringWord& s) { return StringCtx(E).inverse(s); }

StringWord canonical_string(const BrauerGSet& E, const StringWord& s) {
  return std::min(s, string_inverse(E, s));
}

std::string format_string(const BrauerGSet& E, const StringWord& s) {
  auto vq = quiver_vertex_of(E);
  int rep = static_cast<int>(std::find(vq.begin(), vq.end(), s.vertex) - vq.begin());
  std::string out = "P(" + E.ids[rep] + "):";
  for (auto c : s.letters) out += " L(" + E.ids[c.e] + ")" + (c.inverse ? "^-1" : "");
  return out;
}

StringWord parse_string(const BrauerGSet& E, const std::string& text) {
  StringCtx ctx(E);
  StringWord s;
  std::istringstream is(text);
  std::string tok;
  bool have_vertex = false;
  auto inner = [&](const std::string& t, size_t open) {
    size_t close = t.find(')', open);
    if (close == std::string::npos) throw Error("bad string token '" + t + "'");
    return t.substr(open + 1, close - open - 1);
  };
  while (is >> tok) {
    if (tok.rfind("P(", 0) == 0) {
      s.vertex = ctx.vq[E.at(inner(tok, 1))];
      have_vertex = true;
    } else if (tok.rfind("L(", 0) == 0) {
      StrLetter c{E.at(inner(tok, 1)), tok.size() >= 3 && tok.substr(tok.size() - 3) == "^-1"};
      if (s.letters.empty() && !have_vertex) s.vertex = ctx.from(c);
      s.letters.push_back(c);
    } else {
      throw Error("bad string token '" + tok + "'");
    }
  }
  if (!have_vertex && s.letters.empty()) throw Error("empty string needs a vertex P(x):");
  if (!ctx.valid(s)) throw Error("not a string of the algebra: " + text);
  return s;
}

StringList enumerate_strings(const BrauerGSet& E, int max_len) {
  require_fms(E);
  StringCtx ctx(E);
  int nv = static_cast<int>(ctx.vq.empty() ? 0 : *std::max_element(ctx.vq.begin(), ctx.vq.end()) + 1);
  std::set<StringWord> found;
  std::vector<StringWord> frontier;
  for (int v = 0; v < nv; ++v) frontier.push_back({{}, v});
  StringList out;
  for (int len = 0;; ++len) {
    for (auto& s : frontier) found.insert(std::min(s, ctx.inverse(s)));
    std::vector<StringWord> next;
    for (auto& s : frontier)
      for (auto c : ctx.letters_at(ctx.end(s)))
        if (ctx.can_append(s, c)) {
          auto t = s;
          t.letters.push_back(c);
          next.push_back(std::move(t));
        }
    if (next.empty()) {
      out.saturated = true;
      break;
    }
    if (len == max_len) break;
    frontier = std::move(next);
  }
  out.strings.assign(found.begin(), found.end());
  return out;
}

StringWord mouth_string(const BrauerGSet& E, int e) {
  require_fms(E);
  auto vq = quiver_vertex_of(E);
  StringWord s{{}, vq[e]};
  for (int i = 0, x = e; i < E.deg[e] - 1; ++i, x = E.g[x]) s.letters.push_back({x, false});
  return s;
}

std::vector<MouthModule> mouth_modules(const BrauerGSet& E) {
  require_fms(E);
  if (classify_rep_type(E).tag == RepTag::RepFinite) throw Error("mouth modules need a representation-infinite algebra");
  std::vector<MouthModule> out;
  for (int e = 0; e < E.size(); ++e) out.push_back({e, mouth_string(E, e)});
  return out;
}

namespace {

int vertex_rep(const std::vector<int>& vq, int v) {
  auto it = std::find(vq.begin(), vq.end(), v);
  if (it == vq.end()) throw Error("no such quiver vertex");
  return static_cast<int>(it - vq.begin());
}

}  // namespace

StringWord top_string(const BrauerGSet& E, int vertex) {
  require_fms(E);
  auto vq = quiver_vertex_of(E);
  int e = vertex_rep(vq, vertex), h = E.tau[e];
  StringWord s;
  s.vertex = vq[E.gpow(e, E.deg[e] - 1)];
  for (int i = E.deg[e] - 2; i >= 0; --i) s.letters.push_back({E.gpow(e, i), true});
  for (int i = 0; i < E.deg[h] - 1; ++i) s.letters.push_back({E.gpow(h, i), false});
  return s;
}

StringWord radical_string(const BrauerGSet& E, int vertex) {
  require_fms(E);
  auto vq = quiver_vertex_of(E);
  int e = vertex_rep(vq, vertex), h = E.tau[e];
  StringWord s;
  s.vertex = vq[E.g[e]];
  for (int i = 1; i < E.deg[e]; ++i) s.letters.push_back({E.gpow(e, i), false});
  for (int i = E.deg[h] - 1; i >= 1; --i) s.letters.push_back({E.gpow(h, i), true});
  return s;
}

namespace {

std::optional<StringWord> add_cohook(const StringCtx& ctx, const StringWord& s) {
  for (auto c : ctx.letters_at(ctx.end(s))) {
    if (c.inverse || !ctx.can_append(s, c)) continue;
    StringWord t = s;
    t.letters.push_back(c);
    for (bool grew = true; grew;) {
      grew = false;
      for (auto y : ctx.letters_at(ctx.end(t)))
        if (y.inverse && ctx.can_append(t, y)) {
          t.letters.push_back(y);
          grew = true;
          break;
        }
    }
    return t;
  }
  return std::nullopt;
}

StringWord delete_hook(const StringCtx& ctx, const StringWord& s) {
  (void)ctx;
  for (size_t i = s.letters.size(); i-- > 0;)
    if (s.letters[i].inverse) return {std::vector<StrLetter>(s.letters.begin(), s.letters.begin() + i), s.vertex};
  throw Error("string has no hook to delete");
}

std::optional<StringWord> add_cohook_left(const StringCtx& ctx, const StringWord& s) {
  auto t = add_cohook(ctx, ctx.inverse(s));
  if (!t) return std::nullopt;
  return ctx.inverse(*t);
}

StringWord delete_hook_left(const StringCtx& ctx, const StringWord& s) {
  return ctx.inverse(delete_hook(ctx, ctx.inverse(s)));
}

}  // namespace

DtrResult dtr_string(const BrauerGSet& E, const StringWord& s) {
  require_fms(E);
  StringCtx ctx(E);
  if (!ctx.valid(s)) throw Error("invalid string");
  auto cs = std::min(s, ctx.inverse(s));
  int nv = static_cast<int>(*std::max_element(ctx.vq.begin(), ctx.vq.end()) + 1);
  for (int v = 0; v < nv; ++v) {
    auto t = top_string(E, v);
    if (std::min(t, ctx.inverse(t)) == cs) {
      auto r = radical_string(E, v);
      return {std::min(r, ctx.inverse(r)), true};
    }
  }
  StringWord res;
  if (auto a = add_cohook(ctx, s)) {
    if (auto b = add_cohook_left(ctx, *a)) res = *b;
    else res = delete_hook_left(ctx, *a);
  } else if (auto a2 = add_cohook_left(ctx, s)) {
    res = delete_hook(ctx, *a2);
  } else {
    res = delete_hook_left(ctx, delete_hook(ctx, s));
  }
  return {std::min(res, ctx.inverse(res)), false};
}

// ---- string bands

namespace {

bool mixed(const StringWord& b) {
  bool d = false, i = false;
  for (auto c : b.letters) (c.inverse ? i : d) = true;
  return d && i;
}

bool primitive_letters(const std::vector<StrLetter>& w) {
  size_t P = w.size();
  for (size_t p = 1; p < P; ++p) {
    if (P % p) continue;
    bool same = true;
    for (size_t i = 0; i < P && same; ++i) same = w[i] == w[(i + p) % P];
    if (same) return false;
  }
  return true;
}

bool band_ok(const StringCtx& ctx, const StringWord& b) {
  if (b.letters.empty() || !mixed(b)) return false;
  if (ctx.from(b.letters.front()) != b.vertex || ctx.end(b) != b.vertex) return false;
  StringWord twice{b.letters, b.vertex};
  twice.letters.insert(twice.letters.end(), b.letters.begin(), b.letters.end());
  return ctx.valid(twice) && primitive_letters(b.letters);
}

StringWord canonical_band_ctx(const StringCtx& ctx, const StringWord& b) {
  StringWord best;
  bool first = true;
  for (const StringWord& w : {b, ctx.inverse(b)}) {
    size_t P = w.letters.size();
    for (size_t r = 0; r < P; ++r) {
      StringWord c;
      for (size_t i = 0; i < P; ++i) c.letters.push_back(w.letters[(i + r) % P]);
      c.vertex = ctx.from(c.letters.front());
      if (first || c < best) best = c;
      first = false;
    }
  }
  return best;
}

}  // namespace

bool string_band_valid(const BrauerGSet& E, const StringWord& b) {
  require_fms(E);
  return band_ok(StringCtx(E), b);
}

StringWord canonical_string_band(const BrauerGSet& E, const StringWord& b) {
  StringCtx ctx(E);
  if (!band_ok(ctx, b)) throw Error("invalid string band");
  return canonical_band_ctx(ctx, b);
}

std::vector<StringWord> enumerate_string_bands(const BrauerGSet& E, int max_len, std::size_t max_classes) {
  require_fms(E);
  StringCtx ctx(E);
  int nv = static_cast<int>(*std::max_element(ctx.vq.begin(), ctx.vq.end()) + 1);
  std::set<StringWord> found;
  bool stop = false;
  for (int x = 0; x < E.size() && !stop; ++x) {
    if (E.deg[x] <= 1) continue;
    // canonical words start with (x, direct) where x is their least arrow
    StrLetter c0{x, false};
    int start = ctx.from(c0);
    std::vector<std::vector<int>> adj(nv);
    for (int y = x; y < E.size(); ++y)
      if (E.deg[y] > 1) {
        adj[ctx.vq[y]].push_back(ctx.vq[E.g[y]]);
        adj[ctx.vq[E.g[y]]].push_back(ctx.vq[y]);
      }
    std::vector<int> dist(nv, -1);
    std::vector<int> q{start};
    dist[start] = 0;
    for (size_t i = 0; i < q.size(); ++i)
      for (int w : adj[q[i]])
        if (dist[w] < 0) {
          dist[w] = dist[q[i]] + 1;
          q.push_back(w);
        }
    StringWord cur{{c0}, start};
    std::function<void()> dfs = [&]() {
      if (stop) return;
      int len = static_cast<int>(cur.letters.size());
      if (ctx.end(cur) == start && band_ok(ctx, cur)) {
        found.insert(canonical_band_ctx(ctx, cur));
        if (max_classes && found.size() >= max_classes) {
          stop = true;
          return;
        }
      }
      if (len == max_len) return;
      for (auto c : ctx.letters_at(ctx.end(cur))) {
        if (c.e < x || !ctx.can_append(cur, c)) continue;
        int t = ctx.to(c);
        if (dist[t] < 0 || len + 1 + dist[t] > max_len) continue;
        cur.letters.push_back(c);
        dfs();
        cur.letters.pop_back();
        if (stop) return;
      }
    };
    if (max_len >= 1) dfs();
  }
  return {found.begin(), found.end()};
}

StringWord band_to_string_band(const BrauerGSet& E, const BandWord& w) {
  require_fms(E);
  if (!band_valid(E, w)) throw Error("invalid band word");
  StringCtx ctx(E);
  StringWord s;
  for (auto& st : w.steps) {
    for (int i = 0; i < st.k; ++i) s.letters.push_back({E.gpow(st.e, i), false});
    int h = E.tau[E.gpow(st.e, st.k)];
    for (int i = 1; i <= st.l; ++i) s.letters.push_back({E.gpow(h, -i), true});
  }
  s.vertex = ctx.from(s.letters.front());
  return canonical_string_band(E, s);
}

}  // namespace bgk
