#include "bgk/core.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <sstream>

namespace bgk {

bool BrauerGSet::u_is_all() const {
  return std::all_of(tau.begin(), tau.end(), [](int t) { return t >= 0; });
}

bool BrauerGSet::has_doubles() const {
  for (int e = 0; e < size(); ++e)
    if (tau[e] == e) return true;
  return false;
}

int BrauerGSet::index_of(std::string_view id) const {
  auto it = std::lower_bound(ids.begin(), ids.end(), id);
  if (it == ids.end() || *it != id) return -1;
  return static_cast<int>(it - ids.begin());
}

int BrauerGSet::at(std::string_view id) const {
  int i = index_of(id);
  if (i < 0) throw Error("unknown half-edge '" + std::string(id) + "'");
  return i;
}

int BrauerGSet::gpow(int e, long long k) const {
  long long m = orbit_size(e);
  k %= m;
  if (k < 0) k += m;
  for (long long i = 0; i < k; ++i) e = g[e];
  return e;
}

int BrauerGSet::orbit_size(int e) const {
  int n = 1;
  for (int x = g[e]; x != e; x = g[x]) ++n;
  return n;
}

namespace {

bool bad_id(const std::string& s) {
  if (s.empty()) return true;
  return std::any_of(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); });
}

}  // namespace

ValidationReport validate(const RawGSet& raw) {
  ValidationReport rep;
  auto& bad = rep.malformed;
  std::set<std::string> known;
  for (auto& id : raw.half_edges) {
    if (bad_id(id)) bad.push_back("half-edge id '" + id + "' is empty or contains whitespace");
    if (!known.insert(id).second) bad.push_back("duplicate half-edge '" + id + "'");
  }
  for (auto& id : known)
    if (!raw.g.count(id)) bad.push_back("g: no image for '" + id + "'");
  for (auto& [k, v] : raw.g) {
    if (!known.count(k)) bad.push_back("g: unknown half-edge '" + k + "'");
    if (!known.count(v)) bad.push_back("g: unknown image '" + v + "' of '" + k + "'");
  }
  std::set<std::string> u;
  for (auto& id : raw.U) {
    if (!known.count(id)) bad.push_back("U: unknown half-edge '" + id + "'");
    if (!u.insert(id).second) bad.push_back("U: duplicate '" + id + "'");
  }
  for (auto& [k, v] : raw.tau) {
    if (!known.count(k)) bad.push_back("tau: unknown half-edge '" + k + "'");
    else if (!u.count(k)) bad.push_back("tau: defined outside U at '" + k + "'");
    if (!known.count(v)) bad.push_back("tau: unknown image '" + v + "' of '" + k + "'");
  }
  for (auto& id : known)
    if (!raw.degree.count(id)) bad.push_back("degree: missing for '" + id + "'");
  for (auto& [k, v] : raw.degree) {
    if (!known.count(k)) bad.push_back("degree: unknown half-edge '" + k + "'");
    else if (v <= 0) bad.push_back("degree: not positive at '" + k + "'");
  }
  if (!bad.empty()) return rep;

  auto& V = rep.violations;
  // g bijective: finite set, so injective suffices
  std::map<std::string, std::string> pre;
  bool bij = true;
  for (auto& [k, v] : raw.g) {
    auto [it, fresh] = pre.emplace(v, k);
    if (!fresh) {
      V.push_back({"g-bijection", k, "g('" + k + "') = g('" + it->second + "') = '" + v + "'"});
      bij = false;
    }
  }
  bool tau_ok = true;
  for (auto& id : u) {
    auto it = raw.tau.find(id);
    if (it == raw.tau.end()) {
      V.push_back({"tau-domain", id, "tau undefined on an element of U"});
      tau_ok = false;
      continue;
    }
    if (!u.count(it->second)) {
      V.push_back({"tau-image", id, "tau('" + id + "') = '" + it->second + "' is not in U"});
      tau_ok = false;
      continue;
    }
    if (raw.tau.at(it->second) != id) {
      V.push_back({"tau-involution", id, "tau(tau('" + id + "')) != '" + id + "'"});
      tau_ok = false;
    }
  }
  for (auto& id : known) {
    auto& nx = raw.g.at(id);
    if (raw.degree.at(id) != raw.degree.at(nx))
      V.push_back({"mf1", id, "d('" + id + "') = " + std::to_string(raw.degree.at(id)) + " but d('" +
                                  nx + "') = " + std::to_string(raw.degree.at(nx))});
  }
  if (bij) {
    auto sig = [&](const std::string& e) {
      std::string x = e;
      for (long long i = 0; i < raw.degree.at(e); ++i) x = raw.g.at(x);
      return x;
    };
    for (auto& id : u) {
      std::string s = sig(id);
      if (!u.count(s)) {
        V.push_back({"mf2", id, "sigma('" + id + "') = '" + s + "' is not in U"});
        continue;
      }
      if (!tau_ok) continue;
      std::string a = raw.tau.at(s), b = sig(raw.tau.at(id));
      if (a != b) V.push_back({"mf2", id, "tau(sigma('" + id + "')) = '" + a + "' but sigma(tau('" + id + "')) = '" + b + "'"});
    }
  }
  if (!V.empty()) return rep;

  bool all_u = u.size() == known.size();
  bool fixed = false;
  for (auto& [k, v] : raw.tau) fixed |= (k == v);
  rep.is_fms_bg = all_u && !fixed;
  bool integral = true;
  for (auto& id : known) {
    long long sz = 1;
    for (std::string x = raw.g.at(id); x != id; x = raw.g.at(x)) ++sz;
    if (raw.degree.at(id) % sz != 0) integral = false;
  }
  rep.is_modified_bg = all_u && integral;
  return rep;
}

BrauerGSet build(const RawGSet& raw) {
  auto rep = validate(raw);
  if (!rep.valid()) {
    std::ostringstream os;
    os << "not a Brauer G-set:";
    for (auto& m : rep.malformed) os << "\n  malformed: " << m;
    for (auto& v : rep.violations) os << "\n  (" << v.axiom << ") at " << v.witness << ": " << v.detail;
    throw Error(os.str());
  }
  BrauerGSet E;
  E.ids = raw.half_edges;
  std::sort(E.ids.begin(), E.ids.end());
  int n = E.size();
  E.g.assign(n, -1);
  E.ginv.assign(n, -1);
  E.tau.assign(n, -1);
  E.deg.assign(n, 0);
  for (int e = 0; e < n; ++e) {
    E.g[e] = E.index_of(raw.g.at(E.ids[e]));
    E.ginv[E.g[e]] = e;
    E.deg[e] = static_cast<int>(raw.degree.at(E.ids[e]));
  }
  for (auto& [k, v] : raw.tau) E.tau[E.index_of(k)] = E.index_of(v);
  E.name = raw.name;
  E.comment = raw.comment;
  return E;
}

RawGSet to_raw(const BrauerGSet& E) {
  RawGSet r;
  r.half_edges = E.ids;
  for (int e = 0; e < E.size(); ++e) {
    r.g[E.ids[e]] = E.ids[E.g[e]];
    r.degree[E.ids[e]] = E.deg[e];
    if (E.in_u(e)) {
      r.U.push_back(E.ids[e]);
      r.tau[E.ids[e]] = E.ids[E.tau[e]];
    }
  }
  r.name = E.name;
  r.comment = E.comment;
  return r;
}

BrauerGSet from_arrays(const std::vector<std::string>& ids, const std::vector<int>& g,
                       const std::vector<int>& tau, const std::vector<int>& deg, std::string name) {
  RawGSet r;
  r.half_edges = ids;
  for (size_t e = 0; e < ids.size(); ++e) {
    r.g[ids[e]] = ids[g[e]];
    r.degree[ids[e]] = deg[e];
    if (tau[e] >= 0) {
      r.U.push_back(ids[e]);
      r.tau[ids[e]] = ids[tau[e]];
    }
  }
  r.name = std::move(name);
  return build(r);
}

VertexStats vertex_stats(const BrauerGSet& E) {
  VertexStats s;
  s.vertex_of.assign(E.size(), -1);
  for (int e = 0; e < E.size(); ++e) {
    if (s.vertex_of[e] >= 0) continue;
    Vertex v;
    int x = e;
    do {
      s.vertex_of[x] = s.n();
      v.half_edges.push_back(x);
      x = E.g[x];
    } while (x != e);
    v.degree = E.deg[e];
    v.f_degree = Rational::make(v.degree, static_cast<long long>(v.half_edges.size()));
    s.vertices.push_back(std::move(v));
  }
  for (int e = 0; e < E.size(); ++e) {
    if (!E.in_u(e)) continue;
    if (E.tau[e] == e) s.doubles.push_back(e);
    else if (e < E.tau[e]) s.edges.push_back({e, E.tau[e]});
  }
  return s;
}

long long permutation_order(const std::vector<int>& p) {
  long long ord = 1;
  std::vector<char> seen(p.size(), 0);
  for (size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    long long len = 0;
    for (size_t x = i; !seen[x]; x = p[x]) {
      seen[x] = 1;
      ++len;
    }
    ord = std::lcm(ord, len);
  }
  return ord;
}

Permutation nakayama(const BrauerGSet& E) {
  Permutation p;
  p.map.resize(E.size());
  for (int e = 0; e < E.size(); ++e) p.map[e] = E.sigma(e);
  p.order = permutation_order(p.map);
  return p;
}

namespace {

int step(const BrauerGSet& E, int x, Letter l) {
  switch (l) {
    case Letter::G: return E.g[x];
    case Letter::GInv: return E.ginv[x];
    case Letter::Tau:
      if (!E.in_u(x)) throw Error("walk applies tau at '" + E.ids[x] + "', which is not in U");
      return E.tau[x];
  }
  return x;
}

}  // namespace

int walk_target(const BrauerGSet& E, const Walk& w) {
  int x = w.source;
  for (Letter l : w.letters) x = step(E, x, l);
  return x;
}

bool walk_valid(const BrauerGSet& E, const Walk& w) {
  int x = w.source;
  for (Letter l : w.letters) {
    if (l == Letter::Tau && !E.in_u(x)) return false;
    x = l == Letter::G ? E.g[x] : l == Letter::GInv ? E.ginv[x] : E.tau[x];
  }
  return true;
}

Walk parse_walk(const BrauerGSet& E, std::string_view text) {
  std::istringstream is{std::string(text)};
  std::string tok;
  Walk w;
  if (!(is >> tok)) throw Error("empty walk");
  w.source = E.at(tok);
  while (is >> tok) {
    if (tok == "tau") {
      w.letters.push_back(Letter::Tau);
    } else if (tok == "g") {
      w.letters.push_back(Letter::G);
    } else if (tok.rfind("g^", 0) == 0) {
      long long k;
      try {
        size_t used = 0;
        k = std::stoll(tok.substr(2), &used);
        if (used != tok.size() - 2) throw std::invalid_argument(tok);
      } catch (const std::exception&) {
        throw Error("bad walk letter '" + tok + "'");
      }
      Letter l = k < 0 ? Letter::GInv : Letter::G;
      for (long long i = 0; i < (k < 0 ? -k : k); ++i) w.letters.push_back(l);
    } else {
      throw Error("bad walk letter '" + tok + "'");
    }
  }
  walk_target(E, w);
  return w;
}

std::string format_walk(const BrauerGSet& E, const Walk& w) {
  std::string out = E.ids[w.source];
  size_t i = 0;
  while (i < w.letters.size()) {
    Letter l = w.letters[i];
    size_t j = i;
    while (j < w.letters.size() && w.letters[j] == l && l != Letter::Tau) ++j;
    if (l == Letter::Tau) {
      out += " tau";
      ++i;
      continue;
    }
    long long run = static_cast<long long>(j - i);
    if (l == Letter::G) out += run == 1 ? " g" : " g^" + std::to_string(run);
    else out += " g^-" + std::to_string(run);
    i = j;
  }
  return out;
}

Walk inverse_walk(const BrauerGSet& E, const Walk& w) {
  Walk r;
  r.source = walk_target(E, w);
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
    r.letters.push_back(*it == Letter::G ? Letter::GInv : *it == Letter::GInv ? Letter::G : Letter::Tau);
  return r;
}

Walk concat(const Walk& first, const Walk& then) {
  Walk r = first;
  r.letters.insert(r.letters.end(), then.letters.begin(), then.letters.end());
  return r;
}

int special_target(const BrauerGSet& E, const SpecialWalk& v) {
  int x = v.source;
  for (size_t j = 0; j < v.exps.size(); ++j) {
    if (j > 0) x = E.tau[x];
    x = E.gpow(x, v.exps[j]);
  }
  return x;
}

bool special_walk_valid(const BrauerGSet& E, const SpecialWalk& v) {
  if (v.exps.empty() || v.source < 0 || v.source >= E.size()) return false;
  int x = v.source;
  int k = v.tau_count();
  for (int j = 0; j <= k; ++j) {
    if (j > 0) {
      if (!E.in_u(x)) return false;
      x = E.tau[x];
    }
    int i = v.exps[j];
    if (i < 0 || i >= E.deg[x]) return false;
    if (j > 0 && j < k && i == 0) return false;
    x = E.gpow(x, i);
  }
  return true;
}

Walk to_walk(const BrauerGSet& E, const SpecialWalk& v) {
  (void)E;
  Walk w;
  w.source = v.source;
  for (size_t j = 0; j < v.exps.size(); ++j) {
    if (j > 0) w.letters.push_back(Letter::Tau);
    w.letters.insert(w.letters.end(), v.exps[j], Letter::G);
  }
  return w;
}

// Lift w into the special-walk cover: a stack of runs (start, exponent)
// plus the power n of sigma accumulated on the last run.
NormalForm walk_normal_form(const BrauerGSet& E, const Walk& w) {
  std::vector<std::pair<int, int>> runs{{w.source, 0}};
  long long n = 0;
  int cur = w.source;
  for (Letter l : w.letters) {
    cur = step(E, cur, l);
    auto& [s, i] = runs.back();
    int d = E.deg[s];
    if (l == Letter::G) {
      if (i + 1 < d) ++i;
      else { i = 0; ++n; }
    } else if (l == Letter::GInv) {
      if (i > 0) --i;
      else { i = d - 1; --n; }
    } else {
      if (runs.size() == 1 || i > 0) {
        int tip = E.gpow(s, i);
        runs.push_back({E.tau[tip], 0});
      } else {
        runs.pop_back();
      }
    }
  }
  NormalForm nf;
  nf.special.source = w.source;
  for (auto& r : runs) nf.special.exps.push_back(r.second);
  nf.power = n;
  return nf;
}

Walk expand(const BrauerGSet& E, const NormalForm& nf) {
  Walk w = to_walk(E, nf.special);
  int t = special_target(E, nf.special);
  long long k = nf.power * E.deg[t];
  Letter l = k < 0 ? Letter::GInv : Letter::G;
  w.letters.insert(w.letters.end(), static_cast<size_t>(k < 0 ? -k : k), l);
  return w;
}

bool walks_homotopic(const BrauerGSet& E, const Walk& w1, const Walk& w2) {
  if (w1.source != w2.source) throw Error("walks have different sources");
  return walk_normal_form(E, w1) == walk_normal_form(E, w2);
}

std::vector<std::vector<int>> connected_components(const BrauerGSet& E) {
  std::vector<int> comp(E.size(), -1);
  std::vector<std::vector<int>> out;
  for (int e = 0; e < E.size(); ++e) {
    if (comp[e] >= 0) continue;
    std::vector<int> stack{e}, members;
    comp[e] = static_cast<int>(out.size());
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      members.push_back(x);
      for (int y : {E.g[x], E.ginv[x], E.tau[x]}) {
        if (y >= 0 && comp[y] < 0) {
          comp[y] = comp[e];
          stack.push_back(y);
        }
      }
    }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

bool is_connected(const BrauerGSet& E) { return connected_components(E).size() <= 1; }

}  // namespace bgk
