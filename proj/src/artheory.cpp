#include "bgk/artheory.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>

#include "bgk/classify.hpp"
#include "bgk/constructions.hpp"

namespace bgk {

namespace {

long long mod(long long a, long long m) { return ((a % m) + m) % m; }

void require_rep_infinite(const BrauerGSet& E) {
  if (!E.is_fms_bg()) throw Error("needs an f_ms-BG (U = E, tau without fixed points)");
  if (classify_rep_type(E).tag == RepTag::RepFinite) throw Error("the algebra is representation-finite; there are no exceptional tubes");
}

}  // namespace

std::vector<int> dtr_permutation(const BrauerGSet& E) {
  std::vector<int> p(E.size());
  for (int e = 0; e < E.size(); ++e) {
    int x = E.g[E.tau[E.g[E.tau[e]]]];
    p[e] = E.sigma_inv(x);
  }
  return p;
}

std::vector<long long> exceptional_tubes(const BrauerGSet& E) {
  require_rep_infinite(E);
  auto p = dtr_permutation(E);
  std::vector<char> seen(E.size(), 0);
  std::vector<long long> out;
  for (int e = 0; e < E.size(); ++e) {
    if (seen[e]) continue;
    long long len = 0;
    for (int x = e; !seen[x]; x = p[x]) {
      seen[x] = 1;
      ++len;
    }
    out.push_back(len);
  }
  std::sort(out.begin(), out.end());
  return out;
}

long long ARSummary::za_tilde_total() const {
  long long s = 0;
  for (auto& z : za_tilde) s += z.count;
  return s;
}

ARSummary domestic_census(int which, long long r, int n, int m, int p, int q, int l) {
  ARSummary S;
  S.domestic_case = which;
  if (r <= 0) throw Error("r must be positive");
  switch (which) {
    case 1:
      if (n < 1) throw Error("case 1 needs n >= 1");
      if (n > 1) S.tube_ranks[n] = 4 * r;
      S.za_tilde.push_back({n, n, 2 * r});
      break;
    case 2:
      if (n < 2) throw Error("case 2 needs n >= 2");
      if (n > 2) S.tube_ranks[n - 1] = 4 * r - 2;
      S.za_tilde.push_back({n - 1, n - 1, 2 * r - 1});
      break;
    case 3: {
      if (m < 1 || l < 1) throw Error("case 3 needs m >= 1 and l >= 1");
      long long G = std::gcd(m % 2 ? r : 2 * r, static_cast<long long>(m + 2 * l));
      long long c = r * (m + 2 * p) / G, d = r * (m + 2 * q) / G;
      if (c > 1) S.tube_ranks[c] += G;
      if (d > 1) S.tube_ranks[d] += G;
      S.za_tilde.push_back({c, d, G});
      break;
    }
    default:
      throw Error("domestic case must be 1, 2 or 3");
  }
  return S;
}

ARSummary stable_ar_summary(const BrauerGSet& E) {
  RepType t = classify_rep_type(E);
  if (t.tag != RepTag::Domestic) throw Error("stable AR summary needs a domestic algebra, got " + rep_tag_name(t.tag));
  auto B = quotient_by_sigma(E).quotient;
  int n = vertex_stats(B).n();
  return domestic_census(t.domestic_case, t.r, n, t.m, t.p, t.q, t.l);
}

BrauerRelation brauer_relation(const BrauerGSet& B, int e) {
  if (!B.is_fms_bg() || !is_connected(B)) throw Error("Brauer relation needs a connected Brauer graph");
  auto st = vertex_stats(B);
  if (st.k() != st.n() - 1) throw Error("Brauer relation needs a Brauer tree");
  for (auto& v : st.vertices)
    if (!(v.f_degree == Rational{1, 1})) throw Error("Brauer relation needs trivial f-degree");
  if (e < 0 || e >= B.size()) throw Error("unknown half-edge");
  int n = st.k();
  std::vector<int> pos(B.size(), -1);
  int x = e;
  for (int i = 0; i < 2 * n; ++i) {
    pos[x] = i;
    x = B.tau[B.g[x]];
  }
  if (x != e) throw Error("internal: (tau g)-orbit is not everything");
  BrauerRelation R;
  R.n = n;
  R.beta.resize(n);
  for (int k = 0; k < n; ++k) {
    int y = e;
    for (int i = 0; i < 2 * k; ++i) y = B.tau[B.g[y]];
    int i = pos[B.g[y]];
    if (i % 2) throw Error("internal: beta-arrow ends at an odd position");
    R.beta[k] = (i / 2) % n;
  }
  std::vector<char> seen(n, 0);
  for (int k = 0; k < n; ++k) {
    if (seen[k]) continue;
    std::vector<int> cls;
    for (int y = k; !seen[y]; y = R.beta[y]) {
      seen[y] = 1;
      cls.push_back(y);
    }
    std::sort(cls.begin(), cls.end());
    R.classes.push_back(cls);
  }
  if (!non_crossing(R)) throw Error("internal: classes cross");
  return R;
}

bool non_crossing(const BrauerRelation& rel) {
  auto& C = rel.classes;
  for (size_t a = 0; a < C.size(); ++a)
    for (size_t b = 0; b < C.size(); ++b) {
      if (a == b) continue;
      for (size_t i = 0; i < C[a].size(); ++i)
        for (size_t j = i + 1; j < C[a].size(); ++j) {
          int lo = C[a][i], hi = C[a][j];
          bool in = false, out = false;
          for (int y : C[b]) (lo < y && y < hi ? in : out) = true;
          if (in && out) return false;
        }
    }
  return true;
}

bool Configuration::contains(long long i, long long jj) const {
  return jj >= 1 && jj <= n && j[mod(i, n)] == jj;
}

std::pair<long long, long long> Configuration::on_down(long long p) const {
  for (int y = 1; y <= n; ++y)
    if (j[mod(p - y, n)] == y) return {p - y, y};
  throw Error("internal: no configuration point on a going-down diagonal");
}

long long Configuration::alpha(long long p) const { return n + on_down(p).first + 1; }
long long Configuration::beta(long long p) const { return p + j[mod(p, n)]; }

Configuration configuration(const BrauerRelation& rel) {
  Configuration C;
  C.n = rel.n;
  for (int i = 0; i < rel.n; ++i) {
    int d = static_cast<int>(mod(rel.beta[i] - i, rel.n));
    C.j.push_back(d == 0 ? rel.n : d);
  }
  // one point per going-down diagonal over a period
  for (int p = 0; p < C.n; ++p) {
    int hits = 0;
    for (int y = 1; y <= C.n; ++y) hits += C.j[mod(p - y, C.n)] == y;
    if (hits != 1) throw Error("internal: configuration meets a going-down diagonal " + std::to_string(hits) + " times");
  }
  return C;
}

bool translation_stable(const Configuration& C, int step) {
  for (int i = 0; i < C.n; ++i)
    if (C.j[mod(i + step, C.n)] != C.j[i]) return false;
  return true;
}

bool phi_symmetric(const Configuration& C) {
  if (C.n % 2 == 0) return false;
  int p = (C.n - 1) / 2;
  for (int i = 0; i < C.n; ++i) {
    int jj = C.j[i];
    if (!C.contains(i + jj - p - 1, C.n + 1 - jj)) return false;
  }
  return true;
}

long long ARQuiverDescriptor::generator(long long s) const {
  if (group == ARGroup::Translation) return s + shift;
  long long p = (n - 1) / 2;
  return C.on_down(s).first + p + 1 + shift;
}

long long ARQuiverDescriptor::stable_vertices() const { return static_cast<long long>(n) * shift; }
long long ARQuiverDescriptor::projective_vertices() const { return shift; }

std::vector<long long> ARQuiverDescriptor::tau_orbit_sizes() const {
  std::vector<long long> out;
  if (group == ARGroup::Translation) {
    out.assign(n, shift);
  } else {
    out.assign((n - 1) / 2, 2 * shift);
    out.push_back(shift);
  }
  std::sort(out.begin(), out.end());
  return out;
}

ARQuiverDescriptor rf_ar_descriptor(const BrauerGSet& E) {
  RepType t = classify_rep_type(E);
  if (t.tag != RepTag::RepFinite) throw Error("AR-quiver descriptor needs a representation-finite algebra, got " + rep_tag_name(t.tag));
  auto Q = quotient_by_sigma(E);
  const BrauerGSet& B0 = Q.quotient;
  ARQuiverDescriptor d;
  d.subcase = t.subcase;
  d.r = t.r;
  if (t.subcase == 'a') {
    ShapeStats S = shape_stats(B0);
    auto st = vertex_stats(B0);
    int h = S.exceptional.empty() ? 0 : st.vertices[S.exceptional[0]].half_edges[0];
    d.m = t.m;
    CoveringMap cov = unfold_exceptional_tree(B0, h);
    const BrauerGSet& B = cov.source;
    int e = static_cast<int>(std::find(cov.map.begin(), cov.map.end(), h) - cov.map.begin());
    d.n = B.size() / 2;
    d.C = configuration(brauer_relation(B, e));
    if (d.n % d.m) throw Error("internal: m does not divide n");
    if (!translation_stable(d.C, d.n / d.m)) throw Error("internal: configuration is not stable under tau^{n/m}");
    if ((d.n * d.r) % d.m) throw Error("internal: nr/m is not an integer");
    d.group = ARGroup::Translation;
    d.shift = d.n * d.r / d.m;
    d.text = "(ZA_" + std::to_string(d.n) + ")_C/<tau^" + std::to_string(d.shift) + ">";
  } else {
    auto st = vertex_stats(B0);
    int h = st.doubles.at(0);
    BrauerGSet B = hat(B0).hat;
    int e = B.at(B0.ids[h] + ":1");
    d.n = B.size() / 2;
    if (d.n % 2 == 0) throw Error("internal: hat has an even number of edges");
    d.C = configuration(brauer_relation(B, e));
    if (!phi_symmetric(d.C)) throw Error("internal: configuration is not symmetric");
    d.group = ARGroup::TranslationReflection;
    d.shift = d.n * d.r;
    d.text = "(ZA_" + std::to_string(d.n) + ")_C/<tau^" + std::to_string(d.shift) + " phi>";
  }
  return d;
}

AlgebraPresentation riedtmann_presentation(const ARQuiverDescriptor& d) {
  const Configuration& C = d.C;
  long long n = d.n;
  if (d.shift <= 0) throw Error("group generator must move vertices");
  bool refl = d.group == ARGroup::TranslationReflection;
  long long T = refl ? 2 * d.shift : d.shift;
  // vertex class of s and whether alpha/beta swap on the way to its representative
  auto cls = [&](long long s) -> std::pair<long long, int> {
    long long s0 = mod(s, T);
    if (!refl) return {s0, 0};
    long long t = mod(d.generator(s0), T);
    if (t == s0) throw Error("group does not act freely");
    return s0 < t ? std::pair<long long, int>{s0, 0} : std::pair<long long, int>{t, 1};
  };
  std::vector<long long> reps;
  for (long long s = 0; s < T; ++s)
    if (cls(s).first == s) reps.push_back(s);
  std::map<long long, int> vidx;
  for (size_t i = 0; i < reps.size(); ++i) vidx[reps[i]] = static_cast<int>(i);
  auto arrow_of = [&](int kind, long long s) {
    auto [r, par] = cls(s);
    return 2 * vidx.at(r) + (kind ^ par);
  };
  AlgebraPresentation full;
  full.flavor = Flavor::Riedtmann;
  for (long long r : reps) full.vertices.push_back("v" + std::to_string(r));
  for (long long r : reps) {
    full.arrows.push_back({"alpha_" + std::to_string(r), vidx.at(r), vidx.at(cls(C.alpha(r)).first), -1});
    full.arrows.push_back({"beta_" + std::to_string(r), vidx.at(r), vidx.at(cls(C.beta(r)).first), -1});
  }
  auto walk = [&](int kind, long long s) {
    Path p;
    long long x = s;
    while (x != s + n) {
      p.push_back(arrow_of(kind, x));
      x = kind == 0 ? C.alpha(x) : C.beta(x);
      if (x > s + n || static_cast<long long>(p.size()) > n + 1) throw Error("internal: alpha/beta do not reach r+n");
    }
    return p;
  };
  std::vector<Relation> comm, zeros;
  for (long long r : reps) {
    zeros.push_back({{arrow_of(0, r), arrow_of(1, C.alpha(r))}, {}, "zero"});
    zeros.push_back({{arrow_of(1, r), arrow_of(0, C.beta(r))}, {}, "zero"});
    comm.push_back({walk(0, r), walk(1, r), "commutativity"});
  }
  // arrows equal to a path of the other kind are not arrows of the quiver
  int na = static_cast<int>(full.arrows.size());
  std::vector<std::optional<Path>> subst(na);
  std::vector<char> defining(comm.size(), 0);
  for (size_t i = 0; i < comm.size(); ++i) {
    auto& c = comm[i];
    auto try_elim = [&](const Path& side, const Path& other) {
      if (side.size() != 1 || subst[side[0]] || std::count(other.begin(), other.end(), side[0])) return false;
      subst[side[0]] = other;
      return true;
    };
    if (try_elim(c.lhs, c.rhs) || try_elim(c.rhs, c.lhs)) defining[i] = 1;
  }
  auto expand = [&](const Path& p) {
    Path cur = p;
    for (int round = 0; round < na + 1; ++round) {
      Path next;
      bool changed = false;
      for (int a : cur) {
        if (subst[a]) {
          next.insert(next.end(), subst[a]->begin(), subst[a]->end());
          changed = true;
        } else {
          next.push_back(a);
        }
      }
      cur = std::move(next);
      if (!changed) return cur;
    }
    throw Error("internal: arrow elimination does not terminate");
  };
  std::vector<int> newidx(na, -1);
  AlgebraPresentation P;
  P.flavor = Flavor::Riedtmann;
  P.vertices = full.vertices;
  for (int a = 0; a < na; ++a)
    if (!subst[a]) {
      newidx[a] = static_cast<int>(P.arrows.size());
      P.arrows.push_back(full.arrows[a]);
    }
  auto remap = [&](const Path& p) {
    Path q;
    for (int a : expand(p)) q.push_back(newidx[a]);
    return q;
  };
  std::set<std::pair<Path, Path>> seen;
  auto add = [&](const Relation& r) {
    Relation m{remap(r.lhs), r.zero() ? Path{} : remap(r.rhs), r.kind};
    if (!m.zero() && m.lhs == m.rhs) return;
    auto key = m.zero() ? std::pair{m.lhs, Path{}} : std::pair{std::min(m.lhs, m.rhs), std::max(m.lhs, m.rhs)};
    if (!seen.insert(key).second) return;
    P.relations.push_back(m);
  };
  for (auto& z : zeros) add(z);
  for (size_t i = 0; i < comm.size(); ++i)
    if (!defining[i]) add(comm[i]);
  return P;
}

}  // namespace bgk
