#include "bgk/bands.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "bgk/classify.hpp"

namespace bgk {

namespace {

// half-edge after the fall of step s
int fall_end(const BrauerGSet& E, const BandStep& s) {
  int x = E.gpow(s.e, s.k);
  int h = E.tau[x];
  return E.gpow(h, -s.l);
}

}  // namespace

bool band_valid(const BrauerGSet& E, const BandWord& w) {
  if (w.steps.empty()) return false;
  size_t P = w.steps.size();
  for (size_t i = 0; i < P; ++i) {
    auto& s = w.steps[i];
    if (s.e < 0 || s.e >= E.size()) return false;
    if (s.k <= 0 || s.k >= E.deg[s.e]) return false;
    int x = E.gpow(s.e, s.k);
    if (!E.in_u(x)) return false;
    int h = E.tau[x];
    if (s.l <= 0 || s.l >= E.deg[h]) return false;
    int y = E.gpow(h, -s.l);
    if (!E.in_u(y) || E.tau[y] != w.steps[(i + 1) % P].e) return false;
  }
  return true;
}

BandWord band_inverse(const BrauerGSet& E, const BandWord& w) {
  BandWord r;
  for (size_t i = w.steps.size(); i-- > 0;) {
    auto& s = w.steps[i];
    r.steps.push_back({fall_end(E, s), s.l, s.k});
  }
  return r;
}

bool band_primitive(const BandWord& w) {
  size_t P = w.steps.size();
  for (size_t p = 1; p < P; ++p) {
    if (P % p) continue;
    bool same = true;
    for (size_t i = 0; i < P && same; ++i) same = w.steps[i] == w.steps[(i + p) % P];
    if (same) return false;
  }
  return true;
}

namespace {

BandWord min_rotation(const BandWord& w) {
  BandWord best = w;
  size_t P = w.steps.size();
  for (size_t r = 1; r < P; ++r) {
    BandWord c;
    for (size_t i = 0; i < P; ++i) c.steps.push_back(w.steps[(i + r) % P]);
    if (c < best) best = c;
  }
  return best;
}

}  // namespace

BandWord canonical_band(const BrauerGSet& E, const BandWord& w) {
  if (!band_valid(E, w)) throw Error("invalid band word");
  return std::min(min_rotation(w), min_rotation(band_inverse(E, w)));
}

Walk band_period_walk(const BrauerGSet& E, const BandWord& w) {
  Walk out;
  out.source = w.steps.front().e;
  for (auto& s : w.steps) {
    out.letters.insert(out.letters.end(), s.k, Letter::G);
    out.letters.push_back(Letter::Tau);
    out.letters.insert(out.letters.end(), s.l, Letter::GInv);
    out.letters.push_back(Letter::Tau);
  }
  (void)E;
  return out;
}

std::string format_band(const BrauerGSet& E, const BandWord& w) {
  return format_walk(E, band_period_walk(E, w));
}

BandWord parse_band(const BrauerGSet& E, const std::string& text) {
  BandWord w;
  std::istringstream is(text);
  std::string part;
  while (std::getline(is, part, ';')) {
    std::istringstream ps(part);
    std::string id;
    BandStep s;
    if (!(ps >> id)) continue;
    if (!(ps >> s.k >> s.l)) throw Error("band step needs 'half-edge k l'");
    s.e = E.at(id);
    w.steps.push_back(s);
  }
  if (!band_valid(E, w)) throw Error("invalid band word");
  return w;
}

int band_bound(const BrauerGSet& E) {
  int s = 0;
  for (int d : E.deg) s += d - 1;
  return s;
}

std::vector<BandWord> enumerate_bands(const BrauerGSet& E, int max_pairs, std::size_t max_classes) {
  // slot graph: node (e,k) with 0<k<d(e); edge labelled l to (e',k')
  int D = 1;
  for (int d : E.deg) D = std::max(D, d);
  int V = E.size() * D;
  struct Edge {
    int to, l;
  };
  std::vector<std::vector<Edge>> out(V);
  std::vector<char> node(V, 0);
  for (int e = 0; e < E.size(); ++e)
    for (int k = 1; k < E.deg[e]; ++k) node[e * D + k] = 1;
  for (int e = 0; e < E.size(); ++e)
    for (int k = 1; k < E.deg[e]; ++k) {
      int x = E.gpow(e, k);
      if (!E.in_u(x)) continue;
      int h = E.tau[x];
      for (int l = 1; l < E.deg[h]; ++l) {
        int y = E.gpow(h, -l);
        if (!E.in_u(y)) continue;
        int e2 = E.tau[y];
        for (int k2 = 1; k2 < E.deg[e2]; ++k2) out[e * D + k].push_back({e2 * D + k2, l});
      }
    }
  std::set<BandWord> found;
  std::vector<BandStep> path;
  bool stop = false;
  for (int s = 0; s < V && !stop; ++s) {
    if (!node[s]) continue;
    // distance to s inside the subgraph of nodes >= s (reverse bfs)
    std::vector<int> dist(V, -1);
    std::vector<std::vector<int>> rev(V);
    for (int u = s; u < V; ++u)
      for (auto& ed : out[u])
        if (ed.to >= s) rev[ed.to].push_back(u);
    std::vector<int> q{s};
    dist[s] = 0;
    for (size_t i = 0; i < q.size(); ++i)
      for (int u : rev[q[i]])
        if (dist[u] < 0) {
          dist[u] = dist[q[i]] + 1;
          q.push_back(u);
        }
    std::function<void(int)> dfs = [&](int u) {
      if (stop) return;
      int used = static_cast<int>(path.size());
      for (auto& ed : out[u]) {
        if (ed.to < s || dist[ed.to] < 0) continue;
        if (used + 1 + dist[ed.to] > max_pairs) continue;
        path.push_back({u / D, u % D, ed.l});
        if (ed.to == s) {
          BandWord w{path};
          if (band_primitive(w)) {
            found.insert(canonical_band(E, w));
            if (max_classes && found.size() >= max_classes) stop = true;
          }
        }
        if (!stop && ed.to != s) dfs(ed.to);
        else if (!stop && ed.to == s && used + 1 + 1 <= max_pairs) dfs(ed.to);
        path.pop_back();
        if (stop) return;
      }
    };
    if (dist[s] >= 0) dfs(s);
  }
  return {found.begin(), found.end()};
}

BandCount band_count(const BrauerGSet& E) {
  if (!is_connected(E)) throw Error("band_count needs a connected Brauer G-set");
  if (!E.is_fms_bg()) throw Error("band_count needs an f_ms-BG");
  RepType t = classify_rep_type(E);
  if (t.tag == RepTag::RepFinite) return {true, 0};
  if (t.tag == RepTag::NonDomesticTame) return {false, 0};
  return {true, static_cast<long long>(enumerate_bands(E, band_bound(E)).size())};
}

}  // namespace bgk
