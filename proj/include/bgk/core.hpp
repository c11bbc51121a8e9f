#pragma once

#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace bgk {

// domain errors (exit code 1 in the cli)
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Rational {
  long long num = 0;
  long long den = 1;
  static Rational make(long long n, long long d) {
    long long g = std::gcd(n, d);
    if (g == 0) g = 1;
    if (d < 0) g = -g;
    return {n / g, d / g};
  }
  bool integral() const { return den == 1; }
  bool operator==(const Rational&) const = default;
  std::string str() const {
    return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
  }
};

// candidate as read from a document; nothing is checked yet
struct RawGSet {
  std::vector<std::string> half_edges;
  std::map<std::string, std::string> g;
  std::vector<std::string> U;
  std::map<std::string, std::string> tau;
  std::map<std::string, long long> degree;
  std::string name, comment;
};

struct Violation {
  std::string axiom;
  std::string witness;
  std::string detail;
};

struct ValidationReport {
  std::vector<std::string> malformed;
  std::vector<Violation> violations;
  bool is_fms_bg = false;
  bool is_modified_bg = false;
  bool valid() const { return malformed.empty() && violations.empty(); }
};

// Half-edges are indexed 0..N-1 in lexicographic order of their ids.
// tau[e] == -1 means e is not in U.
struct BrauerGSet {
  std::vector<std::string> ids;
  std::vector<int> g, ginv, tau;
  std::vector<int> deg;
  std::string name, comment;

  int size() const { return static_cast<int>(ids.size()); }
  bool in_u(int e) const { return tau[e] >= 0; }
  bool u_is_all() const;
  bool has_doubles() const;
  bool is_fms_bg() const { return u_is_all() && !has_doubles(); }
  int index_of(std::string_view id) const;  // -1 if absent
  int at(std::string_view id) const;        // throws
  int gpow(int e, long long k) const;
  int sigma(int e) const { return gpow(e, deg[e]); }
  int sigma_inv(int e) const { return gpow(e, -static_cast<long long>(deg[e])); }
  int orbit_size(int e) const;
};

ValidationReport validate(const RawGSet& raw);
BrauerGSet build(const RawGSet& raw);  // throws Error listing every problem
RawGSet to_raw(const BrauerGSet& E);

// from index arrays; ids get sorted and everything relabelled accordingly
BrauerGSet from_arrays(const std::vector<std::string>& ids, const std::vector<int>& g,
                       const std::vector<int>& tau, const std::vector<int>& deg,
                       std::string name = {});

struct Vertex {
  std::vector<int> half_edges;  // g-orbit in g order starting at its least member
  int degree = 0;
  Rational f_degree;
};

struct VertexStats {
  std::vector<Vertex> vertices;
  std::vector<std::pair<int, int>> edges;  // e < tau(e)
  std::vector<int> doubles;
  std::vector<int> vertex_of;  // half-edge -> vertex index
  int n() const { return static_cast<int>(vertices.size()); }
  int k() const { return static_cast<int>(edges.size()); }
  int l() const { return static_cast<int>(doubles.size()); }
};

VertexStats vertex_stats(const BrauerGSet& E);

struct Permutation {
  std::vector<int> map;
  long long order = 1;
};

long long permutation_order(const std::vector<int>& p);
Permutation nakayama(const BrauerGSet& E);

enum class Letter : std::uint8_t { G, GInv, Tau };

// letters in application order: letters[0] is applied to the source first
struct Walk {
  int source = 0;
  std::vector<Letter> letters;
  bool operator==(const Walk&) const = default;
};

int walk_target(const BrauerGSet& E, const Walk& w);  // throws on tau outside U
bool walk_valid(const BrauerGSet& E, const Walk& w);
Walk parse_walk(const BrauerGSet& E, std::string_view text);
std::string format_walk(const BrauerGSet& E, const Walk& w);
Walk inverse_walk(const BrauerGSet& E, const Walk& w);
Walk concat(const Walk& first, const Walk& then);

struct SpecialWalk {
  int source = 0;
  std::vector<int> exps;  // i_0 .. i_k, separated by tau
  bool operator==(const SpecialWalk&) const = default;
  auto operator<=>(const SpecialWalk&) const = default;
  int tau_count() const { return static_cast<int>(exps.size()) - 1; }
};

bool special_walk_valid(const BrauerGSet& E, const SpecialWalk& v);
int special_target(const BrauerGSet& E, const SpecialWalk& v);
Walk to_walk(const BrauerGSet& E, const SpecialWalk& v);

struct NormalForm {
  SpecialWalk special;
  long long power = 0;
  bool operator==(const NormalForm&) const = default;
  auto operator<=>(const NormalForm&) const = default;
};

NormalForm walk_normal_form(const BrauerGSet& E, const Walk& w);
Walk expand(const BrauerGSet& E, const NormalForm& nf);
bool walks_homotopic(const BrauerGSet& E, const Walk& w1, const Walk& w2);

std::vector<std::vector<int>> connected_components(const BrauerGSet& E);
bool is_connected(const BrauerGSet& E);

}  // namespace bgk
