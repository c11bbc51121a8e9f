#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "bgk/algebra.hpp"
#include "bgk/core.hpp"

namespace bgk {

// lengths of the orbits of e -> sigma^-1 (g tau)^2 e, sorted
std::vector<long long> exceptional_tubes(const BrauerGSet& E);
std::vector<int> dtr_permutation(const BrauerGSet& E);

struct ZATilde {
  long long p = 0, q = 0, count = 0;
  bool operator==(const ZATilde&) const = default;
};

struct ARSummary {
  int domestic_case = 0;
  std::map<long long, long long> tube_ranks;  // rank > 1 -> number of tubes
  std::vector<ZATilde> za_tilde;
  bool homogeneous = true;
  long long za_tilde_total() const;
  bool operator==(const ARSummary&) const = default;
};

// census from the parameters alone; n is the vertex count of E/<sigma> in cases 1 and 2
ARSummary domestic_census(int which, long long r, int n, int m = 0, int p = 0, int q = 0, int l = 0);
ARSummary stable_ar_summary(const BrauerGSet& E);

struct BrauerRelation {
  int n = 0;
  std::vector<int> beta;                  // successor on residues 0..n-1
  std::vector<std::vector<int>> classes;  // sorted, ordered by least member
};

BrauerRelation brauer_relation(const BrauerGSet& B, int e);
bool non_crossing(const BrauerRelation& rel);

struct Configuration {
  int n = 0;
  std::vector<int> j;  // (i, j[i mod n]) is the point on the going-up diagonal of i; j in 1..n
  bool contains(long long i, long long jj) const;
  std::pair<long long, long long> on_down(long long p) const;  // point on the going-down diagonal of p
  long long alpha(long long p) const;
  long long beta(long long p) const;
};

Configuration configuration(const BrauerRelation& rel);

enum class ARGroup { Translation, TranslationReflection };

struct ARQuiverDescriptor {
  int n = 0;
  Configuration C;
  ARGroup group = ARGroup::Translation;
  long long shift = 0;  // k of tau^k, or nr for tau^{nr} phi
  char subcase = 'a';
  long long r = 0;
  int m = 1;
  std::string text;
  long long generator(long long s) const;  // action of the group generator on Z (vertices of the residue quiver)
  long long stable_vertices() const;
  long long projective_vertices() const;
  std::vector<long long> tau_orbit_sizes() const;  // sorted
};

ARQuiverDescriptor rf_ar_descriptor(const BrauerGSet& E);
bool translation_stable(const Configuration& C, int step);
bool phi_symmetric(const Configuration& C);
AlgebraPresentation riedtmann_presentation(const ARQuiverDescriptor& d);

}  // namespace bgk
