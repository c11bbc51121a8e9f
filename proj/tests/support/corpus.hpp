#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bgk/core.hpp"

namespace bgk::test {

// bare index form; tau -1 means outside U
struct Proto {
  std::vector<int> g, tau, deg;
  int size() const { return static_cast<int>(g.size()); }
};

BrauerGSet to_gset(const Proto& p, const std::string& name = {});
Proto to_proto(const BrauerGSet& E);
bool proto_connected(const Proto& p);
bool proto_mf2(const Proto& p);
std::string proto_code(const Proto& p);  // isomorphism invariant, complete for connected protos
std::vector<std::vector<int>> g_orbits(const Proto& p);
void trivial_degrees(Proto& p);          // d = orbit size everywhere

// every connected f_ms-BG with at most max_half_edges half-edges and degrees <= max_degree, up to isomorphism
std::vector<BrauerGSet> exhaustive_fms(int max_half_edges, int max_degree);

// connected f_ms-BGs with more than min_half_edges half-edges, built as cyclic voltage covers of random bases
std::vector<BrauerGSet> random_fms(int count, std::uint64_t seed, int min_half_edges = 8, int max_half_edges = 32);

// grown by pendant edges and inserted doubles; all up to isomorphism, trivial f-degree
std::vector<Proto> brauer_trees(int min_edges, int max_edges);
std::vector<Proto> insert_doubles(const std::vector<Proto>& base, int count);
std::vector<Proto> unicyclic(int m, int extra_edges);
std::vector<Proto> grow(const std::vector<Proto>& base, int steps);  // one pendant edge per step, keeps every stage

// bases of the three domestic families: trees with <= max_vertices vertices, unicyclic with bounded sides
std::vector<Proto> case1_bases(int max_vertices);
std::vector<Proto> case2_bases(int max_vertices);
std::vector<Proto> case3_bases(int max_m, int max_side);  // sides measured by gt-orbit lengths
// Brauer trees (<= max_edges edges) with one vertex of f-degree m (all vertices tried)
std::vector<Proto> exceptional_trees(int max_edges, int m);

// cyclic cover E -> B of order r on which sigma acts as the deck generator; none when impossible
std::optional<BrauerGSet> sigma_cover(const Proto& B, int r);

}  // namespace bgk::test
