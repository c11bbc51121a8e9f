#pragma once

#include <map>
#include <set>
#include <vector>

#include "bgk/algebra.hpp"
#include "bgk/bands.hpp"
#include "bgk/core.hpp"

namespace bgk::test {

// classes of freely reduced walks from source, found by searching moves (mh1)-(mh3)
// among reduced walks no longer than cap; keys are the walks of length <= len
struct HomotopyOracle {
  int source = 0;
  std::map<std::vector<Letter>, int> cls;  // component id per reduced walk of length <= len
  std::size_t explored = 0;
};
HomotopyOracle homotopy_oracle(const BrauerGSet& E, int source, int len, int cap);
std::vector<Letter> free_reduce(std::vector<Letter> w);
std::vector<std::vector<Letter>> all_walks(const BrauerGSet& E, int source, int len, bool reduced_only);

// dim kQ/I by rank computation mod a prime; certifies that every path longer than max_nonzero lies in I
struct DimensionOracle {
  long long dimension = -1;
  bool truncation_certified = false;
};
DimensionOracle dimension_oracle(const AlgebraPresentation& P, int max_nonzero);

// band classes by unpruned search over step sequences of at most max_pairs steps
std::set<BandWord> band_oracle(const BrauerGSet& E, int max_pairs);

// isomorphism by trying every bijection (small inputs only)
bool isomorphic_oracle(const BrauerGSet& A, const BrauerGSet& B);

std::vector<long long> orbit_lengths(const std::vector<int>& perm);  // sorted
int gt_orbit_count(const BrauerGSet& B, std::vector<long long>* lengths = nullptr);
int cycle_length_oracle(const BrauerGSet& B);  // unicyclic underlying graph, leaf pruning

// strings of A_E/soc by brute force over letter words, validity from the path algebra quotient
std::size_t string_count_oracle(const BrauerGSet& E, int max_len, bool* saturated);

}  // namespace bgk::test
