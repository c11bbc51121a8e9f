#pragma once

#include <string>
#include <vector>

#include "bgk/core.hpp"

namespace bgk {

// one (rise, tau, fall, tau) period piece: g^k at e, tau, g^-l at h = tau(g^k e), tau
struct BandStep {
  int e = 0;
  int k = 0;
  int l = 0;
  auto operator<=>(const BandStep&) const = default;
};

struct BandWord {
  std::vector<BandStep> steps;
  auto operator<=>(const BandWord&) const = default;
};

bool band_valid(const BrauerGSet& E, const BandWord& w);
BandWord band_inverse(const BrauerGSet& E, const BandWord& w);
BandWord canonical_band(const BrauerGSet& E, const BandWord& w);  // throws on invalid words
bool band_primitive(const BandWord& w);
Walk band_period_walk(const BrauerGSet& E, const BandWord& w);
std::string format_band(const BrauerGSet& E, const BandWord& w);
BandWord parse_band(const BrauerGSet& E, const std::string& text);  // "e k l; e k l; ..."

int band_bound(const BrauerGSet& E);  // sum of d(e)-1

// max_classes = 0 means no limit
std::vector<BandWord> enumerate_bands(const BrauerGSet& E, int max_pairs, std::size_t max_classes = 0);

struct BandCount {
  bool finite = true;
  long long n = 0;
};

BandCount band_count(const BrauerGSet& E);

}  // namespace bgk
