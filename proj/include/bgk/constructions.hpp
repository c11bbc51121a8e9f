#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bgk/core.hpp"

namespace bgk {

struct CoveringMap {
  BrauerGSet source, target;
  std::vector<int> map;  // source index -> target index
  int sheet_count = 0;   // 0 when fibers have different sizes
};

// empty iff map is g-equivariant, U-preserving both ways, tau-equivariant and degree-preserving
std::vector<std::string> covering_violations(const BrauerGSet& source, const BrauerGSet& target,
                                             const std::vector<int>& map);
CoveringMap make_covering(BrauerGSet source, BrauerGSet target, std::vector<int> map);

using Isomorphism = std::vector<int>;

bool is_automorphism(const BrauerGSet& E, const std::vector<int>& p);

struct Quotient {
  BrauerGSet quotient;
  CoveringMap projection;
  long long group_order = 1;
};

Quotient quotient(const BrauerGSet& E, const std::vector<std::vector<int>>& generators,
                  std::size_t bound = 100000);
Quotient quotient_by_sigma(const BrauerGSet& E);
bool is_admissible(const BrauerGSet& E, const std::vector<std::vector<int>>& generators,
                   std::size_t bound = 100000);

struct Hat {
  BrauerGSet hat;
  CoveringMap projection;
  std::vector<int> swap;
};

Hat hat(const BrauerGSet& E);
BrauerGSet reduced_form(const BrauerGSet& E);

struct Ball {
  BrauerGSet fragment;
  std::vector<SpecialWalk> walks;  // indexed like fragment
  std::vector<int> eval;           // walk -> t(walk) in E
  std::vector<char> interior;      // whole g-orbit has its tau-partners inside
};

Ball special_ball(const BrauerGSet& E, int e, int radius);
CoveringMap unfold_exceptional_tree(const BrauerGSet& B, int h);

BrauerGSet construct_domestic(const BrauerGSet& B, int which, int r, std::optional<int> l = {});

// base half-edge used for case 3 and the gt-orbit it spans ("outer")
int cycle_base(const BrauerGSet& B);

std::optional<Isomorphism> are_isomorphic(const BrauerGSet& E1, const BrauerGSet& E2);
std::string canonical_code(const BrauerGSet& E);

Walk lift_walk(const CoveringMap& cov, const Walk& w, int start);
Walk project_walk(const CoveringMap& cov, const Walk& w);

}  // namespace bgk
