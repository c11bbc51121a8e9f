#pragma once

#include <string>
#include <vector>

#include "bgk/constructions.hpp"
#include "bgk/core.hpp"

namespace bgk {

struct ShapeStats {
  int n = 0, k = 0, l = 0;
  std::vector<long long> degrees;  // integral f-degrees, vertex order of vertex_stats
  int rank = 0;                    // k - n + 1
  bool unicyclic = false;
  int m = 0, p = 0, q = 0;         // filled when unicyclic with trivial f-degree
  int base = -1;                   // cycle base half-edge (outer side)
  std::vector<int> exceptional;    // vertices with f-degree > 1
};

ShapeStats shape_stats(const BrauerGSet& B);

enum class RepTag { RepFinite, Domestic, NonDomesticTame };

struct RepType {
  RepTag tag = RepTag::NonDomesticTame;
  int domestic_case = 0;  // 1..3
  char subcase = 0;       // 'a' or 'b' for RepFinite
  long long r = 0;
  long long sigma_order = 1;
  int m = 0, p = 0, q = 0, l = 0;
  bool has_m = false;
};

std::string rep_tag_name(RepTag t);
RepType classify_rep_type(const BrauerGSet& E);

// generator i (0-based) appears as i+1, its inverse as -(i+1)
using GroupWord = std::vector<int>;

struct GroupPresentation {
  std::vector<std::string> generators;
  std::vector<GroupWord> relators;
  std::vector<Walk> walks;  // closed walk at base per generator
  int base = 0;
};

GroupPresentation pi1_presentation(const BrauerGSet& B, int base = -1);
Walk evaluate_word(const BrauerGSet& B, const GroupPresentation& P, const GroupWord& w);
std::string format_word(const GroupPresentation& P, const GroupWord& w);

struct AbelianInvariants {
  int free_rank = 0;
  std::vector<long long> torsion;  // invariant factors >= 2, each dividing the next
  bool operator==(const AbelianInvariants&) const = default;
};

std::vector<long long> invariant_factors(std::vector<std::vector<long long>> m);  // nonzero diagonal of the SNF
AbelianInvariants abelianize(const GroupPresentation& P, const std::vector<GroupWord>& extra = {});
AbelianInvariants reduced_pi1_abelianization(const BrauerGSet& E);

struct MonodromyAction {
  int base = 0;
  std::vector<int> fiber;
  std::vector<std::string> generators;
  std::vector<Walk> walks;
  std::vector<std::vector<int>> perms;  // perms[i][a] = position of the lift end, positions index fiber
  bool transitive = false;
};

MonodromyAction monodromy(const CoveringMap& cov, int base);
MonodromyAction monodromy(const CoveringMap& cov, int base, const std::vector<std::string>& names,
                          const std::vector<Walk>& walks);

enum class Pi1Class { Z, AmalgamA2B2, ZxZ, Other };
std::string pi1_class_name(Pi1Class c);
Pi1Class pi1_class(const BrauerGSet& E);

}  // namespace bgk
