#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bgk/bands.hpp"
#include "bgk/core.hpp"

namespace bgk {

enum class Flavor { Full, Reduced, String, Riedtmann };
std::string flavor_name(Flavor f);
Flavor parse_flavor(const std::string& s);

struct Arrow {
  std::string name;
  int source = 0, target = 0;
  int half_edge = -1;  // L(e) when built from a Brauer G-set
};

// arrow indices in application order; path[0] is applied first
using Path = std::vector<int>;

struct Relation {
  Path lhs, rhs;  // rhs empty: zero relation
  std::string kind;
  bool zero() const { return rhs.empty(); }
};

struct AlgebraPresentation {
  Flavor flavor = Flavor::Full;
  std::vector<std::string> vertices;
  std::vector<Arrow> arrows;
  std::vector<Relation> relations;
  std::vector<std::string> warnings;
};

// quiver vertex P(e) of each half-edge; vertices are edges ordered by their least half-edge
std::vector<int> quiver_vertex_of(const BrauerGSet& E);

AlgebraPresentation quiver_presentation(const BrauerGSet& E, Flavor f);
std::string format_path(const AlgebraPresentation& P, const Path& p);  // composition order, last arrow left
std::string format_relation(const AlgebraPresentation& P, const Relation& r);
void check_presentation(const AlgebraPresentation& P);                  // throws on non-composable relations

// kQ/I for I generated by monomials and binomials p - q, computed on paths up to max_len
struct PathQuotient {
  int max_len = 0;
  long long dimension = 0;
  bool truncation_ok = false;  // every path of length max_len lies in I
  std::vector<std::pair<int, Path>> paths;  // (start vertex, arrows)
  std::vector<int> cls;                     // class per path, -1 for zero
  int class_of(int vertex, const Path& p) const;  // -1 zero, -2 longer than max_len
};

PathQuotient path_quotient(const AlgebraPresentation& P, int max_len = -1);
bool ideal_contains(const AlgebraPresentation& P, const PathQuotient& Q, const Relation& r);

// arrow map P -> Q; exact compares relation sets, otherwise compares the generated ideals
struct PresentationIso {
  std::vector<int> vertex_map, arrow_map;
};
std::optional<PresentationIso> presentation_isomorphism(const AlgebraPresentation& P,
                                                        const AlgebraPresentation& Q, bool exact);

long long algebra_dimension(const BrauerGSet& E);

// strings of A_E / soc(A_E)
struct StrLetter {
  int e = 0;  // arrow L(e)
  bool inverse = false;
  auto operator<=>(const StrLetter&) const = default;
};

struct StringWord {
  std::vector<StrLetter> letters;
  int vertex = 0;  // start vertex
  auto operator<=>(const StringWord&) const = default;
};

int string_end(const BrauerGSet& E, const StringWord& s);
bool string_valid(const BrauerGSet& E, const StringWord& s);
StringWord string_inverse(const BrauerGSet& E, const StringWord& s);
StringWord canonical_string(const BrauerGSet& E, const StringWord& s);
std::string format_string(const BrauerGSet& E, const StringWord& s);
StringWord parse_string(const BrauerGSet& E, const std::string& text);

struct StringList {
  std::vector<StringWord> strings;
  bool saturated = false;  // nothing longer exists
};

StringList enumerate_strings(const BrauerGSet& E, int max_len);

struct MouthModule {
  int e = 0;
  StringWord string;
};

StringWord mouth_string(const BrauerGSet& E, int e);
std::vector<MouthModule> mouth_modules(const BrauerGSet& E);

StringWord top_string(const BrauerGSet& E, int vertex);     // P/soc P
StringWord radical_string(const BrauerGSet& E, int vertex); // rad P

struct DtrResult {
  StringWord string;
  bool projective = false;  // input was P/soc P, output is rad P
};

DtrResult dtr_string(const BrauerGSet& E, const StringWord& s);

// bands of the string algebra: primitive cyclic words, canonical up to rotation and inversion
std::vector<StringWord> enumerate_string_bands(const BrauerGSet& E, int max_len, std::size_t max_classes = 0);
StringWord canonical_string_band(const BrauerGSet& E, const StringWord& b);
StringWord band_to_string_band(const BrauerGSet& E, const BandWord& w);
bool string_band_valid(const BrauerGSet& E, const StringWord& b);

}  // namespace bgk
