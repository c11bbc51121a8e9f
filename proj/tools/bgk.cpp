// bgk: command-line front end for the Brauer G-set library
#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "bgk/algebra.hpp"
#include "bgk/artheory.hpp"
#include "bgk/bands.hpp"
#include "bgk/classify.hpp"
#include "bgk/constructions.hpp"
#include "bgk/core.hpp"
#include "bgk/io.hpp"

using namespace bgk;

namespace {

struct Opts {
  std::string input = "-", input2;
  bool dot = false, json_out = true;
  int threads = 1;
  int max_period = -1, max_len = -1, radius = 2;
  int which = 0, r = 0, l = 0;
  std::string half_edge, flavor = "full", pi1_what = "presentation", string_text;
  std::vector<std::string> perms;
};

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

json names(const BrauerGSet& E, const std::vector<int>& xs) {
  json a = json::array();
  for (int x : xs) a.push_back(E.ids[x]);
  return a;
}

json stats_json(const BrauerGSet& E) {
  auto st = vertex_stats(E);
  json j;
  j["n"] = st.n();
  j["k"] = st.k();
  j["l"] = st.l();
  json vs = json::array();
  bool integral = true;
  for (auto& v : st.vertices) {
    vs.push_back({{"half_edges", names(E, v.half_edges)},
                  {"size", v.half_edges.size()},
                  {"degree", v.degree},
                  {"f_degree", v.f_degree.str()}});
    integral = integral && v.f_degree.integral();
  }
  j["vertices"] = vs;
  json es = json::array();
  for (auto [a, b] : st.edges) es.push_back({E.ids[a], E.ids[b]});
  j["edges"] = es;
  j["doubles"] = names(E, st.doubles);
  j["sigma_order"] = nakayama(E).order;
  j["connected"] = is_connected(E);
  if (integral && E.u_is_all() && is_connected(E)) {
    auto S = shape_stats(E);
    json s;
    s["cycle_rank"] = S.rank;
    s["degrees"] = S.degrees;
    s["exceptional"] = S.exceptional;
    if (S.unicyclic) {
      s["m"] = S.m;
      s["p"] = S.p;
      s["q"] = S.q;
      s["base"] = S.base >= 0 ? json(E.ids[S.base]) : json(nullptr);
    }
    j["shape"] = s;
  }
  return j;
}

std::vector<int> parse_perm(const BrauerGSet& E, const std::string& text) {
  // "a:b,b:a"; unlisted half-edges are fixed
  std::vector<int> p(E.size());
  for (int i = 0; i < E.size(); ++i) p[i] = i;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto c = item.find(':');
    if (c == std::string::npos) throw Error("permutation entry '" + item + "' is not of the form x:y");
    p[E.at(item.substr(0, c))] = E.at(item.substr(c + 1));
  }
  return p;
}

json classify_json(const RepType& t) {
  json j;
  j["type"] = rep_tag_name(t.tag);
  if (t.tag == RepTag::Domestic) j["case"] = t.domestic_case;
  if (t.tag == RepTag::RepFinite) j["subcase"] = std::string(1, t.subcase);
  j["r"] = t.r;
  if (t.tag == RepTag::RepFinite && t.has_m) j["m"] = t.m;
  if (t.tag == RepTag::Domestic && t.domestic_case == 3) {
    j["m"] = t.m;
    j["p"] = t.p;
    j["q"] = t.q;
    j["l"] = t.l;
  }
  return j;
}

std::string dot_escape(const std::string& s) {
  std::string o;
  for (char c : s) {
    if (c == '"' || c == '\\') o += '\\';
    o += c;
  }
  return o;
}

void emit_presentation(const AlgebraPresentation& P, bool dot) {
  if (dot) {
    std::cout << "digraph " << flavor_name(P.flavor) << " {\n  node [shape=box];\n";
    for (size_t v = 0; v < P.vertices.size(); ++v)
      std::cout << "  v" << v << " [label=\"" << dot_escape(P.vertices[v]) << "\"];\n";
    for (auto& a : P.arrows)
      std::cout << "  v" << a.source << " -> v" << a.target << " [label=\"" << dot_escape(a.name) << "\"];\n";
    std::cout << "  /* relations\n";
    for (auto& r : P.relations) std::cout << "     " << format_relation(P, r) << "\n";
    std::cout << "  */\n}\n";
    return;
  }
  json j;
  j["flavor"] = flavor_name(P.flavor);
  j["vertices"] = P.vertices;
  json as = json::array();
  for (auto& a : P.arrows)
    as.push_back({{"name", a.name}, {"source", P.vertices[a.source]}, {"target", P.vertices[a.target]}});
  j["arrows"] = as;
  json rs = json::array();
  for (auto& r : P.relations) rs.push_back({{"kind", r.kind}, {"relation", format_relation(P, r)}});
  j["relations"] = rs;
  j["warnings"] = P.warnings;
  emit(j);
}

void emit_gset(const BrauerGSet& E, bool dot) {
  if (!dot) {
    emit(to_json(E));
    return;
  }
  auto st = vertex_stats(E);
  std::cout << "graph " << "gset" << " {\n";
  for (int v = 0; v < st.n(); ++v) {
    std::string label;
    for (int h : st.vertices[v].half_edges) label += (label.empty() ? "" : " ") + E.ids[h];
    std::cout << "  v" << v << " [shape=circle,label=\"" << dot_escape(label) << "\\nd=" << st.vertices[v].degree
              << "\"];\n";
  }
  for (auto [a, b] : st.edges)
    std::cout << "  v" << st.vertex_of[a] << " -- v" << st.vertex_of[b] << " [label=\"" << dot_escape(E.ids[a])
              << "|" << dot_escape(E.ids[b]) << "\"];\n";
  for (int d : st.doubles)
    std::cout << "  d" << d << " [shape=point];\n  v" << st.vertex_of[d] << " -- d" << d << " [label=\""
              << dot_escape(E.ids[d]) << "\"];\n";
  std::cout << "}\n";
}

int run(const std::string& cmd, const Opts& o) {
  if (cmd == "validate") {
    RawGSet raw = raw_from_json(parse_text(read_source(o.input)));
    auto rep = validate(raw);
    json j;
    j["valid"] = rep.valid();
    j["fms_bg"] = rep.is_fms_bg;
    j["modified_bg"] = rep.is_modified_bg;
    j["malformed"] = rep.malformed;
    json vs = json::array();
    for (auto& v : rep.violations) vs.push_back({{"axiom", v.axiom}, {"witness", v.witness}, {"detail", v.detail}});
    j["violations"] = vs;
    emit(j);
    return rep.valid() ? 0 : 1;
  }
  BrauerGSet E = load_gset(o.input);
  if (cmd == "stats") {
    emit(stats_json(E));
  } else if (cmd == "quotient") {
    std::vector<std::vector<int>> gens;
    for (auto& p : o.perms) gens.push_back(parse_perm(E, p));
    Quotient Q = gens.empty() ? quotient_by_sigma(E) : quotient(E, gens);
    emit_gset(Q.quotient, o.dot);
  } else if (cmd == "hat") {
    emit_gset(hat(E).hat, o.dot);
  } else if (cmd == "reduce") {
    emit_gset(reduced_form(E), o.dot);
  } else if (cmd == "construct") {
    if (o.which < 1 || o.which > 3 || o.r < 1) throw CLI::ValidationError("construct needs --case 1|2|3 and --r >= 1");
    std::optional<int> l;
    if (o.which == 3) l = o.l > 0 ? o.l : 1;
    emit_gset(construct_domestic(E, o.which, o.r, l), o.dot);
  } else if (cmd == "iso") {
    BrauerGSet F = load_gset(o.input2);
    auto iso = are_isomorphic(E, F);
    json j;
    j["isomorphic"] = iso.has_value();
    if (iso) {
      json w = json::object();
      for (int e = 0; e < E.size(); ++e) w[E.ids[e]] = F.ids[(*iso)[e]];
      j["witness"] = w;
    }
    emit(j);
  } else if (cmd == "bands") {
    json j;
    auto N = band_count(E);
    int bound = o.max_period > 0 ? o.max_period : band_bound(E);
    j["finite"] = N.finite;
    if (N.finite) j["classes"] = N.n;
    j["max_period"] = bound;
    auto bands = enumerate_bands(E, bound);
    j["listed"] = bands.size();
    json bs = json::array();
    for (auto& b : bands) bs.push_back(format_band(E, b));
    j["bands"] = bs;
    emit(j);
  } else if (cmd == "classify") {
    emit(classify_json(classify_rep_type(E)));
  } else if (cmd == "pi1") {
    if (o.pi1_what == "class") {
      emit({{"class", pi1_class_name(pi1_class(E))}});
    } else if (o.pi1_what == "abelian") {
      auto a = reduced_pi1_abelianization(E);
      emit({{"free_rank", a.free_rank}, {"torsion", a.torsion}});
    } else if (o.pi1_what == "presentation") {
      auto P = pi1_presentation(E);
      json j;
      j["base"] = E.ids[P.base];
      j["generators"] = P.generators;
      json rel = json::array();
      for (auto& w : P.relators) rel.push_back(format_word(P, w));
      j["relators"] = rel;
      json ws = json::object();
      for (size_t i = 0; i < P.generators.size(); ++i) ws[P.generators[i]] = format_walk(E, P.walks[i]);
      j["walks"] = ws;
      emit(j);
    } else {
      throw CLI::ValidationError("pi1 expects presentation, abelian or class");
    }
  } else if (cmd == "monodromy") {
    Quotient Q = quotient_by_sigma(E);
    const BrauerGSet& B = Q.quotient;
    int base = o.half_edge.empty() ? 0 : B.at(o.half_edge);
    auto M = monodromy(Q.projection, base);
    json j;
    j["base"] = B.ids[M.base];
    j["fiber"] = names(E, M.fiber);
    json ps = json::object();
    for (size_t i = 0; i < M.generators.size(); ++i) {
      json p = json::array();
      for (int a : M.perms[i]) p.push_back(E.ids[M.fiber[a]]);
      ps[M.generators[i]] = p;
    }
    j["action"] = ps;
    j["transitive"] = M.transitive;
    emit(j);
  } else if (cmd == "algebra") {
    emit_presentation(quiver_presentation(E, parse_flavor(o.flavor)), o.dot);
  } else if (cmd == "strings") {
    int len = o.max_len >= 0 ? o.max_len : 64;
    auto L = enumerate_strings(E, len);
    json j;
    j["saturated"] = L.saturated;
    j["count"] = L.strings.size();
    json ss = json::array();
    for (auto& s : L.strings) ss.push_back(format_string(E, s));
    j["strings"] = ss;
    emit(j);
  } else if (cmd == "dtr") {
    json j = json::array();
    auto one = [&](const StringWord& s) {
      auto d = dtr_string(E, s);
      return json{{"string", format_string(E, s)}, {"dtr", format_string(E, d.string)}, {"projective", d.projective}};
    };
    if (!o.string_text.empty()) {
      emit(one(parse_string(E, o.string_text)));
    } else {
      for (auto& m : mouth_modules(E)) {
        json x = one(m.string);
        x["half_edge"] = E.ids[m.e];
        j.push_back(x);
      }
      emit(j);
    }
  } else if (cmd == "tubes") {
    auto t = exceptional_tubes(E);
    std::map<long long, long long> ranks;
    for (long long x : t) ranks[x]++;
    json rk = json::object();
    for (auto [len, cnt] : ranks) rk[std::to_string(len)] = cnt;
    emit({{"orbit_lengths", t}, {"orbits_by_length", rk}});
  } else if (cmd == "ar-summary") {
    auto S = stable_ar_summary(E);
    json tubes = json::object();
    for (auto [rank, cnt] : S.tube_ranks) tubes[std::to_string(rank)] = cnt;
    json za = json::array();
    for (auto& z : S.za_tilde) za.push_back({{"p", z.p}, {"q", z.q}, {"count", z.count}});
    emit({{"case", S.domestic_case},
          {"exceptional_tubes", tubes},
          {"za_tilde", za},
          {"za_tilde_total", S.za_tilde_total()},
          {"homogeneous_tubes", "one P^1-family per ZA~ component"}});
  } else if (cmd == "ar-descriptor") {
    auto d = rf_ar_descriptor(E);
    json j;
    j["descriptor"] = d.text;
    j["subcase"] = std::string(1, d.subcase);
    j["n"] = d.n;
    j["group"] = d.group == ARGroup::Translation ? "translation" : "translation-reflection";
    j["shift"] = d.shift;
    j["configuration"] = d.C.j;
    j["stable_vertices"] = d.stable_vertices();
    j["projective_vertices"] = d.projective_vertices();
    j["tau_orbit_sizes"] = d.tau_orbit_sizes();
    emit(j);
  } else if (cmd == "ball") {
    int e = o.half_edge.empty() ? 0 : E.at(o.half_edge);
    auto b = special_ball(E, e, o.radius);
    if (o.dot) {
      emit_gset(b.fragment, true);
    } else {
      json j = to_json(b.fragment);
      json ev = json::object();
      for (int i = 0; i < b.fragment.size(); ++i) ev[b.fragment.ids[i]] = E.ids[b.eval[i]];
      j["eval"] = ev;
      emit(j);
    }
  } else {
    throw CLI::ValidationError("unknown subcommand '" + cmd + "'");
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bgk: Brauer G-sets, their algebras and AR components"};
  app.require_subcommand(1);
  app.fallthrough();
  Opts o;
  app.add_flag("--json", o.json_out, "JSON output (default)");
  app.add_flag("--dot", o.dot, "DOT output where a graph is produced");
  app.add_option("--threads", o.threads, "worker threads")->check(CLI::PositiveNumber);

  auto input = [&](CLI::App* s) { s->add_option("input", o.input, "interchange document, - for stdin"); };
  auto sub = [&](const char* name, const char* help) {
    auto* s = app.add_subcommand(name, help);
    input(s);
    return s;
  };
  sub("validate", "check the axioms");
  sub("stats", "vertices, edges, doubles and shape");
  sub("quotient", "quotient by sigma or by --perm generators")
      ->add_option("--perm", o.perms, "generator as x:y,y:x (repeatable)");
  sub("hat", "double cover removing double half-edges");
  sub("reduce", "reduced form R_E");
  {
    auto* s = sub("construct", "domestic family over a base Brauer graph");
    s->add_option("--case", o.which)->required();
    s->add_option("--r", o.r)->required();
    s->add_option("--l", o.l);
  }
  {
    auto* s = app.add_subcommand("iso", "isomorphism test with witness");
    s->add_option("first", o.input)->required();
    s->add_option("second", o.input2)->required();
  }
  sub("bands", "band classes")->add_option("--max-period", o.max_period);
  sub("classify", "representation type");
  {
    auto* s = app.add_subcommand("pi1", "fundamental group");
    s->add_option("what", o.pi1_what, "presentation | abelian | class")
        ->check(CLI::IsMember({"presentation", "abelian", "class"}));
    input(s);
  }
  sub("monodromy", "fiber action of the sigma covering")->add_option("--half-edge", o.half_edge);
  sub("algebra", "quiver with relations")
      ->add_option("--flavor", o.flavor)
      ->check(CLI::IsMember({"full", "reduced", "string", "riedtmann"}));
  sub("strings", "strings of the string algebra")->add_option("--max-len", o.max_len);
  sub("dtr", "AR translate of string modules")->add_option("--string", o.string_text);
  sub("tubes", "exceptional tube ranks");
  sub("ar-summary", "stable AR census of a domestic algebra");
  sub("ar-descriptor", "ZA_n configuration of a representation-finite algebra");
  {
    auto* s = sub("ball", "special-walk ball");
    s->add_option("--half-edge", o.half_edge);
    s->add_option("--radius", o.radius);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }
  std::string cmd = app.get_subcommands().front()->get_name();
  try {
    return run(cmd, o);
  } catch (const SchemaError& e) {
    std::cerr << "bgk: schema error at " << e.what() << "\n";
    return 2;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "bgk: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "bgk: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "bgk: " << e.what() << "\n";
    return 1;
  }
}
