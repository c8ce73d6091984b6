#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "lrb/algebra.hpp"
#include "lrb/constructions.hpp"
#include "lrb/graph.hpp"
#include "lrb/homological.hpp"
#include "lrb/lrb.hpp"
#include "lrb/simplicial.hpp"

namespace lrb {

// Rationals serialize as "p/q" strings ("p" when integral).
Rational parse_rational(const std::string& text);
std::string rational_to_string(const Rational& value);

// Monoid JSON: {"size": n, "identity": i, "names": [...], "table": [[...]]}.
Lrb monoid_from_json_text(const std::string& text);
Lrb read_monoid_file(const std::string& path);
// Canonical element order (rank below the identity, then name), stable bytes.
std::string monoid_to_json_text(const Lrb& b);
void write_monoid_file(const std::string& path, const Lrb& b);

// Graph JSON: {"vertices": [...], "edges": [[u, v], ...]} (indices or names).
Graph graph_from_json_text(const std::string& text);
Graph read_graph_file(const std::string& path);

// Lattice JSON: {"size": n, "leq": [[x, y], ...], "meet": [[...]], "top": t,
// "names": [...]}; leq pairs are closed reflexively and transitively.
FiniteLattice lattice_from_json_text(const std::string& text);
FiniteLattice read_lattice_file(const std::string& path);

// Generator JSON for expansions: {"a": element, ...} (lattice index or name).
std::vector<std::pair<std::string, int>> generators_from_json_text(
    const std::string& text, const FiniteLattice& lattice);
std::vector<std::pair<std::string, int>> read_generators_file(
    const std::string& path, const FiniteLattice& lattice);

// Quiver JSON: {"vertices": [...], "arrows": [[s, t, label], ...],
// "order": [...]}.
Quiver quiver_from_json_text(const std::string& text);
Quiver read_quiver_file(const std::string& path);

// Arrangement JSON: {"dim": d, "normals": [["1", "0"], ...]}.
std::vector<std::vector<Rational>> arrangement_from_json_text(const std::string& text);
std::vector<std::vector<Rational>> read_arrangement_file(const std::string& path);

// Covector JSON: {"alphabet": "real"|"complex", "covectors": ["0+-", ...]}.
struct CovectorInput {
  bool complex_alphabet = false;
  std::vector<std::string> covectors;
};
CovectorInput covectors_from_json_text(const std::string& text);
CovectorInput read_covectors_file(const std::string& path);

// Complex JSON: {"vertices": [...], "facets": [[...]]}.
SimplicialComplex complex_from_json_text(const std::string& text);
std::string complex_to_json_text(const SimplicialComplex& k);

// DOT and CSV artifacts.
std::string hasse_dot(const Lrb& b);
std::string lattice_dot(const Lrb& b, const SupportLattice& lat);
std::string quiver_dot(const QuiverDescription& q);
std::string ext_table_csv(const ExtTable& table, const std::vector<std::string>& labels);
std::string betti_csv(const BettiVector& betti);
std::string bounds_report_json(const BoundsReport& report);
std::string oracle_report_json(const OracleReport& report,
                               const std::vector<std::string>& labels);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace lrb
