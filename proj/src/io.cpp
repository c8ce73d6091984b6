#include "lrb/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace lrb {

using nlohmann::json;

namespace {

json parse_json(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw InvalidInput("BadJson", "malformed JSON");
  return j;
}

int resolve_name(const json& value, const std::vector<std::string>& names,
                 const std::string& what) {
  if (value.is_number_integer()) {
    const int idx = value.get<int>();
    if (idx < 0 || idx >= static_cast<int>(names.size())) {
      throw InvalidInput("BadJson", what + " index out of range");
    }
    return idx;
  }
  if (value.is_string()) {
    const std::string name = value.get<std::string>();
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (names[i] == name) return static_cast<int>(i);
    }
    throw InvalidInput("BadJson", "unknown " + what + " '" + name + "'");
  }
  throw InvalidInput("BadJson", what + " must be an index or a name");
}

}  // namespace

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("FileNotFound", "cannot read '" + path + "'");
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidInput("FileError", "cannot write '" + path + "'");
  out << content;
}

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(Int(text));
    const Int num(text.substr(0, slash));
    const Int den(text.substr(slash + 1));
    if (den == 0) throw InvalidInput("BadRational", "zero denominator in '" + text + "'");
    return Rational(num, den);
  } catch (const std::runtime_error&) {
    throw InvalidInput("BadRational", "cannot parse rational '" + text + "'");
  }
}

std::string rational_to_string(const Rational& value) {
  const Int num = boost::multiprecision::numerator(value);
  const Int den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Lrb monoid_from_json_text(const std::string& text) {
  const json j = parse_json(text);
  if (!j.contains("size") || !j.contains("identity") || !j.contains("table")) {
    throw InvalidInput("BadJson", "monoid JSON needs size, identity and table");
  }
  const int n = j["size"].get<int>();
  std::vector<std::vector<int>> table;
  for (const auto& row : j["table"]) table.push_back(row.get<std::vector<int>>());
  if (static_cast<int>(table.size()) != n) {
    throw InvalidInput("BadJson", "table size does not match 'size'");
  }
  std::vector<std::string> names;
  if (j.contains("names") && !j["names"].is_null()) {
    names = j["names"].get<std::vector<std::string>>();
  }
  return validate_lrb(std::move(table), j["identity"].get<int>(), std::move(names));
}

Lrb read_monoid_file(const std::string& path) {
  return monoid_from_json_text(read_text_file(path));
}

std::string monoid_to_json_text(const Lrb& b) {
  const Lrb canon = canonicalize(b);
  json j;
  j["size"] = canon.size();
  j["identity"] = canon.identity;
  j["names"] = canon.names;
  j["table"] = canon.table;
  return j.dump(1) + "\n";
}

void write_monoid_file(const std::string& path, const Lrb& b) {
  write_text_file(path, monoid_to_json_text(b));
}

Graph graph_from_json_text(const std::string& text) {
  const json j = parse_json(text);
  if (!j.contains("vertices")) throw InvalidInput("BadJson", "graph JSON needs vertices");
  std::vector<std::string> labels;
  for (const auto& v : j["vertices"]) {
    labels.push_back(v.is_string() ? v.get<std::string>() : v.dump());
  }
  Graph g(static_cast<int>(labels.size()), labels);
  if (j.contains("edges")) {
    for (const auto& e : j["edges"]) {
      if (!e.is_array() || e.size() != 2) {
        throw InvalidInput("BadJson", "edges must be pairs");
      }
      g.add_edge(resolve_name(e[0], labels, "vertex"), resolve_name(e[1], labels, "vertex"));
    }
  }
  return g;
}

Graph read_graph_file(const std::string& path) {
  return graph_from_json_text(read_text_file(path));
}

FiniteLattice lattice_from_json_text(const std::string& text) {
  const json j = parse_json(text);
  if (!j.contains("size") || !j.contains("leq") || !j.contains("meet")) {
    throw InvalidInput("BadJson", "lattice JSON needs size, leq and meet");
  }
  FiniteLattice l;
  l.count = j["size"].get<int>();
  if (l.count <= 0) throw InvalidInput("BadLattice", "lattice must be nonempty");
  if (j.contains("names") && !j["names"].is_null()) {
    l.names = j["names"].get<std::vector<std::string>>();
  }
  l.leq.assign(l.count, std::vector<bool>(l.count, false));
  for (int x = 0; x < l.count; ++x) l.leq[x][x] = true;
  for (const auto& pair : j["leq"]) {
    if (!pair.is_array() || pair.size() != 2) {
      throw InvalidInput("BadJson", "leq must be a list of pairs");
    }
    const int x = resolve_name(pair[0], l.names, "lattice element");
    const int y = resolve_name(pair[1], l.names, "lattice element");
    l.leq[x][y] = true;
  }
  // transitive closure
  for (int k = 0; k < l.count; ++k) {
    for (int x = 0; x < l.count; ++x) {
      if (!l.leq[x][k]) continue;
      for (int y = 0; y < l.count; ++y) {
        if (l.leq[k][y]) l.leq[x][y] = true;
      }
    }
  }
  for (const auto& row : j["meet"]) {
    l.meet.push_back(row.get<std::vector<int>>());
  }
  if (j.contains("top")) {
    l.top = resolve_name(j["top"], l.names, "lattice element");
  } else {
    for (int x = 0; x < l.count; ++x) {
      bool is_top = true;
      for (int y = 0; y < l.count && is_top; ++y) is_top = l.leq[y][x];
      if (is_top) {
        l.top = x;
        break;
      }
    }
  }
  l.check();
  return l;
}

FiniteLattice read_lattice_file(const std::string& path) {
  return lattice_from_json_text(read_text_file(path));
}

std::vector<std::pair<std::string, int>> generators_from_json_text(
    const std::string& text, const FiniteLattice& lattice) {
  const json j = parse_json(text);
  if (!j.is_object()) throw InvalidInput("BadJson", "generators must be a name->element map");
  std::vector<std::string> names;
  for (int x = 0; x < lattice.count; ++x) names.push_back(lattice.label(x));
  std::vector<std::pair<std::string, int>> out;
  for (const auto& [key, value] : j.items()) {
    out.emplace_back(key, resolve_name(value, names, "lattice element"));
  }
  return out;
}

std::vector<std::pair<std::string, int>> read_generators_file(
    const std::string& path, const FiniteLattice& lattice) {
  return generators_from_json_text(read_text_file(path), lattice);
}

Quiver quiver_from_json_text(const std::string& text) {
  const json j = parse_json(text);
  if (!j.contains("vertices")) throw InvalidInput("BadJson", "quiver JSON needs vertices");
  Quiver q;
  for (const auto& v : j["vertices"]) {
    q.vertices.push_back(v.is_string() ? v.get<std::string>() : v.dump());
  }
  if (j.contains("arrows")) {
    for (const auto& a : j["arrows"]) {
      if (!a.is_array() || a.size() < 2) {
        throw InvalidInput("BadJson", "arrows must be [source, target, label?]");
      }
      Quiver::Arrow arrow;
      arrow.source = resolve_name(a[0], q.vertices, "vertex");
      arrow.target = resolve_name(a[1], q.vertices, "vertex");
      if (a.size() > 2) arrow.label = a[2].get<std::string>();
      q.arrows.push_back(std::move(arrow));
    }
  }
  if (j.contains("order")) {
    for (const auto& v : j["order"]) {
      q.order.push_back(resolve_name(v, q.vertices, "vertex"));
    }
  }
  return q;
}

Quiver read_quiver_file(const std::string& path) {
  return quiver_from_json_text(read_text_file(path));
}

std::vector<std::vector<Rational>> arrangement_from_json_text(const std::string& text) {
  const json j = parse_json(text);
  if (!j.contains("dim") || !j.contains("normals")) {
    throw InvalidInput("BadJson", "arrangement JSON needs dim and normals");
  }
  const int d = j["dim"].get<int>();
  std::vector<std::vector<Rational>> normals;
  for (const auto& row : j["normals"]) {
    std::vector<Rational> h;
    for (const auto& v : row) {
      if (v.is_number_integer()) {
        h.emplace_back(v.get<long>());
      } else {
        h.push_back(parse_rational(v.get<std::string>()));
      }
    }
    if (static_cast<int>(h.size()) != d) {
      throw InvalidInput("BadArrangement", "normal vector of wrong dimension");
    }
    normals.push_back(std::move(h));
  }
  return normals;
}

std::vector<std::vector<Rational>> read_arrangement_file(const std::string& path) {
  return arrangement_from_json_text(read_text_file(path));
}

CovectorInput covectors_from_json_text(const std::string& text) {
  const json j = parse_json(text);
  CovectorInput input;
  if (j.contains("alphabet")) {
    const std::string alphabet = j["alphabet"].get<std::string>();
    if (alphabet == "complex") {
      input.complex_alphabet = true;
    } else if (alphabet != "real") {
      throw InvalidInput("BadJson", "alphabet must be 'real' or 'complex'");
    }
  }
  if (!j.contains("covectors")) throw InvalidInput("BadJson", "covector JSON needs covectors");
  input.covectors = j["covectors"].get<std::vector<std::string>>();
  return input;
}

CovectorInput read_covectors_file(const std::string& path) {
  return covectors_from_json_text(read_text_file(path));
}

SimplicialComplex complex_from_json_text(const std::string& text) {
  const json j = parse_json(text);
  if (!j.contains("vertices")) throw InvalidInput("BadJson", "complex JSON needs vertices");
  std::vector<std::string> vertices;
  for (const auto& v : j["vertices"]) {
    vertices.push_back(v.is_string() ? v.get<std::string>() : v.dump());
  }
  std::vector<std::vector<int>> facets;
  if (j.contains("facets")) {
    for (const auto& f : j["facets"]) {
      std::vector<int> face;
      for (const auto& v : f) face.push_back(resolve_name(v, vertices, "vertex"));
      facets.push_back(std::move(face));
    }
  }
  return SimplicialComplex::from_faces(std::move(vertices), facets);
}

std::string complex_to_json_text(const SimplicialComplex& k) {
  json j;
  j["vertices"] = k.vertices;
  j["facets"] = k.facets;
  return j.dump(1) + "\n";
}

namespace {

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

std::string hasse_dot(const Lrb& b) {
  const FinitePoset order = r_order(b);
  std::ostringstream out;
  out << "graph hasse {\n";
  for (int x = 0; x < b.size(); ++x) {
    out << "  n" << x << " [label=\"" << dot_escape(b.label(x)) << "\"];\n";
  }
  for (const auto& [lo, hi] : order.hasse) {
    out << "  n" << hi << " -- n" << lo << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string lattice_dot(const Lrb& b, const SupportLattice& lat) {
  const FinitePoset order = lat.poset();
  std::ostringstream out;
  out << "graph lattice {\n";
  for (int x = 0; x < lat.count; ++x) {
    out << "  n" << x << " [label=\"B." << dot_escape(b.label(lat.rep[x]));
    if (x == lat.top) out << " (top)";
    if (x == lat.bottom) out << " (bottom)";
    out << "\"];\n";
  }
  for (const auto& [lo, hi] : order.hasse) {
    out << "  n" << hi << " -- n" << lo << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string quiver_dot(const QuiverDescription& q) {
  std::ostringstream out;
  out << "digraph quiver {\n";
  for (int x = 0; x < q.vertex_count; ++x) {
    out << "  n" << x << " [label=\""
        << dot_escape(x < static_cast<int>(q.labels.size()) ? q.labels[x] : std::to_string(x))
        << "\"];\n";
  }
  for (const auto& [key, mult] : q.arrows) {
    for (long i = 0; i < mult; ++i) {
      out << "  n" << key.first << " -> n" << key.second << ";\n";
    }
  }
  out << "}\n";
  return out.str();
}

std::string ext_table_csv(const ExtTable& table, const std::vector<std::string>& labels) {
  std::ostringstream out;
  out << "X,Y,n,dim\n";
  for (const auto& [key, dim] : table.entries) {
    const auto& [X, Y, n] = key;
    out << labels[X] << "," << labels[Y] << "," << n << "," << dim << "\n";
  }
  return out.str();
}

std::string betti_csv(const BettiVector& betti) {
  std::ostringstream out;
  out << "degree,dimension\n";
  for (std::size_t i = 0; i < betti.dims.size(); ++i) {
    out << (static_cast<int>(i) - 1) << "," << betti.dims[i] << "\n";
  }
  return out.str();
}

std::string bounds_report_json(const BoundsReport& report) {
  json j;
  j["gldim"] = report.global_dimension;
  j["chain_bound"] = report.chain_bound;
  j["chain_bound_ok"] = report.chain_bound_ok;
  if (report.leray_bound) {
    j["leray_bound"] = *report.leray_bound;
    j["leray_bound_ok"] = report.leray_bound_ok;
  } else {
    j["leray_bound"] = nullptr;
    j["leray_note"] = "skipped: monoid larger than the Leray cap";
  }
  return j.dump(1) + "\n";
}

std::string oracle_report_json(const OracleReport& report,
                               const std::vector<std::string>& labels) {
  json cells = json::array();
  for (const auto& cell : report.cells) {
    json c;
    c["X"] = labels[cell.X];
    c["Y"] = labels[cell.Y];
    c["checked_degree"] = cell.checked_degree;
    c["bar"] = cell.bar;
    c["simplicial"] = cell.simplicial;
    c["agree"] = cell.agree;
    c["truncated"] = cell.truncated;
    cells.push_back(std::move(c));
  }
  json j;
  j["field"] = report.field.name();
  j["max_degree"] = report.max_degree;
  j["budget"] = report.budget;
  j["mismatches"] = report.mismatches;
  j["truncated"] = report.truncated;
  j["cells"] = std::move(cells);
  return j.dump(1) + "\n";
}

}  // namespace lrb
