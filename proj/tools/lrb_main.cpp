// Command line front end: construct left regular bands, analyze the
// homological invariants of their algebras, and verify the structural
// identities. Exit codes: 0 success, 1 verification failure, 2 input error,
// 3 resource cap.

#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lrb/algebra.hpp"
#include "lrb/constructions.hpp"
#include "lrb/homological.hpp"
#include "lrb/io.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitInputError = 2;
constexpr int kExitResourceError = 3;

void print_error(const std::string& code, const std::string& detail) {
  json j;
  j["error"] = code;
  j["detail"] = detail;
  std::cerr << j.dump() << "\n";
}

std::vector<std::string> split_csv(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::string output_stem(const std::string& path, const std::string& out_dir) {
  fs::path p(path);
  fs::path stem = p.stem();
  return (fs::path(out_dir) / stem).string();
}

struct ConstructOptions {
  std::string kind;
  std::string letters;
  std::string graph_file;
  std::string covectors_file;
  std::string normals_file;
  std::string lattice_file;
  std::string generators_file;
  std::string quiver_file;
  std::string left_file;
  std::string right_file;
  std::string monoid_file;
  std::string elements;
  int power = 1;
  int max_hyperplanes = 10;
  std::size_t max_elements = lrb::kDefaultMaxElements;
  std::string out;
};

int run_construct(const ConstructOptions& opt) {
  lrb::Lrb b;
  if (opt.kind == "free") {
    b = lrb::free_lrb(split_csv(opt.letters), opt.max_elements);
  } else if (opt.kind == "fpc") {
    b = lrb::free_partially_commutative(lrb::read_graph_file(opt.graph_file), opt.max_elements);
  } else if (opt.kind == "covectors") {
    const lrb::CovectorInput input = lrb::read_covectors_file(opt.covectors_file);
    b = lrb::face_monoid_from_covectors(input.covectors, input.complex_alphabet);
  } else if (opt.kind == "arrangement") {
    b = lrb::face_monoid_from_normals(lrb::read_arrangement_file(opt.normals_file),
                                      opt.max_hyperplanes);
  } else if (opt.kind == "complex-sign") {
    b = lrb::complex_sign_monoid(opt.power, opt.max_elements);
  } else if (opt.kind == "kr") {
    const lrb::FiniteLattice lattice = lrb::read_lattice_file(opt.lattice_file);
    b = lrb::karnofsky_rhodes(lattice, lrb::read_generators_file(opt.generators_file, lattice),
                              opt.max_elements);
  } else if (opt.kind == "rhodes") {
    b = lrb::rhodes_expansion(lrb::read_lattice_file(opt.lattice_file), opt.max_elements);
  } else if (opt.kind == "quiver") {
    b = lrb::quiver_lrb(lrb::read_quiver_file(opt.quiver_file), opt.max_elements);
  } else if (opt.kind == "product") {
    b = lrb::direct_product(lrb::read_monoid_file(opt.left_file),
                            lrb::read_monoid_file(opt.right_file), opt.max_elements);
  } else if (opt.kind == "submonoid") {
    const lrb::Lrb ambient = lrb::read_monoid_file(opt.monoid_file);
    std::vector<int> gens;
    for (const std::string& name : split_csv(opt.elements)) {
      int found = -1;
      for (int x = 0; x < ambient.size(); ++x) {
        if (ambient.label(x) == name) {
          found = x;
          break;
        }
      }
      if (found < 0) throw lrb::InvalidInput("BadElement", "unknown element '" + name + "'");
      gens.push_back(found);
    }
    b = lrb::submonoid_generated(ambient, gens).sub;
  } else {
    throw lrb::InvalidInput("BadKind", "unknown construction '" + opt.kind + "'");
  }

  lrb::write_monoid_file(opt.out, b);
  const lrb::SupportLattice lat = lrb::support_lattice(b);
  std::cout << "size " << b.size() << "\n";
  std::cout << "lattice " << lat.count << " elements, longest chain "
            << lrb::lambda_chain_length(lat) << "\n";
  std::cout << "wrote " << opt.out << "\n";
  return kExitOk;
}

struct AnalyzeOptions {
  std::string monoid_file;
  bool ext = false;
  bool quiver = false;
  bool gldim = false;
  bool leray = false;
  bool bounds = false;
  bool hasse = false;
  bool lattice = false;
  std::string field = "q";
  int max_degree = -1;
  int leray_cap = 16;
  std::string out_dir = ".";
};

int run_analyze(const AnalyzeOptions& opt) {
  const lrb::Field field = lrb::Field::parse(opt.field);
  lrb::HomologyContext ctx(lrb::read_monoid_file(opt.monoid_file));
  const std::string stem = output_stem(opt.monoid_file, opt.out_dir);

  std::vector<std::string> labels;
  for (int x = 0; x < ctx.lattice().count; ++x) labels.push_back(ctx.lattice_label(x));

  int failures_input = 0, failures_resource = 0;
  auto guard = [&](const char* what, auto&& fn) {
    try {
      fn();
    } catch (const lrb::ResourceLimit& e) {
      print_error(e.code(), std::string(what) + ": " + e.what());
      ++failures_resource;
    } catch (const lrb::InvalidInput& e) {
      print_error(e.code(), std::string(what) + ": " + e.what());
      ++failures_input;
    }
  };

  if (opt.ext) {
    guard("ext", [&] {
      const lrb::ExtTable table = ctx.ext_table(field, opt.max_degree);
      lrb::write_text_file(stem + ".ext.csv", lrb::ext_table_csv(table, labels));
      std::cout << "ext " << stem << ".ext.csv\n";
    });
  }
  if (opt.quiver) {
    guard("quiver", [&] {
      const lrb::QuiverDescription q = ctx.quiver();
      lrb::write_text_file(stem + ".quiver.dot", lrb::quiver_dot(q));
      std::cout << "quiver " << q.total() << " arrows, " << stem << ".quiver.dot\n";
    });
  }
  if (opt.gldim) {
    guard("gldim", [&] { std::cout << "gldim " << ctx.global_dimension(field) << "\n"; });
  }
  if (opt.leray) {
    guard("leray", [&] {
      std::vector<std::string> names;
      for (int x = 0; x < ctx.monoid().size(); ++x) names.push_back(ctx.monoid().label(x));
      const lrb::SimplicialComplex full = lrb::order_complex(ctx.rorder(), names);
      std::cout << "leray " << lrb::leray_number(full, field, opt.leray_cap) << "\n";
    });
  }
  if (opt.bounds) {
    guard("bounds", [&] {
      const lrb::BoundsReport report = ctx.bounds_report(field, opt.leray_cap);
      lrb::write_text_file(stem + ".bounds.json", lrb::bounds_report_json(report));
      std::cout << "bounds gldim=" << report.global_dimension
                << " chain=" << report.chain_bound;
      if (report.leray_bound) std::cout << " leray=" << *report.leray_bound;
      std::cout << " " << stem << ".bounds.json\n";
    });
  }
  if (opt.hasse) {
    guard("hasse", [&] {
      lrb::write_text_file(stem + ".hasse.dot", lrb::hasse_dot(ctx.monoid()));
      std::cout << "hasse " << stem << ".hasse.dot\n";
    });
  }
  if (opt.lattice) {
    guard("lattice", [&] {
      lrb::write_text_file(stem + ".lattice.dot",
                           lrb::lattice_dot(ctx.monoid(), ctx.lattice()));
      std::cout << "lattice " << stem << ".lattice.dot\n";
    });
  }
  if (failures_resource) return kExitResourceError;
  if (failures_input) return kExitInputError;
  return kExitOk;
}

struct VerifyOptions {
  std::string monoid_file;
  bool axioms = false;
  bool idempotents = false;
  bool oracle = false;
  bool geometric = false;
  std::string field = "q";
  int max_degree = -1;
  std::size_t budget = 2'000'000;
  std::string report_file;
};

int run_verify(const VerifyOptions& opt) {
  const lrb::Field field = lrb::Field::parse(opt.field);
  const lrb::Lrb b = lrb::read_monoid_file(opt.monoid_file);
  const lrb::SupportLattice lat = lrb::support_lattice(b);

  json report;
  report["monoid"] = opt.monoid_file;
  report["field"] = field.name();
  bool all_ok = true;

  const bool any = opt.axioms || opt.idempotents || opt.oracle || opt.geometric;
  const bool run_all = !any;

  if (opt.axioms || run_all) {
    // reading the file already validated the axioms and the support map
    report["axioms"] = {{"ok", true}};
  }
  if (opt.idempotents || run_all) {
    json section;
    try {
      lrb::idempotents(b, lat, field);
      const lrb::BasisCheckResult basis = lrb::idempotent_basis_check(b, lat, field);
      const lrb::SchutzenbergerReport schutz = lrb::schutzenberger_check(b, lat, field);
      section["ok"] = basis.ok && schutz.ok;
      section["basis"] = basis.ok;
      section["schutzenberger"] = schutz.ok;
      if (!basis.ok) section["basis_witness"] = basis.detail;
      if (!schutz.ok) section["schutzenberger_witness"] = schutz.detail;
      json sizes = json::array();
      for (long s : schutz.fiber_sizes) sizes.push_back(s);
      section["fiber_sizes"] = std::move(sizes);
    } catch (const lrb::VerificationFailed& e) {
      section["ok"] = false;
      section["witness"] = e.what();
    }
    if (!section["ok"].get<bool>()) all_ok = false;
    report["idempotents"] = std::move(section);
  }
  if (opt.oracle || run_all) {
    const lrb::OracleReport oracle =
        lrb::oracle_crosscheck(b, field, opt.max_degree, opt.budget);
    std::vector<std::string> labels;
    for (int x = 0; x < lat.count; ++x) labels.push_back("B." + b.label(lat.rep[x]));
    report["oracle"] = json::parse(lrb::oracle_report_json(oracle, labels));
    if (!oracle.all_agree()) all_ok = false;
  }
  if (opt.geometric || run_all) {
    json section;
    try {
      lrb::HomologyContext ctx(b);
      const lrb::GeometricCheckReport check = ctx.geometric_commutation_check(field);
      section["ok"] = check.equal;
      section["delta_betti"] = check.delta_betti.str();
      section["clique_betti"] = check.clique_betti.str();
      if (!check.equal) all_ok = false;
    } catch (const lrb::InvalidInput& e) {
      if (!run_all) throw;
      section["skipped"] = e.what();  // not geometric or trivial
    }
    report["geometric"] = std::move(section);
  }

  report["ok"] = all_ok;
  const std::string text = report.dump(1) + "\n";
  if (opt.report_file.empty()) {
    std::cout << text;
  } else {
    lrb::write_text_file(opt.report_file, text);
    std::cout << (all_ok ? "pass " : "FAIL ") << opt.report_file << "\n";
  }
  return all_ok ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite left regular bands: constructions, support lattices, and the "
               "homological invariants of their algebras"};
  app.require_subcommand(1);

  ConstructOptions copt;
  CLI::App* construct = app.add_subcommand("construct", "build a monoid and write it as JSON");
  construct->add_option("kind", copt.kind,
                        "free|fpc|covectors|arrangement|complex-sign|kr|rhodes|quiver|"
                        "product|submonoid")
      ->required();
  construct->add_option("--letters", copt.letters, "comma separated alphabet (free)");
  construct->add_option("--graph", copt.graph_file, "graph JSON (fpc)");
  construct->add_option("--covectors", copt.covectors_file, "covector JSON (covectors)");
  construct->add_option("--normals", copt.normals_file, "arrangement JSON (arrangement)");
  construct->add_option("--n", copt.power, "power of the five-element band (complex-sign)");
  construct->add_option("--lattice", copt.lattice_file, "lattice JSON (kr, rhodes)");
  construct->add_option("--generators", copt.generators_file, "generator JSON (kr)");
  construct->add_option("--quiver", copt.quiver_file, "quiver JSON (quiver)");
  construct->add_option("--a", copt.left_file, "left factor monoid JSON (product)");
  construct->add_option("--b", copt.right_file, "right factor monoid JSON (product)");
  construct->add_option("--monoid", copt.monoid_file, "ambient monoid JSON (submonoid)");
  construct->add_option("--elements", copt.elements,
                        "comma separated generator names (submonoid)");
  construct->add_option("--max-elements", copt.max_elements, "element cap (default 5000)");
  construct->add_option("--max-hyperplanes", copt.max_hyperplanes,
                        "enumeration cap for arrangements (default 10)");
  construct->add_option("--out", copt.out, "output monoid JSON")->required();

  AnalyzeOptions aopt;
  CLI::App* analyze = app.add_subcommand("analyze", "compute invariants of a monoid algebra");
  analyze->add_option("monoid", aopt.monoid_file, "monoid JSON")->required();
  analyze->add_flag("--ext", aopt.ext, "Ext table CSV");
  analyze->add_flag("--quiver", aopt.quiver, "quiver DOT");
  analyze->add_flag("--gldim", aopt.gldim, "global dimension");
  analyze->add_flag("--leray", aopt.leray, "Leray number of the order complex");
  analyze->add_flag("--bounds", aopt.bounds, "global dimension bounds report");
  analyze->add_flag("--hasse", aopt.hasse, "R-order Hasse diagram DOT");
  analyze->add_flag("--lattice", aopt.lattice, "support lattice DOT");
  analyze->add_option("--field", aopt.field, "q or fp:P (default q)");
  analyze->add_option("--max-degree", aopt.max_degree, "Ext degree cap (default: chain bound)");
  analyze->add_option("--leray-cap", aopt.leray_cap, "vertex cap for Leray enumeration");
  analyze->add_option("--out-dir", aopt.out_dir, "output directory (default .)");

  VerifyOptions vopt;
  CLI::App* verify = app.add_subcommand("verify", "check the structural identities");
  verify->add_option("monoid", vopt.monoid_file, "monoid JSON")->required();
  verify->add_flag("--axioms", vopt.axioms, "monoid and band axioms");
  verify->add_flag("--idempotents", vopt.idempotents, "orthogonal idempotent system");
  verify->add_flag("--oracle", vopt.oracle, "bar resolution against order complexes");
  verify->add_flag("--geometric", vopt.geometric, "commutation graph comparison");
  verify->add_option("--field", vopt.field, "q or fp:P (default q)");
  verify->add_option("--max-degree", vopt.max_degree, "oracle degree cap (default: chain bound)");
  verify->add_option("--budget", vopt.budget, "bar matrix entry budget (default 2e6)");
  verify->add_option("--report", vopt.report_file, "write the JSON report here");

  try {
    app.parse(argc, argv);
    if (construct->parsed()) return run_construct(copt);
    if (analyze->parsed()) return run_analyze(aopt);
    if (verify->parsed()) return run_verify(vopt);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
    print_error("BadUsage", e.what());
    return kExitInputError;
  } catch (const lrb::ResourceLimit& e) {
    print_error(e.code(), e.what());
    return kExitResourceError;
  } catch (const lrb::VerificationFailed& e) {
    print_error(e.code(), e.what());
    return kExitVerifyFailed;
  } catch (const lrb::Error& e) {
    print_error(e.code(), e.what());
    return kExitInputError;
  } catch (const std::exception& e) {
    print_error("Internal", e.what());
    return kExitInputError;
  }
  return kExitOk;
}
