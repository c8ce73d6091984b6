#include <doctest.h>

#include <filesystem>

#include "corpus.hpp"
#include "lrb/io.hpp"

using namespace lrb;

TEST_CASE("rationals parse and print") {
  CHECK(parse_rational("3") == Rational(3));
  CHECK(parse_rational("-4/6") == Rational(-2, 3));
  CHECK(rational_to_string(Rational(-2, 3)) == "-2/3");
  CHECK(rational_to_string(Rational(5)) == "5");
  CHECK_THROWS_AS(parse_rational("1/0"), InvalidInput);
  CHECK_THROWS_AS(parse_rational("x"), InvalidInput);
}

TEST_CASE("monoid JSON round trips byte for byte") {
  const Lrb b = free_lrb({"b", "a"});
  const std::string once = monoid_to_json_text(b);
  const Lrb parsed = monoid_from_json_text(once);
  CHECK(monoid_to_json_text(parsed) == once);
  CHECK(equal_as_labeled(parsed, b));
  // canonical order puts the identity first
  CHECK(parsed.identity == 0);
  CHECK(parsed.label(0) == "1");
}

TEST_CASE("monoid JSON rejects malformed input") {
  CHECK_THROWS_WITH_AS(monoid_from_json_text("{"), doctest::Contains("BadJson"), InvalidInput);
  CHECK_THROWS_WITH_AS(monoid_from_json_text("{\"size\":1}"), doctest::Contains("BadJson"),
                       InvalidInput);
  // a non-band table is rejected by validation
  CHECK_THROWS_AS(
      monoid_from_json_text(R"({"size":2,"identity":0,"table":[[0,1],[1,0]]})"),
      InvalidInput);
  CHECK_THROWS_WITH_AS(read_monoid_file("/nonexistent/x.json"),
                       doctest::Contains("FileNotFound"), InvalidInput);
}

TEST_CASE("graph, lattice, quiver and arrangement JSON") {
  const Graph g = graph_from_json_text(
      R"({"vertices":["a","b","c"],"edges":[["a","b"],[1,2]]})");
  CHECK(g.n == 3);
  CHECK(g.has_edge(0, 1));
  CHECK(g.has_edge(1, 2));
  CHECK_FALSE(g.has_edge(0, 2));

  const FiniteLattice l = lattice_from_json_text(
      R"({"size":3,"names":["top","x","bot"],
          "leq":[["x","top"],["bot","x"]],
          "meet":[[0,1,2],[1,1,2],[2,2,2]],
          "top":"top"})");
  CHECK(l.count == 3);
  CHECK(l.leq[2][0]);  // transitive closure filled in

  const Quiver q = quiver_from_json_text(
      R"({"vertices":["1","2"],"arrows":[["1","2","a"]],"order":["1","2"]})");
  CHECK(q.arrows.size() == 1);
  CHECK(q.checked_order() == std::vector<int>{0, 1});

  const auto normals = arrangement_from_json_text(
      R"({"dim":2,"normals":[["0","1"],["1","-1"],[1,1]]})");
  CHECK(normals.size() == 3);
  CHECK(normals[1][1] == Rational(-1));

  const CovectorInput cov = covectors_from_json_text(
      R"({"alphabet":"complex","covectors":["0","i"]})");
  CHECK(cov.complex_alphabet);
  CHECK(cov.covectors.size() == 2);
}

TEST_CASE("complex JSON carries facets") {
  const SimplicialComplex k = complex_from_json_text(
      R"({"vertices":["x","y","z"],"facets":[["x","y"],["z"]]})");
  CHECK(k.facets.size() == 2);
  const std::string text = complex_to_json_text(k);
  CHECK(complex_from_json_text(text).facets == k.facets);
}

TEST_CASE("DOT and CSV artifacts") {
  const Lrb b = free_lrb({"a", "b"});
  const SupportLattice lat = support_lattice(b);
  const std::string hasse = hasse_dot(b);
  CHECK(hasse.find("label=\"ab\"") != std::string::npos);
  CHECK(hasse.find("--") != std::string::npos);

  const std::string lattice_text = lattice_dot(b, lat);
  CHECK(lattice_text.find("(top)") != std::string::npos);
  CHECK(lattice_text.find("(bottom)") != std::string::npos);

  HomologyContext ctx(b);
  const QuiverDescription quiver = ctx.quiver();
  const std::string quiver_text = quiver_dot(quiver);
  CHECK(quiver_text.find("->") != std::string::npos);

  const ExtTable table = ctx.ext_table(Field::rationals(), 2);
  std::vector<std::string> labels;
  for (int X = 0; X < lat.count; ++X) labels.push_back(ctx.lattice_label(X));
  const std::string csv = ext_table_csv(table, labels);
  CHECK(csv.find("X,Y,n,dim") == 0);
  CHECK(csv.find("B.ab,") != std::string::npos);

  const BettiVector betti = reduced_betti(clique_complex(Graph::cycle(4)), Field::rationals());
  CHECK(betti_csv(betti) == "degree,dimension\n-1,0\n0,0\n1,1\n");
}

TEST_CASE("identical artifacts from serialize and reparse") {
  std::vector<testing::CorpusEntry> entries;
  entries.push_back({"threelines", face_monoid_from_covectors(testing::fig2_covectors())});
  entries.push_back({"F3", free_lrb({"a", "b", "c"})});
  for (const auto& entry : entries) {
    const std::string once = monoid_to_json_text(entry.monoid);
    const Lrb parsed = monoid_from_json_text(once);

    HomologyContext a(entry.monoid);
    HomologyContext b(parsed);
    std::vector<std::string> labels_a, labels_b;
    for (int X = 0; X < a.lattice().count; ++X) labels_a.push_back(a.lattice_label(X));
    for (int X = 0; X < b.lattice().count; ++X) labels_b.push_back(b.lattice_label(X));
    CHECK(ext_table_csv(a.ext_table(Field::rationals()), labels_a) ==
          ext_table_csv(b.ext_table(Field::rationals()), labels_b));
    CHECK(quiver_dot(a.quiver()) == quiver_dot(b.quiver()));
  }
}
