#include <doctest.h>

#include <random>
#include <set>

#include "corpus.hpp"
#include "lrb/constructions.hpp"
#include "lrb/lrb.hpp"

using namespace lrb;

namespace {

int element_by_name(const Lrb& b, const std::string& name) {
  for (int x = 0; x < b.size(); ++x) {
    if (b.label(x) == name) return x;
  }
  REQUIRE_MESSAGE(false, ("missing element " + name));
  return -1;
}

}  // namespace

TEST_CASE("every corpus construction satisfies the band axioms") {
  for (const auto& entry : testing::structural_corpus()) {
    CHECK_NOTHROW(check_lrb(entry.monoid));
  }
}

TEST_CASE("free bands") {
  CHECK(free_lrb({"a"}).size() == 2);
  CHECK(free_lrb({"a", "b"}).size() == 5);
  const Lrb f3 = free_lrb({"a", "b", "c"});
  CHECK(f3.size() == 16);
  // product: concatenate, drop repeats left to right
  CHECK(f3.mul(element_by_name(f3, "ab"), element_by_name(f3, "ca")) ==
        element_by_name(f3, "abc"));
  CHECK(f3.mul(element_by_name(f3, "cb"), element_by_name(f3, "b")) ==
        element_by_name(f3, "cb"));
  CHECK_THROWS_AS(free_lrb({"a", "a"}), InvalidInput);
  CHECK_THROWS_WITH_AS(free_lrb({"a", "b", "c", "d", "e", "f", "g"}),
                       doctest::Contains("AlphabetTooLarge"), ResourceLimit);
}

TEST_CASE("free partially commutative bands") {
  SUBCASE("complete graph gives the free semilattice") {
    const Lrb b = free_partially_commutative(Graph::complete(3));
    CHECK(b.size() == 8);
    for (int x = 0; x < b.size(); ++x) {
      for (int y = 0; y < b.size(); ++y) CHECK(b.mul(x, y) == b.mul(y, x));
    }
  }
  SUBCASE("empty graph gives the free band") {
    const Lrb b = free_partially_commutative(Graph::empty_graph(3));
    CHECK(b.size() == 16);
    CHECK(is_isomorphic(b, free_lrb({"a", "b", "c"})));
  }
  SUBCASE("four-cycle") {
    const Lrb b = free_partially_commutative(Graph::cycle(4));
    CHECK(b.size() == 25);
    const SupportLattice lat = support_lattice(b);
    CHECK(lat.count == 16);
    // minimal ideal = acyclic orientations of the complement
    long bottom = 0;
    for (int x = 0; x < b.size(); ++x) {
      if (lat.sigma[x] == lat.bottom) ++bottom;
    }
    CHECK(bottom ==
          static_cast<long>(count_acyclic_orientations(Graph::cycle(4).complement())));
  }
  SUBCASE("minimal ideal of the free band has n! elements") {
    const Lrb b = free_partially_commutative(Graph::empty_graph(4));
    const SupportLattice lat = support_lattice(b);
    long bottom = 0;
    for (int x = 0; x < b.size(); ++x) {
      if (lat.sigma[x] == lat.bottom) ++bottom;
    }
    CHECK(bottom == 24);
    CHECK(count_acyclic_orientations(Graph::empty_graph(4).complement()) == 24);
  }
}

TEST_CASE("word problem for graph bands") {
  // words are equal iff they share their support and the orientation induced
  // by first occurrence on the complement edges
  std::mt19937 rng(12345);
  const std::vector<Graph> graphs = {Graph::path(3), Graph::cycle(4)};
  for (const Graph& g : graphs) {
    const Lrb b = free_partially_commutative(g);
    const Graph comp = g.complement();
    std::vector<int> generator(g.n);
    for (int v = 0; v < g.n; ++v) generator[v] = element_by_name(b, g.label(v));

    auto evaluate = [&](const std::vector<int>& word) {
      int acc = b.identity;
      for (int v : word) acc = b.mul(acc, generator[v]);
      return acc;
    };
    auto orientation_key = [&](const std::vector<int>& word) {
      std::vector<int> first(g.n, -1);
      for (std::size_t i = 0; i < word.size(); ++i) {
        if (first[word[i]] < 0) first[word[i]] = static_cast<int>(i);
      }
      std::set<std::pair<int, int>> oriented;
      for (const auto& [u, v] : comp.edges()) {
        if (first[u] >= 0 && first[v] >= 0) {
          oriented.insert(first[u] < first[v] ? std::make_pair(u, v) : std::make_pair(v, u));
        }
      }
      std::set<int> support;
      for (int v : word) support.insert(v);
      return std::make_pair(support, oriented);
    };

    std::uniform_int_distribution<int> length(0, 6);
    std::uniform_int_distribution<int> letter(0, g.n - 1);
    std::vector<std::vector<int>> words;
    for (int i = 0; i < 60; ++i) {
      std::vector<int> w(length(rng));
      for (int& v : w) v = letter(rng);
      words.push_back(std::move(w));
    }
    for (const auto& v : words) {
      for (const auto& w : words) {
        CHECK((evaluate(v) == evaluate(w)) == (orientation_key(v) == orientation_key(w)));
      }
    }
  }
}

TEST_CASE("face monoids from covectors") {
  CHECK(face_monoid_from_covectors({"0", "+", "-"}).size() == 3);
  const Lrb lines = face_monoid_from_covectors(testing::fig2_covectors());
  CHECK(lines.size() == 13);

  // the full square of signs
  std::vector<std::string> square;
  for (char a : {'0', '+', '-'}) {
    for (char c : {'0', '+', '-'}) square.push_back(std::string{a, c});
  }
  CHECK(face_monoid_from_covectors(square).size() == 9);

  SUBCASE("closure violations are witnessed") {
    // drop a chamber: the two rays around it now compose outside the list
    std::vector<std::string> broken = testing::fig2_covectors();
    broken.erase(std::find(broken.begin(), broken.end(), "+++"));
    CHECK_THROWS_WITH_AS(face_monoid_from_covectors(broken), doctest::Contains("NotClosed"),
                         InvalidInput);
    CHECK_THROWS_WITH_AS(face_monoid_from_covectors({"+", "-"}),
                         doctest::Contains("MissingIdentity"), InvalidInput);
    CHECK_THROWS_AS(face_monoid_from_covectors({"0x"}), InvalidInput);
  }
}

TEST_CASE("complex sign monoids") {
  const Lrb s = complex_sign_monoid(1);
  REQUIRE(s.size() == 5);
  // positive row: + absorbs real signs, is absorbed by imaginary ones
  CHECK(s.mul(element_by_name(s, "+"), element_by_name(s, "-")) == element_by_name(s, "+"));
  CHECK(s.mul(element_by_name(s, "+"), element_by_name(s, "i")) == element_by_name(s, "i"));
  // the imaginary rows are constant
  for (const std::string& im : {"i", "j"}) {
    const int row = element_by_name(s, im);
    for (int y = 0; y < s.size(); ++y) CHECK(s.mul(row, y) == row);
  }

  const Lrb s2 = complex_sign_monoid(2);
  CHECK(s2.size() == 25);
  CHECK(s2.mul(element_by_name(s2, "0i"), element_by_name(s2, "+-")) ==
        element_by_name(s2, "+i"));

  CHECK_THROWS_WITH_AS(complex_sign_monoid(6), doctest::Contains("TooLarge"), ResourceLimit);

  // explicit complex covector lists go through the same closure check
  const Lrb again = face_monoid_from_covectors({"0", "+", "-", "i", "j"}, true);
  CHECK(equal_as_labeled(again, s));
}

TEST_CASE("face monoids from normal vectors") {
  auto r = [](long v) { return Rational(v); };
  SUBCASE("one hyperplane on the line") {
    const Lrb b = face_monoid_from_normals({{r(1)}});
    CHECK(b.size() == 3);
  }
  SUBCASE("three lines in the plane reproduce the covector list") {
    const Lrb b = face_monoid_from_normals(testing::fig2_normals());
    REQUIRE(b.size() == 13);
    std::set<std::string> names(b.names.begin(), b.names.end());
    std::set<std::string> expected(testing::fig2_covectors().begin(),
                                   testing::fig2_covectors().end());
    CHECK(names == expected);
    CHECK(equal_as_labeled(b, face_monoid_from_covectors(testing::fig2_covectors())));
  }
  SUBCASE("braid normals in three coordinates") {
    const Lrb b = face_monoid_from_normals(
        {{r(1), r(-1), r(0)}, {r(1), r(0), r(-1)}, {r(0), r(1), r(-1)}});
    CHECK(b.size() == 13);
    const SupportLattice lat = support_lattice(b);
    CHECK(lat.count == 5);
    // 6 chambers, 6 rays, 1 zero face
    std::vector<int> fibers(lat.count, 0);
    for (int x = 0; x < b.size(); ++x) ++fibers[lat.sigma[x]];
    CHECK(fibers[lat.bottom] == 6);
    CHECK(fibers[lat.top] == 1);
  }
  SUBCASE("brute-force feasibility agrees with the covector route") {
    const auto normals = testing::fig2_normals();
    std::vector<std::string> feasible;
    std::string signs(normals.size(), '0');
    auto rec = [&](auto&& self, std::size_t pos) -> void {
      if (pos == normals.size()) {
        if (sign_vector_feasible(normals, signs)) feasible.push_back(signs);
        return;
      }
      for (char c : {'0', '+', '-'}) {
        signs[pos] = c;
        self(self, pos + 1);
      }
    };
    rec(rec, 0);
    CHECK(equal_as_labeled(face_monoid_from_covectors(feasible),
                           face_monoid_from_normals(normals)));
  }
  CHECK_THROWS_WITH_AS(
      face_monoid_from_normals(std::vector<std::vector<Rational>>(11, {r(1)})),
      doctest::Contains("TooManyHyperplanes"), ResourceLimit);
  CHECK_THROWS_AS(face_monoid_from_normals({{r(0)}}), InvalidInput);
}

TEST_CASE("Karnofsky-Rhodes expansions") {
  SUBCASE("power set with singleton generators gives the free band") {
    const FiniteLattice l = FiniteLattice::power_set({"a", "b"});
    std::vector<std::pair<std::string, int>> gens;
    for (int x = 0; x < l.count; ++x) {
      if (l.label(x) == "{a}") gens.emplace_back("a", x);
      if (l.label(x) == "{b}") gens.emplace_back("b", x);
    }
    const Lrb b = karnofsky_rhodes(l, gens);
    CHECK(equal_as_labeled(b, free_lrb({"a", "b"})));
  }
  SUBCASE("the glued boolean lattice gives words of bounded length") {
    const FiniteLattice l = FiniteLattice::glued_boolean(3);
    std::vector<std::pair<std::string, int>> gens;
    for (int x = 0; x < l.count; ++x) {
      for (const char* name : {"1", "2", "3"}) {
        if (l.label(x) == std::string("{") + name + "}") gens.emplace_back(name, x);
      }
    }
    const Lrb b = karnofsky_rhodes(l, gens);
    CHECK(b.size() == 10);  // empty word, 3 letters, 6 ordered pairs
    CHECK(is_right_hereditary(b));
  }
  SUBCASE("two-element chain with one generator") {
    const FiniteLattice l = FiniteLattice::chain(2);
    const Lrb b = karnofsky_rhodes(l, {{"a", 1}});
    CHECK(b.size() == 2);
  }
  SUBCASE("non-generating sets are rejected") {
    const FiniteLattice l = FiniteLattice::power_set({"a", "b"});
    int a_index = 0;
    for (int x = 0; x < l.count; ++x) {
      if (l.label(x) == "{a}") a_index = x;
    }
    CHECK_THROWS_WITH_AS(karnofsky_rhodes(l, {{"a", a_index}}),
                         doctest::Contains("NotGenerating"), InvalidInput);
  }
  SUBCASE("universal property: evaluation is a surjective homomorphism") {
    // onto the graph band generated by the same letters
    Graph p3(3, {"a", "b", "c"});
    p3.add_edge(0, 1);
    p3.add_edge(1, 2);
    const Lrb target = free_partially_commutative(p3);
    const Lrb expansion = free_lrb({"a", "b", "c"});  // = KR of the power set

    std::vector<int> image(expansion.size());
    for (int w = 0; w < expansion.size(); ++w) {
      int acc = target.identity;
      if (w != expansion.identity) {
        for (char c : expansion.label(w)) {
          acc = target.mul(acc, [&] {
            for (int x = 0; x < target.size(); ++x) {
              if (target.label(x) == std::string(1, c)) return x;
            }
            return -1;
          }());
        }
      }
      image[w] = acc;
    }
    std::set<int> hit;
    for (int w = 0; w < expansion.size(); ++w) {
      hit.insert(image[w]);
      for (int v = 0; v < expansion.size(); ++v) {
        CHECK(image[expansion.mul(w, v)] == target.mul(image[w], image[v]));
      }
    }
    CHECK(static_cast<int>(hit.size()) == target.size());
  }
}

TEST_CASE("Rhodes expansions") {
  CHECK(rhodes_expansion(FiniteLattice::chain(2)).size() == 2);
  const Lrb b = rhodes_expansion(FiniteLattice::chain(3));
  REQUIRE(b.size() == 4);
  // chains through the top: {c0}, {c0>c1}, {c0>c2}, {c0>c1>c2}
  const int xy = b.mul(element_by_name(b, "[c0>c1]"), element_by_name(b, "[c0>c2]"));
  CHECK(xy == element_by_name(b, "[c0>c1>c2]"));
  CHECK(is_right_hereditary(b));
}

TEST_CASE("quiver bands") {
  SUBCASE("single vertex is trivial") {
    Quiver q;
    q.vertices = {"1"};
    CHECK(quiver_lrb(q).size() == 1);
  }
  SUBCASE("one arrow gives three elements") {
    const Lrb b = quiver_lrb(testing::line_quiver(2));
    CHECK(b.size() == 3);
    const SupportLattice lat = support_lattice(b);
    CHECK(lat.count == 2);
  }
  SUBCASE("the support lattice is the opposite vertex chain") {
    const Lrb b = quiver_lrb(testing::line_quiver(3));
    CHECK(b.size() == 6);
    const SupportLattice lat = support_lattice(b);
    CHECK(lat.count == 3);
    for (int x = 0; x < lat.count; ++x) {
      for (int y = 0; y < lat.count; ++y) {
        CHECK((lat.leq(x, y) || lat.leq(y, x)));  // a chain
      }
    }
  }
  SUBCASE("absorbed, attached and jumped products") {
    // two disjoint arrows a: v1 -> v2 and c: v3 -> v4
    Quiver q;
    q.vertices = {"1", "2", "3", "4"};
    q.arrows.push_back({0, 1, "a"});
    q.arrows.push_back({2, 3, "c"});
    const Lrb b = quiver_lrb(q);
    CHECK(b.size() == 6);
    const int a = element_by_name(b, "a");
    const int c = element_by_name(b, "c");
    const int e2 = element_by_name(b, "e_2");
    CHECK(b.mul(a, e2) == a);       // targets compared: absorb
    CHECK(b.mul(a, c) == c);        // jump to the suffix
    CHECK(b.mul(e2, a) == a);       // stationary path at the target attaches
    const Lrb a3 = quiver_lrb(testing::line_quiver(3));
    CHECK(a3.mul(element_by_name(a3, "a"), element_by_name(a3, "a*b")) ==
          element_by_name(a3, "a*b"));  // attach at the matching suffix
  }
  SUBCASE("bad orders are rejected") {
    Quiver q = testing::line_quiver(2);
    q.order = {1, 0};
    CHECK_THROWS_WITH_AS(quiver_lrb(q), doctest::Contains("BadOrder"), InvalidInput);
    Quiver loop;
    loop.vertices = {"1", "2"};
    loop.arrows.push_back({0, 1, "a"});
    loop.arrows.push_back({1, 0, "b"});
    CHECK_THROWS_WITH_AS(quiver_lrb(loop), doctest::Contains("NotAcyclic"), InvalidInput);
  }
}

TEST_CASE("products and generated submonoids") {
  const Lrb zpm = face_monoid_from_covectors({"0", "+", "-"});
  const Lrb square = direct_product(zpm, zpm);
  CHECK(square.size() == 9);
  check_lrb(square);

  // the diagonal-ish submonoid of the square
  const int pp = [&] {
    for (int x = 0; x < square.size(); ++x) {
      if (square.label(x) == "+|+") return x;
    }
    return -1;
  }();
  const int mm = [&] {
    for (int x = 0; x < square.size(); ++x) {
      if (square.label(x) == "-|-") return x;
    }
    return -1;
  }();
  const SubmonoidMap diag = submonoid_generated(square, {pp, mm});
  CHECK(diag.sub.size() == 3);

  const std::vector<int> everything = [&] {
    std::vector<int> all;
    for (int x = 0; x < square.size(); ++x) all.push_back(x);
    return all;
  }();
  CHECK(submonoid_generated(square, everything).sub.size() == square.size());
}

TEST_CASE("lattices as bands are semisimple inputs") {
  const Lrb b = lattice_as_lrb(FiniteLattice::power_set({"a", "b"}));
  check_lrb(b);
  CHECK(b.size() == 4);
  for (int x = 0; x < b.size(); ++x) {
    for (int y = 0; y < b.size(); ++y) CHECK(b.mul(x, y) == b.mul(y, x));
  }
}
