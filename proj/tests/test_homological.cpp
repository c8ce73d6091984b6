#include <doctest.h>

#include <set>

#include "corpus.hpp"
#include "lrb/constructions.hpp"
#include "lrb/exact_matrix.hpp"
#include "lrb/homological.hpp"

using namespace lrb;

namespace {

const Field kQ = Field::rationals();

int element_by_name(const Lrb& b, const std::string& name) {
  for (int x = 0; x < b.size(); ++x) {
    if (b.label(x) == name) return x;
  }
  REQUIRE_MESSAGE(false, ("missing element " + name));
  return -1;
}

int support_of(const HomologyContext& ctx, const std::string& name) {
  return ctx.lattice().sigma[element_by_name(ctx.monoid(), name)];
}

// content of a lattice element of a free or graph band, read off its witness
std::set<char> content_of(const HomologyContext& ctx, int X) {
  const Lrb& b = ctx.monoid();
  const std::string rep = b.label(ctx.lattice().rep[X]);
  if (rep == "1") return {};
  return {rep.begin(), rep.end()};
}

}  // namespace

TEST_CASE("delta complexes of the basic examples") {
  SUBCASE("three signs: two points") {
    HomologyContext ctx(face_monoid_from_covectors({"0", "+", "-"}));
    const SimplicialComplex& k = ctx.delta(ctx.lattice().bottom, ctx.lattice().top);
    CHECK(k.vertex_count() == 2);
    CHECK(k.dim() == 0);
  }
  SUBCASE("three lines: the 12-gon") {
    HomologyContext ctx(face_monoid_from_covectors(testing::fig2_covectors()));
    const SimplicialComplex& k = ctx.delta(ctx.lattice().bottom, ctx.lattice().top);
    CHECK(k.vertex_count() == 12);
    CHECK(k.facets.size() == 12);
    CHECK(k.dim() == 1);
    const BettiVector betti = reduced_betti(k, kQ);
    CHECK(betti.dim(0) == 0);
    CHECK(betti.dim(1) == 1);
  }
  SUBCASE("free band on two letters: two disjoint edges") {
    HomologyContext ctx(free_lrb({"a", "b"}));
    const SimplicialComplex& k = ctx.delta(ctx.lattice().bottom, ctx.lattice().top);
    CHECK(k.vertex_count() == 4);
    REQUIRE(k.facets.size() == 2);
    std::set<std::set<std::string>> edges;
    for (const auto& facet : k.facets) {
      std::set<std::string> edge;
      for (int v : facet) edge.insert(k.vertices[v]);
      edges.insert(edge);
    }
    CHECK(edges == std::set<std::set<std::string>>{{"a", "ab"}, {"b", "ba"}});
  }
  SUBCASE("equal arguments are rejected") {
    HomologyContext ctx(free_lrb({"a"}));
    CHECK_THROWS_WITH_AS(ctx.delta(ctx.lattice().top, ctx.lattice().top),
                         doctest::Contains("NotStrictlyComparable"), InvalidInput);
  }
}

TEST_CASE("Ext dimensions") {
  SUBCASE("three signs") {
    HomologyContext ctx(face_monoid_from_covectors({"0", "+", "-"}));
    const auto ext = ctx.ext_dims(ctx.lattice().bottom, ctx.lattice().top, kQ, 3);
    CHECK(ext == std::vector<long>{0, 1, 0, 0});
  }
  SUBCASE("three lines satisfy the sphere rule") {
    const Lrb b = face_monoid_from_covectors(testing::fig2_covectors());
    HomologyContext ctx(b);
    const auto& lat = ctx.lattice();
    // rank of the zero set of a face, as codimension of its span
    auto codim = [&](int X) {
      const auto normals = testing::fig2_normals();
      const std::string face = b.label(lat.rep[X]);
      ExactMatrix m(normals.size(), 2);
      for (std::size_t i = 0; i < face.size(); ++i) {
        if (face[i] == '0') {
          const Int num0 = boost::multiprecision::numerator(normals[i][0]);
          const Int num1 = boost::multiprecision::numerator(normals[i][1]);
          m.add(i, 0, num0);
          m.add(i, 1, num1);
        }
      }
      return m.rank(kQ);
    };
    for (int X = 0; X < lat.count; ++X) {
      for (int Y = 0; Y < lat.count; ++Y) {
        const auto ext = ctx.ext_dims(X, Y, kQ, 2);
        for (int n = 0; n <= 2; ++n) {
          const bool expect_one =
              lat.leq(X, Y) &&
              static_cast<long>(codim(Y)) - static_cast<long>(codim(X)) == n;
          CHECK(ext[n] == (expect_one ? 1 : 0));
        }
      }
    }
  }
  SUBCASE("incomparable and reversed pairs vanish") {
    HomologyContext ctx(free_lrb({"a", "b"}));
    const int A = support_of(ctx, "a");
    const int B = support_of(ctx, "b");
    CHECK(ctx.ext_dims(A, B, kQ, 3) == std::vector<long>{0, 0, 0, 0});
    CHECK(ctx.ext_dims(ctx.lattice().top, ctx.lattice().bottom, kQ, 3) ==
          std::vector<long>{0, 0, 0, 0});
    CHECK(ctx.ext_dims(A, A, kQ, 2) == std::vector<long>{1, 0, 0});
  }
}

TEST_CASE("quivers") {
  SUBCASE("free band on three letters") {
    HomologyContext ctx(free_lrb({"a", "b", "c"}));
    const QuiverDescription q = ctx.quiver();
    const auto& lat = ctx.lattice();
    for (int X = 0; X < lat.count; ++X) {
      for (int Y = 0; Y < lat.count; ++Y) {
        const auto cx = content_of(ctx, X);
        const auto cy = content_of(ctx, Y);
        long expected = 0;
        if (lat.less(X, Y)) {
          // X < Y means the content of X strictly contains the content of Y
          expected = static_cast<long>(cx.size() - cy.size()) - 1;
        }
        CHECK(q.multiplicity(X, Y) == std::max(0L, expected));
      }
    }
    CHECK(q.total() == 8);
  }
  SUBCASE("three lines: single arrows along the Hasse diagram") {
    HomologyContext ctx(face_monoid_from_covectors(testing::fig2_covectors()));
    const QuiverDescription q = ctx.quiver();
    const FinitePoset lattice_poset = ctx.lattice().poset();
    CHECK(q.total() == static_cast<long>(lattice_poset.hasse.size()));
    for (const auto& [lo, hi] : lattice_poset.hasse) {
      CHECK(q.multiplicity(lo, hi) == 1);
    }
  }
  SUBCASE("lattices are semisimple: no arrows") {
    HomologyContext ctx(lattice_as_lrb(FiniteLattice::power_set({"a", "b", "c"})));
    CHECK(ctx.quiver().total() == 0);
    CHECK(ctx.global_dimension(kQ) == 0);
  }
  SUBCASE("arrow counts equal degree-one Ext dimensions over any field") {
    for (const auto& entry : {testing::structural_corpus()[0],
                              testing::structural_corpus()[1],
                              testing::CorpusEntry{"F3", free_lrb({"a", "b", "c"})},
                              testing::CorpusEntry{"BC4", free_partially_commutative(
                                                              Graph::cycle(4))}}) {
      HomologyContext ctx(entry.monoid);
      const QuiverDescription q = ctx.quiver();
      for (const Field& field : {kQ, Field::prime(2), Field::prime(7)}) {
        for (int X = 0; X < ctx.lattice().count; ++X) {
          for (int Y = 0; Y < ctx.lattice().count; ++Y) {
            if (!ctx.lattice().less(X, Y)) continue;
            CHECK(ctx.ext_dims(X, Y, field, 1)[1] == q.multiplicity(X, Y));
          }
        }
      }
    }
  }
}

TEST_CASE("relation counts") {
  SUBCASE("free bands are presented without relations") {
    HomologyContext ctx(free_lrb({"a", "b", "c"}));
    CHECK(ctx.relation_counts(kQ).empty());
  }
  SUBCASE("three lines need one relation at the long pair") {
    HomologyContext ctx(face_monoid_from_covectors(testing::fig2_covectors()));
    const auto counts = ctx.relation_counts(kQ);
    REQUIRE(counts.size() == 1);
    const auto& [pair, count] = *counts.begin();
    CHECK(pair.first == ctx.lattice().bottom);
    CHECK(pair.second == ctx.lattice().top);
    CHECK(count == 1);
  }
  SUBCASE("the four-cycle band needs one relation at the full pair") {
    HomologyContext ctx(free_partially_commutative(Graph::cycle(4)));
    const auto counts = ctx.relation_counts(kQ);
    CHECK(counts.at({ctx.lattice().bottom, ctx.lattice().top}) == 1);
  }
}

TEST_CASE("global and projective dimension") {
  CHECK(HomologyContext(lattice_as_lrb(FiniteLattice::chain(4))).global_dimension(kQ) == 0);
  CHECK(HomologyContext(free_lrb({"a", "b"})).global_dimension(kQ) == 1);
  CHECK(HomologyContext(free_lrb({"a", "b", "c"})).global_dimension(kQ) == 1);
  CHECK(HomologyContext(free_partially_commutative(Graph::cycle(4))).global_dimension(kQ) == 2);

  SUBCASE("global dimension is the largest projective dimension") {
    for (const auto& entry : testing::structural_corpus()) {
      HomologyContext ctx(entry.monoid);
      long best = 0;
      for (int X = 0; X < ctx.lattice().count; ++X) {
        best = std::max(best, ctx.proj_dimension(X, kQ));
      }
      CHECK_MESSAGE(ctx.global_dimension(kQ) == best, entry.name);
    }
  }
}

TEST_CASE("bounds reports") {
  SUBCASE("free band on two letters") {
    HomologyContext ctx(free_lrb({"a", "b"}));
    const BoundsReport report = ctx.bounds_report(kQ);
    CHECK(report.global_dimension == 1);
    CHECK(report.chain_bound == 2);
    CHECK(report.chain_bound_ok);
    REQUIRE(report.leray_bound.has_value());
    CHECK(report.leray_bound_ok);
  }
  SUBCASE("lattice bands have dimension zero") {
    HomologyContext ctx(lattice_as_lrb(FiniteLattice::power_set({"a", "b"})));
    const BoundsReport report = ctx.bounds_report(kQ);
    CHECK(report.global_dimension == 0);
    CHECK(report.chain_bound_ok);
    CHECK(report.leray_bound_ok);
  }
  SUBCASE("three lines meet the chain bound") {
    HomologyContext ctx(face_monoid_from_covectors(testing::fig2_covectors()));
    const BoundsReport report = ctx.bounds_report(kQ);
    CHECK(report.global_dimension == 2);
    CHECK(report.chain_bound == 2);
    CHECK(report.chain_bound_ok);
    REQUIRE(report.leray_bound.has_value());
    CHECK(*report.leray_bound == 2);
  }
  SUBCASE("oversized monoids skip the Leray bound with a notice") {
    HomologyContext ctx(free_partially_commutative(Graph::cycle(4)));
    const BoundsReport report = ctx.bounds_report(kQ, 16);
    CHECK_FALSE(report.leray_bound.has_value());
    CHECK(report.chain_bound_ok);
  }
}

TEST_CASE("right hereditary quivers") {
  SUBCASE("free band matches the component quiver") {
    HomologyContext ctx(free_lrb({"a", "b", "c"}));
    CHECK(ctx.right_hereditary_quiver() == ctx.quiver());
  }
  SUBCASE("Rhodes expansion of the three-chain") {
    HomologyContext ctx(rhodes_expansion(FiniteLattice::chain(3)));
    const QuiverDescription q = ctx.right_hereditary_quiver();
    CHECK(q == ctx.quiver());
    // one arrow from the bottom to the top, nothing else
    CHECK(q.total() == 1);
    CHECK(q.multiplicity(ctx.lattice().bottom, ctx.lattice().top) == 1);
  }
  SUBCASE("two-element band has no arrows") {
    HomologyContext ctx(free_lrb({"a"}));
    CHECK(ctx.right_hereditary_quiver().total() == 0);
  }
  SUBCASE("non-tree orders are rejected") {
    HomologyContext ctx(face_monoid_from_covectors(testing::fig2_covectors()));
    CHECK_THROWS_WITH_AS(ctx.right_hereditary_quiver(),
                         doctest::Contains("NotRightHereditary"), InvalidInput);
  }
}

TEST_CASE("geometric commutation checks") {
  SUBCASE("graph bands") {
    for (const Graph& g : {Graph::cycle(4), Graph::path(3)}) {
      HomologyContext ctx(free_partially_commutative(g));
      const GeometricCheckReport report = ctx.geometric_commutation_check(kQ);
      CHECK(report.equal);
      CHECK(report.clique_betti == reduced_betti(clique_complex(g), kQ));
    }
  }
  SUBCASE("three lines: both sides are circles") {
    HomologyContext ctx(face_monoid_from_covectors(testing::fig2_covectors()));
    const GeometricCheckReport report = ctx.geometric_commutation_check(kQ);
    CHECK(report.equal);
    CHECK(report.delta_betti.dim(0) == 0);
    CHECK(report.delta_betti.dim(1) == 1);
    CHECK(report.clique_betti.dim(1) == 1);
  }
  SUBCASE("free band on two letters: two points") {
    HomologyContext ctx(free_lrb({"a", "b"}));
    const GeometricCheckReport report = ctx.geometric_commutation_check(kQ);
    CHECK(report.equal);
    CHECK(report.delta_betti.dim(0) == 1);
  }
  SUBCASE("non-geometric bands are rejected") {
    HomologyContext ctx(complex_sign_monoid(1));
    CHECK_THROWS_WITH_AS(ctx.geometric_commutation_check(kQ),
                         doctest::Contains("NotGeometric"), InvalidInput);
  }
}

TEST_CASE("Ext vanishes beyond the chain bound") {
  for (const auto& entry : testing::structural_corpus()) {
    HomologyContext ctx(entry.monoid);
    const int bound = ctx.chain_bound();
    for (int X = 0; X < ctx.lattice().count; ++X) {
      for (int Y = 0; Y < ctx.lattice().count; ++Y) {
        const auto ext = ctx.ext_dims(X, Y, kQ, bound + 2);
        for (int n = bound + 1; n <= bound + 2; ++n) {
          CHECK(ext[static_cast<std::size_t>(n)] == 0);
        }
      }
    }
  }
}

TEST_CASE("graph bands: global dimension is the Leray number of the clique complex") {
  for (int n = 1; n <= 4; ++n) {
    for (const Graph& g : testing::all_graphs(n)) {
      HomologyContext ctx(free_partially_commutative(g));
      const long gldim = ctx.global_dimension(kQ);
      CHECK(gldim == leray_number_brute(clique_complex(g), kQ));
      // hereditary exactly for chordal graphs
      CHECK((gldim <= 1) == is_chordal(g).chordal);
    }
  }
}

TEST_CASE("graph bands: Ext dimensions come from induced clique complexes") {
  const std::vector<Graph> graphs = {Graph::cycle(4), Graph::path(4)};
  for (const Graph& g : graphs) {
    HomologyContext ctx(free_partially_commutative(g));
    const auto& lat = ctx.lattice();
    // lattice elements correspond to supports; recover the vertex subset
    auto vertex_set = [&](int X) {
      std::uint64_t mask = 0;
      const std::set<char> content = content_of(ctx, X);
      for (int v = 0; v < g.n; ++v) {
        if (content.count(g.label(v)[0])) mask |= 1ULL << v;
      }
      return mask;
    };
    for (int X = 0; X < lat.count; ++X) {
      for (int Y = 0; Y < lat.count; ++Y) {
        if (!lat.less(X, Y)) continue;
        const std::uint64_t difference = vertex_set(X) & ~vertex_set(Y);
        const BettiVector betti = reduced_betti(clique_complex(g.induced(difference)), kQ);
        const auto ext = ctx.ext_dims(X, Y, kQ, 3);
        for (int n = 1; n <= 3; ++n) {
          CHECK(ext[static_cast<std::size_t>(n)] == betti.dim(n - 1));
        }
      }
    }
  }
}
