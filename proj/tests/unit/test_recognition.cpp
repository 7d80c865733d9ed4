#include <doctest.h>

#include <algorithm>
#include <random>

#include "ecd/connectivity.hpp"
#include "ecd/embedding.hpp"
#include "ecd/errors.hpp"
#include "ecd/minor.hpp"
#include "ecd/necklace.hpp"
#include "ecd/recognition.hpp"
#include "ecd/signing.hpp"
#include "graphs.hpp"
#include "oracles.hpp"

using namespace ecd;
using namespace ecd::testing;

namespace {

// Rotation that lists darts in edge order at every vertex; planar for a cycle.
Embedding edge_order_rotation(const SignedGraph& g) {
  Embedding emb;
  emb.rotation.resize(static_cast<std::size_t>(g.num_vertices()));
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    emb.rotation[g.edge(e).u].push_back(dart_of(e, 0));
    emb.rotation[g.edge(e).v].push_back(dart_of(e, 1));
  }
  return emb;
}

SignedGraph random_graph(std::mt19937_64& rng, int n, int m) {
  SignedGraph g(n);
  for (int i = 0; i < m; ++i) {
    const int u = static_cast<int>(rng() % n), v = static_cast<int>(rng() % n);
    if (u != v) g.add_edge(u, v, rng() % 2 == 1);
  }
  return g;
}

}  // namespace

TEST_CASE("almost_bipartite_witness") {
  CHECK(almost_bipartite_witness(cycle_graph(4, false)) == 0);
  CHECK_FALSE(almost_bipartite_witness(k32_tilde()).has_value());
  // Hub 4 joined to each vertex of an all-even 4-cycle by an odd digon.
  const auto wheel = make_graph(5, {{0, 1, 0}, {1, 2, 0}, {2, 3, 0}, {3, 0, 0}, {4, 0, 1}, {4, 0, 0},
                                    {4, 1, 1}, {4, 1, 0}, {4, 2, 1}, {4, 2, 0}, {4, 3, 1}, {4, 3, 0}});
  const auto w = almost_bipartite_witness(wheel);
  REQUIRE(w.has_value());
  CHECK(*w == 4);
  // Only the hub works, by direct deletion.
  for (VertexId v = 0; v < 5; ++v) {
    SignedGraph rest(5);
    for (const Edge& e : wheel.edges()) {
      if (e.u != v && e.v != v) rest.add_edge(e.u, e.v, e.odd);
    }
    CHECK(brute_bipartite(rest) == (v == 4));
  }
}

TEST_CASE("is_k32_tilde") {
  CHECK(is_k32_tilde(k32_tilde()));
  CHECK_FALSE(is_k32_tilde(cycle_graph(3, true)));
  CHECK_FALSE(is_k32_tilde(make_graph(3, {{0, 1, 1}, {0, 1, 1}, {1, 2, 1}, {1, 2, 0}, {0, 2, 1}, {0, 2, 0}})));
}

TEST_CASE("faces_and_parities") {
  const auto even = cycle_graph(3, false);
  const auto f = faces_and_parities(even, edge_order_rotation(even));
  REQUIRE(f.size() == 2);
  CHECK(count_odd_faces(f) == 0);
  const auto odd = cycle_graph(3, true);
  const auto h = faces_and_parities(odd, edge_order_rotation(odd));
  REQUIRE(h.size() == 2);
  CHECK(count_odd_faces(h) == 2);
  CHECK(is_planar_embedding(odd, edge_order_rotation(odd)));
  Embedding broken = edge_order_rotation(odd);
  broken.rotation[0].pop_back();
  CHECK_THROWS_AS(faces_and_parities(odd, broken), PreconditionError);
}

TEST_CASE("find_two_odd_face_embedding") {
  const auto oct = octahedron_two_odd();
  const auto emb = find_two_odd_face_embedding(oct);
  REQUIRE(emb.has_value());
  CHECK(is_planar_embedding(oct, *emb));
  const auto faces = faces_and_parities(oct, *emb);
  CHECK(faces.size() == 8);
  CHECK(count_odd_faces(faces) == 2);
  for (const Face& face : faces) {
    CHECK(face.edges.size() == 3);
    CHECK(face.odd == odd_parity(oct, face.edges));
  }

  const std::vector<VertexId> x{1, 4};
  const auto k24 = switch_signs(make_graph(6, {{0, 2, 0}, {2, 1, 0}, {0, 3, 0}, {3, 1, 0},
                                               {0, 4, 0}, {4, 1, 0}, {0, 5, 0}, {5, 1, 0}}), x);
  const auto bip = find_two_odd_face_embedding(k24);
  REQUIRE(bip.has_value());
  CHECK(count_odd_faces(faces_and_parities(k24, *bip)) == 0);

  CHECK_FALSE(find_two_odd_face_embedding(complete_graph(4, true)).has_value());
}

TEST_CASE("odd_minor on named graphs") {
  const auto k4 = complete_graph(4, true);
  const auto r = odd_minor(k4, MinorTarget::K4);
  REQUIRE(r.outcome == MinorOutcome::Found);
  REQUIRE(r.model.has_value());
  for (const auto& b : r.model->branch_sets) CHECK(b.size() == 1);
  CHECK(r.model->switching.empty());
  CHECK(check_minor_model(k4, *r.model, MinorTarget::K4).empty());
  CHECK(brute_check_model(k4, r.model->branch_sets, r.model->branch_trees, r.model->connectors,
                          r.model->switching)
            .empty());

  CHECK(odd_minor(k32_tilde(), MinorTarget::K4).outcome == MinorOutcome::Absent);
  CHECK(odd_minor(cycle_graph(6, false), MinorTarget::K3).outcome == MinorOutcome::Absent);
  CHECK(odd_minor(cycle_graph(3, true), MinorTarget::K3).outcome == MinorOutcome::Found);
  CHECK(odd_minor(complete_graph(5, true), MinorTarget::K5).outcome == MinorOutcome::Found);
}

TEST_CASE("check_minor_model rejects broken certificates") {
  const auto k4 = complete_graph(4, true);
  auto m = *odd_minor(k4, MinorTarget::K4).model;
  MinorModel even_connector = m;
  even_connector.switching = {0};
  CHECK_FALSE(check_minor_model(k4, even_connector, MinorTarget::K4).empty());
  MinorModel overlap = m;
  overlap.branch_sets[1] = overlap.branch_sets[0];
  CHECK_FALSE(check_minor_model(k4, overlap, MinorTarget::K4).empty());
}

TEST_CASE("odd_minor agrees with brute force") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 4 + static_cast<int>(rng() % 2);
    const auto g = random_graph(rng, n, 5 + static_cast<int>(rng() % 6));
    for (MinorTarget t : {MinorTarget::K3, MinorTarget::K4}) {
      const auto r = odd_minor(g, t);
      REQUIRE(r.outcome != MinorOutcome::Unknown);
      CHECK((r.outcome == MinorOutcome::Found) == brute_has_odd_minor(g, static_cast<int>(t)));
      if (r.model) {
        CHECK(brute_check_model(g, r.model->branch_sets, r.model->branch_trees, r.model->connectors,
                                r.model->switching)
                  .empty());
      }
    }
  }
}

TEST_CASE("find_albatrosses") {
  const auto pair = make_graph(3, {{0, 1, 1}, {0, 1, 0}, {1, 2, 1}, {1, 2, 0}});
  const auto one = find_albatrosses(pair);
  REQUIRE(one.size() == 1);
  CHECK(one[0].center == 1);
  CHECK(one[0].edges == std::vector<EdgeId>{0, 1, 2, 3});
  CHECK(find_albatrosses(k32_tilde()).size() == 3);
  const auto chain = make_graph(4, {{0, 1, 1}, {0, 1, 0}, {1, 2, 1}, {1, 2, 0}, {2, 3, 1}, {2, 3, 0}});
  const auto two = find_albatrosses(chain);
  REQUIRE(two.size() == 2);
  CHECK(two[0].center == 1);
  CHECK(two[1].center == 2);
  CHECK(is_albatross_shape(chain, two[0].edges));
  CHECK_FALSE(is_albatross_shape(chain, std::vector<EdgeId>{0, 1, 4, 5}));
}

TEST_CASE("is_almost_3_connected") {
  CHECK(is_almost_3_connected(complete_graph(5, false)).holds);
  const auto squares = is_almost_3_connected(two_squares());
  CHECK_FALSE(squares.holds);
  REQUIRE(squares.violation.has_value());
  CHECK(squares.violation->boundary == std::vector<VertexId>{0, 2});

  // In the four-cycle-with-two-digons triangle, the pair {0, 2} cuts off the
  // two-edge path 0-1-2; neither side has four edges, so no side is an
  // albatross and the property fails.
  const auto square = bermuda_square();
  const auto s = make_separation(square, std::vector<EdgeId>{0, 1});
  CHECK(s.proper);
  CHECK(s.order == 2);
  CHECK(s.left.size() != 4);
  CHECK(s.right.size() != 4);
  CHECK_FALSE(is_almost_3_connected(square).holds);
  CHECK_THROWS_AS(is_almost_3_connected(make_graph(3, {{0, 1, 0}, {1, 2, 0}})), PreconditionError);
}

TEST_CASE("structure_classify") {
  CHECK(structure_classify(cycle_graph(4, false)).kind == CaseKind::AlmostBipartite);
  CHECK(structure_classify(k32_tilde()).kind == CaseKind::IsK32);
  CHECK(structure_classify(make_graph(3, {{0, 1, 0}, {1, 2, 0}})).kind == CaseKind::NotTwoConnected);

  // Two copies of K32-tilde glued on the vertices 0 and 1.
  const auto glued = make_graph(4, {{0, 1, 1}, {0, 1, 0}, {1, 2, 1}, {1, 2, 0}, {0, 2, 1}, {0, 2, 0},
                                    {0, 1, 1}, {0, 1, 0}, {1, 3, 1}, {1, 3, 0}, {0, 3, 1}, {0, 3, 0}});
  CHECK(odd_minor(glued, MinorTarget::K4).outcome == MinorOutcome::Absent);
  const auto c = structure_classify(glued);
  CHECK(c.kind == CaseKind::TwoSeparation);
  REQUIRE(c.separation.has_value());
  CHECK(c.separation->order == 2);

  const auto oct = structure_classify(octahedron_two_odd());
  CHECK(oct.kind == CaseKind::AlmostBipartite);
  CHECK(oct.apex == 0);
}

TEST_CASE("necklace") {
  const auto sq = two_squares();
  const auto s = make_separation(sq, std::vector<EdgeId>{0, 1, 2, 3});
  const auto n2 = necklace(sq, s);
  CHECK(n2.beads.size() == 2);
  CHECK(check_necklace(sq, s, n2).empty());

  const auto square = bermuda_square();
  const auto s4 = make_separation(square, std::vector<EdgeId>{0, 1, 2, 3});
  const auto n3 = necklace(square, s4);
  REQUIRE(n3.beads.size() == 3);
  CHECK(check_necklace(square, s4, n3).empty());
  CHECK(n3.beads[0] == std::vector<EdgeId>{0, 1, 2, 3});
  CHECK(is_odd_digon(square, n3.beads[1]));
  CHECK(is_odd_digon(square, n3.beads[2]));

  // Left side: triangles 0-2-3 and 3-4-1 meeting at the cut vertex 3.
  const auto fig8 = make_graph(7, {{0, 2, 0}, {2, 3, 0}, {3, 0, 0}, {3, 4, 0}, {4, 1, 0}, {1, 3, 0},
                                   {0, 5, 0}, {5, 1, 0}, {1, 6, 0}, {6, 0, 0}});
  const auto s8 = make_separation(fig8, std::vector<EdgeId>{0, 1, 2, 3, 4, 5});
  REQUIRE(s8.parity == SeparationParity::Even);
  const auto n8 = necklace(fig8, s8);
  CHECK(n8.beads.size() == 3);
  CHECK(n8.split_index == 2);
  CHECK(check_necklace(fig8, s8, n8).empty());

  Necklace bad = n3;
  std::swap(bad.beads[0], bad.beads[1]);
  CHECK_FALSE(check_necklace(square, s4, bad).empty());
  CHECK_THROWS_AS(necklace(square, make_separation(square, std::vector<EdgeId>{0, 1})), PreconditionError);
}

TEST_CASE("odd digon predicates") {
  const auto d = make_graph(2, {{0, 1, 1}, {0, 1, 0}, {0, 1, 1}});
  CHECK(is_odd_digon(d, std::vector<EdgeId>{0, 1}));
  CHECK_FALSE(is_odd_digon(d, std::vector<EdgeId>{0, 2}));
  CHECK(is_signed_subgraph_of_odd_digon(d, std::vector<EdgeId>{0}));
  CHECK_FALSE(is_signed_subgraph_of_odd_digon(d, std::vector<EdgeId>{0, 2}));
}

TEST_CASE("is_bermuda") {
  const auto square = bermuda_square();
  const auto w = is_bermuda(square);
  REQUIRE(w.has_value());
  CHECK(w->beads.size() == 3);
  CHECK_FALSE(is_bermuda(two_squares()).has_value());
  CHECK_THROWS_AS(is_bermuda(complete_graph(5, false)), PreconditionError);
}
