#include <doctest.h>

#include <algorithm>
#include <random>

#include "ecd/connectivity.hpp"
#include "ecd/errors.hpp"
#include "ecd/graph_io.hpp"
#include "ecd/signing.hpp"
#include "ecd/surgery.hpp"
#include "graphs.hpp"
#include "oracles.hpp"

using namespace ecd;
using namespace ecd::testing;

TEST_CASE("graph container keeps ids and incidence") {
  SignedGraph g(3);
  CHECK(g.add_edge(0, 1, true) == 0);
  CHECK(g.add_edge(1, 2, false) == 1);
  CHECK(g.add_edge(1, 1, false) == 2);
  CHECK(g.incident(1) == std::vector<EdgeId>{0, 1, 2, 2});
  CHECK(g.degree(1) == 4);
  CHECK(g.signature() == std::vector<EdgeId>{0});
  CHECK(g.add_vertex() == 3);
  CHECK(g.support() == std::vector<VertexId>{0, 1, 2});
  CHECK_THROWS_AS(g.add_edge(0, 7, false), PreconditionError);
}

TEST_CASE("text and json round trips") {
  const SignedGraph g = k32_tilde();
  CHECK(parse_graph_text(format_graph_text(g)) == g);
  CHECK(parse_graph_json(format_graph_json(g)) == g);
  CHECK(parse_graph(format_graph_json(g)) == g);
  CHECK(parse_graph("2 1\n\n0 1 1\n") == make_graph(2, {{0, 1, 1}}));
}

TEST_CASE("parse errors carry line numbers") {
  try {
    parse_graph_text("3 2\n0 1 0\n0 9 1\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
  CHECK_THROWS_AS(parse_graph_text("2 1\n0 1 2\n"), ParseError);
  CHECK_THROWS_AS(parse_graph_text("2 2\n0 1 0\n"), ParseError);
  CHECK_THROWS_AS(parse_graph_json("{\"n\": 2, \"edges\": [[0, 1]]}"), ParseError);
  CHECK_THROWS_AS(read_graph_file("/nonexistent/graph.sg"), FileError);
}

TEST_CASE("validate_instance") {
  const auto k = validate_instance(k32_tilde());
  CHECK(k.eulerian);
  CHECK(k.two_connected);
  CHECK_FALSE(k.signature_even);
  CHECK_FALSE(k.admissible);
  CHECK(validate_instance(SignedGraph{}).admissible);
  CHECK(validate_instance(cycle_graph(4, false)).admissible);
  // Two odd digons sharing a vertex: the center is a cut vertex.
  const auto bowtie = make_graph(3, {{0, 1, 1}, {0, 1, 0}, {1, 2, 1}, {1, 2, 0}});
  CHECK_FALSE(validate_instance(bowtie).two_connected);
  CHECK_FALSE(validate_instance(bowtie).admissible);
  CHECK_FALSE(validate_instance(make_graph(2, {{0, 0, 0}, {0, 1, 0}, {0, 1, 0}})).loopless);
}

TEST_CASE("switch_signs") {
  const SignedGraph g = k32_tilde();
  CHECK(switch_signs(g, {}) == g);
  const std::vector<VertexId> all{0, 1, 2};
  CHECK(switch_signs(g, all) == g);
  const auto d = make_graph(2, {{0, 1, 1}, {0, 1, 0}});
  const std::vector<VertexId> x{0};
  const auto s = switch_signs(d, x);
  CHECK_FALSE(s.is_odd(0));
  CHECK(s.is_odd(1));
  const std::vector<VertexId> bad{5};
  CHECK_THROWS_AS(switch_signs(d, bad), PreconditionError);
}

TEST_CASE("signatures_equivalent") {
  const auto d = make_graph(2, {{0, 1, 1}, {0, 1, 0}});
  const auto same = signatures_equivalent(d, d.signature());
  CHECK(same.equivalent);
  CHECK(same.switching.empty());
  const std::vector<EdgeId> other{1};
  const auto r = signatures_equivalent(d, other);
  CHECK(r.equivalent);
  CHECK(r.switching == std::vector<VertexId>{1});
  CHECK(switch_signs(d, r.switching).signature() == other);

  // All-odd triangle against all-even: checked over all 8 switchings.
  const auto tri = cycle_graph(3, true);
  const std::vector<EdgeId> none;
  const auto t = signatures_equivalent(tri, none);
  CHECK_FALSE(t.equivalent);
  CHECK(is_cycle(tri, t.refuting_cycle));
  for (int mask = 0; mask < 8; ++mask) {
    std::vector<VertexId> x;
    for (int v = 0; v < 3; ++v) {
      if (mask >> v & 1) x.push_back(v);
    }
    CHECK_FALSE(switch_signs(tri, x).signature().empty());
  }
}

TEST_CASE("cycle_parity and is_cycle") {
  const std::vector<EdgeId> c4{0, 1, 2, 3};
  CHECK(cycle_parity(cycle_graph(4, false), c4) == Parity::Even);
  const auto d = make_graph(2, {{0, 1, 1}, {0, 1, 0}});
  const std::vector<EdgeId> both{0, 1};
  CHECK(cycle_parity(d, both) == Parity::Odd);
  const auto pair = make_graph(2, {{0, 1, 1}, {0, 1, 1}});
  CHECK(cycle_parity(pair, both) == Parity::Even);
  const std::vector<EdgeId> partial{0, 1};
  CHECK_FALSE(is_cycle(cycle_graph(4, false), partial));
  CHECK_THROWS_AS(cycle_parity(cycle_graph(4, false), partial), PreconditionError);
  const std::vector<EdgeId> repeated{0, 0};
  CHECK_FALSE(is_cycle(d, repeated));
  CHECK(order_cycle(cycle_graph(4, false), std::vector<EdgeId>{3, 1, 2, 0}) == c4);
}

TEST_CASE("is_bipartite_signed") {
  const auto path = make_graph(3, {{0, 1, 0}, {1, 2, 0}});
  const auto p = is_bipartite_signed(path);
  CHECK(p.bipartite);
  CHECK(p.switching.empty());
  const auto d = make_graph(2, {{0, 1, 1}, {0, 1, 0}});
  const auto r = is_bipartite_signed(d);
  CHECK_FALSE(r.bipartite);
  std::vector<EdgeId> w = r.odd_cycle;
  std::sort(w.begin(), w.end());
  CHECK(w == std::vector<EdgeId>{0, 1});
  const auto k4 = complete_graph(4, true);
  const auto q = is_bipartite_signed(k4);
  CHECK_FALSE(q.bipartite);
  CHECK(cycle_parity(k4, q.odd_cycle) == Parity::Odd);
  // Agrees with cycle enumeration on switched even cycles.
  const std::vector<VertexId> x{1, 3};
  const auto c6 = switch_signs(cycle_graph(6, false), x);
  const auto b = is_bipartite_signed(c6);
  CHECK(b.bipartite == brute_bipartite(c6));
  CHECK(switch_signs(c6, b.switching).signature().empty());
}

TEST_CASE("disjoint_signature") {
  const auto k4 = complete_graph(4, true);
  CHECK(signatures_equivalent(k4, disjoint_signature(k4, {})).equivalent);
  // Cuts of an Eulerian graph are even, so |signature| keeps its parity.
  const auto k5 = complete_graph(5, true);
  CHECK(disjoint_signature(k5, std::vector<EdgeId>{0, 4}).size() % 2 == 0);
  const auto d = make_graph(2, {{0, 1, 1}, {0, 1, 0}});
  const std::vector<EdgeId> f{0};
  CHECK(disjoint_signature(d, f) == std::vector<EdgeId>{1});
  const std::vector<EdgeId> tree{0, 1, 2};  // star at vertex 0
  const auto sigma = disjoint_signature(k4, tree);
  for (EdgeId e : tree) CHECK(std::find(sigma.begin(), sigma.end(), e) == sigma.end());
  CHECK(signatures_equivalent(k4, sigma).equivalent);
  // Every cycle keeps its parity under the new signature.
  SignedGraph resigned = k4;
  for (EdgeId e = 0; e < k4.num_edges(); ++e) {
    resigned.set_sign(e, std::find(sigma.begin(), sigma.end(), e) != sigma.end());
  }
  for (const auto& c : all_cycles(k4)) CHECK(odd_parity(k4, c) == odd_parity(resigned, c));
  const std::vector<EdgeId> cyc{0, 1, 3};  // 0-1, 0-2, 1-2
  CHECK_THROWS_AS(disjoint_signature(k4, cyc), PreconditionError);
}

TEST_CASE("enumerate_separations") {
  const auto c4 = cycle_graph(4, false);
  const auto proper = enumerate_separations(c4, 2, true);
  REQUIRE(proper.size() == 2);
  CHECK(proper[0].boundary == std::vector<VertexId>{0, 2});
  CHECK(proper[1].boundary == std::vector<VertexId>{1, 3});
  for (const auto& s : proper) CHECK(s.parity == SeparationParity::Odd);
  CHECK(enumerate_separations(c4, 2, false).size() > proper.size());
  CHECK(enumerate_separations(complete_graph(4, false), 2, true).empty());

  const auto bowtie = make_graph(5, {{0, 1, 0}, {1, 2, 0}, {2, 0, 0}, {2, 3, 0}, {3, 4, 0}, {4, 2, 0}});
  const auto cut = enumerate_separations(bowtie, 1, true);
  REQUIRE(cut.size() == 1);
  CHECK(cut[0].boundary == std::vector<VertexId>{2});

  // Proper 2-separations exist exactly when the brute search finds a split pair.
  for (const SignedGraph& g : {c4, complete_graph(4, false), two_squares(), bermuda_square(), k32_tilde()}) {
    bool any = false;
    for (const auto& s : enumerate_separations(g, 2, true)) any = any || s.order == 2;
    CHECK(any == brute_has_proper_2sep(g));
  }
}

TEST_CASE("make_separation parity") {
  const auto g = two_squares();
  const std::vector<EdgeId> left{0, 1, 2, 3};
  const auto s = make_separation(g, left);
  CHECK(s.order == 2);
  CHECK(s.proper);
  CHECK(s.parity == SeparationParity::Even);
  const std::vector<EdgeId> none;
  CHECK_THROWS_AS(make_separation(g, none), PreconditionError);
}

TEST_CASE("blocks and two-connectivity") {
  const auto bowtie = make_graph(5, {{0, 1, 0}, {1, 2, 0}, {2, 0, 0}, {2, 3, 0}, {3, 4, 0}, {4, 2, 0}});
  const auto b = blocks(bowtie);
  REQUIRE(b.size() == 2);
  CHECK(b[0] == std::vector<EdgeId>{0, 1, 2});
  CHECK(b[1] == std::vector<EdgeId>{3, 4, 5});
  CHECK(blocks(complete_graph(4, false)).size() == 1);
  CHECK(blocks(make_graph(4, {{0, 1, 0}, {1, 2, 0}, {2, 3, 0}})).size() == 3);
  CHECK(cut_vertices(bowtie) == std::vector<VertexId>{2});

  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 6);
    const int m = static_cast<int>(rng() % 12);
    SignedGraph g(n);
    for (int i = 0; i < m; ++i) {
      const int u = static_cast<int>(rng() % n), v = static_cast<int>(rng() % n);
      if (u != v) g.add_edge(u, v, rng() % 2 == 1);
    }
    CHECK(is_two_connected(g) == brute_two_connected(g));
  }
}

TEST_CASE("subdivide_even") {
  const auto odd = cycle_graph(3, true);
  const auto same = subdivide_even(odd);
  CHECK(same.graph == odd);
  const auto one = subdivide_even(make_graph(2, {{0, 1, 0}}));
  CHECK(one.graph.num_edges() == 2);
  CHECK(one.graph.signature_size() == 2);
  CHECK(one.map.lift(std::vector<EdgeId>{0, 1}) == std::vector<EdgeId>{0});
  const auto c4 = subdivide_even(cycle_graph(4, false));
  CHECK(c4.graph.num_edges() == 8);
  CHECK(c4.graph.signature_size() == 8);
  CHECK(c4.graph.num_vertices() == 8);
  CHECK(is_cycle(c4.graph, all_edges(c4.graph)));
}

TEST_CASE("suppress_degree2") {
  const auto path = make_graph(3, {{0, 1, 1}, {1, 2, 0}});
  const auto p = suppress_degree2(path);
  REQUIRE(p.graph.num_edges() == 1);
  CHECK(p.graph.edge(0).u + p.graph.edge(0).v == 2);
  CHECK(p.graph.is_odd(0));
  CHECK(p.map.lift(std::vector<EdgeId>{0}) == std::vector<EdgeId>{0, 1});

  // Six suppressions leave a 2-cycle; each edge carries the parity of the
  // path it replaces, so the 2-cycle is even.
  const auto c8 = cycle_graph(8, true);
  const auto s = suppress_degree2(c8);
  REQUIRE(s.graph.num_edges() == 2);
  CHECK(s.graph.num_support_vertices() == 2);
  for (EdgeId e = 0; e < 2; ++e) {
    const auto src = s.map.lift(std::vector<EdgeId>{e});
    CHECK(s.graph.is_odd(e) == odd_parity(c8, src));
  }
  CHECK(cycle_parity(s.graph, std::vector<EdgeId>{0, 1}) == Parity::Even);
  CHECK(s.map.lift(std::vector<EdgeId>{0, 1}) == all_edges(c8));

  const auto k5 = complete_graph(5, false);
  CHECK(suppress_degree2(k5).graph == k5);
  CHECK_THROWS_AS(suppress_degree2(make_graph(2, {{0, 0, 0}, {0, 1, 0}, {0, 1, 0}})), PreconditionError);
}

TEST_CASE("switching preserves every cycle parity") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    SignedGraph g(6);
    for (int i = 0; i < 10; ++i) {
      const int u = static_cast<int>(rng() % 6), v = static_cast<int>(rng() % 6);
      if (u != v) g.add_edge(u, v, rng() % 2 == 1);
    }
    std::vector<VertexId> x;
    for (int v = 0; v < 6; ++v) {
      if (rng() % 2) x.push_back(v);
    }
    const auto h = switch_signs(g, x);
    for (const auto& c : all_cycles(g)) CHECK(odd_parity(g, c) == odd_parity(h, c));
  }
}
