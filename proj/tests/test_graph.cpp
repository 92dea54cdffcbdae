#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "chromafun/generators.hpp"
#include "chromafun/graph.hpp"
#include "support/oracles.hpp"

using namespace chromafun;

TEST_CASE("graph construction normalizes and validates") {
  FiniteGraph g(3, {{2, 0}, {0, 2}, {1, 2}});
  REQUIRE(g.edge_count() == 2);
  REQUIRE(g.has_edge(0, 2));
  REQUIRE(g.has_edge(2, 1));
  REQUIRE_FALSE(g.has_edge(0, 1));
  REQUIRE_THROWS_AS(FiniteGraph(2, {{0, 0}}), precondition_error);
  REQUIRE_THROWS_AS(FiniteGraph(2, {{0, 5}}), precondition_error);
}

TEST_CASE("complete graphs") {
  REQUIRE(complete_graph(0).vertex_count() == 0);
  REQUIRE(complete_graph(3).edge_count() == 3);
  REQUIRE(complete_graph(5).edge_count() == 10);
}

TEST_CASE("graph6 reference decodings") {
  // "A_" is K_2, "@" the 1-vertex graph, "Bw" the triangle.
  REQUIRE(parse_graph6("A_") == complete_graph(2));
  REQUIRE(parse_graph6("A?") == edgeless_graph(2));
  REQUIRE(parse_graph6("@") == edgeless_graph(1));
  REQUIRE(parse_graph6("Bw") == complete_graph(3));
  REQUIRE(parse_graph6(">>graph6<<Bw") == complete_graph(3));
  // Cross-check every 2- and 3-vertex code against the reference decoder.
  for (const std::string& code : {"A?", "A_", "B?", "BG", "BW", "Bw"}) {
    REQUIRE(parse_graph6(code) == oracle::tiny_graph6_reference(code));
  }
}

TEST_CASE("graph6 parse errors carry byte offsets") {
  REQUIRE_THROWS_AS(parse_graph6(""), parse_error);
  REQUIRE_THROWS_AS(parse_graph6("B"), parse_error);      // body too short
  REQUIRE_THROWS_AS(parse_graph6("Bw?"), parse_error);    // body too long
  REQUIRE_THROWS_AS(parse_graph6("A\x1f"), parse_error);  // byte out of range
  // 2 vertices need 1 bit; the remaining 5 padding bits must be zero.
  REQUIRE_THROWS_AS(parse_graph6("AO"), parse_error);
  try {
    parse_graph6("AO");
  } catch (const parse_error& e) {
    REQUIRE(e.byte_offset() == 1);
  }
}

TEST_CASE("graph6 round trip: exhaustive small, sampled larger") {
  for (int n = 0; n <= 5; ++n) {
    for_each_labeled_graph(n, [&](const FiniteGraph& g) {
      REQUIRE(parse_graph6(emit_graph6(g)) == g);
    });
  }
  std::mt19937 rng(20240817);
  for (int n = 6; n <= 8; ++n) {
    for (int trial = 0; trial < 600; ++trial) {
      FiniteGraph g = random_graph(rng, n, 0.4);
      REQUIRE(parse_graph6(emit_graph6(g)) == g);
    }
  }
  // A couple of sizes beyond the one-byte count encoding.
  for (int n : {63, 100}) {
    std::vector<Edge> edges;
    for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    FiniteGraph g(n, std::move(edges));
    REQUIRE(parse_graph6(emit_graph6(g)) == g);
  }
}

TEST_CASE("homomorphism validation") {
  FiniteGraph k3 = complete_graph(3);
  GraphHom identity{k3, k3, {0, 1, 2}};
  REQUIRE(validate_hom(identity));
  REQUIRE(is_surjective_hom(identity));

  FiniteGraph k2 = complete_graph(2);
  GraphHom collapse{k2, k2, {0, 0}};
  REQUIRE_FALSE(validate_hom(collapse));

  GraphHom bad{k2, k2, {0, 7}};
  REQUIRE_THROWS_AS(validate_hom(bad), precondition_error);

  FiniteGraph p3 = path_graph(3);
  GraphHom fold{p3, k2, {0, 1, 0}};
  REQUIRE(validate_hom(fold));
  REQUIRE(is_surjective_hom(fold));

  GraphHom inclusion{k2, k3, {0, 1}};
  REQUIRE(validate_hom(inclusion));
  REQUIRE_FALSE(is_surjective_hom(inclusion));

  // Proper 2-colorings of P_3 are exactly the valid maps into K_2.
  int valid = 0;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c) {
        GraphHom h{p3, k2, {a, b, c}};
        if (validate_hom(h)) ++valid;
      }
  REQUIRE(valid == oracle::count_proper_colorings(p3, 2));
}

TEST_CASE("homomorphisms compose") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    FiniteGraph a = random_graph(rng, 4, 0.5);
    FiniteGraph b = complete_graph(4);
    // a -> K_4 via any injective vertex map is a hom; K_4 -> K_4 via a
    // permutation is a hom; their composite must validate.
    std::vector<int> perm{0, 1, 2, 3};
    std::shuffle(perm.begin(), perm.end(), rng);
    GraphHom first{a, b, {perm[0], perm[1], perm[2], perm[3]}};
    std::shuffle(perm.begin(), perm.end(), rng);
    GraphHom second{b, b, perm};
    REQUIRE(validate_hom(first));
    REQUIRE(validate_hom(second));
    REQUIRE(validate_hom(compose_hom(first, second)));
  }
}

TEST_CASE("adjacency distance") {
  FiniteGraph p4 = path_graph(4);
  REQUIRE(adjacency_distance(p4, 0, 0) == 0);
  REQUIRE(adjacency_distance(p4, 0, 3) == 3);
  FiniteGraph isolated(2, {});
  REQUIRE_FALSE(adjacency_distance(isolated, 0, 1).has_value());
}

TEST_CASE("triangle inequality on connected graphs") {
  auto check = [](const FiniteGraph& g) {
    if (!is_connected(g) || g.vertex_count() == 0) return;
    std::vector<std::vector<int>> dist;
    for (int v = 0; v < g.vertex_count(); ++v) dist.push_back(bfs_distances(g, v));
    for (int u = 0; u < g.vertex_count(); ++u)
      for (int v = 0; v < g.vertex_count(); ++v)
        for (int w = 0; w < g.vertex_count(); ++w) {
          REQUIRE(dist[u][w] <= dist[u][v] + dist[v][w]);
        }
  };
  for (int n = 1; n <= 5; ++n) for_each_labeled_graph(n, check);
  std::mt19937 rng(99);
  for (int trial = 0; trial < 150; ++trial) check(random_graph(rng, 8, 0.4));
}

TEST_CASE("odd cycles against the brute-force 2-coloring oracle") {
  REQUIRE(has_odd_cycle(complete_graph(3)));
  REQUIRE_FALSE(has_odd_cycle(path_graph(5)));
  REQUIRE_FALSE(has_odd_cycle(cycle_graph(4)));
  REQUIRE(has_odd_cycle(cycle_graph(5)));
  for (int n = 0; n <= 5; ++n) {
    for_each_labeled_graph(n, [&](const FiniteGraph& g) {
      REQUIRE(has_odd_cycle(g) == !oracle::two_colorable_bruteforce(g));
    });
  }
  std::mt19937 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    FiniteGraph g = random_graph(rng, 8, 0.3);
    REQUIRE(has_odd_cycle(g) == !oracle::two_colorable_bruteforce(g));
  }
}

TEST_CASE("injections validate and compose") {
  REQUIRE_THROWS_AS(Injection(2, 1, {0, 0}), precondition_error);
  REQUIRE_THROWS_AS(Injection(2, 3, {1, 1}), precondition_error);
  Injection f(2, 3, {2, 0});
  Injection g(3, 4, {1, 3, 0});
  Injection fg = compose_injection(f, g);
  REQUIRE(fg.map == std::vector<int>{0, 1});
}

TEST_CASE("trees from Pruefer sequences are trees") {
  std::mt19937 rng(11);
  for (int n = 3; n <= 8; ++n) {
    for (int trial = 0; trial < 100; ++trial) {
      std::vector<int> seq(n - 2);
      for (int& s : seq) s = std::uniform_int_distribution<int>(0, n - 1)(rng);
      FiniteGraph t = tree_from_prufer(seq);
      REQUIRE(t.vertex_count() == n);
      REQUIRE(t.edge_count() == n - 1);
      REQUIRE(is_connected(t));
    }
  }
}
