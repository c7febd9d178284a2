#include <doctest.h>

#include "d2tf/constructions.hpp"
#include "d2tf/graph.hpp"
#include "test_helpers.hpp"

using namespace d2tf;
namespace th = d2tf::testing;

TEST_CASE("distances") {
    CHECK(distances_from(th::cycle(5), 0) == std::vector<int>{0, 1, 2, 2, 1});
    CHECK(distances_from(th::star(4), 0) == std::vector<int>{0, 1, 1, 1, 1});
    const Graph two_edges(4, {{0, 1}, {2, 3}});
    CHECK(distances_from(two_edges, 0) == std::vector<int>{0, 1, kUnreachable, kUnreachable});
}

TEST_CASE("diameter") {
    CHECK(diameter(th::cycle(5)) == 2);
    CHECK(diameter(named_graph("hoffman_singleton")) == 2);
    CHECK(diameter(th::path(4)) == 3);
    CHECK(diameter(Graph(1)) == 0);
    CHECK_FALSE(diameter(Graph(3, {{0, 1}})).has_value());
}

TEST_CASE("common neighbours") {
    const Graph pet = named_graph("petersen");
    int checked = 0;
    for (int u = 0; u < 10; ++u)
        for (int v = u + 1; v < 10; ++v)
            if (!pet.adjacent(u, v)) {
                CHECK(common_neighbours(pet, u, v).count(pet.words()) == 1);
                ++checked;
            }
    CHECK(checked == 30);

    const Graph k23 = th::complete_bipartite(2, 3);
    CHECK(common_neighbours(k23, 0, 1).count(k23.words()) == 3);

    const Graph clebsch = named_graph("clebsch");
    for (int v = 1; v < 16; ++v)
        if (!clebsch.adjacent(0, v)) CHECK(common_neighbours(clebsch, 0, v).count(1) == 2);
}

TEST_CASE("induced subgraphs") {
    const Graph pet = named_graph("petersen");
    CHECK(induced_subgraph(pet, {0, 1, 2, 3, 4}) == th::cycle(5));
    std::vector<int> all(10);
    for (int i = 0; i < 10; ++i) all[i] = i;
    CHECK(induced_subgraph(pet, all) == pet);
    CHECK_THROWS(induced_subgraph(pet, {}));
}

TEST_CASE("builder and immutable ops") {
    const Graph c4 = th::cycle(4);
    const Graph with_chord = c4.with_edge(0, 2);
    CHECK(c4.edge_count() == 4);
    CHECK(with_chord.edge_count() == 5);
    CHECK(with_chord.without_edge(0, 2) == c4);
    CHECK_THROWS(c4.with_edge(0, 0));
    CHECK_THROWS(Graph(0));
    CHECK_THROWS(Graph(513));
}
