#include "ddimer/graph.hpp"
#include "ddimer/instances.hpp"
#include "doctest.h"

using namespace ddimer;

namespace {

const char* kSingleEdge =
    "# smallest valid graph\n"
    "vertex 1 B 0 0\n"
    "vertex 2 W 1 0\n"
    "edge 1 2 3/2\n"
    "nodes 1 2\n";

}  // namespace

TEST_CASE("parse single edge") {
    EmbeddedGraph g = parse_graph(kSingleEdge);
    CHECK(g.num_vertices() == 2);
    CHECK(g.edges.size() == 1);
    CHECK(g.edges[0].weight == Rat(3, 2));
    CHECK(g.nodes == std::vector<int>{1, 2});
    CHECK(g.node_coloring().str() == "BW");
}

TEST_CASE("the 8x8 demo fixture") {
    EmbeddedGraph demo = demo8x8_graph();
    CHECK(demo.num_vertices() == 64);
    CHECK(demo.num_nodes() == 8);
    long black = 0;
    for (const Vertex& v : demo.vertices)
        if (v.color == Color::Black) ++black;
    CHECK(black == 32);
    CHECK(demo.node_coloring().str() == "BWBWBWBW");
    CHECK(demo.rgb == RgbSplit{3, 3, 2});

    // file format round-trip
    EmbeddedGraph again = parse_graph(serialize(demo));
    CHECK(serialize(again) == serialize(demo));
}

TEST_CASE("parse rejects malformed input") {
    CHECK_THROWS_AS(parse_graph("vertex 1 B 0 0\nvertex 2 B 1 0\nedge 1 2 1\nnodes 1 2\n"),
                    ValidationError);  // bipartite violation
    CHECK_THROWS_AS(parse_graph("vertex 1 X 0 0\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("vertex 1 B 0 0\nvertex 2 W 1 0\nedge 1 2 0\nnodes 1 2\n"),
                    ValidationError);  // nonpositive weight
    // crossing edges
    CHECK_THROWS_AS(parse_graph("vertex 1 B 0 0\n"
                                "vertex 2 W 2 2\n"
                                "vertex 3 B 0 2\n"
                                "vertex 4 W 2 0\n"
                                "edge 1 2 1\n"
                                "edge 3 4 1\n"),
                    ValidationError);
    // unbalanced node colors
    CHECK_THROWS_AS(parse_graph("vertex 1 B 0 0\n"
                                "vertex 2 W 1 0\n"
                                "vertex 3 B 2 0\n"
                                "vertex 4 W 3 0\n"
                                "edge 1 2 1\n"
                                "edge 2 3 1\n"
                                "edge 3 4 1\n"
                                "nodes 1 3\n"),
                    ValidationError);
    // node not on the outer face
    EmbeddedGraph bad = grid_graph(3, 4, false);
    bad.nodes = {6, 7};  // interior vertices of the 3x4 grid
    CHECK_THROWS_AS(validate(bad), ValidationError);
    // wrong node order (clockwise)
    EmbeddedGraph cyc = cycle4_graph();
    cyc.nodes = {1, 4, 3, 2};
    CHECK_THROWS_AS(validate(cyc), ValidationError);
}

TEST_CASE("parse-serialize-parse is a fixed point") {
    Rng rng(99);
    InstanceSpec spec;
    for (int i = 0; i < 5; ++i) {
        EmbeddedGraph g = gen_grid_instance(rng, spec);
        std::string text = serialize(g);
        CHECK(serialize(parse_graph(text)) == text);
    }
}

TEST_CASE("delete_nodes") {
    EmbeddedGraph single = parse_graph(kSingleEdge);
    EmbeddedGraph empty = delete_nodes(single, {1, 2});
    CHECK(empty.num_vertices() == 0);
    CHECK(empty.edges.empty());

    EmbeddedGraph demo = demo8x8_graph();
    EmbeddedGraph cut = delete_nodes(demo, {2, 5});
    CHECK(cut.num_vertices() == 62);
    // surviving node list keeps the original ccw order: labels 1,3,4,6,7,8
    std::vector<int> expect;
    for (int label : {1, 3, 4, 6, 7, 8}) expect.push_back(demo.node_vertex(label));
    CHECK(cut.nodes == expect);

    CHECK(delete_nodes(demo, {}).num_vertices() == 64);
    CHECK_THROWS(delete_nodes(single, {7}));

    // composing deletions commutes for disjoint sets: delete by labels of the
    // intermediate graph computed from the original vertex ids
    EmbeddedGraph a = delete_nodes(demo, {2, 5});
    // in `a`, former labels 7,8 are now labels 5,6
    EmbeddedGraph ab = delete_nodes(a, {5, 6});
    EmbeddedGraph b = delete_nodes(demo, {7, 8});
    EmbeddedGraph ba = delete_nodes(b, {2, 5});
    CHECK(serialize(ab) == serialize(ba));
    validate(ab);  // bipartite + planarity survive deletion
}

TEST_CASE("restrict_nodes keeps the graph and trims the split") {
    EmbeddedGraph demo = demo8x8_graph();
    EmbeddedGraph r = restrict_nodes(demo, {1, 3, 4, 6, 7, 8});
    CHECK(r.num_vertices() == 64);
    CHECK(r.num_nodes() == 6);
    CHECK(r.rgb == RgbSplit{2, 2, 2});  // lost one red (2) and one green (5)
}

TEST_CASE("outer face of the unit square is counterclockwise") {
    EmbeddedGraph g = cycle4_graph();
    Embedding e = build_embedding(g);
    std::vector<int> walk = outer_face_ccw(g, e, 0);
    CHECK(walk.size() == 4);
    // some rotation of 1,2,3,4
    auto at = [&](int i) { return walk[i % 4]; };
    int start = 0;
    while (at(start) != 1) ++start;
    CHECK(at(start + 1) == 2);
    CHECK(at(start + 2) == 3);
    CHECK(at(start + 3) == 4);
}

TEST_CASE("graph json export") {
    EmbeddedGraph g = parse_graph(kSingleEdge);
    std::string j = graph_json(g);
    CHECK(j.find("\"3/2\"") != std::string::npos);
    CHECK(j.find("\"nodes\"") != std::string::npos);
}
