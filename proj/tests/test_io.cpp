#include <doctest.h>

#include "secg/constructions.hpp"
#include "secg/corpus.hpp"
#include "secg/io.hpp"
#include "secg/reduction.hpp"

using namespace secg;

TEST_SUITE("io") {

TEST_CASE("parse minimal graph") {
    ParsedGraph pg = parse_graph_text("secg 1\nv 2\ne 0 1\n");
    CHECK(pg.graph.vertex_count() == 2);
    CHECK(pg.graph.edge_count() == 1);
    CHECK_FALSE(pg.embedding.has_value());
}

TEST_CASE("prism file round-trips with its embedding") {
    std::string text = write_graph_text(gen_prism());
    ParsedGraph pg = parse_graph_text(text);
    REQUIRE(pg.embedding.has_value());
    CHECK(pg.embedding->faces().size() == 5);  // 6 - 9 + 5 = 2
    CHECK(write_graph_text(*pg.embedding) == text);
}

TEST_CASE("diagnostics carry line numbers") {
    CHECK_THROWS_AS(parse_graph_text(""), ParseError);
    CHECK_THROWS_AS(parse_graph_text("nope\n"), ParseError);
    CHECK_THROWS_AS(parse_graph_text("secg 2\nv 1\n"), ParseError);
    // loop edge
    try {
        parse_graph_text("secg 1\nv 3\ne 1 1\n");
        FAIL("expected ParseError");
    } catch (const ParseError& ex) {
        CHECK(ex.line == 3);
    }
    // rotation naming a non-neighbor
    CHECK_THROWS_AS(parse_graph_text("secg 1\nv 2\ne 0 1\nr 0: 1\nr 1: 1\n"),
                    ParseError);
    // duplicate edge
    CHECK_THROWS_AS(parse_graph_text("secg 1\nv 2\ne 0 1\ne 1 0\n"), ParseError);
    // rotation lines must cover every vertex with neighbors
    CHECK_THROWS_AS(parse_graph_text("secg 1\nv 3\ne 0 1\ne 1 2\nr 0: 1\n"),
                    ParseError);
    // comments and blank lines are fine
    CHECK(parse_graph_text("# hi\nsecg 1\n\nv 2\ne 0 1\n").graph.edge_count() ==
          1);
}

TEST_CASE("generator output round-trips byte-identically") {
    auto corpus = full_corpus(kDefaultSeed);
    for (size_t i = 0; i < corpus.size(); i += 7) {
        std::string once = write_graph_text(corpus[i].emb);
        ParsedGraph pg = parse_graph_text(once);
        REQUIRE(pg.embedding.has_value());
        CHECK(write_graph_text(*pg.embedding) == once);
    }
}

TEST_CASE("coloring certificates") {
    PlaneEmbedding prism_emb = gen_prism();
    const Graph& prism = prism_emb.graph();
    StrongColoring col = StrongColoring::empty(9, 9);
    for (int e = 0; e < 9; ++e) col.color[e] = e;
    std::string text = write_coloring_text(prism, col);
    CHECK(text.find("palette 9") == 0);
    CHECK(text.find(" 0\n") == std::string::npos);  // colors are 1-based

    StrongColoring back = parse_coloring_text(prism, text);
    CHECK(back.color == col.color);
    CHECK(back.palette == 9);

    // palette inferred from the maximum color when absent
    StrongColoring inferred = parse_coloring_text(prism, "0 2 5\n");
    CHECK(inferred.palette == 5);
    CHECK(inferred.color[0] == 4);

    CHECK_THROWS_AS(parse_coloring_text(prism, "0 1 1\n"), ParseError);
    CHECK_THROWS_AS(parse_coloring_text(prism, "0 2 0\n"), ParseError);
    CHECK_THROWS_AS(parse_coloring_text(prism, "0 2 1\n0 2 1\n"), ParseError);
    CHECK_THROWS_AS(parse_coloring_text(prism, "palette 2\n0 2 5\n"),
                    ParseError);
}

TEST_CASE("irreducible dump parses back") {
    // the dump attached to the error is a loadable instance
    PlaneEmbedding patch = gen_hex_patch(2);
    IrreducibleGraphError err("test", write_graph_text(patch));
    ParsedGraph pg = parse_graph_text(err.graph_dump);
    CHECK(pg.graph.edge_count() == patch.graph().edge_count());
}

}  // TEST_SUITE
