#include <catch_amalgamated.hpp>

#include <random>
#include <string>

#include <json.hpp>

#include "rdist/io.hpp"
#include "rdist/resistance.hpp"

using namespace rdist;
using M = Matrix<Rational>;

namespace {

Error caught(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e;
    }
    FAIL("expected rdist::Error");
    return Error(Errc::parse_error, "unreachable");
}

}  // namespace

TEST_CASE("graph spec grammar", "[io]") {
    CHECK(parse_graph_spec("C3") == cycle_graph(3));
    CHECK(parse_graph_spec("c3") == cycle_graph(3));
    CHECK(parse_graph_spec(" P 4 ") == path_graph(4));
    CHECK(parse_graph_spec("K4") == complete_graph(4));
    CHECK(parse_graph_spec("edges:4:1-2,2-3,3-4,1-4") == cycle_graph(4));
    CHECK(parse_graph_spec("EDGES : 4 : 1 - 2 , 2-3,3-4, 4-1") == cycle_graph(4));
    CHECK(parse_graph_spec("edges:3:") == graph_from_edges(3, {}));
}

TEST_CASE("graph spec errors", "[io]") {
    CHECK(caught([] { parse_graph_spec("P0"); }).code() == Errc::empty_graph);
    CHECK(caught([] { parse_graph_spec("C2"); }).code() == Errc::too_small);
    CHECK(caught([] { parse_graph_spec("edges:3:1-4"); }).code() == Errc::invalid_vertex);
    CHECK(caught([] { parse_graph_spec("edges:3:2-2"); }).code() == Errc::loop_edge);

    const auto bad_family = caught([] { parse_graph_spec("Q5"); });
    CHECK(bad_family.code() == Errc::parse_error);
    CHECK(bad_family.position() == 0);

    const auto trailing = caught([] { parse_graph_spec("C3x"); });
    CHECK(trailing.code() == Errc::parse_error);
    CHECK(trailing.position() == 2);

    const auto missing_dash = caught([] { parse_graph_spec("edges:3:1-2,23"); });
    CHECK(missing_dash.code() == Errc::parse_error);
    CHECK(missing_dash.position() == 14);

    CHECK(caught([] { parse_graph_spec(""); }).code() == Errc::parse_error);
    CHECK(caught([] { parse_graph_spec("P"); }).code() == Errc::parse_error);
    CHECK(caught([] { parse_graph_spec("P99999999999999999999999"); }).code() == Errc::parse_error);
}

TEST_CASE("edge-list specs round trip", "[io][property]") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 1 + rng() % 8;
        std::vector<Edge> edges;
        for (std::size_t u = 1; u <= n; ++u)
            for (std::size_t v = u + 1; v <= n; ++v)
                if (rng() % 3 == 0) edges.emplace_back(u, v);
        const auto g = graph_from_edges(n, edges);
        REQUIRE(parse_graph_spec(to_graph_spec(g)) == g);
    }
    CHECK(to_graph_spec(cycle_graph(3)) == "edges:3:1-2,1-3,2-3");
}

TEST_CASE("DOT subset reader", "[io]") {
    CHECK(parse_dot("graph { 1 -- 2; 2 -- 3; 3 -- 4; 4 -- 1 }") == cycle_graph(4));
    CHECK(parse_dot("strict graph G { b -- a; a -- c }") == graph_from_edges(3, {{1, 2}, {2, 3}}));
    CHECK(parse_dot("graph { x; y; x -- y }") == complete_graph(2));
    CHECK(parse_dot("graph { 10 -- 2 }") == complete_graph(2));
    CHECK(parse_dot("graph { \"left node\" -- right /* c */ # trailing\n }") == complete_graph(2));
    CHECK(parse_dot("graph { a -- b; a -- b; b -- a }").size() == 1);

    CHECK(caught([] { parse_dot("digraph { a -> b }"); }).code() == Errc::parse_error);
    CHECK(caught([] { parse_dot("graph { a -> b }"); }).code() == Errc::parse_error);
    CHECK(caught([] { parse_dot("graph { a -- b [color=red] }"); }).code() == Errc::parse_error);
    CHECK(caught([] { parse_dot("graph { a -- b "); }).code() == Errc::parse_error);
    CHECK(caught([] { parse_dot("graph { a -- a }"); }).code() == Errc::loop_edge);
    CHECK(caught([] { parse_dot("graph { }"); }).code() == Errc::empty_graph);
}

TEST_CASE("graphs load from DOT files", "[io]") {
    const std::string dir = RDIST_DATA_DIR;
    CHECK(load_graph("@" + dir + "/paw.dot") == graph_from_edges(4, {{1, 2}, {2, 3}, {1, 3}, {3, 4}}));
    CHECK(load_graph("@" + dir + "/c4.dot") == cycle_graph(4));
    CHECK(load_graph("K3") == complete_graph(3));
    CHECK(caught([&] { load_graph("@" + dir + "/missing.dot"); }).code() == Errc::parse_error);
}

TEST_CASE("CSV serialization", "[io]") {
    OutputDocument doc;
    doc.labels = {"v1"};
    doc.matrix = M{{0}};
    CHECK(serialize(doc, {Format::csv}) == "v1\n0\n");

    doc.labels = {"v1", "v2"};
    doc.matrix = M{{0, Rational(2, 3)}, {Rational(-2, 3), 1}};
    CHECK(serialize(doc, {Format::csv}) == "v1,v2\n0,2/3\n-2/3,1\n");
    CHECK(serialize(doc, {Format::csv, ValueMode::decimal, 3}) == "v1,v2\n0.000,0.667\n-0.667,1.000\n");
    CHECK(parse_csv_matrix(serialize(doc, {Format::csv})) == doc.matrix);
}

TEST_CASE("JSON serialization", "[io]") {
    OutputDocument doc;
    doc.operation = "resist";
    doc.inputs = {{"g", "K2"}};
    doc.labels = {"v1", "v2"};
    doc.matrix = resistance_direct(complete_graph(2)).r;

    const auto exact = nlohmann::json::parse(serialize(doc, {Format::json}));
    CHECK(exact["operation"] == "resist");
    CHECK(exact["inputs"]["g"] == "K2");
    CHECK(exact["labels"] == nlohmann::json({"v1", "v2"}));
    CHECK(exact["matrix"] == nlohmann::json::array({nlohmann::json::array({"0", "1"}), nlohmann::json::array({"1", "0"})}));
    CHECK_FALSE(exact.contains("verified"));

    doc.matrix = M{{Rational(2, 3)}};
    doc.labels = {"v1"};
    doc.verified = true;
    const auto text = serialize(doc, {Format::json, ValueMode::decimal, 3});
    const auto decimal = nlohmann::json::parse(text);
    CHECK(decimal["matrix"][0][0].is_number());
    CHECK(decimal["matrix"][0][0].get<double>() == 0.667);
    CHECK(text.find("0.667") != std::string::npos);
    CHECK(decimal["verified"] == true);
}

TEST_CASE("exact output is byte-stable", "[io][property]") {
    OutputDocument doc;
    doc.operation = "ginv corona";
    doc.labels = {"v1", "v2"};
    doc.matrix = M{{Rational(53, 72), Rational(-2, 9)}, {Rational(-2, 9), Rational(11, 18)}};
    doc.kirchhoff_index = Rational(7, 3);
    for (auto format : {Format::csv, Format::json, Format::table}) {
        const auto first = serialize(doc, {format});
        CHECK(serialize(doc, {format}) == first);
    }
}

TEST_CASE("table serialization is aligned", "[io]") {
    OutputDocument doc;
    doc.operation = "resist";
    doc.inputs = {{"g", "K2"}};
    doc.labels = {"v1", "v2"};
    doc.matrix = M{{0, 1}, {1, 0}};
    doc.kirchhoff_index = Rational(1);
    CHECK(serialize(doc, {}) ==
          "# resist  g=K2\n"
          "    v1  v2\n"
          "v1   0   1\n"
          "v2   1   0\n"
          "Kirchhoff index: 1\n");
}
