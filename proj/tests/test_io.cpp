#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "mweb/io.hpp"

using namespace mweb;

TEST_CASE("graph json round trip") {
    std::mt19937_64 rng(61);
    std::uniform_real_distribution<double> w(-5, 5);
    for (int t = 0; t < 50; ++t) {
        std::size_t n1 = 1 + t % 5, n2 = 1 + (t * 3) % 6;
        std::vector<double> weights(n1 * n2);
        for (auto& v : weights) v = w(rng);
        WeightedBipartiteGraph g(n1, n2, weights);
        auto back = graph_from_json(graph_to_json(g));
        CHECK(back.n1() == g.n1());
        CHECK(back.n2() == g.n2());
        CHECK(back.weights() == g.weights());
    }
}

TEST_CASE("graph json schema errors") {
    CHECK_THROWS_WITH_AS(graph_from_json(json{{"n1", 2}, {"n2", 2}}),
                         doctest::Contains("weights"), ParseError);
    CHECK_THROWS_AS(graph_from_json(json::array()), ParseError);
    // wrong matrix size is a validation error, not a parse error
    CHECK_THROWS_AS(graph_from_json(json{{"n1", 2}, {"n2", 2}, {"weights", {1.0}}}),
                    ValidationError);
}

TEST_CASE("biclique json round trip") {
    Biclique b({3, 1, 5}, {0, 2});
    auto back = biclique_from_json(biclique_to_json(b));
    CHECK(back.u1 == std::vector<std::size_t>{1, 3, 5});
    CHECK(back == b);
    CHECK_THROWS_AS(biclique_from_json(json{{"u1", {-1}}, {"u2", json::array()}}), ParseError);
}

TEST_CASE("simple graph json round trip") {
    SimpleGraph g(4, {{0, 1}, {2, 3}, {1, 3}});
    auto back = simple_graph_from_json(simple_graph_to_json(g));
    CHECK(back.n == 4);
    CHECK(back.edges == g.edges);
}

TEST_CASE("summary json round trip") {
    Summary s{{Region::row(0), Region::col(2), Region::cell(1, 1), Region::all()}, {{0, 1}, {2, 2}}};
    json j = summary_to_json(s);
    CHECK(j["length"] == 6);
    Summary back = summary_from_json(j);
    CHECK(back.regions == s.regions);
    CHECK(back.holes == s.holes);
    CHECK_THROWS_AS(summary_from_json(json{{"regions", {{{"kind", "blob"}}}},
                                           {"holes", json::array()}}),
                    ParseError);
}

TEST_CASE("tsv round trip") {
    std::mt19937_64 rng(62);
    std::bernoulli_distribution coin(0.4);
    for (int t = 0; t < 30; ++t) {
        std::size_t n1 = 1 + t % 6, n2 = 1 + (t * 5) % 7;
        std::vector<std::uint8_t> data(n1 * n2);
        for (auto& v : data) v = coin(rng);
        BinaryMatrix m(n1, n2, data);
        BinaryMatrix back = binary_matrix_from_tsv(binary_matrix_to_tsv(m));
        CHECK(back.n1() == m.n1());
        CHECK(back.n2() == m.n2());
        CHECK(back.data() == m.data());
    }
}

TEST_CASE("tsv errors carry line and column") {
    CHECK_THROWS_WITH_AS(binary_matrix_from_tsv("1\t0\n0\t2\n"),
                         doctest::Contains("line 2, column 2"), ParseError);
    CHECK_THROWS_WITH_AS(binary_matrix_from_tsv("1\t0\n1\n"), doctest::Contains("line 2"),
                         ParseError);
    CHECK_THROWS_AS(binary_matrix_from_tsv("# only comments\n"), ParseError);
}

TEST_CASE("tsv ignores comment lines") {
    auto m = binary_matrix_from_tsv("# header\n1\t0\n# manifest: {}\n0\t1\n");
    CHECK(m.n1() == 2);
    CHECK(m.at(1, 1) == 1);
}

TEST_CASE("refined params json") {
    auto r = refined_params_from_json(json{{"p", {0.1, 0.2}}, {"p_c", 0.5}});
    CHECK(r.p == std::vector<double>{0.1, 0.2});
    CHECK(r.p_c == 0.5);
    CHECK_THROWS_AS(refined_params_from_json(json{{"p", {0.1}}}), ParseError);
}

TEST_CASE("verification report json") {
    VerificationReport rep;
    rep.kind = "clique";
    rep.relation = "omega == opt";
    rep.pass = true;
    rep.trials.push_back({2, 2, true});
    json j = report_to_json(rep);
    CHECK(j["pass"] == true);
    CHECK(j["trials"].size() == 1);
}
