#include <doctest.h>

#include "crcs/cograph.hpp"
#include "crcs/errors.hpp"
#include "crcs/generators.hpp"
#include "crcs/oracle.hpp"
#include "helpers.hpp"

using namespace crcs;
using namespace crcs::cograph;
using namespace testing;

TEST_CASE("build_cotree")
{
    const Cotree leaf = build_cotree(Graph(1));
    CHECK(format_cotree(leaf) == "0");
    CHECK_THROWS_AS(build_cotree(gen::path_graph(4)), NotACograph);
    CHECK_THROWS_AS(build_cotree(gen::path_graph(4)), WrongSolver);
    // K1,2 with center 1
    const Graph k12 = graph_of(3, {{0, 1}, {1, 2}});
    const Cotree t = build_cotree(k12);
    CHECK(format_cotree(t) == "(J (U 0 2) 1)");
    CHECK(t.evaluate(3) == k12);
    CHECK(format_cotree(build_cotree(Graph(3))) == "(U (U 0 1) 2)");
    CHECK(format_cotree(build_cotree(Graph(0))).empty());
}

TEST_CASE("cotree text round-trips and is checked against the graph")
{
    const Cotree t = parse_cotree(" (J 1 (U 0 2)) ");
    CHECK(format_cotree(t) == "(J 1 (U 0 2))");
    CHECK(format_cotree(parse_cotree("(U 0 1 2)")) == "(U (U 0 1) 2)");
    const Graph k12 = graph_of(3, {{0, 1}, {1, 2}});
    CHECK_NOTHROW(check_cotree(t, k12));
    CHECK_THROWS_AS(check_cotree(parse_cotree("(U 0 1 2)"), k12), PreconditionError);
    CHECK_THROWS_AS(check_cotree(parse_cotree("(J 0 1)"), k12), PreconditionError);
    CHECK_THROWS_AS(parse_cotree("(J 0)"), ParseError);
    CHECK_THROWS_AS(parse_cotree("(X 0 1)"), ParseError);
    CHECK_THROWS_AS(parse_cotree("(J 0 1) 2"), ParseError);
    CHECK_THROWS_AS(parse_cotree("(J 0 1"), ParseError);
}

TEST_CASE("property: random cographs round-trip through build_cotree")
{
    gen::Rng rng(17);
    for (int round = 0; round < 300; ++round) {
        const int n = 1 + round % 12;
        const Graph g = gen::random_cograph(n, rng);
        const Cotree t = build_cotree(g);
        CHECK(t.evaluate(n) == g);
        CHECK(t.leaves(t.root).size() == static_cast<std::size_t>(n));
        CHECK(format_cotree(parse_cotree(format_cotree(t))) == format_cotree(t));
    }
}

TEST_CASE("swappable_colors")
{
    CHECK(swappable_colors(col(3, {1, 2, 3})) == SwappableColors{1, 2, 3});
    CHECK(swappable_colors(col(3, {1, 1, 2})) == SwappableColors{2});
    CHECK(swappable_colors(col(3, {kStar, kStar, 1})) == SwappableColors{kStar, 1});
    CHECK(swappable_colors(col(3, {})).empty());
}

TEST_CASE("star_project")
{
    const Coloring f = col(3, {1, 2, 3});
    CHECK(star_project(f, std::vector<Vertex>{0, 2}, swappable_colors(f)) == col(3, {kStar, kStar}));
    CHECK(star_project(f, std::vector<Vertex>{}, swappable_colors(f)).colors.empty());
    const Coloring g = col(3, {1, 1, 2, 3});
    CHECK(star_project(g, std::vector<Vertex>{0, 1}, swappable_colors(g)) == col(3, {1, 1}));
}

TEST_CASE("solve_ecrcs_cograph")
{
    CHECK(solve_ecrcs_cograph(build_cotree(Graph(1)), 2, col(2, {2}), col(2, {2})));
    CHECK_FALSE(solve_ecrcs_cograph(build_cotree(Graph(1)), 2, col(2, {2}), col(2, {1})));
    const Graph k2 = complete(2);
    CHECK(solve_ecrcs_cograph(build_cotree(k2), 2, col(2, {1, 2}), col(2, {2, 1})));
    const Graph k12 = graph_of(3, {{0, 1}, {1, 2}});
    CHECK(solve_ecrcs_cograph(build_cotree(k12), 3, col(3, {1, 2, 3}), col(3, {3, 2, 1})));
    CHECK(crcs_reachable({k12, 3, col(3, {1, 2, 3}), col(3, {3, 2, 1})}).witness.size() == 3);
    CHECK_THROWS_AS(solve_ecrcs_cograph(build_cotree(k12), 3, col(3, {1, 2}), col(3, {1, 2})), IllFormedInput);
}

TEST_CASE("solve_crcs_cograph")
{
    const Graph k22 = graph_of(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}});
    const Instance inst{k22, 2, col(2, {1, 1, 2, 2}), col(2, {2, 2, 1, 1})};
    CHECK_FALSE(solve_crcs_cograph(inst));
    CHECK(crcs_reachable(inst).no());
    CHECK(solve_crcs_cograph({k22, 2, inst.fs, inst.fs}));
    CHECK_THROWS_AS(solve_crcs_cograph({gen::path_graph(4), 2, col(2, {1, 2, 1, 2}), col(2, {1, 2, 1, 2})}),
                    NotACograph);
    CHECK_THROWS_AS(solve_crcs_cograph(inst, parse_cotree("(U (U 0 1) (U 2 3))")), PreconditionError);
    CHECK_FALSE(solve_crcs_cograph(inst, parse_cotree("(J (U 0 1) (U 2 3))")));
}

TEST_CASE("property: cograph solver matches the extended oracle")
{
    gen::Rng rng(23);
    int yes = 0, total = 0;
    for (int round = 0; round < 400; ++round) {
        const int n = 1 + round % 8;
        const int k = 2 + round % 3;
        const Graph g = gen::random_cograph(n, rng);
        const double stars = round % 3 == 0 ? 0.0 : 0.3;
        auto fs = gen::random_proper_coloring(g, k, rng, stars);
        if (!fs)
            continue;
        const Coloring ft = gen::random_valid_partner(g, *fs, rng, stars);
        const Instance inst{g, k, *fs, ft};
        const Decision d = ecrcs_reachable(inst);
        REQUIRE_FALSE(d.overflow());
        CHECK(solve_ecrcs_cograph(build_cotree(g), k, *fs, ft) == d.yes());
        yes += d.yes();
        ++total;
    }
    CHECK(yes > 0);
    CHECK(yes < total);
}

TEST_CASE("property: swaps never cross a join whose side has no swappable color")
{
    gen::Rng rng(29);
    for (int round = 0; round < 300; ++round) {
        const Graph g = gen::random_cograph(2 + round % 6, rng);
        auto fs = gen::random_proper_coloring(g, 3, rng, 0.2);
        if (!fs)
            continue;
        const Coloring ft = gen::random_valid_partner(g, *fs, rng, 0.2);
        const Decision d = ecrcs_reachable({g, 3, *fs, ft});
        if (!d.yes())
            continue;
        Coloring cur = *fs;
        for (const SwapMove& m : d.witness) {
            cur = apply_swap(g, cur, m);
            CHECK(swappable_colors(cur) == swappable_colors(*fs));
        }
        const Cotree t = build_cotree(g);
        const auto& root = t.nodes[t.root];
        if (root.kind != NodeKind::Join)
            continue;
        const auto left = t.leaves(root.left);
        if (!swappable_colors(fs->restrict_to(left)).empty())
            continue;
        for (const SwapMove& m : d.witness) {
            const bool a = std::binary_search(left.begin(), left.end(), m.u);
            const bool b = std::binary_search(left.begin(), left.end(), m.v);
            CHECK(a == b);
        }
    }
}
