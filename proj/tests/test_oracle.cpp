#include <doctest.h>

#include "crcs/errors.hpp"
#include "crcs/generators.hpp"
#include "crcs/oracle.hpp"
#include "helpers.hpp"

using namespace crcs;
using namespace testing;

TEST_CASE("crcs_reachable on the six-vertex example")
{
    const Instance f = fig1();
    const Decision d = crcs_reachable(f);
    REQUIRE(d.yes());
    CHECK(d.witness.size() == 3);
    CHECK(replay(f.graph, witness_sequence(f, d)) == f.ft);
    CHECK(d.witness == std::vector<SwapMove>{{4, 5}, {1, 3}, {2, 4}});
}

TEST_CASE("crcs_reachable basics")
{
    const Instance f = fig1();
    const Decision same = crcs_reachable({f.graph, 3, f.fs, f.fs});
    CHECK(same.yes());
    CHECK(same.witness.empty());

    const Graph p6 = graph_of(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}});
    CHECK(crcs_reachable({p6, 3, col(3, {1, 2, 1, 2, 1, 2}), col(3, {2, 1, 2, 1, 2, 1})}).no());

    const Graph e = graph_of(2, {{0, 1}});
    const Decision invalid = crcs_reachable({e, 3, col(3, {1, 2}), col(3, {1, 3})});
    CHECK(invalid.no());
    CHECK(invalid.states_explored == 0);
    CHECK_THROWS_AS(crcs_reachable({e, 2, col(2, {1, 1}), col(2, {1, 1})}), PreconditionError);
}

TEST_CASE("ecrcs_reachable")
{
    const Graph e = graph_of(2, {{0, 1}});
    const Decision d = ecrcs_reachable({e, 2, col(2, {kStar, 1}), col(2, {1, kStar})});
    CHECK(d.yes());
    CHECK(d.witness.size() == 1);
    const Decision z = ecrcs_reachable({e, 2, col(2, {kStar, kStar}), col(2, {kStar, kStar})});
    CHECK(z.yes());
    CHECK(z.witness.empty());
}

TEST_CASE("budget limits give OVERFLOW, never NO")
{
    const Instance f = fig1();
    SearchBudget tiny;
    tiny.max_states = 2;
    CHECK(crcs_reachable(f, tiny).overflow());
    SearchBudget shallow;
    shallow.max_moves = 2;
    CHECK(crcs_reachable(f, shallow).overflow());
    shallow.max_moves = 3;
    CHECK(crcs_reachable(f, shallow).yes());
}

TEST_CASE("ts_reachable")
{
    const Graph p3 = graph_of(3, {{0, 1}, {1, 2}});
    CHECK(ts_reachable({p3, {0}, {0}, {}}).yes());
    const auto d = ts_reachable({p3, {0}, {2}, {}});
    CHECK(d.yes());
    CHECK(d.witness.size() == 2);
    const Graph e = graph_of(2, {{0, 1}});
    CHECK(ts_reachable({e, {0}, {1}, {}}).witness.size() == 1);
    CHECK_THROWS_AS(ts_reachable({e, {0, 1}, {0, 1}, {}}), PreconditionError);
    const Graph p4 = graph_of(4, {{0, 1}, {1, 2}, {2, 3}});
    CHECK(ts_reachable({p4, {0, 2}, {1, 3}, {}}).yes());
    // two tokens on leaves of a star cannot move
    CHECK(ts_reachable({star(3), {1, 2}, {1, 3}, {}}).no());
}

TEST_CASE("svr_reachable")
{
    CHECK(svr_reachable({Graph(1), 2, col(2, {1}), col(2, {2})}).yes());
    const Graph k3 = complete(3);
    CHECK(svr_reachable({k3, 3, col(3, {1, 2, 3}), col(3, {1, 2, 3})}).yes());
    CHECK(svr_reachable({k3, 3, col(3, {1, 2, 3}), col(3, {2, 1, 3})}).no());
    CHECK(svr_reachable({k3, 4, col(4, {1, 2, 3}), col(4, {2, 1, 3})}).witness.size() == 3);
}

TEST_CASE("ncl_reachable")
{
    const NclMachine m = prism_machine();
    const NclOrientation c = prism_orientation();
    REQUIRE(is_valid_orientation(m, c));
    CHECK(ncl_reachable(m, c, c).witness.empty());
    NclOrientation t = c;
    t.toward[0] = 0;
    REQUIRE(is_valid_orientation(m, t));
    const auto d = ncl_reachable(m, c, t);
    CHECK(d.yes());
    CHECK(d.witness.size() == 1);
    CHECK(d.witness[0].edge_id == 0);

    NclMachine single;
    single.vertices = {NclType::Or};
    CHECK_THROWS_AS(ncl_reachable(single, {}, {}), PreconditionError);
    NclOrientation bad = c;
    bad.toward[3] = 3; // spoke away from AND vertex 0 leaves it weight 1
    CHECK_THROWS_AS(ncl_reachable(m, bad, c), PreconditionError);
}

TEST_CASE("crcs_components")
{
    const Graph p2 = graph_of(2, {{0, 1}});
    const auto a = crcs_components(p2, 2);
    CHECK(a.colorings.size() == 2);
    CHECK(a.component_count == 1);
    const Graph p3 = graph_of(3, {{0, 1}, {1, 2}});
    const auto b = crcs_components(p3, 2);
    CHECK(b.colorings.size() == 2);
    CHECK(b.component_count == 2);
    for (int n = 1; n <= 7; ++n)
        CHECK(crcs_components(gen::path_graph(n), 3).colorings.size() == 3u << (n - 1));
    SearchBudget tiny;
    tiny.max_states = 5;
    CHECK(crcs_components(gen::path_graph(5), 3, tiny).overflow);
}

TEST_CASE("enumerate_colorings is lexicographic and respects the limit")
{
    std::vector<Coloring> all;
    CHECK(enumerate_colorings(graph_of(2, {{0, 1}}), 3, false, 100, all));
    REQUIRE(all.size() == 6);
    CHECK(all.front() == col(3, {1, 2}));
    CHECK(all.back() == col(3, {3, 2}));
    CHECK(std::is_sorted(all.begin(), all.end(), [](const Coloring& x, const Coloring& y) { return x.colors < y.colors; }));
    std::vector<Coloring> some;
    CHECK_FALSE(enumerate_colorings(graph_of(2, {{0, 1}}), 3, false, 4, some));
    std::vector<Coloring> ext;
    enumerate_colorings(graph_of(2, {{0, 1}}), 1, true, 100, ext);
    CHECK(ext.size() == 3); // (*,*), (*,1), (1,*)
}

TEST_CASE("property: witnesses replay, conserve counts and keep swappable sets; outcome is symmetric")
{
    gen::Rng rng(21);
    for (int round = 0; round < 200; ++round) {
        const Graph g = gen::random_graph(7, 0.35, rng);
        const int k = 3 + round % 2;
        auto fs = gen::random_proper_coloring(g, k, rng);
        if (!fs)
            continue;
        const Coloring ft = gen::random_valid_partner(g, *fs, rng);
        const Instance inst{g, k, *fs, ft};
        const Decision d = crcs_reachable(inst);
        REQUIRE_FALSE(d.overflow());
        CHECK(crcs_reachable({g, k, ft, *fs}).outcome == d.outcome);
        if (!d.yes())
            continue;
        Coloring cur = *fs;
        for (const SwapMove& m : d.witness) {
            cur = apply_swap(g, cur, m);
            CHECK(cur.color_counts() == fs->color_counts());
        }
        CHECK(cur == ft);
        CHECK(crcs_reachable(inst).witness == d.witness);
    }
}
