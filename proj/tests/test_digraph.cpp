#include <random>
#include <sstream>
#include <vector>

#include <gtest/gtest.h>

#include <subpow/digraph.hpp>

namespace subpow {
namespace {

TEST(MakeCycle, ThreeCycleEdges) {
    const auto g = make_cycle(3);
    EXPECT_EQ(g.vertex_count(), 3u);
    EXPECT_EQ(g.edges(), (std::vector<Edge>{{0, 1}, {1, 2}, {2, 0}}));
}

TEST(MakeCycle, LengthOneIsALoop) {
    const auto g = make_cycle(1);
    EXPECT_EQ(g.vertex_count(), 1u);
    EXPECT_EQ(g.edges(), (std::vector<Edge>{{0, 0}}));
}

TEST(MakeCycle, OutDegreeOneEverywhere) {
    const auto g = make_cycle(5);
    EXPECT_EQ(g.vertex_count(), 5u);
    for (Vertex v = 0; v < 5; ++v) EXPECT_EQ(g.out_degree(v), 1u);
}

TEST(MakeCycle, RejectsZero) { EXPECT_THROW(make_cycle(0), invalid_argument); }

TEST(Digraph, RejectsOutOfRangeAndDuplicateEdges) {
    EXPECT_THROW(Digraph(2, {{0, 2}}), invalid_argument);
    EXPECT_THROW(Digraph(2, {{0, 1}, {0, 1}}), invalid_argument);
}

TEST(Digraph, EdgesAreSortedAndQueryable) {
    const Digraph g(3, {{2, 0}, {0, 2}, {0, 1}});
    EXPECT_EQ(g.edges(), (std::vector<Edge>{{0, 1}, {0, 2}, {2, 0}}));
    EXPECT_TRUE(g.has_edge(2, 0));
    EXPECT_FALSE(g.has_edge(1, 0));
    EXPECT_FALSE(g.has_edge(7, 0));
    EXPECT_EQ(g.edge_count(), 3u);
}

TEST(Decompose, CycleIsOneCycle) {
    const auto cycles = decompose_permutation_cycles(make_cycle(6));
    ASSERT_EQ(cycles.size(), 1u);
    EXPECT_EQ(cycles[0].vertices, (std::vector<Vertex>{0, 1, 2, 3, 4, 5}));
}

TEST(Decompose, LoopAndTwoCycle) {
    const auto cycles = decompose_permutation_cycles(Digraph(3, {{0, 0}, {1, 2}, {2, 1}}));
    ASSERT_EQ(cycles.size(), 2u);
    EXPECT_EQ(cycles[0].vertices, (std::vector<Vertex>{0}));
    EXPECT_EQ(cycles[1].vertices, (std::vector<Vertex>{1, 2}));
}

TEST(Decompose, RejectsNonPermutationGraphs) {
    EXPECT_THROW(decompose_permutation_cycles(Digraph(3, {{0, 1}, {0, 2}, {1, 0}, {2, 0}})), not_permutation_graph);
    // out-degree 1 everywhere but vertex 1 has in-degree 2
    EXPECT_THROW(decompose_permutation_cycles(Digraph(3, {{0, 1}, {1, 2}, {2, 1}})), not_permutation_graph);
}

TEST(Decompose, EveryCycleLengthUpToHundred) {
    for (std::size_t l = 1; l <= 100; ++l) {
        const auto cycles = decompose_permutation_cycles(make_cycle(l));
        ASSERT_EQ(cycles.size(), 1u) << "l=" << l;
        EXPECT_EQ(cycles[0].length(), l);
    }
}

TEST(Decompose, RandomPermutationsPartitionVertices) {
    std::mt19937 rng(12345);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 1 + rng() % 40;
        std::vector<Vertex> perm(n);
        for (Vertex v = 0; v < n; ++v) perm[v] = v;
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<Edge> edges;
        for (Vertex v = 0; v < n; ++v) edges.push_back({v, perm[v]});
        const auto cycles = decompose_permutation_cycles(Digraph(n, edges));

        std::size_t total = 0;
        std::vector<int> seen(n, 0);
        Vertex previous_start = 0;
        for (std::size_t c = 0; c < cycles.size(); ++c) {
            const auto& vs = cycles[c].vertices;
            total += vs.size();
            EXPECT_EQ(*std::min_element(vs.begin(), vs.end()), vs.front());
            if (c > 0) {
                EXPECT_LT(previous_start, vs.front());
            }
            previous_start = vs.front();
            for (std::size_t i = 0; i < vs.size(); ++i) {
                ++seen[vs[i]];
                EXPECT_EQ(perm[vs[i]], vs[(i + 1) % vs.size()]);
            }
        }
        EXPECT_EQ(total, n);
        EXPECT_TRUE(std::all_of(seen.begin(), seen.end(), [](int s) { return s == 1; }));
    }
}

TEST(EdgeList, ReadsCommentsAndBlankLines) {
    std::istringstream in("# C_3\nn 3\n\n0 1\n  # inline comment line\n1 2\n2 0\n");
    EXPECT_EQ(read_edge_list(in), make_cycle(3));
}

TEST(EdgeList, WriteThenReadIsIdentity) {
    const Digraph g(4, {{0, 0}, {3, 1}, {1, 2}, {0, 3}});
    std::ostringstream out;
    write_edge_list(out, g);
    EXPECT_EQ(out.str(), "n 4\n0 0\n0 3\n1 2\n3 1\n");
    std::istringstream in(out.str());
    EXPECT_EQ(read_edge_list(in), g);
}

TEST(EdgeList, ParseErrorsCarryLineNumbers) {
    auto line_of = [](const std::string& text) -> std::size_t {
        std::istringstream in(text);
        try {
            read_edge_list(in);
        } catch (const parse_error& e) {
            return e.line();
        }
        return 0;
    };
    EXPECT_EQ(line_of("0 1\n"), 1u);
    EXPECT_EQ(line_of("n 2\n0 1\n1 x\n"), 3u);
    EXPECT_EQ(line_of("n 2\n0 1\n# c\n1 2\n"), 4u);
    EXPECT_EQ(line_of("n 2\n0 1\n1 0\n0 1\n"), 4u);
    EXPECT_EQ(line_of("n 2\n0 1 1\n"), 2u);
    EXPECT_EQ(line_of("n 2\n0 -1\n"), 2u);
    EXPECT_EQ(line_of("# only comments\n"), 1u);
}

} // namespace
} // namespace subpow
