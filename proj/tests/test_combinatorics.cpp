#include <catch2/catch_amalgamated.hpp>
#include <set>

#include "drawinv/combinatorics.hpp"

using namespace drawinv;

namespace {

long binom(long n, long k) {
    if (k < 0 || k > n) return 0;
    long r = 1;
    for (long i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

// all ordered partitions of [m] into r possibly-empty blocks
std::vector<Partition> all_ordered_partitions(int m, int r) {
    std::vector<Partition> out;
    std::vector<int> assign(m + 1, 0);
    auto rec = [&](auto&& self, int x) -> void {
        if (x > m) {
            Partition p;
            p.blocks.assign(r, {});
            for (int y = 1; y <= m; ++y) p.blocks[assign[y]].push_back(y);
            out.push_back(p);
            return;
        }
        for (int b = 0; b < r; ++b) {
            assign[x] = b;
            self(self, x + 1);
        }
    };
    rec(rec, 1);
    return out;
}

}  // namespace

TEST_CASE("standard constructions") {
    CHECK(complete_graph(5).edges.size() == 10);
    CHECK(complete_bipartite(3, 3).edges.size() == 9);
    CHECK(complete_2_hypergraph(3).faces.size() == 4);
    CHECK(complete_2_hypergraph(3).n == 4);
    CHECK(complete_2_hypergraph(3).edges().size() == 6);
    CHECK(petersen_graph().edges.size() == 15);
    CHECK(wheel_graph(4).n == 5);
    CHECK(grid_graph(4, 4).edges.size() == 24);
}

TEST_CASE("graph pair indices") {
    CHECK(pair_index(complete_graph(5), IndexKind::graph_kstar).entries.size() == 15);
    CHECK(pair_index(complete_graph(4), IndexKind::graph_kstar).entries.size() == 3);
    for (int n = 4; n <= 8; ++n) {
        auto ix = pair_index(complete_graph(n), IndexKind::graph_kstar);
        CHECK((long)ix.entries.size() == 3 * binom(n, 4));
        auto tix = pair_index(complete_graph(n), IndexKind::graph_ktilde);
        CHECK(tix.entries.size() == 2 * ix.entries.size());
    }
}

TEST_CASE("hypergraph pair indices") {
    Hypergraph2 d3 = complete_2_hypergraph(3);
    auto ks = pair_index(d3, IndexKind::hyper_kstar);
    CHECK(ks.entries.size() == 7);  // 3 matchings + 4 vertex-face pairs
    auto kt = pair_index(d3, IndexKind::hyper_ktilde);
    CHECK(kt.entries.size() == 14);

    // for r = 2 the ordered tuples coincide with hyper K-tilde
    auto ku2 = pair_index(d3, IndexKind::hyper_kunderline, 2);
    CHECK(ku2.entries == kt.entries);

    // Delta^2_{3r-3}, r = 3: ordered partitions of [3r-2] into r nonempty
    // blocks of size <= 3
    auto ku3 = pair_index(complete_2_hypergraph(6), IndexKind::hyper_kunderline, 3);
    CHECK(ku3.entries.size() == 1050);
    for (const auto& t : ku3.entries) {
        int total = 0;
        for (const Cell& c : t) total += c.k;
        CHECK(total == 7);
    }

    // below 3r-2 vertices the index is empty
    CHECK(pair_index(complete_2_hypergraph(4), IndexKind::hyper_kunderline, 3)
              .entries.empty());
}

TEST_CASE("incidence signs match the table") {
    // [AB:B] = 1, [AB:A] = -1
    CHECK(incidence_sign({1, 2}, {2}) == +1);
    CHECK(incidence_sign({1, 2}, {1}) == -1);
    // [ABC:BA] = [ABC:CB] = [ABC:AC] = 1
    CHECK(incidence_sign({1, 2, 3}, {2, 1}) == +1);
    CHECK(incidence_sign({1, 2, 3}, {3, 2}) == +1);
    CHECK(incidence_sign({1, 2, 3}, {1, 3}) == +1);
    // [ABC:AB] = [ABC:BC] = [ABC:CA] = -1
    CHECK(incidence_sign({1, 2, 3}, {1, 2}) == -1);
    CHECK(incidence_sign({1, 2, 3}, {2, 3}) == -1);
    CHECK(incidence_sign({1, 2, 3}, {3, 1}) == -1);
    // dimension mismatch or non-incidence
    CHECK(incidence_sign({1, 2, 3}, {4}) == 0);
    CHECK(incidence_sign({1, 2, 3}, {1}) == 0);
    CHECK(incidence_sign({1, 2}, {3}) == 0);
    CHECK(incidence_sign({1, 2}, {1, 2}) == 0);
    // cyclic rotation of a face preserves the table
    CHECK(incidence_sign({2, 3, 1}, {1, 2}) == incidence_sign({1, 2, 3}, {1, 2}));
    CHECK(incidence_sign({3, 1, 2}, {2, 1}) == incidence_sign({1, 2, 3}, {2, 1}));
}

TEST_CASE("spherical partition counts and rules") {
    auto sp = spherical_partitions(6, 3);
    CHECK(sp.size() == 216);

    // r = 3: spherical iff every twin pair is separated, and conversely
    for (const Partition& p : all_ordered_partitions(6, 3)) {
        bool separated = true;
        auto block_of = [&](int x) {
            for (int b = 0; b < 3; ++b)
                for (int y : p.blocks[b])
                    if (y == x) return b;
            return -1;
        };
        for (int j = 1; j <= 3; ++j)
            if (block_of(2 * j - 1) == block_of(2 * j)) separated = false;
        CHECK(is_spherical(p, 3) == separated);
    }

    // ({1},{2,4,5},{3}) on [5] has exactly two spherical extensions to [6]
    Partition g{{{1}, {2, 4, 5}, {3}}};
    CHECK(is_spherical(g, 3));
    int extensions = 0;
    for (const Partition& p : sp) {
        Partition q = p;
        for (auto& b : q.blocks) std::erase(b, 6);
        if (q == g) ++extensions;
    }
    CHECK(extensions == 2);

    // a block holding a whole twin pair is rejected
    CHECK_FALSE(is_spherical(Partition{{{1, 2}, {3, 5}, {4, 6}}}, 3));

    CHECK_THROWS_AS(spherical_partitions(5, 3), bad_size_error);
}

TEST_CASE("two spherical extensions exist for every deletion") {
    auto sp6 = spherical_partitions(6, 3);
    for (int j = 1; j <= 6; ++j) {
        std::map<Partition, int> count;
        for (const Partition& p : sp6) {
            Partition q = p;
            for (auto& b : q.blocks) std::erase(b, j);
            ++count[q];
        }
        for (const auto& [g, c] : count) CHECK(c == 2);
    }
}

TEST_CASE("subdivision search") {
    Graph k5 = complete_graph(5);
    auto self_witness = contains_subdivision(k5, k5);
    REQUIRE(self_witness.has_value());
    CHECK(self_witness->paths.size() == 10);

    auto pet = contains_subdivision(petersen_graph(), complete_bipartite(3, 3));
    REQUIRE(pet.has_value());
    // branch vertices distinct, paths internally disjoint
    std::set<int> branch(pet->branch.begin(), pet->branch.end());
    CHECK(branch.size() == 6);
    std::set<int> interior;
    for (const auto& path : pet->paths)
        for (std::size_t i = 1; i + 1 < path.size(); ++i) {
            CHECK(!branch.count(path[i]));
            CHECK(interior.insert(path[i]).second);
        }

    CHECK_FALSE(contains_subdivision(grid_graph(4, 4), complete_graph(5), 16).has_value());
    CHECK_THROWS_AS(contains_subdivision(grid_graph(4, 4), complete_graph(5)),
                    too_large_error);
}

TEST_CASE("Kuratowski oracle on small fixtures") {
    CHECK(kuratowski_free(complete_graph(4)));
    CHECK_FALSE(kuratowski_free(complete_graph(5)));
    CHECK_FALSE(kuratowski_free(complete_bipartite(3, 3)));
    CHECK_FALSE(kuratowski_free(complete_graph(6)));
    CHECK(kuratowski_free(wheel_graph(5)));

    Graph k5_minus = complete_graph(5);
    k5_minus.edges.erase(
        std::find(k5_minus.edges.begin(), k5_minus.edges.end(), EdgeId{1, 2}));
    CHECK(kuratowski_free(k5_minus));
}
