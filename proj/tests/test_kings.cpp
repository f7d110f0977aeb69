#include <doctest.h>

#include <algorithm>
#include <vector>

#include "kingsim/kings.hpp"
#include "kingsim/numeric.hpp"
#include "kingsim/oracle.hpp"

using namespace kingsim;

namespace {

// Independent oracle: plain BFS to depth two over the adjacency relation.
std::vector<Vertex> naive_second_neighborhood(const Tournament& t, Vertex v) {
    std::vector<bool> reach(static_cast<std::size_t>(t.size()), false);
    reach[static_cast<std::size_t>(v)] = true;
    for (Vertex u = 0; u < t.size(); ++u) {
        if (u == v || !t.beats(v, u)) continue;
        reach[static_cast<std::size_t>(u)] = true;
        for (Vertex w = 0; w < t.size(); ++w)
            if (w != u && t.beats(u, w)) reach[static_cast<std::size_t>(w)] = true;
    }
    std::vector<Vertex> out;
    for (Vertex u = 0; u < t.size(); ++u)
        if (reach[static_cast<std::size_t>(u)]) out.push_back(u);
    return out;
}

Tournament from_mask(int n, std::uint32_t mask) {
    Tournament t(n);
    std::size_t bit = 0;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v, ++bit) {
            if (mask & (1u << bit))
                t.set_arc(u, v);
            else
                t.set_arc(v, u);
        }
    return t;
}

}  // namespace

TEST_CASE("second out-neighborhood on the 3-cycle covers everything") {
    auto t = generate_tournament(TournamentKind::Rotational, 3);
    CHECK(second_out_neighborhood(t, 0) == std::vector<Vertex>{0, 1, 2});
}

TEST_CASE("second out-neighborhood cannot reach dominators in a total order") {
    auto t = generate_tournament(TournamentKind::Transitive, 4);
    CHECK(second_out_neighborhood(t, 2) == std::vector<Vertex>{2, 3});
}

TEST_CASE("second out-neighborhood matches the naive BFS oracle") {
    auto t = generate_tournament(TournamentKind::UniformRandom, 6, 7);
    for (Vertex v = 0; v < 6; ++v)
        CHECK(second_out_neighborhood(t, v) == naive_second_neighborhood(t, v));
}

TEST_CASE("control fractions at the extremes") {
    auto t = generate_tournament(TournamentKind::Transitive, 4);
    CHECK(control_fraction(t, 0) == 1.0);
    CHECK(control_fraction(t, 3) == 0.25);
    auto c = generate_tournament(TournamentKind::Rotational, 3);
    for (Vertex v = 0; v < 3; ++v) CHECK(control_fraction(c, v) == 1.0);
}

TEST_CASE("king predicate") {
    Tournament single(1);
    CHECK(is_king(single, 0));

    auto t = generate_tournament(TournamentKind::Transitive, 4);
    CHECK(is_king(t, 0));
    for (Vertex v = 1; v < 4; ++v) CHECK_FALSE(is_king(t, v));

    auto c = generate_tournament(TournamentKind::Rotational, 3);
    for (Vertex v = 0; v < 3; ++v) CHECK(is_king(c, v));
}

TEST_CASE("mod vertex selection and tie break") {
    auto t = generate_tournament(TournamentKind::Transitive, 5);
    CHECK(mod_vertex(t) == 0);
    auto c = generate_tournament(TournamentKind::Rotational, 3);
    CHECK(mod_vertex(c) == 0);
}

TEST_CASE("exhaustive small instances: kings exist and the MOD vertex is one") {
    // All orientations up to n = 6 (2^15 at n = 6).
    for (int n = 1; n <= 6; ++n) {
        const std::size_t pairs = Tournament::pair_count(n);
        for (std::uint32_t mask = 0; mask < (1u << pairs); ++mask) {
            Tournament t = from_mask(n, mask);
            REQUIRE(is_king(t, mod_vertex(t)));
            bool any = false;
            for (Vertex v = 0; v < n && !any; ++v) any = is_king(t, v);
            REQUIRE(any);
        }
    }
}

TEST_CASE("mod vertex is a king on random instances") {
    std::mt19937_64 rng(123);
    for (int i = 0; i < 100; ++i) {
        int n = 1 + static_cast<int>(uniform_below(rng, 60));
        auto t = generate_tournament(TournamentKind::UniformRandom, n, rng());
        CHECK(is_king(t, mod_vertex(t)));
    }
}

TEST_CASE("revealed control bound degenerate cases") {
    RevealedDigraph empty(5);
    CHECK(revealed_control_lower_bound(empty, 2) == 1);

    auto t = generate_tournament(TournamentKind::UniformRandom, 8, 3);
    ArcOracle oracle(t);
    for (Vertex u = 0; u < 8; ++u)
        for (Vertex v = u + 1; v < 8; ++v) oracle.query(u, v);
    for (Vertex v = 0; v < 8; ++v)
        CHECK(revealed_control_lower_bound(oracle.revealed(), v) == control_count(t, v));
}
