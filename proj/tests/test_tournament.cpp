#include <doctest.h>

#include <sstream>

#include "kingsim/errors.hpp"
#include "kingsim/tournament.hpp"

using namespace kingsim;

TEST_CASE("transitive tournament is the total order") {
    auto t = generate_tournament(TournamentKind::Transitive, 3);
    CHECK(t.beats(0, 1));
    CHECK(t.beats(0, 2));
    CHECK(t.beats(1, 2));
    CHECK_FALSE(t.beats(2, 0));
}

TEST_CASE("rotational 3 is the directed cycle") {
    auto t = generate_tournament(TournamentKind::Rotational, 3);
    CHECK(t.beats(0, 1));
    CHECK(t.beats(1, 2));
    CHECK(t.beats(2, 0));
}

TEST_CASE("rotational rejects even n") {
    CHECK_THROWS_AS(generate_tournament(TournamentKind::Rotational, 4),
                    InvalidParameterError);
}

TEST_CASE("uniform generation is a pure function of (n, seed)") {
    auto a = generate_tournament(TournamentKind::UniformRandom, 5, 7);
    auto b = generate_tournament(TournamentKind::UniformRandom, 5, 7);
    CHECK(a == b);
    auto c = generate_tournament(TournamentKind::UniformRandom, 5, 8);
    CHECK(a != c);
}

TEST_CASE("out-degree sum equals the pair count") {
    for (std::uint64_t seed : {0ULL, 1ULL, 2ULL, 3ULL}) {
        auto t = generate_tournament(TournamentKind::UniformRandom, 13, seed);
        std::size_t sum = 0;
        for (Vertex v = 0; v < t.size(); ++v) sum += t.out_degree(v);
        CHECK(sum == Tournament::pair_count(13));
    }
    auto r = generate_tournament(TournamentKind::Rotational, 9);
    for (Vertex v = 0; v < 9; ++v) CHECK(r.out_degree(v) == 4);
}

TEST_CASE("self pairs and out-of-range vertices are rejected") {
    Tournament t(4);
    CHECK_THROWS_AS(t.beats(1, 1), InvalidParameterError);
    CHECK_THROWS_AS(t.beats(0, 4), InvalidParameterError);
    CHECK_THROWS_AS(t.set_arc(2, 2), InvalidParameterError);
}

TEST_CASE("tournament file round trip") {
    auto t = generate_tournament(TournamentKind::UniformRandom, 9, 42);
    std::stringstream buf;
    save_tournament(t, buf);
    auto back = load_tournament(buf);
    CHECK(back == t);
}

TEST_CASE("tournament loader rejects malformed input") {
    std::stringstream missing("nope\n");
    CHECK_THROWS_AS(load_tournament(missing), IoError);
    std::stringstream incomplete("n=3\n0 1\n");
    CHECK_THROWS_AS(load_tournament(incomplete), IoError);
    std::stringstream duplicated("n=3\n0 1\n1 0\n0 2\n1 2\n");
    CHECK_THROWS_AS(load_tournament(duplicated), IoError);
}
