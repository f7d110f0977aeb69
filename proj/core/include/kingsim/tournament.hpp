#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "kingsim/bits.hpp"

namespace kingsim {

using Vertex = int;

enum class TournamentKind { UniformRandom, Transitive, Rotational };

/// Orientation of the complete graph on [0, n). One bit per unordered pair
/// in triangular layout; bit set <=> arc from the lower index to the higher.
/// Structurally always a valid tournament: every pair has exactly one arc.
class Tournament {
public:
    explicit Tournament(int n);

    int size() const { return n_; }

    /// true iff the arc u -> v is present (u != v).
    bool beats(Vertex u, Vertex v) const;

    Vertex winner(Vertex u, Vertex v) const { return beats(u, v) ? u : v; }

    /// Orients the pair {u, v} as u -> v.
    void set_arc(Vertex u, Vertex v);

    std::size_t out_degree(Vertex v) const;

    /// Out-neighbourhood of v as an n-bit row.
    DynBitset out_row(Vertex v) const;

    static std::size_t pair_count(int n) {
        return static_cast<std::size_t>(n) * (n - 1) / 2;
    }

    bool operator==(const Tournament& other) const = default;

private:
    std::size_t pair_index(Vertex lo, Vertex hi) const;
    void check_pair(Vertex u, Vertex v) const;

    int n_ = 0;
    DynBitset bits_;
};

/// Deterministic instance families. UniformRandom is a pure function of
/// (n, seed); Rotational requires odd n (vertex i beats the next (n-1)/2
/// vertices mod n).
Tournament generate_tournament(TournamentKind kind, int n, std::uint64_t seed = 0);

TournamentKind parse_tournament_kind(const std::string& name);
std::string tournament_kind_name(TournamentKind kind);

/// Text format: line 1 "n=<int>", then one "u v" line per pair (arc u->v),
/// pairs in lexicographic order of {min,max}.
void save_tournament(const Tournament& t, std::ostream& out);
Tournament load_tournament(std::istream& in);
void save_tournament_file(const Tournament& t, const std::string& path);
Tournament load_tournament_file(const std::string& path);

}  // namespace kingsim
