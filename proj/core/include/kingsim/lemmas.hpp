#pragma once

#include <algorithm>
#include <concepts>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "kingsim/bits.hpp"
#include "kingsim/errors.hpp"
#include "kingsim/rational.hpp"
#include "kingsim/tournament.hpp"

namespace kingsim {

/// Orientation of the complete bipartite graph K_{m,m}. Side 0 holds
/// vertices 0..m-1, side 1 holds m..2m-1; exactly one arc per cross pair,
/// no arcs within a side.
class BipartiteOrientation {
public:
    explicit BipartiteOrientation(int m);

    int side_size() const { return m_; }
    int side_of(Vertex v) const { return v < m_ ? 0 : 1; }

    /// true iff the arc u -> v is present; u and v must lie on opposite sides.
    bool beats(Vertex u, Vertex v) const;

    /// Orients the cross pair {u, v} as u -> v.
    void set_arc(Vertex u, Vertex v);

    /// d+(v, other side)
    std::size_t cross_out_degree(Vertex v) const;

    static BipartiteOrientation random(int m, std::uint64_t seed);
    /// All arcs leave the given side.
    static BipartiteOrientation one_way(int m, int from_side);

private:
    std::size_t index(Vertex side0, Vertex side1) const;

    int m_;
    DynBitset bits_;  // bit (i,j) set <=> arc i -> m+j
};

/// High out-degree extraction: returns every vertex removed by the
/// iterative process (out-degree in the full tournament >= alpha*m/2,
/// smallest index first). Guarantees |result| >= (1-alpha)*m and the
/// per-vertex degree bound. Requires alpha*m to be an even integer.
std::vector<Vertex> extract_high_outdegree(const Tournament& t, const Rational& alpha);

/// Removal process over V0 u V1: repeatedly removes the smallest-index
/// survivor whose cross out-degree among surviving opposite-side vertices
/// is >= m/4; stops when none qualifies. Returns the side with >= m/2+1
/// removed vertices and that set. Requires m divisible by 4.
std::pair<int, std::vector<Vertex>> bipartite_extract(const BipartiteOrientation& b);

/// Scans vertices in ascending order and returns the first v with
/// d+(v, S0) >= m/4 and d+(v, S1) >= m/4 (comparison 4*d >= m, exact).
/// The bipartition lemma guarantees existence when |S0| = |S1| = m and m is
/// divisible by 4; if nothing qualifies an InternalContradictionError is
/// thrown for diagnostics.
template <typename Beats>
    requires requires(Beats& b, Vertex u, Vertex v) {
        { b(u, v) } -> std::convertible_to<bool>;
    }
Vertex find_bipartition_pivot(Beats&& beats, std::span<const Vertex> s0,
                              std::span<const Vertex> s1) {
    if (s0.size() != s1.size() || s0.empty())
        throw InvalidParameterError("find_bipartition_pivot: sides must be equal and nonempty");
    const std::size_t m = s0.size();

    std::vector<Vertex> all(s0.begin(), s0.end());
    all.insert(all.end(), s1.begin(), s1.end());
    std::sort(all.begin(), all.end());

    auto degree_into = [&](Vertex v, std::span<const Vertex> side) {
        std::size_t d = 0;
        for (Vertex u : side)
            if (u != v && beats(v, u)) ++d;
        return d;
    };

    for (Vertex v : all) {
        if (4 * degree_into(v, s0) >= m && 4 * degree_into(v, s1) >= m) return v;
    }
    throw InternalContradictionError(
        "find_bipartition_pivot: no qualifying vertex (lemma hypothesis violated?)");
}

inline Vertex find_bipartition_pivot(const Tournament& t, std::span<const Vertex> s0,
                                     std::span<const Vertex> s1) {
    return find_bipartition_pivot([&](Vertex u, Vertex v) { return t.beats(u, v); }, s0, s1);
}

}  // namespace kingsim
