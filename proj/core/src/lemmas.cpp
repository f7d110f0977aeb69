#include "kingsim/lemmas.hpp"

#include <random>

namespace kingsim {

BipartiteOrientation::BipartiteOrientation(int m)
    : m_(m), bits_(static_cast<std::size_t>(m) * static_cast<std::size_t>(m)) {
    if (m < 1) throw InvalidParameterError("BipartiteOrientation: m must be >= 1");
}

std::size_t BipartiteOrientation::index(Vertex side0, Vertex side1) const {
    return static_cast<std::size_t>(side0) * static_cast<std::size_t>(m_) +
           static_cast<std::size_t>(side1 - m_);
}

bool BipartiteOrientation::beats(Vertex u, Vertex v) const {
    if (side_of(u) == side_of(v))
        throw InvalidParameterError("BipartiteOrientation: pair within one side");
    if (u < m_) return bits_.test(index(u, v));
    return !bits_.test(index(v, u));
}

void BipartiteOrientation::set_arc(Vertex u, Vertex v) {
    if (side_of(u) == side_of(v))
        throw InvalidParameterError("BipartiteOrientation: pair within one side");
    if (u < m_)
        bits_.set(index(u, v));
    else
        bits_.reset(index(v, u));
}

std::size_t BipartiteOrientation::cross_out_degree(Vertex v) const {
    std::size_t d = 0;
    if (v < m_) {
        for (Vertex u = m_; u < 2 * m_; ++u)
            if (beats(v, u)) ++d;
    } else {
        for (Vertex u = 0; u < m_; ++u)
            if (beats(v, u)) ++d;
    }
    return d;
}

BipartiteOrientation BipartiteOrientation::random(int m, std::uint64_t seed) {
    BipartiteOrientation b(m);
    std::mt19937_64 rng(seed);
    std::uint64_t word = 0;
    int left = 0;
    for (Vertex i = 0; i < m; ++i) {
        for (Vertex j = m; j < 2 * m; ++j) {
            if (left == 0) { word = rng(); left = 64; }
            if (word & 1)
                b.set_arc(i, j);
            else
                b.set_arc(j, i);
            word >>= 1;
            --left;
        }
    }
    return b;
}

BipartiteOrientation BipartiteOrientation::one_way(int m, int from_side) {
    BipartiteOrientation b(m);
    for (Vertex i = 0; i < m; ++i)
        for (Vertex j = m; j < 2 * m; ++j) {
            if (from_side == 0)
                b.set_arc(i, j);
            else
                b.set_arc(j, i);
        }
    return b;
}

std::vector<Vertex> extract_high_outdegree(const Tournament& t, const Rational& alpha) {
    const int m = t.size();
    if (alpha < Rational(0) || alpha > Rational(1))
        throw InvalidParameterError("extract_high_outdegree: alpha must lie in [0,1]");
    Rational am = alpha * Rational(m);
    if (!am.is_integer() || am.num() % 2 != 0)
        throw InvalidParameterError("extract_high_outdegree: alpha*m must be an even integer");
    const std::int64_t threshold = am.num() / 2;  // alpha*m/2

    // Full-tournament degrees never change, so the iterative removal
    // (smallest qualifying index per round) collects exactly the vertices at
    // or above the threshold.
    std::vector<bool> removed(static_cast<std::size_t>(m), false);
    std::vector<Vertex> result;
    for (;;) {
        Vertex pick = -1;
        for (Vertex v = 0; v < m; ++v) {
            if (removed[static_cast<std::size_t>(v)]) continue;
            if (static_cast<std::int64_t>(t.out_degree(v)) >= threshold) { pick = v; break; }
        }
        if (pick < 0) break;
        removed[static_cast<std::size_t>(pick)] = true;
        result.push_back(pick);
    }
    return result;
}

std::pair<int, std::vector<Vertex>> bipartite_extract(const BipartiteOrientation& b) {
    const int m = b.side_size();
    if (m % 4 != 0)
        throw InvalidParameterError("bipartite_extract: m must be divisible by 4");
    const std::size_t threshold = static_cast<std::size_t>(m) / 4;

    std::vector<bool> alive(static_cast<std::size_t>(2 * m), true);
    std::vector<Vertex> removed[2];

    auto surviving_cross_degree = [&](Vertex v) {
        std::size_t d = 0;
        Vertex lo = (v < m) ? m : 0;
        Vertex hi = (v < m) ? 2 * m : m;
        for (Vertex u = lo; u < hi; ++u)
            if (alive[static_cast<std::size_t>(u)] && b.beats(v, u)) ++d;
        return d;
    };

    for (;;) {
        Vertex pick = -1;
        for (Vertex v = 0; v < 2 * m; ++v) {
            if (!alive[static_cast<std::size_t>(v)]) continue;
            if (surviving_cross_degree(v) >= threshold) { pick = v; break; }
        }
        if (pick < 0) break;
        alive[static_cast<std::size_t>(pick)] = false;
        removed[b.side_of(pick)].push_back(pick);
    }

    const std::size_t need = static_cast<std::size_t>(m) / 2 + 1;
    for (int side = 0; side < 2; ++side)
        if (removed[side].size() >= need) return {side, removed[side]};
    throw InternalContradictionError(
        "bipartite_extract: no side reached m/2+1 removals (lemma violated?)");
}

}  // namespace kingsim
