#include "kingsim/kings.hpp"

#include "kingsim/errors.hpp"

namespace kingsim {

namespace {

void check_vertex(int n, Vertex v) {
    if (v < 0 || v >= n) throw InvalidParameterError("vertex out of range");
}

template <typename OutRow>
DynBitset closed_second_neighborhood(int n, Vertex v, OutRow&& out_row) {
    DynBitset reach = out_row(v);
    DynBitset direct = reach;
    for (Vertex u = 0; u < n; ++u)
        if (direct.test(static_cast<std::size_t>(u))) reach |= out_row(u);
    reach.set(static_cast<std::size_t>(v));
    return reach;
}

}  // namespace

std::vector<Vertex> second_out_neighborhood(const Tournament& t, Vertex v) {
    check_vertex(t.size(), v);
    DynBitset reach = closed_second_neighborhood(
        t.size(), v, [&](Vertex u) { return t.out_row(u); });
    std::vector<Vertex> result;
    for (Vertex u = 0; u < t.size(); ++u)
        if (reach.test(static_cast<std::size_t>(u))) result.push_back(u);
    return result;
}

std::size_t control_count(const Tournament& t, Vertex v) {
    check_vertex(t.size(), v);
    return closed_second_neighborhood(t.size(), v, [&](Vertex u) { return t.out_row(u); })
        .count();
}

double control_fraction(const Tournament& t, Vertex v) {
    return static_cast<double>(control_count(t, v)) / static_cast<double>(t.size());
}

bool is_king(const Tournament& t, Vertex v) {
    return control_count(t, v) == static_cast<std::size_t>(t.size());
}

Vertex mod_vertex(const Tournament& t) {
    Vertex best = 0;
    std::size_t best_deg = t.out_degree(0);
    for (Vertex v = 1; v < t.size(); ++v) {
        std::size_t d = t.out_degree(v);
        if (d > best_deg) { best = v; best_deg = d; }
    }
    return best;
}

std::size_t revealed_control_lower_bound(const RevealedDigraph& r, Vertex v) {
    check_vertex(r.size(), v);
    return closed_second_neighborhood(r.size(), v, [&](Vertex u) { return r.out_row(u); })
        .count();
}

}  // namespace kingsim
