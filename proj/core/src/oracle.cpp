#include "kingsim/oracle.hpp"

#include "kingsim/errors.hpp"

namespace kingsim {

std::size_t RevealedDigraph::pair_index(Vertex lo, Vertex hi) const {
    auto l = static_cast<std::size_t>(lo);
    auto h = static_cast<std::size_t>(hi);
    auto n = static_cast<std::size_t>(n_);
    return l * (2 * n - l - 1) / 2 + (h - l - 1);
}

bool RevealedDigraph::known(Vertex u, Vertex v) const {
    if (u > v) std::swap(u, v);
    return state_[pair_index(u, v)] != 0;
}

std::optional<Vertex> RevealedDigraph::winner(Vertex u, Vertex v) const {
    Vertex lo = std::min(u, v), hi = std::max(u, v);
    switch (state_[pair_index(lo, hi)]) {
        case 1: return lo;
        case 2: return hi;
        default: return std::nullopt;
    }
}

bool RevealedDigraph::beats(Vertex u, Vertex v) const {
    auto w = winner(u, v);
    return w.has_value() && *w == u;
}

void RevealedDigraph::record(Vertex from, Vertex to) {
    if (from == to || from < 0 || to < 0 || from >= n_ || to >= n_)
        throw InvalidParameterError("RevealedDigraph: bad pair");
    Vertex lo = std::min(from, to), hi = std::max(from, to);
    auto& st = state_[pair_index(lo, hi)];
    std::uint8_t want = (from == lo) ? 1 : 2;
    if (st == 0) {
        st = want;
        ++arcs_;
    } else if (st != want) {
        throw InternalContradictionError("RevealedDigraph: conflicting record for a pair");
    }
}

DynBitset RevealedDigraph::out_row(Vertex v) const {
    DynBitset row(static_cast<std::size_t>(n_));
    for (Vertex u = 0; u < n_; ++u)
        if (u != v && beats(v, u)) row.set(static_cast<std::size_t>(u));
    return row;
}

std::size_t RevealedDigraph::out_degree(Vertex v) const {
    std::size_t d = 0;
    for (Vertex u = 0; u < n_; ++u)
        if (u != v && beats(v, u)) ++d;
    return d;
}

Arc ArcOracle::query(Vertex u, Vertex v) {
    if (u == v) throw InvalidParameterError("ArcOracle: invalid query u == v");
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
        throw InvalidParameterError("ArcOracle: vertex out of range");

    if (auto w = ledger_.revealed().winner(u, v)) {
        Vertex loser = (*w == u) ? v : u;
        return Arc{*w, loser};  // memoized, not billed again
    }

    Vertex from, to;
    if (truth_ != nullptr) {
        if (truth_->beats(u, v)) { from = u; to = v; }
        else { from = v; to = u; }
    } else {
        // Greedy obscurer: the arc points toward the endpoint with the larger
        // revealed out-degree; ties toward the larger index.
        int du = adversary_outdeg_[static_cast<std::size_t>(u)];
        int dv = adversary_outdeg_[static_cast<std::size_t>(v)];
        Vertex head;
        if (du != dv)
            head = (du > dv) ? u : v;
        else
            head = std::max(u, v);
        from = (head == u) ? v : u;
        to = head;
        ++adversary_outdeg_[static_cast<std::size_t>(from)];
    }
    ledger_.record(from, to);
    return Arc{from, to};
}

}  // namespace kingsim
