#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "kingsim/tournament.hpp"

namespace kingsim {

struct Arc {
    Vertex from = -1;
    Vertex to = -1;
    bool operator==(const Arc&) const = default;
};

/// Everything the seeker has learned so far: at most one arc per unordered
/// pair. When the oracle wraps a fixed tournament this is a sub-digraph of
/// the ground truth.
class RevealedDigraph {
public:
    RevealedDigraph() = default;
    explicit RevealedDigraph(int n)
        : n_(n), state_(Tournament::pair_count(n), 0) {}

    int size() const { return n_; }
    std::size_t arc_count() const { return arcs_; }

    bool known(Vertex u, Vertex v) const;

    /// Winner of the pair if revealed.
    std::optional<Vertex> winner(Vertex u, Vertex v) const;

    /// true iff the arc u->v has been revealed.
    bool beats(Vertex u, Vertex v) const;

    void record(Vertex from, Vertex to);

    /// Revealed out-neighbourhood of v as an n-bit row.
    DynBitset out_row(Vertex v) const;

    std::size_t out_degree(Vertex v) const;

private:
    std::size_t pair_index(Vertex lo, Vertex hi) const;

    int n_ = 0;
    // 0 = unknown, 1 = arc lo->hi, 2 = arc hi->lo
    std::vector<std::uint8_t> state_;
    std::size_t arcs_ = 0;
};

/// Exact accounting of distinct queried pairs plus the revealed sub-digraph
/// they produced. count() == number of distinct pairs ever charged.
class QueryLedger {
public:
    QueryLedger() = default;
    explicit QueryLedger(int n) : revealed_(n) {}

    std::size_t count() const { return revealed_.arc_count(); }
    bool charged(Vertex u, Vertex v) const { return revealed_.known(u, v); }
    const RevealedDigraph& revealed() const { return revealed_; }

    /// Distinct pairs in first-query order.
    const std::vector<std::pair<Vertex, Vertex>>& order() const { return order_; }

    void record(Vertex from, Vertex to) {
        revealed_.record(from, to);
        order_.emplace_back(std::min(from, to), std::max(from, to));
    }

private:
    RevealedDigraph revealed_;
    std::vector<std::pair<Vertex, Vertex>> order_;
};

/// The only channel by which a strategy learns orientations. Answers are
/// memoized: the same pair queried twice returns the same direction and is
/// billed exactly once.
///
/// Two answer sources:
///  - a fixed Tournament (ground truth held elsewhere, not owned);
///  - the greedy obscurer, an online adversary that orients each new pair
///    toward the endpoint with the larger revealed out-degree ("stronger"
///    vertex loses the arc), ties toward the larger index. Any partial
///    answer set extends to a full tournament, so it is always consistent.
class ArcOracle {
public:
    explicit ArcOracle(const Tournament& truth)
        : n_(truth.size()), truth_(&truth), ledger_(truth.size()) {}

    static ArcOracle greedy_adversary(int n) { return ArcOracle(n); }

    int size() const { return n_; }
    bool has_ground_truth() const { return truth_ != nullptr; }
    const Tournament* ground_truth() const { return truth_; }

    const QueryLedger& ledger() const { return ledger_; }
    const RevealedDigraph& revealed() const { return ledger_.revealed(); }
    std::size_t query_count() const { return ledger_.count(); }

    /// Reveals the pair {u, v}; u != v required.
    Arc query(Vertex u, Vertex v);

private:
    explicit ArcOracle(int n) : n_(n), ledger_(n), adversary_outdeg_(n, 0) {}

    int n_;
    const Tournament* truth_ = nullptr;
    QueryLedger ledger_;
    std::vector<int> adversary_outdeg_;  // revealed out-degrees, adversary mode
};

}  // namespace kingsim
