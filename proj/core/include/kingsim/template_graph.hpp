#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "kingsim/bits.hpp"
#include "kingsim/oracle.hpp"
#include "kingsim/rational.hpp"
#include "kingsim/tournament.hpp"

namespace kingsim {

/// Parameters of the random query plan. The edge probability is
/// p = (2 ln n + 2) / (kappa n^{2/3}), clamped to 1 for small n (log is the
/// natural logarithm; the concentration algebra forces base e).
struct TemplateParams {
    int n = 0;
    Rational kappa{1, 2};
    std::uint64_t seed = 0;

    double edge_probability() const;
    /// s = ceil(n^{2/3})
    int tile_scale() const;
    /// ceil(kappa * n^{2/3}), the audited set size.
    std::size_t set_size() const;

    void validate() const;
};

/// Undirected query plan: vertex set [0, n) plus an edge set. No self loops,
/// no duplicates; edges kept in lexicographic order.
class TemplateGraph {
public:
    TemplateGraph() = default;
    TemplateGraph(int n, std::vector<std::pair<Vertex, Vertex>> edges);

    int size() const { return n_; }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<std::pair<Vertex, Vertex>>& edges() const { return edges_; }

    bool has_edge(Vertex u, Vertex v) const;
    const DynBitset& adjacency(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }

    /// Undirected edges with both endpoints inside the mask.
    std::size_t edges_inside(const DynBitset& mask) const;
    /// Undirected edges with one endpoint in each mask (masks disjoint).
    std::size_t edges_between(const DynBitset& a, const DynBitset& b) const;

private:
    int n_ = 0;
    std::vector<std::pair<Vertex, Vertex>> edges_;
    std::vector<DynBitset> adj_;
};

/// Each unordered pair joins independently with probability p; pure function
/// of (n, kappa, seed).
TemplateGraph generate_template(const TemplateParams& params);

/// The Chernoff cutoff 2m with m = (2 ln n + 2) n^{4/3} / kappa; generated
/// edge counts exceed it with probability at most 1/4.
double edge_budget(const TemplateParams& params);

struct AuditReport {
    enum class Mode { Exhaustive, Sampled };
    std::size_t trials = 0;
    std::size_t violations = 0;
    Mode mode = Mode::Sampled;
    std::size_t set_size = 0;

    bool passed() const { return violations == 0; }
};

/// Checks the template property: every pair of disjoint vertex sets of size
/// ceil(kappa n^{2/3}) has at least one crossing edge. Exhaustive when the
/// pair count fits under the cutoff, otherwise `trials` sampled pairs.
/// If sets of that size cannot be disjoint the report trivially passes.
AuditReport audit_template(const TemplateGraph& g, const Rational& kappa, std::size_t trials,
                           std::uint64_t seed, std::size_t exhaustive_cutoff = 1000000);

/// Orientation of a template as revealed by the oracle. Out-rows are over
/// template arcs only.
class OrientedTemplate {
public:
    OrientedTemplate() = default;
    OrientedTemplate(const TemplateGraph& g, std::vector<Arc> arcs);

    int size() const { return n_; }
    std::size_t edge_count() const { return arcs_.size(); }
    const std::vector<Arc>& arcs() const { return arcs_; }

    const DynBitset& out_row(Vertex v) const { return out_[static_cast<std::size_t>(v)]; }
    const DynBitset& adjacency(Vertex v) const { return und_[static_cast<std::size_t>(v)]; }
    std::size_t out_degree(Vertex v) const { return out_deg_[static_cast<std::size_t>(v)]; }

    bool has_arc(Vertex u, Vertex v) const {
        return out_[static_cast<std::size_t>(u)].test(static_cast<std::size_t>(v));
    }

    std::size_t edges_inside(const DynBitset& mask) const;

private:
    int n_ = 0;
    std::vector<Arc> arcs_;
    std::vector<DynBitset> out_;
    std::vector<DynBitset> und_;
    std::vector<std::size_t> out_deg_;
};

/// Stage one of the seeker: queries exactly the template edges, in
/// lexicographic order. Non-adaptive -- the queried pair set is a function
/// of the template alone.
OrientedTemplate orient_template(const TemplateGraph& g, ArcOracle& oracle);

/// Text format: header "n=<int> kappa=<num> seed=<int>", then one "u v"
/// line per edge, lexicographic.
void save_template(const TemplateGraph& g, const Rational& kappa, std::uint64_t seed,
                   std::ostream& out);
TemplateGraph load_template(std::istream& in);
void save_template_file(const TemplateGraph& g, const Rational& kappa, std::uint64_t seed,
                        const std::string& path);
TemplateGraph load_template_file(const std::string& path);

}  // namespace kingsim
