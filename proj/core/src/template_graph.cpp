#include "kingsim/template_graph.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <random>
#include <sstream>

#include "kingsim/errors.hpp"
#include "kingsim/numeric.hpp"

namespace kingsim {

double TemplateParams::edge_probability() const {
    std::int64_t c = 0;
    double n23 = exact_cbrt(n, c) ? static_cast<double>(c * c)
                                  : std::pow(static_cast<double>(n), 2.0 / 3.0);
    double p = (2.0 * std::log(static_cast<double>(n)) + 2.0) / (kappa.to_double() * n23);
    return std::min(p, 1.0);
}

int TemplateParams::tile_scale() const { return ceil_n23(n); }

std::size_t TemplateParams::set_size() const { return ceil_frac_n23(kappa, n); }

void TemplateParams::validate() const {
    if (n < 1) throw InvalidParameterError("TemplateParams: n must be >= 1");
    if (!(Rational(0) < kappa && kappa < Rational(1)))
        throw InvalidParameterError("TemplateParams: kappa must lie in (0,1)");
}

TemplateGraph::TemplateGraph(int n, std::vector<std::pair<Vertex, Vertex>> edges)
    : n_(n), edges_(std::move(edges)) {
    if (n < 1) throw InvalidParameterError("TemplateGraph: n must be >= 1");
    for (auto& [u, v] : edges_) {
        if (u == v) throw InvalidParameterError("TemplateGraph: self loop");
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw InvalidParameterError("TemplateGraph: vertex out of range");
        if (u > v) std::swap(u, v);
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
        throw InvalidParameterError("TemplateGraph: duplicate edge");
    adj_.assign(static_cast<std::size_t>(n), DynBitset(static_cast<std::size_t>(n)));
    for (auto [u, v] : edges_) {
        adj_[static_cast<std::size_t>(u)].set(static_cast<std::size_t>(v));
        adj_[static_cast<std::size_t>(v)].set(static_cast<std::size_t>(u));
    }
}

bool TemplateGraph::has_edge(Vertex u, Vertex v) const {
    return adj_[static_cast<std::size_t>(u)].test(static_cast<std::size_t>(v));
}

std::size_t TemplateGraph::edges_inside(const DynBitset& mask) const {
    std::size_t twice = 0;
    for (Vertex v = 0; v < n_; ++v)
        if (mask.test(static_cast<std::size_t>(v)))
            twice += DynBitset::count_and(adj_[static_cast<std::size_t>(v)], mask);
    return twice / 2;
}

std::size_t TemplateGraph::edges_between(const DynBitset& a, const DynBitset& b) const {
    std::size_t total = 0;
    for (Vertex v = 0; v < n_; ++v)
        if (a.test(static_cast<std::size_t>(v)))
            total += DynBitset::count_and(adj_[static_cast<std::size_t>(v)], b);
    return total;
}

TemplateGraph generate_template(const TemplateParams& params) {
    params.validate();
    const double p = params.edge_probability();
    std::mt19937_64 rng(params.seed);
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex u = 0; u < params.n; ++u)
        for (Vertex v = u + 1; v < params.n; ++v)
            if (uniform_unit(rng) < p) edges.emplace_back(u, v);
    return TemplateGraph(params.n, std::move(edges));
}

double edge_budget(const TemplateParams& params) {
    params.validate();
    double n43 = std::pow(static_cast<double>(params.n), 4.0 / 3.0);
    std::int64_t c = 0;
    if (exact_cbrt(params.n, c)) n43 = static_cast<double>(c * c * c * c);
    double m = (2.0 * std::log(static_cast<double>(params.n)) + 2.0) * n43 /
               params.kappa.to_double();
    return 2.0 * m;
}

namespace {

DynBitset mask_of(int n, const std::vector<int>& vs) {
    DynBitset m(static_cast<std::size_t>(n));
    for (int v : vs) m.set(static_cast<std::size_t>(v));
    return m;
}

bool has_crossing_edge(const TemplateGraph& g, const std::vector<int>& h1, const DynBitset& m2) {
    for (int v : h1)
        if (DynBitset::intersects(g.adjacency(v), m2)) return true;
    return false;
}

// C(n, k) clamped to `cap` to avoid overflow.
std::size_t binomial_capped(std::size_t n, std::size_t k, std::size_t cap) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    unsigned __int128 r = 1;
    for (std::size_t i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
        if (r > cap) return cap + 1;
    }
    return static_cast<std::size_t>(r);
}

// Number of unordered pairs of disjoint k-subsets of [n], clamped to `cap`.
std::size_t disjoint_pair_count_capped(std::size_t n, std::size_t k, std::size_t cap) {
    std::size_t a = binomial_capped(n, k, cap);
    if (a > cap) return cap + 1;
    std::size_t b = binomial_capped(n - k, k, cap);
    if (b > cap) return cap + 1;
    unsigned __int128 total = static_cast<unsigned __int128>(a) * b / 2;
    if (total > cap) return cap + 1;
    return static_cast<std::size_t>(total);
}

bool next_combination(std::vector<int>& c, int n) {
    int k = static_cast<int>(c.size());
    for (int i = k - 1; i >= 0; --i) {
        if (c[static_cast<std::size_t>(i)] < n - k + i) {
            ++c[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < k; ++j)
                c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
            return true;
        }
    }
    return false;
}

}  // namespace

AuditReport audit_template(const TemplateGraph& g, const Rational& kappa, std::size_t trials,
                           std::uint64_t seed, std::size_t exhaustive_cutoff) {
    AuditReport report;
    report.set_size = ceil_frac_n23(kappa, g.size());
    if (report.set_size < 1)
        throw InvalidParameterError("audit_template: set size must be >= 1");
    const auto n = static_cast<std::size_t>(g.size());
    const std::size_t k = report.set_size;

    if (2 * k > n) {
        // Sets of the required size cannot be disjoint; property holds vacuously.
        report.mode = AuditReport::Mode::Exhaustive;
        report.trials = 0;
        return report;
    }

    std::size_t pair_count = disjoint_pair_count_capped(n, k, exhaustive_cutoff);
    if (pair_count <= exhaustive_cutoff) {
        report.mode = AuditReport::Mode::Exhaustive;
        // Enumerate k-subsets once, then check unordered disjoint pairs.
        std::vector<std::vector<int>> subsets;
        std::vector<int> c(k);
        for (std::size_t i = 0; i < k; ++i) c[i] = static_cast<int>(i);
        do {
            subsets.push_back(c);
        } while (next_combination(c, static_cast<int>(n)));

        std::vector<DynBitset> masks;
        masks.reserve(subsets.size());
        for (const auto& s : subsets) masks.push_back(mask_of(g.size(), s));

        for (std::size_t i = 0; i < subsets.size(); ++i) {
            for (std::size_t j = i + 1; j < subsets.size(); ++j) {
                if (DynBitset::intersects(masks[i], masks[j])) continue;
                ++report.trials;
                if (!has_crossing_edge(g, subsets[i], masks[j])) ++report.violations;
            }
        }
        return report;
    }

    report.mode = AuditReport::Mode::Sampled;
    std::mt19937_64 rng(seed);
    for (std::size_t t = 0; t < trials; ++t) {
        auto both = sample_k(static_cast<int>(n), static_cast<int>(2 * k), rng);
        // Split the 2k sample uniformly into the two sets.
        std::vector<int> h1, h2;
        auto pick = sample_k(static_cast<int>(2 * k), static_cast<int>(k), rng);
        std::vector<bool> in_first(2 * k, false);
        for (int idx : pick) in_first[static_cast<std::size_t>(idx)] = true;
        for (std::size_t i = 0; i < 2 * k; ++i)
            (in_first[i] ? h1 : h2).push_back(both[i]);
        ++report.trials;
        if (!has_crossing_edge(g, h1, mask_of(g.size(), h2))) ++report.violations;
    }
    return report;
}

OrientedTemplate::OrientedTemplate(const TemplateGraph& g, std::vector<Arc> arcs)
    : n_(g.size()), arcs_(std::move(arcs)) {
    if (arcs_.size() != g.edge_count())
        throw InvalidParameterError("OrientedTemplate: arc set must match the edge set");
    out_.assign(static_cast<std::size_t>(n_), DynBitset(static_cast<std::size_t>(n_)));
    und_.assign(static_cast<std::size_t>(n_), DynBitset(static_cast<std::size_t>(n_)));
    out_deg_.assign(static_cast<std::size_t>(n_), 0);
    for (const Arc& a : arcs_) {
        Vertex lo = std::min(a.from, a.to), hi = std::max(a.from, a.to);
        if (!g.has_edge(lo, hi))
            throw InvalidParameterError("OrientedTemplate: arc not in template");
        out_[static_cast<std::size_t>(a.from)].set(static_cast<std::size_t>(a.to));
        und_[static_cast<std::size_t>(a.from)].set(static_cast<std::size_t>(a.to));
        und_[static_cast<std::size_t>(a.to)].set(static_cast<std::size_t>(a.from));
        ++out_deg_[static_cast<std::size_t>(a.from)];
    }
}

std::size_t OrientedTemplate::edges_inside(const DynBitset& mask) const {
    std::size_t total = 0;
    for (Vertex v = 0; v < n_; ++v)
        if (mask.test(static_cast<std::size_t>(v)))
            total += DynBitset::count_and(out_[static_cast<std::size_t>(v)], mask);
    return total;  // each internal edge counted once, via its tail
}

OrientedTemplate orient_template(const TemplateGraph& g, ArcOracle& oracle) {
    if (oracle.size() != g.size())
        throw InvalidParameterError("orient_template: oracle and template size mismatch");
    std::vector<Arc> arcs;
    arcs.reserve(g.edge_count());
    for (auto [u, v] : g.edges()) arcs.push_back(oracle.query(u, v));
    return OrientedTemplate(g, std::move(arcs));
}

void save_template(const TemplateGraph& g, const Rational& kappa, std::uint64_t seed,
                   std::ostream& out) {
    out << "n=" << g.size() << " kappa=" << kappa.str() << " seed=" << seed << "\n";
    for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
}

TemplateGraph load_template(std::istream& in) {
    std::string header;
    if (!std::getline(in, header) || header.rfind("n=", 0) != 0)
        throw IoError("template file: missing header");
    std::istringstream hs(header);
    std::string tok;
    int n = -1;
    while (hs >> tok) {
        if (tok.rfind("n=", 0) == 0) n = std::stoi(tok.substr(2));
    }
    if (n < 1) throw IoError("template file: bad n");
    std::vector<std::pair<Vertex, Vertex>> edges;
    Vertex u, v;
    while (in >> u >> v) edges.emplace_back(u, v);
    return TemplateGraph(n, std::move(edges));
}

void save_template_file(const TemplateGraph& g, const Rational& kappa, std::uint64_t seed,
                        const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open for writing: " + path);
    save_template(g, kappa, seed, out);
    if (!out) throw IoError("write failed: " + path);
}

TemplateGraph load_template_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open for reading: " + path);
    return load_template(in);
}

}  // namespace kingsim
