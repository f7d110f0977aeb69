#include "kingsim/strategy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "kingsim/errors.hpp"
#include "kingsim/kings.hpp"
#include "kingsim/lemmas.hpp"
#include "kingsim/numeric.hpp"

namespace kingsim {

void StrategyParams::validate() const {
    // delta + kappa <= 1/2 is the decomposition lemma's hypothesis, not a
    // construction-time requirement; desk-scale runs (kappa = 1/2) exceed it
    // and get flagged when the decomposition stage is reached.
    Rational e = eta();
    if (!(Rational(0) < e && e < Rational(1, 2)))
        throw InvalidParameterError("StrategyParams: eta must lie in (0, 1/2)");
    if (!(Rational(0) < kappa && kappa < Rational(1)))
        throw InvalidParameterError("StrategyParams: kappa must lie in (0, 1)");
}

bool StrategyParams::decomposition_hypothesis_holds() const {
    return delta + kappa <= Rational(1, 2);
}

std::string branch_name(Branch b) {
    switch (b) {
        case Branch::UltraCertificate: return "UltraCertificate";
        case Branch::DecompositionKing: return "DecompositionKing";
        case Branch::FinalPivot: return "FinalPivot";
        case Branch::Fallback: return "Fallback";
    }
    return "?";
}

namespace {

DynBitset mask_of(int n, std::span<const Vertex> vs) {
    DynBitset m(static_cast<std::size_t>(n));
    for (Vertex v : vs) m.set(static_cast<std::size_t>(v));
    return m;
}

Rational weak_threshold(const OrientedTemplate& ot, const Rational& eta) {
    return (Rational(1, 2) + eta) * Rational(ot.size());
}

void query_all_pairs(ArcOracle& oracle, std::span<const Vertex> vs) {
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j) oracle.query(vs[i], vs[j]);
}

// C(n, k) clamped to cap.
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

// Incremental state for the half-subset descent. d+(S) decomposes as
// sum of template out-degrees over S minus the number of template edges
// inside S, which makes swap deltas two masked popcounts.
struct SubsetState {
    const OrientedTemplate* ot;
    std::vector<Vertex> members;  // sorted
    DynBitset mask;
    std::size_t sum_deg = 0;
    std::size_t edges_in = 0;

    void init(const OrientedTemplate& t, std::vector<Vertex> vs) {
        ot = &t;
        std::sort(vs.begin(), vs.end());
        members = std::move(vs);
        mask = mask_of(t.size(), members);
        sum_deg = 0;
        for (Vertex v : members) sum_deg += t.out_degree(v);
        std::size_t twice = 0;
        for (Vertex v : members)
            twice += DynBitset::count_and(t.adjacency(v), mask);
        edges_in = twice / 2;
    }

    std::size_t out_arcs() const { return sum_deg - edges_in; }

    // Delta of d+ when x (in S) is swapped for y (outside S).
    long long swap_delta(Vertex x, Vertex y) const {
        const auto ex = static_cast<long long>(DynBitset::count_and(ot->adjacency(x), mask));
        long long ey = static_cast<long long>(DynBitset::count_and(ot->adjacency(y), mask));
        if (ot->adjacency(y).test(static_cast<std::size_t>(x))) --ey;  // x leaves first
        long long ddeg = static_cast<long long>(ot->out_degree(y)) -
                         static_cast<long long>(ot->out_degree(x));
        return ddeg - (ey - ex);
    }

    void apply_swap(Vertex x, Vertex y) {
        edges_in -= DynBitset::count_and(ot->adjacency(x), mask);
        mask.reset(static_cast<std::size_t>(x));
        edges_in += DynBitset::count_and(ot->adjacency(y), mask);
        mask.set(static_cast<std::size_t>(y));
        sum_deg += ot->out_degree(y);
        sum_deg -= ot->out_degree(x);
        auto it = std::lower_bound(members.begin(), members.end(), x);
        members.erase(it);
        members.insert(std::upper_bound(members.begin(), members.end(), y), y);
    }
};

// Steepest-descent local search over single swaps; stops at a local minimum,
// on weakness, or when the subset budget runs out. Returns true if weak.
bool descend(SubsetState& state, std::span<const Vertex> h, const Rational& threshold,
             std::size_t& budget) {
    for (;;) {
        if (Rational(static_cast<std::int64_t>(state.out_arcs())) < threshold) return true;
        if (budget == 0) return false;
        long long best = 0;
        Vertex best_x = -1, best_y = -1;
        for (Vertex x : state.members) {
            for (Vertex y : h) {
                if (state.mask.test(static_cast<std::size_t>(y))) continue;
                long long d = state.swap_delta(x, y);
                if (d < best) { best = d; best_x = x; best_y = y; }
            }
        }
        if (best_x < 0) return false;  // local minimum
        state.apply_swap(best_x, best_y);
        --budget;
    }
}

}  // namespace

std::size_t set_out_arcs(const OrientedTemplate& ot, std::span<const Vertex> h) {
    DynBitset mask = mask_of(ot.size(), h);
    std::size_t total = 0;
    for (Vertex v : h) total += DynBitset::count_and_not(ot.out_row(v), mask);
    return total;
}

SetClass classify_set(const OrientedTemplate& ot, std::span<const Vertex> h,
                      const Rational& eta) {
    if (h.empty()) throw InvalidParameterError("classify_set: empty set");
    Rational d(static_cast<std::int64_t>(set_out_arcs(ot, h)));
    return d < weak_threshold(ot, eta) ? SetClass::Weak : SetClass::Strong;
}

std::optional<std::vector<Vertex>> find_weak_half_subset(const OrientedTemplate& ot,
                                                         std::span<const Vertex> h,
                                                         const Rational& eta,
                                                         std::size_t budget,
                                                         std::mt19937_64& rng) {
    if (h.size() % 2 != 0)
        throw InvalidParameterError("find_weak_half_subset: |H| must be even");
    const std::size_t half = h.size() / 2;
    const Rational threshold = weak_threshold(ot, eta);

    std::vector<Vertex> sorted_h(h.begin(), h.end());
    std::sort(sorted_h.begin(), sorted_h.end());

    // Provable lower bound on any half-subset's d+: the smallest possible
    // degree sum minus the largest possible internal edge count. When it
    // clears the threshold no weak half-subset exists.
    {
        std::vector<std::size_t> degs;
        degs.reserve(sorted_h.size());
        for (Vertex v : sorted_h) degs.push_back(ot.out_degree(v));
        std::sort(degs.begin(), degs.end());
        std::size_t min_sum = 0;
        for (std::size_t i = 0; i < half; ++i) min_sum += degs[i];
        DynBitset hmask = mask_of(ot.size(), sorted_h);
        std::size_t max_internal = std::min(half * (half - 1) / 2, ot.edges_inside(hmask));
        std::size_t lower = min_sum > max_internal ? min_sum - max_internal : 0;
        if (!(Rational(static_cast<std::int64_t>(lower)) < threshold)) return std::nullopt;
    }

    auto finish = [](SubsetState& st) {
        std::vector<Vertex> out = st.members;
        return out;
    };

    // (1) greedy seed: the half with the smallest template out-degrees.
    std::vector<Vertex> by_degree = sorted_h;
    std::stable_sort(by_degree.begin(), by_degree.end(), [&](Vertex a, Vertex b) {
        return ot.out_degree(a) < ot.out_degree(b);
    });
    std::vector<Vertex> seed(by_degree.begin(),
                             by_degree.begin() + static_cast<std::ptrdiff_t>(half));

    SubsetState state;
    state.init(ot, seed);
    if (budget > 0) --budget;
    // (2) steepest-descent swaps from the seed.
    if (descend(state, sorted_h, threshold, budget)) return finish(state);

    // (3) exhaustive when the subset count fits the remaining budget.
    if (binomial_capped(h.size(), half, budget) <= budget) {
        std::vector<std::size_t> idx(half);
        for (std::size_t i = 0; i < half; ++i) idx[i] = i;
        std::optional<std::vector<Vertex>> best;
        std::size_t best_val = std::numeric_limits<std::size_t>::max();
        for (;;) {
            std::vector<Vertex> subset;
            subset.reserve(half);
            for (std::size_t i : idx) subset.push_back(sorted_h[i]);
            std::size_t val = set_out_arcs(ot, subset);
            if (val < best_val) { best_val = val; best = subset; }
            // next combination
            std::size_t k = half;
            while (k > 0 && idx[k - 1] == h.size() - half + k - 1) --k;
            if (k == 0) break;
            ++idx[k - 1];
            for (std::size_t j = k; j < half; ++j) idx[j] = idx[j - 1] + 1;
        }
        if (best && Rational(static_cast<std::int64_t>(best_val)) < threshold) return best;
        return std::nullopt;
    }

    // Otherwise random restarts until the budget runs out.
    while (budget > 0) {
        auto picks = sample_k(static_cast<int>(h.size()), static_cast<int>(half), rng);
        std::vector<Vertex> restart;
        restart.reserve(half);
        for (int i : picks) restart.push_back(sorted_h[static_cast<std::size_t>(i)]);
        state.init(ot, std::move(restart));
        --budget;
        if (descend(state, sorted_h, threshold, budget)) return finish(state);
    }
    return std::nullopt;
}

UltraResult ultra_branch(ArcOracle& oracle, const OrientedTemplate& ot,
                         std::span<const Vertex> h, const Rational& eta) {
    if (h.size() < 2) throw InvalidParameterError("ultra_branch: |H| must be >= 2");
    std::vector<Vertex> hs(h.begin(), h.end());
    std::sort(hs.begin(), hs.end());
    query_all_pairs(oracle, hs);

    const auto& revealed = oracle.revealed();
    auto wins_inside = [&](Vertex v) {
        std::size_t w = 0;
        for (Vertex u : hs)
            if (u != v && revealed.beats(v, u)) ++w;
        return w;
    };

    UltraResult result;
    for (Vertex v : hs) {
        if (2 * wins_inside(v) >= hs.size()) { result.candidate = v; break; }
    }
    if (result.candidate < 0)
        throw InternalContradictionError("ultra_branch: no majority vertex after full reveal");

    std::vector<Vertex> beaten;
    for (Vertex u : hs)
        if (u != result.candidate && revealed.beats(result.candidate, u)) beaten.push_back(u);
    const std::size_t keep = (hs.size() + 1) / 2;
    if (beaten.size() > keep) beaten.resize(keep);
    result.witness = beaten;
    result.certified = classify_set(ot, result.witness, eta) == SetClass::Strong;
    return result;
}

std::variant<WeakTiling, UltraShortCircuit> build_weak_tiling(const OrientedTemplate& ot,
                                                              ArcOracle& oracle,
                                                              const StrategyParams& params,
                                                              std::mt19937_64& rng) {
    const int n = ot.size();
    const int s = ceil_n23(n);
    const std::size_t block = 2 * static_cast<std::size_t>(s);

    std::vector<Vertex> pool(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) pool[static_cast<std::size_t>(v)] = v;

    WeakTiling tiling;
    tiling.n = n;
    tiling.tile_size = s;

    while (pool.size() >= block) {
        std::vector<Vertex> h(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(block));
        auto weak = find_weak_half_subset(ot, h, params.eta(), params.ultra_search_budget, rng);
        if (!weak) {
            UltraShortCircuit sc;
            sc.h = h;
            sc.result = ultra_branch(oracle, ot, h, params.eta());
            return sc;
        }
        DynBitset wmask = mask_of(n, *weak);
        std::erase_if(pool, [&](Vertex v) { return wmask.test(static_cast<std::size_t>(v)); });
        tiling.tiles.push_back(std::move(*weak));
    }
    tiling.remainder = pool;
    return tiling;
}

std::vector<Vertex> free_set(const OrientedTemplate& ot, std::span<const Vertex> w) {
    const int n = ot.size();
    DynBitset covered = mask_of(n, w);
    for (Vertex v : w) covered |= ot.out_row(v);
    std::vector<Vertex> result;
    for (Vertex v = 0; v < n; ++v)
        if (!covered.test(static_cast<std::size_t>(v))) result.push_back(v);
    return result;
}

FreeMatrix build_free_matrix(const OrientedTemplate& ot, const WeakTiling& tiling) {
    const int n = ot.size();
    std::vector<DynBitset> rows;
    rows.reserve(tiling.tiles.size());
    for (const auto& tile : tiling.tiles) {
        DynBitset covered = mask_of(n, tile);
        for (Vertex v : tile) covered |= ot.out_row(v);
        DynBitset row(static_cast<std::size_t>(n));
        for (Vertex v = 0; v < n; ++v)
            if (!covered.test(static_cast<std::size_t>(v))) row.set(static_cast<std::size_t>(v));
        rows.push_back(std::move(row));
    }
    return FreeMatrix(n, tiling.tile_size, std::move(rows));
}

GoodSubmatrixResult sample_good_submatrix(const FreeMatrix& m, const StrategyParams& params,
                                          std::mt19937_64& rng) {
    const int n = m.col_count();
    const std::size_t k = 2 * static_cast<std::size_t>(m.tile_size());
    if (k > static_cast<std::size_t>(n))
        throw InvalidParameterError("sample_good_submatrix: need n >= 2s");

    const int cbrt = ceil_cbrt(n);
    const double theta = 0.5 - params.eta().to_double() -
                         2.0 * std::sqrt(std::log(static_cast<double>(n))) / cbrt;
    const double need = theta * static_cast<double>(k);

    GoodSubmatrixResult best;
    bool have_best = false;
    for (std::size_t trial = 0; trial < params.good_submatrix_trials; ++trial) {
        auto cols = sample_k(n, static_cast<int>(k), rng);
        std::vector<Vertex> cols_v(cols.begin(), cols.end());
        DynBitset mask = mask_of(n, cols_v);
        std::size_t min_w = std::numeric_limits<std::size_t>::max();
        for (std::size_t r = 0; r < m.row_count(); ++r)
            min_w = std::min(min_w, m.row_weight_on(r, mask));
        if (m.row_count() == 0) min_w = k;  // vacuous
        if (!have_best || min_w > best.min_row_weight) {
            best.columns = cols_v;
            best.min_row_weight = min_w;
            have_best = true;
        }
        if (static_cast<double>(min_w) >= need) {
            best.columns = cols_v;
            best.min_row_weight = min_w;
            best.accepted = true;
            return best;
        }
    }
    best.accepted = false;
    return best;
}

DecomposeResult decompose(const FreeMatrix& m, ArcOracle& oracle, std::span<const Vertex> v,
                          const StrategyParams& params) {
    params.validate();
    const int s = m.tile_size();
    if (v.size() != 2 * static_cast<std::size_t>(s))
        throw InvalidParameterError("decompose: |V| must equal 2s");

    std::vector<Vertex> vs(v.begin(), v.end());
    std::sort(vs.begin(), vs.end());
    query_all_pairs(oracle, vs);

    const auto& revealed = oracle.revealed();
    auto wins_inside = [&](Vertex y) {
        std::size_t w = 0;
        for (Vertex u : vs)
            if (u != y && revealed.beats(y, u)) ++w;
        return w;
    };

    Vertex y = -1;
    for (Vertex cand : vs) {
        if (wins_inside(cand) >= static_cast<std::size_t>(s)) { y = cand; break; }
    }
    if (y < 0)
        throw InternalContradictionError(
            "decompose: no vertex with d+(y,V) >= s after full reveal");

    std::vector<Vertex> v1;
    for (Vertex u : vs) {
        if (u != y && revealed.beats(y, u)) {
            v1.push_back(u);
            if (v1.size() == static_cast<std::size_t>(s)) break;
        }
    }
    std::vector<Vertex> v2;
    DynBitset v1mask = mask_of(m.col_count(), v1);
    for (Vertex u : vs)
        if (!v1mask.test(static_cast<std::size_t>(u))) v2.push_back(u);

    const Rational kappa_s = params.kappa * Rational(s);
    std::vector<std::size_t> w1, w2;
    for (std::size_t r = 0; r < m.row_count(); ++r) {
        auto weight = static_cast<std::int64_t>(m.row_weight_on(r, v1mask));
        if (Rational(weight) < kappa_s)
            w1.push_back(r);
        else
            w2.push_back(r);
    }

    const int cbrt = ceil_cbrt(m.col_count());
    Rational w1_cut = (Rational(1, 2) - params.delta - params.kappa) * Rational(cbrt) -
                      Rational(2);
    DecomposeResult result;
    result.y = y;
    if (Rational(static_cast<std::int64_t>(w1.size())) < w1_cut) {
        result.king_certificate = true;
        return result;
    }
    Decomposition d;
    d.v1 = std::move(v1);
    d.v2 = std::move(v2);
    d.w1 = std::move(w1);
    d.w2 = std::move(w2);
    d.pivot_y = y;
    result.decomposition = std::move(d);
    return result;
}

SelectV3Result select_v3(const FreeMatrix& m, std::span<const std::size_t> w2,
                         std::span<const Vertex> excluded, const StrategyParams& params) {
    const int n = m.col_count();
    const int s = m.tile_size();
    DynBitset ex = mask_of(n, excluded);
    std::vector<Vertex> candidates;
    for (Vertex v = 0; v < n; ++v)
        if (!ex.test(static_cast<std::size_t>(v))) candidates.push_back(v);
    if (candidates.size() < static_cast<std::size_t>(s))
        throw InvalidParameterError("select_v3: fewer than s columns remain");

    std::vector<std::size_t> weight(static_cast<std::size_t>(n), 0);
    for (std::size_t r : w2)
        for (Vertex v : candidates)
            if (m.at(r, v)) ++weight[static_cast<std::size_t>(v)];

    std::stable_sort(candidates.begin(), candidates.end(), [&](Vertex a, Vertex b) {
        return weight[static_cast<std::size_t>(a)] > weight[static_cast<std::size_t>(b)];
    });
    SelectV3Result result;
    result.columns.assign(candidates.begin(), candidates.begin() + s);
    std::sort(result.columns.begin(), result.columns.end());

    result.min_weight = std::numeric_limits<std::size_t>::max();
    for (Vertex v : result.columns)
        result.min_weight = std::min(result.min_weight, weight[static_cast<std::size_t>(v)]);

    const int cbrt = ceil_cbrt(n);
    Rational bound = (Rational(1, 2) - params.delta - Rational(3, cbrt)) *
                     Rational(static_cast<std::int64_t>(w2.size()));
    result.meets_bound =
        Rational(static_cast<std::int64_t>(result.min_weight)) >= bound;
    return result;
}

Vertex final_pivot(ArcOracle& oracle, std::span<const Vertex> v2,
                   std::span<const Vertex> v3) {
    if (v2.size() != v3.size())
        throw InvalidParameterError("final_pivot: |V2| must equal |V3|");
    std::vector<Vertex> v3s(v3.begin(), v3.end());
    std::sort(v3s.begin(), v3s.end());
    query_all_pairs(oracle, v3s);
    std::vector<Vertex> v2s(v2.begin(), v2.end());
    std::sort(v2s.begin(), v2s.end());
    for (Vertex a : v2s)
        for (Vertex b : v3s) oracle.query(a, b);

    const auto& revealed = oracle.revealed();
    auto beats = [&](Vertex u, Vertex v) {
        auto w = revealed.winner(u, v);
        if (!w)
            throw InternalContradictionError("final_pivot: pair unexpectedly unrevealed");
        return *w == u;
    };
    return find_bipartition_pivot(beats, std::span<const Vertex>(v2s),
                                  std::span<const Vertex>(v3s));
}

namespace {

// First `limit` revealed out-neighbours of v within `side`, ascending.
std::vector<Vertex> truncated_out_in(const RevealedDigraph& revealed, Vertex v,
                                     std::span<const Vertex> side, std::size_t limit) {
    std::vector<Vertex> out;
    std::vector<Vertex> sorted(side.begin(), side.end());
    std::sort(sorted.begin(), sorted.end());
    for (Vertex u : sorted) {
        if (u != v && revealed.beats(v, u)) {
            out.push_back(u);
            if (out.size() == limit) break;
        }
    }
    return out;
}

}  // namespace

StrategyOutcome run_seeker_on_template(ArcOracle& oracle, const StrategyParams& params,
                                       std::mt19937_64& rng, const TemplateGraph& tg) {
    params.validate();
    const int n = oracle.size();
    if (n < 8) throw InvalidParameterError("run_seeker: n must be >= 8");
    if (tg.size() != n) throw InvalidParameterError("run_seeker: template size mismatch");

    StrategyOutcome outcome;
    outcome.n = n;
    auto& tr = outcome.transcript;

    std::size_t mark = oracle.query_count();
    OrientedTemplate ot = orient_template(tg, oracle);
    tr.template_edges = tg.edge_count();
    tr.queries_template = oracle.query_count() - mark;

    auto finalize = [&](Branch branch, Vertex candidate, std::size_t theoretical) {
        outcome.branch = outcome.flags.empty() ? branch : Branch::Fallback;
        outcome.candidate = candidate;
        outcome.theoretical_bound = theoretical;
        outcome.revealed_bound = revealed_control_lower_bound(oracle.revealed(), candidate);
        outcome.queries = oracle.query_count();
        return outcome;
    };

    mark = oracle.query_count();
    auto tiled = build_weak_tiling(ot, oracle, params, rng);
    if (auto* sc = std::get_if<UltraShortCircuit>(&tiled)) {
        tr.queries_ultra = oracle.query_count() - mark;
        tr.ultra_set = sc->h;
        if (sc->result.certified) {
            auto bound = ((Rational(1, 2) + params.eta()) * Rational(n)).ceil();
            return finalize(Branch::UltraCertificate, sc->result.candidate,
                            static_cast<std::size_t>(bound));
        }
        outcome.flags.push_back("ultra-strength-check-failed");
        return finalize(Branch::Fallback, sc->result.candidate, 0);
    }

    const WeakTiling& tiling = std::get<WeakTiling>(tiled);
    tr.tiles = tiling.tiles;
    tr.remainder = tiling.remainder;
    tr.tiling_complete = true;
    if (!params.decomposition_hypothesis_holds())
        outcome.flags.push_back("delta-plus-kappa-above-half");

    FreeMatrix m = build_free_matrix(ot, tiling);
    tr.row_weights = m.row_weights();

    GoodSubmatrixResult good = sample_good_submatrix(m, params, rng);
    if (!good.accepted) outcome.flags.push_back("good-submatrix-below-threshold");
    tr.columns = good.columns;

    mark = oracle.query_count();
    DecomposeResult dec = decompose(m, oracle, good.columns, params);
    tr.queries_columns = oracle.query_count() - mark;
    tr.decompose_y = dec.y;

    const int s = m.tile_size();
    if (dec.king_certificate) {
        auto bound = ((Rational(1) - params.kappa) *
                      (Rational(1, 2) + params.delta + params.kappa) * Rational(n))
                         .ceil();
        return finalize(Branch::DecompositionKing, dec.y, static_cast<std::size_t>(bound));
    }

    const Decomposition& d = *dec.decomposition;
    tr.v1 = d.v1;
    tr.v2 = d.v2;
    tr.w1_rows = d.w1;
    tr.w2_rows = d.w2;

    if (n - 2 * s < s) {
        // No room for s fresh columns (possible only for n < 27); the
        // decomposition pivot is still a sound candidate.
        outcome.flags.push_back("v3-unavailable");
        return finalize(Branch::Fallback, dec.y, 0);
    }

    SelectV3Result v3 = select_v3(m, d.w2, good.columns, params);
    if (!v3.meets_bound) outcome.flags.push_back("v3-below-threshold");
    tr.v3 = v3.columns;

    Vertex candidate = -1;
    mark = oracle.query_count();
    try {
        candidate = final_pivot(oracle, d.v2, v3.columns);
    } catch (const InternalContradictionError&) {
        outcome.flags.push_back("pivot-not-found");
        // Still query-complete over V2 u V3; fall back to the vertex with the
        // best min cross-degree.
        const auto& revealed = oracle.revealed();
        auto degree_into = [&](Vertex v, const std::vector<Vertex>& side) {
            std::size_t deg = 0;
            for (Vertex u : side)
                if (u != v && revealed.beats(v, u)) ++deg;
            return deg;
        };
        std::vector<Vertex> all(d.v2.begin(), d.v2.end());
        all.insert(all.end(), v3.columns.begin(), v3.columns.end());
        std::sort(all.begin(), all.end());
        std::size_t best = 0;
        for (Vertex v : all) {
            std::size_t score = std::min(degree_into(v, d.v2), degree_into(v, v3.columns));
            if (candidate < 0 || score > best) { candidate = v; best = score; }
        }
    }
    tr.queries_pivot = oracle.query_count() - mark;
    tr.pivot = candidate;

    const auto quarter = static_cast<std::size_t>((s + 3) / 4);  // ceil(s/4)
    tr.v2_prime = truncated_out_in(oracle.revealed(), candidate, d.v2, quarter);
    tr.v3_prime = truncated_out_in(oracle.revealed(), candidate, v3.columns, quarter);

    std::vector<Vertex> prime_union = tr.v2_prime;
    prime_union.insert(prime_union.end(), tr.v3_prime.begin(), tr.v3_prime.end());
    DynBitset prime_mask = mask_of(n, prime_union);
    const Rational kappa_s = params.kappa * Rational(s);
    std::size_t qualifying = 0;
    for (std::size_t r = 0; r < m.row_count(); ++r) {
        auto w = static_cast<std::int64_t>(m.row_weight_on(r, prime_mask));
        if (Rational(w) >= kappa_s) ++qualifying;
    }
    tr.qualifying_rows = qualifying;

    auto bound = ((Rational(1) - params.kappa) * Rational(s) *
                  Rational(static_cast<std::int64_t>(qualifying)))
                     .ceil();
    return finalize(Branch::FinalPivot, candidate, static_cast<std::size_t>(bound));
}

StrategyOutcome run_seeker(ArcOracle& oracle, const StrategyParams& params,
                           std::mt19937_64& rng) {
    TemplateParams tp;
    tp.n = oracle.size();
    tp.kappa = params.kappa;
    tp.seed = params.template_seed;
    TemplateGraph tg = generate_template(tp);
    return run_seeker_on_template(oracle, params, rng, tg);
}

}  // namespace kingsim
