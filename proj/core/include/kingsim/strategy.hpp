#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "kingsim/free_matrix.hpp"
#include "kingsim/oracle.hpp"
#include "kingsim/rational.hpp"
#include "kingsim/template_graph.hpp"

namespace kingsim {

/// Knobs of the seeker pipeline. eta defaults to delta (the final theorem
/// instantiates both roles with the same value). kappa defaults to 1/2 for
/// desk-scale runs; 1/4000 is only meaningful in the constants chain.
struct StrategyParams {
    Rational delta{2, 17};
    Rational kappa{1, 2};
    std::optional<Rational> eta_override;
    std::uint64_t template_seed = 0;
    std::size_t ultra_search_budget = 400;     // max half-subsets examined per search
    std::size_t good_submatrix_trials = 64;    // max column samples

    Rational eta() const { return eta_override ? *eta_override : delta; }

    /// 0 < eta < 1/2 and 0 < kappa < 1.
    void validate() const;

    /// delta + kappa <= 1/2, the decomposition lemma's hypothesis. Runs that
    /// reach the decomposition stage without it are flagged, not aborted.
    bool decomposition_hypothesis_holds() const;
};

enum class SetClass { Weak, Strong };

enum class Branch { UltraCertificate, DecompositionKing, FinalPivot, Fallback };

std::string branch_name(Branch b);

/// Disjoint tiles of size tile_size each plus a remainder of size < 2*tile_size.
/// Every tile is eta-weak in the oriented template by construction.
struct WeakTiling {
    int n = 0;
    int tile_size = 0;
    std::vector<std::vector<Vertex>> tiles;
    std::vector<Vertex> remainder;
};

struct Decomposition {
    std::vector<Vertex> v1, v2;        // column split, |v1| = |v2| = tile size
    std::vector<std::size_t> w1, w2;   // row split: w1 strictly below kappa*s on v1
    Vertex pivot_y = -1;               // v1 is a subset of N+(pivot_y)
};

struct TranscriptSummary {
    std::size_t template_edges = 0;
    std::vector<std::vector<Vertex>> tiles;
    std::vector<Vertex> remainder;
    bool tiling_complete = false;
    std::vector<std::size_t> row_weights;   // free-matrix row weights, when built

    std::vector<Vertex> ultra_set;          // H, when the ultra branch fired
    std::vector<Vertex> columns;            // V, the good-sub-matrix columns
    std::vector<Vertex> v1, v2, v3, v2_prime, v3_prime;
    std::vector<std::size_t> w1_rows, w2_rows;
    Vertex decompose_y = -1;
    Vertex pivot = -1;
    std::size_t qualifying_rows = 0;        // rows >= kappa*s on V2' u V3'

    // Ledger growth per stage (new distinct pairs only).
    std::size_t queries_template = 0;
    std::size_t queries_ultra = 0;
    std::size_t queries_columns = 0;
    std::size_t queries_pivot = 0;  // inside V3 plus V2 x V3
};

struct StrategyOutcome {
    int n = 0;
    Branch branch = Branch::Fallback;
    Vertex candidate = -1;
    /// Sound lower bound on |N++[candidate]| from revealed arcs only.
    std::size_t revealed_bound = 0;
    /// Bound implied by the cover lemmas; valid only when the template
    /// property holds and no stage was flagged.
    std::size_t theoretical_bound = 0;
    std::size_t queries = 0;
    std::vector<std::string> flags;
    TranscriptSummary transcript;
};

/// d+(H) over oriented-template arcs: arcs from H to outside H.
std::size_t set_out_arcs(const OrientedTemplate& ot, std::span<const Vertex> h);

/// Weak iff d+(H) < (1/2 + eta) * n, strict (exact rational comparison).
SetClass classify_set(const OrientedTemplate& ot, std::span<const Vertex> h,
                      const Rational& eta);

/// Searches for an eta-weak subset of H of size |H|/2. Order: greedy seed
/// (smallest template out-degrees) -> steepest-descent swaps -> exhaustive
/// enumeration if C(|H|,|H|/2) fits the budget, else random restarts.
/// Budget counts subsets examined. |H| must be even.
std::optional<std::vector<Vertex>> find_weak_half_subset(const OrientedTemplate& ot,
                                                         std::span<const Vertex> h,
                                                         const Rational& eta,
                                                         std::size_t budget,
                                                         std::mt19937_64& rng);

struct UltraResult {
    Vertex candidate = -1;
    bool certified = false;            // strength check on the witness passed
    std::vector<Vertex> witness;       // N+(candidate) in H, truncated to ceil(|H|/2)
};

/// Queries every pair inside H, picks the smallest-index v with at least
/// |H|/2 wins inside H, and verifies that its truncated out-set is strong.
UltraResult ultra_branch(ArcOracle& oracle, const OrientedTemplate& ot,
                         std::span<const Vertex> h, const Rational& eta);

struct UltraShortCircuit {
    std::vector<Vertex> h;
    UltraResult result;
};

/// Tiles [0, n) greedily: H = the 2s smallest untiled vertices; a weak half
/// becomes the next tile, otherwise the ultra branch resolves the run.
std::variant<WeakTiling, UltraShortCircuit> build_weak_tiling(const OrientedTemplate& ot,
                                                              ArcOracle& oracle,
                                                              const StrategyParams& params,
                                                              std::mt19937_64& rng);

/// F(W) = [n] \ (N+(W) u W), out-neighbourhoods over template arcs.
std::vector<Vertex> free_set(const OrientedTemplate& ot, std::span<const Vertex> w);

FreeMatrix build_free_matrix(const OrientedTemplate& ot, const WeakTiling& tiling);

struct GoodSubmatrixResult {
    std::vector<Vertex> columns;       // size 2s, sorted
    bool accepted = false;             // all rows met the goodness threshold
    std::size_t min_row_weight = 0;
};

/// Uniformly samples 2s columns until every row weight on them reaches
/// (1/2 - eta - 2 n^{-1/3} ln^{1/2} n) * 2s; after the trial budget the
/// best-seen sample is returned, flagged.
GoodSubmatrixResult sample_good_submatrix(const FreeMatrix& m, const StrategyParams& params,
                                          std::mt19937_64& rng);

struct DecomposeResult {
    bool king_certificate = false;
    Vertex y = -1;
    std::optional<Decomposition> decomposition;  // present iff not a certificate
};

/// Queries all pairs inside V, picks the smallest-index y with d+(y,V) >= s,
/// splits columns and rows per the decomposition lemma. A small W1 certifies
/// y directly; otherwise the full decomposition is returned.
DecomposeResult decompose(const FreeMatrix& m, ArcOracle& oracle, std::span<const Vertex> v,
                          const StrategyParams& params);

struct SelectV3Result {
    std::vector<Vertex> columns;       // size s, sorted
    bool meets_bound = false;
    std::size_t min_weight = 0;
};

/// The s columns outside `excluded` with the largest weight on rows `w2`,
/// ties to the smaller column index. The bound check applies the column
/// lemma threshold (1/2 - delta - 3 n^{-1/3}) |W2|.
SelectV3Result select_v3(const FreeMatrix& m, std::span<const std::size_t> w2,
                         std::span<const Vertex> excluded, const StrategyParams& params);

/// Queries all pairs inside V3 and all V2 x V3 pairs, then scans the fully
/// revealed tournament over V2 u V3 for a vertex with d+ >= s/4 into both
/// sides. Throws InternalContradictionError when no vertex qualifies.
Vertex final_pivot(ArcOracle& oracle, std::span<const Vertex> v2,
                   std::span<const Vertex> v3);

/// The full seeker: template -> orientation -> tiling (or ultra) -> free
/// matrix -> good sub-matrix -> decomposition (or king) -> V3 -> pivot.
/// Any flagged sub-stage downgrades the branch to Fallback; the revealed
/// bound stays sound in every case. Requires n >= 8.
StrategyOutcome run_seeker(ArcOracle& oracle, const StrategyParams& params,
                           std::mt19937_64& rng);

/// Same pipeline on an externally supplied template (the generated G(n,p)
/// family is dense enough that complete tilings only arise on sparser
/// plans, so tests inject them here).
StrategyOutcome run_seeker_on_template(ArcOracle& oracle, const StrategyParams& params,
                                       std::mt19937_64& rng, const TemplateGraph& tg);

}  // namespace kingsim
