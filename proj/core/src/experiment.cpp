#include "kingsim/experiment.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

#include "kingsim/errors.hpp"
#include "kingsim/kings.hpp"
#include "kingsim/numeric.hpp"
#include "kingsim/template_graph.hpp"

namespace kingsim {

namespace {

std::string fixed4(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.4f", v);
    return buf;
}

std::string join_flags(const std::vector<std::string>& a, const std::vector<std::string>& b) {
    std::string out;
    for (const auto& f : a) {
        if (!out.empty()) out += ';';
        out += f;
    }
    for (const auto& f : b) {
        if (!out.empty()) out += ';';
        out += f;
    }
    return out;
}

double pow43(int n) {
    std::int64_t c = 0;
    if (exact_cbrt(n, c)) return static_cast<double>(c * c * c * c);
    return std::pow(static_cast<double>(n), 4.0 / 3.0);
}

struct RunSpec {
    int n;
    std::uint64_t tournament_seed;
    std::uint64_t template_seed;
    bool template_audit_failed;
};

OutcomeRecord execute_run(const ExperimentConfig& config, const RunSpec& spec) {
    OutcomeRecord rec;
    rec.n = spec.n;
    rec.tournament_seed = spec.tournament_seed;
    rec.template_seed = spec.template_seed;
    if (spec.template_audit_failed) rec.flags.push_back("template-audit-violation");
    try {
        StrategyParams params;
        params.delta = config.delta;
        params.kappa = config.kappa;
        params.template_seed = spec.template_seed;
        params.ultra_search_budget = config.ultra_search_budget;
        params.good_submatrix_trials = config.good_submatrix_trials;

        std::mt19937_64 rng(derive_seed(config.strategy_seed,
                                        static_cast<std::uint64_t>(spec.n),
                                        spec.tournament_seed + 1));
        if (config.oracle == OracleKind::Fixed) {
            Tournament truth =
                generate_tournament(config.tournament, spec.n, spec.tournament_seed);
            ArcOracle oracle(truth);
            rec.outcome = run_seeker(oracle, params, rng);
            if (config.verify)
                rec.ground_truth_control = control_fraction(truth, rec.outcome.candidate);
        } else {
            ArcOracle oracle = ArcOracle::greedy_adversary(spec.n);
            rec.outcome = run_seeker(oracle, params, rng);
        }
    } catch (const std::exception& e) {
        rec.error = e.what();
    }
    return rec;
}

}  // namespace

void ExperimentConfig::validate() const {
    if (ns.empty()) throw InvalidParameterError("ExperimentConfig: empty n list");
    for (int n : ns)
        if (n < 8) throw InvalidParameterError("ExperimentConfig: all n must be >= 8");
    if (seed_hi < seed_lo) throw InvalidParameterError("ExperimentConfig: empty seed range");
    if (workers < 1) throw InvalidParameterError("ExperimentConfig: workers must be >= 1");
}

std::vector<OutcomeRecord> run_experiment(const ExperimentConfig& config) {
    config.validate();

    // One audit per n: the template is shared by every seed at that size.
    std::vector<RunSpec> specs;
    for (int n : config.ns) {
        std::uint64_t tseed = derive_seed(config.strategy_seed, static_cast<std::uint64_t>(n), 0);
        bool audit_failed = false;
        TemplateParams tp;
        tp.n = n;
        tp.kappa = config.kappa;
        tp.seed = tseed;
        TemplateGraph tg = generate_template(tp);
        AuditReport audit = audit_template(tg, config.kappa, config.audit_trials,
                                           derive_seed(tseed, 0xa0d17, 0));
        if (!audit.passed()) {
            if (config.strict_template)
                throw InternalContradictionError(
                    "template audit failed at n=" + std::to_string(n) + " (" +
                    std::to_string(audit.violations) + "/" + std::to_string(audit.trials) +
                    " violations)");
            audit_failed = true;
        }
        for (std::uint64_t seed = config.seed_lo; seed <= config.seed_hi; ++seed)
            specs.push_back(RunSpec{n, seed, tseed, audit_failed});
    }

    std::vector<OutcomeRecord> records(specs.size());
    const int workers = std::min<int>(config.workers, static_cast<int>(specs.size()));
    if (workers <= 1) {
        for (std::size_t i = 0; i < specs.size(); ++i)
            records[i] = execute_run(config, specs[i]);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w) {
            pool.emplace_back([&]() {
                for (;;) {
                    std::size_t i = next.fetch_add(1);
                    if (i >= specs.size()) return;
                    records[i] = execute_run(config, specs[i]);
                }
            });
        }
        for (auto& t : pool) t.join();
    }
    return records;  // already in (n, seed) order by construction
}

void write_jsonl(const std::vector<OutcomeRecord>& records, const ExperimentConfig& config,
                 std::ostream& out) {
    for (const auto& rec : records) {
        nlohmann::ordered_json j;
        j["n"] = rec.n;
        j["kappa"] = config.kappa.to_double();
        j["delta"] = config.delta.to_double();
        j["template_seed"] = rec.template_seed;
        j["tournament_seed"] = rec.tournament_seed;
        if (rec.error.empty()) {
            j["branch"] = branch_name(rec.outcome.branch);
            j["candidate"] = rec.outcome.candidate;
            j["queries"] = rec.outcome.queries;
            j["revealed_bound"] = rec.outcome.revealed_bound;
            j["theoretical_bound"] = rec.outcome.theoretical_bound;
            if (rec.ground_truth_control)
                j["ground_truth_control"] = *rec.ground_truth_control;
            auto flags = nlohmann::ordered_json::array();
            for (const auto& f : rec.flags) flags.push_back(f);
            for (const auto& f : rec.outcome.flags) flags.push_back(f);
            j["flags"] = flags;
        } else {
            j["error"] = rec.error;
        }
        out << j.dump() << "\n";
    }
}

std::string sweep_csv(const std::vector<OutcomeRecord>& records,
                      const ExperimentConfig& config) {
    (void)config;  // schema is config-independent; kept for symmetry with write_jsonl
    std::ostringstream out;
    out << "row_type,n,seed,branch,candidate,queries,queries_per_n43,max_queries_per_n43,"
           "revealed_bound,revealed_fraction,theoretical_bound,ground_truth_control,flags,"
           "error\n";

    struct Agg {
        double sum_q43 = 0, max_q43 = 0, sum_control = 0;
        std::size_t rows = 0, control_rows = 0;
    };
    std::vector<std::pair<int, Agg>> aggs;
    auto agg_for = [&](int n) -> Agg& {
        for (auto& [k, a] : aggs)
            if (k == n) return a;
        aggs.emplace_back(n, Agg{});
        return aggs.back().second;
    };

    for (const auto& rec : records) {
        if (!rec.error.empty()) {
            out << "run," << rec.n << "," << rec.tournament_seed << ",,,,,,,,,,,\"" << rec.error
                << "\"\n";
            continue;
        }
        double q43 = static_cast<double>(rec.outcome.queries) / pow43(rec.n);
        double revealed_frac =
            static_cast<double>(rec.outcome.revealed_bound) / static_cast<double>(rec.n);
        out << "run," << rec.n << "," << rec.tournament_seed << ","
            << branch_name(rec.outcome.branch) << "," << rec.outcome.candidate << ","
            << rec.outcome.queries << "," << fixed4(q43) << ",," << rec.outcome.revealed_bound
            << "," << fixed4(revealed_frac) << "," << rec.outcome.theoretical_bound << ",";
        if (rec.ground_truth_control) out << fixed4(*rec.ground_truth_control);
        out << "," << join_flags(rec.flags, rec.outcome.flags) << ",\n";

        Agg& a = agg_for(rec.n);
        a.sum_q43 += q43;
        a.max_q43 = std::max(a.max_q43, q43);
        ++a.rows;
        if (rec.ground_truth_control) {
            a.sum_control += *rec.ground_truth_control;
            ++a.control_rows;
        }
    }

    for (const auto& [n, a] : aggs) {
        out << "agg," << n << ",,,,," << fixed4(a.rows ? a.sum_q43 / static_cast<double>(a.rows) : 0.0)
            << "," << fixed4(a.max_q43) << ",,,,";
        if (a.control_rows) out << fixed4(a.sum_control / static_cast<double>(a.control_rows));
        out << ",,\n";
    }
    return out.str();
}

std::string baseline_csv(const ExperimentConfig& config) {
    config.validate();
    std::ostringstream out;
    out << "n,seed,candidate,queries,control_fraction,is_king\n";
    for (int n : config.ns) {
        for (std::uint64_t seed = config.seed_lo; seed <= config.seed_hi; ++seed) {
            Tournament truth = generate_tournament(config.tournament, n, seed);
            ArcOracle oracle(truth);
            for (Vertex u = 0; u < n; ++u)
                for (Vertex v = u + 1; v < n; ++v) oracle.query(u, v);
            Vertex mod = mod_vertex(truth);
            double control = control_fraction(truth, mod);
            out << n << "," << seed << "," << mod << "," << oracle.query_count() << ","
                << fixed4(control) << "," << (is_king(truth, mod) ? 1 : 0) << "\n";
        }
    }
    return out.str();
}

}  // namespace kingsim
