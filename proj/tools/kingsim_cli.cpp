// Command-line front end: template generation/audit, seeker runs and sweeps,
// the full-reveal baseline, and the exact constant-chain verification.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "kingsim/constants.hpp"
#include "kingsim/errors.hpp"
#include "kingsim/experiment.hpp"
#include "kingsim/kings.hpp"
#include "kingsim/numeric.hpp"
#include "kingsim/template_graph.hpp"

namespace {

using namespace kingsim;

constexpr int kExitOk = 0;
constexpr int kExitIo = 1;
constexpr int kExitInvariant = 2;

std::pair<std::uint64_t, std::uint64_t> parse_seed_range(const std::string& text) {
    auto pos = text.find("..");
    if (pos == std::string::npos) {
        std::uint64_t s = std::stoull(text);
        return {s, s};
    }
    return {std::stoull(text.substr(0, pos)), std::stoull(text.substr(pos + 2))};
}

std::vector<int> parse_n_list(const std::string& text) {
    std::vector<int> ns;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) ns.push_back(std::stoi(tok));
    return ns;
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(path);
    if (!out) throw IoError("cannot open for writing: " + path);
    out << content;
    if (!out) throw IoError("write failed: " + path);
}

struct CommonOpts {
    std::string n_list = "27";
    std::string kappa = "1/2";
    std::string delta = "2/17";
    std::string seeds = "0";
    std::string tournament = "random";
    std::string oracle = "fixed";
    std::string out_path;
    bool verify = false;
    bool strict_template = false;
    int workers = 1;
    std::uint64_t strategy_seed = 0;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--n", o.n_list, "comma-separated vertex counts (n >= 8)");
    cmd->add_option("--kappa", o.kappa, "template density parameter (rational or decimal)");
    cmd->add_option("--delta", o.delta, "control target offset (rational or decimal)");
    cmd->add_option("--seeds", o.seeds, "tournament seed or inclusive range lo..hi");
    cmd->add_option("--tournament", o.tournament, "random|transitive|rotational");
    cmd->add_option("--oracle", o.oracle, "fixed|adversary");
    cmd->add_option("--out", o.out_path, "output file (stdout when omitted)");
    cmd->add_flag("--verify", o.verify, "attach ground-truth control (fixed oracle only)");
    cmd->add_flag("--strict-template", o.strict_template,
                  "abort when the template audit reports violations");
    cmd->add_option("--workers", o.workers, "worker threads for sweeps");
    cmd->add_option("--strategy-seed", o.strategy_seed, "root seed for derived run seeds");
}

ExperimentConfig to_config(const CommonOpts& o) {
    ExperimentConfig cfg;
    cfg.ns = parse_n_list(o.n_list);
    cfg.kappa = Rational::parse(o.kappa);
    cfg.delta = Rational::parse(o.delta);
    auto [lo, hi] = parse_seed_range(o.seeds);
    cfg.seed_lo = lo;
    cfg.seed_hi = hi;
    cfg.tournament = parse_tournament_kind(o.tournament);
    if (o.oracle == "fixed")
        cfg.oracle = OracleKind::Fixed;
    else if (o.oracle == "adversary")
        cfg.oracle = OracleKind::GreedyAdversary;
    else
        throw InvalidParameterError("unknown oracle kind: " + o.oracle);
    cfg.verify = o.verify;
    cfg.strict_template = o.strict_template;
    cfg.workers = o.workers;
    cfg.strategy_seed = o.strategy_seed;
    return cfg;
}

int run_main(int argc, char** argv) {
    CLI::App app{"query-complexity simulator for finding kings in tournaments"};
    app.require_subcommand(1);

    // template gen / audit
    auto* tmpl = app.add_subcommand("template", "generate or audit query templates");
    tmpl->require_subcommand(1);

    int tn = 1000;
    std::string tkappa = "1/2";
    std::uint64_t tseed = 0;
    std::string tout;
    auto* gen = tmpl->add_subcommand("gen", "generate a template file");
    gen->add_option("--n", tn, "vertex count");
    gen->add_option("--kappa", tkappa, "density parameter");
    gen->add_option("--seed", tseed, "generation seed");
    gen->add_option("--out", tout, "output file (stdout when omitted)");

    std::string ain;
    std::uint64_t atrials = 10000, aseed = 0;
    std::size_t acutoff = 1000000;
    auto* audit = tmpl->add_subcommand("audit", "audit the disjoint-set edge property");
    audit->add_option("--in", ain, "template file to audit (else regenerate from params)");
    audit->add_option("--n", tn, "vertex count");
    audit->add_option("--kappa", tkappa, "density parameter");
    audit->add_option("--seed", tseed, "generation seed");
    audit->add_option("--trials", atrials, "sampled trials when exhaustive is infeasible");
    audit->add_option("--audit-seed", aseed, "sampling seed");
    audit->add_option("--exhaustive-cutoff", acutoff, "max disjoint pairs checked exhaustively");

    CommonOpts run_opts;
    auto* run = app.add_subcommand("run", "seeker runs, one JSON line per run");
    add_common(run, run_opts);

    CommonOpts sweep_opts;
    auto* sweep = app.add_subcommand("sweep", "seeker sweep, CSV with per-n aggregates");
    add_common(sweep, sweep_opts);

    CommonOpts base_opts;
    auto* baseline = app.add_subcommand("baseline", "full-reveal max-out-degree baseline, CSV");
    add_common(baseline, base_opts);

    std::string vdelta = "2/17", vkappa = "1/4000";
    auto* verify = app.add_subcommand("verify-constants",
                                      "exact rational verification of the constant chain");
    verify->add_option("--delta", vdelta, "delta (rational or decimal)");
    verify->add_option("--kappa", vkappa, "kappa (rational or decimal)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitInvariant;  // usage errors count as 2
    }

    if (gen->parsed()) {
        TemplateParams params;
        params.n = tn;
        params.kappa = Rational::parse(tkappa);
        params.seed = tseed;
        TemplateGraph g = generate_template(params);
        std::ostringstream buf;
        save_template(g, params.kappa, params.seed, buf);
        write_output(tout, buf.str());
        std::cerr << "edges=" << g.edge_count() << " budget=" << edge_budget(params) << "\n";
        return kExitOk;
    }

    if (audit->parsed()) {
        Rational kappa = Rational::parse(tkappa);
        TemplateGraph g;
        if (!ain.empty()) {
            g = load_template_file(ain);
        } else {
            TemplateParams params;
            params.n = tn;
            params.kappa = kappa;
            params.seed = tseed;
            g = generate_template(params);
        }
        AuditReport report = audit_template(g, kappa, atrials, aseed, acutoff);
        nlohmann::ordered_json j;
        j["n"] = g.size();
        j["set_size"] = report.set_size;
        j["mode"] = report.mode == AuditReport::Mode::Exhaustive ? "exhaustive" : "sampled";
        j["trials"] = report.trials;
        j["violations"] = report.violations;
        std::cout << j.dump() << "\n";
        return report.passed() ? kExitOk : kExitInvariant;
    }

    if (run->parsed()) {
        ExperimentConfig cfg = to_config(run_opts);
        auto records = run_experiment(cfg);
        std::ostringstream buf;
        write_jsonl(records, cfg, buf);
        write_output(run_opts.out_path, buf.str());
        return kExitOk;
    }

    if (sweep->parsed()) {
        ExperimentConfig cfg = to_config(sweep_opts);
        auto records = run_experiment(cfg);
        write_output(sweep_opts.out_path, sweep_csv(records, cfg));
        return kExitOk;
    }

    if (baseline->parsed()) {
        ExperimentConfig cfg = to_config(base_opts);
        write_output(base_opts.out_path, baseline_csv(cfg));
        return kExitOk;
    }

    if (verify->parsed()) {
        ConstantsReport report =
            verify_constants(Rational::parse(vdelta), Rational::parse(vkappa));
        std::cout << "delta=" << report.delta.str() << " kappa=" << report.kappa.str() << "\n";
        std::cout << "w1_coeff=" << report.w1_coeff.str()
                  << " w2_coeff=" << report.w2_coeff.str()
                  << " row_coeff=" << report.row_coeff.str() << "\n";
        std::cout << "final=" << decimal_prefix(report.final_value, 8)
                  << " target=" << decimal_prefix(report.target, 8)
                  << " margin=" << report.margin.str() << "\n";
        for (const auto& c : report.checks)
            std::cout << (c.passed ? "pass " : "FAIL ") << c.name << ": " << c.detail << "\n";
        return report.all_passed() ? kExitOk : kExitInvariant;
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run_main(argc, argv);
    } catch (const kingsim::IoError& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvariant;
    }
}
