// Command-line front end: every bound, the ball primitives, the tightness
// construction, the asymptotic curves, the brute-force oracle, and the
// cross-check suites, with machine-readable output for reproduction scripts.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "indel/asymptotics.hpp"
#include "indel/bounds.hpp"
#include "indel/constructions.hpp"
#include "indel/json_records.hpp"
#include "indel/levenshtein.hpp"
#include "indel/oracle.hpp"
#include "indel/selfcheck.hpp"

namespace {

using indel::Json;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

// Words on the command line: comma-separated symbols, or a contiguous digit
// string when q <= 10 (e.g. "0102").
indel::Word parse_cli_word(const std::string& text, int q) {
    std::vector<int> symbols;
    if (text.empty()) return indel::Word({}, q);
    if (text.find(',') != std::string::npos) {
        std::size_t pos = 0;
        while (pos <= text.size()) {
            const std::size_t next = text.find(',', pos);
            const std::string tok = text.substr(pos, next - pos);
            symbols.push_back(std::stoi(tok));
            if (next == std::string::npos) break;
            pos = next + 1;
        }
    } else {
        if (q > 10)
            throw CLI::ValidationError(
                "word", "contiguous digits are ambiguous for q > 10; use commas");
        for (char ch : text) {
            if (ch < '0' || ch > '9')
                throw CLI::ValidationError("word", std::string("bad symbol '") + ch + "'");
            symbols.push_back(ch - '0');
        }
    }
    return indel::Word(std::move(symbols), q);
}

std::uint64_t enum_cap_from_env(std::uint64_t fallback) {
    if (const char* env = std::getenv("INDEL_BOUNDS_MAX_ENUM")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw CLI::ValidationError("INDEL_BOUNDS_MAX_ENUM",
                                       "must be a nonnegative integer");
        }
    }
    return fallback;
}

void emit(const Json& record, const std::string& format) {
    if (format == "json") {
        std::cout << record.dump(2) << '\n';
        return;
    }
    // flat text rendering: one `key=value` line per top-level field
    for (const auto& [key, value] : record.items()) {
        if (value.is_string())
            std::cout << key << '=' << value.get<std::string>() << '\n';
        else
            std::cout << key << '=' << value.dump() << '\n';
    }
}

struct DistArgs {
    std::string x, y;
    int q = 2;
    std::string format = "text";
};

struct BallArgs {
    std::string z;
    int q = 2, s = 0, t = 0;
    bool enumerate = false;
    std::string format = "text";
};

struct CwArgs {
    int n = 1, d = 1, w = 0;
    bool exact = false, upper = false;
    std::string format = "text";
};

struct BoundArgs {
    int q = 2, n = 1, d = 1;
    std::optional<int> s, t;
    bool all = false;
    int s_max = -1, t_max = -1;
    std::string mode = "exact";
    std::string format = "json";
};

struct ConstructArgs {
    int q = 2, n = 1, d = 1, s = 0, t = 0;
};

struct AsymptArgs {
    int q = 2;
    double delta_min = 0.05, delta_max = 0.45;
    int steps = 9;
    int grid = 200;
    double tol = 1e-9;
};

struct OracleArgs {
    int q = 2, n = 1, d = 1;
    std::optional<std::uint64_t> seed;
    std::string format = "json";
};

int run_dist(const DistArgs& a) {
    const indel::Word x = parse_cli_word(a.x, a.q);
    const indel::Word y = parse_cli_word(a.y, a.q);
    Json record;
    record["lcs"] = indel::lcs(x, y);
    record["distance"] = indel::levenshtein_distance(x, y);
    record["x"] = indel::to_line(x);
    record["y"] = indel::to_line(y);
    record["q"] = a.q;
    emit(record, a.format);
    return kExitOk;
}

int run_ball(const BallArgs& a) {
    const indel::Word z = parse_cli_word(a.z, a.q);
    indel::BallEnumLimits limits;
    limits.max_words = enum_cap_from_env(limits.max_words);
    const auto members = indel::fixed_radius_ball(z, a.s, a.t, limits);
    Json record;
    record["z"] = indel::to_line(z);
    record["q"] = a.q;
    record["s"] = a.s;
    record["t"] = a.t;
    record["size"] = members.size();
    if (a.enumerate) {
        Json list = Json::array();
        for (const indel::Word& w : members) list.push_back(indel::to_line(w));
        record["members"] = std::move(list);
    }
    emit(record, a.format);
    return kExitOk;
}

int run_cw(const CwArgs& a) {
    const indel::CWQuery query{a.n, a.d, a.w};
    indel::CWAnswer answer;
    if (a.upper) {
        answer = indel::cw_upper_bound(query);
    } else {
        const indel::CWSearchResult r = indel::max_constant_weight_exact(query);
        if (!r.completed) {
            std::cerr << "exact search budget exhausted; best found " << r.best_size
                      << ", upper bound " << r.upper_bound << '\n';
            return kExitCheckFailed;
        }
        answer = r.exact_answer({a.n, a.d + (a.d & 1), a.w});
    }
    emit(indel::cw_answer_record(answer), a.format);
    return kExitOk;
}

int run_bound(const BoundArgs& a) {
    const indel::CodeParams p{a.q, a.n, a.d};
    const indel::CWMode mode =
        a.mode == "upper" ? indel::CWMode::upper : indel::CWMode::exact;
    if (a.all) {
        const int s_max = a.s_max >= 0 ? a.s_max : (a.d - 1) / 2;
        const int t_max = a.t_max >= 0 ? a.t_max : a.n;
        const indel::BestBoundResult best = indel::best_bound(p, s_max, t_max, mode);
        Json record = indel::bound_record(best.bound, p, best.argmin);
        record["swept"] = Json{{"s_max", s_max}, {"t_max", t_max}};
        emit(record, a.format);
        return kExitOk;
    }
    const indel::ListParams lp{a.s.value_or(0), a.t.value_or(0)};
    Json records = Json::array();
    records.push_back(indel::bound_record(indel::hy_list_bound(p, lp), p, lp));
    records.push_back(
        indel::bound_record(indel::main_johnson_list_bound(p, lp, mode), p, lp));
    if (lp.s == 0)
        records.push_back(
            indel::bound_record(indel::yasunaga_elias_bound(p, lp.t), p, lp));
    records.push_back(
        indel::bound_record(indel::main_elias_bound(p, lp, mode), p, lp));
    records.push_back(
        indel::bound_record(indel::shortened_sphere_packing(p, lp), p, lp));
    if (a.format == "json") {
        std::cout << records.dump(2) << '\n';
    } else {
        for (const Json& r : records) {
            std::cout << r["bound"].get<std::string>()
                      << " applicable=" << r["applicable"].dump();
            if (r["applicable"].get<bool>())
                std::cout << " value=" << r["value"].get<std::string>()
                          << " decimal=" << r["value_decimal"].dump()
                          << " exactness=" << r["exactness"].get<std::string>();
            std::cout << '\n';
        }
    }
    return kExitOk;
}

int run_construct(const ConstructArgs& a) {
    const indel::CodeParams p{a.q, a.n, a.d};
    const indel::ListParams lp{a.s, a.t};
    const indel::TightnessInstance inst = indel::build_tightness_instance(p, lp);
    const indel::VerificationReport report = indel::verify_tightness_instance(inst);
    Json record;
    record["instance"] = indel::tightness_record(inst);
    record["report"] = indel::report_record(report);
    std::cout << record.dump(2) << '\n';
    return report.all_passed() ? kExitOk : kExitCheckFailed;
}

int run_asympt(const AsymptArgs& a) {
    if (a.steps < 1) throw CLI::ValidationError("--steps", "must be >= 1");
    std::vector<double> deltas;
    for (int i = 0; i < a.steps; ++i) {
        const double delta =
            a.steps == 1 ? a.delta_min
                         : a.delta_min + (a.delta_max - a.delta_min) * i / (a.steps - 1);
        deltas.push_back(delta);
    }
    indel::OptimizerConfig cfg;
    cfg.grid_sigma = cfg.grid_omega = a.grid;
    cfg.arg_tol = a.tol;
    indel::write_rate_curve_csv(std::cout, indel::rate_curve(a.q, deltas, cfg));
    return kExitOk;
}

int run_oracle(const OracleArgs& a) {
    indel::OracleLimits limits;
    limits.max_words = enum_cap_from_env(limits.max_words);
    const indel::OracleResult r = indel::max_indel_code_exact({a.q, a.n, a.d}, limits);
    emit(indel::oracle_record(r, {a.q, a.n, a.d}, a.seed), a.format);
    return kExitOk;
}

int run_verify(const std::string& level) {
    const auto outcomes = indel::run_selfchecks(
        level == "full" ? indel::CheckLevel::full : indel::CheckLevel::quick);
    bool all = true;
    for (const auto& o : outcomes) {
        std::cout << (o.passed ? "[PASS] " : "[FAIL] ") << o.name << " — " << o.detail
                  << '\n';
        all = all && o.passed;
    }
    return all ? kExitOk : kExitCheckFailed;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bounds, constructions, and brute-force verification for "
                 "insertion-deletion codes"};
    app.require_subcommand(1);

    DistArgs dist;
    auto* dist_cmd = app.add_subcommand("dist", "LCS and Levenshtein distance");
    dist_cmd->add_option("--x", dist.x, "first word")->required();
    dist_cmd->add_option("--y", dist.y, "second word")->required();
    dist_cmd->add_option("--q", dist.q, "alphabet size")->required();
    dist_cmd->add_option("--format", dist.format)->check(CLI::IsMember({"text", "json"}));

    BallArgs ball;
    auto* ball_cmd = app.add_subcommand("ball", "list-decoding ball around z");
    ball_cmd->add_option("--z", ball.z, "center word")->required();
    ball_cmd->add_option("--q", ball.q, "alphabet size")->required();
    ball_cmd->add_option("--s", ball.s, "max insertions")->required();
    ball_cmd->add_option("--t", ball.t, "max deletions")->required();
    ball_cmd->add_flag("--enumerate", ball.enumerate, "list the members");
    ball_cmd->add_option("--format", ball.format)->check(CLI::IsMember({"text", "json"}));

    CwArgs cw;
    auto* cw_cmd = app.add_subcommand("cw", "constant-weight code size A(n, d, w)");
    cw_cmd->add_option("--n", cw.n)->required();
    cw_cmd->add_option("--d", cw.d)->required();
    cw_cmd->add_option("--w", cw.w)->required();
    auto* cw_exact = cw_cmd->add_flag("--exact", cw.exact, "exact search (default)");
    cw_cmd->add_flag("--upper", cw.upper, "best upper bound")->excludes(cw_exact);
    cw_cmd->add_option("--format", cw.format)->check(CLI::IsMember({"text", "json"}));

    BoundArgs bound;
    auto* bound_cmd = app.add_subcommand("bound", "cardinality and list-size bounds");
    bound_cmd->add_option("--q", bound.q)->required();
    bound_cmd->add_option("--n", bound.n)->required();
    bound_cmd->add_option("--d", bound.d)->required();
    bound_cmd->add_option("--s", bound.s);
    bound_cmd->add_option("--t", bound.t);
    bound_cmd->add_flag("--all", bound.all, "sweep (s, t) and report the best bound");
    bound_cmd->add_option("--smax", bound.s_max, "sweep cap on s (default floor((d-1)/2))");
    bound_cmd->add_option("--tmax", bound.t_max, "sweep cap on t (default n)");
    bound_cmd->add_option("--mode", bound.mode)->check(CLI::IsMember({"exact", "upper"}));
    bound_cmd->add_option("--format", bound.format)->check(CLI::IsMember({"text", "json"}));

    ConstructArgs construct;
    auto* construct_cmd =
        app.add_subcommand("construct", "tightness instance with verification report");
    construct_cmd->add_option("--q", construct.q)->required();
    construct_cmd->add_option("--n", construct.n)->required();
    construct_cmd->add_option("--d", construct.d)->required();
    construct_cmd->add_option("--s", construct.s)->required();
    construct_cmd->add_option("--t", construct.t)->required();

    AsymptArgs asympt;
    auto* asympt_cmd = app.add_subcommand("asympt", "asymptotic rate curve as CSV");
    asympt_cmd->add_option("--q", asympt.q)->required();
    asympt_cmd->add_option("--delta-min", asympt.delta_min)->required();
    asympt_cmd->add_option("--delta-max", asympt.delta_max)->required();
    asympt_cmd->add_option("--steps", asympt.steps)->required();
    asympt_cmd->add_option("--grid", asympt.grid, "grid resolution per axis");
    asympt_cmd->add_option("--tol", asympt.tol, "refinement tolerance");

    OracleArgs oracle;
    auto* oracle_cmd = app.add_subcommand("oracle", "exact maximum code by brute force");
    oracle_cmd->add_option("--q", oracle.q)->required();
    oracle_cmd->add_option("--n", oracle.n)->required();
    oracle_cmd->add_option("--d", oracle.d)->required();
    oracle_cmd->add_option("--seed", oracle.seed, "recorded in the output");
    oracle_cmd->add_option("--format", oracle.format)
        ->check(CLI::IsMember({"text", "json"}));

    std::string verify_level = "quick";
    auto* verify_cmd = app.add_subcommand("verify", "run the cross-check suites");
    verify_cmd->add_option("--level", verify_level)
        ->check(CLI::IsMember({"quick", "full"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << '\n' << app.help();
        return kExitUsage;
    }

    try {
        if (dist_cmd->parsed()) return run_dist(dist);
        if (ball_cmd->parsed()) return run_ball(ball);
        if (cw_cmd->parsed()) return run_cw(cw);
        if (bound_cmd->parsed()) return run_bound(bound);
        if (construct_cmd->parsed()) return run_construct(construct);
        if (asympt_cmd->parsed()) return run_asympt(asympt);
        if (oracle_cmd->parsed()) return run_oracle(oracle);
        if (verify_cmd->parsed()) return run_verify(verify_level);
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitCheckFailed;
    }
    return kExitUsage;
}
