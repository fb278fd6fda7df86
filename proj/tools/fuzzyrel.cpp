#include <cstdlib>
#include <iostream>
#include <optional>
#include <regex>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "fuzzyrel/error.hpp"
#include "fuzzyrel/eval.hpp"
#include "fuzzyrel/expr.hpp"
#include "fuzzyrel/io.hpp"
#include "fuzzyrel/registry.hpp"
#include "fuzzyrel/verifier.hpp"

namespace {

using namespace fuzzyrel;
using nlohmann::json;

constexpr int kOk = 0;
constexpr int kInputError = 1;
constexpr int kUsageError = 2;
constexpr int kViolation = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Config {
    double tolerance = Tolerance::kDefault;
    double resolution = 0.05;
    std::string quotient_mode = "limit";
    std::uint64_t seed = 0;
    std::uint64_t samples = 0;
    unsigned workers = 0;
    std::string format = "text";
    std::optional<std::size_t> limit;
    bool timing = false;

    std::vector<CLI::Option*> resolution_flags;

    bool resolution_given() const {
        for (auto* f : resolution_flags)
            if (f->count() > 0) return true;
        return false;
    }
    bool json() const { return format == "json"; }

    VerifyOptions verify(std::size_t default_limit) const {
        VerifyOptions v;
        v.tolerance = Tolerance(tolerance);
        v.quotient_mode = quotient_mode == "strict" ? QuotientMode::Strict : QuotientMode::Limit;
        v.workers = workers;
        const std::size_t l = limit.value_or(default_limit);
        v.sample_limit = l == 0 ? kUnlimited : l;
        v.timing = timing;
        return v;
    }
};

void add_common(CLI::App* cmd, Config& cfg) {
    cmd->add_option("--tolerance", cfg.tolerance, "Comparison slack epsilon, in (0, 1e-3)");
    cfg.resolution_flags.push_back(
        cmd->add_option("--resolution", cfg.resolution, "Grid step; 1/step must be an integer"));
    cmd->add_option("--quotient-mode", cfg.quotient_mode, "Bounded quotient at a zero divisor")
        ->check(CLI::IsMember({"limit", "strict"}));
    cmd->add_option("--seed", cfg.seed, "Seed for random sampling");
    cmd->add_option("--samples", cfg.samples, "Random samples in addition to the grid");
    cmd->add_option("--workers", cfg.workers, "Worker threads (0 = all cores)");
    cmd->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--limit", cfg.limit, "Samples kept per list (0 = all)");
    cmd->add_flag("--timing", cfg.timing, "Include elapsed times");
}

// All flags are checked before any computation.
void validate(Config& cfg) {
    if (const char* env = std::getenv("FUZZYREL_WORKERS"); env && *env) {
        try {
            std::size_t used = 0;
            const long v = std::stol(env, &used);
            if (used != std::string(env).size() || v < 0) throw std::invalid_argument(env);
            cfg.workers = static_cast<unsigned>(v);
        } catch (const std::exception&) {
            throw UsageError(fmt::format("FUZZYREL_WORKERS must be a non-negative integer, got '{}'", env));
        }
    }
    try {
        (void)Tolerance(cfg.tolerance);
        (void)GridSpec{cfg.resolution}.intervals();
    } catch (const Error& e) {
        throw UsageError(e.what());
    }
}

void emit(const Config& cfg, const json& j, const std::string& text) {
    if (cfg.json())
        std::cout << j.dump(2) << '\n';
    else
        std::cout << text;
}

json reports_json(const std::vector<CheckReport>& reports) {
    json arr = json::array();
    bool ok = true;
    for (const auto& r : reports) {
        arr.push_back(to_json(r));
        ok = ok && r.holds();
    }
    return json{{"reports", arr}, {"verdict", ok ? "holds" : "violated"}};
}

int exit_for(const std::vector<CheckReport>& reports) {
    for (const auto& r : reports)
        if (!r.holds()) return kViolation;
    return kOk;
}

std::string texts(const std::vector<CheckReport>& reports) {
    std::string out;
    for (const auto& r : reports) out += render_text(r);
    return out;
}

// ---- eval ----

int run_eval(const Config& cfg, const std::string& sets_path, const std::string& expr_text) {
    const SetsFile file = load_sets_file(sets_path);
    const Expr e = parse_expr(expr_text);
    const FuzzySet result = eval_set(e, file.sets, cfg.verify(0).quotient_mode);
    const auto& labels = result.universe().elements();
    json j{{"expr", format_expr(e)},
           {"universe", labels},
           {"degrees", std::vector<double>(result.degrees().begin(), result.degrees().end())}};
    std::string text;
    for (std::size_t i = 0; i < labels.size(); ++i)
        text += fmt::format("{}: {}\n", labels[i], format_degree(result.degree_at(i)));
    emit(cfg, j, text);
    return kOk;
}

// ---- check ----

RelationStatement with_givens(RelationStatement s, const std::vector<std::string>& givens) {
    for (const auto& raw : givens)
        for (const auto& piece : split_top_level(raw)) s.constraints.push_back(parse_constraint(piece));
    collect_variables(s);
    return s;
}

int run_check(const Config& cfg, const std::string& statement, const std::vector<std::string>& givens) {
    const RelationStatement s = with_givens(parse_statement(statement), givens);
    const VerifyOptions opts = cfg.verify(20);
    std::vector<CheckReport> reports;
    reports.push_back(grid_check(s, GridSpec{cfg.resolution}, opts));
    if (cfg.samples > 0) reports.push_back(random_check(s, RandomSpec{cfg.samples, cfg.seed}, opts));
    for (auto& r : reports) r.id = "check";
    emit(cfg, reports_json(reports), texts(reports));
    return exit_for(reports);
}

// ---- theorems ----

bool is_lemma_id(const std::string& id) {
    for (const auto& l : scalar_lemmas())
        if (l.id == id) return true;
    return false;
}

struct ParamFlags {
    std::optional<double> p;
    std::optional<double> m;
};

std::vector<std::optional<double>> chosen_values(const TheoremEntry& entry, const ParamFlags& flags) {
    const std::optional<double>& given = flags.p ? flags.p : flags.m;
    if (flags.p && flags.m) throw UsageError("give at most one of --p and --m");
    if (!given) return parameter_sweep(entry);
    const std::string name = flags.p ? "p" : "m";
    if (!entry.parameter || entry.parameter->name != name)
        throw ParameterOutOfRange(fmt::format("{} has no parameter '{}'", entry.id, name));
    return {given};
}

GridSpec grid_for(const Config& cfg, std::size_t arity) {
    if (cfg.resolution_given()) return GridSpec{cfg.resolution};
    return GridSpec{arity <= 3 ? 0.05 : 0.1};
}

int run_list(const Config& cfg) {
    std::string text;
    for (const auto& e : list_theorems()) {
        text += fmt::format("{:<5} {:<20} {}\n", e.id, e.paper_ref, e.title);
        text += fmt::format("      {}\n", e.dsl);
    }
    for (const auto& l : scalar_lemmas()) {
        text += fmt::format("{:<5} {:<20} {}\n", l.id, l.paper_ref, l.title);
        for (const auto& rel : l.relations) text += fmt::format("      {}\n", rel);
    }
    emit(cfg, catalog_json(), text);
    return kOk;
}

int run_theorem_check(const Config& cfg, const std::string& id, const ParamFlags& flags) {
    const VerifyOptions opts = cfg.verify(20);
    std::vector<CheckReport> reports;
    if (is_lemma_id(id)) {
        if (flags.p || flags.m) throw ParameterOutOfRange(fmt::format("{} takes no parameter", id));
        reports.push_back(check_scalar_lemma(get_scalar_lemma(id), GridSpec{cfg.resolution}, opts));
    } else {
        const TheoremEntry& entry = get_theorem(id);
        for (const auto& value : chosen_values(entry, flags)) {
            const auto g = grid_for(cfg, instantiate(entry, value).variables.size());
            for (auto& r : check_theorem(entry, g, opts, value)) reports.push_back(std::move(r));
        }
    }
    emit(cfg, reports_json(reports), texts(reports));
    return exit_for(reports);
}

int run_check_all(const Config& cfg) {
    SuiteOptions suite;
    if (cfg.resolution_given()) suite.resolution = suite.wide_resolution = cfg.resolution;
    const VerifyOptions opts = cfg.verify(20);
    const SuiteReport report = run_full_suite(suite, opts);
    std::size_t holds = 0;
    for (const auto& r : report.reports) holds += r.holds() ? 1 : 0;
    std::string text = texts(report.reports);
    text += fmt::format("summary: {} reports, {} hold, {} violated\n", report.reports.size(), holds,
                        report.reports.size() - holds);
    emit(cfg, to_json(report, suite, opts), text);
    return report.all_hold() ? kOk : kViolation;
}

// ---- hunt ----

struct Target {
    std::string label;
    std::optional<RelationStatement> statement;
    const ScalarLemma* lemma = nullptr;
    bool strict = false;  // any equality point contradicts the entry
};

std::vector<Target> resolve_targets(const std::string& target, const ParamFlags& flags) {
    static const std::regex id_pattern("[A-Z][0-9]+[a-z]?");
    if (!std::regex_match(target, id_pattern)) return {Target{"statement", parse_statement(target), nullptr}};
    if (is_lemma_id(target)) return {Target{target, std::nullopt, &get_scalar_lemma(target)}};
    const TheoremEntry& entry = get_theorem(target);
    std::vector<Target> out;
    for (const auto& value : chosen_values(entry, flags)) {
        std::string label = entry.id;
        if (value) label += fmt::format(" {}={}", entry.parameter->name, format_degree(*value));
        out.push_back(Target{label, instantiate(entry, value), nullptr, entry.strict_claimed});
    }
    return out;
}

int run_hunt(const Config& cfg, const std::string& target, const std::string& mode, const ParamFlags& flags) {
    const bool necessity = mode == "equality-necessity";
    const VerifyOptions opts = cfg.verify(0);
    const GridSpec g{cfg.resolution};
    json findings = json::array();
    std::string text;
    bool violated = false;
    for (const auto& t : resolve_targets(target, flags)) {
        CheckReport r;
        const bool strictness = necessity && t.strict && !t.statement->equality_condition;
        if (t.lemma)
            r = check_scalar_lemma(*t.lemma, g, opts);
        else if (necessity && !strictness)
            r = probe_equality(*t.statement, g, opts);
        else
            r = grid_check(*t.statement, g, opts);
        r.id = t.label;
        const auto& list = strictness ? r.equality_samples : necessity ? r.necessity_findings : r.violations;
        const std::uint64_t count = strictness ? r.equality_count : necessity ? r.necessity_count : r.violation_count;
        violated = violated || (!necessity && count > 0);

        const std::string what = strictness  ? "equality points against strict inclusion"
                                 : necessity ? "necessity findings"
                                             : "violations";
        if (count == 0) {
            text += fmt::format("{}: none found at resolution {}\n", t.label, format_degree(g.resolution));
        } else {
            text += fmt::format("{}: {} {} at resolution {}\n", t.label, count, what, format_degree(g.resolution));
            for (const auto& s : list)
                text += fmt::format("  {}: lhs={} rhs={}\n", format_tuple(r.variables, s.tuple),
                                    format_degree(s.lhs), format_degree(s.rhs));
            if (count > list.size()) text += fmt::format("  ... {} more\n", count - list.size());
        }
        json f{{"target", t.label},
               {"statement", r.statement},
               {"variables", r.variables},
               {"resolution", g.resolution},
               {"count", count},
               {"findings", json::array()}};
        for (const auto& s : list) f["findings"].push_back(to_json(s));
        findings.push_back(std::move(f));
    }
    emit(cfg, json{{"mode", mode}, {"targets", findings}}, text);
    return violated ? kViolation : kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Fuzzy set inclusion checker"};
    app.require_subcommand(1);
    Config cfg;

    std::string sets_path, expr_text;
    auto* eval = app.add_subcommand("eval", "Evaluate an expression over sets from a JSON file");
    eval->add_option("--sets", sets_path, "Fuzzy set file")->required();
    eval->add_option("--expr,expr", expr_text, "Set expression")->required();
    add_common(eval, cfg);

    std::string statement;
    std::vector<std::string> givens;
    auto* check = app.add_subcommand("check", "Grid-check a relation statement");
    check->add_option("--statement,statement", statement, "Statement, e.g. \"A <= A .* A\"")->required();
    check->add_option("--given", givens, "Extra hypothesis; repeatable or comma-separated")
        ->expected(1)
        ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
    add_common(check, cfg);

    ParamFlags flags;
    auto add_params = [&flags](CLI::App* cmd) {
        cmd->add_option("--p", flags.p, "Exponent parameter");
        cmd->add_option("--m", flags.m, "Integer parameter");
    };

    auto* theorems = app.add_subcommand("theorems", "Catalog of theorems and lemmas");
    theorems->require_subcommand(1);
    auto* list = theorems->add_subcommand("list", "Print the catalog");
    add_common(list, cfg);
    std::string theorem_id;
    auto* tcheck = theorems->add_subcommand("check", "Check one catalog entry");
    tcheck->add_option("id", theorem_id, "Entry id, e.g. T7")->required();
    add_params(tcheck);
    add_common(tcheck, cfg);
    auto* check_all = theorems->add_subcommand("check-all", "Run the whole suite");
    add_common(check_all, cfg);

    std::string hunt_target, hunt_mode = "violation";
    auto* hunt = app.add_subcommand("hunt", "Search the grid for violations or equality findings");
    hunt->add_option("target", hunt_target, "Catalog id or statement")->required();
    hunt->add_option("--mode", hunt_mode, "What to search for")
        ->check(CLI::IsMember({"violation", "equality-necessity"}));
    add_params(hunt);
    add_common(hunt, cfg);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsageError;
    }

    try {
        validate(cfg);
        if (*eval) return run_eval(cfg, sets_path, expr_text);
        if (*check) return run_check(cfg, statement, givens);
        if (*list) return run_list(cfg);
        if (*tcheck) return run_theorem_check(cfg, theorem_id, flags);
        if (*check_all) return run_check_all(cfg);
        if (*hunt) return run_hunt(cfg, hunt_target, hunt_mode, flags);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kUsageError;
    } catch (const UnknownTheorem& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const ParameterOutOfRange& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInputError;
    }
    return kUsageError;
}
