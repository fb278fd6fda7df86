// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "fuzzyrel/error.hpp"
#include "fuzzyrel/eval.hpp"
#include "fuzzyrel/random.hpp"
#include "fuzzyrel/verifier.hpp"
#include "run_cli.hpp"

using namespace fuzzyrel;
using fuzzyrel::testing_support::run_cli;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            if (!detail.empty()) detail += "; ";
            detail += what;
        }
    }
};

bool has_tuple(const std::vector<Sample>& list, const std::vector<double>& t, double lhs, double rhs) {
    return std::any_of(list.begin(), list.end(), [&](const Sample& s) {
        return s.tuple == t && std::abs(s.lhs - lhs) <= 1e-12 && std::abs(s.rhs - rhs) <= 1e-12;
    });
}

Outcome theorem_suite() {
    Outcome o;
    VerifyOptions opts;
    opts.workers = 1;
    const auto start = std::chrono::steady_clock::now();
    const SuiteReport suite = run_full_suite({}, opts);
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    std::set<std::string> groups;
    std::map<std::string, std::set<double>> sweeps;
    std::size_t set_reports = 0;
    for (const auto& r : suite.reports) {
        if (r.mode != "grid" && r.mode != "witness") continue;
        ++set_reports;
        o.require(r.holds(), r.id + " violated");
        const auto& entry = get_theorem(r.id);
        groups.insert(entry.group);
        if (r.mode == "grid") {
            const double want = r.variables.size() <= 3 ? 0.05 : 0.1;
            o.require(r.resolution && *r.resolution == want, r.id + " resolution");
        }
        for (const auto& [name, value] : r.parameters) sweeps[r.id].insert(value);
    }
    for (const auto& g : catalog_groups())
        if (g != "L1" && g != "L2") o.require(groups.count(g) == 1, "group " + g + " missing");
    o.require(sweeps["T10"] == std::set<double>{1, 2, 3, 4, 5, 6, 7, 8}, "T10 sweep");
    o.require(sweeps["T4"] == std::set<double>{0, 0.25, 0.5, 0.75, 0.9, 1, 2}, "T4 sweep");
    o.require(sweeps["T12"] == std::set<double>{0, 0.25, 0.5, 0.75, 0.99}, "T12 sweep");
    o.require(opts.tolerance.epsilon() == 1e-9, "epsilon");
    o.require(seconds < 60.0, fmt::format("took {:.1f} s", seconds));
    if (o.pass)
        o.detail = fmt::format("{} set-level groups plus scalar L1, L2; {} reports hold; {:.2f} s single-threaded",
                               groups.size(), set_reports, seconds);
    return o;
}

Outcome scalar_lemmas_hold() {
    Outcome o;
    for (const auto& l : scalar_lemmas()) {
        const auto r = check_scalar_lemma(l, GridSpec{0.05});
        o.require(r.holds(), l.id + " violated");
    }
    const auto& p = get_scalar_lemma("L2").variables.back();
    o.require(p.name == "p" && p.lo == 0 && p.hi == 2 && p.step == 0.25, "L2 exponent domain");
    if (o.pass) o.detail = fmt::format("{} lemmas hold at step 0.05", scalar_lemmas().size());
    return o;
}

Outcome equality_sufficiency() {
    Outcome o;
    std::uint64_t tuples = 0;
    for (const char* id : {"T1", "T3a", "T3b", "T3c", "T3d", "T5", "T7", "T8", "T6d"}) {
        const auto& entry = get_theorem(id);
        const auto arity = instantiate(entry).variables.size();
        const auto r = probe_equality(entry, GridSpec{arity <= 3 ? 0.05 : 0.1});
        o.require(r.holds(), std::string(id) + " claim fails");
        o.require(r.claimed && *r.claimed > 0, std::string(id) + " claim never met");
        tuples += r.claimed.value_or(0);
    }
    if (o.pass) o.detail = fmt::format("{} claimed tuples, all with |lhs-rhs| <= 1e-9", tuples);
    return o;
}

Outcome necessity_findings() {
    Outcome o;
    VerifyOptions all;
    all.sample_limit = kUnlimited;
    const auto t2a = probe_equality(get_theorem("T2a"), GridSpec{0.05}, all);
    o.require(has_tuple(t2a.necessity_findings, {0.5, 0.2, 0.2}, 0.2, 0.2), "T2a (0.5,0.2,0.2) not reported");
    const auto t11 = grid_check(instantiate(get_theorem("T11")), GridSpec{0.05}, all);
    o.require(has_tuple(t11.equality_samples, {0, 0, 0, 0}, 0, 0), "T11 all-zero equality not reported");
    if (o.pass)
        o.detail = fmt::format("T2a {} findings incl. (0.5,0.2,0.2); T11 {} equality points incl. all-zero",
                               t2a.necessity_count, t11.equality_count);
    return o;
}

Outcome prop_witness() {
    Outcome o;
    const Expr e = parse_expr("(A[-]B)[+](B[-]A)");
    const auto w = witness_positive(e, GridSpec{0.05});
    o.require(w && w->lhs > 0, "no positive tuple");
    const double corner = eval_degree(e, {{"A", 1.0}, {"B", 0.0}});
    o.require(corner == 1.0, fmt::format("(1,0) gives {}", corner));
    if (o.pass) o.detail = fmt::format("witness ({}, {}) = {}; (1,0) = 1", w->tuple[0], w->tuple[1], w->lhs);
    return o;
}

Outcome oracle_equivalence() {
    Outcome o;
    const auto r = set_kernel_equivalence(1000, 7);
    o.require(r.violation_count == 0, fmt::format("{} mismatches", r.violation_count));
    o.require(r.examined == 1000, "trial count");
    if (o.pass) o.detail = fmt::format("1000 trials, seed 7, 0 mismatches ({} undefined skipped)", r.skipped);
    return o;
}

Outcome parser_round_trip() {
    Outcome o;
    const auto bin = [](BinaryOp op, Expr l, Expr r) { return Expr::binary(op, std::move(l), std::move(r)); };
    const Expr a = Expr::var("A"), b = Expr::var("B"), c = Expr::var("C"), d = Expr::var("D");
    const Expr ab = bin(BinaryOp::BoundedSum, a, b);
    o.require(parse_expr("0.5*(A[+]B)") == Expr::scale(0.5, ab), "shape 1");
    o.require(parse_expr("A .* C [+] B .* D") == bin(BinaryOp::BoundedSum, bin(BinaryOp::AlgebraicProduct, a, c),
                                                     bin(BinaryOp::AlgebraicProduct, b, d)),
              "shape 2");
    o.require(parse_expr("(A[+]B)^0.5 / 2") == Expr::scale(0.5, Expr::power(ab, 0.5)), "shape 3");
    const auto amgm = parse_statement("0.5*(A[+]B) >= (A.*B)^0.5 given a*b <= 0.25");
    o.require(amgm.relation == Relation::Superset && amgm.lhs == Expr::scale(0.5, ab) &&
                  amgm.rhs == Expr::power(bin(BinaryOp::AlgebraicProduct, a, b), 0.5) &&
                  amgm.constraints.size() == 1,
              "shape 4");
    const auto small = parse_statement("A <= B");
    o.require(small.relation == Relation::Subset && small.variables == std::vector<std::string>{"A", "B"}, "shape 5");
    bool rejected = false;
    try {
        parse_statement("A >= given");
    } catch (const ParseError&) {
        rejected = true;
    }
    o.require(rejected, "shape 6");

    Rng rng(2024);
    ExprGenOptions gen;
    gen.variables = {"A", "B", "C", "D1"};
    gen.max_depth = 5;
    int failures = 0;
    for (int i = 0; i < 10000; ++i) {
        const Expr e = random_expr(rng, gen);
        failures += parse_expr(format_expr(e)) == e ? 0 : 1;
    }
    o.require(failures == 0, fmt::format("{} round-trip failures", failures));
    if (o.pass) o.detail = "6 golden shapes, 10000 generated trees";
    return o;
}

Outcome determinism() {
    Outcome o;
    const auto one = run_cli("theorems check-all --format json --workers 1", false);
    const auto eight = run_cli("theorems check-all --format json --workers 8", false);
    o.require(one.code == 0 && eight.code == 0, fmt::format("exit codes {} / {}", one.code, eight.code));
    o.require(!one.out.empty() && one.out == eight.out, "outputs differ");
    if (o.pass) o.detail = fmt::format("{} bytes identical for workers 1 and 8", one.out.size());
    return o;
}

Outcome cli_exit_codes() {
    Outcome o;
    const std::string sets = "/tmp/fuzzyrel_acceptance_sets.json";
    std::ofstream(sets) << R"({"universe": ["x1","x2"], "sets": {"A": {"x1":0.2,"x2":0.7}, "B": {"x1":0.5,"x2":0.5}}})";
    struct Case {
        std::string args;
        int code;
        std::string needle;
    };
    const std::vector<Case> cases = {
        {"eval --sets " + sets + " --expr 'A [+] B'", 0, "x1: 0.7\nx2: 1\n"},
        {"eval --sets " + sets + " --expr 'A [/] O' --quotient-mode strict", 1, "EmptyDivisor"},
        {"eval --sets " + sets + " --expr C", 1, "UnboundVariable"},
        {"check '0.5*(A[+]B) >= (A.*B)^0.5' --given 'a*b <= 0.25'", 0, "holds"},
        {"check 'A <= A.*A'", 3, "witness a=0.05"},
        {"check 'A >='", 1, "error"},
        {"check 'A <= A' --resolution 0.3", 2, ""},
        {"eval --sets " + sets + " --expr A --format yaml", 2, ""},
    };
    for (const auto& c : cases) {
        const auto r = run_cli(c.args);
        o.require(r.code == c.code, fmt::format("`{}` exited {}", c.args, r.code));
        o.require(r.out.find(c.needle) != std::string::npos, fmt::format("`{}` output lacks '{}'", c.args, c.needle));
    }
    std::remove(sets.c_str());
    if (o.pass) o.detail = fmt::format("{} cases over exit codes 0/1/2/3", cases.size());
    return o;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"theorem suite green", theorem_suite},
        {"scalar lemmas green", scalar_lemmas_hold},
        {"equality sufficiency", equality_sufficiency},
        {"necessity findings", necessity_findings},
        {"existence witness", prop_witness},
        {"oracle equivalence", oracle_equivalence},
        {"parser round trip", parser_round_trip},
        {"determinism across workers", determinism},
        {"CLI exit codes", cli_exit_codes},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = Outcome{false, fmt::format("threw: {}", e.what())};
        }
        failed += o.pass ? 0 : 1;
        fmt::print("criterion {}: {} {} ({})\n", i + 1, o.pass ? "PASS" : "FAIL", criteria[i].first, o.detail);
    }
    std::fflush(stdout);
    return failed == 0 ? 0 : 1;
}
