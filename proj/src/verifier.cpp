#include "fuzzyrel/verifier.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <exception>
#include <thread>

#include <fmt/format.h>

#include "fuzzyrel/error.hpp"
#include "fuzzyrel/eval.hpp"
#include "fuzzyrel/random.hpp"

namespace fuzzyrel {

std::string_view to_string(Verdict v) noexcept { return v == Verdict::Holds ? "holds" : "violated"; }

std::size_t GridSpec::intervals() const {
    if (!(resolution > 0.0 && resolution <= 1.0))
        throw InvalidArgument(fmt::format("grid resolution {} must lie in (0, 1]", resolution));
    const double n = std::round(1.0 / resolution);
    if (std::abs(n * resolution - 1.0) > 1e-9)
        throw InvalidArgument(fmt::format("1/resolution must be an integer, got {}", 1.0 / resolution));
    return static_cast<std::size_t>(n);
}

bool SuiteReport::all_hold() const noexcept {
    return std::all_of(reports.begin(), reports.end(), [](const CheckReport& r) { return r.holds(); });
}

namespace {

using Clock = std::chrono::steady_clock;

// Counts and capped sample lists accumulated over a contiguous tuple range.
struct Tally {
    std::size_t limit = 0;
    std::uint64_t examined = 0;
    std::uint64_t satisfying = 0;
    std::uint64_t violation_count = 0;
    std::uint64_t equality_count = 0;
    std::uint64_t necessity_count = 0;
    std::uint64_t claimed = 0;
    std::vector<Sample> violations;
    std::vector<Sample> equalities;
    std::vector<Sample> necessities;

    void keep(std::vector<Sample>& list, std::span<const double> t, double lhs, double rhs) const {
        if (list.size() < limit) list.push_back(Sample{{t.begin(), t.end()}, lhs, rhs});
    }
    void violation(std::span<const double> t, double lhs, double rhs) {
        ++violation_count;
        keep(violations, t, lhs, rhs);
    }
    void equality(std::span<const double> t, double lhs, double rhs) {
        ++equality_count;
        keep(equalities, t, lhs, rhs);
    }
    void necessity(std::span<const double> t, double lhs, double rhs) {
        ++necessity_count;
        keep(necessities, t, lhs, rhs);
    }

    void absorb(Tally&& later) {
        examined += later.examined;
        satisfying += later.satisfying;
        violation_count += later.violation_count;
        equality_count += later.equality_count;
        necessity_count += later.necessity_count;
        claimed += later.claimed;
        auto append = [this](std::vector<Sample>& into, std::vector<Sample>& from) {
            for (auto& s : from) {
                if (into.size() >= limit) break;
                into.push_back(std::move(s));
            }
        };
        append(violations, later.violations);
        append(equalities, later.equalities);
        append(necessities, later.necessities);
    }
};

unsigned resolve_workers(unsigned requested) {
    if (requested != 0) return requested;
    return std::max(1u, std::thread::hardware_concurrency());
}

// Visits tuples 0..count-1 in order. fill(index, buffer) materializes a tuple;
// classify(tuple, tally) records its outcome. Work is split into contiguous
// chunks whose tallies merge in index order, so the result does not depend on
// the number of workers.
template <class Fill, class Classify>
Tally scan(std::uint64_t count, std::size_t arity, const Fill& fill, const Classify& classify,
           unsigned workers, std::size_t limit) {
    auto run = [&](std::uint64_t begin, std::uint64_t end) {
        Tally t;
        t.limit = limit;
        std::vector<double> tuple(arity);
        for (std::uint64_t i = begin; i < end; ++i) {
            fill(i, tuple);
            ++t.examined;
            classify(std::span<const double>(tuple), t);
        }
        return t;
    };

    constexpr std::uint64_t kMinChunk = 2048;
    const std::uint64_t chunks =
        std::min<std::uint64_t>(resolve_workers(workers), std::max<std::uint64_t>(1, count / kMinChunk));
    if (chunks <= 1) return run(0, count);

    std::vector<Tally> parts(chunks);
    std::vector<std::exception_ptr> errors(chunks);
    std::vector<std::thread> threads;
    threads.reserve(chunks);
    for (std::uint64_t c = 0; c < chunks; ++c) {
        const std::uint64_t begin = count * c / chunks;
        const std::uint64_t end = count * (c + 1) / chunks;
        threads.emplace_back([&, c, begin, end] {
            try {
                parts[c] = run(begin, end);
            } catch (...) {
                errors[c] = std::current_exception();
            }
        });
    }
    for (auto& th : threads) th.join();
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);

    Tally total = std::move(parts.front());
    for (std::uint64_t c = 1; c < chunks; ++c) total.absorb(std::move(parts[c]));
    return total;
}

// Lexicographic product of per-variable value lists; variable 0 varies slowest.
class Lattice {
public:
    explicit Lattice(std::vector<std::vector<double>> axes) : axes_(std::move(axes)) {
        count_ = 1;
        for (const auto& a : axes_) count_ *= a.size();
    }
    Lattice(std::size_t arity, const GridSpec& g) {
        const std::size_t n = g.intervals();
        std::vector<double> values(n + 1);
        for (std::size_t i = 0; i <= n; ++i) values[i] = static_cast<double>(i) / static_cast<double>(n);
        axes_.assign(arity, values);
        count_ = 1;
        for (std::size_t k = 0; k < arity; ++k) count_ *= values.size();
    }

    std::uint64_t count() const noexcept { return count_; }
    std::size_t arity() const noexcept { return axes_.size(); }

    void operator()(std::uint64_t index, std::vector<double>& tuple) const {
        for (std::size_t k = axes_.size(); k-- > 0;) {
            const auto& axis = axes_[k];
            tuple[k] = axis[index % axis.size()];
            index /= axis.size();
        }
    }

private:
    std::vector<std::vector<double>> axes_;
    std::uint64_t count_ = 1;
};

std::vector<std::string> aliases(const std::vector<std::string>& variables) {
    std::vector<std::string> out;
    out.reserve(variables.size());
    for (const auto& v : variables) out.push_back(degree_alias(v));
    return out;
}

void require_arity(std::size_t arity) {
    if (arity > kMaxArity) throw ArityTooLarge(arity, kMaxArity);
}

void finish(CheckReport& r, Tally&& t) {
    r.examined = t.examined;
    r.satisfying = t.satisfying;
    r.violation_count = t.violation_count;
    r.violations = std::move(t.violations);
    r.equality_count = t.equality_count;
    r.equality_samples = std::move(t.equalities);
    r.necessity_count = t.necessity_count;
    r.necessity_findings = std::move(t.necessities);
    r.verdict = r.violation_count == 0 ? Verdict::Holds : Verdict::Violated;
}

double elapsed_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

// Relation check plus equality bookkeeping, shared by grid and random modes.
auto inclusion_classifier(const CompiledStatement& cs, const VerifyOptions& opts) {
    const double eps = opts.tolerance.epsilon();
    const auto mode = opts.quotient_mode;
    return [&cs, eps, mode](std::span<const double> t, Tally& tally) {
        if (!cs.constraints_hold(t, eps)) return;
        ++tally.satisfying;
        const double l = cs.lhs(t, mode);
        const double r = cs.rhs(t, mode);
        if (!relation_holds(l, cs.relation(), r, eps)) tally.violation(t, l, r);
        if (std::abs(l - r) <= eps) {
            tally.equality(t, l, r);
            if (cs.has_equality_condition() && !cs.equality_condition_holds(t, eps))
                tally.necessity(t, l, r);
        }
    };
}

CheckReport start_report(const RelationStatement& s, std::string mode) {
    CheckReport r;
    r.statement = format_statement(s);
    r.mode = std::move(mode);
    r.variables = aliases(s.variables);
    return r;
}

std::string describe_tuple(const std::vector<std::string>& names, const std::vector<double>& t) {
    std::string out;
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (i) out += ", ";
        out += fmt::format("{}={}", names[i], format_number(t[i]));
    }
    return out;
}

}  // namespace

CheckReport grid_check(const RelationStatement& s, const GridSpec& g, const VerifyOptions& opts) {
    const auto start = Clock::now();
    require_arity(s.variables.size());
    const CompiledStatement cs(s);
    const Lattice lattice(cs.arity(), g);
    CheckReport r = start_report(s, "grid");
    r.resolution = g.resolution;
    finish(r, scan(lattice.count(), lattice.arity(), lattice, inclusion_classifier(cs, opts),
                   opts.workers, opts.sample_limit));
    if (opts.timing) r.elapsed_ms = elapsed_since(start);
    return r;
}

CheckReport random_check(const RelationStatement& s, const RandomSpec& spec, const VerifyOptions& opts) {
    const auto start = Clock::now();
    if (spec.samples == 0) throw InvalidArgument("random check needs at least one sample");
    const CompiledStatement cs(s);
    const std::size_t arity = cs.arity();
    const auto classify = inclusion_classifier(cs, opts);

    // Tuples are drawn sequentially in blocks so that the sample sequence is
    // fixed by the seed alone; each block is then scanned in parallel.
    constexpr std::uint64_t kBlock = 1 << 16;
    Rng rng(spec.seed);
    Tally total;
    total.limit = opts.sample_limit;
    std::vector<double> block;
    for (std::uint64_t done = 0; done < spec.samples;) {
        const std::uint64_t n = std::min(kBlock, spec.samples - done);
        block.resize(n * arity);
        for (auto& v : block) v = rng.unit_closed();
        auto fill = [&block, arity](std::uint64_t i, std::vector<double>& t) {
            std::copy_n(block.begin() + static_cast<std::ptrdiff_t>(i * arity), arity, t.begin());
        };
        total.absorb(scan(n, arity, fill, classify, opts.workers, opts.sample_limit));
        done += n;
    }

    CheckReport r = start_report(s, "random");
    r.random = spec;
    finish(r, std::move(total));
    if (opts.timing) r.elapsed_ms = elapsed_since(start);
    return r;
}

CheckReport probe_equality(const RelationStatement& s, const GridSpec& g, const VerifyOptions& opts) {
    const auto start = Clock::now();
    if (!s.equality_condition) throw NoEqualityClaim(format_statement(s));
    require_arity(s.variables.size());
    const CompiledStatement cs(s);
    const Lattice lattice(cs.arity(), g);
    const double eps = opts.tolerance.epsilon();
    const auto mode = opts.quotient_mode;
    auto classify = [&cs, eps, mode](std::span<const double> t, Tally& tally) {
        if (!cs.constraints_hold(t, eps)) return;
        ++tally.satisfying;
        const double l = cs.lhs(t, mode);
        const double r = cs.rhs(t, mode);
        const bool claim = cs.equality_condition_holds(t, eps);
        const bool equal = std::abs(l - r) <= eps;
        if (claim) {
            ++tally.claimed;
            if (!equal) tally.violation(t, l, r);
        }
        if (equal) {
            tally.equality(t, l, r);
            if (!claim) tally.necessity(t, l, r);
        }
    };
    Tally tally = scan(lattice.count(), lattice.arity(), lattice, classify, opts.workers, opts.sample_limit);
    CheckReport r = start_report(s, "equality");
    r.resolution = g.resolution;
    r.claimed = tally.claimed;
    finish(r, std::move(tally));
    if (opts.timing) r.elapsed_ms = elapsed_since(start);
    return r;
}

CheckReport probe_equality(const TheoremEntry& entry, const GridSpec& g, const VerifyOptions& opts,
                           std::optional<double> parameter) {
    if (!entry.claim_kind) throw NoEqualityClaim(entry.id);
    CheckReport r = probe_equality(instantiate(entry, parameter), g, opts);
    r.id = entry.id;
    if (entry.parameter) r.parameters[entry.parameter->name] = parameter.value_or(entry.parameter->sweep.front());
    r.notes.push_back(fmt::format("claim kind: {}", to_string(*entry.claim_kind)));
    return r;
}

std::optional<Sample> witness_positive(const Expr& e, const GridSpec& g, const VerifyOptions& opts) {
    const auto variables = free_variables(e);
    require_arity(variables.size());
    const CompiledExpr prog(e, variables);
    const Lattice lattice(variables.size(), g);
    const double eps = opts.tolerance.epsilon();
    const auto mode = opts.quotient_mode;
    auto classify = [&prog, eps, mode](std::span<const double> t, Tally& tally) {
        const double v = prog.eval(t, mode);
        if (v > eps) tally.violation(t, v, 0.0);
    };
    Tally tally = scan(lattice.count(), lattice.arity(), lattice, classify, opts.workers, 1);
    if (tally.violations.empty()) return std::nullopt;
    return tally.violations.front();
}

CheckReport check_scalar_lemma(const ScalarLemma& lemma, const GridSpec& g, const VerifyOptions& opts) {
    const auto start = Clock::now();
    std::vector<std::string> names;
    std::vector<std::vector<double>> axes;
    for (const auto& v : lemma.variables) {
        names.push_back(v.name);
        const double step = v.step.value_or(g.resolution);
        const double width = v.hi - v.lo;
        const double n = std::round(width / step);
        if (!(step > 0.0) || n < 1 || std::abs(n * step - width) > 1e-9 * std::max(1.0, width))
            throw InvalidArgument(fmt::format("{}: step {} does not divide [{}, {}]", lemma.id, step,
                                              v.lo, v.hi));
        std::vector<double> axis(static_cast<std::size_t>(n) + 1);
        for (std::size_t i = 0; i < axis.size(); ++i)
            axis[i] = v.lo + width * static_cast<double>(i) / n;
        axes.push_back(std::move(axis));
    }
    require_arity(names.size());

    struct Rel {
        CompiledArith lhs;
        Comparator cmp;
        CompiledArith rhs;
    };
    std::vector<Rel> relations;
    for (const auto& text : lemma.relations) {
        const Constraint c = parse_constraint(text);
        relations.push_back(Rel{CompiledArith(c.lhs, names), c.cmp, CompiledArith(c.rhs, names)});
    }
    std::vector<CompiledConstraint> given;
    for (const auto& text : lemma.given) given.emplace_back(parse_constraint(text), names);
    std::optional<CompiledCondition> claim;
    if (lemma.equality_iff) claim.emplace(parse_condition(*lemma.equality_iff), names);

    // Values may exceed 1 here, so slack scales with magnitude.
    const double eps = opts.tolerance.epsilon();
    auto slack = [eps](double l, double r) { return eps * std::max({1.0, std::abs(l), std::abs(r)}); };
    auto classify = [&](std::span<const double> t, Tally& tally) {
        for (const auto& c : given)
            if (!c.holds(t, eps)) return;
        ++tally.satisfying;
        bool failed = false;
        for (const auto& rel : relations) {
            const double l = rel.lhs.eval(t);
            const double r = rel.rhs.eval(t);
            if (!failed && !compare(l, rel.cmp, r, slack(l, r))) {
                tally.violation(t, l, r);
                failed = true;
            }
        }
        if (relations.size() != 1) return;
        const double l = relations[0].lhs.eval(t);
        const double r = relations[0].rhs.eval(t);
        const bool equal = std::abs(l - r) <= slack(l, r);
        const bool claimed = claim && claim->holds(t, eps);
        if (claimed) {
            ++tally.claimed;
            if (!equal && !failed) tally.violation(t, l, r);
        }
        if (equal) {
            tally.equality(t, l, r);
            if (claim && !claimed) tally.necessity(t, l, r);
        }
    };

    const Lattice lattice(std::move(axes));
    Tally tally = scan(lattice.count(), lattice.arity(), lattice, classify, opts.workers, opts.sample_limit);

    CheckReport r;
    r.id = lemma.id;
    r.mode = "scalar";
    r.variables = names;
    r.resolution = g.resolution;
    for (std::size_t i = 0; i < lemma.relations.size(); ++i) {
        if (i) r.statement += " ; ";
        r.statement += lemma.relations[i];
    }
    if (!lemma.given.empty()) {
        r.statement += " given ";
        for (std::size_t i = 0; i < lemma.given.size(); ++i) r.statement += (i ? ", " : "") + lemma.given[i];
    }
    if (lemma.equality_iff) r.statement += " equality_iff " + *lemma.equality_iff;
    if (claim) r.claimed = tally.claimed;
    for (const auto& v : lemma.variables) {
        std::string note = fmt::format("{} in [{}, {}]", v.name, format_number(v.lo), format_number(v.hi));
        if (v.step) note += fmt::format(" step {}", format_number(*v.step));
        r.notes.push_back(std::move(note));
    }
    finish(r, std::move(tally));
    if (opts.timing) r.elapsed_ms = elapsed_since(start);
    return r;
}

CheckReport set_kernel_equivalence(std::uint64_t trials, std::uint64_t seed, QuotientMode mode) {
    if (trials == 0) throw InvalidArgument("set_kernel_equivalence needs at least one trial");
    CheckReport r;
    r.id = "oracle";
    r.mode = "oracle";
    r.statement = "eval_set == eval_degree elementwise";
    r.variables = {"a", "b", "c"};
    r.random = RandomSpec{trials, seed};

    Rng rng(seed);
    ExprGenOptions gen;
    gen.max_depth = 4;
    const std::vector<std::string> labels = {"x1", "x2", "x3"};
    Tally tally;
    tally.limit = 20;
    for (std::uint64_t trial = 0; trial < trials; ++trial) {
        const std::size_t size = 1 + rng.below(3);
        const Universe universe(std::vector<std::string>(labels.begin(), labels.begin() + size));
        SetEnv sets;
        for (const auto& name : gen.variables) {
            std::vector<double> degrees(size);
            for (auto& d : degrees)
                d = rng.below(2) == 0 ? static_cast<double>(rng.below(5)) / 4.0 : rng.unit_closed();
            sets.emplace(name, make_fuzzy_set(universe, std::move(degrees)));
        }
        const Expr e = random_expr(rng, gen);
        ++tally.examined;

        std::optional<FuzzySet> set_value;
        try {
            set_value = eval_set(e, sets, mode);
        } catch (const EmptyDivisor&) {
        } catch (const ZeroDegreeDivisor&) {
        } catch (const DegreeOutOfRange&) {
        }
        if (!set_value) {
            ++r.skipped;
            continue;
        }
        ++tally.satisfying;
        bool mismatch = false;
        for (std::size_t i = 0; i < size && !mismatch; ++i) {
            DegreeEnv env;
            std::vector<double> tuple;
            for (const auto& [name, set] : sets) {
                env[name] = set.degree_at(i);
                tuple.push_back(set.degree_at(i));
            }
            double kernel_value = std::nan("");
            try {
                kernel_value = eval_degree(e, env, mode);
            } catch (const Error&) {
            }
            const double set_degree = set_value->degree_at(i);
            if (!(kernel_value == set_degree)) {
                tally.violation(tuple, set_degree, kernel_value);
                if (r.notes.size() < 20) r.notes.push_back(fmt::format("trial {}: {}", trial, format_expr(e)));
                mismatch = true;
            }
        }
    }
    finish(r, std::move(tally));
    r.notes.insert(r.notes.begin(), fmt::format("{} trials skipped for undefined set-level results", r.skipped));
    return r;
}

std::vector<CheckReport> check_theorem(const TheoremEntry& entry, const GridSpec& g,
                                       const VerifyOptions& opts, std::optional<double> parameter) {
    const RelationStatement s = instantiate(entry, parameter);
    std::map<std::string, double> params;
    if (entry.parameter) params[entry.parameter->name] = parameter.value_or(entry.parameter->sweep.front());
    std::vector<CheckReport> out;

    if (entry.kind == EntryKind::Existence) {
        const auto start = Clock::now();
        CheckReport r = start_report(s, "witness");
        r.id = entry.id;
        r.parameters = params;
        r.resolution = g.resolution;
        const auto vars = free_variables(s.lhs);
        r.variables = aliases(vars);
        r.examined = 1;
        for (std::size_t k = 0; k < vars.size(); ++k) r.examined *= g.points();
        r.satisfying = r.examined;
        r.witness = witness_positive(s.lhs, g, opts);
        r.verdict = r.witness ? Verdict::Holds : Verdict::Violated;
        if (!r.witness)
            r.notes.push_back(fmt::format("no positive value at resolution {}", format_number(g.resolution)));
        if (!vars.empty()) {
            std::vector<double> corner(vars.size(), 0.0);
            corner[0] = 1.0;
            const double v = CompiledExpr(s.lhs, vars).eval(corner, opts.quotient_mode);
            r.notes.push_back(fmt::format("value at {} is {}", describe_tuple(r.variables, corner), format_number(v)));
        }
        if (opts.timing) r.elapsed_ms = elapsed_since(start);
        out.push_back(std::move(r));
        return out;
    }

    CheckReport grid = grid_check(s, g, opts);
    grid.id = entry.id;
    grid.parameters = params;
    if (!entry.notes.empty()) grid.notes.push_back(entry.notes);
    if (entry.strict_claimed) {
        if (grid.equality_count == 0) {
            grid.notes.push_back("strict inclusion holds on every constrained tuple");
        } else {
            const Sample& first = grid.equality_samples.front();
            grid.notes.push_back(fmt::format(
                "strict inclusion fails at {} tuples; first {} with lhs={} rhs={}", grid.equality_count,
                describe_tuple(grid.variables, first.tuple), format_number(first.lhs), format_number(first.rhs)));
        }
    }
    out.push_back(std::move(grid));

    if (entry.claim_kind) {
        CheckReport eq = probe_equality(entry, g, opts, parameter);
        out.push_back(std::move(eq));
    }
    return out;
}

SuiteReport run_full_suite(const SuiteOptions& suite, const VerifyOptions& opts) {
    SuiteReport out;
    auto record = [&out](const std::string& id, auto&& produce) {
        try {
            for (auto& r : produce()) out.reports.push_back(std::move(r));
        } catch (const Error& e) {
            CheckReport failed;
            failed.id = id;
            failed.mode = "error";
            failed.verdict = Verdict::Violated;
            failed.notes.push_back(e.what());
            out.reports.push_back(std::move(failed));
        }
    };

    for (const auto& entry : list_theorems()) {
        for (const auto& value : parameter_sweep(entry)) {
            record(entry.id, [&] {
                const auto arity = instantiate(entry, value).variables.size();
                const GridSpec g{arity <= 3 ? suite.resolution : suite.wide_resolution};
                return check_theorem(entry, g, opts, value);
            });
        }
    }
    for (const auto& lemma : scalar_lemmas()) {
        record(lemma.id, [&] {
            return std::vector<CheckReport>{check_scalar_lemma(lemma, GridSpec{suite.resolution}, opts)};
        });
    }
    record("oracle", [&] {
        return std::vector<CheckReport>{
            set_kernel_equivalence(suite.oracle_trials, suite.oracle_seed, opts.quotient_mode)};
    });
    return out;
}

}  // namespace fuzzyrel
