#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fuzzyrel/core.hpp"
#include "fuzzyrel/expr.hpp"
#include "fuzzyrel/ops.hpp"
#include "fuzzyrel/registry.hpp"

namespace fuzzyrel {

inline constexpr std::size_t kMaxArity = 5;
inline constexpr std::size_t kUnlimited = std::numeric_limits<std::size_t>::max();

// Uniform lattice {0, r, 2r, ..., 1} per variable; 1/r must be an integer.
struct GridSpec {
    double resolution = 0.05;

    // Number of intervals, 1/r. Throws InvalidArgument for a bad resolution.
    std::size_t intervals() const;
    std::size_t points() const { return intervals() + 1; }
};

struct RandomSpec {
    std::uint64_t samples = 10000;
    std::uint64_t seed = 0;
};

struct VerifyOptions {
    Tolerance tolerance{};
    QuotientMode quotient_mode = QuotientMode::Limit;
    unsigned workers = 1;  // 0 picks the hardware concurrency
    // Cap on each sample list in a report; counts are always complete.
    std::size_t sample_limit = 20;
    bool timing = false;  // fill CheckReport::elapsed_ms
};

enum class Verdict { Holds, Violated };
std::string_view to_string(Verdict v) noexcept;

struct Sample {
    std::vector<double> tuple;
    double lhs = 0.0;
    double rhs = 0.0;
};

struct CheckReport {
    std::string id;
    std::string statement;
    std::string mode;  // grid | random | equality | witness | scalar | oracle
    std::vector<std::string> variables;
    std::map<std::string, double> parameters;
    std::optional<double> resolution;
    std::optional<RandomSpec> random;
    std::uint64_t examined = 0;
    std::uint64_t satisfying = 0;
    Verdict verdict = Verdict::Holds;
    std::uint64_t violation_count = 0;
    std::vector<Sample> violations;
    std::uint64_t equality_count = 0;
    std::vector<Sample> equality_samples;
    std::uint64_t necessity_count = 0;
    std::vector<Sample> necessity_findings;
    std::optional<std::uint64_t> claimed;  // tuples meeting the equality claim
    std::optional<Sample> witness;
    std::uint64_t skipped = 0;
    std::vector<std::string> notes;
    std::optional<double> elapsed_ms;

    bool holds() const noexcept { return verdict == Verdict::Holds; }
};

// Exhaustive check over the grid in lexicographic tuple order.
CheckReport grid_check(const RelationStatement& s, const GridSpec& g, const VerifyOptions& opts = {});

// The same contract on uniformly drawn tuples (see Rng for the generator).
CheckReport random_check(const RelationStatement& s, const RandomSpec& r,
                         const VerifyOptions& opts = {});

// Sufficiency of the equality claim is checked (failures are violations);
// tuples with equality outside the claim are listed as necessity findings.
CheckReport probe_equality(const TheoremEntry& entry, const GridSpec& g,
                           const VerifyOptions& opts = {}, std::optional<double> parameter = {});
CheckReport probe_equality(const RelationStatement& s, const GridSpec& g,
                           const VerifyOptions& opts = {});

// First grid tuple, over the free variables of e, where e exceeds epsilon.
std::optional<Sample> witness_positive(const Expr& e, const GridSpec& g,
                                       const VerifyOptions& opts = {});

CheckReport check_scalar_lemma(const ScalarLemma& lemma, const GridSpec& g,
                               const VerifyOptions& opts = {});

// Random expressions on random universes of size 1..3: eval_set must equal
// elementwise eval_degree exactly. Trials whose set-level evaluation is
// undefined (zero divisor, overflowing multiple) are skipped and counted.
CheckReport set_kernel_equivalence(std::uint64_t trials, std::uint64_t seed,
                                   QuotientMode mode = QuotientMode::Limit);

// Grid and equality reports for one catalog entry at one parameter value.
std::vector<CheckReport> check_theorem(const TheoremEntry& entry, const GridSpec& g,
                                       const VerifyOptions& opts = {},
                                       std::optional<double> parameter = {});

struct SuiteOptions {
    double resolution = 0.05;        // statements with at most three variables
    double wide_resolution = 0.1;    // four or more variables
    std::uint64_t oracle_trials = 1000;
    std::uint64_t oracle_seed = 7;
};

struct SuiteReport {
    std::vector<CheckReport> reports;
    bool all_hold() const noexcept;
};

SuiteReport run_full_suite(const SuiteOptions& suite = {}, const VerifyOptions& opts = {});

}  // namespace fuzzyrel
