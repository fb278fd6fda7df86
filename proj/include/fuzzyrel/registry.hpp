#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fuzzyrel/expr.hpp"

namespace fuzzyrel {

enum class ClaimKind { IffClaimed, SufficiencyOnly };
enum class EntryKind { Inclusion, Existence };

std::string_view to_string(ClaimKind kind) noexcept;

// A numeric parameter substituted into an entry's DSL template.
struct Parameter {
    std::string name;  // "p" or "m"
    double min = 0.0;
    double max = 0.0;
    bool max_inclusive = true;
    bool integer = false;
    std::vector<double> sweep;  // values exercised by the suite

    bool admits(double value) const noexcept;
};

struct TheoremEntry {
    std::string id;
    std::string group;  // catalog group, e.g. "T3" for T3a..T3d
    std::string title;
    std::string paper_ref;
    // Statement text. Parameterized entries use {p}, {m}, {m-1} and {2^p}.
    std::string dsl;
    EntryKind kind = EntryKind::Inclusion;
    std::optional<Parameter> parameter;
    std::optional<ClaimKind> claim_kind;  // present iff the statement has equality_iff
    bool strict_claimed = false;
    std::string notes;
};

// Set-level entries in catalog order.
const std::vector<TheoremEntry>& list_theorems();
const TheoremEntry& get_theorem(std::string_view id);

// The sixteen catalog groups: T1..T12, P1, C1, L1, L2.
const std::vector<std::string>& catalog_groups();

// Substitutes the parameter and parses. Entries without a parameter reject a
// value; parameterized entries default to the first sweep value.
std::string instantiate_text(const TheoremEntry& entry, std::optional<double> value = {});
RelationStatement instantiate(const TheoremEntry& entry, std::optional<double> value = {});

// The values a suite run exercises: the sweep, or a single empty slot.
std::vector<std::optional<double>> parameter_sweep(const TheoremEntry& entry);

struct ScalarVariable {
    std::string name;
    double lo = 0.0;
    double hi = 1.0;
    std::optional<double> step;  // overrides the grid resolution
};

// A real-valued inequality (possibly a chain of several) over a box domain.
struct ScalarLemma {
    std::string id;
    std::string title;
    std::string paper_ref;
    std::vector<ScalarVariable> variables;
    std::vector<std::string> relations;  // each "lhs <op> rhs"
    std::vector<std::string> given;
    std::optional<std::string> equality_iff;
};

// L1, L2, S1..S6.
const std::vector<ScalarLemma>& scalar_lemmas();
const ScalarLemma& get_scalar_lemma(std::string_view id);

}  // namespace fuzzyrel
