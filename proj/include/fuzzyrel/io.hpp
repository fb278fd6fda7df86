#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "fuzzyrel/core.hpp"
#include "fuzzyrel/eval.hpp"
#include "fuzzyrel/registry.hpp"
#include "fuzzyrel/verifier.hpp"

namespace fuzzyrel {

struct SetsFile {
    Universe universe;
    SetEnv sets;
};

// {"universe": [...], "sets": {"A": {"x1": 0.2, ...}, ...}}. Every set must
// list exactly the universe's elements.
SetsFile parse_sets_json(std::string_view text);
SetsFile load_sets_file(const std::string& path);

nlohmann::json to_json(const Sample& s);
nlohmann::json to_json(const CheckReport& r);
nlohmann::json to_json(const SuiteReport& suite, const SuiteOptions& options, const VerifyOptions& verify);
nlohmann::json to_json(const TheoremEntry& entry);
nlohmann::json to_json(const ScalarLemma& lemma);
nlohmann::json catalog_json();

// Line-oriented rendering with degrees at 6 significant digits.
std::string format_degree(double value);
std::string format_tuple(const std::vector<std::string>& names, const std::vector<double>& tuple);
std::string render_text(const CheckReport& r);

// Splits on commas outside parentheses, trimming each piece.
std::vector<std::string> split_top_level(std::string_view text);

}  // namespace fuzzyrel
