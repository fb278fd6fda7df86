#include "fuzzyrel/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <fmt/format.h>

#include "fuzzyrel/error.hpp"
#include "fuzzyrel/random.hpp"

namespace fuzzyrel {

using nlohmann::json;

SetsFile parse_sets_json(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        throw InputFormatError(fmt::format("invalid JSON: {}", e.what()));
    }
    if (!doc.is_object()) throw InputFormatError("sets file must be a JSON object");
    for (const auto& [key, value] : doc.items()) {
        if (key != "universe" && key != "sets") throw InputFormatError(fmt::format("unexpected key '{}'", key));
    }
    if (!doc.contains("universe") || !doc["universe"].is_array())
        throw InputFormatError("'universe' must be an array of strings");
    if (!doc.contains("sets") || !doc["sets"].is_object())
        throw InputFormatError("'sets' must be an object");

    std::vector<std::string> labels;
    for (const auto& label : doc["universe"]) {
        if (!label.is_string()) throw InputFormatError("universe elements must be strings");
        labels.push_back(label.get<std::string>());
    }
    SetsFile out{Universe(labels), {}};

    for (const auto& [name, members] : doc["sets"].items()) {
        if (!is_valid_set_variable(name))
            throw InputFormatError(fmt::format("'{}' is not a valid set name", name));
        if (!members.is_object()) throw InputFormatError(fmt::format("set '{}' must be an object", name));
        for (const auto& [label, degree] : members.items()) {
            if (!out.universe.index_of(label))
                throw InputFormatError(fmt::format("set '{}' has unknown element '{}'", name, label));
            if (!degree.is_number())
                throw InputFormatError(fmt::format("set '{}' element '{}' is not a number", name, label));
        }
        std::vector<double> degrees;
        degrees.reserve(labels.size());
        for (const auto& label : labels) {
            if (!members.contains(label))
                throw InputFormatError(fmt::format("set '{}' has no degree for '{}'", name, label));
            degrees.push_back(members[label].get<double>());
        }
        out.sets.emplace(name, make_fuzzy_set(out.universe, std::move(degrees)));
    }
    return out;
}

SetsFile load_sets_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputFormatError(fmt::format("cannot read '{}'", path));
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_sets_json(buf.str());
}

json to_json(const Sample& s) { return json{{"tuple", s.tuple}, {"lhs", s.lhs}, {"rhs", s.rhs}}; }

namespace {

json samples_json(const std::vector<Sample>& list) {
    json out = json::array();
    for (const auto& s : list) out.push_back(to_json(s));
    return out;
}

// "lhs <= rhs given a, b equality_iff c" split into its written parts.
struct TemplateParts {
    std::vector<std::string> given;
    std::optional<std::string> equality_iff;
};

TemplateParts split_template(const std::string& dsl) {
    TemplateParts parts;
    std::string rest = dsl;
    if (auto pos = rest.find(" equality_iff "); pos != std::string::npos) {
        parts.equality_iff = rest.substr(pos + 14);
        rest.resize(pos);
    }
    if (auto pos = rest.find(" given "); pos != std::string::npos) parts.given = split_top_level(rest.substr(pos + 7));
    return parts;
}

}  // namespace

json to_json(const CheckReport& r) {
    json j{
        {"id", r.id},
        {"statement", r.statement},
        {"mode", r.mode},
        {"variables", r.variables},
        {"examined", r.examined},
        {"satisfying", r.satisfying},
        {"verdict", std::string(to_string(r.verdict))},
        {"violations", samples_json(r.violations)},
        {"violation_count", r.violation_count},
        {"equality_points", {{"count", r.equality_count}, {"samples", samples_json(r.equality_samples)}}},
        {"necessity_findings", samples_json(r.necessity_findings)},
        {"necessity_count", r.necessity_count},
        {"notes", r.notes},
    };
    if (!r.parameters.empty()) j["parameters"] = r.parameters;
    if (r.resolution) j["resolution"] = *r.resolution;
    if (r.random) {
        j["samples"] = r.random->samples;
        j["seed"] = r.random->seed;
        j["rng"] = std::string(Rng::kAlgorithm);
    }
    if (r.claimed) j["claimed"] = *r.claimed;
    if (r.mode == "witness") j["witness"] = r.witness ? to_json(*r.witness) : json(nullptr);
    if (r.mode == "oracle") j["skipped"] = r.skipped;
    if (r.elapsed_ms) j["elapsed_ms"] = *r.elapsed_ms;
    return j;
}

json to_json(const SuiteReport& suite, const SuiteOptions& options, const VerifyOptions& verify) {
    json reports = json::array();
    std::uint64_t holds = 0;
    for (const auto& r : suite.reports) {
        reports.push_back(to_json(r));
        holds += r.holds() ? 1 : 0;
    }
    return json{
        {"reports", reports},
        {"summary",
         {{"reports", suite.reports.size()},
          {"holds", holds},
          {"violated", suite.reports.size() - holds},
          {"verdict", suite.all_hold() ? "holds" : "violated"}}},
        {"tolerance", verify.tolerance.epsilon()},
        {"quotient_mode", std::string(to_string(verify.quotient_mode))},
        {"resolution", {{"default", options.resolution}, {"wide", options.wide_resolution}}},
        {"oracle", {{"trials", options.oracle_trials}, {"seed", options.oracle_seed}}},
    };
}

json to_json(const TheoremEntry& entry) {
    const TemplateParts parts = split_template(entry.dsl);
    json j{
        {"id", entry.id},
        {"group", entry.group},
        {"title", entry.title},
        {"dsl", entry.dsl},
        {"given", parts.given},
        {"equality_iff", parts.equality_iff ? json(*parts.equality_iff) : json(nullptr)},
        {"kind", entry.claim_kind ? json(std::string(to_string(*entry.claim_kind))) : json(nullptr)},
        {"paper_ref", entry.paper_ref},
        {"entry_kind", entry.kind == EntryKind::Existence ? "existence" : "inclusion"},
        {"strict_claimed", entry.strict_claimed},
        {"notes", entry.notes},
    };
    if (entry.parameter) {
        const Parameter& p = *entry.parameter;
        json range{{"name", p.name}, {"min", p.min}, {"integer", p.integer}, {"sweep", p.sweep},
                   {"max_inclusive", p.max_inclusive}};
        range["max"] = std::isfinite(p.max) ? json(p.max) : json(nullptr);
        j["parameter"] = range;
    }
    return j;
}

json to_json(const ScalarLemma& lemma) {
    json domain = json::object();
    for (const auto& v : lemma.variables) {
        json d{{"lo", v.lo}, {"hi", v.hi}};
        if (v.step) d["step"] = *v.step;
        domain[v.name] = d;
    }
    return json{
        {"id", lemma.id},
        {"title", lemma.title},
        {"paper_ref", lemma.paper_ref},
        {"relations", lemma.relations},
        {"given", lemma.given},
        {"equality_iff", lemma.equality_iff ? json(*lemma.equality_iff) : json(nullptr)},
        {"domain", domain},
    };
}

json catalog_json() {
    json theorems = json::array();
    for (const auto& e : list_theorems()) theorems.push_back(to_json(e));
    json lemmas = json::array();
    for (const auto& l : scalar_lemmas()) lemmas.push_back(to_json(l));
    return json{{"groups", catalog_groups()}, {"theorems", theorems}, {"scalar_lemmas", lemmas}};
}

std::string format_degree(double value) { return fmt::format("{:.6g}", value); }

std::string format_tuple(const std::vector<std::string>& names, const std::vector<double>& tuple) {
    std::string out;
    for (std::size_t i = 0; i < tuple.size(); ++i) {
        if (i) out += ", ";
        out += (i < names.size() ? names[i] : fmt::format("v{}", i)) + "=" + format_degree(tuple[i]);
    }
    return out;
}

std::string render_text(const CheckReport& r) {
    std::string out = r.id.empty() ? r.mode : r.id + " " + r.mode;
    for (const auto& [name, value] : r.parameters) out += fmt::format(" {}={}", name, format_degree(value));
    if (r.resolution) out += fmt::format(" r={}", format_degree(*r.resolution));
    if (r.random) out += fmt::format(" samples={} seed={}", r.random->samples, r.random->seed);
    out += fmt::format(": {}\n", to_string(r.verdict));
    out += fmt::format("  statement: {}\n", r.statement);
    out += fmt::format("  examined {}, satisfying {}, violations {}, equality points {}, necessity findings {}\n",
                       r.examined, r.satisfying, r.violation_count, r.equality_count, r.necessity_count);
    if (r.claimed) out += fmt::format("  tuples meeting the equality claim: {}\n", *r.claimed);
    auto line = [&](std::string_view label, const Sample& s) {
        out += fmt::format("  {} {}: lhs={} rhs={}\n", label, format_tuple(r.variables, s.tuple),
                           format_degree(s.lhs), format_degree(s.rhs));
    };
    if (!r.violations.empty()) out += fmt::format("  witness {}\n", format_tuple(r.variables, r.violations.front().tuple));
    for (const auto& s : r.violations) line(r.mode == "equality" ? "unequal" : "violation", s);
    if (r.violation_count > r.violations.size())
        out += fmt::format("  ... {} more violations\n", r.violation_count - r.violations.size());
    if (r.mode == "witness" && r.witness)
        out += fmt::format("  witness {}: value={}\n", format_tuple(r.variables, r.witness->tuple),
                           format_degree(r.witness->lhs));
    for (const auto& n : r.notes) out += fmt::format("  note: {}\n", n);
    if (r.elapsed_ms) out += fmt::format("  elapsed {:.1f} ms\n", *r.elapsed_ms);
    return out;
}

std::vector<std::string> split_top_level(std::string_view text) {
    std::vector<std::string> out;
    int depth = 0;
    std::string current;
    auto flush = [&] {
        const auto b = current.find_first_not_of(" \t");
        const auto e = current.find_last_not_of(" \t");
        if (b != std::string::npos) out.push_back(current.substr(b, e - b + 1));
        current.clear();
    };
    for (char ch : text) {
        if (ch == '(') ++depth;
        if (ch == ')') --depth;
        if (ch == ',' && depth == 0) {
            flush();
            continue;
        }
        current += ch;
    }
    flush();
    return out;
}

}  // namespace fuzzyrel
