#include "fuzzyrel/registry.hpp"

#include <cmath>

#include <fmt/format.h>

#include "fuzzyrel/error.hpp"

namespace fuzzyrel {

std::string_view to_string(ClaimKind kind) noexcept {
    return kind == ClaimKind::IffClaimed ? "iff-claimed" : "sufficiency-only";
}

bool Parameter::admits(double value) const noexcept {
    if (!std::isfinite(value) || value < min) return false;
    if (max_inclusive ? value > max : value >= max) return false;
    return !integer || value == std::floor(value);
}

namespace {

constexpr auto kIff = ClaimKind::IffClaimed;
constexpr auto kSufficiency = ClaimKind::SufficiencyOnly;

Parameter exponent_p(double max, bool inclusive, std::vector<double> sweep) {
    return Parameter{"p", 0.0, max, inclusive, false, std::move(sweep)};
}

std::vector<TheoremEntry> build_catalog() {
    const std::string t3_given = " given a <= c equality_iff a = c";
    const std::string t3_dual = " given a >= c equality_iff a = c";
    const std::string c1_given = " given a*b <= 0.25, 0 < a + b, a + b <= 1 equality_iff a = b";
    const std::string t9_given = " given a^2 + b^2 <= 1, c^2 + d^2 <= 1 equality_iff a*d = b*c";

    std::vector<TheoremEntry> c;
    auto add = [&](TheoremEntry e) { c.push_back(std::move(e)); };

    add({"T1", "T1", "Eight-product inequality", "Thm 1 / Eq. (2)",
         "((A[+]B)/2) .* ((B[+]C)/2) .* ((C[+]A)/2) >= A.*B.*C"
         " given a + b <= 1, b + c <= 1, c + a <= 1 equality_iff a = b and b = c",
         EntryKind::Inclusion, {}, kIff, false, ""});
    add({"T2a", "T2", "Left sub-distributivity", "Thm 2 / Eq. (3)",
         "A .* (B[+]C) <= (A.*B) [+] (A.*C) equality_iff a = 1", EntryKind::Inclusion, {}, kIff,
         false, "equality also holds wherever b + c <= 1"});
    add({"T2b", "T2", "Right sub-distributivity", "Thm 2 / Eq. (4)",
         "(A[+]B) .* C <= (A.*C) [+] (B.*C) equality_iff c = 1", EntryKind::Inclusion, {}, kIff,
         false, "equality also holds wherever a + b <= 1"});
    add({"T3a", "T3", "Bounded product exchange", "Thm 3 / Eq. (5)",
         "A [*] (B[-]C) <= C [*] (B[-]A)" + t3_given, EntryKind::Inclusion, {}, kIff, false, ""});
    add({"T3b", "T3", "Bounded difference exchange", "Thm 3 / Eq. (5)",
         "(A[+]B) [-] C <= (B[+]C) [-] A" + t3_given, EntryKind::Inclusion, {}, kIff, false, ""});
    add({"T3c", "T3", "Bounded product exchange, dual", "Thm 3 / Eq. (6)",
         "A [*] (B[-]C) >= C [*] (B[-]A)" + t3_dual, EntryKind::Inclusion, {}, kIff, false, ""});
    add({"T3d", "T3", "Bounded difference exchange, dual", "Thm 3 / Eq. (6)",
         "(A[+]B) [-] C >= (B[+]C) [-] A" + t3_dual, EntryKind::Inclusion, {}, kIff, false, ""});
    add({"T4", "T4", "Union of powers below algebraic sum", "Thm 4 / Eq. (7)",
         "A^{p} | B^{p} <= A^{p} .+ B^{p} equality_iff a = 1 or b = 0", EntryKind::Inclusion,
         exponent_p(INFINITY, false, {0, 0.25, 0.5, 0.75, 0.9, 1, 2}), kIff, false, ""});
    add({"T5", "T5", "Rearrangement", "Thm 5 / Eq. (9)",
         "(A.*B) [+] (C.*D) >= (A.*D) [+] (B.*C) given a >= c, b >= d equality_iff a = c or b = d",
         EntryKind::Inclusion, {}, kIff, false, ""});
    add({"T6", "T6", "Triangle inequality", "Thm 6 / Eq. (10)",
         "(A[-]B) [+] (B[-]C) >= A[-]C equality_iff a = b or b = c", EntryKind::Inclusion, {},
         kSufficiency, false, "stored without the chain exclusion; it also holds when a <= b <= c"});
    add({"T6d", "T6", "Triangle inequality, degenerate chain", "Thm 6 / Eq. (11)",
         "(A[-]B) [+] (B[-]C) == O given a <= b, b <= c equality_iff a <= b and b <= c",
         EntryKind::Inclusion, {}, kIff, false, ""});
    add({"T7", "T7", "Arithmetic and geometric means", "Thm 7 / Eq. (14)",
         "(A[+]B)/2 >= (A.*B)^0.5 given a*b <= 0.25 equality_iff a = b", EntryKind::Inclusion, {},
         kIff, false, ""});
    add({"T8", "T8", "Geometric and harmonic means", "Thm 8 / Eq. (16)",
         "(A.*B)^0.5 / 2 >= (A.*B) [/] (A[+]B) given 0 < a + b, a + b <= 1 equality_iff a = b",
         EntryKind::Inclusion, {}, kIff, false, ""});
    add({"T9", "T9", "Cauchy-Schwarz", "Thm 9 / Eq. (17)",
         "(A.*C) [+] (B.*D) <= (A^2 [+] B^2)^0.5 .* (C^2 [+] D^2)^0.5" + t9_given,
         EntryKind::Inclusion, {}, kSufficiency, false,
         "equality probed as proportionality a*d = b*c"});
    add({"T9r", "T9", "Cauchy-Schwarz, squared form", "Thm 9 / Rem. 1",
         "((A.*C) [+] (B.*D))^2 <= (A^2 [+] B^2) .* (C^2 [+] D^2)" + t9_given,
         EntryKind::Inclusion, {}, kSufficiency, false, ""});
    add({"T10", "T10", "Generalized Bernoulli", "Thm 10 / Eq. (19)",
         "(A[+]B)^{m} >= A^{m} [+] {m}*(A^{m-1} .* B) given a^{m-1}*b <= 1/{m}"
         " equality_iff a = 0 and b = 0",
         EntryKind::Inclusion, Parameter{"m", 1, 8, true, true, {1, 2, 3, 4, 5, 6, 7, 8}}, kIff,
         false, ""});
    add({"T11", "T11", "Pseudo Chebyshev", "Thm 11 / Eq. (21)",
         "(A[+]B) .* (C[+]D) / 2 <= (A.*C) [+] (B.*D) given a >= b, c >= d, a + b <= 1, c + d <= 1",
         EntryKind::Inclusion, {}, {}, true, "claimed strict; checked as non-strict"});
    add({"T12", "T12", "Power of a bounded sum", "Thm 12 / Eq. (24)",
         "(A[+]B)^{p} / {2^p} <= A^{p} | B^{p} equality_iff a = b and {p} = 0", EntryKind::Inclusion,
         exponent_p(1, false, {0, 0.25, 0.5, 0.75, 0.99}), kSufficiency, false, ""});
    add({"P1", "P1", "Bounded differences do not cancel", "Prop 1 / Eq. (12)",
         "(A[-]B) [+] (B[-]A) == O", EntryKind::Existence, {}, {}, false,
         "existence claim: some (a, b) gives a positive left side"});
    add({"C1a", "C1", "Arithmetic and geometric means, halved", "Cor 1",
         "(A[+]B)/4 >= (A.*B)^0.5 / 2" + c1_given, EntryKind::Inclusion, {}, kIff, false, ""});
    add({"C1b", "C1", "Geometric and harmonic means, chained", "Cor 1",
         "(A.*B)^0.5 / 2 >= (A.*B) [/] (A[+]B)" + c1_given, EntryKind::Inclusion, {}, kIff, false,
         ""});
    return c;
}

std::vector<ScalarLemma> build_lemmas() {
    return {
        {"L1", "Product of truncations", "Lemma 1", {{"alpha", 0, 3, {}}, {"beta", 0, 3, {}}},
         {"min(alpha, 1) * min(beta, 1) <= min(alpha * beta, 1)"}, {}, {}},
        {"L2", "Power of a sum against the maximum", "Lemma 2 / Eqs. (22), (23)",
         {{"alpha", 0, 2, {}}, {"beta", 0, 2, {}}, {"p", 0, 2, 0.25}},
         {"(alpha + beta)^p <= 2^p * max(alpha^p, beta^p)",
          "2^p * max(alpha^p, beta^p) <= 2^p * (alpha^p + beta^p)"},
         {}, {}},
        {"S1", "Eight-product inequality", "Eq. (1)",
         {{"alpha", 0, 2, {}}, {"beta", 0, 2, {}}, {"gamma", 0, 2, {}}},
         {"(alpha + beta) * (beta + gamma) * (gamma + alpha) >= 8 * alpha * beta * gamma"}, {},
         "alpha = beta and beta = gamma"},
        {"S2", "Two-term rearrangement", "Eq. (8)",
         {{"x1", -1, 1, {}}, {"x2", -1, 1, {}}, {"y1", -1, 1, {}}, {"y2", -1, 1, {}}},
         {"x1 * y1 + x2 * y2 >= x1 * y2 + x2 * y1"}, {"x1 >= x2", "y1 >= y2"},
         "x1 = x2 or y1 = y2"},
        {"S3", "Arithmetic and geometric means", "Eq. (13)", {{"alpha", 0, 2, {}}, {"beta", 0, 2, {}}},
         {"(alpha + beta) / 2 >= sqrt(alpha * beta)"}, {}, "alpha = beta"},
        {"S4", "Geometric and harmonic means", "Eq. (15)", {{"alpha", 0, 2, {}}, {"beta", 0, 2, {}}},
         {"sqrt(alpha * beta) >= 2 * alpha * beta / (alpha + beta)"}, {"alpha > 0", "beta > 0"},
         "alpha = beta"},
        {"S5", "Generalized Bernoulli", "Eq. (18)",
         {{"alpha", 0, 2, {}}, {"beta", 0, 2, {}}, {"m", 1, 8, 1.0}},
         {"(alpha + beta)^m >= alpha^m + m * alpha^(m - 1) * beta"}, {}, {}},
        {"S6", "Chebyshev", "Eq. (20)",
         {{"alpha", -1, 1, {}}, {"beta", -1, 1, {}}, {"gamma", -1, 1, {}}, {"delta", -1, 1, {}}},
         {"(alpha + beta) * (gamma + delta) <= 2 * (alpha * gamma + beta * delta)"},
         {"alpha >= beta", "gamma >= delta"}, {}},
    };
}

void replace_all(std::string& text, std::string_view from, const std::string& to) {
    for (auto pos = text.find(from); pos != std::string::npos; pos = text.find(from, pos + to.size()))
        text.replace(pos, from.size(), to);
}

}  // namespace

const std::vector<TheoremEntry>& list_theorems() {
    static const std::vector<TheoremEntry> catalog = build_catalog();
    return catalog;
}

const TheoremEntry& get_theorem(std::string_view id) {
    for (const auto& e : list_theorems())
        if (e.id == id) return e;
    throw UnknownTheorem(std::string(id));
}

const std::vector<std::string>& catalog_groups() {
    static const std::vector<std::string> groups = {"T1", "T2", "T3",  "T4",  "T5",  "T6",
                                                    "T7", "T8", "T9",  "T10", "T11", "T12",
                                                    "P1", "C1", "L1",  "L2"};
    return groups;
}

std::string instantiate_text(const TheoremEntry& entry, std::optional<double> value) {
    if (!entry.parameter) {
        if (value) throw ParameterOutOfRange(fmt::format("{} takes no parameter", entry.id));
        return entry.dsl;
    }
    const Parameter& param = *entry.parameter;
    const double v = value.value_or(param.sweep.front());
    if (!param.admits(v)) {
        const char close = param.max_inclusive ? ']' : ')';
        throw ParameterOutOfRange(fmt::format("{}: {} = {} outside [{}, {}{}{}", entry.id, param.name,
                                              format_number(v), format_number(param.min),
                                              format_number(param.max), close,
                                              param.integer ? ", integer" : ""));
    }
    std::string text = entry.dsl;
    if (param.name == "m") {
        replace_all(text, "{m-1}", format_number(v - 1));
        replace_all(text, "{m}", format_number(v));
    } else {
        replace_all(text, "{2^p}", format_number(std::pow(2.0, v)));
        replace_all(text, "{p}", format_number(v));
    }
    return text;
}

RelationStatement instantiate(const TheoremEntry& entry, std::optional<double> value) {
    return parse_statement(instantiate_text(entry, value));
}

std::vector<std::optional<double>> parameter_sweep(const TheoremEntry& entry) {
    if (!entry.parameter) return {std::nullopt};
    return {entry.parameter->sweep.begin(), entry.parameter->sweep.end()};
}

const std::vector<ScalarLemma>& scalar_lemmas() {
    static const std::vector<ScalarLemma> lemmas = build_lemmas();
    return lemmas;
}

const ScalarLemma& get_scalar_lemma(std::string_view id) {
    for (const auto& l : scalar_lemmas())
        if (l.id == id) return l;
    throw UnknownTheorem(std::string(id));
}

}  // namespace fuzzyrel
