#include "fuzzyrel/core.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

#include "fuzzyrel/error.hpp"

namespace fuzzyrel {

bool is_valid_degree(double value) noexcept {
    return std::isfinite(value) && value >= 0.0 && value <= 1.0;
}

MembershipDegree::MembershipDegree(double value) : value_(value) {
    if (!is_valid_degree(value)) throw DegreeOutOfRange(0, value);
}

Universe::Universe(std::vector<std::string> elements) : elements_(std::move(elements)) {
    std::unordered_set<std::string_view> seen;
    for (const auto& label : elements_) {
        if (!seen.insert(label).second)
            throw InvalidArgument("duplicate universe element '" + label + "'");
    }
}

std::optional<std::size_t> Universe::index_of(std::string_view label) const {
    auto it = std::find(elements_.begin(), elements_.end(), label);
    if (it == elements_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - elements_.begin());
}

Tolerance::Tolerance(double epsilon) : epsilon_(epsilon) {
    if (!(epsilon > 0.0 && epsilon < 1e-3))
        throw InvalidArgument("tolerance must lie in (0, 1e-3)");
}

Tolerance Tolerance::exact() noexcept { return Tolerance(ExactTag{}); }

double FuzzySet::degree_at(std::string_view label) const {
    auto index = universe_.index_of(label);
    if (!index) throw InvalidArgument("element '" + std::string(label) + "' not in universe");
    return degrees_[*index];
}

FuzzySet FuzzySet::from_valid(Universe universe, std::vector<double> degrees) {
    if (degrees.size() != universe.size()) throw LengthMismatch(universe.size(), degrees.size());
    return FuzzySet(std::move(universe), std::move(degrees));
}

FuzzySet make_fuzzy_set(Universe universe, std::vector<double> degrees) {
    if (degrees.size() != universe.size()) throw LengthMismatch(universe.size(), degrees.size());
    for (std::size_t i = 0; i < degrees.size(); ++i) {
        if (!is_valid_degree(degrees[i])) throw DegreeOutOfRange(i, degrees[i]);
    }
    return FuzzySet(std::move(universe), std::move(degrees));
}

FuzzySet universal_set(const Universe& universe) {
    return FuzzySet::from_valid(universe, std::vector<double>(universe.size(), 1.0));
}

FuzzySet empty_set(const Universe& universe) {
    return FuzzySet::from_valid(universe, std::vector<double>(universe.size(), 0.0));
}

void require_same_universe(const FuzzySet& a, const FuzzySet& b) {
    if (!(a.universe() == b.universe())) throw UniverseMismatch();
}

bool is_included_in(const FuzzySet& a, const FuzzySet& b, Tolerance tol) {
    require_same_universe(a, b);
    auto da = a.degrees();
    auto db = b.degrees();
    for (std::size_t i = 0; i < da.size(); ++i) {
        if (da[i] > db[i] + tol.epsilon()) return false;
    }
    return true;
}

bool equals(const FuzzySet& a, const FuzzySet& b, Tolerance tol) {
    require_same_universe(a, b);
    auto da = a.degrees();
    auto db = b.degrees();
    for (std::size_t i = 0; i < da.size(); ++i) {
        if (std::fabs(da[i] - db[i]) > tol.epsilon()) return false;
    }
    return true;
}

}  // namespace fuzzyrel
