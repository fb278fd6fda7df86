#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace fuzzyrel {

// A degree of membership: a finite double in the closed unit interval.
class MembershipDegree {
public:
    explicit MembershipDegree(double value);
    double value() const noexcept { return value_; }
    friend bool operator==(MembershipDegree, MembershipDegree) = default;

private:
    double value_;
};

bool is_valid_degree(double value) noexcept;

// Finite ordered universe of distinct element labels.
class Universe {
public:
    Universe() = default;
    explicit Universe(std::vector<std::string> elements);

    std::size_t size() const noexcept { return elements_.size(); }
    bool empty() const noexcept { return elements_.empty(); }
    const std::vector<std::string>& elements() const noexcept { return elements_; }
    const std::string& operator[](std::size_t i) const { return elements_[i]; }
    std::optional<std::size_t> index_of(std::string_view label) const;

    friend bool operator==(const Universe&, const Universe&) = default;

private:
    std::vector<std::string> elements_;
};

// Comparison slack for inclusion and equality. Epsilon lies in (0, 1e-3);
// exact() gives epsilon 0 for comparisons that must be bit-exact.
class Tolerance {
public:
    static constexpr double kDefault = 1e-9;

    Tolerance() = default;
    explicit Tolerance(double epsilon);
    static Tolerance exact() noexcept;

    double epsilon() const noexcept { return epsilon_; }

private:
    struct ExactTag {};
    explicit constexpr Tolerance(ExactTag) noexcept : epsilon_(0.0) {}
    double epsilon_ = kDefault;
};

class FuzzySet {
public:
    const Universe& universe() const noexcept { return universe_; }
    std::size_t size() const noexcept { return degrees_.size(); }
    std::span<const double> degrees() const noexcept { return degrees_; }
    double degree_at(std::size_t index) const { return degrees_.at(index); }
    double degree_at(std::string_view label) const;

    // Builds a set from degrees already known to lie in [0, 1]; used by the
    // operation layer after clamping. Arity is still checked.
    static FuzzySet from_valid(Universe universe, std::vector<double> degrees);

    friend FuzzySet make_fuzzy_set(Universe universe, std::vector<double> degrees);

private:
    FuzzySet(Universe universe, std::vector<double> degrees)
        : universe_(std::move(universe)), degrees_(std::move(degrees)) {}

    Universe universe_;
    std::vector<double> degrees_;
};

// Throws LengthMismatch or DegreeOutOfRange.
FuzzySet make_fuzzy_set(Universe universe, std::vector<double> degrees);
FuzzySet universal_set(const Universe& universe);
FuzzySet empty_set(const Universe& universe);

// A ⊆ B: every degree of A is at most the matching degree of B plus epsilon.
bool is_included_in(const FuzzySet& a, const FuzzySet& b, Tolerance tol = {});
bool equals(const FuzzySet& a, const FuzzySet& b, Tolerance tol = {});

// Throws UniverseMismatch unless both sets share a universe.
void require_same_universe(const FuzzySet& a, const FuzzySet& b);

}  // namespace fuzzyrel
