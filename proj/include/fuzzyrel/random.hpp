#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "fuzzyrel/expr.hpp"

namespace fuzzyrel {

// Seeded generator with a platform-independent sequence: std::mt19937_64
// (fully specified by the standard) with hand-written conversions, since the
// standard distributions are implementation-defined.
class Rng {
public:
    static constexpr std::string_view kAlgorithm = "mt19937_64, 53-bit uniform doubles";

    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }
    // Uniform in [0, 1).
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    // Uniform in [0, 1], both endpoints reachable.
    double unit_closed() {
        return static_cast<double>(engine_() >> 11) / static_cast<double>((1ULL << 53) - 1);
    }
    // Uniform integer in [0, n); n > 0.
    std::uint64_t below(std::uint64_t n);

private:
    std::mt19937_64 engine_;
};

struct ExprGenOptions {
    std::vector<std::string> variables = {"A", "B", "C"};
    int max_depth = 4;
    bool allow_natural_multiples = true;
    bool allow_quotient = true;
};

// Random expression of depth <= options.max_depth.
Expr random_expr(Rng& rng, const ExprGenOptions& options);

}  // namespace fuzzyrel
