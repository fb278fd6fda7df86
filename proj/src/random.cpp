#include "fuzzyrel/random.hpp"

#include <limits>

namespace fuzzyrel {

std::uint64_t Rng::below(std::uint64_t n) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % n;
    std::uint64_t x;
    do {
        x = engine_();
    } while (x >= limit);
    return x % n;
}

namespace {

double random_scalar(Rng& rng, const ExprGenOptions& options) {
    switch (rng.below(4)) {
        case 0: return static_cast<double>(rng.below(21)) / 20.0;
        case 1:
            if (options.allow_natural_multiples) return static_cast<double>(1 + rng.below(4));
            return 1.0;
        default: return rng.unit_closed();
    }
}

double random_exponent(Rng& rng) {
    switch (rng.below(3)) {
        case 0: return static_cast<double>(rng.below(5));
        case 1: return static_cast<double>(rng.below(13)) / 4.0;
        default: return 3.0 * rng.uniform();
    }
}

Expr leaf(Rng& rng, const ExprGenOptions& options) {
    const auto pick = rng.below(options.variables.size() + 2);
    if (pick == options.variables.size()) return Expr::universal();
    if (pick == options.variables.size() + 1) return Expr::empty();
    return Expr::var(options.variables[pick]);
}

Expr generate(Rng& rng, const ExprGenOptions& options, int depth) {
    if (depth <= 0 || rng.below(4) == 0) return leaf(rng, options);
    const auto kind = rng.below(6);
    if (kind < 4) {
        BinaryOp op;
        do {
            op = kAllBinaryOps[rng.below(std::size(kAllBinaryOps))];
        } while (!options.allow_quotient && op == BinaryOp::BoundedQuotient);
        Expr left = generate(rng, options, depth - 1);
        Expr right = generate(rng, options, depth - 1);
        return Expr::binary(op, std::move(left), std::move(right));
    }
    if (kind == 4) {
        const double kappa = random_scalar(rng, options);
        return Expr::scale(kappa, generate(rng, options, depth - 1));
    }
    Expr base = generate(rng, options, depth - 1);
    return Expr::power(std::move(base), random_exponent(rng));
}

}  // namespace

Expr random_expr(Rng& rng, const ExprGenOptions& options) {
    return generate(rng, options, options.max_depth);
}

}  // namespace fuzzyrel
