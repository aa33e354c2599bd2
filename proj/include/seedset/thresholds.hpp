#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "seedset/graph.hpp"

namespace seedset {

using Threshold = std::uint32_t;

/// Per-node non-negative integer thresholds t(v).
class ThresholdAssignment {
public:
    ThresholdAssignment() = default;
    explicit ThresholdAssignment(std::vector<Threshold> values) : values_(std::move(values)) {}

    std::size_t size() const noexcept { return values_.size(); }
    Threshold operator[](NodeId v) const noexcept { return values_[v]; }
    std::span<const Threshold> values() const noexcept { return values_; }

    friend bool operator==(const ThresholdAssignment&, const ThresholdAssignment&) = default;

private:
    std::vector<Threshold> values_;
};

/// Exact fraction num/den used for proportional thresholds, so that
/// ceil(alpha * d) never suffers from binary rounding (0.3 * 10 is 3, not 4).
struct Ratio {
    std::uint64_t num = 0;
    std::uint64_t den = 1;

    /// Parses a decimal such as "0.5" or ".25" exactly.
    static Ratio parse(const std::string& text);
    /// Nearest fraction with denominator 10^9, reduced.
    static Ratio from_double(double x);
    double value() const noexcept { return static_cast<double>(num) / static_cast<double>(den); }
};

/// t(v) uniform in [1, d_in(v)], or 1 when d_in(v) = 0.
ThresholdAssignment random_thresholds(const Digraph& g, std::uint64_t seed);
/// t(v) = min(t_const, d_in(v)).
ThresholdAssignment constant_thresholds(const Digraph& g, Threshold t_const);
/// t(v) = ceil(alpha * d_in(v)), 0 < alpha < 1.
ThresholdAssignment proportional_thresholds(const Digraph& g, Ratio alpha);
ThresholdAssignment proportional_thresholds(const Digraph& g, double alpha);
/// Verbatim values; rejects negatives and a length that differs from `n`.
ThresholdAssignment explicit_thresholds(std::span<const std::int64_t> values, std::size_t n);
/// One integer per line, '#' comments allowed.
ThresholdAssignment read_thresholds(std::istream& in, std::size_t n);

/// Command-line spelling of a threshold family:
///   random[:<seed>] | const:<t> | prop:<alpha> | majority | file:<path>
struct ThresholdScheme {
    enum class Kind { random, constant, proportional, file };

    Kind kind = Kind::random;
    std::uint64_t seed = 0;
    bool has_seed = false;
    Threshold constant = 0;
    Ratio alpha;
    std::string alpha_text;
    std::string path;

    static ThresholdScheme parse(const std::string& text);

    /// Stable name used in CSV output: "random", "const:3", "prop:0.5", "file:<path>".
    std::string name() const;

    /// `fallback_seed` is used for random schemes written without a seed.
    ThresholdAssignment assign(const Digraph& g, std::uint64_t fallback_seed = 0) const;
};

/// The 19 families of the benchmark: random, const:2..10, prop:0.1..0.9.
std::vector<ThresholdScheme> standard_schemes();

}  // namespace seedset
