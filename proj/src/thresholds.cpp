#include "seedset/thresholds.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <limits>
#include <numeric>
#include <random>
#include <stdexcept>

#include "seedset/error.hpp"

namespace seedset {

namespace {

template <typename T>
T parse_integer(const std::string& text, const char* what) {
    T value{};
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty())
        throw ParseError(std::string("invalid ") + what + ": '" + text + "'");
    return value;
}

Ratio reduced(std::uint64_t num, std::uint64_t den) {
    const std::uint64_t g = std::gcd(num, den);
    return g ? Ratio{num / g, den / g} : Ratio{0, 1};
}

}  // namespace

Ratio Ratio::parse(const std::string& text) {
    if (auto slash = text.find('/'); slash != std::string::npos) {
        auto num = parse_integer<std::uint64_t>(text.substr(0, slash), "fraction");
        auto den = parse_integer<std::uint64_t>(text.substr(slash + 1), "fraction");
        if (den == 0) throw ParseError("zero denominator in '" + text + "'");
        return reduced(num, den);
    }
    const auto dot = text.find('.');
    std::string whole = text.substr(0, dot);
    std::string frac = dot == std::string::npos ? "" : text.substr(dot + 1);
    if (whole.empty() && frac.empty()) throw ParseError("invalid decimal: '" + text + "'");
    if (frac.size() > 18) throw ParseError("too many decimal digits: '" + text + "'");
    std::uint64_t den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
    const std::uint64_t w = whole.empty() ? 0 : parse_integer<std::uint64_t>(whole, "decimal");
    const std::uint64_t f = frac.empty() ? 0 : parse_integer<std::uint64_t>(frac, "decimal");
    if (w > (std::numeric_limits<std::uint64_t>::max() - f) / den) throw ParseError("decimal out of range");
    return reduced(w * den + f, den);
}

Ratio Ratio::from_double(double x) {
    if (!(x >= 0.0) || x > 1e9) throw std::invalid_argument("ratio out of range");
    constexpr std::uint64_t den = 1'000'000'000;
    return reduced(static_cast<std::uint64_t>(std::llround(x * static_cast<double>(den))), den);
}

ThresholdAssignment random_thresholds(const Digraph& g, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<Threshold> t(g.num_nodes());
    for (NodeId v = 0; v < g.num_nodes(); ++v) {
        const auto d = static_cast<Threshold>(g.in_degree(v));
        if (d == 0) {
            t[v] = 1;
        } else {
            std::uniform_int_distribution<Threshold> pick(1, d);
            t[v] = pick(rng);
        }
    }
    return ThresholdAssignment(std::move(t));
}

ThresholdAssignment constant_thresholds(const Digraph& g, Threshold t_const) {
    if (t_const < 1) throw std::invalid_argument("constant threshold must be >= 1");
    std::vector<Threshold> t(g.num_nodes());
    for (NodeId v = 0; v < g.num_nodes(); ++v) t[v] = std::min<Threshold>(t_const, static_cast<Threshold>(g.in_degree(v)));
    return ThresholdAssignment(std::move(t));
}

ThresholdAssignment proportional_thresholds(const Digraph& g, Ratio alpha) {
    if (alpha.num == 0 || alpha.num >= alpha.den) throw std::invalid_argument("alpha must lie strictly between 0 and 1");
    std::vector<Threshold> t(g.num_nodes());
    for (NodeId v = 0; v < g.num_nodes(); ++v) {
        const auto d = static_cast<unsigned __int128>(g.in_degree(v));
        t[v] = static_cast<Threshold>((alpha.num * d + alpha.den - 1) / alpha.den);
    }
    return ThresholdAssignment(std::move(t));
}

ThresholdAssignment proportional_thresholds(const Digraph& g, double alpha) {
    return proportional_thresholds(g, Ratio::from_double(alpha));
}

ThresholdAssignment explicit_thresholds(std::span<const std::int64_t> values, std::size_t n) {
    if (values.size() != n)
        throw std::invalid_argument("expected " + std::to_string(n) + " thresholds, got " + std::to_string(values.size()));
    std::vector<Threshold> t;
    t.reserve(n);
    for (std::int64_t x : values) {
        if (x < 0) throw std::invalid_argument("negative threshold " + std::to_string(x));
        if (x > std::numeric_limits<Threshold>::max()) throw std::invalid_argument("threshold too large");
        t.push_back(static_cast<Threshold>(x));
    }
    return ThresholdAssignment(std::move(t));
}

ThresholdAssignment read_thresholds(std::istream& in, std::size_t n) {
    std::vector<std::int64_t> values;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto b = line.find_first_not_of(" \t\r");
        if (b == std::string::npos || line[b] == '#') continue;
        const auto e = line.find_last_not_of(" \t\r");
        const std::string token = line.substr(b, e - b + 1);
        try {
            values.push_back(parse_integer<std::int64_t>(token, "threshold"));
        } catch (const ParseError& err) {
            throw ParseError(err.what(), lineno);
        }
    }
    return explicit_thresholds(values, n);
}

// ---------------------------------------------------------------------------

ThresholdScheme ThresholdScheme::parse(const std::string& text) {
    ThresholdScheme s;
    const auto colon = text.find(':');
    const std::string head = text.substr(0, colon);
    const std::string arg = colon == std::string::npos ? "" : text.substr(colon + 1);
    const bool has_arg = colon != std::string::npos;

    if (head == "random") {
        s.kind = Kind::random;
        if (has_arg) {
            s.seed = parse_integer<std::uint64_t>(arg, "seed");
            s.has_seed = true;
        }
    } else if (head == "const" && has_arg) {
        s.kind = Kind::constant;
        s.constant = parse_integer<Threshold>(arg, "constant threshold");
        if (s.constant < 1) throw ParseError("constant threshold must be >= 1");
    } else if ((head == "prop" && has_arg) || (head == "majority" && !has_arg)) {
        s.kind = Kind::proportional;
        s.alpha_text = has_arg ? arg : "0.5";
        s.alpha = Ratio::parse(s.alpha_text);
        if (s.alpha.num == 0 || s.alpha.num >= s.alpha.den) throw ParseError("alpha must lie strictly between 0 and 1");
    } else if (head == "file" && has_arg && !arg.empty()) {
        s.kind = Kind::file;
        s.path = arg;
    } else {
        throw ParseError("unknown threshold scheme '" + text + "'");
    }
    return s;
}

std::string ThresholdScheme::name() const {
    switch (kind) {
        case Kind::random: return "random";
        case Kind::constant: return "const:" + std::to_string(constant);
        case Kind::proportional: return "prop:" + alpha_text;
        case Kind::file: return "file:" + path;
    }
    return {};
}

ThresholdAssignment ThresholdScheme::assign(const Digraph& g, std::uint64_t fallback_seed) const {
    switch (kind) {
        case Kind::random: return random_thresholds(g, has_seed ? seed : fallback_seed);
        case Kind::constant: return constant_thresholds(g, constant);
        case Kind::proportional: return proportional_thresholds(g, alpha);
        case Kind::file: {
            std::ifstream in(path);
            if (!in) throw std::runtime_error("cannot open threshold file " + path);
            return read_thresholds(in, g.num_nodes());
        }
    }
    throw std::logic_error("unreachable");
}

std::vector<ThresholdScheme> standard_schemes() {
    std::vector<ThresholdScheme> schemes{ThresholdScheme::parse("random")};
    for (int t = 2; t <= 10; ++t) schemes.push_back(ThresholdScheme::parse("const:" + std::to_string(t)));
    for (int a = 1; a <= 9; ++a) schemes.push_back(ThresholdScheme::parse("prop:0." + std::to_string(a)));
    return schemes;
}

}  // namespace seedset
