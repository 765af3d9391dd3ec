#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace discocat {

/// Closed integer interval [lo, hi].
struct IntWindow {
    std::int64_t lo = 0;
    std::int64_t hi = 0;
};

/// Default bracketing radius for the dual searches.
inline constexpr std::int64_t kDefaultSearchRadius = std::int64_t{1} << 40;

/// A monotone, unbounded map Z -> Z given as a function object. Such maps
/// form a pregroup under composition; its duals are computed by search.
class MonotoneMap {
public:
    using Fn = std::function<std::int64_t(std::int64_t)>;

    MonotoneMap(std::string name, Fn eval, IntWindow probe_window = {-1000, 1000},
                std::int64_t search_radius = kDefaultSearchRadius)
        : name_(std::move(name)), eval_(std::move(eval)), probe_(probe_window),
          radius_(search_radius) {}

    std::int64_t operator()(std::int64_t n) const { return eval_(n); }

    const std::string& name() const noexcept { return name_; }
    IntWindow probe_window() const noexcept { return probe_; }
    std::int64_t search_radius() const noexcept { return radius_; }

    /// Spot check: non-decreasing across the probe window.
    bool is_monotone_on_probes() const;

    /// Spot check: for the probe window's endpoint values as bounds, some
    /// argument within the search radius goes below the low one and above
    /// the high one.
    bool is_unbounded_on_probes() const;

private:
    std::string name_;
    Fn eval_;
    IntWindow probe_;
    std::int64_t radius_;
};

/// min{ m : n <= f(m) }. Throws SearchRadiusExceeded if no bracket exists
/// within the map's search radius.
std::int64_t monotone_left_dual(const MonotoneMap& f, std::int64_t n);

/// max{ m : f(m) <= n }.
std::int64_t monotone_right_dual(const MonotoneMap& f, std::int64_t n);

/// Checks both adjunctions exhaustively on the window:
///   f^l(n) <= m  <=>  n <= f(m)
///   f(n) <= m    <=>  n <= f^r(m)
bool galois_check(const MonotoneMap& f, IntWindow window);

/// Maps of the form m |-> floor(a m / c) + b with a in [1, 5], c in [1, 4],
/// b in [-10, 10], drawn from a seeded generator.
std::vector<MonotoneMap> sample_monotone_maps(std::uint64_t seed, std::size_t count);

} // namespace discocat
