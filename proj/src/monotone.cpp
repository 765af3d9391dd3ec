#include "discocat/monotone.hpp"

#include "discocat/error.hpp"

#include <random>
#include <vector>

namespace discocat {

bool MonotoneMap::is_monotone_on_probes() const {
    for (std::int64_t n = probe_.lo; n < probe_.hi; ++n)
        if (eval_(n) > eval_(n + 1))
            return false;
    return true;
}

bool MonotoneMap::is_unbounded_on_probes() const {
    const std::int64_t low = eval_(probe_.lo);
    const std::int64_t high = eval_(probe_.hi);
    bool below = false;
    bool above = false;
    for (std::int64_t step = 1; step <= radius_ && !(below && above); step *= 2) {
        below = below || eval_(-step) < low;
        above = above || eval_(step) > high;
    }
    return below && above;
}

namespace {

// Finds lo < hi with pred(lo) false and pred(hi) true, where pred is
// monotone (false ... false true ... true), then narrows to the boundary.
// Returns the smallest m with pred(m) true.
template <typename Pred>
std::int64_t first_true(const MonotoneMap& f, std::int64_t n, Pred pred, const char* what) {
    const std::int64_t radius = f.search_radius();
    std::int64_t lo = 0;
    std::int64_t hi = 0;
    if (pred(0)) {
        std::int64_t step = 1;
        for (;;) {
            if (step > radius)
                throw SearchRadiusExceeded(std::string(what) + " of '" + f.name() + "' at " +
                                           std::to_string(n) + ": no bracket within radius");
            if (!pred(-step)) {
                lo = -step;
                hi = step == 1 ? 0 : -step / 2;
                break;
            }
            step *= 2;
        }
    } else {
        std::int64_t step = 1;
        for (;;) {
            if (step > radius)
                throw SearchRadiusExceeded(std::string(what) + " of '" + f.name() + "' at " +
                                           std::to_string(n) + ": no bracket within radius");
            if (pred(step)) {
                hi = step;
                lo = step == 1 ? 0 : step / 2;
                break;
            }
            step *= 2;
        }
    }
    while (hi - lo > 1) {
        const std::int64_t mid = lo + (hi - lo) / 2;
        (pred(mid) ? hi : lo) = mid;
    }
    return hi;
}

} // namespace

std::int64_t monotone_left_dual(const MonotoneMap& f, std::int64_t n) {
    return first_true(f, n, [&](std::int64_t m) { return n <= f(m); }, "left dual");
}

std::int64_t monotone_right_dual(const MonotoneMap& f, std::int64_t n) {
    // max{m : f(m) <= n} is one below the first m with f(m) > n.
    return first_true(f, n, [&](std::int64_t m) { return f(m) > n; }, "right dual") - 1;
}

bool galois_check(const MonotoneMap& f, IntWindow window) {
    std::vector<std::int64_t> left;
    std::vector<std::int64_t> right;
    std::vector<std::int64_t> image;
    for (std::int64_t n = window.lo; n <= window.hi; ++n) {
        left.push_back(monotone_left_dual(f, n));
        right.push_back(monotone_right_dual(f, n));
        image.push_back(f(n));
    }
    const auto at = [&](const std::vector<std::int64_t>& v, std::int64_t n) {
        return v[static_cast<std::size_t>(n - window.lo)];
    };
    for (std::int64_t n = window.lo; n <= window.hi; ++n)
        for (std::int64_t m = window.lo; m <= window.hi; ++m) {
            if ((at(left, n) <= m) != (n <= at(image, m)))
                return false;
            if ((at(image, n) <= m) != (n <= at(right, m)))
                return false;
        }
    return true;
}

std::vector<MonotoneMap> sample_monotone_maps(std::uint64_t seed, std::size_t count) {
    std::mt19937_64 rng(seed);
    std::vector<MonotoneMap> out;
    for (std::size_t i = 0; i < count; ++i) {
        const std::int64_t a = static_cast<std::int64_t>(rng() % 5) + 1;
        const std::int64_t c = static_cast<std::int64_t>(rng() % 4) + 1;
        const std::int64_t b = static_cast<std::int64_t>(rng() % 21) - 10;
        const auto floor_div = [](std::int64_t x, std::int64_t y) {
            const std::int64_t q = x / y;
            return (x % y != 0 && x < 0) ? q - 1 : q;
        };
        out.emplace_back("floor(" + std::to_string(a) + "m/" + std::to_string(c) + ")" +
                             (b < 0 ? "" : "+") + std::to_string(b),
                         [=](std::int64_t m) { return floor_div(a * m, c) + b; });
    }
    return out;
}

} // namespace discocat
