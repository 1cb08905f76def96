#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>

namespace numrad {

/// Closed interval [lo, hi] used as a certified enclosure of a real scalar.
///
/// Every arithmetic helper rounds outward (one ulp past the naively rounded
/// endpoint), so enclosures stay sound under composition. Construction
/// rejects NaN/Inf endpoints and inverted bounds.
class Interval {
public:
    Interval() = default;

    Interval(double lo, double hi) : lo_(lo), hi_(hi) {
        if (!std::isfinite(lo) || !std::isfinite(hi)) {
            throw std::invalid_argument("Interval: endpoints must be finite");
        }
        if (lo > hi) {
            throw std::invalid_argument("Interval: lo > hi");
        }
    }

    static Interval point(double v) { return Interval(v, v); }

    double lo() const { return lo_; }
    double hi() const { return hi_; }
    double width() const { return hi_ - lo_; }
    double mid() const { return 0.5 * (lo_ + hi_); }

    bool contains(double v) const { return lo_ <= v && v <= hi_; }

    Interval add(const Interval& other) const {
        return Interval(down(lo_ + other.lo_), up(hi_ + other.hi_));
    }

    /// Multiplication by a scalar constant, outward.
    Interval scaled(double c) const {
        if (!std::isfinite(c)) throw std::invalid_argument("Interval::scaled: non-finite factor");
        double a = lo_ * c;
        double b = hi_ * c;
        if (a > b) std::swap(a, b);
        return Interval(down(a), up(b));
    }

    /// Product of two intervals with non-negative lower bounds.
    Interval mul_nonneg(const Interval& other) const {
        if (lo_ < 0.0 || other.lo_ < 0.0) {
            throw std::invalid_argument("Interval::mul_nonneg: negative operand");
        }
        return Interval(down(lo_ * other.lo_), up(hi_ * other.hi_));
    }

    /// [lo^2, hi^2]; requires lo >= 0.
    Interval square_nonneg() const {
        if (lo_ < 0.0) throw std::invalid_argument("Interval::square_nonneg: lo < 0");
        return Interval(down(lo_ * lo_), up(hi_ * hi_));
    }

    /// Square root of a non-negative interval; tiny negative lo from outward
    /// rounding is clamped to zero.
    Interval sqrt_nonneg() const {
        double a = lo_ < 0.0 ? 0.0 : lo_;
        if (hi_ < 0.0) throw std::invalid_argument("Interval::sqrt_nonneg: hi < 0");
        return Interval(std::max(0.0, down(std::sqrt(a))), up(std::sqrt(hi_)));
    }

    bool operator==(const Interval& other) const = default;

private:
    static double down(double x) { return std::nextafter(x, -std::numeric_limits<double>::infinity()); }
    static double up(double x) { return std::nextafter(x, std::numeric_limits<double>::infinity()); }

    double lo_ = 0.0;
    double hi_ = 0.0;
};

}  // namespace numrad
