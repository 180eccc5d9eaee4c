#pragma once

#include <string>

#include <gmpxx.h>
#include <mpfr.h>

namespace cyclemax {

/// Enclosure [lower, upper] of a non-negative real, both ends computed with
/// directed rounding at kPrecision bits (about 77 significant digits).
/// Comparisons against exact integers use the end that keeps them sound.
class Interval {
public:
    static constexpr mpfr_prec_t kPrecision = 256;

    Interval();
    explicit Interval(const mpq_class& exact);
    Interval(const Interval& other);
    Interval(Interval&& other) noexcept;
    Interval& operator=(Interval other) noexcept;
    ~Interval();

    /// base^(p/q) for base >= 0 and q >= 1.
    static Interval power(const mpq_class& base, long p, unsigned long q);

    Interval operator*(const Interval& rhs) const;
    Interval operator*(const mpq_class& rhs) const { return *this * Interval(rhs); }
    Interval operator/(const Interval& rhs) const;

    mpfr_srcptr lower() const { return lo_; }
    mpfr_srcptr upper() const { return hi_; }

    /// True iff every point of the enclosure is >= value.
    bool certainly_at_least(const mpz_class& value) const;
    /// True iff every point of the enclosure is <= value.
    bool certainly_at_most(const mpz_class& value) const;
    /// lower end > value.
    bool certainly_greater(const mpz_class& value) const;
    bool certainly_below(const Interval& other) const;
    bool certainly_above(const Interval& other) const { return other.certainly_below(*this); }

    /// Smallest integer not below the true value, when the enclosure is
    /// narrow enough to decide it.
    mpz_class ceil() const;

    double approx() const;
    /// Upper end rounded up (or lower end rounded down) to `digits`
    /// significant decimal digits.
    std::string upper_string(int digits = 25) const;
    std::string lower_string(int digits = 25) const;

private:
    mpfr_t lo_;
    mpfr_t hi_;
};

/// Exact decimal rendering when the denominator is 2^a 5^b, otherwise "p/q".
std::string format_rational(const mpq_class& q);

} // namespace cyclemax
