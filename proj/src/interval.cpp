#include "cyclemax/interval.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <utility>

#include "cyclemax/errors.hpp"

namespace cyclemax {

Interval::Interval() {
    mpfr_init2(lo_, kPrecision);
    mpfr_init2(hi_, kPrecision);
    mpfr_set_zero(lo_, 1);
    mpfr_set_zero(hi_, 1);
}

Interval::Interval(const mpq_class& exact) : Interval() {
    if (sgn(exact) < 0)
        throw DomainError("intervals hold non-negative values only");
    mpfr_set_q(lo_, exact.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(hi_, exact.get_mpq_t(), MPFR_RNDU);
}

Interval::Interval(const Interval& other) : Interval() {
    mpfr_set(lo_, other.lo_, MPFR_RNDD);
    mpfr_set(hi_, other.hi_, MPFR_RNDU);
}

Interval::Interval(Interval&& other) noexcept : Interval() {
    mpfr_swap(lo_, other.lo_);
    mpfr_swap(hi_, other.hi_);
}

Interval& Interval::operator=(Interval other) noexcept {
    mpfr_swap(lo_, other.lo_);
    mpfr_swap(hi_, other.hi_);
    return *this;
}

Interval::~Interval() {
    mpfr_clear(lo_);
    mpfr_clear(hi_);
}

Interval Interval::power(const mpq_class& base, long p, unsigned long q) {
    if (q == 0)
        throw DomainError("root index must be positive");
    if (sgn(base) < 0)
        throw DomainError("power of a negative base");
    if (sgn(base) == 0)
        return Interval(mpq_class(p == 0 ? 1 : 0));

    mpq_class raised = 1;
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(std::labs(p)));
    mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(std::labs(p)));
    raised = p >= 0 ? mpq_class(num, den) : mpq_class(den, num);
    raised.canonicalize();

    Interval out(raised);
    if (q > 1) {
        // x -> x^(1/q) is increasing, so rounding both steps the same way
        // keeps each end on its side of the true value.
        mpfr_rootn_ui(out.lo_, out.lo_, q, MPFR_RNDD);
        mpfr_rootn_ui(out.hi_, out.hi_, q, MPFR_RNDU);
    }
    return out;
}

Interval Interval::operator*(const Interval& rhs) const {
    Interval out;
    mpfr_mul(out.lo_, lo_, rhs.lo_, MPFR_RNDD);
    mpfr_mul(out.hi_, hi_, rhs.hi_, MPFR_RNDU);
    return out;
}

Interval Interval::operator/(const Interval& rhs) const {
    if (mpfr_sgn(rhs.lo_) <= 0)
        throw DomainError("division by an interval that may contain zero");
    Interval out;
    mpfr_div(out.lo_, lo_, rhs.hi_, MPFR_RNDD);
    mpfr_div(out.hi_, hi_, rhs.lo_, MPFR_RNDU);
    return out;
}

bool Interval::certainly_at_least(const mpz_class& value) const {
    return mpfr_cmp_z(lo_, value.get_mpz_t()) >= 0;
}

bool Interval::certainly_at_most(const mpz_class& value) const {
    return mpfr_cmp_z(hi_, value.get_mpz_t()) <= 0;
}

bool Interval::certainly_greater(const mpz_class& value) const {
    return mpfr_cmp_z(lo_, value.get_mpz_t()) > 0;
}

bool Interval::certainly_below(const Interval& other) const {
    return mpfr_less_p(hi_, other.lo_) != 0;
}

mpz_class Interval::ceil() const {
    mpz_class a, b;
    mpfr_get_z(a.get_mpz_t(), lo_, MPFR_RNDU);
    mpfr_get_z(b.get_mpz_t(), hi_, MPFR_RNDU);
    if (a != b)
        throw std::runtime_error("interval too wide to determine its ceiling");
    return a;
}

double Interval::approx() const {
    return mpfr_get_d(hi_, MPFR_RNDN);
}

namespace {

std::string render(mpfr_srcptr x, int digits, const char* format) {
    char* buffer = nullptr;
    std::string fmt = std::string("%.") + std::to_string(digits) + format;
    if (mpfr_asprintf(&buffer, fmt.c_str(), x) < 0)
        throw std::runtime_error("mpfr formatting failed");
    std::string out(buffer);
    mpfr_free_str(buffer);
    return out;
}

} // namespace

std::string Interval::upper_string(int digits) const {
    return render(hi_, digits, "RUg");
}

std::string Interval::lower_string(int digits) const {
    return render(lo_, digits, "RDg");
}

std::string format_rational(const mpq_class& value) {
    mpq_class q = value;
    q.canonicalize();
    mpz_class den = q.get_den();
    int twos = 0, fives = 0;
    while (den % 2 == 0) {
        den /= 2;
        ++twos;
    }
    while (den % 5 == 0) {
        den /= 5;
        ++fives;
    }
    if (den != 1)
        return q.get_str();
    const int places = std::max(twos, fives);
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(places));
    mpz_class scaled = q.get_num() * scale / q.get_den();
    const bool negative = scaled < 0;
    if (negative)
        scaled = -scaled;
    std::string digits = scaled.get_str();
    if (places > 0) {
        if (static_cast<int>(digits.size()) <= places)
            digits.insert(0, static_cast<std::size_t>(places) + 1 - digits.size(), '0');
        digits.insert(digits.size() - static_cast<std::size_t>(places), ".");
    }
    return negative ? "-" + digits : digits;
}

} // namespace cyclemax
