#pragma once

#include <mpfr.h>

#include <string>

#include "kbonacci/exact_int.hpp"

namespace kbonacci {

inline constexpr int kMinPrecisionBits = 64;

// Real number at a fixed binary precision (MPFR, round-to-nearest).
// Binary operations between two values produce a result at the minimum of
// the two operand precisions.
class HPReal {
  public:
    explicit HPReal(int precision_bits = kMinPrecisionBits);
    HPReal(long value, int precision_bits);
    HPReal(double value, int precision_bits);
    HPReal(const ExactInt& value, int precision_bits);
    HPReal(const HPReal& other);
    HPReal(HPReal&& other) noexcept;
    HPReal& operator=(const HPReal& other);
    HPReal& operator=(HPReal&& other) noexcept;
    ~HPReal();

    // 2^exponent, exact at any precision.
    static HPReal pow2(long exponent, int precision_bits = kMinPrecisionBits);
    static HPReal pi(int precision_bits);

    int precision_bits() const { return static_cast<int>(mpfr_get_prec(v_)); }
    mpfr_srcptr raw() const { return v_; }
    mpfr_ptr raw() { return v_; }

    HPReal operator-() const;
    HPReal operator+(const HPReal& rhs) const;
    HPReal operator-(const HPReal& rhs) const;
    HPReal operator*(const HPReal& rhs) const;
    HPReal operator/(const HPReal& rhs) const;
    HPReal& operator+=(const HPReal& rhs);

    HPReal abs() const;
    // Value rounded (to nearest) into a new precision. Exact when widening.
    HPReal rounded_to(int precision_bits) const;

    ExactInt nearest_int() const;
    double to_double() const;
    std::string fixed(int digits) const;
    std::string sci(int digits) const;

    int sign() const { return mpfr_sgn(v_); }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    bool is_nan() const { return mpfr_nan_p(v_) != 0; }
    // Same precision and same value; the deterministic-run comparison.
    bool identical_to(const HPReal& other) const;

    friend bool operator<(const HPReal& a, const HPReal& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
    friend bool operator>(const HPReal& a, const HPReal& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
    friend bool operator<=(const HPReal& a, const HPReal& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
    friend bool operator>=(const HPReal& a, const HPReal& b) { return mpfr_greaterequal_p(a.v_, b.v_) != 0; }
    friend bool operator==(const HPReal& a, const HPReal& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }

    friend bool operator<(const HPReal& a, double b) { return mpfr_cmp_d(a.v_, b) < 0; }
    friend bool operator>(const HPReal& a, double b) { return mpfr_cmp_d(a.v_, b) > 0; }
    friend bool operator<=(const HPReal& a, double b) { return mpfr_cmp_d(a.v_, b) <= 0; }
    friend bool operator>=(const HPReal& a, double b) { return mpfr_cmp_d(a.v_, b) >= 0; }

  private:
    static int checked_precision(int precision_bits);

    mpfr_t v_;
};

HPReal hypot(const HPReal& x, const HPReal& y);

}  // namespace kbonacci
