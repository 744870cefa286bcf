#pragma once

#include "kbonacci/hp_real.hpp"

namespace kbonacci {

// Complex number at a fixed binary precision. Both components share one
// precision; binary operations between two values land at the minimum of
// the two operand precisions.
class HPComplex {
  public:
    explicit HPComplex(int precision_bits = kMinPrecisionBits)
        : re_(precision_bits), im_(precision_bits) {}
    HPComplex(HPReal re, HPReal im);
    HPComplex(long re, int precision_bits)
        : re_(re, precision_bits), im_(precision_bits) {}
    HPComplex(const ExactInt& re, int precision_bits)
        : re_(re, precision_bits), im_(precision_bits) {}

    const HPReal& real() const { return re_; }
    const HPReal& imag() const { return im_; }
    int precision_bits() const { return re_.precision_bits(); }

    HPComplex operator-() const;
    HPComplex operator+(const HPComplex& rhs) const;
    HPComplex operator-(const HPComplex& rhs) const;
    HPComplex operator*(const HPComplex& rhs) const;
    HPComplex operator/(const HPComplex& rhs) const;

    HPComplex conj() const;
    HPComplex inverse() const;
    HPReal abs() const { return hypot(re_, im_); }

    // Integer power by binary exponentiation; negative exponents go through
    // the inverse.
    HPComplex pow(long n) const;

    // Nearest integer to the real part, and the complex-plane distance to it.
    ExactInt nearest_int() const { return re_.nearest_int(); }
    HPReal dist_to_nearest_int() const;

    bool identical_to(const HPComplex& other) const {
        return re_.identical_to(other.re_) && im_.identical_to(other.im_);
    }

  private:
    HPReal re_, im_;
};

}  // namespace kbonacci
