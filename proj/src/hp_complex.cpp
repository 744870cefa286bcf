#include "kbonacci/hp_complex.hpp"

#include <algorithm>
#include <utility>

namespace kbonacci {

HPComplex::HPComplex(HPReal re, HPReal im) : re_(std::move(re)), im_(std::move(im)) {
    const int p = std::min(re_.precision_bits(), im_.precision_bits());
    if (re_.precision_bits() != p) re_ = re_.rounded_to(p);
    if (im_.precision_bits() != p) im_ = im_.rounded_to(p);
}

HPComplex HPComplex::operator-() const { return {-re_, -im_}; }

HPComplex HPComplex::operator+(const HPComplex& rhs) const {
    return {re_ + rhs.re_, im_ + rhs.im_};
}

HPComplex HPComplex::operator-(const HPComplex& rhs) const {
    return {re_ - rhs.re_, im_ - rhs.im_};
}

HPComplex HPComplex::operator*(const HPComplex& rhs) const {
    return {re_ * rhs.re_ - im_ * rhs.im_, re_ * rhs.im_ + im_ * rhs.re_};
}

HPComplex HPComplex::operator/(const HPComplex& rhs) const {
    HPReal den = rhs.re_ * rhs.re_ + rhs.im_ * rhs.im_;
    return {(re_ * rhs.re_ + im_ * rhs.im_) / den,
            (im_ * rhs.re_ - re_ * rhs.im_) / den};
}

HPComplex HPComplex::conj() const { return {re_, -im_}; }

HPComplex HPComplex::inverse() const {
    HPReal den = re_ * re_ + im_ * im_;
    return {re_ / den, -(im_ / den)};
}

HPComplex HPComplex::pow(long n) const {
    if (n < 0) return inverse().pow(-n);
    HPComplex result(1L, precision_bits());
    HPComplex base = *this;
    unsigned long e = static_cast<unsigned long>(n);
    while (e > 0) {
        if (e & 1u) result = result * base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return result;
}

HPReal HPComplex::dist_to_nearest_int() const {
    HPReal nearest(re_.nearest_int(), precision_bits());
    return hypot(re_ - nearest, im_);
}

}  // namespace kbonacci
