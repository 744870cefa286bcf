#include "kbonacci/hp_real.hpp"

#include <algorithm>
#include <stdexcept>

namespace kbonacci {

int HPReal::checked_precision(int precision_bits) {
    if (precision_bits < kMinPrecisionBits)
        throw std::invalid_argument("precision_bits must be >= 64");
    return precision_bits;
}

HPReal::HPReal(int precision_bits) {
    mpfr_init2(v_, checked_precision(precision_bits));
    mpfr_set_zero(v_, 1);
}

HPReal::HPReal(long value, int precision_bits) {
    mpfr_init2(v_, checked_precision(precision_bits));
    mpfr_set_si(v_, value, MPFR_RNDN);
}

HPReal::HPReal(double value, int precision_bits) {
    mpfr_init2(v_, checked_precision(precision_bits));
    mpfr_set_d(v_, value, MPFR_RNDN);
}

HPReal::HPReal(const ExactInt& value, int precision_bits) {
    mpfr_init2(v_, checked_precision(precision_bits));
    mpfr_set_z(v_, value.get_mpz_t(), MPFR_RNDN);
}

HPReal::HPReal(const HPReal& other) {
    mpfr_init2(v_, mpfr_get_prec(other.v_));
    mpfr_set(v_, other.v_, MPFR_RNDN);
}

HPReal::HPReal(HPReal&& other) noexcept {
    v_[0] = other.v_[0];
    other.v_[0]._mpfr_d = nullptr;
}

HPReal& HPReal::operator=(const HPReal& other) {
    if (this != &other) {
        mpfr_set_prec(v_, mpfr_get_prec(other.v_));
        mpfr_set(v_, other.v_, MPFR_RNDN);
    }
    return *this;
}

HPReal& HPReal::operator=(HPReal&& other) noexcept {
    if (this != &other) {
        if (v_[0]._mpfr_d != nullptr) mpfr_clear(v_);
        v_[0] = other.v_[0];
        other.v_[0]._mpfr_d = nullptr;
    }
    return *this;
}

HPReal::~HPReal() {
    if (v_[0]._mpfr_d != nullptr) mpfr_clear(v_);
}

HPReal HPReal::pow2(long exponent, int precision_bits) {
    HPReal r(precision_bits);
    mpfr_set_ui_2exp(r.v_, 1u, exponent, MPFR_RNDN);
    return r;
}

HPReal HPReal::pi(int precision_bits) {
    HPReal r(precision_bits);
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
}

namespace {
int min_prec(const HPReal& a, const HPReal& b) {
    return std::min(a.precision_bits(), b.precision_bits());
}
}  // namespace

HPReal HPReal::operator-() const {
    HPReal r(precision_bits());
    mpfr_neg(r.raw(), v_, MPFR_RNDN);
    return r;
}

HPReal HPReal::operator+(const HPReal& rhs) const {
    HPReal r(min_prec(*this, rhs));
    mpfr_add(r.raw(), v_, rhs.v_, MPFR_RNDN);
    return r;
}

HPReal HPReal::operator-(const HPReal& rhs) const {
    HPReal r(min_prec(*this, rhs));
    mpfr_sub(r.raw(), v_, rhs.v_, MPFR_RNDN);
    return r;
}

HPReal HPReal::operator*(const HPReal& rhs) const {
    HPReal r(min_prec(*this, rhs));
    mpfr_mul(r.raw(), v_, rhs.v_, MPFR_RNDN);
    return r;
}

HPReal HPReal::operator/(const HPReal& rhs) const {
    HPReal r(min_prec(*this, rhs));
    mpfr_div(r.raw(), v_, rhs.v_, MPFR_RNDN);
    return r;
}

HPReal& HPReal::operator+=(const HPReal& rhs) {
    if (rhs.precision_bits() < precision_bits()) {
        *this = *this + rhs;
    } else {
        mpfr_add(v_, v_, rhs.v_, MPFR_RNDN);
    }
    return *this;
}

HPReal HPReal::abs() const {
    HPReal r(precision_bits());
    mpfr_abs(r.raw(), v_, MPFR_RNDN);
    return r;
}

HPReal HPReal::rounded_to(int precision_bits) const {
    HPReal r(precision_bits);
    mpfr_set(r.raw(), v_, MPFR_RNDN);
    return r;
}

ExactInt HPReal::nearest_int() const {
    ExactInt z;
    mpfr_get_z(z.get_mpz_t(), v_, MPFR_RNDN);
    return z;
}

double HPReal::to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

std::string HPReal::fixed(int digits) const {
    char* s = nullptr;
    mpfr_asprintf(&s, "%.*Rf", digits, v_);
    std::string out(s);
    mpfr_free_str(s);
    return out;
}

std::string HPReal::sci(int digits) const {
    char* s = nullptr;
    mpfr_asprintf(&s, "%.*Re", digits, v_);
    std::string out(s);
    mpfr_free_str(s);
    return out;
}

bool HPReal::identical_to(const HPReal& other) const {
    if (precision_bits() != other.precision_bits()) return false;
    if (is_nan() || other.is_nan()) return false;
    return mpfr_equal_p(v_, other.v_) != 0;
}

HPReal hypot(const HPReal& x, const HPReal& y) {
    HPReal r(std::min(x.precision_bits(), y.precision_bits()));
    mpfr_hypot(r.raw(), x.raw(), y.raw(), MPFR_RNDN);
    return r;
}

}  // namespace kbonacci
