#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>

namespace kbonacci {

// Arbitrary-size signed integer, the carrier of exact sequence values.
// Closed under addition and multiplication; size bounded only by memory.
using ExactInt = mpz_class;

inline std::string to_decimal(const ExactInt& v) { return v.get_str(); }

// Bits needed to represent |v| (1 for v == 0, by mpz convention).
inline std::size_t bit_length(const ExactInt& v) {
    return mpz_sizeinbase(v.get_mpz_t(), 2);
}

}  // namespace kbonacci
