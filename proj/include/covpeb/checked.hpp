#pragma once

#include <cstdint>
#include <string>

#include "covpeb/error.hpp"

namespace covpeb {

inline std::uint64_t checked_add(std::uint64_t a, std::uint64_t b, const char* what = "sum") {
  std::uint64_t out;
  if (__builtin_add_overflow(a, b, &out)) {
    throw Error(ErrorKind::Overflow, std::string(what) + " exceeds 64 bits");
  }
  return out;
}

inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b, const char* what = "product") {
  std::uint64_t out;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw Error(ErrorKind::Overflow, std::string(what) + " exceeds 64 bits");
  }
  return out;
}

inline std::uint64_t checked_pow2(std::uint64_t exponent, const char* what = "2^d") {
  if (exponent >= 64) {
    throw Error(ErrorKind::Overflow,
                std::string(what) + " with d=" + std::to_string(exponent) + " exceeds 64 bits");
  }
  return std::uint64_t{1} << exponent;
}

}  // namespace covpeb
