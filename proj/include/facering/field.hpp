#ifndef FACERING_FIELD_HPP
#define FACERING_FIELD_HPP

#include <cstdint>
#include <string>
#include <string_view>

namespace facering {

// Coefficient field: characteristic 0 means the rationals, otherwise a prime
// p < 2^62 with word-sized modular arithmetic.
struct FieldSpec {
  std::uint64_t characteristic = 0;

  static FieldSpec rationals() { return FieldSpec{0}; }
  static FieldSpec prime(std::uint64_t p);  // validates primality and range

  bool is_rational() const { return characteristic == 0; }
  std::string to_string() const;            // "q", "f2", "f2147483647", ...
  static FieldSpec parse(std::string_view s);

  bool operator==(const FieldSpec&) const = default;
};

bool is_prime_u64(std::uint64_t n);

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t p);
std::uint64_t invmod_u64(std::uint64_t a, std::uint64_t p);

}  // namespace facering

#endif
