#include "facering/field.hpp"

#include <stdexcept>

namespace facering {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod_u64(r, a, p);
    a = mulmod_u64(a, a, p);
    e >>= 1;
  }
  return r;
}

std::uint64_t invmod_u64(std::uint64_t a, std::uint64_t p) {
  a %= p;
  if (a == 0) throw std::domain_error("inverse of 0 mod p");
  return powmod_u64(a, p - 2, p);
}

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % q == 0) return n == q;
  }
  // deterministic Miller-Rabin for 64-bit integers
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 62))
    throw std::invalid_argument("field characteristic must be below 2^62");
  if (!is_prime_u64(p))
    throw std::invalid_argument("field characteristic " + std::to_string(p) + " is not prime");
  return FieldSpec{p};
}

std::string FieldSpec::to_string() const {
  if (is_rational()) return "q";
  return "f" + std::to_string(characteristic);
}

FieldSpec FieldSpec::parse(std::string_view s) {
  if (s == "q" || s == "Q" || s == "0") return rationals();
  if (!s.empty() && (s[0] == 'f' || s[0] == 'F')) s.remove_prefix(1);
  if (s.empty()) throw std::invalid_argument("empty field spec");
  std::uint64_t p = 0;
  for (char c : s) {
    if (c < '0' || c > '9') throw std::invalid_argument("bad field spec");
    p = p * 10 + static_cast<std::uint64_t>(c - '0');
  }
  return prime(p);
}

}  // namespace facering
