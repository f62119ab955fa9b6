#ifndef FACERING_RATIONAL_HPP
#define FACERING_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace facering {

// Exact arithmetic used everywhere results are asserted: arbitrary-precision
// integers and rationals. Rationals are always kept in reduced form by the
// backend.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Subset-counting binomial: 0 whenever m < 0, k < 0 or k > m.
BigInt binomial_big(long long m, long long k);

// Same convention, as int64. Throws std::overflow_error if the value does not
// fit; callers at desk scale (m <= 62) are safe.
long long binomial_ll(long long m, long long k);

std::string rational_to_string(const Rational& r);

// Vector of rationals indexed from -1 (slot 0 holds the degree -1 entry).
class RationalVector {
 public:
  RationalVector() = default;
  explicit RationalVector(int max_degree) : v_(static_cast<size_t>(max_degree) + 2) {}

  // Degree range is [-1, max_degree()].
  int max_degree() const { return static_cast<int>(v_.size()) - 2; }

  const Rational& at(int degree) const {
    static const Rational kZero{};
    int idx = degree + 1;
    if (idx < 0 || idx >= static_cast<int>(v_.size())) return kZero;
    return v_[static_cast<size_t>(idx)];
  }

  Rational& slot(int degree) {
    int idx = degree + 1;
    if (idx < 0 || idx >= static_cast<int>(v_.size()))
      throw std::out_of_range("RationalVector degree " + std::to_string(degree));
    return v_[static_cast<size_t>(idx)];
  }

  bool operator==(const RationalVector& o) const = default;

 private:
  std::vector<Rational> v_;
};

}  // namespace facering

#endif
