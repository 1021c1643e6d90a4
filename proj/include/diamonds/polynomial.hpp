#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace diamonds {

using BigInt = boost::multiprecision::cpp_int;

// Dense polynomial in x with nonnegative integer coefficients; coeffs()[k]
// is the coefficient of x^k. Canonical form carries no trailing zeros,
// with the zero polynomial stored as the single coefficient 0.
class DescentPoly {
 public:
  DescentPoly() : coeffs_{0} {}
  // Throws DomainError on a negative coefficient.
  explicit DescentPoly(std::vector<BigInt> coeffs);
  DescentPoly(std::initializer_list<int> coeffs);

  static DescentPoly constant(BigInt c);
  static DescentPoly one() { return constant(1); }
  // c * x^k
  static DescentPoly monomial(std::size_t k, BigInt c = 1);
  // From a histogram of descent counts.
  static DescentPoly from_counts(const std::vector<std::uint64_t>& counts);

  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  std::size_t degree() const { return coeffs_.size() - 1; }
  bool is_zero() const { return coeffs_.size() == 1 && coeffs_[0] == 0; }
  BigInt coefficient(std::size_t k) const {
    return k < coeffs_.size() ? coeffs_[k] : BigInt(0);
  }

  // Sum of coefficients.
  BigInt eval_one() const;
  DescentPoly pow(unsigned exponent) const;

  DescentPoly& operator+=(const DescentPoly& other);
  DescentPoly& operator*=(const DescentPoly& other);
  friend DescentPoly operator+(DescentPoly a, const DescentPoly& b) { return a += b; }
  friend DescentPoly operator*(const DescentPoly& a, const DescentPoly& b);

  bool operator==(const DescentPoly&) const = default;

  // "1+4x+4x^2+x^3": ascending powers, zero terms dropped, "0" for zero.
  std::string to_string() const;
  // Accepts the to_string format. Throws ParseError.
  static DescentPoly parse(std::string_view text);

 private:
  void canonicalize();

  std::vector<BigInt> coeffs_;
};

inline DescentPoly poly_add(const DescentPoly& a, const DescentPoly& b) { return a + b; }
inline DescentPoly poly_mul(const DescentPoly& a, const DescentPoly& b) { return a * b; }
inline BigInt poly_eval_one(const DescentPoly& a) { return a.eval_one(); }

std::string to_string(const BigInt& n);

}  // namespace diamonds
