#include "diamonds/polynomial.hpp"

#include <cctype>

#include "diamonds/error.hpp"

namespace diamonds {

DescentPoly::DescentPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
  for (const auto& c : coeffs_) {
    if (c < 0) throw DomainError("descent polynomials have nonnegative coefficients");
  }
  canonicalize();
}

DescentPoly::DescentPoly(std::initializer_list<int> coeffs)
    : DescentPoly(std::vector<BigInt>(coeffs.begin(), coeffs.end())) {}

DescentPoly DescentPoly::constant(BigInt c) {
  return DescentPoly(std::vector<BigInt>{std::move(c)});
}

DescentPoly DescentPoly::monomial(std::size_t k, BigInt c) {
  std::vector<BigInt> v(k + 1);
  v[k] = std::move(c);
  return DescentPoly(std::move(v));
}

DescentPoly DescentPoly::from_counts(const std::vector<std::uint64_t>& counts) {
  return DescentPoly(std::vector<BigInt>(counts.begin(), counts.end()));
}

void DescentPoly::canonicalize() {
  while (coeffs_.size() > 1 && coeffs_.back() == 0) coeffs_.pop_back();
  if (coeffs_.empty()) coeffs_.push_back(0);
}

BigInt DescentPoly::eval_one() const {
  BigInt sum = 0;
  for (const auto& c : coeffs_) sum += c;
  return sum;
}

DescentPoly DescentPoly::pow(unsigned exponent) const {
  DescentPoly result = one();
  DescentPoly base = *this;
  while (exponent) {
    if (exponent & 1u) result *= base;
    exponent >>= 1;
    if (exponent) base *= base;
  }
  return result;
}

DescentPoly& DescentPoly::operator+=(const DescentPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
  canonicalize();
  return *this;
}

DescentPoly& DescentPoly::operator*=(const DescentPoly& other) {
  *this = *this * other;
  return *this;
}

DescentPoly operator*(const DescentPoly& a, const DescentPoly& b) {
  if (a.is_zero() || b.is_zero()) return DescentPoly();
  std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return DescentPoly(std::move(out));
}

std::string to_string(const BigInt& n) { return n.str(); }

std::string DescentPoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const BigInt& c = coeffs_[k];
    if (c == 0) continue;
    if (!out.empty()) out += '+';
    if (k == 0) {
      out += c.str();
      continue;
    }
    if (c != 1) out += c.str();
    out += 'x';
    if (k > 1) out += '^' + std::to_string(k);
  }
  return out;
}

DescentPoly DescentPoly::parse(std::string_view text) {
  auto bad = [&] { return ParseError("bad polynomial '" + std::string(text) + "'"); };
  if (text.empty()) throw bad();
  std::vector<BigInt> coeffs;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('+', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view term = text.substr(pos, end - pos);
    if (term.empty()) throw bad();
    std::size_t i = 0;
    while (i < term.size() && std::isdigit(static_cast<unsigned char>(term[i]))) ++i;
    BigInt c = i ? BigInt(std::string(term.substr(0, i))) : BigInt(1);
    std::size_t power = 0;
    if (i < term.size()) {
      if (term[i] != 'x') throw bad();
      power = 1;
      ++i;
      if (i < term.size()) {
        if (term[i] != '^' || i + 1 == term.size()) throw bad();
        power = 0;
        for (++i; i < term.size(); ++i) {
          if (!std::isdigit(static_cast<unsigned char>(term[i]))) throw bad();
          power = power * 10 + static_cast<std::size_t>(term[i] - '0');
        }
      }
    } else if (i == 0) {
      throw bad();
    }
    if (coeffs.size() <= power) coeffs.resize(power + 1);
    coeffs[power] += c;
    pos = end + 1;
    if (end + 1 == text.size()) throw bad();
  }
  return DescentPoly(std::move(coeffs));
}

}  // namespace diamonds
