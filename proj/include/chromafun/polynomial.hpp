#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "chromafun/errors.hpp"

namespace chromafun {

using BigInt = boost::multiprecision::cpp_int;

/// Exact integer-coefficient univariate polynomial.
/// coefficients()[i] is the coefficient of t^i; the leading coefficient is
/// nonzero unless the polynomial is zero.
class IntPolynomial {
 public:
  IntPolynomial() = default;

  static IntPolynomial from_coefficients(std::vector<BigInt> coeffs) {
    IntPolynomial p;
    p.coeffs_ = std::move(coeffs);
    p.normalize();
    return p;
  }

  static IntPolynomial zero() { return IntPolynomial(); }

  static IntPolynomial constant(BigInt c) { return from_coefficients({std::move(c)}); }

  static IntPolynomial monomial(int degree, BigInt c = 1) {
    std::vector<BigInt> coeffs(degree + 1, 0);
    coeffs[degree] = std::move(c);
    return from_coefficients(std::move(coeffs));
  }

  /// t(t-1)...(t-k+1), the chromatic polynomial of K_k; k = 0 gives 1.
  static IntPolynomial falling_factorial(int k) {
    IntPolynomial p = constant(1);
    for (int i = 0; i < k; ++i) {
      p = p * from_coefficients({-i, 1});
    }
    return p;
  }

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

  const std::vector<BigInt>& coefficients() const { return coeffs_; }

  BigInt coefficient(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return 0;
    return coeffs_[i];
  }

  BigInt evaluate(const BigInt& t) const {
    BigInt acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
      acc = acc * t + *it;
    }
    return acc;
  }

  IntPolynomial operator+(const IntPolynomial& other) const {
    std::vector<BigInt> out(std::max(coeffs_.size(), other.coeffs_.size()), 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) out[i] += other.coeffs_[i];
    return from_coefficients(std::move(out));
  }

  IntPolynomial operator-(const IntPolynomial& other) const {
    std::vector<BigInt> out(std::max(coeffs_.size(), other.coeffs_.size()), 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) out[i] -= other.coeffs_[i];
    return from_coefficients(std::move(out));
  }

  IntPolynomial operator*(const IntPolynomial& other) const {
    if (is_zero() || other.is_zero()) return zero();
    std::vector<BigInt> out(coeffs_.size() + other.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      for (std::size_t j = 0; j < other.coeffs_.size(); ++j)
        out[i + j] += coeffs_[i] * other.coeffs_[j];
    return from_coefficients(std::move(out));
  }

  IntPolynomial operator*(const BigInt& scalar) const {
    std::vector<BigInt> out = coeffs_;
    for (auto& c : out) c *= scalar;
    return from_coefficients(std::move(out));
  }

  bool operator==(const IntPolynomial& other) const { return coeffs_ == other.coeffs_; }
  bool operator!=(const IntPolynomial& other) const { return !(*this == other); }

  std::string to_string() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
      const BigInt& c = coeffs_[i];
      if (c == 0) continue;
      if (!first) out << (c > 0 ? " + " : " - ");
      else if (c < 0) out << "-";
      BigInt a = abs(c);
      if (a != 1 || i == 0) out << a.str();
      if (i >= 1) {
        if (a != 1) out << "*";
        out << "t";
        if (i > 1) out << "^" << i;
      }
      first = false;
    }
    return out.str();
  }

 private:
  void normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<BigInt> coeffs_;
};

/// Counts #St_k(G) of stable partitions by block count; the coefficients of
/// the chromatic polynomial in the falling-factorial basis.  Zero entries are
/// not stored.
struct StVector {
  std::map<int, BigInt> counts;

  BigInt at(int k) const {
    auto it = counts.find(k);
    return it == counts.end() ? BigInt(0) : it->second;
  }

  void set(int k, BigInt value) {
    if (value == 0) {
      counts.erase(k);
    } else {
      counts[k] = std::move(value);
    }
  }

  int max_block_count() const { return counts.empty() ? 0 : counts.rbegin()->first; }

  BigInt total() const {
    BigInt sum = 0;
    for (const auto& [k, c] : counts) sum += c;
    return sum;
  }

  bool operator==(const StVector& other) const { return counts == other.counts; }
  bool operator!=(const StVector& other) const { return !(*this == other); }
};

/// Expands p in the falling-factorial basis: p(t) = sum_k a_k t(t-1)..(t-k+1).
/// Coefficients come from the forward-difference table, a_k = (D^k p)(0) / k!.
/// For a chromatic polynomial every a_k is a nonnegative integer and a_0 = 0;
/// anything else is rejected.
inline StVector to_falling_factorial(const IntPolynomial& p) {
  StVector result;
  if (p.is_zero()) {
    throw precondition_error("not a chromatic polynomial: zero polynomial");
  }
  const int d = p.degree();
  std::vector<BigInt> row(d + 1);
  for (int i = 0; i <= d; ++i) row[i] = p.evaluate(i);
  BigInt k_factorial = 1;
  for (int k = 0; k <= d; ++k) {
    if (k > 0) {
      k_factorial *= k;
      for (int i = 0; i + k <= d; ++i) row[i] = row[i + 1] - row[i];
    }
    if (row[0] % k_factorial != 0) {
      throw precondition_error(
          "not a chromatic polynomial: non-integral falling-factorial coefficient");
    }
    BigInt a = row[0] / k_factorial;
    if (a < 0) {
      throw precondition_error(
          "not a chromatic polynomial: negative falling-factorial coefficient at k=" +
          std::to_string(k));
    }
    if (k == 0 && a != 0 && d >= 1) {
      throw precondition_error("not a chromatic polynomial: nonzero constant term");
    }
    result.set(k, a);
  }
  return result;
}

/// Inverse of to_falling_factorial: sum_k counts[k] * t(t-1)...(t-k+1).
inline IntPolynomial from_falling_factorial(const StVector& st) {
  IntPolynomial p = IntPolynomial::zero();
  for (const auto& [k, count] : st.counts) {
    if (count < 0) throw precondition_error("negative StVector entry");
    p = p + IntPolynomial::falling_factorial(k) * count;
  }
  return p;
}

}  // namespace chromafun
