#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <string>

namespace dws::qsh {

// Laurent polynomial in a formal q with integer coefficients.
class QLaurent {
 public:
  using Coeff = std::int64_t;

  QLaurent() = default;
  QLaurent(Coeff c);  // NOLINT(google-explicit-constructor)
  static QLaurent monomial(int exponent, Coeff c = 1);
  // [k]_q = (q^k - q^{-k}) / (q - q^{-1})
  static QLaurent qint(int k);

  const std::map<int, Coeff>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Coeff coeff(int exponent) const;

  QLaurent& operator+=(const QLaurent& o);
  QLaurent& operator-=(const QLaurent& o);
  QLaurent& operator*=(const QLaurent& o);
  friend QLaurent operator+(QLaurent a, const QLaurent& b) { return a += b; }
  friend QLaurent operator-(QLaurent a, const QLaurent& b) { return a -= b; }
  friend QLaurent operator*(QLaurent a, const QLaurent& b) { return a *= b; }
  QLaurent operator-() const;
  bool operator==(const QLaurent& o) const = default;

  // Shift every exponent by s (multiplication by q^s).
  QLaurent shifted(int s) const;
  // Reduction modulo q^r = (-1)^{r-1}; exponents land in [0, r).
  QLaurent reduce_cyclotomic(int r) const;
  std::complex<double> evaluate(std::complex<double> q) const;

  std::string to_string() const;

 private:
  void add_term(int e, Coeff c);
  std::map<int, Coeff> terms_;
};

}  // namespace dws::qsh
