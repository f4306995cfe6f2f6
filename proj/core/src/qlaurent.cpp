#include "dws/qlaurent.hpp"

#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace dws::qsh {

QLaurent::QLaurent(Coeff c) {
  if (c != 0) terms_.emplace(0, c);
}

QLaurent QLaurent::monomial(int exponent, Coeff c) {
  QLaurent p;
  p.add_term(exponent, c);
  return p;
}

QLaurent QLaurent::qint(int k) {
  QLaurent p;
  const int a = std::abs(k);
  const Coeff s = k < 0 ? -1 : 1;
  for (int j = 0; j < a; ++j) p.add_term(a - 1 - 2 * j, s);
  return p;
}

QLaurent::Coeff QLaurent::coeff(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? 0 : it->second;
}

void QLaurent::add_term(int e, Coeff c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

QLaurent& QLaurent::operator+=(const QLaurent& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

QLaurent& QLaurent::operator-=(const QLaurent& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

QLaurent& QLaurent::operator*=(const QLaurent& o) {
  QLaurent out;
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) out.add_term(e1 + e2, c1 * c2);
  *this = std::move(out);
  return *this;
}

QLaurent QLaurent::operator-() const {
  QLaurent out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

QLaurent QLaurent::shifted(int s) const {
  QLaurent out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e + s, c);
  return out;
}

QLaurent QLaurent::reduce_cyclotomic(int r) const {
  if (r < 2) throw std::invalid_argument("cyclotomic reduction needs r >= 2");
  const Coeff unit = (r % 2 == 1) ? 1 : -1;  // (-1)^{r-1}
  QLaurent out;
  for (const auto& [e, c] : terms_) {
    int s = e >= 0 ? e / r : -((-e + r - 1) / r);
    int e0 = e - s * r;
    Coeff sign = (unit == -1 && (s % 2 != 0)) ? -1 : 1;
    out.add_term(e0, sign * c);
  }
  return out;
}

std::complex<double> QLaurent::evaluate(std::complex<double> q) const {
  std::complex<double> v = 0.0;
  for (const auto& [e, c] : terms_) v += double(c) * std::pow(q, e);
  return v;
}

std::string QLaurent::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    auto [e, c] = *it;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    Coeff a = c < 0 ? -c : c;
    if (e == 0) {
      os << a;
      continue;
    }
    if (a != 1) os << a << "*";
    os << "q";
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

}  // namespace dws::qsh
