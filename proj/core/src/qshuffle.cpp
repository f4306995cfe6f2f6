#include "dws/qshuffle.hpp"

#include "dws/rootsys.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace dws::qsh {

namespace {

struct Cartan {
  int n;
  std::vector<int> table;  // (n-1) x (n-1)

  explicit Cartan(int n_) : n(n_), table((n_ - 1) * (n_ - 1)) {
    for (int a = 0; a < n - 1; ++a)
      for (int b = 0; b < n - 1; ++b) {
        auto v = rootsys::inner(rootsys::simple_root(n, a), rootsys::simple_root(n, b));
        table[a * (n - 1) + b] = static_cast<int>(v.numerator() / v.denominator());
      }
  }
  int operator()(int a, int b) const { return table[(a - 1) * (n - 1) + (b - 1)]; }
};

const Cartan& cartan(int n) {
  static std::map<int, Cartan> cache;
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, Cartan(n)).first;
  return it->second;
}

// Interleavings of u and v; the exponent collects (alpha_v, alpha_u) for
// every v-letter standing before a u-letter.
void merge(const Cartan& C, const Word& u, const Word& v, std::size_t iu, std::size_t iv, int exponent, Word& cur,
           std::map<Word, QLaurent>& out, const QLaurent& coeff) {
  if (iu == u.size() && iv == v.size()) {
    auto [it, inserted] = out.emplace(cur, coeff.shifted(exponent));
    if (!inserted) {
      it->second += coeff.shifted(exponent);
      if (it->second.is_zero()) out.erase(it);
    }
    return;
  }
  if (iu < u.size()) {
    int add = 0;
    for (std::size_t t = 0; t < iv; ++t) add += C(v[t], u[iu]);
    cur.push_back(u[iu]);
    merge(C, u, v, iu + 1, iv, exponent + add, cur, out, coeff);
    cur.pop_back();
  }
  if (iv < v.size()) {
    cur.push_back(v[iv]);
    merge(C, u, v, iu, iv + 1, exponent, cur, out, coeff);
    cur.pop_back();
  }
}

}  // namespace

int letter_pairing(int n, int a, int b) {
  if (a < 1 || b < 1 || a > n - 1 || b > n - 1) throw std::out_of_range("letter out of range");
  return cartan(n)(a, b);
}

QElement::QElement(int n) : n_(n) { rootsys::check_rank(n); }

QElement QElement::word(int n, const Word& w, const QLaurent& c) {
  QElement e(n);
  for (int x : w)
    if (x < 1 || x > n - 1) throw std::out_of_range("letter out of range");
  e.add(w, c);
  return e;
}

QLaurent QElement::coeff(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? QLaurent() : it->second;
}

void QElement::add(const Word& w, const QLaurent& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void QElement::check_rank(const QElement& o) const {
  if (n_ != o.n_) throw std::invalid_argument("rank mismatch");
}

QElement& QElement::operator+=(const QElement& o) {
  check_rank(o);
  for (const auto& [w, c] : o.terms_) add(w, c);
  return *this;
}

QElement& QElement::operator-=(const QElement& o) {
  check_rank(o);
  for (const auto& [w, c] : o.terms_) add(w, -c);
  return *this;
}

QElement operator*(const QLaurent& c, const QElement& e) {
  QElement out(e.n_);
  for (const auto& [w, x] : e.terms_) out.add(w, c * x);
  return out;
}

QElement operator*(const QElement& a, const QElement& b) {
  a.check_rank(b);
  const Cartan& C = cartan(a.n_);
  QElement out(a.n_);
  Word cur;
  for (const auto& [u, cu] : a.terms_)
    for (const auto& [v, cv] : b.terms_) merge(C, u, v, 0, 0, 0, cur, out.terms_, cu * cv);
  return out;
}

QElement shuffle(const QElement& a, const QElement& b) { return a * b; }

QElement QElement::reduce_cyclotomic(int r) const {
  QElement out(n_);
  for (const auto& [w, c] : terms_) out.add(w, c.reduce_cyclotomic(r));
  return out;
}

std::string QElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.to_string() << ")I_";
    for (int x : w) os << x;
  }
  return os.str();
}

QElement simple_X(int n, int i) { return QElement::letter(n, i); }

QElement basic_X(int n, int i, int m, const std::vector<int>& k) {
  if (m < 0 || i < 1 || i + m > n - 1) throw std::out_of_range("basic_X: segment out of range");
  if (static_cast<int>(k.size()) != m) throw std::invalid_argument("basic_X: need m parameters");
  const int base = -m - std::accumulate(k.begin(), k.end(), 0);
  std::vector<int> sigma(m + 1);
  std::iota(sigma.begin(), sigma.end(), 1);
  QElement out(n);
  do {
    int f = 0;
    for (int t = 0; t <= m; ++t)
      for (int t2 = 0; t2 < t; ++t2)
        if (sigma[t2] - sigma[t] == 1) f += 2 * k[sigma[t] - 1] + 1;
    Word w(m + 1);
    for (int t = 0; t <= m; ++t) w[t] = i + sigma[t] - 1;
    out += QElement::word(n, w, QLaurent::monomial(base + f));
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return out;
}

QElement bracket(const QElement& A, const QElement& B, int k) {
  return (-QLaurent::qint(k)) * (A * B) + QLaurent::qint(k + 1) * (B * A);
}

QElement nested_bracket(int n, int i, int m, const std::vector<int>& k) {
  if (m < 0 || i < 1 || i + m > n - 1) throw std::out_of_range("nested_bracket: segment out of range");
  if (static_cast<int>(k.size()) != m) throw std::invalid_argument("nested_bracket: need m parameters");
  QElement cur = simple_X(n, i);
  for (int j = 1; j <= m; ++j) cur = bracket(cur, simple_X(n, i + j), k[j - 1]);
  return cur;
}

QElement power_X(int n, int i, int m, const std::vector<int>& k, int a) {
  if (a < 0) throw std::invalid_argument("power_X: negative exponent");
  QElement out = QElement::unit(n);
  for (int b = 1; b <= a; ++b) {
    std::vector<int> kb(k);
    for (int& x : kb) x -= b - 1;
    out = out * basic_X(n, i, m, kb);
  }
  return out;
}

QElement pow(const QElement& e, int a) {
  QElement out = QElement::unit(e.n());
  for (int b = 0; b < a; ++b) out = out * e;
  return out;
}

QElement commutator(const QElement& A, const QElement& B) { return A * B - B * A; }

}  // namespace dws::qsh
