#pragma once

#include "dws/qlaurent.hpp"

#include <map>
#include <string>
#include <vector>

namespace dws::qsh {

// Letters are simple-root indices 1..n-1.
using Word = std::vector<int>;

class QElement {
 public:
  explicit QElement(int n = 3);
  static QElement word(int n, const Word& w, const QLaurent& c = QLaurent(1));
  static QElement unit(int n) { return word(n, {}); }
  static QElement letter(int n, int i) { return word(n, {i}); }

  int n() const { return n_; }
  const std::map<Word, QLaurent>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  QLaurent coeff(const Word& w) const;
  std::size_t size() const { return terms_.size(); }

  QElement& operator+=(const QElement& o);
  QElement& operator-=(const QElement& o);
  friend QElement operator+(QElement a, const QElement& b) { return a += b; }
  friend QElement operator-(QElement a, const QElement& b) { return a -= b; }
  friend QElement operator*(const QLaurent& c, const QElement& e);
  // Weighted shuffle product.
  friend QElement operator*(const QElement& a, const QElement& b);
  bool operator==(const QElement& o) const { return n_ == o.n_ && terms_ == o.terms_; }

  QElement reduce_cyclotomic(int r) const;
  std::string to_string() const;

 private:
  void add(const Word& w, const QLaurent& c);
  void check_rank(const QElement& o) const;
  int n_;
  std::map<Word, QLaurent> terms_;
};

QElement shuffle(const QElement& a, const QElement& b);
// (alpha_a, alpha_b) for letters a, b.
int letter_pairing(int n, int a, int b);

// X_{i..i+m}(k_1..k_m) with a 1-based start letter i.
QElement basic_X(int n, int i, int m, const std::vector<int>& k);
QElement simple_X(int n, int i);
// {A, B}_k = -[k] A B + [k+1] B A
QElement bracket(const QElement& A, const QElement& B, int k);
QElement nested_bracket(int n, int i, int m, const std::vector<int>& k);
// prod_{b=1}^{a} X_{i..i+m}(k - b + 1), left to right.
QElement power_X(int n, int i, int m, const std::vector<int>& k, int a);
QElement pow(const QElement& e, int a);
QElement commutator(const QElement& A, const QElement& B);

}  // namespace dws::qsh
