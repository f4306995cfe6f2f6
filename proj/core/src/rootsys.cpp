#include "dws/rootsys.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace dws::rootsys {

void check_rank(int n) {
  if (n < kMinRank || n > kMaxRank)
    throw std::invalid_argument("rank n must lie in [2, 8], got " + std::to_string(n));
}

static void same_rank(const WeightVec& a, const WeightVec& b) {
  if (a.rank() != b.rank()) throw std::invalid_argument("weight rank mismatch");
}

WeightVec operator+(const WeightVec& a, const WeightVec& b) {
  same_rank(a, b);
  WeightVec out = a;
  for (int i = 0; i < a.rank(); ++i) out.coords[i] += b.coords[i];
  return out;
}

WeightVec operator-(const WeightVec& a, const WeightVec& b) {
  same_rank(a, b);
  WeightVec out = a;
  for (int i = 0; i < a.rank(); ++i) out.coords[i] -= b.coords[i];
  return out;
}

WeightVec operator*(const Rational& s, const WeightVec& v) {
  WeightVec out = v;
  for (auto& c : out.coords) c *= s;
  return out;
}

Rational inner(const WeightVec& v, const WeightVec& w) {
  same_rank(v, w);
  Rational acc = 0;
  for (int i = 0; i < v.rank(); ++i) acc += v.coords[i] * w.coords[i];
  return acc;
}

Rational inner(const WeightVec& v, Root a) {
  if (a.j >= v.rank() || a.i < 0 || a.i >= a.j) throw std::invalid_argument("root outside rank");
  return v.coords[a.i] - v.coords[a.j];
}

int inner(Root a, Root b) {
  auto d = [](int x, int y) { return x == y ? 1 : 0; };
  return d(a.i, b.i) - d(a.i, b.j) - d(a.j, b.i) + d(a.j, b.j);
}

WeightVec zero_weight(int n) {
  check_rank(n);
  return WeightVec{std::vector<Rational>(n, Rational(0))};
}

WeightVec eps_bar(int n, int i) {
  WeightVec v = zero_weight(n);
  if (i < 0 || i >= n) throw std::invalid_argument("eps index out of range");
  for (int k = 0; k < n; ++k) v.coords[k] = Rational(-1, n);
  v.coords[i] += 1;
  return v;
}

WeightVec fundamental_weight(int n, int i) {
  if (i < 0 || i >= n - 1) throw std::invalid_argument("fundamental weight index out of range");
  WeightVec v = zero_weight(n);
  for (int k = 0; k <= i; ++k) v = v + eps_bar(n, k);
  return v;
}

WeightVec root_vector(int n, Root a) {
  WeightVec v = zero_weight(n);
  if (a.i < 0 || a.j >= n || a.i >= a.j) throw std::invalid_argument("root outside rank");
  v.coords[a.i] = 1;
  v.coords[a.j] = -1;
  return v;
}

WeightVec simple_root(int n, int i) { return root_vector(n, Root{i, i + 1}); }

Root highest_root(int n) {
  check_rank(n);
  return Root{0, n - 1};
}

WeightVec weight_from_omega(int n, const std::vector<int>& coeffs) {
  if (static_cast<int>(coeffs.size()) != n - 1)
    throw std::invalid_argument("expected n-1 fundamental-weight coefficients");
  WeightVec v = zero_weight(n);
  for (int i = 0; i < n - 1; ++i) v = v + Rational(coeffs[i]) * fundamental_weight(n, i);
  return v;
}

WeightVec weight_from_rootvec(int n, const RootVec& g) {
  if (static_cast<int>(g.size()) != n - 1) throw std::invalid_argument("root vector length must be n-1");
  WeightVec v = zero_weight(n);
  for (int i = 0; i < n - 1; ++i) {
    v.coords[i] += g[i];
    v.coords[i + 1] -= g[i];
  }
  return v;
}

WeightVec reflect(const WeightVec& v, Root a) {
  WeightVec out = v;
  std::swap(out.coords.at(a.i), out.coords.at(a.j));
  return out;
}

std::vector<Root> positive_roots(int n) {
  check_rank(n);
  std::vector<Root> out;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) out.push_back(Root{i, j});
  return out;
}

Root segment(int start, int len) {
  if (len < 1) throw std::invalid_argument("segment length must be positive");
  return Root{start, start + len};
}

std::vector<std::pair<Root, Root>> root_decompositions(Root a) {
  std::vector<std::pair<Root, Root>> out;
  for (int k = a.i + 1; k < a.j; ++k) {
    out.emplace_back(Root{a.i, k}, Root{k, a.j});
    out.emplace_back(Root{k, a.j}, Root{a.i, k});
  }
  return out;
}

std::optional<Root> root_difference(Root a, Root b) {
  if (a.i == b.i && b.j < a.j) return Root{b.j, a.j};
  if (a.j == b.j && a.i < b.i) return Root{a.i, b.i};
  return std::nullopt;
}

std::optional<Root> root_sum(Root a, Root b) {
  if (a.j == b.i) return Root{a.i, b.j};
  if (b.j == a.i) return Root{b.i, a.j};
  return std::nullopt;
}

RootVec rootvec_of(int n, Root a) {
  RootVec g(n - 1, 0);
  for (int k = a.i; k < a.j; ++k) g.at(k) = 1;
  return g;
}

Permutation identity_perm(int n) {
  Permutation p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

bool is_permutation(const Permutation& p) {
  std::vector<bool> seen(p.size(), false);
  for (int v : p) {
    if (v < 0 || v >= static_cast<int>(p.size()) || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

int perm_length(const Permutation& p) {
  int inv = 0;
  for (size_t a = 0; a < p.size(); ++a)
    for (size_t b = a + 1; b < p.size(); ++b)
      if (p[a] > p[b]) ++inv;
  return inv;
}

Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw std::invalid_argument("permutation size mismatch");
  Permutation out(a.size());
  for (size_t k = 0; k < b.size(); ++k) out[k] = a[b[k]];
  return out;
}

Permutation transposition(int n, int i, int j) {
  Permutation p = identity_perm(n);
  std::swap(p.at(i), p.at(j));
  return p;
}

Permutation simple_reflection(int n, int i) { return transposition(n, i, i + 1); }

Permutation reflect_left(Root a, const Permutation& sigma) {
  Permutation out = sigma;
  for (int& v : out) {
    if (v == a.i)
      v = a.j;
    else if (v == a.j)
      v = a.i;
  }
  return out;
}

WeightVec act(const Permutation& sigma, const WeightVec& v) {
  if (static_cast<int>(sigma.size()) != v.rank()) throw std::invalid_argument("permutation rank mismatch");
  WeightVec out = v;
  for (int k = 0; k < v.rank(); ++k) out.coords[sigma[k]] = v.coords[k];
  return out;
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<Permutation> out;
  Permutation p = identity_perm(n);
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

int height(const RootVec& g) { return std::accumulate(g.begin(), g.end(), 0); }

std::string to_string(Root a) {
  std::ostringstream os;
  os << "e" << a.i + 1 << "-e" << a.j + 1;
  return os.str();
}

std::string to_string(const Permutation& p) {
  std::ostringstream os;
  os << "[";
  for (size_t k = 0; k < p.size(); ++k) os << (k ? "," : "") << p[k] + 1;
  os << "]";
  return os.str();
}

std::string to_string(const WeightVec& v) {
  std::ostringstream os;
  os << "(";
  for (int k = 0; k < v.rank(); ++k) {
    if (k) os << ",";
    const auto& c = v.coords[k];
    os << c.numerator();
    if (c.denominator() != 1) os << "/" << c.denominator();
  }
  os << ")";
  return os.str();
}

}  // namespace dws::rootsys
