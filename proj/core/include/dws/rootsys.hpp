#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace dws::rootsys {

using Rational = boost::rational<std::int64_t>;

inline constexpr int kMinRank = 2;
inline constexpr int kMaxRank = 8;

// Throws std::invalid_argument outside [kMinRank, kMaxRank].
void check_rank(int n);

// Traceless coordinates in the basis eps_1..eps_n.
struct WeightVec {
  std::vector<Rational> coords;

  int rank() const { return static_cast<int>(coords.size()); }
  bool operator==(const WeightVec&) const = default;
};

WeightVec operator+(const WeightVec& a, const WeightVec& b);
WeightVec operator-(const WeightVec& a, const WeightVec& b);
WeightVec operator*(const Rational& s, const WeightVec& v);

// Positive root eps_i - eps_j, zero-based, i < j.
struct Root {
  int i = 0;
  int j = 1;

  int height() const { return j - i; }
  bool is_simple() const { return j == i + 1; }
  auto operator<=>(const Root&) const = default;
};

// sigma(eps_i) = eps_{sigma[i]}.
using Permutation = std::vector<int>;

// Coordinates in the simple-root basis, length n - 1.
using RootVec = std::vector<int>;

Rational inner(const WeightVec& v, const WeightVec& w);
Rational inner(const WeightVec& v, Root a);
int inner(Root a, Root b);

WeightVec zero_weight(int n);
WeightVec eps_bar(int n, int i);
WeightVec fundamental_weight(int n, int i);
WeightVec simple_root(int n, int i);
WeightVec root_vector(int n, Root a);
Root highest_root(int n);
WeightVec weight_from_omega(int n, const std::vector<int>& coeffs);
WeightVec weight_from_rootvec(int n, const RootVec& g);

WeightVec reflect(const WeightVec& v, Root a);

std::vector<Root> positive_roots(int n);
// Root spanning simple roots start..start+len-1.
Root segment(int start, int len);
// All ordered (beta, gamma) with beta + gamma = a.
std::vector<std::pair<Root, Root>> root_decompositions(Root a);
// a - b or a + b when that is a positive root.
std::optional<Root> root_difference(Root a, Root b);
std::optional<Root> root_sum(Root a, Root b);
RootVec rootvec_of(int n, Root a);

Permutation identity_perm(int n);
bool is_permutation(const Permutation& p);
int perm_length(const Permutation& p);
Permutation compose(const Permutation& a, const Permutation& b);
Permutation transposition(int n, int i, int j);
Permutation simple_reflection(int n, int i);
// Left multiplication by the reflection in a.
Permutation reflect_left(Root a, const Permutation& sigma);
WeightVec act(const Permutation& sigma, const WeightVec& v);
std::vector<Permutation> all_permutations(int n);

int height(const RootVec& g);

std::string to_string(Root a);
std::string to_string(const Permutation& p);
std::string to_string(const WeightVec& v);

}  // namespace dws::rootsys
