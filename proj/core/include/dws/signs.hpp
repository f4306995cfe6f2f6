#pragma once

#include "dws/orbit.hpp"

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace dws::orbit {

// Diagonal periodicity lattice: gamma ~ gamma + periods[i] * alpha_i, i.e.
// weights identified modulo r * periods[i] * alpha_i. A period of 0 means no
// identification along that direction.
struct Lattice {
  std::vector<int> periods;

  // (1,2) for n = 3, otherwise 2 in every direction.
  static Lattice default_for(int n);
  RootVec reduce(const RootVec& g) const;
};

struct EdgeKey {
  Permutation sigma;
  RootVec gamma;  // reduced modulo the lattice
  Root alpha;

  auto operator<=>(const EdgeKey&) const = default;
};

EdgeKey edge_key(const OrbitPoint& source, Root alpha, const Lattice& lat);

struct SignAssignment {
  Lattice lattice;
  std::map<EdgeKey, int> signs;

  // Unconstrained classes read as +1.
  int sign(const OrbitPoint& source, Root alpha) const;
  void flip(const EdgeKey& key);
};

struct SignSolveReport {
  bool feasible = false;
  SignAssignment assignment;
  std::size_t squares = 0;
  std::size_t boundary_squares = 0;
  std::size_t simple_doubles = 0;
  std::size_t equations = 0;
  std::size_t unknowns = 0;
  std::size_t rank = 0;
  // Squares whose constraints sum to 0 = 1 when infeasible.
  std::vector<CommutingSquare> certificate;
};

SignSolveReport solve_signs(const Orbit& orb, int gamma_bound, const Lattice& lat,
                            KappaSource src = KappaSource::SigmaLambda);

struct DSquaredReport {
  std::size_t checked = 0;
  std::size_t boundary_squares = 0;
  // Simple-root doubles rely on X^r = 0 and are only counted.
  std::size_t simple_doubles = 0;
  std::vector<CommutingSquare> violations;
};

DSquaredReport verify_d_squared(const Orbit& orb, int gamma_bound, const SignAssignment& signs,
                                KappaSource src = KappaSource::SigmaLambda);

// Edge classes of the four edges of a square, in the order
// (lambda, alpha), (lambda^alpha, beta), (lambda, alpha'), (lambda^alpha', beta').
std::vector<EdgeKey> square_edges(const Orbit& orb, const CommutingSquare& sq, const Lattice& lat);

std::string to_string(const EdgeKey& k);

}  // namespace dws::orbit
