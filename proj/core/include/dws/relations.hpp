#pragma once

#include "dws/elliptic.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace dws::star {

// Shape parameters shared by the quadratic relations. k holds k_1, k_2, ...
// (k[0] is k_1) and must be long enough for the relation; i is zero-based.
struct RelationParams {
  int i = 0;
  int l = 0;
  int m = 1;
  int p = 1;
  int a = 1;
  int b = 1;
  std::vector<int> k;

  std::string describe() const;
};

// Adds one to parameter slot `slot` of the `factor`-th non-trivial factor
// built for the relation (counting left to right, LHS before RHS).
struct KPerturbation {
  int factor = 0;
  int slot = 0;
};

struct RelationInstance {
  std::string relation;
  RelationParams params;
  EllipticFunction lhs;
  EllipticFunction rhs;
  // Number of non-trivial factors and their k-slot counts, for perturbation sweeps.
  std::vector<int> factor_slots;
  bool perturbed = false;
};

const std::vector<std::string>& relation_names();
bool is_relation(const std::string& name);

// Throws std::invalid_argument for unknown names or out-of-range shapes.
RelationInstance build_relation(const Algebra& alg, const std::string& name, const RelationParams& p,
                                const std::optional<KPerturbation>& perturb = std::nullopt);

struct GridLimits {
  int max_ab = 4;     // a + b
  int max_len = 2;    // l, m, p
  int max_vars = 8;   // total variables per side
  int k_range = 3;    // k drawn from [-k_range, k_range]
  int k_draws = 3;    // random k vectors per shape and start
};

// All supported shapes of a relation at rank n, with seeded k values.
std::vector<RelationParams> relation_grid(const std::string& name, int n, std::uint64_t seed,
                                          const GridLimits& lim = {});

}  // namespace dws::star
