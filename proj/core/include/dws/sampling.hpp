#pragma once

#include "dws/elliptic.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>

namespace dws::star {

struct SamplingError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SampleBox {
  int r = 6;
  double im_half_width = 0.6;
  double kappa_im_half_width = 0.3;
  // Minimum distance of any same- or adjacent-group difference from r Z.
  double guard = 1e-3;
};

Vars random_point(const FuncType& type, std::mt19937_64& rng, const SampleBox& box);
Kappa random_kappa(int groups, std::mt19937_64& rng, const SampleBox& box);
// True when no same-group or adjacent-group pair sits within the guard of a
// pole [u - v] = 0 of the cross factors.
bool well_separated(const Vars& v, const SampleBox& box);

struct Residual {
  double max_rel = 0.0;
  int points = 0;
  int rejected = 0;
  cplx worst_lhs{0.0, 0.0};
  cplx worst_rhs{0.0, 0.0};
};

// Relative residual |L - R| / max(|L|, |R|) maximized over seeded points.
// A fixed zero-mode vector is used when provided, otherwise one is drawn per
// point.
Residual compare(const EllipticFunction& lhs, const EllipticFunction& rhs, int points, std::uint64_t seed,
                 const SampleBox& box, const std::optional<Kappa>& kappa = std::nullopt);

double relative_difference(cplx a, cplx b);

}  // namespace dws::star
