#include "dws/sampling.hpp"

#include <algorithm>
#include <cmath>

namespace dws::star {

namespace {

double distance_to_lattice(cplx d, int r) {
  double re = std::remainder(d.real(), double(r));
  return std::hypot(re, d.imag());
}

}  // namespace

Vars random_point(const FuncType& type, std::mt19937_64& rng, const SampleBox& box) {
  std::uniform_real_distribution<double> re(0.0, double(box.r));
  std::uniform_real_distribution<double> im(-box.im_half_width, box.im_half_width);
  Vars v(type.size());
  for (std::size_t j = 0; j < type.size(); ++j)
    for (int a = 0; a < type[j]; ++a) {
      double x = re(rng);
      double y = im(rng);
      v[j].emplace_back(x, y);
    }
  return v;
}

Kappa random_kappa(int groups, std::mt19937_64& rng, const SampleBox& box) {
  std::uniform_real_distribution<double> re(0.0, double(box.r));
  std::uniform_real_distribution<double> im(-box.kappa_im_half_width, box.kappa_im_half_width);
  Kappa k;
  for (int j = 0; j < groups; ++j) {
    double x = re(rng);
    double y = im(rng);
    k.emplace_back(x, y);
  }
  return k;
}

bool well_separated(const Vars& v, const SampleBox& box) {
  for (std::size_t j = 0; j < v.size(); ++j) {
    for (std::size_t a = 0; a < v[j].size(); ++a) {
      for (std::size_t b = a + 1; b < v[j].size(); ++b)
        if (distance_to_lattice(v[j][a] - v[j][b], box.r) < box.guard) return false;
      if (j + 1 < v.size())
        for (cplx w : v[j + 1])
          if (distance_to_lattice(v[j][a] - w, box.r) < box.guard) return false;
    }
  }
  return true;
}

double relative_difference(cplx a, cplx b) {
  double scale = std::max(std::abs(a), std::abs(b));
  if (scale == 0.0) return 0.0;
  return std::abs(a - b) / scale;
}

Residual compare(const EllipticFunction& lhs, const EllipticFunction& rhs, int points, std::uint64_t seed,
                 const SampleBox& box, const std::optional<Kappa>& kappa) {
  if (lhs.type() != rhs.type())
    throw std::invalid_argument("compare: types differ " + type_string(lhs.type()) + " vs " +
                                type_string(rhs.type()));
  std::mt19937_64 rng(seed);
  Residual res;
  const int max_attempts = 50 * std::max(points, 1);
  int attempts = 0;
  while (res.points < points) {
    if (++attempts > max_attempts) throw SamplingError("could not draw enough well-separated points");
    Vars v = random_point(lhs.type(), rng, box);
    Kappa k = kappa ? *kappa : random_kappa(lhs.groups(), rng, box);
    if (!well_separated(v, box)) {
      ++res.rejected;
      continue;
    }
    cplx a = lhs(v, k);
    cplx b = rhs(v, k);
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag()) || !std::isfinite(b.real()) ||
        !std::isfinite(b.imag())) {
      ++res.rejected;
      continue;
    }
    double d = relative_difference(a, b);
    if (d >= res.max_rel) {
      res.max_rel = d;
      res.worst_lhs = a;
      res.worst_rhs = b;
    }
    ++res.points;
  }
  return res;
}

}  // namespace dws::star
