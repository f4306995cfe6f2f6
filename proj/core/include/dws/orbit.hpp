#pragma once

#include "dws/rootsys.hpp"

#include <optional>
#include <string>
#include <vector>

namespace dws::orbit {

using rootsys::Permutation;
using rootsys::Root;
using rootsys::RootVec;
using rootsys::WeightVec;

struct OrbitConfig {
  int n = 3;
  int r = 6;
  std::vector<int> lambda_omega{2, 1};

  // Throws std::invalid_argument unless r >= n + 2 and lambda is strictly
  // dominant with (lambda, theta) < r.
  void validate() const;
};

struct OrbitPoint {
  Permutation sigma;
  RootVec gamma;

  auto operator<=>(const OrbitPoint&) const = default;
};

struct Window {
  int gamma_bound = 2;
  std::optional<int> degree_min;
  std::optional<int> degree_max;
};

// Which pairing defines kappa_alpha in the signature formulas.
enum class KappaSource { SigmaLambda, Weight };

class Orbit {
 public:
  explicit Orbit(OrbitConfig cfg);

  const OrbitConfig& config() const { return cfg_; }
  int n() const { return cfg_.n; }
  int r() const { return cfg_.r; }
  const WeightVec& lambda() const { return lambda_; }

  OrbitPoint base_point() const;
  WeightVec weight(const OrbitPoint& p) const;
  int degree(const OrbitPoint& p) const;
  // (sigma Lambda, alpha)
  int sigma_pairing(const Permutation& sigma, Root a) const;
  // (lambda, alpha) with lambda the full weight
  int pairing(const OrbitPoint& p, Root a) const;

  int m_alpha(const OrbitPoint& p, Root a) const;
  OrbitPoint lambda_alpha(const OrbitPoint& p, Root a) const;
  bool is_admissible(const OrbitPoint& p, Root a) const;
  bool admissible_by_degree(const OrbitPoint& p, Root a) const;
  int kappa(const OrbitPoint& p, Root a) const;
  int kappa(const OrbitPoint& p, Root a, KappaSource src) const;

  std::vector<OrbitPoint> enumerate(const Window& w) const;
  bool in_box(const OrbitPoint& p, int gamma_bound) const;

 private:
  void check(const OrbitPoint& p, Root a) const;

  OrbitConfig cfg_;
  WeightVec lambda_;
};

enum class CaseTag { Orthogonal, APlus, BPlus, CPlus, DPlus, AMinus, BMinus, CMinus, DMinus };

std::string to_string(CaseTag t);
CaseTag partner_tag(CaseTag t);

struct Partner {
  Root alpha2;
  Root beta2;
  CaseTag tag;
};

// Throws std::domain_error for non-admissible chains and for the
// simple-root double (alpha, beta) = 2.
Partner partner_square(const Orbit& orb, const OrbitPoint& p, Root alpha, Root beta);

struct CommutingSquare {
  OrbitPoint lambda;
  Root alpha, beta;
  Root alpha2, beta2;
  CaseTag tag = CaseTag::Orthogonal;
  int signature = 1;
};

int epsilon_r(int r);
int signature(const Orbit& orb, const OrbitPoint& p, Root alpha, Root beta, const Partner& partner,
              KappaSource src = KappaSource::SigmaLambda);
CommutingSquare make_square(const Orbit& orb, const OrbitPoint& p, Root alpha, Root beta,
                            KappaSource src = KappaSource::SigmaLambda);

// Every admissible 2-chain starting at a point of the box whose four corners
// stay inside the box; chains leaving the box are counted in *boundary.
std::vector<CommutingSquare> squares_in_box(const Orbit& orb, int gamma_bound, KappaSource src,
                                            std::size_t* boundary = nullptr,
                                            std::size_t* simple_doubles = nullptr);

std::string to_string(const OrbitPoint& p);

}  // namespace dws::orbit
