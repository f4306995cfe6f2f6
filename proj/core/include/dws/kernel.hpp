#pragma once

#include "dws/elliptic.hpp"
#include "dws/orbit.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace dws::kernel {

using star::Algebra;
using star::cplx;
using star::EllipticFunction;
using star::Kappa;

// Parameters of the screening kernel attached to an admissible edge.
struct ScreeningSpec {
  orbit::Root alpha;
  int a = 0;               // m_alpha(lambda)
  std::vector<int> k;      // k_j = (lambda, alpha_{i..i+j-1}) - 1, j = 1..|alpha|-1
  std::vector<int> pihat;  // (1 - r)(lambda, alpha_j) for every simple root
};

// Throws std::domain_error when (lambda, alpha) is not an admissible edge.
ScreeningSpec screening_spec(const orbit::Orbit& orb, const orbit::OrbitPoint& p, orbit::Root alpha);
Kappa kappa_of(const ScreeningSpec& s);
// f^{(a)}_alpha; ascending selects the second symmetrized form.
EllipticFunction screening_kernel(const Algebra& alg, const ScreeningSpec& s, bool ascending = false);

struct CheckRecord {
  std::string name;
  double value = 0.0;  // residual or |f| / scale
  double tol = 0.0;
  int instances = 0;   // loci or samples tested; 0 means vacuous
  bool pass = true;
};

struct ZeroReport {
  std::vector<CheckRecord> cases;  // (i), (ii), (iii), (iv-shift), (iv-holomorphy)
  bool condition_c = true;         // (gamma, gamma)/2 == sum a_i pihat_i mod r
  bool pass() const;
};

ZeroReport verify_zeros(const Algebra& alg, const ScreeningSpec& s, std::uint64_t seed, double zero_tol = 1e-9,
                        double shift_tol = 1e-8);

struct MembershipReport {
  std::vector<CheckRecord> checks;  // P1 (informational), P2, P3r, P3tau, P4, P5
  bool pass() const;
};

// gamma is the function's type; pihat supplies both the evaluation zero modes
// and the multiplier law.
MembershipReport membership_check(const EllipticFunction& f, const Kappa& pihat, int r, std::uint64_t seed,
                                  double tol = 1e-8);

struct SignExtractionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ExtractedSign {
  int sign = 0;
  cplx ratio{0.0, 0.0};
  double deviation = 0.0;  // max |ratio - sign| over samples
  int variables = 0;
};

// Numerical sign relating the two compositions of a commuting square.
ExtractedSign extract_sign(const Algebra& alg, const orbit::Orbit& orb, const orbit::CommutingSquare& sq,
                           std::uint64_t seed, int samples = 3);
// Total variable count of one side of the square identity.
int square_variables(const orbit::Orbit& orb, const orbit::CommutingSquare& sq);

}  // namespace dws::kernel
