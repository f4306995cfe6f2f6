#pragma once

#include <complex>
#include <stdexcept>

namespace dws::theta {

using cplx = std::complex<double>;
using xcplx = std::complex<long double>;

struct ThetaParams {
  double x = 0.5;
  int r = 6;
  int N = 40;

  void validate() const;
  double log_x() const;
  double q() const;  // x^{2r}
  cplx tau() const;  // pi i / log x
};

struct PoleError : std::domain_error {
  using std::domain_error::domain_error;
};

// Partial product prod_{i<N} (1 - z q^i); stops early once the remaining
// factors are 1 to double precision.
cplx qpoch(cplx z, cplx q, int N);

// Theta_q(z) = (z;q)(q/z;q)(q;q)
cplx theta_q(cplx z, double q, int N);

// [u]. Reduces Re u into [-r/2, r/2) with [u + r] = -[u] first.
cplx theta(cplx u, const ThetaParams& p);
// [u] in extended precision, for the cancelling sums of the *-product.
xcplx theta_ext(xcplx u, const ThetaParams& p);
// [u] from the product formula with no reduction.
cplx theta_direct(cplx u, const ThetaParams& p);
// [[z]] with u = log z / (2 log x), principal branch.
cplx theta_z(cplx z, const ThetaParams& p);

struct ThetaValue {
  cplx value;
  double tail_bound;  // relative size of the first omitted factor term
};
ThetaValue theta_value(cplx u, const ThetaParams& p);

cplx coupling_s(cplx z, const ThetaParams& p);
cplx coupling_t(cplx z, const ThetaParams& p);
cplx coupling_tau(cplx z, int j, const ThetaParams& p);
cplx coupling_tau_hat(cplx z, int j, const ThetaParams& p);

struct Couplings {
  cplx s, t, tau, tau_hat;
};
Couplings couplings(cplx z, int j, const ThetaParams& p);

// (x^{2(r-1)}; x^{2r}) / (x^{2r}; x^{2r})
double residue_const(const ThetaParams& p);

}  // namespace dws::theta
