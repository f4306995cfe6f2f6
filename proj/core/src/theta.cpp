#include "dws/theta.hpp"

#include <cmath>
#include <limits>

namespace dws::theta {

namespace {
constexpr double kPoleEps = 1e-14;
}

void ThetaParams::validate() const {
  if (!(x > 0.0 && x < 1.0)) throw std::invalid_argument("x must lie in (0, 1)");
  if (r < 2) throw std::invalid_argument("r must be at least 2");
  if (N < 1) throw std::invalid_argument("truncation depth must be positive");
}

double ThetaParams::log_x() const { return std::log(x); }

double ThetaParams::q() const { return std::pow(x, 2.0 * r); }

cplx ThetaParams::tau() const { return cplx(0.0, M_PI / log_x()); }

namespace {

template <class T>
std::complex<T> qpoch_t(std::complex<T> z, std::complex<T> q, int N) {
  if (std::abs(q) >= T(1)) throw std::invalid_argument("qpoch requires |q| < 1");
  std::complex<T> prod = T(1);
  std::complex<T> term = z;
  for (int i = 0; i < N; ++i) {
    if (std::abs(term) < std::numeric_limits<T>::epsilon() * T(1e-2)) break;
    prod *= (T(1) - term);
    term *= q;
  }
  return prod;
}

template <class T>
std::complex<T> theta_direct_t(std::complex<T> u, const ThetaParams& p) {
  const T lx = std::log(T(p.x));
  const T q = std::pow(T(p.x), T(2 * p.r));
  const std::complex<T> pref = std::exp((u * u / T(p.r) - u) * lx);
  const std::complex<T> z = std::exp(T(2) * u * lx);
  const std::complex<T> qc(q);
  return pref * qpoch_t(z, qc, p.N) * qpoch_t(qc / z, qc, p.N) * qpoch_t(qc, qc, p.N);
}

template <class T>
std::complex<T> theta_t(std::complex<T> u, const ThetaParams& p) {
  const T r = p.r;
  const T shift = std::floor((u.real() + r / T(2)) / r);
  const std::complex<T> v = theta_direct_t(u - shift * r, p);
  return std::fmod(std::fabs(shift), T(2)) == T(1) ? -v : v;
}

}  // namespace

cplx qpoch(cplx z, cplx q, int N) { return qpoch_t(z, q, N); }

cplx theta_q(cplx z, double q, int N) { return qpoch(z, q, N) * qpoch(q / z, q, N) * qpoch(q, q, N); }

cplx theta_direct(cplx u, const ThetaParams& p) { return theta_direct_t(u, p); }

cplx theta(cplx u, const ThetaParams& p) { return theta_t(u, p); }

xcplx theta_ext(xcplx u, const ThetaParams& p) { return theta_t(u, p); }

cplx theta_z(cplx z, const ThetaParams& p) { return theta(std::log(z) / (2.0 * p.log_x()), p); }

ThetaValue theta_value(cplx u, const ThetaParams& p) {
  return {theta(u, p), std::pow(p.q(), p.N) * std::pow(p.x, -double(p.r))};
}

static cplx checked_div(cplx num, cplx den, const char* what) {
  if (std::abs(den) < kPoleEps * std::max(1.0, std::abs(num))) throw PoleError(what);
  return num / den;
}

cplx coupling_s(cplx z, const ThetaParams& p) {
  const double x = p.x, q = p.q();
  return checked_div(qpoch(std::pow(x, 2 * p.r - 1) * z, q, p.N), qpoch(x * z, q, p.N), "pole of s(z)");
}

cplx coupling_t(cplx z, const ThetaParams& p) {
  const double x = p.x, q = p.q();
  return checked_div((1.0 - z) * qpoch(x * x * z, q, p.N), qpoch(std::pow(x, 2 * p.r - 2) * z, q, p.N),
                     "pole of t(z)");
}

cplx coupling_tau(cplx z, int j, const ThetaParams& p) {
  const double x = p.x;
  return checked_div(1.0 - z * std::pow(x, p.r + j - 2), 1.0 - z * std::pow(x, j - p.r), "pole of tau_j(z)");
}

cplx coupling_tau_hat(cplx z, int j, const ThetaParams& p) {
  const double x = p.x;
  return checked_div(1.0 - z * std::pow(x, p.r - j - 2), 1.0 - z * std::pow(x, -p.r - j), "pole of tau_hat_j(z)");
}

Couplings couplings(cplx z, int j, const ThetaParams& p) {
  return {coupling_s(z, p), coupling_t(z, p), coupling_tau(z, j, p), coupling_tau_hat(z, j, p)};
}

double residue_const(const ThetaParams& p) {
  const double q = p.q();
  return (qpoch(std::pow(p.x, 2 * (p.r - 1)), q, p.N) / qpoch(q, q, p.N)).real();
}

}  // namespace dws::theta
