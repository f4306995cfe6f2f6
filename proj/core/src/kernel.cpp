#include "dws/kernel.hpp"

#include "dws/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace dws::kernel {

using star::FuncType;
using star::Vars;

namespace {

constexpr double kTwoPi = 6.283185307179586;

int type_pairing(const FuncType& t, int i) {
  int v = 2 * t[i];
  if (i > 0) v -= t[i - 1];
  if (i + 1 < static_cast<int>(t.size())) v -= t[i + 1];
  return v;
}

double ratio_residual(cplx a, cplx b) { return star::relative_difference(a, b); }

Vars draw(const FuncType& t, std::mt19937_64& rng, int r) {
  star::SampleBox box;
  box.r = r;
  for (int attempt = 0; attempt < 1000; ++attempt) {
    Vars v = star::random_point(t, rng, box);
    if (star::well_separated(v, box)) return v;
  }
  throw star::SamplingError("could not draw a well-separated point");
}

CheckRecord make(const std::string& name, double tol) {
  CheckRecord c;
  c.name = name;
  c.tol = tol;
  return c;
}

void record(CheckRecord& c, double v) {
  c.value = std::max(c.value, v);
  ++c.instances;
  c.pass = c.value < c.tol;
}

// Growth of |f| as a pair of variables approaches coincidence: ~1 for a
// regular point, ~100 for a simple pole, ~1e4 for a double pole.
double approach_growth(const EllipticFunction& f, Vars v, const Kappa& kap, int g1, int b1, int g2, int b2,
                       cplx dir) {
  auto at = [&](double eps) {
    Vars w = v;
    w[g1][b1] = w[g2][b2] + eps * dir;
    return std::abs(f(w, kap));
  };
  double far = at(1e-5), near = at(1e-7);
  if (far == 0.0) return near == 0.0 ? 1.0 : INFINITY;
  return near / far;
}

}  // namespace

ScreeningSpec screening_spec(const orbit::Orbit& orb, const orbit::OrbitPoint& p, orbit::Root alpha) {
  if (!orb.is_admissible(p, alpha))
    throw std::domain_error("screening_spec: edge " + rootsys::to_string(alpha) + " at " + orbit::to_string(p) +
                            " is not admissible");
  ScreeningSpec s;
  s.alpha = alpha;
  s.a = orb.m_alpha(p, alpha);
  for (int t = 1; t < alpha.height(); ++t) s.k.push_back(orb.pairing(p, orbit::Root{alpha.i, alpha.i + t}) - 1);
  for (int j = 0; j + 1 < orb.n(); ++j) s.pihat.push_back((1 - orb.r()) * orb.pairing(p, orbit::Root{j, j + 1}));
  return s;
}

Kappa kappa_of(const ScreeningSpec& s) {
  Kappa k;
  for (int v : s.pihat) k.emplace_back(double(v), 0.0);
  return k;
}

EllipticFunction screening_kernel(const Algebra& alg, const ScreeningSpec& s, bool ascending) {
  if (static_cast<int>(s.pihat.size()) != alg.groups()) throw std::invalid_argument("screening_kernel: rank mismatch");
  return alg.power(s.a, s.alpha.i, s.alpha.height() - 1, s.k, ascending);
}

bool ZeroReport::pass() const {
  return condition_c && std::all_of(cases.begin(), cases.end(), [](const CheckRecord& c) { return c.pass; });
}

ZeroReport verify_zeros(const Algebra& alg, const ScreeningSpec& s, std::uint64_t seed, double zero_tol,
                        double shift_tol) {
  const int r = alg.theta_params().r;
  const EllipticFunction f = screening_kernel(alg, s);
  const Kappa kap = kappa_of(s);
  const FuncType& t = f.type();
  const int i0 = s.alpha.i, i1 = s.alpha.j - 1;
  const int a = s.a;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uni(0.0, 1.0);

  ZeroReport rep;
  {
    long long gg = 1LL * a * a;
    long long sum = 0;
    for (int j = i0; j <= i1; ++j) sum += 1LL * a * s.pihat[j];
    rep.condition_c = ((gg - sum) % r + r) % r == 0;
  }

  auto scaled = [&](const Vars& on, const Vars& off) {
    double scale = std::abs(f(off, kap));
    return std::abs(f(on, kap)) / std::max(scale, 1e-300);
  };

  CheckRecord c1 = make("(i)", zero_tol);
  for (int j = i0; j <= i1; ++j)
    for (int b = 0; b < a; ++b) {
      Vars v = draw(t, rng, r);
      Vars on = v;
      on[j][b] = 0.5;
      record(c1, scaled(on, v));
    }
  rep.cases.push_back(c1);

  CheckRecord c2 = make("(ii)", zero_tol);
  CheckRecord c3 = make("(iii)", zero_tol);
  if (a >= 2) {
    for (int j = i0; j < i1; ++j) {
      Vars v = draw(t, rng, r);
      cplx z(uni(rng) * r, uni(rng) - 0.5);
      Vars on = v;
      on[j][0] = z;
      on[j + 1][0] = z + 0.5;
      on[j + 1][1] = z - 0.5;
      record(c2, scaled(on, v));

      Vars w = draw(t, rng, r);
      Vars on3 = w;
      on3[j][0] = z + 0.5;
      on3[j][1] = z - 0.5;
      on3[j + 1][0] = z;
      record(c3, scaled(on3, w));
    }
  }
  rep.cases.push_back(c2);
  rep.cases.push_back(c3);

  CheckRecord c4 = make("(iv) shift", shift_tol);
  auto reduced = [&](const Vars& v) {
    cplx den = 1.0;
    for (const auto& g : v)
      for (cplx u : g) den *= alg.th(u - 0.5);
    return f(v, kap) / den;
  };
  {
    Vars v = draw(t, rng, r);
    const cplx base = reduced(v);
    for (int s2 = 0; s2 < 5; ++s2) {
      cplx c(uni(rng) * r, 0.4 * (uni(rng) - 0.5));
      Vars w = v;
      for (auto& g : w)
        for (cplx& u : g) u += c;
      record(c4, ratio_residual(reduced(w), base));
    }
  }
  rep.cases.push_back(c4);

  CheckRecord c5 = make("(iv) holomorphy", 10.0);
  for (int j = i0; j < i1; ++j) {
    Vars v = draw(t, rng, r);
    auto g = [&](const Vars& w) {
      cplx val = f(w, kap);
      for (int jj = i0; jj < i1; ++jj)
        for (cplx x : w[jj])
          for (cplx y : w[jj + 1]) val *= alg.th(x - y);
      return val;
    };
    auto at = [&](double eps) {
      Vars w = v;
      w[j][0] = w[j + 1][0] + eps * cplx(0.6, 0.8);
      return std::abs(g(w));
    };
    double far = at(1e-5), near = at(1e-7);
    double scale = std::abs(g(v));
    // The product must stay finite: no growth as the pair collides.
    record(c5, far > 1e-12 * scale ? near / far : 0.0);
  }
  rep.cases.push_back(c5);
  return rep;
}

bool MembershipReport::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckRecord& c) { return c.pass; });
}

MembershipReport membership_check(const EllipticFunction& f, const Kappa& pihat, int r, std::uint64_t seed,
                                  double tol) {
  const FuncType& t = f.type();
  const auto& tp = f.algebra().theta_params();
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  MembershipReport rep;

  CheckRecord p1 = make("P1", INFINITY);
  {
    Vars v = draw(t, rng, r);
    cplx z = f(v, pihat);
    record(p1, std::isfinite(std::abs(z)) ? 0.0 : INFINITY);
  }
  rep.checks.push_back(p1);

  CheckRecord p2 = make("P2", tol);
  for (std::size_t j = 0; j < t.size(); ++j) {
    if (t[j] < 2) continue;
    for (int s = 0; s < 3; ++s) {
      Vars v = draw(t, rng, r);
      Vars w = v;
      int b = static_cast<int>(uni(rng) * t[j]) % t[j];
      int c = (b + 1 + static_cast<int>(uni(rng) * (t[j] - 1))) % t[j];
      std::swap(w[j][b], w[j][c]);
      record(p2, ratio_residual(f(v, pihat), f(w, pihat)));
    }
  }
  rep.checks.push_back(p2);

  CheckRecord p3r = make("P3 r-shift", tol);
  CheckRecord p3t = make("P3 tau-shift", tol);
  const cplx tau = tp.tau();
  const cplx I(0.0, 1.0);
  for (std::size_t j = 0; j < t.size(); ++j) {
    for (int b = 0; b < t[j]; ++b) {
      Vars v = draw(t, rng, r);
      cplx base = f(v, pihat);
      Vars w = v;
      w[j][b] += double(r);
      record(p3r, ratio_residual(f(w, pihat), -base));

      Vars x = v;
      x[j][b] += tau;
      const cplx u = v[j][b];
      const double gpair = type_pairing(t, static_cast<int>(j));
      cplx mult = -std::exp(kTwoPi * I * (u + tau / 2.0 + (gpair - 1.0) / 2.0 - pihat[j]) / double(r));
      record(p3t, ratio_residual(f(x, pihat), mult * base));
    }
  }
  rep.checks.push_back(p3r);
  rep.checks.push_back(p3t);

  // Same-group collisions must be regular; adjacent-group collisions at most simple poles.
  CheckRecord p4 = make("P4", 1.0);
  for (std::size_t j = 0; j < t.size(); ++j) {
    if (t[j] >= 2) {
      Vars v = draw(t, rng, r);
      double g = approach_growth(f, v, pihat, j, 0, j, 1, cplx(0.6, 0.8));
      record(p4, g / 10.0);
    }
    if (j + 1 < t.size() && t[j] >= 1 && t[j + 1] >= 1) {
      Vars v = draw(t, rng, r);
      double g = approach_growth(f, v, pihat, j, 0, j + 1, 0, cplx(0.8, -0.6));
      record(p4, g / 1000.0);
    }
  }
  rep.checks.push_back(p4);

  CheckRecord p5 = make("P5", tol);
  for (std::size_t j = 0; j + 1 < t.size(); ++j) {
    for (int mirror = 0; mirror < 2; ++mirror) {
      const std::size_t lo = mirror ? j + 1 : j, hi = mirror ? j : j + 1;
      if (t[lo] < 1 || t[hi] < 2) continue;
      Vars v = draw(t, rng, r);
      cplx z(uni(rng) * r, uni(rng) - 0.5);
      Vars on = v;
      on[lo][0] = z;
      on[hi][0] = z + 0.5;
      on[hi][1] = z - 0.5;
      Vars off = on;
      off[hi][1] += cplx(0.3, 0.1);
      double scale = std::abs(f(off, pihat));
      record(p5, std::abs(f(on, pihat)) / std::max(scale, 1e-300));
    }
  }
  rep.checks.push_back(p5);
  return rep;
}

int square_variables(const orbit::Orbit& orb, const orbit::CommutingSquare& sq) {
  orbit::OrbitPoint q = orb.lambda_alpha(sq.lambda, sq.alpha);
  return orb.m_alpha(sq.lambda, sq.alpha) * sq.alpha.height() + orb.m_alpha(q, sq.beta) * sq.beta.height();
}

ExtractedSign extract_sign(const Algebra& alg, const orbit::Orbit& orb, const orbit::CommutingSquare& sq,
                           std::uint64_t seed, int samples) {
  if (alg.theta_params().r != orb.r()) throw std::invalid_argument("extract_sign: level mismatch");
  if (alg.n() != orb.n()) throw std::invalid_argument("extract_sign: rank mismatch");
  const orbit::OrbitPoint q = orb.lambda_alpha(sq.lambda, sq.alpha);
  const orbit::OrbitPoint q2 = orb.lambda_alpha(sq.lambda, sq.alpha2);
  const ScreeningSpec sa = screening_spec(orb, sq.lambda, sq.alpha);
  const ScreeningSpec sb = screening_spec(orb, q, sq.beta);
  const ScreeningSpec sa2 = screening_spec(orb, sq.lambda, sq.alpha2);
  const ScreeningSpec sb2 = screening_spec(orb, q2, sq.beta2);
  const EllipticFunction lhs = alg.star(screening_kernel(alg, sb), screening_kernel(alg, sa));
  const EllipticFunction rhs = alg.star(screening_kernel(alg, sb2), screening_kernel(alg, sa2));
  if (lhs.type() != rhs.type()) throw std::logic_error("extract_sign: the two compositions have different types");
  const Kappa kap = kappa_of(sa);

  std::mt19937_64 rng(seed);
  ExtractedSign out;
  out.variables = lhs.total();
  for (int s = 0; s < samples; ++s) {
    Vars v = draw(lhs.type(), rng, orb.r());
    cplx ratio = lhs(v, kap) / rhs(v, kap);
    if (s == 0) {
      out.ratio = ratio;
      out.sign = ratio.real() >= 0.0 ? 1 : -1;
    }
    out.deviation = std::max(out.deviation, std::abs(ratio - double(out.sign)));
  }
  if (!(out.deviation <= 1e-6))
    throw SignExtractionError("extract_sign: ratio " + std::to_string(out.ratio.real()) + "+" +
                              std::to_string(out.ratio.imag()) + "i is not +-1 for square at " +
                              orbit::to_string(sq.lambda));
  return out;
}

}  // namespace dws::kernel
