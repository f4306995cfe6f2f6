#include "dws/suites.hpp"

#include "dws/elliptic.hpp"
#include "dws/kernel.hpp"
#include "dws/qshuffle.hpp"
#include "dws/relations.hpp"
#include "dws/sampling.hpp"
#include "dws/theta.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace dws::suites {

using orbit::Orbit;
using orbit::OrbitPoint;
using rootsys::Root;
using star::cplx;

namespace {

constexpr double kTwoPi = 6.283185307179586;

class Stopwatch {
 public:
  Stopwatch() : t0_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0_).count();
  }

 private:
  std::chrono::steady_clock::time_point t0_;
};

std::uint64_t mix(std::uint64_t seed, std::uint64_t salt) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (salt + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t salt_of(const std::string& s) { return std::hash<std::string>{}(s) & 0xffffffffULL; }

std::string join(const std::vector<int>& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ")";
  return os.str();
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

CaseRecord numeric(const std::string& id, const std::string& params, double residual, double tol) {
  CaseRecord c;
  c.id = id;
  c.params = params;
  c.kind = CaseKind::Numeric;
  c.residual = residual;
  c.tol = tol;
  c.pass = residual < tol;
  return c;
}

CaseRecord count(const std::string& id, const std::string& params, std::size_t bad) {
  CaseRecord c;
  c.id = id;
  c.params = params;
  c.kind = CaseKind::Count;
  c.residual = double(bad);
  c.tol = 0.0;
  c.pass = bad == 0;
  return c;
}

CaseRecord info(const std::string& id, const std::string& params) {
  CaseRecord c;
  c.id = id;
  c.params = params;
  c.kind = CaseKind::Info;
  return c;
}

// Relative residual with an absolute floor for values near a zero.
double rel(cplx a, cplx b, double floor = 1e-4) {
  return std::abs(a - b) / std::max({std::abs(a), std::abs(b), floor});
}

star::Algebra screening_algebra(const SuiteConfig& cfg) {
  return star::Algebra(cfg.n, theta::ThetaParams{cfg.x, cfg.r, cfg.trunc}, star::Convention::screening(cfg.r));
}

std::string point_string(const OrbitPoint& p) { return orbit::to_string(p); }

}  // namespace

void SuiteConfig::validate() const {
  rootsys::check_rank(n);
  orbit_config().validate();
  if (!(x >= 0.2 && x <= 0.8)) throw std::invalid_argument("x must lie in [0.2, 0.8]");
  if (!(tol > 0.0 && tol < 1.0)) throw std::invalid_argument("tolerance must lie in (0, 1)");
  if (trunc < 1) throw std::invalid_argument("truncation depth must be positive");
  if (window < 0) throw std::invalid_argument("window must be non-negative");
  if (points < 1) throw std::invalid_argument("points must be positive");
  if (!lattice.empty() && static_cast<int>(lattice.size()) != n - 1)
    throw std::invalid_argument("lattice needs n - 1 periods");
  for (int p : lattice)
    if (p < 0) throw std::invalid_argument("lattice periods must be non-negative");
  for (const auto& rname : relations)
    if (!star::is_relation(rname)) throw std::invalid_argument("unknown relation: " + rname);
  if (!std::isfinite(delta)) throw std::invalid_argument("delta must be finite");
}

orbit::OrbitConfig SuiteConfig::orbit_config() const { return orbit::OrbitConfig{n, r, lambda}; }

bool SuiteReport::pass() const { return failures() == 0; }

std::size_t SuiteReport::failures() const {
  return std::count_if(cases.begin(), cases.end(), [](const CaseRecord& c) { return !c.pass; });
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"theta", "star", "zeros", "membership", "signs-cross", "qshuffle"};
  return names;
}

// ---------------------------------------------------------------- theta

SuiteReport theta_suite(const SuiteConfig& cfg) {
  Stopwatch sw;
  SuiteReport rep;
  rep.suite = "theta";
  std::vector<std::pair<double, int>> grid;
  for (double x : {0.3, 0.5, 0.7})
    for (int r : {5, 7}) grid.emplace_back(x, r);
  if (std::find(grid.begin(), grid.end(), std::make_pair(cfg.x, cfg.r)) == grid.end()) grid.emplace_back(cfg.x, cfg.r);

  const cplx I(0.0, 1.0);
  for (auto [x, r] : grid) {
    theta::ThetaParams tp{x, r, cfg.trunc};
    const std::string par = "x=" + fmt(x) + " r=" + std::to_string(r);
    std::mt19937_64 rng(mix(cfg.seed, salt_of(par)));
    std::uniform_real_distribution<double> re(-double(r), double(r)), im(-0.8, 0.8), ang(0.0, kTwoPi),
        rad(0.05, 1.5);
    double antiper = 0, odd = 0, tau = 0, zform = 0, tratio = 0, conv = 0;
    for (int s = 0; s < cfg.points; ++s) {
      cplx u(re(rng), im(rng));
      cplx th = theta::theta(u, tp);
      antiper = std::max(antiper, rel(theta::theta(u + double(r), tp), -th));
      odd = std::max(odd, rel(theta::theta(-u, tp), -th));
      cplx t = tp.tau();
      cplx mult = -std::exp(kTwoPi * I * (u + t / 2.0) / double(r));
      tau = std::max(tau, rel(theta::theta(u + t, tp), mult * th));
      cplx z = std::exp(2.0 * u * tp.log_x());
      zform = std::max(zform, rel(theta::theta_z(z * tp.q(), tp), -theta::theta_z(z, tp)));
      cplx w = std::polar(rad(rng), ang(rng));
      const double x2r = tp.q(), x2 = x * x, x2r2 = std::pow(x, 2 * (r - 1));
      cplx lhs = theta::coupling_t(x2r * w, tp) / theta::coupling_t(w, tp);
      cplx rhs = (1.0 - x2r2 * w) * (1.0 - x2r * w) / ((1.0 - w) * (1.0 - x2 * w));
      tratio = std::max(tratio, rel(lhs, rhs));
      theta::ThetaParams tp2 = tp;
      tp2.N = 2 * tp.N;
      auto tv = theta::theta_value(u, tp);
      double err = std::abs(theta::theta(u, tp2) - tv.value);
      conv = std::max(conv, err / std::max(std::abs(tv.value), 1e-300) - tv.tail_bound);
    }
    rep.cases.push_back(numeric("antiperiod [u+r]=-[u]", par, antiper, cfg.tol));
    rep.cases.push_back(numeric("odd [-u]=-[u]", par, odd, cfg.tol));
    rep.cases.push_back(numeric("tau multiplier", par, tau, cfg.tol));
    rep.cases.push_back(numeric("z-form [[x^{2r}z]]=-[[z]]", par, zform, cfg.tol));
    rep.cases.push_back(numeric("t-ratio", par, tratio, cfg.tol));
    rep.cases.push_back(numeric("truncation doubling", par, std::max(conv, 0.0), cfg.tol));

    // Residue of s(1/z)/z at z = x by the trapezoid rule on a small circle.
    const int M = 256;
    const double rho = x / 4.0;
    cplx acc = 0.0;
    for (int j = 0; j < M; ++j) {
      cplx e = std::polar(1.0, kTwoPi * j / M);
      cplx z = x + rho * e;
      acc += theta::coupling_s(1.0 / z, tp) / z * rho * e;
    }
    acc /= double(M);
    const double rc = theta::residue_const(tp);
    rep.cases.push_back(numeric("residue vs contour", par, rel(acc, rc), cfg.tol));
    const double alt = (theta::coupling_s(std::pow(x, 2 * r - 1), tp) * (1.0 - std::pow(x, 2 * (r - 1)))).real();
    rep.cases.push_back(numeric("residue vs s(x^{2r-1})", par, rel(alt, rc), cfg.tol));
  }
  rep.wall_seconds = sw.seconds();
  return rep;
}

// ---------------------------------------------------------------- star

namespace {

std::string x12_alias(const std::string& name, const star::RelationParams& p, int n) {
  if (n != 3 || p.i != 0) return "";
  if (name == "TCOM" && p.m == 1) return "a1";
  if ((name == "QR1" || name == "QR2") && p.l == 1 && p.m == 0) return "a2";
  if (name == "QR21" && p.m == 1) return "a3";
  if (name == "QR6" && p.m == 1) return "a4";
  if (name.rfind("CS", 0) == 0 && p.l == 0 && p.m == 1) return "b" + name.substr(2);
  return "";
}

}  // namespace

SuiteReport star_suite(const SuiteConfig& cfg) {
  Stopwatch sw;
  SuiteReport rep;
  rep.suite = "star";
  std::vector<double> deltas{cfg.delta};
  if (cfg.extra_delta) {
    std::mt19937_64 rng(mix(cfg.seed, 7));
    deltas.push_back(0.2 + 0.6 * std::uniform_real_distribution<double>(0.0, 1.0)(rng));
  }
  const std::vector<std::string> names = cfg.relations.empty() ? star::relation_names() : cfg.relations;
  star::SampleBox box;
  box.r = cfg.r;
  star::GridLimits lim;
  lim.max_vars = cfg.max_vars;
  std::size_t instances = 0;
  for (double delta : deltas) {
    star::Algebra alg(cfg.n, theta::ThetaParams{cfg.x, cfg.r, cfg.trunc}, star::Convention::deformed(delta));
    for (const auto& name : names) {
      auto grid = star::relation_grid(name, cfg.n, mix(cfg.seed, salt_of(name)), lim);
      if (grid.empty()) {
        rep.cases.push_back(info(name, "no supported shape at n=" + std::to_string(cfg.n)));
        continue;
      }
      for (std::size_t g = 0; g < grid.size(); ++g) {
        const auto& p = grid[g];
        auto inst = star::build_relation(alg, name, p);
        std::uint64_t s = mix(cfg.seed, salt_of(name) * 131 + g);
        CaseRecord c;
        try {
          auto res = star::compare(inst.lhs, inst.rhs, cfg.points, s, box);
          c = numeric(name, p.describe() + " delta=" + fmt(delta), res.max_rel, cfg.tol);
          c.extra["variables"] = std::to_string(inst.lhs.total());
          c.extra["rejected"] = std::to_string(res.rejected);
          c.extra["worst_abs"] = fmt(std::abs(res.worst_lhs));
          if (name == "FR3" || name == "FR4" || name == "REL3") {
            cplx ratio = res.worst_lhs / res.worst_rhs;
            c.extra["fitted_sign"] = std::abs(ratio - 1.0) < 1e-6 ? "1" : std::abs(ratio + 1.0) < 1e-6 ? "-1" : "0";
          }
        } catch (const star::SamplingError& e) {
          c = numeric(name, p.describe(), INFINITY, cfg.tol);
          c.extra["error"] = e.what();
        }
        if (auto al = x12_alias(name, p, cfg.n); !al.empty()) c.extra["x12"] = al;
        rep.cases.push_back(std::move(c));
        ++instances;
      }
    }
  }
  rep.summary["instances"] = std::to_string(instances);
  rep.summary["deltas"] = std::to_string(deltas.size());
  rep.wall_seconds = sw.seconds();
  return rep;
}

// ---------------------------------------------------------------- kernels

namespace {

struct KernelInstance {
  OrbitPoint point;
  kernel::ScreeningSpec spec;
};

std::vector<KernelInstance> small_kernels(const Orbit& orb, int bound, int max_a) {
  std::vector<KernelInstance> out;
  std::set<std::tuple<Root, int, std::vector<int>, std::vector<int>>> seen;
  for (const auto& p : orb.enumerate(orbit::Window{bound, std::nullopt, std::nullopt})) {
    for (Root a : rootsys::positive_roots(orb.n())) {
      if (!orb.is_admissible(p, a) || orb.m_alpha(p, a) > max_a) continue;
      auto s = kernel::screening_spec(orb, p, a);
      if (!seen.emplace(s.alpha, s.a, s.k, s.pihat).second) continue;
      out.push_back({p, s});
    }
  }
  return out;
}

std::string spec_string(const KernelInstance& k) {
  return point_string(k.point) + " alpha=" + rootsys::to_string(k.spec.alpha) + " a=" + std::to_string(k.spec.a) +
         " k=" + join(k.spec.k);
}

}  // namespace

SuiteReport zeros_suite(const SuiteConfig& cfg) {
  Stopwatch sw;
  SuiteReport rep;
  rep.suite = "zeros";
  Orbit orb(cfg.orbit_config());
  auto alg = screening_algebra(cfg);
  auto ks = small_kernels(orb, std::min(cfg.window, 1), 2);
  std::size_t idx = 0;
  for (const auto& k : ks) {
    auto z = kernel::verify_zeros(alg, k.spec, mix(cfg.seed, 1000 + idx++), 1e-9, cfg.tol);
    for (const auto& c : z.cases) {
      CaseRecord rec = c.instances == 0 ? info(c.name, spec_string(k) + " (vacuous)")
                                        : numeric(c.name, spec_string(k), c.value, c.tol);
      rec.extra["instances"] = std::to_string(c.instances);
      rep.cases.push_back(std::move(rec));
    }
    rep.cases.push_back(count("condition (eq:C)", spec_string(k), z.condition_c ? 0 : 1));
  }
  rep.summary["kernels"] = std::to_string(ks.size());
  rep.wall_seconds = sw.seconds();
  return rep;
}

SuiteReport membership_suite(const SuiteConfig& cfg) {
  Stopwatch sw;
  SuiteReport rep;
  rep.suite = "membership";
  auto alg = screening_algebra(cfg);
  std::mt19937_64 rng(mix(cfg.seed, 3));
  std::uniform_int_distribution<int> kd(-3, 3), pd(0, cfg.r - 1);
  auto push = [&](const std::string& what, const kernel::MembershipReport& m) {
    for (const auto& c : m.checks) {
      CaseRecord rec = (c.name == "P1" || c.instances == 0)
                           ? info(c.name, what + (c.instances == 0 ? " (vacuous)" : ""))
                           : numeric(c.name, what, c.value, c.tol);
      if (c.name == "P1") rec.pass = c.pass;
      rec.extra["instances"] = std::to_string(c.instances);
      rep.cases.push_back(std::move(rec));
    }
  };
  auto random_pihat = [&] {
    star::Kappa k;
    for (int j = 0; j < alg.groups(); ++j) k.emplace_back(double(pd(rng)), 0.0);
    return k;
  };
  std::size_t idx = 0;
  for (int m = 0; m <= 2; ++m)
    for (int i = 0; i + m < alg.groups(); ++i) {
      std::vector<int> k;
      for (int t = 0; t < m; ++t) k.push_back(kd(rng));
      auto f = alg.generator(i, m, k);
      auto ph = random_pihat();
      push("generator " + f.label(), kernel::membership_check(f, ph, cfg.r, mix(cfg.seed, 2000 + idx++), cfg.tol));
    }
  for (int i = 0; i + 1 < alg.groups(); ++i) {
    auto f = alg.star(alg.generator(i, 0, {}), alg.generator(i, 1, {kd(rng)}));
    auto g = alg.star(alg.generator(i, 1, {kd(rng)}), alg.generator(i + 1, 0, {}));
    auto ph = random_pihat();
    push("product " + f.label(), kernel::membership_check(f, ph, cfg.r, mix(cfg.seed, 2000 + idx++), cfg.tol));
    push("product " + g.label(), kernel::membership_check(g, ph, cfg.r, mix(cfg.seed, 2000 + idx++), cfg.tol));
  }
  Orbit orb(cfg.orbit_config());
  for (const auto& k : small_kernels(orb, 0, 2)) {
    auto f = kernel::screening_kernel(alg, k.spec);
    push("kernel " + spec_string(k),
         kernel::membership_check(f, kernel::kappa_of(k.spec), cfg.r, mix(cfg.seed, 2000 + idx++), cfg.tol));
  }
  rep.wall_seconds = sw.seconds();
  return rep;
}

// ---------------------------------------------------------------- signs

SuiteReport signs_cross_suite(const SuiteConfig& cfg) {
  Stopwatch sw;
  SuiteReport rep;
  rep.suite = "signs-cross";
  Orbit orb(cfg.orbit_config());
  auto alg = screening_algebra(cfg);
  const int bound = std::min(cfg.window, 1);
  auto squares = orbit::squares_in_box(orb, bound, orbit::KappaSource::SigmaLambda);
  std::size_t tested = 0, agree_sigma = 0, agree_weight = 0, zero_gamma = 0, agree_sigma_zero = 0, skipped = 0;
  std::size_t idx = 0;
  for (const auto& sq : squares) {
    if (kernel::square_variables(orb, sq) > cfg.max_sign_vars) {
      ++skipped;
      continue;
    }
    orbit::Partner pr{sq.alpha2, sq.beta2, sq.tag};
    const int s_sigma = sq.signature;
    const int s_weight = orbit::signature(orb, sq.lambda, sq.alpha, sq.beta, pr, orbit::KappaSource::Weight);
    const bool gamma0 = std::all_of(sq.lambda.gamma.begin(), sq.lambda.gamma.end(), [](int c) { return c == 0; });
    const std::string par = point_string(sq.lambda) + " alpha=" + rootsys::to_string(sq.alpha) +
                            " beta=" + rootsys::to_string(sq.beta) + " tag=" + orbit::to_string(sq.tag);
    CaseRecord c;
    try {
      auto ex = kernel::extract_sign(alg, orb, sq, mix(cfg.seed, 3000 + idx++));
      ++tested;
      agree_sigma += ex.sign == s_sigma;
      agree_weight += ex.sign == s_weight;
      if (gamma0) {
        ++zero_gamma;
        agree_sigma_zero += ex.sign == s_sigma;
      }
      c = count("square", par, (ex.sign != s_weight) + (gamma0 && ex.sign != s_sigma));
      c.extra["extracted"] = std::to_string(ex.sign);
      c.extra["formula_sigma_lambda"] = std::to_string(s_sigma);
      c.extra["formula_weight"] = std::to_string(s_weight);
      c.extra["deviation"] = fmt(ex.deviation);
    } catch (const std::exception& e) {
      c = count("square", par, 1);
      c.extra["error"] = e.what();
    }
    rep.cases.push_back(std::move(c));
  }
  rep.summary["squares_tested"] = std::to_string(tested);
  rep.summary["squares_skipped_size"] = std::to_string(skipped);
  rep.summary["agree_sigma_lambda_form"] = std::to_string(agree_sigma);
  rep.summary["agree_weight_form"] = std::to_string(agree_weight);
  rep.summary["gamma_zero_squares"] = std::to_string(zero_gamma);
  rep.summary["gamma_zero_agree_sigma_lambda_form"] = std::to_string(agree_sigma_zero);
  rep.wall_seconds = sw.seconds();
  return rep;
}

SuiteReport signs_suite(const SuiteConfig& cfg) {
  Stopwatch sw;
  SuiteReport rep;
  rep.suite = "signs";
  Orbit orb(cfg.orbit_config());
  orbit::Lattice lat = cfg.lattice.empty() ? orbit::Lattice::default_for(cfg.n) : orbit::Lattice{cfg.lattice};
  const std::string par = "n=" + std::to_string(cfg.n) + " r=" + std::to_string(cfg.r) +
                          " lattice=" + join(lat.periods) + " window=" + std::to_string(cfg.window);
  for (auto src : {orbit::KappaSource::SigmaLambda, orbit::KappaSource::Weight}) {
    const std::string tag = src == orbit::KappaSource::SigmaLambda ? "sigma-lambda" : "weight";
    auto sol = orbit::solve_signs(orb, cfg.window, lat, src);
    CaseRecord c = info("solve [" + tag + "]", par);
    c.extra["status"] = sol.feasible ? "feasible" : "infeasible";
    c.extra["squares"] = std::to_string(sol.squares);
    c.extra["boundary_squares"] = std::to_string(sol.boundary_squares);
    c.extra["simple_doubles"] = std::to_string(sol.simple_doubles);
    c.extra["equations"] = std::to_string(sol.equations);
    c.extra["unknowns"] = std::to_string(sol.unknowns);
    c.extra["rank"] = std::to_string(sol.rank);
    if (!sol.feasible) c.extra["certificate_squares"] = std::to_string(sol.certificate.size());
    rep.cases.push_back(c);
    rep.summary["status_" + tag] = c.extra["status"];
    if (sol.feasible) {
      auto d2 = orbit::verify_d_squared(orb, cfg.window, sol.assignment, src);
      CaseRecord v = count("d^2 audit [" + tag + "]", par, d2.violations.size());
      v.extra["checked"] = std::to_string(d2.checked);
      v.extra["simple_doubles_flagged"] = std::to_string(d2.simple_doubles);
      rep.cases.push_back(v);
    }
  }
  rep.wall_seconds = sw.seconds();
  return rep;
}

// ---------------------------------------------------------------- orbit audit

SuiteReport orbit_suite(const SuiteConfig& cfg) {
  Stopwatch sw;
  SuiteReport rep;
  rep.suite = "orbit";
  Orbit orb(cfg.orbit_config());
  const int r = orb.r();
  auto pts = orb.enumerate(orbit::Window{cfg.window, std::nullopt, std::nullopt});
  auto roots = rootsys::positive_roots(orb.n());
  std::size_t crit_bad = 0, m_bad = 0, comp_bad = 0, step_bad = 0, deg_bad = 0, partner_bad = 0;
  std::size_t edges = 0, chains = 0, doubles = 0;
  for (const auto& p : pts) {
    const auto w = orb.weight(p);
    for (Root a : roots) {
      const int m = orb.m_alpha(p, a);
      const int pair = orb.pairing(p, a);
      if (!(m > 0 && m < r) || ((m - pair) % r + r) % r != 0) ++m_bad;
      const OrbitPoint q = orb.lambda_alpha(p, a);
      if (orb.weight(q) != w - rootsys::Rational(m) * rootsys::root_vector(orb.n(), a)) ++step_bad;
      if (m + orb.m_alpha(q, a) != r) ++comp_bad;
      const int d = orb.degree(q) - orb.degree(p);
      if (!(d > 0 && d < 2 * a.height())) ++deg_bad;
      const bool adm = orb.is_admissible(p, a);
      if (adm != orb.admissible_by_degree(p, a)) ++crit_bad;
      if (!adm) continue;
      ++edges;
      for (Root b : roots) {
        if (!orb.admissible_by_degree(q, b)) continue;
        if (rootsys::inner(a, b) == 2) {
          ++doubles;
          continue;
        }
        ++chains;
        const auto target = orb.weight(orb.lambda_alpha(q, b));
        std::vector<std::pair<Root, Root>> found;
        for (Root a2 : roots) {
          if (a2 == a || !orb.admissible_by_degree(p, a2)) continue;
          const OrbitPoint q2 = orb.lambda_alpha(p, a2);
          for (Root b2 : roots)
            if (orb.admissible_by_degree(q2, b2) && orb.weight(orb.lambda_alpha(q2, b2)) == target)
              found.emplace_back(a2, b2);
        }
        bool ok = found.size() == 1;
        if (ok) {
          auto pr = orbit::partner_square(orb, p, a, b);
          ok = pr.alpha2 == found[0].first && pr.beta2 == found[0].second;
        }
        partner_bad += !ok;
      }
    }
  }
  const std::string par = "n=" + std::to_string(cfg.n) + " r=" + std::to_string(r) +
                          " lambda=" + join(cfg.lambda) + " window=" + std::to_string(cfg.window);
  rep.cases.push_back(count("admissibility criterion vs degree test", par, crit_bad));
  rep.cases.push_back(count("partner existence and uniqueness", par, partner_bad));
  rep.cases.push_back(count("0 < m < r and m = (lambda,alpha) mod r", par, m_bad));
  rep.cases.push_back(count("m_alpha(lambda) + m_alpha(lambda^alpha) = r", par, comp_bad));
  rep.cases.push_back(count("weight(lambda^alpha) = lambda - m alpha", par, step_bad));
  rep.cases.push_back(count("0 < deg(lambda^alpha) - deg(lambda) < 2|alpha|", par, deg_bad));
  rep.summary["points"] = std::to_string(pts.size());
  rep.summary["admissible_edges"] = std::to_string(edges);
  rep.summary["admissible_chains"] = std::to_string(chains);
  rep.summary["simple_doubles"] = std::to_string(doubles);
  rep.wall_seconds = sw.seconds();
  return rep;
}

// ---------------------------------------------------------------- qshuffle

namespace {

using qsh::QElement;
using qsh::QLaurent;

CaseRecord exact(const std::string& id, const std::string& params, const QElement& diff) {
  CaseRecord c;
  c.id = id;
  c.params = params;
  c.kind = CaseKind::Exact;
  c.residual = double(diff.size());
  c.pass = diff.is_zero();
  for (const auto& [w, poly] : diff.terms()) {
    std::string key;
    for (int letter : w) key += std::to_string(letter);
    for (const auto& [e, coef] : poly.terms()) c.exact_terms[key][e] = coef;
  }
  return c;
}

// Every k vector of length len with entries in [lo, hi].
void for_each_k(int len, int lo, int hi, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> k(len, lo);
  while (true) {
    fn(k);
    int t = 0;
    while (t < len && ++k[t] > hi) k[t++] = lo;
    if (t == len) break;
  }
}

std::vector<int> slice(const std::vector<int>& k, int from, int to) {  // 1-based inclusive
  std::vector<int> out;
  for (int j = from; j <= to; ++j) out.push_back(k[j - 1]);
  return out;
}

std::vector<int> concat(std::initializer_list<std::vector<int>> parts) {
  std::vector<int> out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

}  // namespace

SuiteReport qshuffle_suite(const SuiteConfig& cfg) {
  Stopwatch sw;
  SuiteReport rep;
  rep.suite = "qshuffle";
  const int K = 4;
  std::vector<int> ranks{3, 4};
  if (cfg.n == 5) ranks.push_back(5);
  std::size_t checked = 0;
  auto add = [&](const std::string& id, const std::string& par, const QElement& d) {
    ++checked;
    rep.cases.push_back(exact(id, par, d));
  };
  auto ks = [](const std::vector<int>& k) { return join(k); };

  for (int n : ranks) {
    const std::string N = "n=" + std::to_string(n);
    auto X = [&](int i) { return qsh::simple_X(n, i); };
    // q-Serre relations and their mirror.
    for (int j = 1; j + 1 <= n - 1; ++j)
      for (int k = -K; k <= K; ++k) {
        QLaurent a = QLaurent::qint(k), b = QLaurent::qint(k + 1) + QLaurent::qint(k - 1);
        QElement s1 = a * (X(j) * X(j) * X(j + 1)) - b * (X(j) * X(j + 1) * X(j)) + a * (X(j + 1) * X(j) * X(j));
        QElement s2 =
            a * (X(j + 1) * X(j + 1) * X(j)) - b * (X(j + 1) * X(j) * X(j + 1)) + a * (X(j) * X(j + 1) * X(j + 1));
        std::string par = N + " j=" + std::to_string(j) + " k=" + std::to_string(k);
        add("q-Serre", par, s1);
        add("q-Serre mirror", par, s2);
      }
    // Nested brackets reproduce the basic operators.
    for (int m = 1; m <= n - 2; ++m)
      for (int i = 1; i + m <= n - 1; ++i)
        for_each_k(m, -K, K, [&](const std::vector<int>& k) {
          add("nested bracket = basic", N + " i=" + std::to_string(i) + " m=" + std::to_string(m) + " k=" + ks(k),
              qsh::nested_bracket(n, i, m, k) - qsh::basic_X(n, i, m, k));
        });
    // Quadratic relations.
    for (int l = 1; l <= n - 1; ++l)
      for (int m = 0; l + m + 1 <= n - 1; ++m)
        for (int i = 1; i + l + m <= n - 1; ++i)
          for_each_k(l + m, -K, K, [&](const std::vector<int>& k) {
            auto A = qsh::basic_X(n, i, l - 1, slice(k, 1, l - 1));
            auto B = qsh::basic_X(n, i + l, m, slice(k, l + 1, l + m));
            if (k[l - 1] != 0) return;  // the slot k_l is replaced; enumerate it once
            std::string par = N + " i=" + std::to_string(i) + " l=" + std::to_string(l) + " m=" +
                              std::to_string(m) + " k=" + ks(k);
            add("cftQR1", par, A * B - qsh::basic_X(n, i, l + m, concat({slice(k, 1, l - 1), {-1}, slice(k, l + 1, l + m)})));
            add("cftQR2", par, B * A - qsh::basic_X(n, i, l + m, concat({slice(k, 1, l - 1), {0}, slice(k, l + 1, l + m)})));
          });
    for (int m = 1; m <= n - 2; ++m)
      for (int i = 1; i + m <= n - 1; ++i)
        for_each_k(m, -K, K, [&](const std::vector<int>& k) {
          std::string par = N + " i=" + std::to_string(i) + " m=" + std::to_string(m) + " k=" + ks(k);
          auto k1 = k;
          k1[0] -= 1;
          add("cftQR21", par, X(i) * qsh::basic_X(n, i, m, k) - qsh::basic_X(n, i, m, k1) * X(i));
          auto km = k;
          km[m - 1] -= 1;
          add("cftQR6", par, X(i + m) * qsh::basic_X(n, i, m, km) - qsh::basic_X(n, i, m, k) * X(i + m));
        });
    for (int i = 1; i <= n - 1; ++i)
      for (int m = 0; i + m <= n - 1; ++m)
        for (int j = i + m + 2; j <= n - 1; ++j)
          for (int l = 0; j + l <= n - 1; ++l)
            for_each_k(m + l, -K, K, [&](const std::vector<int>& k) {
              auto A = qsh::basic_X(n, i, m, slice(k, 1, m));
              auto B = qsh::basic_X(n, j, l, slice(k, m + 1, m + l));
              add("cftQR7",
                  N + " i=" + std::to_string(i) + " m=" + std::to_string(m) + " j=" + std::to_string(j) +
                      " l=" + std::to_string(l) + " k=" + ks(k),
                  A * B - B * A);
            });
    // Bracket pseudo-associativity when the outer pair commutes.
    for (int i = 1; i + 2 <= n - 1; ++i)
      for_each_k(2, -K, K, [&](const std::vector<int>& k) {
        auto A = X(i), B = X(i + 1), C = X(i + 2);
        add("bracket associativity", N + " i=" + std::to_string(i) + " k=" + ks(k),
            qsh::bracket(qsh::bracket(A, B, k[0]), C, k[1]) - qsh::bracket(A, qsh::bracket(B, C, k[1]), k[0]));
      });
  }

  // The X_12 family at n = 3.
  {
    const int n = 3;
    auto X1 = qsh::simple_X(n, 1), X2 = qsh::simple_X(n, 2);
    auto X12 = [&](int k) { return qsh::basic_X(n, 1, 1, {k}); };
    for (int k = -K; k <= K; ++k)
      for (int l = -K; l <= K; ++l)
        add("X12 a1", "k=" + std::to_string(k) + " l=" + std::to_string(l), qsh::commutator(X12(k), X12(l)));
    add("X12 a2", "X1 X2", X1 * X2 - X12(-1));
    add("X12 a2", "X2 X1", X2 * X1 - X12(0));
    for (int k = -K; k <= K; ++k) {
      add("X12 a3", "k=" + std::to_string(k), X1 * X12(k) - X12(k - 1) * X1);
      add("X12 a4", "k=" + std::to_string(k), X2 * X12(k - 1) - X12(k) * X2);
      add("X12 bracket form", "k=" + std::to_string(k), X12(k) - qsh::bracket(X1, X2, k));
    }
    auto P = [&](int k, int a) { return qsh::power_X(n, 1, 1, {k}, a); };
    for (int a = 0; a <= 4; ++a)
      for (int b = 0; b <= 4; ++b) {
        std::string par = "a=" + std::to_string(a) + " b=" + std::to_string(b);
        if (a + 2 * b <= 8 && a + b >= 1)
          add("X12 b1", par, qsh::pow(X1, a + b) * qsh::pow(X2, b) - P(-a - 1, b) * qsh::pow(X1, a));
        if (2 * a + b <= 8 && a + b >= 1) {
          add("X12 b2", par, qsh::pow(X1, a) * qsh::pow(X2, a + b) - qsh::pow(X2, b) * P(-b - 1, a));
          add("X12 b3", par, qsh::pow(X2, a) * qsh::pow(X1, a + b) - qsh::pow(X1, b) * P(a + b - 1, a));
        }
        if (a + 2 * b <= 8 && a + b >= 1)
          add("X12 b4", par, qsh::pow(X2, a + b) * qsh::pow(X1, b) - P(a + b - 1, b) * qsh::pow(X2, a));
      }
  }

  // Cyclotomic periodicity of the basic operators.
  std::set<int> levels{5, 6, cfg.r};
  for (int r : levels) {
    const QLaurent sign((r % 2 == 1) ? 1 : -1);
    for (int k = -K; k <= K; ++k) {
      QElement d = qsh::basic_X(3, 1, 1, {k + r}) - sign * qsh::basic_X(3, 1, 1, {k});
      std::string par = "r=" + std::to_string(r) + " k=" + std::to_string(k);
      CaseRecord c = exact("X12 periodicity (reduced)", par, d.reduce_cyclotomic(r));
      c.extra["nonzero_before_reduction"] = d.is_zero() ? "false" : "true";
      if (d.is_zero()) c.pass = false;
      ++checked;
      rep.cases.push_back(c);
    }
    for (int slot = 0; slot < 2; ++slot)
      for_each_k(2, -2, 2, [&](const std::vector<int>& k) {
        auto k2 = k;
        k2[slot] += r;
        QElement d = qsh::basic_X(4, 1, 2, k2) - sign * qsh::basic_X(4, 1, 2, k);
        add("basic periodicity (reduced)",
            "n=4 r=" + std::to_string(r) + " slot=" + std::to_string(slot + 1) + " k=" + ks(k),
            d.reduce_cyclotomic(r));
      });
  }

  // Shuffle associativity on seeded random words.
  {
    std::mt19937_64 rng(mix(cfg.seed, 11));
    const int n = 4;
    std::uniform_int_distribution<int> len(0, 2), let(1, n - 1);
    for (int t = 0; t < 20; ++t) {
      auto rw = [&] {
        qsh::Word w(len(rng));
        for (int& x : w) x = let(rng);
        return QElement::word(n, w);
      };
      auto a = rw(), b = rw(), c = rw();
      add("shuffle associativity", "trial=" + std::to_string(t), (a * b) * c - a * (b * c));
    }
  }
  rep.summary["relations_checked"] = std::to_string(checked);
  rep.wall_seconds = sw.seconds();
  return rep;
}

// ---------------------------------------------------------------- controls

SuiteReport controls_suite(const SuiteConfig& cfg) {
  Stopwatch sw;
  SuiteReport rep;
  rep.suite = "controls";
  star::Algebra alg(cfg.n, theta::ThetaParams{cfg.x, cfg.r, cfg.trunc}, star::Convention::deformed(cfg.delta));
  star::SampleBox box;
  box.r = cfg.r;
  star::GridLimits lim;
  lim.max_vars = cfg.max_vars;
  lim.k_draws = 1;
  std::size_t kcases = 0, kmissed = 0;
  for (const std::string name : {"CS1", "CS2", "CS3", "CS4"}) {
    auto grid = star::relation_grid(name, cfg.n, mix(cfg.seed, salt_of(name)), lim);
    for (std::size_t g = 0; g < grid.size(); ++g) {
      const auto& p = grid[g];
      auto base = star::build_relation(alg, name, p);
      for (int f = 0; f < static_cast<int>(base.factor_slots.size()); ++f)
        for (int slot = 0; slot < base.factor_slots[f]; ++slot) {
          auto inst = star::build_relation(alg, name, p, star::KPerturbation{f, slot});
          const std::string par =
              p.describe() + " factor=" + std::to_string(f) + " slot=" + std::to_string(slot);
          double res = 0.0;
          if (inst.lhs.type() == inst.rhs.type())
            res = star::compare(inst.lhs, inst.rhs, cfg.points, mix(cfg.seed, 5000 + kcases), box).max_rel;
          else
            res = INFINITY;
          CaseRecord c;
          c.id = name + " k-perturbation";
          c.params = par;
          c.kind = CaseKind::Numeric;
          c.residual = res;
          c.tol = cfg.tol;
          c.pass = res > cfg.tol;
          kmissed += !c.pass;
          ++kcases;
          rep.cases.push_back(std::move(c));
        }
    }
  }

  Orbit orb(cfg.orbit_config());
  orbit::Lattice lat = cfg.lattice.empty() ? orbit::Lattice::default_for(cfg.n) : orbit::Lattice{cfg.lattice};
  const int bound = std::min(cfg.window, 1);
  auto sol = orbit::solve_signs(orb, bound, lat, orbit::KappaSource::Weight);
  std::size_t flips = 0, flips_missed = 0;
  if (!sol.feasible) {
    rep.cases.push_back(count("edge-sign flip", "no feasible assignment to perturb", 1));
  } else {
    auto squares = orbit::squares_in_box(orb, bound, orbit::KappaSource::Weight);
    std::vector<std::vector<orbit::EdgeKey>> edges;
    for (const auto& sq : squares) edges.push_back(orbit::square_edges(orb, sq, lat));
    for (const auto& [key, value] : sol.assignment.signs) {
      (void)value;
      orbit::SignAssignment flipped = sol.assignment;
      flipped.flip(key);
      auto d2 = orbit::verify_d_squared(orb, bound, flipped, orbit::KappaSource::Weight);
      // Expected violations: squares using the edge an odd number of times.
      std::size_t expected = 0;
      for (const auto& e : edges) expected += std::count(e.begin(), e.end(), key) % 2;
      const bool ok = expected > 0 && d2.violations.size() == expected;
      CaseRecord c = count("edge-sign flip", orbit::to_string(key), ok ? 0 : 1);
      c.extra["violations"] = std::to_string(d2.violations.size());
      c.extra["expected"] = std::to_string(expected);
      rep.cases.push_back(c);
      flips_missed += !ok;
      ++flips;
    }
  }
  rep.summary["k_perturbations"] = std::to_string(kcases);
  rep.summary["k_perturbations_undetected"] = std::to_string(kmissed);
  rep.summary["edge_flips"] = std::to_string(flips);
  rep.summary["edge_flips_misreported"] = std::to_string(flips_missed);
  rep.wall_seconds = sw.seconds();
  return rep;
}

SuiteReport run_suite(const std::string& name, const SuiteConfig& cfg) {
  if (name == "theta") return theta_suite(cfg);
  if (name == "star") return star_suite(cfg);
  if (name == "zeros") return zeros_suite(cfg);
  if (name == "membership") return membership_suite(cfg);
  if (name == "signs-cross") return signs_cross_suite(cfg);
  if (name == "qshuffle") return qshuffle_suite(cfg);
  if (name == "orbit") return orbit_suite(cfg);
  if (name == "signs") return signs_suite(cfg);
  if (name == "controls") return controls_suite(cfg);
  throw std::invalid_argument("unknown suite: " + name);
}

}  // namespace dws::suites
