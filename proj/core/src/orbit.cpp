#include "dws/orbit.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace dws::orbit {

using rootsys::Rational;

void OrbitConfig::validate() const {
  rootsys::check_rank(n);
  if (r < n + 2) throw std::invalid_argument("level r must satisfy r >= n + 2");
  if (static_cast<int>(lambda_omega.size()) != n - 1)
    throw std::invalid_argument("Lambda needs n-1 coefficients");
  int sum = 0;
  for (int a : lambda_omega) {
    if (a <= 0) throw std::invalid_argument("Lambda must be strictly dominant");
    sum += a;
  }
  if (sum >= r) throw std::invalid_argument("(Lambda, theta) must be < r");
}

Orbit::Orbit(OrbitConfig cfg) : cfg_(std::move(cfg)) {
  cfg_.validate();
  lambda_ = rootsys::weight_from_omega(cfg_.n, cfg_.lambda_omega);
}

static int to_int(const Rational& q) {
  if (q.denominator() != 1) throw std::logic_error("expected an integral pairing");
  return static_cast<int>(q.numerator());
}

void Orbit::check(const OrbitPoint& p, Root a) const {
  if (static_cast<int>(p.sigma.size()) != n() || static_cast<int>(p.gamma.size()) != n() - 1)
    throw std::invalid_argument("orbit point rank mismatch");
  if (a.i < 0 || a.j >= n() || a.i >= a.j) throw std::invalid_argument("root outside rank");
}

OrbitPoint Orbit::base_point() const { return {rootsys::identity_perm(n()), RootVec(n() - 1, 0)}; }

WeightVec Orbit::weight(const OrbitPoint& p) const {
  return rootsys::act(p.sigma, lambda_) + Rational(r()) * rootsys::weight_from_rootvec(n(), p.gamma);
}

int Orbit::degree(const OrbitPoint& p) const {
  return rootsys::perm_length(p.sigma) - 2 * rootsys::height(p.gamma);
}

int Orbit::sigma_pairing(const Permutation& sigma, Root a) const {
  return to_int(rootsys::inner(rootsys::act(sigma, lambda_), a));
}

int Orbit::pairing(const OrbitPoint& p, Root a) const { return to_int(rootsys::inner(weight(p), a)); }

int Orbit::m_alpha(const OrbitPoint& p, Root a) const {
  check(p, a);
  int s = sigma_pairing(p.sigma, a);
  if (s % r() == 0) throw std::logic_error("(sigma Lambda, alpha) divisible by r");
  int m = s > 0 ? s : s + r();
  if (m <= 0 || m >= r()) throw std::logic_error("m_alpha out of (0, r)");
  return m;
}

OrbitPoint Orbit::lambda_alpha(const OrbitPoint& p, Root a) const {
  check(p, a);
  OrbitPoint out{rootsys::reflect_left(a, p.sigma), p.gamma};
  if (sigma_pairing(p.sigma, a) < 0)
    for (int k = a.i; k < a.j; ++k) out.gamma[k] -= 1;
  return out;
}

bool Orbit::is_admissible(const OrbitPoint& p, Root a) const {
  check(p, a);
  int s = sigma_pairing(p.sigma, a);
  for (const auto& [b, c] : rootsys::root_decompositions(a)) {
    bool nb = sigma_pairing(p.sigma, b) < 0;
    bool nc = sigma_pairing(p.sigma, c) < 0;
    if (s > 0 && !(nb || nc)) return false;
    if (s < 0 && !(nb && nc)) return false;
  }
  return true;
}

bool Orbit::admissible_by_degree(const OrbitPoint& p, Root a) const {
  return degree(lambda_alpha(p, a)) - degree(p) == 1;
}

int Orbit::kappa(const OrbitPoint& p, Root a) const { return kappa(p, a, KappaSource::SigmaLambda); }

int Orbit::kappa(const OrbitPoint& p, Root a, KappaSource src) const {
  int base = src == KappaSource::SigmaLambda ? sigma_pairing(p.sigma, a) : pairing(p, a);
  int diff = m_alpha(p, a) - base;
  if (diff % r() != 0) throw std::logic_error("m_alpha not congruent to the pairing");
  return diff / r();
}

bool Orbit::in_box(const OrbitPoint& p, int gamma_bound) const {
  return std::all_of(p.gamma.begin(), p.gamma.end(),
                     [&](int c) { return c >= -gamma_bound && c <= gamma_bound; });
}

std::vector<OrbitPoint> Orbit::enumerate(const Window& w) const {
  if (w.gamma_bound < 0) throw std::invalid_argument("empty window");
  if (w.degree_min && w.degree_max && *w.degree_min > *w.degree_max)
    throw std::invalid_argument("empty window");
  const int side = 2 * w.gamma_bound + 1;
  std::size_t cells = 1;
  for (int k = 0; k < n() - 1; ++k) cells *= side;
  auto perms = rootsys::all_permutations(n());
  std::vector<OrbitPoint> out;
  for (std::size_t cell = 0; cell < cells; ++cell) {
    RootVec g(n() - 1);
    std::size_t rest = cell;
    for (int k = n() - 2; k >= 0; --k) {
      g[k] = static_cast<int>(rest % side) - w.gamma_bound;
      rest /= side;
    }
    for (const auto& s : perms) {
      OrbitPoint p{s, g};
      int d = degree(p);
      if (w.degree_min && d < *w.degree_min) continue;
      if (w.degree_max && d > *w.degree_max) continue;
      out.push_back(std::move(p));
    }
  }
  return out;
}

std::string to_string(CaseTag t) {
  switch (t) {
    case CaseTag::Orthogonal: return "orthogonal";
    case CaseTag::APlus: return "A+";
    case CaseTag::BPlus: return "B+";
    case CaseTag::CPlus: return "C+";
    case CaseTag::DPlus: return "D+";
    case CaseTag::AMinus: return "A-";
    case CaseTag::BMinus: return "B-";
    case CaseTag::CMinus: return "C-";
    case CaseTag::DMinus: return "D-";
  }
  return "?";
}

CaseTag partner_tag(CaseTag t) {
  switch (t) {
    case CaseTag::APlus: return CaseTag::AMinus;
    case CaseTag::BPlus: return CaseTag::BMinus;
    case CaseTag::CPlus: return CaseTag::CMinus;
    case CaseTag::DPlus: return CaseTag::DMinus;
    case CaseTag::AMinus: return CaseTag::APlus;
    case CaseTag::BMinus: return CaseTag::BPlus;
    case CaseTag::CMinus: return CaseTag::CPlus;
    case CaseTag::DMinus: return CaseTag::DPlus;
    default: return t;
  }
}

// Tag of a chain with (alpha, beta) = -1.
static CaseTag plus_tag(Root alpha, Root beta, int m, int m2) {
  bool alpha_left = alpha.j == beta.i;
  if (alpha_left) return m > m2 ? CaseTag::APlus : CaseTag::BPlus;
  return m > m2 ? CaseTag::CPlus : CaseTag::DPlus;
}

Partner partner_square(const Orbit& orb, const OrbitPoint& p, Root alpha, Root beta) {
  if (!orb.is_admissible(p, alpha)) throw std::domain_error("first step is not admissible");
  OrbitPoint q = orb.lambda_alpha(p, alpha);
  if (!orb.is_admissible(q, beta)) throw std::domain_error("second step is not admissible");
  const int ip = rootsys::inner(alpha, beta);
  if (ip == 2) throw std::domain_error("simple-root double has no partner");
  if (ip == 0) return {beta, alpha, CaseTag::Orthogonal};
  if (ip == -1) {
    int m = orb.m_alpha(p, alpha);
    int m2 = orb.m_alpha(q, beta);
    Root sum = *rootsys::root_sum(alpha, beta);
    CaseTag tag = plus_tag(alpha, beta, m, m2);
    if (m > m2) return {sum, alpha, tag};
    return {beta, sum, tag};
  }
  // ip == 1: the partner is a (alpha, beta) = -1 chain.
  Partner out{};
  if (auto d = rootsys::root_difference(alpha, beta)) {
    out.alpha2 = beta;
    out.beta2 = *d;
  } else if (auto e = rootsys::root_difference(beta, alpha)) {
    out.alpha2 = *e;
    out.beta2 = alpha;
  } else {
    throw std::logic_error("roots with inner product 1 must differ by a root");
  }
  OrbitPoint q2 = orb.lambda_alpha(p, out.alpha2);
  out.tag = partner_tag(
      plus_tag(out.alpha2, out.beta2, orb.m_alpha(p, out.alpha2), orb.m_alpha(q2, out.beta2)));
  return out;
}

int epsilon_r(int r) { return (r + 1) % 2 == 0 ? 1 : -1; }

static int eps_pow(int r, long long e) { return (e % 2 == 0) ? 1 : epsilon_r(r); }

int signature(const Orbit& orb, const OrbitPoint& p, Root alpha, Root beta, const Partner& partner,
              KappaSource src) {
  if (partner.tag == CaseTag::Orthogonal) return 1;
  // Formulas are stated for the + chain; a - chain shares the sign of its partner.
  Root a = alpha, b = beta, a2 = partner.alpha2;
  CaseTag tag = partner.tag;
  switch (tag) {
    case CaseTag::AMinus:
    case CaseTag::BMinus:
    case CaseTag::CMinus:
    case CaseTag::DMinus:
      a = partner.alpha2;
      b = partner.beta2;
      a2 = alpha;
      tag = partner_tag(tag);
      break;
    default: break;
  }
  const int r = orb.r();
  auto kap = [&](Root x) { return orb.kappa(p, x, src); };
  auto m = [&](Root x) { return orb.m_alpha(p, x); };
  switch (tag) {
    case CaseTag::APlus: return eps_pow(r, 1LL * kap(a) * b.height() * m(a2));
    case CaseTag::BPlus: return eps_pow(r, 1LL * kap(a) * a2.height() * m(a));
    case CaseTag::DPlus: return eps_pow(r, 1LL * kap(a2) * a.height() * m(a));
    case CaseTag::CPlus: return eps_pow(r, 1LL * (kap(a) + kap(a2)) * a.height() * m(a2));
    default: throw std::invalid_argument("unknown case tag");
  }
}

CommutingSquare make_square(const Orbit& orb, const OrbitPoint& p, Root alpha, Root beta, KappaSource src) {
  Partner pr = partner_square(orb, p, alpha, beta);
  CommutingSquare sq{p, alpha, beta, pr.alpha2, pr.beta2, pr.tag, 1};
  sq.signature = signature(orb, p, alpha, beta, pr, src);
  return sq;
}

std::vector<CommutingSquare> squares_in_box(const Orbit& orb, int gamma_bound, KappaSource src,
                                            std::size_t* boundary, std::size_t* simple_doubles) {
  std::vector<CommutingSquare> out;
  std::size_t nb = 0, nd = 0;
  auto roots = rootsys::positive_roots(orb.n());
  for (const auto& p : orb.enumerate(Window{gamma_bound, std::nullopt, std::nullopt})) {
    for (Root a : roots) {
      if (!orb.is_admissible(p, a)) continue;
      OrbitPoint q = orb.lambda_alpha(p, a);
      for (Root b : roots) {
        if (!orb.is_admissible(q, b)) continue;
        if (rootsys::inner(a, b) == 2) {
          ++nd;
          continue;
        }
        CommutingSquare sq = make_square(orb, p, a, b, src);
        OrbitPoint top = orb.lambda_alpha(q, b);
        OrbitPoint side = orb.lambda_alpha(p, sq.alpha2);
        if (!orb.in_box(q, gamma_bound) || !orb.in_box(top, gamma_bound) || !orb.in_box(side, gamma_bound)) {
          ++nb;
          continue;
        }
        out.push_back(std::move(sq));
      }
    }
  }
  if (boundary) *boundary = nb;
  if (simple_doubles) *simple_doubles = nd;
  return out;
}

std::string to_string(const OrbitPoint& p) {
  std::ostringstream os;
  os << "sigma=" << rootsys::to_string(p.sigma) << " gamma=(";
  for (std::size_t k = 0; k < p.gamma.size(); ++k) os << (k ? "," : "") << p.gamma[k];
  os << ")";
  return os.str();
}

}  // namespace dws::orbit
