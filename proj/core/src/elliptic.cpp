#include "dws/elliptic.hpp"

#include <algorithm>
#include <cmath>
#include <bit>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace dws::star {

namespace {

constexpr int kHalfSpan = 16;

class UnitNode final : public Node {
 public:
  explicit UnitNode(int groups) : Node(FuncType(groups, 0)) {}
  xcplx eval(EvalContext&, const std::vector<std::vector<int>>&, const Kappa&) const override { return 1.0L; }
};

class GeneratorNode final : public Node {
 public:
  GeneratorNode(int groups, int i, int m, std::vector<int> k, const Convention& conv)
      : Node(make_type(groups, i, m)), i_(i), m_(m), kk_(m + 2, 0), conv_(conv) {
    kk_[0] = -1;
    for (int l = 0; l < m; ++l) kk_[l + 1] = k[l];
    ksum_ = std::accumulate(k.begin(), k.end(), 0);
  }

  xcplx eval(EvalContext& ctx, const std::vector<std::vector<int>>& idx, const Kappa& kap) const override {
    const Algebra& alg = ctx.algebra();
    const long double d = conv_.delta;
    xcplx val = (conv_.k_parity_sign && (ksum_ % 2 != 0)) ? -1.0L : 1.0L;
    for (int l = 1; l <= m_; ++l) {
      int a = idx[i_ + l - 1][0], b = idx[i_ + l][0];
      val *= ctx.pair_theta(a, b, -(2 * kk_[l] + 1)) / ctx.pair_theta(a, b, 0);
    }
    for (int l = 0; l <= m_; ++l) {
      xcplx u = ctx.u(idx[i_ + l][0]);
      val *= alg.th(u - (kk_[l] - kk_[l + 1] + 0.5L) * d - xcplx(kap[i_ + l]));
    }
    return val;
  }

 private:
  static FuncType make_type(int groups, int i, int m) {
    FuncType t(groups, 0);
    for (int j = i; j <= i + m; ++j) t[j] = 1;
    return t;
  }
  int i_, m_;
  std::vector<int> kk_;
  int ksum_ = 0;
  Convention conv_;
};

class StarNode final : public Node {
 public:
  StarNode(std::shared_ptr<const Node> f, std::shared_ptr<const Node> g, const Convention& conv)
      : Node(sum_type(f->type(), g->type())), f_(std::move(f)), g_(std::move(g)), conv_(conv) {
    const FuncType& tf = f_->type();
    const FuncType& tg = g_->type();
    const int groups = static_cast<int>(tf.size());
    shift_.resize(groups);
    for (int j = 0; j < groups; ++j) {
      int s = -2 * tg[j];
      if (j > 0) s += tg[j - 1];
      if (j + 1 < groups) s += tg[j + 1];
      shift_[j] = conv_.kappa_unit * s;
    }
    choices_.resize(groups);
    for (int j = 0; j < groups; ++j) {
      const int total = tf[j] + tg[j];
      for (unsigned mask = 0; mask < (1u << total); ++mask)
        if (std::popcount(mask) == tf[j]) choices_[j].push_back(mask);
    }
  }

  xcplx eval(EvalContext& ctx, const std::vector<std::vector<int>>& idx, const Kappa& kap) const override {
    const int groups = static_cast<int>(idx.size());
    Kappa kap2(kap);
    for (int j = 0; j < groups; ++j) kap2[j] += shift_[j];

    std::vector<std::size_t> pos(groups, 0);
    std::vector<std::vector<int>> U(groups), W(groups);
    xcplx total = 0.0L;
    while (true) {
      for (int j = 0; j < groups; ++j) {
        U[j].clear();
        W[j].clear();
        unsigned mask = choices_[j][pos[j]];
        for (std::size_t c = 0; c < idx[j].size(); ++c) ((mask >> c) & 1u ? U[j] : W[j]).push_back(idx[j][c]);
      }
      xcplx val = f_->eval(ctx, U, kap2) * g_->eval(ctx, W, kap);
      for (int j = 0; j < groups && val != 0.0L; ++j) {
        for (int a : U[j]) {
          for (int b : W[j]) val *= ctx.pair_theta(a, b, -2) / ctx.pair_theta(a, b, 0);
          if (j + 1 < groups)
            for (int b : W[j + 1]) val *= ctx.pair_theta(a, b, 1) / ctx.pair_theta(a, b, 0);
          if (j > 0)
            for (int b : W[j - 1]) val *= (long double)conv_.neighbor_sign * ctx.pair_theta(a, b, 1) / ctx.pair_theta(a, b, 0);
        }
      }
      total += val;

      int j = 0;
      while (j < groups && ++pos[j] == choices_[j].size()) pos[j++] = 0;
      if (j == groups) break;
    }
    return total;
  }

 private:
  static FuncType sum_type(const FuncType& a, const FuncType& b) {
    if (a.size() != b.size()) throw std::invalid_argument("star: rank mismatch");
    FuncType t(a.size());
    for (std::size_t j = 0; j < a.size(); ++j) t[j] = a[j] + b[j];
    return t;
  }
  std::shared_ptr<const Node> f_, g_;
  Convention conv_;
  std::vector<double> shift_;
  std::vector<std::vector<unsigned>> choices_;
};

}  // namespace

Convention Convention::deformed(double delta) { return Convention{delta, delta, 1.0, false}; }

Convention Convention::screening(int r) { return Convention{1.0, 1.0 - r, -1.0, true}; }

EllipticFunction::EllipticFunction(std::shared_ptr<const Node> node, const Algebra* alg, std::string label)
    : node_(std::move(node)), alg_(alg), label_(std::move(label)) {}

int EllipticFunction::total() const { return std::accumulate(type().begin(), type().end(), 0); }

cplx EllipticFunction::operator()(const Vars& v, const Kappa& kap) const {
  const FuncType& t = type();
  if (v.size() != t.size()) throw std::invalid_argument("variable groups do not match the function type");
  if (kap.size() != t.size()) throw std::invalid_argument("zero-mode vector has the wrong length");
  std::vector<xcplx> flat;
  std::vector<std::vector<int>> idx(t.size());
  for (std::size_t j = 0; j < t.size(); ++j) {
    if (static_cast<int>(v[j].size()) != t[j])
      throw std::invalid_argument("group " + std::to_string(j) + " has the wrong number of variables");
    for (cplx z : v[j]) {
      idx[j].push_back(static_cast<int>(flat.size()));
      flat.push_back(z);
    }
  }
  EvalContext ctx(*alg_, std::move(flat));
  return cplx(node_->eval(ctx, idx, kap));
}

cplx EllipticFunction::evaluate_safe(const Vars& v, const Kappa& kap, double h) const {
  // Spread each cluster of coinciding same-group variables along distinct offsets.
  Vars dir = v;
  bool coincident = false;
  for (std::size_t j = 0; j < v.size(); ++j) {
    for (std::size_t a = 0; a < v[j].size(); ++a) {
      int rank = 0;
      for (std::size_t b = 0; b < a; ++b)
        if (std::abs(v[j][a] - v[j][b]) < 1e-9) ++rank;
      coincident |= rank > 0;
      dir[j][a] = double(rank);
    }
  }
  if (!coincident) return (*this)(v, kap);
  auto sym = [&](double s) {
    Vars p = v, m = v;
    for (std::size_t j = 0; j < v.size(); ++j)
      for (std::size_t a = 0; a < v[j].size(); ++a) {
        p[j][a] += s * dir[j][a];
        m[j][a] -= s * dir[j][a];
      }
    return 0.5 * ((*this)(p, kap) + (*this)(m, kap));
  };
  return (4.0 * sym(h / 2) - sym(h)) / 3.0;
}

Algebra::Algebra(int n, theta::ThetaParams tp, Convention conv) : n_(n), tp_(tp), conv_(conv) {
  if (n < 2) throw std::invalid_argument("rank must be at least 2");
  tp_.validate();
}

EllipticFunction Algebra::generator(int i, int m, const std::vector<int>& k) const {
  if (i < 0 || m < 0 || i + m > groups() - 1) throw std::invalid_argument("generator segment out of range");
  if (static_cast<int>(k.size()) != m) throw std::invalid_argument("generator needs one integer per internal node");
  std::ostringstream os;
  os << "f_" << i << ".." << i + m << "[";
  for (std::size_t t = 0; t < k.size(); ++t) os << (t ? "," : "") << k[t];
  os << "]";
  return EllipticFunction(std::make_shared<GeneratorNode>(groups(), i, m, k, conv_), this, os.str());
}

EllipticFunction Algebra::star(const EllipticFunction& f, const EllipticFunction& g) const {
  if (f.groups() != groups() || g.groups() != groups()) throw std::invalid_argument("star: rank mismatch");
  if (f.total() == 0) return g;
  if (g.total() == 0) return f;
  return EllipticFunction(std::make_shared<StarNode>(f.node(), g.node(), conv_), this,
                          "(" + f.label() + " * " + g.label() + ")");
}

EllipticFunction Algebra::power(int a, int i, int m, const std::vector<int>& k, bool ascending) const {
  if (a < 0) throw std::invalid_argument("power exponent must be non-negative");
  if (a == 0) return unit();
  auto shifted = [&](int s) {
    std::vector<int> ks(k);
    for (int& x : ks) x -= s;
    return generator(i, m, ks);
  };
  EllipticFunction f = shifted(ascending ? a - 1 : 0);
  for (int b = 1; b < a; ++b) f = star(f, shifted(ascending ? a - 1 - b : b));
  return f;
}

EllipticFunction Algebra::unit() const {
  return EllipticFunction(std::make_shared<UnitNode>(groups()), this, "1");
}

EvalContext::EvalContext(const Algebra& alg, std::vector<xcplx> u)
    : alg_(alg), u_(std::move(u)), span_(2 * kHalfSpan + 1) {
  const std::size_t T = u_.size();
  cache_.resize(T * T * span_);
  have_.assign(T * T * span_, 0);
}

xcplx EvalContext::pair_theta(int a, int b, int h) {
  const long double d = alg_.convention().delta;
  if (h < -kHalfSpan || h > kHalfSpan) return alg_.th(u_[a] - u_[b] + 0.5L * h * d);
  const std::size_t T = u_.size();
  const std::size_t key = (static_cast<std::size_t>(a) * T + b) * span_ + (h + kHalfSpan);
  if (!have_[key]) {
    cache_[key] = alg_.th(u_[a] - u_[b] + 0.5L * h * d);
    have_[key] = 1;
  }
  return cache_[key];
}

std::string type_string(const FuncType& t) {
  std::ostringstream os;
  os << "(";
  for (std::size_t j = 0; j < t.size(); ++j) os << (j ? "," : "") << t[j];
  os << ")";
  return os.str();
}

}  // namespace dws::star
