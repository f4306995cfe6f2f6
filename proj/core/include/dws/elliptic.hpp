#pragma once

#include "dws/theta.hpp"

#include <complex>
#include <memory>
#include <string>
#include <vector>

namespace dws::star {

using cplx = std::complex<double>;
// Internal evaluation type; shuffle sums cancel heavily near clustered points.
using xcplx = std::complex<long double>;
// Variables grouped by simple-root index: vars[j] holds u_j^{(1..a_j)}.
using Vars = std::vector<std::vector<cplx>>;
using Kappa = std::vector<cplx>;
using FuncType = std::vector<int>;

// Sign and shift conventions of the *-product. The deformed algebra uses a
// free delta; the screening kernels use delta = 1 with zero-mode shifts in
// units of (1 - r), a sign on the j-1 cross factor and (-1)^{sum k} on
// generators.
struct Convention {
  double delta = 1.0;
  double kappa_unit = 1.0;
  double neighbor_sign = 1.0;
  bool k_parity_sign = false;

  static Convention deformed(double delta);
  static Convention screening(int r);
};

class Algebra;
class EvalContext;

class Node {
 public:
  explicit Node(FuncType type) : type_(std::move(type)) {}
  virtual ~Node() = default;
  const FuncType& type() const { return type_; }
  virtual xcplx eval(EvalContext& ctx, const std::vector<std::vector<int>>& idx, const Kappa& kap) const = 0;

 private:
  FuncType type_;
};

class EllipticFunction {
 public:
  EllipticFunction() = default;
  EllipticFunction(std::shared_ptr<const Node> node, const Algebra* alg, std::string label);

  const FuncType& type() const { return node_->type(); }
  int groups() const { return static_cast<int>(type().size()); }
  int total() const;
  const std::string& label() const { return label_; }
  const Algebra& algebra() const { return *alg_; }
  const std::shared_ptr<const Node>& node() const { return node_; }
  bool valid() const { return static_cast<bool>(node_); }

  cplx operator()(const Vars& v, const Kappa& kap) const;
  // Evaluates on a cancelled same-group coincidence by symmetric
  // perturbation with one Richardson step.
  cplx evaluate_safe(const Vars& v, const Kappa& kap, double h = 1e-4) const;

 private:
  std::shared_ptr<const Node> node_;
  const Algebra* alg_ = nullptr;
  std::string label_;
};

class Algebra {
 public:
  Algebra(int n, theta::ThetaParams tp, Convention conv);

  int n() const { return n_; }
  int groups() const { return n_ - 1; }
  const theta::ThetaParams& theta_params() const { return tp_; }
  const Convention& convention() const { return conv_; }
  cplx th(cplx u) const { return theta::theta(u, tp_); }
  xcplx th(xcplx u) const { return theta::theta_ext(u, tp_); }

  // f_{i..i+m}[k_1..k_m], zero-based start i.
  EllipticFunction generator(int i, int m, const std::vector<int>& k) const;
  EllipticFunction star(const EllipticFunction& f, const EllipticFunction& g) const;
  // f[k] * f[k-1] * ... * f[k-a+1]; ascending gives f[k-a+1] * ... * f[k].
  EllipticFunction power(int a, int i, int m, const std::vector<int>& k, bool ascending = false) const;
  // Identity of the *-product (type zero, value 1).
  EllipticFunction unit() const;

 private:
  int n_;
  theta::ThetaParams tp_;
  Convention conv_;
};

class EvalContext {
 public:
  EvalContext(const Algebra& alg, std::vector<xcplx> u);

  const Algebra& algebra() const { return alg_; }
  xcplx u(int a) const { return u_[a]; }
  // [u_a - u_b + h * delta / 2], memoized.
  xcplx pair_theta(int a, int b, int h);

 private:
  const Algebra& alg_;
  std::vector<xcplx> u_;
  int span_;
  std::vector<xcplx> cache_;
  std::vector<unsigned char> have_;
};

std::string type_string(const FuncType& t);

}  // namespace dws::star
