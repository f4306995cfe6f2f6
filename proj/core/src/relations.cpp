#include "dws/relations.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

namespace dws::star {

namespace {

using Ks = std::vector<int>;

Ks cat(std::initializer_list<Ks> parts) {
  Ks out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

Ks add(Ks v, int c) {
  for (int& x : v) x += c;
  return v;
}

class Builder {
 public:
  Builder(const Algebra& alg, const RelationParams& p, const std::optional<KPerturbation>& pert)
      : alg_(alg), p_(p), pert_(pert) {}

  int K(int j) const {
    if (j < 1 || j > static_cast<int>(p_.k.size()))
      throw std::invalid_argument("relation needs k_" + std::to_string(j));
    return p_.k[j - 1];
  }
  Ks range(int from, int to) const {
    Ks out;
    for (int j = from; j <= to; ++j) out.push_back(K(j));
    return out;
  }

  // span simple roots starting at i, power a.
  EllipticFunction P(int i, int span, Ks k, int a, bool ascending = false) {
    if (a == 0) return alg_.unit();
    if (span < 1) throw std::invalid_argument("empty segment");
    if (static_cast<int>(k.size()) != span - 1) throw std::logic_error("k length mismatch");
    if (pert_ && pert_->factor == static_cast<int>(slots_.size()) && pert_->slot < static_cast<int>(k.size())) {
      k[pert_->slot] += 1;
      perturbed_ = true;
    }
    slots_.push_back(static_cast<int>(k.size()));
    return alg_.power(a, i, span - 1, k, ascending);
  }
  EllipticFunction S(const EllipticFunction& f, const EllipticFunction& g) const { return alg_.star(f, g); }

  const std::vector<int>& slots() const { return slots_; }
  bool perturbed() const { return perturbed_; }

 private:
  const Algebra& alg_;
  const RelationParams& p_;
  std::optional<KPerturbation> pert_;
  std::vector<int> slots_;
  bool perturbed_ = false;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

std::pair<EllipticFunction, EllipticFunction> build_pair(Builder& B, const std::string& name,
                                                         const RelationParams& p) {
  const int i = p.i, l = p.l, m = p.m, q = p.p;
  if (name == "QR1" || name == "QR2") {
    require(l >= 1 && m >= 0, name + " needs l >= 1, m >= 0");
    if (name == "QR1") {
      auto f1 = B.P(i, l, B.range(1, l - 1), 1);
      auto f2 = B.P(i + l, m + 1, B.range(l + 1, l + m), 1);
      auto r = B.P(i, l + m + 1, cat({B.range(1, l - 1), {-1}, B.range(l + 1, l + m)}), 1);
      return {B.S(f1, f2), r};
    }
    auto f2 = B.P(i + l, m + 1, B.range(l + 1, l + m), 1);
    auto f1 = B.P(i, l, B.range(1, l - 1), 1);
    auto r = B.P(i, l + m + 1, cat({B.range(1, l - 1), {0}, B.range(l + 1, l + m)}), 1);
    return {B.S(f2, f1), r};
  }
  if (name == "QR21") {
    require(m >= 1, "QR21 needs m >= 1");
    auto a1 = B.P(i, 1, {}, 1);
    auto a2 = B.P(i, m + 1, B.range(1, m), 1);
    auto b1 = B.P(i, m + 1, cat({{B.K(1) - 1}, B.range(2, m)}), 1);
    auto b2 = B.P(i, 1, {}, 1);
    return {B.S(a1, a2), B.S(b1, b2)};
  }
  if (name == "QR6") {
    require(m >= 1, "QR6 needs m >= 1");
    auto a1 = B.P(i + m, 1, {}, 1);
    auto a2 = B.P(i, m + 1, cat({B.range(1, m - 1), {B.K(m) - 1}}), 1);
    auto b1 = B.P(i, m + 1, B.range(1, m), 1);
    auto b2 = B.P(i + m, 1, {}, 1);
    return {B.S(a1, a2), B.S(b1, b2)};
  }
  if (name == "QR7") {
    require(q >= 2 && m >= 0 && l >= 0, "QR7 needs p >= 2");
    const int j = i + m + q;
    auto a1 = B.P(i, m + 1, B.range(1, m), 1);
    auto a2 = B.P(j, l + 1, B.range(m + 1, m + l), 1);
    auto b1 = B.P(j, l + 1, B.range(m + 1, m + l), 1);
    auto b2 = B.P(i, m + 1, B.range(1, m), 1);
    return {B.S(a1, a2), B.S(b1, b2)};
  }
  if (name == "TCOM") {
    require(m >= 0, "TCOM needs m >= 0");
    auto a1 = B.P(i, m + 1, B.range(1, m), 1);
    auto a2 = B.P(i, m + 1, add(B.range(1, m), q), 1);
    auto b1 = B.P(i, m + 1, add(B.range(1, m), q), 1);
    auto b2 = B.P(i, m + 1, B.range(1, m), 1);
    return {B.S(a1, a2), B.S(b1, b2)};
  }
  if (name == "LF") {
    require(p.a >= 1, "LF needs a >= 1");
    auto d = B.P(i, m + 1, B.range(1, m), p.a, false);
    auto u = B.P(i, m + 1, B.range(1, m), p.a, true);
    return {d, u};
  }
  if (name == "PCS1" || name == "REL1") {
    require(l >= 0 && m >= 1, name + " needs l >= 0, m >= 1");
    const int a = name == "REL1" ? 1 : p.a, b = name == "REL1" ? 1 : p.b;
    Ks A = add(B.range(1, l), B.K(l + 1));
    Ks tail = B.range(l + 2, l + m);
    auto a1 = B.P(i, l + 1, B.range(1, l), a);
    auto a2 = B.P(i, l + m + 1, cat({A, {B.K(l + 1) + a - 1}, tail}), b);
    auto b1 = B.P(i, l + m + 1, cat({A, {B.K(l + 1) - 1}, tail}), b);
    auto b2 = B.P(i, l + 1, B.range(1, l), a);
    return {B.S(a1, a2), B.S(b1, b2)};
  }
  if (name == "PCS2" || name == "REL2") {
    require(l >= 1 && m >= 0, name + " needs l >= 1, m >= 0");
    const int a = name == "REL2" ? 1 : p.a, b = name == "REL2" ? 1 : p.b;
    const int kl = B.K(l);
    Ks pre = B.range(1, l - 1);
    Ks mid = B.range(l + 1, l + m);
    Ks Bv = add(mid, kl);
    auto a1 = B.P(i + l, m + 1, mid, a);
    auto a2 = B.P(i, l + m + 1, cat({pre, {kl - 1}, Bv}), b);
    auto b1 = B.P(i, l + m + 1, cat({pre, {kl + a - 1}, Bv}), b);
    auto b2 = B.P(i + l, m + 1, mid, a);
    return {B.S(a1, a2), B.S(b1, b2)};
  }
  if (name == "FR3" || name == "REL3" || name == "FR4") {
    require(l >= 1 && m >= 0 && q >= 1, name + " needs l >= 1, m >= 0, p >= 1");
    const int a = name == "REL3" ? 1 : p.a, b = name == "REL3" ? 1 : p.b;
    const int kl = B.K(l);
    Ks pre = B.range(1, l - 1);
    Ks mid = B.range(l + 1, l + m);
    Ks Bv = add(mid, kl);
    Ks tail = B.range(l + m + 2, l + m + q);
    if (name != "FR4") {
      auto a1 = B.P(i, l + m + 1, cat({pre, {kl + b - 1}, Bv}), a);
      auto a2 = B.P(i + l, m + q + 1, cat({mid, {-kl + a - 1}, tail}), b);
      auto b1 = B.P(i + l, m + q + 1, cat({mid, {-kl - 1}, tail}), b);
      auto b2 = B.P(i, l + m + 1, cat({pre, {kl - 1}, Bv}), a);
      return {B.S(a1, a2), B.S(b1, b2)};
    }
    auto a1 = B.P(i + l, m + 1, mid, a);
    auto a2 = B.P(i, l + m + q + 1, cat({pre, {kl - 1}, Bv, {kl + a - 1}, tail}), b);
    auto b1 = B.P(i, l + m + q + 1, cat({pre, {kl + a - 1}, Bv, {kl - 1}, tail}), b);
    auto b2 = B.P(i + l, m + 1, mid, a);
    return {B.S(a1, a2), B.S(b1, b2)};
  }
  if (name.size() == 3 && name.rfind("CS", 0) == 0) {
    require(l >= 0 && m >= 1, name + " needs l >= 0, m >= 1");
    require(p.a >= 0 && p.b >= 0 && p.a + p.b >= 1, name + " needs a, b >= 0 with a + b >= 1");
    const int a = p.a, b = p.b;
    Ks k = B.range(1, l);
    Ks k2 = B.range(l + 2, l + m);
    auto g1 = [&](Ks kk, int e) { return B.P(i, l + 1, std::move(kk), e); };
    auto g2 = [&](Ks kk, int e) { return B.P(i + l + 1, m, std::move(kk), e); };
    auto g12 = [&](Ks kk, int e) { return B.P(i, l + m + 1, std::move(kk), e); };
    switch (name[2]) {
      case '1': {
        auto a1 = g1(k, a + b);
        auto a2 = g2(k2, b);
        auto b1 = g12(cat({add(k, -a), {-a - 1}, k2}), b);
        auto b2 = g1(k, a);
        return {B.S(a1, a2), B.S(b1, b2)};
      }
      case '2': {
        auto a1 = g1(k, a);
        auto a2 = g2(k2, a + b);
        auto b1 = g2(k2, b);
        auto b2 = g12(cat({k, {-b - 1}, add(k2, -b)}), a);
        return {B.S(a1, a2), B.S(b1, b2)};
      }
      case '3': {
        auto a1 = g2(k2, a);
        auto a2 = g1(k, a + b);
        auto b1 = g1(add(k, -a), b);
        auto b2 = g12(cat({k, {a + b - 1}, k2}), a);
        return {B.S(a1, a2), B.S(b1, b2)};
      }
      case '4': {
        auto a1 = g2(k2, a + b);
        auto a2 = g1(k, b);
        auto b1 = g12(cat({k, {a + b - 1}, k2}), b);
        auto b2 = g2(add(k2, -b), a);
        return {B.S(a1, a2), B.S(b1, b2)};
      }
      default:
        break;
    }
  }
  throw std::invalid_argument("unknown relation: " + name);
}

}  // namespace

std::string RelationParams::describe() const {
  std::ostringstream os;
  os << "i=" << i << " l=" << l << " m=" << m << " p=" << p << " a=" << a << " b=" << b << " k=[";
  for (std::size_t t = 0; t < k.size(); ++t) os << (t ? "," : "") << k[t];
  os << "]";
  return os.str();
}

const std::vector<std::string>& relation_names() {
  static const std::vector<std::string> names{"QR1", "QR2", "QR21", "QR6", "QR7", "REL1", "REL2", "REL3", "PCS1",
                                              "PCS2", "FR3",  "FR4",  "CS1", "CS2", "CS3",  "CS4",  "TCOM", "LF"};
  return names;
}

bool is_relation(const std::string& name) {
  const auto& n = relation_names();
  return std::find(n.begin(), n.end(), name) != n.end();
}

RelationInstance build_relation(const Algebra& alg, const std::string& name, const RelationParams& p,
                                const std::optional<KPerturbation>& perturb) {
  if (!is_relation(name)) throw std::invalid_argument("unknown relation: " + name);
  require(p.i >= 0, "start index must be non-negative");
  Builder B(alg, p, perturb);
  auto [lhs, rhs] = build_pair(B, name, p);
  RelationInstance inst{name, p, lhs, rhs, B.slots(), B.perturbed()};
  return inst;
}

std::vector<RelationParams> relation_grid(const std::string& name, int n, std::uint64_t seed, const GridLimits& lim) {
  if (!is_relation(name)) throw std::invalid_argument("unknown relation: " + name);
  const int groups = n - 1;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> kd(-lim.k_range, lim.k_range);
  std::vector<RelationParams> out;
  auto emit = [&](int span, int vars, RelationParams p) {
    if (vars > lim.max_vars) return;
    for (int i = 0; i + span <= groups; ++i)
      for (int d = 0; d < lim.k_draws; ++d) {
        p.i = i;
        p.k.clear();
        for (int t = 0; t < 8; ++t) p.k.push_back(kd(rng));
        out.push_back(p);
      }
  };
  const int L = lim.max_len;
  const bool unit_ab = name == "REL1" || name == "REL2" || name == "REL3";
  for (int l = 0; l <= L; ++l)
    for (int m = 0; m <= L; ++m)
      for (int q = 1; q <= std::max(L, 2); ++q)
        for (int a = 0; a <= lim.max_ab; ++a)
          for (int b = 0; b <= lim.max_ab; ++b) {
            if (a + b > lim.max_ab) continue;
            RelationParams p;
            p.l = l, p.m = m, p.p = q, p.a = a, p.b = b;
            const bool simple = l == 0 && q == 1 && a == 1 && b == 1;
            if (name == "QR1" || name == "QR2") {
              if (l >= 1 && q == 1 && a == 1 && b == 1) emit(l + m + 1, l + m + 1, p);
            } else if (name == "QR21" || name == "QR6") {
              if (simple && m >= 1) emit(m + 1, m + 2, p);
            } else if (name == "QR7") {
              if (q >= 2 && a == 1 && b == 1) emit(m + q + l + 1, m + l + 2, p);
            } else if (name == "TCOM") {
              if (l == 0 && a == 1 && b == 1 && m >= 1 && q <= 2) emit(m + 1, 2 * (m + 1), p);
            } else if (name == "LF") {
              if (l == 0 && q == 1 && b == 0 && a >= 2) emit(m + 1, a * (m + 1), p);
            } else if (name == "PCS1" || name == "REL1") {
              if (q != 1 || m < 1 || a < 1 || b < 1 || (unit_ab && (a != 1 || b != 1))) continue;
              emit(l + m + 1, a * (l + 1) + b * (l + m + 1), p);
            } else if (name == "PCS2" || name == "REL2") {
              if (q != 1 || l < 1 || a < 1 || b < 1 || (unit_ab && (a != 1 || b != 1))) continue;
              emit(l + m + 1, a * (m + 1) + b * (l + m + 1), p);
            } else if (name == "FR3" || name == "REL3") {
              if (l < 1 || a < 1 || b < 1 || (unit_ab && (a != 1 || b != 1))) continue;
              emit(l + m + q + 1, a * (l + m + 1) + b * (m + q + 1), p);
            } else if (name == "FR4") {
              if (l < 1 || a < 1 || b < 1) continue;
              emit(l + m + q + 1, a * (m + 1) + b * (l + m + q + 1), p);
            } else {  // CS1..CS4
              if (q != 1 || m < 1 || a + b < 1) continue;
              int big = 0;
              if (name == "CS1") big = (a + b) * (l + 1) + b * m;
              if (name == "CS2") big = a * (l + 1) + (a + b) * m;
              if (name == "CS3") big = a * m + (a + b) * (l + 1);
              if (name == "CS4") big = (a + b) * m + b * (l + 1);
              emit(l + m + 1, big, p);
            }
          }
  return out;
}

}  // namespace dws::star
