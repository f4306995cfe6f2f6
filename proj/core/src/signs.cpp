#include "dws/signs.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <stdexcept>

namespace dws::orbit {

Lattice Lattice::default_for(int n) {
  Lattice lat;
  lat.periods.assign(n - 1, 2);
  if (n <= 3) lat.periods[0] = 1;
  return lat;
}

RootVec Lattice::reduce(const RootVec& g) const {
  if (g.size() != periods.size()) throw std::invalid_argument("lattice rank mismatch");
  RootVec out = g;
  for (std::size_t k = 0; k < g.size(); ++k) {
    int p = periods[k];
    if (p < 0) throw std::invalid_argument("lattice periods must be non-negative");
    if (p == 0) continue;
    out[k] = ((g[k] % p) + p) % p;
  }
  return out;
}

EdgeKey edge_key(const OrbitPoint& source, Root alpha, const Lattice& lat) {
  return EdgeKey{source.sigma, lat.reduce(source.gamma), alpha};
}

int SignAssignment::sign(const OrbitPoint& source, Root alpha) const {
  auto it = signs.find(edge_key(source, alpha, lattice));
  return it == signs.end() ? 1 : it->second;
}

void SignAssignment::flip(const EdgeKey& key) {
  auto it = signs.find(key);
  if (it == signs.end())
    signs.emplace(key, -1);
  else
    it->second = -it->second;
}

std::vector<EdgeKey> square_edges(const Orbit& orb, const CommutingSquare& sq, const Lattice& lat) {
  OrbitPoint q = orb.lambda_alpha(sq.lambda, sq.alpha);
  OrbitPoint q2 = orb.lambda_alpha(sq.lambda, sq.alpha2);
  return {edge_key(sq.lambda, sq.alpha, lat), edge_key(q, sq.beta, lat), edge_key(sq.lambda, sq.alpha2, lat),
          edge_key(q2, sq.beta2, lat)};
}

namespace {

struct Bits {
  std::vector<std::uint64_t> w;

  explicit Bits(std::size_t n = 0) : w((n + 63) / 64, 0) {}
  void flip(std::size_t i) { w[i / 64] ^= (1ULL << (i % 64)); }
  bool get(std::size_t i) const { return (w[i / 64] >> (i % 64)) & 1ULL; }
  void xor_with(const Bits& o) {
    for (std::size_t k = 0; k < w.size(); ++k) w[k] ^= o.w[k];
  }
  bool any() const {
    return std::any_of(w.begin(), w.end(), [](std::uint64_t x) { return x != 0; });
  }
  bool operator<(const Bits& o) const { return w < o.w; }
  bool operator==(const Bits& o) const { return w == o.w; }
};

struct Row {
  Bits coeff;
  bool rhs;
  Bits origin;
};

}  // namespace

SignSolveReport solve_signs(const Orbit& orb, int gamma_bound, const Lattice& lat, KappaSource src) {
  if (static_cast<int>(lat.periods.size()) != orb.n() - 1) throw std::invalid_argument("lattice rank mismatch");
  SignSolveReport rep;
  rep.assignment.lattice = lat;
  auto squares = squares_in_box(orb, gamma_bound, src, &rep.boundary_squares, &rep.simple_doubles);
  rep.squares = squares.size();

  std::map<EdgeKey, std::size_t> index;
  std::vector<std::vector<EdgeKey>> edges(squares.size());
  for (std::size_t s = 0; s < squares.size(); ++s) {
    edges[s] = square_edges(orb, squares[s], lat);
    for (const auto& e : edges[s]) index.emplace(e, 0);
  }
  std::vector<EdgeKey> keys;
  keys.reserve(index.size());
  for (auto& [k, v] : index) {
    v = keys.size();
    keys.push_back(k);
  }
  const std::size_t nv = keys.size();
  rep.unknowns = nv;

  // One row per distinct constraint; the representative square is kept for certificates.
  std::map<std::pair<Bits, bool>, std::size_t> seen;
  std::vector<std::size_t> rep_square;
  std::vector<Row> rows;
  for (std::size_t s = 0; s < squares.size(); ++s) {
    Bits c(nv);
    for (const auto& e : edges[s]) c.flip(index.at(e));
    bool rhs = squares[s].signature == -1 ? false : true;
    auto key = std::make_pair(c, rhs);
    if (seen.count(key)) continue;
    seen.emplace(key, rows.size());
    rep_square.push_back(s);
    rows.push_back(Row{c, rhs, Bits()});
  }
  const std::size_t ne = rows.size();
  rep.equations = ne;
  for (std::size_t k = 0; k < ne; ++k) {
    rows[k].origin = Bits(ne);
    rows[k].origin.flip(k);
  }

  std::vector<std::size_t> pivot_col;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < nv && rank < ne; ++col) {
    std::size_t piv = rank;
    while (piv < ne && !rows[piv].coeff.get(col)) ++piv;
    if (piv == ne) continue;
    std::swap(rows[piv], rows[rank]);
    for (std::size_t k = 0; k < ne; ++k) {
      if (k != rank && rows[k].coeff.get(col)) {
        rows[k].coeff.xor_with(rows[rank].coeff);
        rows[k].rhs ^= rows[rank].rhs;
        rows[k].origin.xor_with(rows[rank].origin);
      }
    }
    pivot_col.push_back(col);
    ++rank;
  }
  rep.rank = rank;

  for (std::size_t k = rank; k < ne; ++k) {
    if (rows[k].rhs) {
      rep.feasible = false;
      for (std::size_t e = 0; e < ne; ++e)
        if (rows[k].origin.get(e)) rep.certificate.push_back(squares[rep_square[e]]);
      return rep;
    }
  }
  rep.feasible = true;
  std::vector<bool> x(nv, false);
  for (std::size_t k = 0; k < rank; ++k) x[pivot_col[k]] = rows[k].rhs;
  for (std::size_t v = 0; v < nv; ++v) rep.assignment.signs.emplace(keys[v], x[v] ? -1 : 1);
  return rep;
}

DSquaredReport verify_d_squared(const Orbit& orb, int gamma_bound, const SignAssignment& signs, KappaSource src) {
  DSquaredReport rep;
  auto squares = squares_in_box(orb, gamma_bound, src, &rep.boundary_squares, &rep.simple_doubles);
  for (const auto& sq : squares) {
    ++rep.checked;
    OrbitPoint q = orb.lambda_alpha(sq.lambda, sq.alpha);
    OrbitPoint q2 = orb.lambda_alpha(sq.lambda, sq.alpha2);
    int left = signs.sign(q, sq.beta) * signs.sign(sq.lambda, sq.alpha);
    int right = signs.sign(q2, sq.beta2) * signs.sign(sq.lambda, sq.alpha2);
    // The two signed compositions must cancel.
    if (left + sq.signature * right != 0) rep.violations.push_back(sq);
  }
  return rep;
}

std::string to_string(const EdgeKey& k) {
  std::ostringstream os;
  os << rootsys::to_string(k.sigma) << " gamma=(";
  for (std::size_t i = 0; i < k.gamma.size(); ++i) os << (i ? "," : "") << k.gamma[i];
  os << ") " << rootsys::to_string(k.alpha);
  return os.str();
}

}  // namespace dws::orbit
