#pragma once

// Test oracles built only on linear algebra and brute force, sharing no code
// with the library beyond the graph type.

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "coxsep/graph.hpp"

namespace oracle {

// Integer matrix of the geometric representation. Entries stay small for the
// word lengths used in tests.
using Matrix = std::vector<std::int64_t>;

class Tits {
 public:
  explicit Tits(const coxsep::SimplicialGraph& g) : n_(g.size()) {
    // B(e_s, e_t) = 1 on the diagonal, 0 for commuting pairs, -1 otherwise;
    // sigma_s(v) = v - 2 B(e_s, v) e_s.
    for (std::size_t s = 0; s < n_; ++s) {
      Matrix m = identity();
      for (std::size_t t = 0; t < n_; ++t) {
        std::int64_t b = s == t ? 1 : (g.adjacent(s, t) ? 0 : -1);
        m[s * n_ + t] -= 2 * b;
      }
      gens_.push_back(m);
    }
  }

  std::size_t rank() const { return n_; }

  Matrix identity() const {
    Matrix m(n_ * n_, 0);
    for (std::size_t i = 0; i < n_; ++i) m[i * n_ + i] = 1;
    return m;
  }

  Matrix mul(const Matrix& a, const Matrix& b) const {
    Matrix c(n_ * n_, 0);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t k = 0; k < n_; ++k) {
        const auto x = a[i * n_ + k];
        if (x == 0) continue;
        for (std::size_t j = 0; j < n_; ++j) c[i * n_ + j] += x * b[k * n_ + j];
      }
    return c;
  }

  const Matrix& gen(std::size_t s) const { return gens_[s]; }

  Matrix word(const std::vector<std::uint16_t>& w) const {
    Matrix m = identity();
    for (auto s : w) m = mul(m, gens_[s]);
    return m;
  }

  // Inverse of a product of involutions: the word reversed.
  Matrix inverse_word(const std::vector<std::uint16_t>& w) const {
    Matrix m = identity();
    for (auto it = w.rbegin(); it != w.rend(); ++it) m = mul(m, gens_[*it]);
    return m;
  }

  // l(w s) < l(w) iff w(e_s) is a negative root.
  bool right_descent(const Matrix& w, std::size_t s) const {
    for (std::size_t i = 0; i < n_; ++i) {
      if (w[i * n_ + s] > 0) return false;
    }
    return true;
  }

  // A reduced word for w, read off by stripping right descents.
  std::vector<std::uint16_t> reduced_word(Matrix w) const {
    std::vector<std::uint16_t> out;
    const Matrix one = identity();
    while (w != one) {
      std::size_t s = 0;
      while (!right_descent(w, s)) ++s;
      out.push_back(static_cast<std::uint16_t>(s));
      w = mul(w, gens_[s]);
    }
    std::reverse(out.begin(), out.end());
    return out;
  }

  std::size_t length(const Matrix& w) const { return reduced_word(w).size(); }

  // Reflections crossed by a geodesic from u to v, as matrices.
  std::set<Matrix> walls_between(const std::vector<std::uint16_t>& u,
                                 const std::vector<std::uint16_t>& v) const {
    const Matrix mu = word(u);
    const Matrix diff = mul(inverse_word(u), word(v));
    std::set<Matrix> out;
    Matrix prefix = mu;
    for (auto s : reduced_word(diff)) {
      Matrix r = mul(mul(prefix, gens_[s]), inverse_of(prefix));
      out.insert(r);
      prefix = mul(prefix, gens_[s]);
    }
    return out;
  }

  Matrix inverse_of(const Matrix& w) const { return inverse_word(reduced_word(w)); }

 private:
  std::size_t n_;
  std::vector<Matrix> gens_;
};

// Cayley ball by breadth-first search on matrices: length of every element of
// length <= radius.
inline std::map<Matrix, std::size_t> cayley_ball(const Tits& t, std::size_t radius) {
  std::map<Matrix, std::size_t> dist;
  std::vector<Matrix> frontier{t.identity()};
  dist[t.identity()] = 0;
  for (std::size_t r = 1; r <= radius; ++r) {
    std::vector<Matrix> next;
    for (const auto& m : frontier)
      for (std::size_t s = 0; s < t.rank(); ++s) {
        Matrix x = t.mul(m, t.gen(s));
        if (dist.emplace(x, r).second) next.push_back(std::move(x));
      }
    frontier = std::move(next);
  }
  return dist;
}

// Convex hull by half-spaces: x is in the hull iff every wall between the
// first seed and x also separates the first seed from another seed. The
// region is explored by crossing only such walls.
inline std::set<Matrix> halfspace_hull(const Tits& t,
                                       const std::vector<std::vector<std::uint16_t>>& seeds) {
  std::set<Matrix> allowed;
  for (const auto& s : seeds) {
    for (const auto& w : t.walls_between(seeds[0], s)) allowed.insert(w);
  }
  std::set<Matrix> seen{t.word(seeds[0])};
  std::vector<Matrix> stack{t.word(seeds[0])};
  while (!stack.empty()) {
    Matrix x = stack.back();
    stack.pop_back();
    const Matrix xinv = t.inverse_of(x);
    for (std::size_t s = 0; s < t.rank(); ++s) {
      Matrix wall = t.mul(t.mul(x, t.gen(s)), xinv);
      if (!allowed.count(wall)) continue;
      Matrix y = t.mul(x, t.gen(s));
      if (seen.insert(y).second) stack.push_back(std::move(y));
    }
  }
  return seen;
}

// Connected components of the complement by union-find.
inline std::size_t complement_components(const coxsep::SimplicialGraph& g) {
  std::vector<std::size_t> parent(g.size());
  for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = i;
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t count = g.size();
  for (std::size_t u = 0; u < g.size(); ++u)
    for (std::size_t v = u + 1; v < g.size(); ++v) {
      if (g.adjacent(u, v)) continue;
      auto a = find(u), b = find(v);
      if (a != b) {
        parent[a] = b;
        --count;
      }
    }
  return count;
}

// Order of a permutation group by closure, for small groups only.
inline std::size_t closure_order(const std::vector<std::vector<std::uint32_t>>& gens,
                                 std::size_t degree, std::size_t cap = 6000) {
  std::vector<std::uint32_t> id(degree);
  for (std::size_t i = 0; i < degree; ++i) id[i] = static_cast<std::uint32_t>(i);
  std::set<std::vector<std::uint32_t>> seen{id};
  std::vector<std::vector<std::uint32_t>> queue{id};
  for (std::size_t k = 0; k < queue.size() && seen.size() <= cap; ++k) {
    for (const auto& g : gens) {
      std::vector<std::uint32_t> p(degree);
      for (std::size_t x = 0; x < degree; ++x) p[x] = g[queue[k][x]];
      if (seen.insert(p).second) queue.push_back(std::move(p));
    }
  }
  return seen.size();
}

}  // namespace oracle
