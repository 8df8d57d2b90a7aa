#include "coxsep/permgroup.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

#include "coxsep/errors.hpp"

namespace coxsep {

Permutation::Permutation(std::size_t degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), 0U);
}

Permutation::Permutation(std::vector<std::uint32_t> images) : images_(std::move(images)) {
  std::vector<bool> hit(images_.size(), false);
  for (auto x : images_) {
    if (x >= images_.size() || hit[x]) throw InvalidArgument("not a permutation");
    hit[x] = true;
  }
}

Permutation Permutation::from_cycles(const std::vector<std::vector<std::uint32_t>>& cycles,
                                     std::size_t degree) {
  std::vector<std::uint32_t> images(degree);
  std::iota(images.begin(), images.end(), 0U);
  std::vector<bool> used(degree, false);
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      const auto x = cycle[i];
      if (x >= degree || used[x]) throw InvalidArgument("bad cycle notation");
      used[x] = true;
      images[x] = cycle[(i + 1) % cycle.size()];
    }
  }
  return Permutation(std::move(images));
}

Permutation Permutation::parse_cycles(const std::string& text, std::size_t degree) {
  std::vector<std::vector<std::uint32_t>> cycles;
  std::vector<std::uint32_t> current;
  bool open = false;
  std::string number;
  auto flush = [&] {
    if (number.empty()) return;
    const unsigned long v = std::stoul(number);
    if (v == 0) throw InvalidArgument("cycle notation is 1-indexed");
    current.push_back(static_cast<std::uint32_t>(v - 1));
    number.clear();
  };
  for (char ch : text) {
    if (ch == '(') {
      if (open) throw InvalidArgument("nested '(' in cycle notation");
      open = true;
    } else if (ch == ')') {
      if (!open) throw InvalidArgument("unbalanced ')' in cycle notation");
      flush();
      if (!current.empty()) cycles.push_back(current);
      current.clear();
      open = false;
    } else if (ch >= '0' && ch <= '9') {
      if (!open) throw InvalidArgument("digit outside a cycle");
      number += ch;
    } else if (ch == ' ' || ch == ',') {
      flush();
    } else {
      throw InvalidArgument(std::string("unexpected character '") + ch + "' in cycle notation");
    }
  }
  if (open) throw InvalidArgument("unterminated cycle");
  return from_cycles(cycles, degree);
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<std::uint32_t> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = static_cast<std::uint32_t>(i);
  Permutation p;
  p.images_ = std::move(inv);
  return p;
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  if (degree() != rhs.degree()) throw InvalidArgument("degree mismatch");
  Permutation p;
  p.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) p.images_[i] = rhs.images_[images_[i]];
  return p;
}

std::vector<std::vector<std::uint32_t>> Permutation::cycles() const {
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<bool> seen(images_.size(), false);
  for (std::uint32_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    std::vector<std::uint32_t> cycle;
    for (std::uint32_t x = i; !seen[x]; x = images_[x]) {
      seen[x] = true;
      cycle.push_back(x);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

std::string Permutation::to_cycle_string() const {
  const auto cs = cycles();
  if (cs.empty()) return "()";
  std::ostringstream out;
  for (const auto& c : cs) {
    out << '(';
    for (std::size_t i = 0; i < c.size(); ++i) out << (i ? " " : "") << c[i] + 1;
    out << ')';
  }
  return out.str();
}

Parity parity(const Permutation& p) {
  std::size_t transpositions = 0;
  for (const auto& c : p.cycles()) transpositions += c.size() - 1;
  return transpositions % 2 == 0 ? Parity::even : Parity::odd;
}

std::size_t support(const Permutation& p) {
  std::size_t moved = 0;
  for (std::size_t i = 0; i < p.degree(); ++i) moved += p[i] != i;
  return moved;
}

std::vector<std::uint32_t> orbit(const std::vector<Permutation>& gens, std::size_t degree,
                                 std::uint32_t point) {
  std::vector<bool> seen(degree, false);
  std::vector<std::uint32_t> out{point};
  seen[point] = true;
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (const auto& g : gens) {
      const auto y = g[out[i]];
      if (!seen[y]) {
        seen[y] = true;
        out.push_back(y);
      }
    }
  }
  return out;
}

bool is_transitive(const std::vector<Permutation>& gens, std::size_t degree) {
  if (degree == 0) return true;
  for (const auto& g : gens) {
    if (g.degree() != degree) throw InvalidArgument("generator degree mismatch");
  }
  return orbit(gens, degree, 0).size() == degree;
}

BigInt factorial(std::size_t n) {
  BigInt out = 1;
  for (std::size_t k = 2; k <= n; ++k) out *= k;
  return out;
}

bool is_prime(std::size_t n) {
  if (n < 2) return false;
  for (std::size_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

namespace {

constexpr std::int32_t kOutside = -2;
constexpr std::int32_t kRoot = -1;

// Stabilizer chain with shallow Schreier trees.
class StabilizerChain {
 public:
  explicit StabilizerChain(std::size_t degree) : n_(degree), rng_(0xc0ffee5eedULL) {
    std::size_t log = 1;
    while ((std::size_t{1} << log) < degree) ++log;
    depth_limit_ = 2 * log + 2;
  }

  BigInt order() const {
    BigInt out = 1;
    for (const auto& level : levels_) out *= level.orbit.size();
    return out;
  }

  // Sifts h from `start`; returns the residue and the level it stopped at.
  std::pair<std::vector<std::uint32_t>, std::size_t> sift(std::vector<std::uint32_t> h,
                                                          std::size_t start) const {
    std::vector<std::uint32_t> scratch(n_);
    for (std::size_t i = start; i < levels_.size(); ++i) {
      const Level& level = levels_[i];
      std::uint32_t p = h[level.point];
      if (level.via[p] == kOutside) return {std::move(h), i};
      while (p != level.point) {
        const auto& inv = inverses_[static_cast<std::size_t>(level.via[p])];
        for (std::size_t x = 0; x < n_; ++x) scratch[x] = inv[h[x]];
        std::swap(h, scratch);
        p = h[level.point];
      }
    }
    return {std::move(h), levels_.size()};
  }

  static bool identity(const std::vector<std::uint32_t>& h) {
    for (std::size_t i = 0; i < h.size(); ++i) {
      if (h[i] != i) return false;
    }
    return true;
  }

  // h fixes the base points of levels below `level`.
  void add(const std::vector<std::uint32_t>& h, std::size_t level) {
    if (level == levels_.size()) {
      std::uint32_t moved = 0;
      while (h[moved] == moved) ++moved;
      Level fresh;
      fresh.point = moved;
      fresh.via.assign(n_, kOutside);
      fresh.depth.assign(n_, 0);
      fresh.via[moved] = kRoot;
      fresh.orbit.push_back(moved);
      levels_.push_back(std::move(fresh));
    }
    const std::size_t index = store(h);
    for (std::size_t i = 0; i <= level; ++i) {
      levels_[i].gens.push_back(index);
      // Level i moves at most n - i points; a full orbit cannot grow.
      if (levels_[i].orbit.size() < n_ - i) extend(levels_[i], index);
    }
  }

  // u_p: maps the base point of `level` to p.
  std::vector<std::uint32_t> transversal(std::size_t level, std::uint32_t p) const {
    const Level& l = levels_[level];
    std::vector<std::size_t> path;
    while (p != l.point) {
      const auto g = static_cast<std::size_t>(l.via[p]);
      path.push_back(g);
      p = inverses_[g][p];
    }
    std::vector<std::uint32_t> u(n_);
    std::iota(u.begin(), u.end(), 0U);
    for (auto it = path.rbegin(); it != path.rend(); ++it) {
      for (auto& x : u) x = strong_[*it][x];
    }
    return u;
  }

  // Deterministic check that every Schreier generator sifts to the identity,
  // adding residues as new strong generators.
  void complete() {
    std::size_t i = levels_.size();
    while (i-- > 0) {
      bool restarted = false;
      for (std::size_t k = 0; k < levels_[i].orbit.size() && !restarted; ++k) {
        const std::uint32_t p = levels_[i].orbit[k];
        const auto u = transversal(i, p);
        const std::vector<std::size_t> gens = levels_[i].gens;
        for (std::size_t g : gens) {
          std::vector<std::uint32_t> sg(n_);
          for (std::size_t x = 0; x < n_; ++x) sg[x] = strong_[g][u[x]];
          const std::uint32_t q = sg[levels_[i].point];
          const auto uq = transversal(i, q);
          std::vector<std::uint32_t> uq_inv(n_);
          for (std::size_t x = 0; x < n_; ++x) uq_inv[uq[x]] = static_cast<std::uint32_t>(x);
          for (auto& x : sg) x = uq_inv[x];
          auto [residue, stop] = sift(std::move(sg), i + 1);
          if (!identity(residue)) {
            add(residue, stop);
            i = stop + 1;
            restarted = true;
            break;
          }
        }
      }
    }
  }

 private:
  struct Level {
    std::uint32_t point = 0;
    std::vector<std::size_t> gens;
    std::vector<std::int32_t> via;
    std::vector<std::uint32_t> depth;
    std::vector<std::uint32_t> orbit;
    std::uint32_t max_depth = 0;
  };

  std::size_t store(const std::vector<std::uint32_t>& h) {
    strong_.push_back(h);
    std::vector<std::uint32_t> inv(n_);
    for (std::size_t x = 0; x < n_; ++x) inv[h[x]] = static_cast<std::uint32_t>(x);
    inverses_.push_back(std::move(inv));
    return strong_.size() - 1;
  }

  void attach(Level& level, std::uint32_t from, std::size_t g) {
    const std::uint32_t q = strong_[g][from];
    if (level.via[q] != kOutside) return;
    level.via[q] = static_cast<std::int32_t>(g);
    level.depth[q] = level.depth[from] + 1;
    level.max_depth = std::max(level.max_depth, level.depth[q]);
    level.orbit.push_back(q);
  }

  // Grows the orbit after generator `added` joined the level: the new
  // generator is applied to known points, all generators to new points.
  void extend(Level& level, std::size_t added) {
    const std::size_t known = level.orbit.size();
    for (std::size_t k = 0; k < known; ++k) attach(level, level.orbit[k], added);
    for (std::size_t k = known; k < level.orbit.size(); ++k) {
      for (std::size_t g : level.gens) attach(level, level.orbit[k], g);
    }
    if (level.max_depth > depth_limit_) flatten(level);
  }

  void rebuild(Level& level) {
    for (auto p : level.orbit) level.via[p] = kOutside;
    level.orbit.assign(1, level.point);
    level.via[level.point] = kRoot;
    level.depth[level.point] = 0;
    level.max_depth = 0;
    for (std::size_t k = 0; k < level.orbit.size(); ++k) {
      for (std::size_t g : level.gens) attach(level, level.orbit[k], g);
    }
  }

  // Breadth-first rebuild, then random subproducts of the level generators
  // as extra generators until the tree is shallow.
  void flatten(Level& level) {
    rebuild(level);
    for (int round = 0; round < 8 && level.max_depth > depth_limit_; ++round) {
      std::vector<std::uint32_t> product(n_);
      std::iota(product.begin(), product.end(), 0U);
      for (std::size_t g : level.gens) {
        if (rng_() & 1U) {
          for (auto& x : product) x = strong_[g][x];
        }
      }
      if (identity(product)) continue;
      level.gens.push_back(store(product));
      rebuild(level);
    }
  }

  std::size_t n_;
  std::uint32_t depth_limit_ = 0;
  std::mt19937_64 rng_;
  std::vector<Level> levels_;
  std::vector<std::vector<std::uint32_t>> strong_;
  std::vector<std::vector<std::uint32_t>> inverses_;
};

}  // namespace

BigInt group_order(const std::vector<Permutation>& gens, std::size_t degree) {
  std::vector<std::vector<std::uint32_t>> real;
  bool all_even = true;
  for (const auto& g : gens) {
    if (g.degree() != degree) throw InvalidArgument("generator degree mismatch");
    if (!g.is_identity()) real.push_back(g.images());
    if (parity(g) == Parity::odd) all_even = false;
  }
  if (real.empty() || degree < 2) return 1;

  StabilizerChain chain(degree);
  for (const auto& g : real) {
    auto [residue, level] = chain.sift(g, 0);
    if (!StabilizerChain::identity(residue)) chain.add(residue, level);
  }

  const BigInt bound = all_even ? factorial(degree) / 2 : factorial(degree);
  // Product replacement with a fixed seed keeps runs reproducible.
  std::mt19937_64 rng(0x5eedc0de5eedULL);
  std::vector<std::vector<std::uint32_t>> state;
  while (state.size() < std::max<std::size_t>(10, real.size())) {
    state.push_back(real[state.size() % real.size()]);
  }
  std::vector<std::uint32_t> accumulator(degree);
  std::iota(accumulator.begin(), accumulator.end(), 0U);
  std::vector<std::uint32_t> scratch(degree);
  auto random_element = [&] {
    std::uniform_int_distribution<std::size_t> pick(0, state.size() - 1);
    std::size_t a = pick(rng), b = pick(rng);
    while (b == a) b = pick(rng);
    auto& x = state[a];
    const auto& y = state[b];
    if (rng() & 1U) {
      for (std::size_t i = 0; i < degree; ++i) scratch[i] = y[x[i]];
    } else {
      for (std::size_t i = 0; i < degree; ++i) scratch[i] = x[y[i]];
    }
    x.swap(scratch);
    for (std::size_t i = 0; i < degree; ++i) scratch[i] = x[accumulator[i]];
    accumulator.swap(scratch);
    return accumulator;
  };
  for (int i = 0; i < 60; ++i) random_element();

  std::size_t quiet = 0;
  while (chain.order() < bound && quiet < 48) {
    auto [residue, level] = chain.sift(random_element(), 0);
    if (StabilizerChain::identity(residue)) {
      ++quiet;
    } else {
      chain.add(residue, level);
      quiet = 0;
    }
  }
  // The product of basic orbit lengths never exceeds the true order, so
  // reaching the bound is a proof; otherwise finish deterministically.
  if (chain.order() < bound) chain.complete();
  return chain.order();
}

RecognitionResult recognize(const std::vector<Permutation>& gens, std::size_t degree) {
  if (degree < 1) throw InvalidArgument("recognize needs degree >= 1");
  RecognitionResult r;
  r.order = group_order(gens, degree);
  r.evidence.transitive = is_transitive(gens, degree);
  r.evidence.prime_degree = is_prime(degree);
  r.evidence.all_even = true;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (parity(gens[i]) == Parity::odd) r.evidence.all_even = false;
    const std::size_t s = support(gens[i]);
    if (s == 0) continue;
    if (!r.evidence.small_support_witness || s < r.evidence.small_support_witness->second) {
      r.evidence.small_support_witness = std::make_pair(i, s);
    }
  }
  const BigInt full = factorial(degree);
  if (r.order == full / 2) {
    r.verdict = Verdict::alternating;
  } else if (r.order == full) {
    r.verdict = Verdict::symmetric;
  }
  if (degree >= 3) {
    if (r.verdict == Verdict::alternating && !r.evidence.all_even) {
      throw InvariantBreach("alternating verdict with an odd generator");
    }
    if (r.verdict == Verdict::symmetric && r.evidence.all_even) {
      throw InvariantBreach("symmetric verdict with all generators even");
    }
  }
  return r;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::alternating:
      return "alternating";
    case Verdict::symmetric:
      return "symmetric";
    case Verdict::other:
      return "other";
  }
  return "other";
}

std::string to_string(Parity p) { return p == Parity::even ? "even" : "odd"; }

}  // namespace coxsep
