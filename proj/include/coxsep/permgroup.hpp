#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace coxsep {

using BigInt = boost::multiprecision::cpp_int;

enum class Parity { even, odd };

// Bijection of {0, ..., degree-1}. Products apply the left factor first:
// (p * q)(x) = q(p(x)).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::size_t degree);  // identity
  explicit Permutation(std::vector<std::uint32_t> images);

  // 1-indexed cycle notation, "()" for the identity.
  static Permutation parse_cycles(const std::string& text, std::size_t degree);
  static Permutation from_cycles(const std::vector<std::vector<std::uint32_t>>& cycles,
                                 std::size_t degree);

  std::size_t degree() const { return images_.size(); }
  std::uint32_t operator[](std::size_t x) const { return images_[x]; }
  const std::vector<std::uint32_t>& images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;
  Permutation operator*(const Permutation& rhs) const;
  std::vector<std::vector<std::uint32_t>> cycles() const;  // nontrivial cycles, 0-indexed
  std::string to_cycle_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::uint32_t> images_;
};

Parity parity(const Permutation& p);
std::size_t support(const Permutation& p);
bool is_transitive(const std::vector<Permutation>& gens, std::size_t degree);
std::vector<std::uint32_t> orbit(const std::vector<Permutation>& gens, std::size_t degree,
                                 std::uint32_t point);

BigInt factorial(std::size_t n);
bool is_prime(std::size_t n);

// Exact order of the generated group.
BigInt group_order(const std::vector<Permutation>& gens, std::size_t degree);

enum class Verdict { alternating, symmetric, other };

struct RecognitionEvidence {
  bool transitive = false;
  bool prime_degree = false;
  std::optional<std::pair<std::size_t, std::size_t>> small_support_witness;  // (generator, support)
  bool all_even = false;
};

struct RecognitionResult {
  Verdict verdict = Verdict::other;
  BigInt order;
  RecognitionEvidence evidence;
};

RecognitionResult recognize(const std::vector<Permutation>& gens, std::size_t degree);

std::string to_string(Verdict v);
std::string to_string(Parity p);

}  // namespace coxsep
