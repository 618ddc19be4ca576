#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace phinil {

// Permutation of {0..d-1}. Products compose left to right:
// (x * y)(i) = y(x(i)).
class Permutation {
 public:
  using Point = std::uint16_t;

  Permutation() = default;
  // Throws std::invalid_argument unless images is a bijection on {0..d-1}.
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree);
  // Builds a permutation of the given degree from disjoint cycles.
  static Permutation from_cycles(std::size_t degree,
                                 std::initializer_list<std::initializer_list<Point>> cycles);

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator()(Point i) const { return images_[i]; }
  const std::vector<Point>& images() const noexcept { return images_; }

  Permutation operator*(const Permutation& other) const;
  Permutation inverse() const;
  bool is_identity() const noexcept;

  // Lengths of the nontrivial cycles, ascending.
  std::vector<std::size_t> cycle_lengths() const;
  // lcm of cycle lengths.
  std::uint64_t order() const;
  bool is_even() const;

  std::string to_cycle_string() const;

  bool operator==(const Permutation&) const = default;
  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<Point> images_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

}  // namespace phinil
