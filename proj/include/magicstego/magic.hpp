#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <vector>

namespace magicstego {

/// n x n square holding a permutation of 1..n^2 whose rows, columns and both
/// main diagonals share the same sum.
class MagicSquare {
 public:
  MagicSquare(std::size_t order, std::vector<std::uint32_t> cells);

  std::size_t order() const noexcept { return order_; }
  std::uint32_t at(std::size_t row, std::size_t col) const {
    return cells_[row * order_ + col];
  }
  const std::vector<std::uint32_t>& cells() const noexcept { return cells_; }

  friend bool operator==(const MagicSquare&, const MagicSquare&) = default;

 private:
  std::size_t order_;
  std::vector<std::uint32_t> cells_;
};

struct CellPos {
  std::uint32_t row = 0;
  std::uint32_t col = 0;

  friend bool operator==(const CellPos&, const CellPos&) = default;
};

/// positions[k] is the cell holding value k+1 in magic_square(order).
struct TraversalOrder {
  std::size_t order = 0;
  std::vector<CellPos> positions;
};

/// n(n^2+1)/2.
constexpr std::uint64_t magic_constant(std::uint64_t n) noexcept {
  return n * (n * n + 1) / 2;
}

/// Deterministic construction, part of the stego wire format:
///   odd n            Siamese (1 at top row middle, up-right, drop down on collision)
///   n % 4 == 0       doubly-even complement of the diagonal pattern
///   n % 4 == 2       Strachey: four Siamese sub-squares plus column exchanges
/// Throws UnsupportedOrder for n < 3.
MagicSquare magic_square(std::size_t n);

/// Cached per order; safe to call concurrently.
std::shared_ptr<const TraversalOrder> traversal_order(std::size_t n);

}  // namespace magicstego
