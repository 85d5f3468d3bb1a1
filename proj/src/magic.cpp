#include "magicstego/magic.hpp"

#include <map>
#include <mutex>
#include <string>
#include <utility>

#include "magicstego/error.hpp"

namespace magicstego {
namespace {

using Cells = std::vector<std::uint32_t>;

Cells siamese(std::size_t n) {
  Cells cells(n * n, 0);
  std::size_t row = 0;
  std::size_t col = n / 2;
  for (std::uint32_t v = 1; v <= n * n; ++v) {
    cells[row * n + col] = v;
    const std::size_t up = (row + n - 1) % n;
    const std::size_t right = (col + 1) % n;
    if (cells[up * n + right] != 0) {
      row = (row + 1) % n;
    } else {
      row = up;
      col = right;
    }
  }
  return cells;
}

Cells doubly_even(std::size_t n) {
  Cells cells(n * n);
  const auto top = static_cast<std::uint32_t>(n * n + 1);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      const auto v = static_cast<std::uint32_t>(r * n + c + 1);
      const bool on_diag = (r % 4 == c % 4) || ((r % 4) + (c % 4) == 3);
      cells[r * n + c] = on_diag ? top - v : v;
    }
  }
  return cells;
}

Cells strachey(std::size_t n) {
  const std::size_t m = n / 2;
  const Cells sub = siamese(m);
  const auto mm = static_cast<std::uint32_t>(m * m);

  // Quadrant offsets: TL +0, BR +m^2, TR +2m^2, BL +3m^2.
  Cells cells(n * n);
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t c = 0; c < m; ++c) {
      const std::uint32_t v = sub[r * m + c];
      cells[r * n + c] = v;
      cells[(r + m) * n + (c + m)] = v + mm;
      cells[r * n + (c + m)] = v + 2 * mm;
      cells[(r + m) * n + c] = v + 3 * mm;
    }
  }

  const std::size_t k = (n - 2) / 4;
  auto swap_rows = [&](std::size_t r, std::size_t c) {
    std::swap(cells[r * n + c], cells[(r + m) * n + c]);
  };
  for (std::size_t r = 0; r < m; ++r) {
    // Left block: k columns, shifted one to the right on the middle row.
    const std::size_t first = (r == m / 2) ? 1 : 0;
    for (std::size_t c = first; c < first + k; ++c) swap_rows(r, c);
    // Right block: the last k-1 columns.
    for (std::size_t c = n - (k - 1); c < n; ++c) swap_rows(r, c);
  }
  return cells;
}

}  // namespace

MagicSquare::MagicSquare(std::size_t order, std::vector<std::uint32_t> cells)
    : order_(order), cells_(std::move(cells)) {
  if (cells_.size() != order_ * order_) {
    throw StegoError(ErrorCode::DimensionMismatch, "magic square cell count mismatch");
  }
}

MagicSquare magic_square(std::size_t n) {
  if (n < 3) {
    throw StegoError(ErrorCode::UnsupportedOrder,
                     "no magic square of order " + std::to_string(n));
  }
  if (n % 2 == 1) return {n, siamese(n)};
  if (n % 4 == 0) return {n, doubly_even(n)};
  return {n, strachey(n)};
}

std::shared_ptr<const TraversalOrder> traversal_order(std::size_t n) {
  static std::mutex mu;
  static std::map<std::size_t, std::shared_ptr<const TraversalOrder>> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }

  const MagicSquare square = magic_square(n);
  auto order = std::make_shared<TraversalOrder>();
  order->order = n;
  order->positions.resize(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      order->positions[square.at(r, c) - 1] = {static_cast<std::uint32_t>(r),
                                               static_cast<std::uint32_t>(c)};
    }
  }

  std::lock_guard lock(mu);
  auto [it, inserted] = cache.emplace(n, std::move(order));
  return it->second;
}

}  // namespace magicstego
