#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace hetseg {

/// Dense row-major 2D raster.
template <typename T>
struct Grid {
  int h = 0;
  int w = 0;
  std::vector<T> v;

  Grid() = default;
  Grid(int h_, int w_, T fill = T{}) : h(h_), w(w_), v(static_cast<std::size_t>(h_) * w_, fill) {
    if (h_ <= 0 || w_ <= 0) throw std::invalid_argument("Grid: dimensions must be positive");
  }

  T& at(int y, int x) { return v[static_cast<std::size_t>(y) * w + x]; }
  const T& at(int y, int x) const { return v[static_cast<std::size_t>(y) * w + x]; }
  std::size_t size() const { return v.size(); }

  bool operator==(const Grid&) const = default;
};

using LabelGrid = Grid<std::uint8_t>;
using ImageGrid = Grid<float>;

}  // namespace hetseg
