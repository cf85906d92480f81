#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace hilbertimg {

/// Square row-major grid. Curve point (x, y) lands in row x, column y.
template <typename T>
class Grid {
public:
    Grid() = default;
    explicit Grid(std::size_t side, T fill = T{}) : side_(side), cells_(side * side, fill) {}

    std::size_t side() const noexcept { return side_; }
    std::size_t size() const noexcept { return cells_.size(); }

    T& at(std::size_t row, std::size_t col) { return cells_[row * side_ + col]; }
    const T& at(std::size_t row, std::size_t col) const { return cells_[row * side_ + col]; }

    const std::vector<T>& cells() const noexcept { return cells_; }
    std::vector<T>& cells() noexcept { return cells_; }

    friend bool operator==(const Grid&, const Grid&) = default;

private:
    std::size_t side_ = 0;
    std::vector<T> cells_;
};

using CountGrid = Grid<std::uint64_t>;
using IntensityGrid = Grid<std::uint8_t>;

}  // namespace hilbertimg
