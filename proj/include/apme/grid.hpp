#pragma once

#include <array>
#include <cstddef>
#include <vector>

namespace apme {

// Tensor-product box grid on [-L_i, L_i] with node coordinates
// -L_i + j*delta_i, delta_i = 2 L_i/(sizes_i - 1). Row-major storage,
// last axis fastest.
struct Grid {
    int n = 0;
    std::array<int, 3> sizes = {1, 1, 1};
    std::array<double, 3> half_widths = {0.0, 0.0, 0.0};
    std::array<double, 3> spacings = {0.0, 0.0, 0.0};

    static Grid make(int n, const std::array<int, 3>& sizes,
                     const std::array<double, 3>& half_widths);

    double coord(int axis, int j) const {
        return -half_widths[axis] + j * spacings[axis];
    }
    std::size_t node_count() const {
        return static_cast<std::size_t>(sizes[0]) * sizes[1] * sizes[2];
    }
    std::size_t index(int i, int j, int k) const {
        return (static_cast<std::size_t>(i) * sizes[1] + j) * sizes[2] + k;
    }
    // Node cell volume (uniform weight, midpoint rule).
    double cell_volume() const {
        double v = 1.0;
        for (int a = 0; a < n; ++a) v *= spacings[a];
        return v;
    }
    bool same_layout(const Grid& o) const {
        return n == o.n && sizes == o.sizes && half_widths == o.half_widths;
    }
};

enum class Frame { original, rescaled };

// Nonnegative grid function with its time stamp and frame tag.
struct Field {
    Grid grid;
    std::vector<double> values;  // row-major, size = grid.node_count()
    double time = 0.0;
    Frame frame = Frame::original;

    static Field zeros(const Grid& g, Frame frame = Frame::original,
                       double time = 0.0);
};

}  // namespace apme
