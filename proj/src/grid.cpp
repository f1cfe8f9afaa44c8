#include "apme/grid.hpp"

#include <stdexcept>
#include <string>

namespace apme {

Grid Grid::make(int n, const std::array<int, 3>& sizes,
                const std::array<double, 3>& half_widths) {
    if (n < 1 || n > 3) throw std::invalid_argument("Grid: n must be 1, 2 or 3");
    Grid g;
    g.n = n;
    for (int a = 0; a < 3; ++a) {
        if (a < n) {
            if (sizes[a] < 2) {
                throw std::invalid_argument("Grid: axis " + std::to_string(a) +
                                            " needs at least 2 nodes");
            }
            if (!(half_widths[a] > 0.0)) {
                throw std::invalid_argument("Grid: half_widths must be positive");
            }
            g.sizes[a] = sizes[a];
            g.half_widths[a] = half_widths[a];
            g.spacings[a] = 2.0 * half_widths[a] / (sizes[a] - 1);
        } else {
            g.sizes[a] = 1;
            g.half_widths[a] = 0.0;
            g.spacings[a] = 0.0;
        }
    }
    return g;
}

Field Field::zeros(const Grid& g, Frame frame, double time) {
    Field f;
    f.grid = g;
    f.values.assign(g.node_count(), 0.0);
    f.time = time;
    f.frame = frame;
    return f;
}

}  // namespace apme
