#pragma once

#include <vector>

#include "mlc/subset.hpp"

namespace mlc {

/// Prescribed list sizes, one per element, each >= 1.
struct SizeFunction {
    std::vector<int> sizes;

    int max() const {
        int m = 0;
        for (int s : sizes) m = s > m ? s : m;
        return m;
    }
};

/// Per-element color lists. Colors are integers 1..universe; list masks
/// store color c at bit c-1.
struct ListAssignment {
    int universe = 0;
    std::vector<Subset> lists;

    static Subset color_range(int k) { return Subset::full(k); }  // {1..k} as a mask

    bool allows(int element, int color) const {
        return lists[static_cast<std::size_t>(element)].contains(color - 1);
    }
};

/// A total assignment of colors (1-based) to elements.
struct Coloring {
    std::vector<int> colors;

    bool operator==(const Coloring&) const = default;
};

}  // namespace mlc
