#pragma once

#include <utility>
#include <vector>

#include "error.hpp"

namespace fuchs {

/// Range of genera of orientable surfaces carrying a 2-cell embedding of K_{m,n}.
struct GenusRange {
    int g_min = 0;
    int g_max = 0;

    friend bool operator==(const GenusRange&, const GenusRange&) = default;
};

/// Discrete memoryless channel C_{m,n}: m input symbols, n output symbols.
struct ChannelSpec {
    int inputs = 2;
    int outputs = 2;
};

struct BipartiteGraph {
    int left = 0;
    int right = 0;
    /// (input i, output j), 0-based within each side.
    std::vector<std::pair<int, int>> edges;
};

/// g_min = ceil((m-2)(n-2)/4), g_max = floor((m-1)(n-1)/2), in integers.
inline GenusRange genus_range(int m, int n) {
    if (m < 2 || n < 2) throw Error(ErrorCode::BadDimensions, "K_{m,n} needs m, n >= 2");
    const long long lo = static_cast<long long>(m - 2) * (n - 2);
    const long long hi = static_cast<long long>(m - 1) * (n - 1);
    return {static_cast<int>((lo + 3) / 4), static_cast<int>(hi / 2)};
}

inline BipartiteGraph channel_graph(const ChannelSpec& ch) {
    if (ch.inputs < 1 || ch.outputs < 1) throw Error(ErrorCode::BadDimensions, "channel sizes must be positive");
    BipartiteGraph g{ch.inputs, ch.outputs, {}};
    for (int i = 0; i < ch.inputs; ++i)
        for (int j = 0; j < ch.outputs; ++j) g.edges.emplace_back(i, j);
    return g;
}

} // namespace fuchs
