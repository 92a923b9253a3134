#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace hilbaut {

// Partitions are weakly decreasing lists of positive parts.
using partition = std::vector<int>;

inline void check_partition(const partition& p) {
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] < 1)
            throw std::invalid_argument("partition: parts must be positive");
        if (i > 0 && p[i] > p[i - 1])
            throw std::invalid_argument("partition: parts must be weakly decreasing");
    }
}

inline int partition_sum(const partition& p) {
    int n = 0;
    for (int x : p)
        n += x;
    return n;
}

// All partitions of n, largest part first within each partition, ordered with
// (n) first and (1,...,1) last (reverse lexicographic). Deterministic.
inline std::vector<partition> partitions_of(int n) {
    if (n < 0)
        throw std::invalid_argument("partitions_of: n must be >= 0");
    std::vector<partition> out;
    partition cur;
    auto rec = [&](auto&& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            out.push_back(cur);
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            cur.push_back(p);
            self(self, remaining - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, n == 0 ? 1 : n);
    return out;
}

inline partition transpose(const partition& p) {
    check_partition(p);
    if (p.empty())
        return {};
    partition t(p[0], 0);
    for (int part : p)
        for (int i = 0; i < part; ++i)
            ++t[i];
    return t;
}

inline std::string partition_str(const partition& p) {
    std::string s = "(";
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i)
            s += ",";
        s += std::to_string(p[i]);
    }
    return s + ")";
}

// A partition with its Young diagram and the minimal generators of the
// attached monomial ideal. Cells (i, j) use i as the x-exponent and j as the
// y-exponent: row j has length parts[j], so D = {(i,j) : i < parts[j]}.
// Generators are the staircase corners of the complement, listed with i
// strictly decreasing (equivalently j strictly increasing).
struct partition_diagram {
    partition parts;
    std::vector<std::pair<int, int>> cells;      // sorted by (j, i)
    std::vector<std::pair<int, int>> generators; // staircase order, i descending
};

inline partition_diagram diagram(const partition& p) {
    check_partition(p);
    partition_diagram d;
    d.parts = p;
    for (std::size_t j = 0; j < p.size(); ++j)
        for (int i = 0; i < p[j]; ++i)
            d.cells.emplace_back(i, static_cast<int>(j));
    std::sort(d.cells.begin(), d.cells.end(),
              [](const auto& a, const auto& b) { return std::tie(a.second, a.first) < std::tie(b.second, b.first); });
    // monomial x^a y^b is a minimal generator iff a = parts[b] (0 past the
    // last row) and either b = 0 or the previous row is strictly longer
    const int rows = static_cast<int>(p.size());
    for (int b = 0; b <= rows; ++b) {
        const int a = b < rows ? p[b] : 0;
        if (b > 0 && p[b - 1] == a)
            continue;
        d.generators.emplace_back(a, b);
    }
    return d;
}

} // namespace hilbaut
