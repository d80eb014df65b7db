#pragma once

// Test-side oracles computed without the library's own pairing code.

#include <array>
#include <set>
#include <vector>

#include "k3fib/lattice.hpp"

namespace k3fib::testing {

/// Gram matrix rebuilt from the incidence rules: l1 meets l1j once, exceptionals
/// are disjoint (-2)-curves.
inline std::array<std::array<int, kRank>, kRank> incidence_gram()
{
    std::array<std::array<int, kRank>, kRank> g{};
    g[0][0] = -2;
    int k = 1;
    for (int i = 1; i <= 6; ++i)
        for (int j = i + 1; j <= 6; ++j, ++k) {
            g[k][k] = -2;
            if (i == 1) g[0][k] = g[k][0] = 1;
        }
    return g;
}

/// a^T G b by explicit double sum.
inline Rational matrix_product(const DivisorClass& a, const DivisorClass& b)
{
    static const auto g = incidence_gram();
    Rational s = 0;
    for (int r = 0; r < kRank; ++r)
        for (int c = 0; c < kRank; ++c) s += a.coords()[r] * Rational(g[r][c]) * b.coords()[c];
    return s;
}

/// All vectors m with entries in 1..bound and gram * m = 0, by depth-first search.
inline std::vector<std::vector<int>> integer_kernel(const std::vector<std::vector<int>>& gram, int bound)
{
    const int n = static_cast<int>(gram.size());
    std::vector<std::vector<int>> out;
    std::vector<int> m(n, 0);
    auto row_closed = [&](int v, int assigned) {
        for (int u = 0; u < n; ++u)
            if (gram[v][u] != 0 && u >= assigned) return false;
        return true;
    };
    auto row_ok = [&](int v) {
        long s = 0;
        for (int u = 0; u < n; ++u) s += static_cast<long>(gram[v][u]) * m[u];
        return s == 0;
    };
    auto dfs = [&](auto&& self, int k) -> void {
        if (k == n) {
            for (int v = 0; v < n; ++v)
                if (!row_ok(v)) return;
            out.push_back(m);
            return;
        }
        for (int x = 1; x <= bound; ++x) {
            m[k] = x;
            bool ok = true;
            for (int v = 0; v <= k && ok; ++v)
                if (row_closed(v, k + 1) && !row_ok(v)) ok = false;
            if (ok) self(self, k + 1);
        }
        m[k] = 0;
    };
    dfs(dfs, 0);
    return out;
}

} // namespace k3fib::testing
