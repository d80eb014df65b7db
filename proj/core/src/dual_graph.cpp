#include "k3fib/dual_graph.hpp"

#include <boost/integer/common_factor.hpp>

#include <numeric>
#include <stdexcept>

namespace k3fib {

int DualGraph::degree(int v) const
{
    int d = 0;
    for (int u = 0; u < size(); ++u)
        if (adjacent(u, v)) ++d;
    return d;
}

bool DualGraph::connected() const
{
    if (size() == 0) return false;
    std::vector<bool> seen(size(), false);
    std::vector<int> stack{0};
    seen[0] = true;
    int reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u = 0; u < size(); ++u)
            if (!seen[u] && adjacent(u, v)) {
                seen[u] = true;
                ++reached;
                stack.push_back(u);
            }
    }
    return reached == size();
}

DualGraph DualGraph::from_gram(std::vector<std::vector<int>> gram)
{
    const auto n = gram.size();
    for (std::size_t a = 0; a < n; ++a) {
        if (gram[a].size() != n) throw std::invalid_argument("gram matrix is not square");
        for (std::size_t b = 0; b < a; ++b)
            if (gram[a][b] != gram[b][a]) throw std::invalid_argument("gram matrix is not symmetric");
    }
    DualGraph g;
    g.gram = std::move(gram);
    g.kinds.assign(n, VertexKind::Unknown);
    for (std::size_t k = 0; k < n; ++k) g.names.push_back("v" + std::to_string(k));
    return g;
}

DualGraph DualGraph::induced(const std::vector<int>& vertices) const
{
    DualGraph g;
    for (int v : vertices) {
        g.names.push_back(names[v]);
        g.kinds.push_back(kinds[v]);
        std::vector<int> row;
        for (int u : vertices) row.push_back(gram[v][u]);
        g.gram.push_back(std::move(row));
    }
    return g;
}

std::vector<std::vector<Rational>> kernel_basis(const std::vector<std::vector<int>>& m)
{
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m[0].size() : 0;
    std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(cols));
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) a[r][c] = m[r][c];

    // reduced row echelon form
    std::vector<int> pivot_of_col(cols, -1);
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t p = rank;
        while (p < rows && a[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[rank]);
        const Rational lead = a[rank][c];
        for (auto& x : a[rank]) x /= lead;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || a[r][c] == 0) continue;
            const Rational f = a[r][c];
            for (std::size_t k = 0; k < cols; ++k) a[r][k] -= f * a[rank][k];
        }
        pivot_of_col[c] = static_cast<int>(rank);
        ++rank;
    }

    std::vector<std::vector<Rational>> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (pivot_of_col[free] >= 0) continue;
        std::vector<Rational> v(cols);
        v[free] = 1;
        for (std::size_t c = 0; c < cols; ++c)
            if (pivot_of_col[c] >= 0) v[c] = -a[pivot_of_col[c]][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<std::vector<int>> null_vector(const DualGraph& g)
{
    auto basis = kernel_basis(g.gram);
    if (basis.size() != 1) return std::nullopt;
    const auto& v = basis.front();

    std::int64_t lcm = 1;
    for (const auto& x : v) lcm = boost::integer::lcm(lcm, x.denominator());
    std::vector<std::int64_t> ints;
    for (const auto& x : v) ints.push_back((x * lcm).numerator());
    std::int64_t gcd = 0;
    for (auto x : ints) gcd = std::gcd(gcd, x);

    bool pos = true;
    bool neg = true;
    for (auto x : ints) {
        pos = pos && x > 0;
        neg = neg && x < 0;
    }
    if (!pos && !neg) return std::nullopt;
    std::vector<int> out;
    for (auto x : ints) out.push_back(static_cast<int>((neg ? -x : x) / std::abs(gcd)));
    return out;
}

} // namespace k3fib
