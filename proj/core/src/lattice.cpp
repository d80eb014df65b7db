#include "k3fib/lattice.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace k3fib {

NodePair::NodePair(int i, int j)
{
    if (i < 1 || i > kLineCount || j < 1 || j > kLineCount || i == j)
        throw std::invalid_argument("node pair needs two distinct indices in 1..6, got " +
                                    std::to_string(i) + "," + std::to_string(j));
    i_ = std::min(i, j);
    j_ = std::max(i, j);
}

int NodePair::ordinal() const
{
    // rows of the strict upper triangle: 1 -> 0..4, 2 -> 5..8, ...
    int k = 0;
    for (int a = 1; a < i_; ++a) k += kLineCount - a;
    return k + (j_ - i_ - 1);
}

NodePair NodePair::from_ordinal(int k)
{
    if (k < 0 || k >= 15) throw std::out_of_range("node ordinal out of range");
    for (int a = 1; a < kLineCount; ++a) {
        int row = kLineCount - a;
        if (k < row) return NodePair(a, a + 1 + k);
        k -= row;
    }
    throw std::logic_error("unreachable");
}

std::array<NodePair, 15> NodePair::all()
{
    return []<std::size_t... K>(std::index_sequence<K...>) {
        return std::array<NodePair, 15>{from_ordinal(static_cast<int>(K))...};
    }(std::make_index_sequence<15>{});
}

std::string NodePair::digits() const
{
    return std::to_string(i_) + std::to_string(j_);
}

BasisIndex BasisIndex::from_offset(int k)
{
    if (k < 0 || k >= kRank) throw std::out_of_range("basis offset out of range");
    return BasisIndex(k);
}

std::array<BasisIndex, kRank> BasisIndex::all()
{
    return []<std::size_t... K>(std::index_sequence<K...>) {
        return std::array<BasisIndex, kRank>{BasisIndex(static_cast<int>(K))...};
    }(std::make_index_sequence<kRank>{});
}

NodePair BasisIndex::node() const
{
    if (is_line1()) throw std::logic_error("l1 has no node");
    return NodePair::from_ordinal(offset_ - 1);
}

std::string BasisIndex::name() const
{
    return is_line1() ? std::string("l1") : "e" + node().digits();
}

DivisorClass DivisorClass::basis(BasisIndex b)
{
    DivisorClass d;
    d[b] = 1;
    return d;
}

bool DivisorClass::is_zero() const
{
    for (const auto& c : coords_)
        if (c != 0) return false;
    return true;
}

DivisorClass& DivisorClass::operator+=(const DivisorClass& o)
{
    for (int k = 0; k < kRank; ++k) coords_[k] += o.coords_[k];
    return *this;
}

DivisorClass& DivisorClass::operator-=(const DivisorClass& o)
{
    for (int k = 0; k < kRank; ++k) coords_[k] -= o.coords_[k];
    return *this;
}

DivisorClass& DivisorClass::operator*=(const Rational& s)
{
    for (auto& c : coords_) c *= s;
    return *this;
}

const GramMatrix& gram_matrix()
{
    static const GramMatrix g = [] {
        GramMatrix m{};
        m[0][0] = -2;
        for (auto p : NodePair::all()) {
            int k = 1 + p.ordinal();
            m[k][k] = -2;
            if (p.contains(1)) m[0][k] = m[k][0] = 1;
        }
        return m;
    }();
    return g;
}

Rational pairing(const DivisorClass& a, const DivisorClass& b)
{
    const auto& g = gram_matrix();
    Rational sum = 0;
    for (int i = 0; i < kRank; ++i) {
        if (a.coords()[i] == 0) continue;
        Rational row = 0;
        for (int j = 0; j < kRank; ++j)
            if (g[i][j] != 0 && b.coords()[j] != 0) row += Rational(g[i][j]) * b.coords()[j];
        sum += a.coords()[i] * row;
    }
    return sum;
}

DivisorClass exceptional_class(NodePair p)
{
    return DivisorClass::basis(BasisIndex::exceptional(p));
}

DivisorClass special_line_class(int i)
{
    if (i < 1 || i > kLineCount) throw std::out_of_range("special line index must be in 1..6");
    DivisorClass d = DivisorClass::basis(BasisIndex::line1());
    if (i == 1) return d;
    const Rational half(1, 2);
    for (int j = 2; j <= kLineCount; ++j) {
        if (j == i) continue;
        d[BasisIndex::exceptional(NodePair(1, j))] += half;
        d[BasisIndex::exceptional(NodePair(i, j))] -= half;
    }
    return d;
}

DivisorClass hyperplane_class()
{
    DivisorClass d = 2 * DivisorClass::basis(BasisIndex::line1());
    for (int j = 2; j <= kLineCount; ++j) d += exceptional_class(NodePair(1, j));
    return d;
}

DivisorClass branch_class()
{
    DivisorClass d;
    for (int i = 1; i <= kLineCount; ++i) d += special_line_class(i);
    return d;
}

Rational arithmetic_genus(const DivisorClass& d)
{
    return Rational(1) + square(d) / 2;
}

std::vector<std::vector<Rational>> gram_as_rational()
{
    std::vector<std::vector<Rational>> m(kRank, std::vector<Rational>(kRank));
    const auto& g = gram_matrix();
    for (int i = 0; i < kRank; ++i)
        for (int j = 0; j < kRank; ++j) m[i][j] = g[i][j];
    return m;
}

Inertia inertia(const std::vector<std::vector<Rational>>& symmetric)
{
    auto a = symmetric;
    const std::size_t n = a.size();
    Inertia out;
    for (std::size_t k = 0; k < n; ++k) {
        // bring a nonzero diagonal entry to position k
        std::size_t piv = n;
        for (std::size_t i = k; i < n; ++i)
            if (a[i][i] != 0) { piv = i; break; }
        if (piv == n) {
            // all remaining diagonal entries vanish; use e_i + e_j with a_ij != 0
            std::size_t pi = n, pj = n;
            for (std::size_t i = k; i < n && pi == n; ++i)
                for (std::size_t j = i + 1; j < n; ++j)
                    if (a[i][j] != 0) { pi = i; pj = j; break; }
            if (pi == n) {
                out.zero += static_cast<int>(n - k);
                break;
            }
            for (std::size_t t = 0; t < n; ++t) a[pi][t] += a[pj][t];
            for (std::size_t t = 0; t < n; ++t) a[t][pi] += a[t][pj];
            piv = pi;
        }
        if (piv != k) {
            std::swap(a[piv], a[k]);
            for (auto& row : a) std::swap(row[piv], row[k]);
        }
        const Rational d = a[k][k];
        (d > 0 ? out.positive : out.negative) += 1;
        for (std::size_t i = k + 1; i < n; ++i) {
            if (a[i][k] == 0) continue;
            const Rational f = a[i][k] / d;
            for (std::size_t t = k; t < n; ++t) a[i][t] -= f * a[k][t];
            for (std::size_t t = k; t < n; ++t) a[t][i] -= f * a[t][k];
        }
    }
    return out;
}

Inertia gram_inertia()
{
    return inertia(gram_as_rational());
}

Rational determinant(std::vector<std::vector<Rational>> m)
{
    const std::size_t n = m.size();
    Rational det = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && m[piv][k] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != k) {
            std::swap(m[piv], m[k]);
            det = -det;
        }
        det *= m[k][k];
        for (std::size_t i = k + 1; i < n; ++i) {
            if (m[i][k] == 0) continue;
            const Rational f = m[i][k] / m[k][k];
            for (std::size_t t = k; t < n; ++t) m[i][t] -= f * m[k][t];
        }
    }
    return det;
}

} // namespace k3fib
