#pragma once

// Rank-16 lattice N in NS(X) for the double plane branched over six general
// lines, in the rational basis (l1; l_ij, 1 <= i < j <= 6).

#include <array>
#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "k3fib/rational.hpp"

namespace k3fib {

inline constexpr int kLineCount = 6;
inline constexpr int kRank = 16;

/// Unordered pair {i, j} of branch-line indices; the node P_ij = L_i n L_j.
class NodePair {
public:
    /// Throws std::invalid_argument unless 1 <= i, j <= 6 and i != j.
    NodePair(int i, int j);

    int first() const { return i_; }
    int second() const { return j_; }
    bool contains(int n) const { return n == i_ || n == j_; }
    bool meets(const NodePair& o) const { return o.contains(i_) || o.contains(j_); }

    /// Position 0..14 in lexicographic order 12, 13, ..., 56.
    int ordinal() const;
    static NodePair from_ordinal(int k);
    static std::array<NodePair, 15> all();

    /// "12", "35", ...
    std::string digits() const;

    auto operator<=>(const NodePair&) const = default;

private:
    int i_;
    int j_;
};

/// Index of a coordinate: either l1 or an exceptional class l_ij.
class BasisIndex {
public:
    static BasisIndex line1() { return BasisIndex(0); }
    static BasisIndex exceptional(NodePair p) { return BasisIndex(1 + p.ordinal()); }
    static BasisIndex from_offset(int k);
    static std::array<BasisIndex, kRank> all();

    bool is_line1() const { return offset_ == 0; }
    NodePair node() const; // precondition: !is_line1()
    int offset() const { return offset_; }

    /// "l1" or "e<i><j>".
    std::string name() const;

    auto operator<=>(const BasisIndex&) const = default;

private:
    explicit BasisIndex(int offset) : offset_(offset) {}
    int offset_;
};

/// Element of N (x) Q as an exact coordinate vector.
class DivisorClass {
public:
    DivisorClass() = default;
    explicit DivisorClass(const std::array<Rational, kRank>& coords) : coords_(coords) {}

    static DivisorClass basis(BasisIndex b);

    const Rational& operator[](BasisIndex b) const { return coords_[b.offset()]; }
    Rational& operator[](BasisIndex b) { return coords_[b.offset()]; }
    const std::array<Rational, kRank>& coords() const { return coords_; }

    bool is_zero() const;

    DivisorClass& operator+=(const DivisorClass& o);
    DivisorClass& operator-=(const DivisorClass& o);
    DivisorClass& operator*=(const Rational& s);

    friend DivisorClass operator+(DivisorClass a, const DivisorClass& b) { return a += b; }
    friend DivisorClass operator-(DivisorClass a, const DivisorClass& b) { return a -= b; }
    friend DivisorClass operator*(const Rational& s, DivisorClass a) { return a *= s; }
    friend DivisorClass operator*(std::int64_t s, DivisorClass a) { return a *= Rational(s); }
    friend DivisorClass operator-(DivisorClass a) { return a *= Rational(-1); }
    friend bool operator==(const DivisorClass&, const DivisorClass&) = default;

private:
    std::array<Rational, kRank> coords_{};
};

using GramMatrix = std::array<std::array<int, kRank>, kRank>;

/// Intersection matrix on the basis: l1^2 = -2, l1.l_1j = 1, l_ij.l_km = -2 delta.
const GramMatrix& gram_matrix();

Rational pairing(const DivisorClass& a, const DivisorClass& b);
inline Rational square(const DivisorClass& a) { return pairing(a, a); }

DivisorClass exceptional_class(NodePair p);

/// l_i; l1 is the basis vector, the others are
/// l_i = l1 + 1/2 (sum_{j not in {1,i}} l_1j - sum_{j not in {1,i}} l_ij).
/// Throws std::out_of_range unless 1 <= i <= 6.
DivisorClass special_line_class(int i);

/// Pull-back H of a general line: 2 l1 + sum_j l_1j.
DivisorClass hyperplane_class();

/// B = l1 + ... + l6, the fixed locus of the covering involution.
DivisorClass branch_class();

/// p_a(D) = 1 + D^2/2.
Rational arithmetic_genus(const DivisorClass& d);

struct Inertia {
    int positive = 0;
    int negative = 0;
    int zero = 0;
    bool operator==(const Inertia&) const = default;
};

/// Sylvester inertia of a symmetric rational matrix by exact congruence
/// diagonalisation.
Inertia inertia(const std::vector<std::vector<Rational>>& symmetric);
Inertia gram_inertia();

/// Exact determinant by Gaussian elimination over Q.
Rational determinant(std::vector<std::vector<Rational>> m);

std::vector<std::vector<Rational>> gram_as_rational();

} // namespace k3fib
