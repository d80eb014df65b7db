#pragma once

#include <optional>
#include <string>
#include <vector>

#include "k3fib/rational.hpp"

namespace k3fib {

enum class VertexKind { Special, Ordinary, Unknown };

/// Intersection graph of a finite set of curves. `gram` holds the full
/// matrix, diagonal included, so self-intersection 0 vertices (I_1, II) can
/// be represented.
struct DualGraph {
    std::vector<std::string> names;
    std::vector<VertexKind> kinds;
    std::vector<std::vector<int>> gram;

    int size() const { return static_cast<int>(gram.size()); }
    bool adjacent(int a, int b) const { return a != b && gram[a][b] != 0; }
    int degree(int v) const;
    bool connected() const;

    /// Unnamed graph of kind Unknown; throws std::invalid_argument unless square and symmetric.
    static DualGraph from_gram(std::vector<std::vector<int>> gram);
    DualGraph induced(const std::vector<int>& vertices) const;
};

/// Basis of the rational kernel of an integer matrix.
std::vector<std::vector<Rational>> kernel_basis(const std::vector<std::vector<int>>& m);

/// Primitive positive integer generator of ker(gram), if the kernel is one
/// dimensional and spanned by a vector with all entries of one sign.
std::optional<std::vector<int>> null_vector(const DualGraph& g);

} // namespace k3fib
