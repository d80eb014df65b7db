#pragma once

#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "k3fib/dual_graph.hpp"
#include "k3fib/kodaira.hpp"

namespace k3fib {

/// The cluster is a whole affine diagram.
struct ExactFiber {
    KodairaType type;
    /// Kodaira multiplicities, the primitive positive null vector of the cluster.
    std::vector<int> multiplicities;
};

/// Two (-2)-curves meeting with multiplicity 2: I_2 and III have the same lattice data.
struct AmbiguousI2orIII {
    std::vector<int> multiplicities{1, 1};
};

/// One curve of self-intersection 0.
struct AmbiguousI1orII {};

/// One way of placing the cluster inside a larger affine diagram.
struct Completion {
    KodairaType type;
    int added = 0;
    /// image[v] = diagram vertex of cluster vertex v
    std::vector<int> image;
    /// Multiplicity of each cluster vertex inside the completed fibre.
    std::vector<int> multiplicities;
    /// Special components the completion adds under its best colouring; -1
    /// when vertex kinds were not consulted.
    int added_specials = -1;
};

/// The cluster is a proper subgraph of one or more affine diagrams.
struct PartialFiber {
    /// Sorted by number of added components, then display order.
    std::vector<Completion> completions;
    const Completion& minimal() const { return completions.front(); }
};

using RecognitionResult = std::variant<ExactFiber, AmbiguousI2orIII, AmbiguousI1orII, PartialFiber>;

class RecognitionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct CompletionOptions {
    /// Special vertices must land on special positions of an allowed colouring
    /// and ordinary vertices on ordinary ones; Unknown matches anything.
    bool respect_kinds = true;
    /// Every added vertex must be ordinary under that colouring.
    bool added_ordinary_only = false;
    int max_components = 15;
};

/// All placements of `g` as an induced subgraph of an affine diagram with at
/// most max_components vertices, one per (type, multiplicities) pair.
std::vector<Completion> completions(const DualGraph& g, const CompletionOptions& opts = {});

/// Throws RecognitionError when `g` is disconnected or embeds in no affine diagram.
RecognitionResult recognize(const DualGraph& g, const CompletionOptions& opts = {});

/// Whether the special/ordinary composition of a complete fibre of type `t`
/// is one of the allowed profiles. I_1 and II are consistent iff their single
/// component is not special.
bool special_count_consistent(KodairaType t, const std::vector<VertexKind>& kinds,
                              const std::vector<int>& multiplicities);

/// Whether some allowed colouring of `d` agrees with the kinds placed by `image`.
bool kinds_fit(const AffineDiagram& d, const std::vector<int>& image,
               const std::vector<VertexKind>& kinds, bool added_ordinary_only);

/// "I10", "I2/III", "I1/II", "partial -> I0* (+1)".
std::string describe(const RecognitionResult& r);

} // namespace k3fib
