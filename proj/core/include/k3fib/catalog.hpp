#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "k3fib/lattice.hpp"

namespace k3fib {

enum class CurveKind {
    Special,       // l_i, a component of the branch locus
    Exceptional,   // l_ij over a node
    OrdinaryLine,  // mu^{ij}_{km}, strict transform of the line P_ij P_km
    OrdinaryConic, // strict transform of a conic through five nodes
};

std::string_view to_string(CurveKind k);
inline bool is_special(CurveKind k) { return k == CurveKind::Special; }

struct Curve {
    std::string name;
    CurveKind kind;
    DivisorClass cls;
    /// Irreducibility rests on the distilled conic rule, not on a stated result.
    bool rule_derived = false;
};

/// A name in the divisor literal format could not be resolved.
class UnknownNameError : public std::invalid_argument {
public:
    explicit UnknownNameError(std::string token, const std::string& why);
    const std::string& token() const { return token_; }

private:
    std::string token_;
};

/// Class of mu^{ij}_{km} = H - l_ij - l_km. Throws std::invalid_argument if
/// the pairs share an index (the line through P_ij and P_ik is L_i itself).
DivisorClass mu_class(NodePair a, NodePair b);
std::string mu_name(NodePair a, NodePair b);

/// Number of nodes lying on each branch line L_1..L_6.
std::array<int, kLineCount> node_incidence(std::span<const NodePair> nodes);

/// Five distinct nodes, no three on one branch line, and some branch line
/// meeting the conic away from the nodes (so the cover is ramified over it).
bool conic_admissible(std::span<const NodePair> nodes);

/// 2H - sum of the five node classes. Throws std::invalid_argument when the
/// node set is not admissible.
DivisorClass conic_class(std::span<const NodePair> nodes);
std::string conic_name(std::span<const NodePair> nodes);

/// Resolves "l<i>", "e<i><j>", "mu_<ij>_<km>", "conic_<ab>_<cd>_..." to a
/// curve. Names must be canonical (i < j, pairs sorted). Throws
/// UnknownNameError.
Curve curve_from_name(std::string_view name);

/// Same as curve_from_name but also accepts "H".
DivisorClass class_from_name(std::string_view name);

class Catalog {
public:
    static Catalog build(bool include_conics);

    std::span<const Curve> curves() const { return curves_; }
    std::size_t size() const { return curves_.size(); }
    const Curve& operator[](std::size_t k) const { return curves_[k]; }

    const Curve* find(std::string_view name) const;
    std::optional<std::size_t> index_of(std::string_view name) const;
    /// Throws UnknownNameError.
    const Curve& at(std::string_view name) const;

    std::size_t count(CurveKind k) const;
    bool has_conics() const { return has_conics_; }

private:
    std::vector<Curve> curves_;
    std::unordered_map<std::string, std::size_t> by_name_;
    bool has_conics_ = false;
};

inline Catalog build_catalog(bool include_conics) { return Catalog::build(include_conics); }

/// Process-wide immutable catalogs, built on first use.
const Catalog& catalog_with_conics();
const Catalog& catalog_lines_only();

} // namespace k3fib
