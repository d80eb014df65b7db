#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "k3fib/catalog.hpp"
#include "k3fib/kodaira.hpp"
#include "k3fib/recognize.hpp"

namespace k3fib {

/// Curve name and multiplicity, in input order.
using DivisorTerms = std::vector<std::pair<std::string, int>>;

struct FibrationInput {
    DivisorTerms fiber_divisor;
    const Catalog* catalog = &catalog_with_conics();
};

/// The divisor literal itself is malformed (bad multiplicity); unknown names
/// raise UnknownNameError. Both are usage errors.
class DivisorInputError : public std::invalid_argument {
public:
    DivisorInputError(std::string token, const std::string& why);
    const std::string& token() const { return token_; }

private:
    std::string token_;
};

/// A well-formed divisor that does not define an elliptic fibration.
class FibrationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// F = sum of the terms. Requires F^2 = 0, p_a(F) = 1 and a connected support.
DivisorClass validate_fiber_divisor(const FibrationInput& inp);

struct Multisection {
    std::string name;
    int degree = 0;
};

struct SectionData {
    std::vector<std::string> sections;
    /// Curves with F.C >= 2, in catalog order.
    std::vector<Multisection> multisections;
};

SectionData find_sections(const DivisorClass& f, const Catalog& catalog);

struct Cluster {
    /// Catalog indices, ascending.
    std::vector<std::size_t> curves;
    DualGraph graph;
    RecognitionResult recognition;
};

DualGraph dual_graph_of(const Catalog& catalog, const std::vector<std::size_t>& curves);

/// Catalog curves orthogonal to F, split into connected components and recognised
/// (kinds respected, completions add ordinary components only).
std::vector<Cluster> orthogonal_fibers(const DivisorClass& f, const Catalog& catalog);

/// 14 - sum(m - 1) - slack. Throws std::domain_error when negative.
int shioda_tate_rank(const std::vector<KodairaType>& fibers, int slack);

struct EulerAccount {
    int used = 0;
    int residual = 0;
};

/// Throws std::domain_error when the Euler numbers exceed 24.
EulerAccount euler_accounting(const std::vector<KodairaType>& fibers);

enum class FibrationMode { InfiniteMW, FiniteMW };

struct FiberReport {
    std::vector<std::string> curves;
    std::vector<VertexKind> kinds;
    std::string recognition;
    /// Chosen type; empty for a small fibre that stays I2/III.
    std::optional<KodairaType> type;
    bool small = false;
    int added_components = 0;
    std::vector<int> multiplicities;
    bool contains_support = false;
    std::vector<std::string> notes;
};

struct Check {
    std::string name;
    bool ok = false;
    std::string detail;
};

enum class ClaimKind { Structure, Table };

struct Claim {
    std::string name;
    ClaimKind kind = ClaimKind::Structure;
    std::string expected;
    std::string actual;
    bool ok = false;
};

struct FibrationReport {
    std::string case_id;
    DivisorTerms divisor;
    DivisorClass fiber_class;
    FibrationMode mode = FibrationMode::FiniteMW;
    std::vector<FiberReport> fibers;
    std::vector<std::string> sections;
    std::vector<Multisection> multisections;
    /// Large fibres (finite MW) or all reducible fibres (infinite MW).
    std::vector<KodairaType> counted_fibers;
    int sum_m_minus_1 = 0;
    int mw_rank = 0;
    int slack = 0;
    int euler_used = 0;
    int euler_residual = 0;
    int visible_small = 0;
    /// Finite MW only: number of sections found in the catalog.
    std::optional<int> mw_order;
    std::vector<Check> checks;
    std::vector<Claim> claims;

    bool checks_ok() const;
    bool claims_ok(ClaimKind kind) const;
    bool ok() const { return checks_ok() && claims_ok(ClaimKind::Structure) && claims_ok(ClaimKind::Table); }
};

/// Full pipeline: validation, sections, clusters, completion choice and bookkeeping.
FibrationReport analyse_fibration(const FibrationInput& inp);

} // namespace k3fib
