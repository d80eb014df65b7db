#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "k3fib/kodaira.hpp"

namespace k3fib {

enum class RuleStage { Arithmetic, Geometric };
std::string_view to_string(RuleStage s);

/// A candidate configuration of fibres containing special curves. In finite
/// mode these are the large fibres; in infinite mode the two reducible fibres.
struct Candidate {
    std::vector<KodairaType> fibers;
    /// Special components per fibre (I2 and III may carry 0 or 1).
    std::vector<int> specials;

    int total_specials() const;
    int sum_m_minus_1() const;
    int euler() const;
    std::string name() const;
};

struct RuleVerdict {
    bool pass = true;
    std::string detail;
};

struct ConstraintRule {
    std::string id;
    RuleStage stage = RuleStage::Arithmetic;
    std::string citation;
    std::function<RuleVerdict(const Candidate&)> check;
};

struct ConfigurationRow {
    /// Matching class label from the published lists, empty if none matches.
    std::string class_id;
    std::vector<KodairaType> large_fibers;
    int specials_in_fibers = 0;
    int mw_rank = 0;
    std::string mw_group_label;
    std::optional<int> mw_order_derived;
    /// iii + i2
    int slack = 0;
    /// 24 - sum of Euler numbers (3iii + 2i2 + 2ii + i1, or 2a + b)
    int euler_residual = 0;
    std::optional<int> generic_i2;
    std::optional<int> generic_i1;
    /// Degrees F.l of the special curves outside the fibres, descending.
    std::vector<int> free_special_degrees;
    std::optional<int> a_bound;
    std::string note;
};

struct RuleRecord {
    std::string id;
    RuleStage stage = RuleStage::Arithmetic;
    std::string citation;
    std::vector<std::string> killed;
    int passed = 0;
};

struct Enumeration {
    std::string mode;
    std::vector<ConfigurationRow> rows;
    std::vector<RuleRecord> rules;
    int universe = 0;
    int arithmetic_passes = 0;
    /// Candidates surviving the arithmetic stage but not the geometric one.
    int overshoot() const { return arithmetic_passes - static_cast<int>(rows.size()); }
};

/// How one fibre type meets the special curves that are not fibre components.
struct ContactData {
    /// Weights m_v of ordinary components with one free contact.
    std::vector<int> parts;
    /// Weights of ordinary components with two free contacts (may split).
    std::vector<int> double_parts;
    int total() const;
};

/// Derived from the coloured affine diagram: an ordinary component with k
/// special neighbours meets the free special curves 2 - k times. Throws
/// std::invalid_argument for a type that cannot occur on X.
ContactData contact_data(KodairaType t, int special_mask = 0);

/// F.B, the degree of the branch curve on a fibre, when some special curve is
/// not a fibre component. It is 0 when all six are.
int fibre_branch_degree();

/// Descending degree vectors with `free_specials` positive entries that the
/// fibre's contacts can realise.
std::vector<std::vector<int>> realisable_degrees(const ContactData& c, int free_specials);

std::vector<ConstraintRule> finite_rules();
std::vector<ConstraintRule> infinite_rules();

Enumeration enumerate_infinite();
Enumeration enumerate_finite();
/// Finite rows with the generic i2/i1 split, then infinite rows with the bound a <= rank.
std::vector<ConfigurationRow> enumerate_generic();

struct RuleAudit {
    Enumeration infinite;
    Enumeration finite;
};
RuleAudit rule_audit();

} // namespace k3fib
