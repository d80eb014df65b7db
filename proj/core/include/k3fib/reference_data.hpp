#pragma once

// Published classification values, kept verbatim as golden data for the
// comparisons made by `tables` and the acceptance suite.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "k3fib/kodaira.hpp"

namespace k3fib {

struct InfiniteClassRow {
    std::string id;
    std::vector<KodairaType> fibers;
    int mw_rank = 0;
    /// 2a + b for a fibres of type II and b of type I1.
    int two_a_plus_b = 0;
};

struct FiniteClassRow {
    std::string id;
    std::vector<KodairaType> fibers;
    std::string mw_label;
    int iii_plus_i2 = 0;
    /// 3iii + 2i2 + 2ii + i1
    int weighted_small = 0;
};

struct GenericRow {
    std::string id;
    int i2 = 0;
    int i1 = 0;
};

const std::vector<InfiniteClassRow>& infinite_class_rows();
const std::vector<FiniteClassRow>& finite_class_rows();
const std::vector<GenericRow>& generic_rows();

const InfiniteClassRow* find_infinite_row(std::string_view id);
const FiniteClassRow* find_finite_row(std::string_view id);
const GenericRow* find_generic_row(std::string_view id);

/// "1" -> 1, "Z/2Z" -> 2, "(Z/2Z)^2" -> 4; throws std::invalid_argument otherwise.
int mw_label_order(std::string_view label);
/// Inverse for the orders that occur; a cyclic group of order 4 is never
/// returned since the fibrations here have no Z/4Z torsion.
std::string mw_label_for_order(int order);

/// (iii + i2, 3iii + 2i2 + 2ii + i1) for a large-fibre multiset.
struct Reading {
    int slack = 0;
    int residual = 0;
};

/// Dual-graph component counts with Euler numbers.
Reading reading_dual_graph(const std::vector<KodairaType>& fibers);
/// The table's literal component column with Euler numbers.
Reading reading_table_column(const std::vector<KodairaType>& fibers);

} // namespace k3fib
