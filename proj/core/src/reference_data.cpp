#include "k3fib/reference_data.hpp"

#include <algorithm>
#include <stdexcept>

namespace k3fib {

namespace {

KodairaType T(std::string_view s)
{
    return KodairaType::parse(s);
}

template <typename Row>
const Row* find_by_id(const std::vector<Row>& rows, std::string_view id)
{
    auto it = std::find_if(rows.begin(), rows.end(), [id](const Row& r) { return r.id == id; });
    return it == rows.end() ? nullptr : &*it;
}

} // namespace

// Positive Mordell-Weil rank classification.
const std::vector<InfiniteClassRow>& infinite_class_rows()
{
    static const std::vector<InfiniteClassRow> rows{
        {"1.1", {T("I10"), T("I2")}, 4, 12},
        {"1.2", {T("I8"), T("I4")}, 4, 12},
        {"1.3", {T("I6"), T("I6")}, 4, 12},
        {"1.4", {T("IV*"), T("I4")}, 5, 12},
    };
    return rows;
}

// Finite Mordell-Weil classification, copied cell by cell; rows 2.8 and 2.10
// are reproduced as printed even though their last column disagrees with the
// Euler count of their own fibres.
const std::vector<FiniteClassRow>& finite_class_rows()
{
    static const std::vector<FiniteClassRow> rows{
        {"2.1", {T("II*")}, "1", 6, 14},
        {"2.2", {T("III*")}, "Z/2Z", 7, 15},
        {"2.3", {T("III*"), T("I0*")}, "1", 3, 9},
        {"2.4", {T("I6*")}, "1", 4, 12},
        {"2.5", {T("I4*")}, "Z/2Z", 6, 14},
        {"2.6", {T("I4*"), T("I0*")}, "1", 2, 8},
        {"2.7", {T("I2*")}, "(Z/2Z)^2", 8, 16},
        {"2.8", {T("I2*"), T("I0*")}, "Z/2Z", 4, 8},
        {"2.9", {T("I2*"), T("I2*")}, "1", 2, 8},
        {"2.10", {T("I2*"), T("I0*"), T("I0*")}, "1", 0, 8},
        {"2.11", {T("I0*"), T("I0*")}, "(Z/2Z)^2", 6, 12},
        {"2.12", {T("I0*"), T("I0*"), T("I0*")}, "Z/2Z", 2, 6},
    };
    return rows;
}

// Same classes on a general X (only I2 and I1 among the small fibres).
const std::vector<GenericRow>& generic_rows()
{
    static const std::vector<GenericRow> rows{
        {"2.1", 6, 2}, {"2.2", 7, 1},  {"2.3", 3, 3},  {"2.4", 4, 4},  {"2.5", 6, 2},  {"2.6", 2, 4},
        {"2.7", 8, 0}, {"2.8", 4, 0}, {"2.9", 2, 4}, {"2.10", 0, 8}, {"2.11", 6, 0}, {"2.12", 2, 2},
    };
    return rows;
}

const InfiniteClassRow* find_infinite_row(std::string_view id)
{
    return find_by_id(infinite_class_rows(), id);
}

const FiniteClassRow* find_finite_row(std::string_view id)
{
    return find_by_id(finite_class_rows(), id);
}

const GenericRow* find_generic_row(std::string_view id)
{
    return find_by_id(generic_rows(), id);
}

int mw_label_order(std::string_view label)
{
    if (label == "1") return 1;
    if (label == "Z/2Z") return 2;
    if (label == "(Z/2Z)^2") return 4;
    throw std::invalid_argument("unknown Mordell-Weil label '" + std::string(label) + "'");
}

std::string mw_label_for_order(int order)
{
    switch (order) {
    case 1: return "1";
    case 2: return "Z/2Z";
    case 3: return "Z/3Z";
    case 4: return "(Z/2Z)^2";
    default: return "order " + std::to_string(order);
    }
}

Reading reading_dual_graph(const std::vector<KodairaType>& fibers)
{
    Reading r{14, 24};
    for (auto t : fibers) {
        r.slack -= t.components() - 1;
        r.residual -= t.euler();
    }
    return r;
}

Reading reading_table_column(const std::vector<KodairaType>& fibers)
{
    Reading r{14, 24};
    for (auto t : fibers) {
        r.slack -= type_info(t).table_components - 1;
        r.residual -= t.euler();
    }
    return r;
}

} // namespace k3fib
