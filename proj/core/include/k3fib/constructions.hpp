#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "k3fib/fibration.hpp"

namespace k3fib {

/// An explicit fibre divisor realising one class, with the curves the
/// construction names as sections and multisections.
struct Construction {
    std::string id;
    DivisorTerms divisor;
    std::vector<std::string> sections;
    std::vector<Multisection> multisections;
    std::string note;
};

/// Cases 1.1-1.4 and 2.1-2.12 in order.
const std::vector<Construction>& constructions();
/// Throws std::out_of_range for an unknown id.
const Construction& construction(std::string_view id);

/// Case 2.10 with the conic through P13 P15 P23 P46 P56 as printed. That conic
/// meets l13, so the divisor has square 4; the built-in case uses the conic
/// through P15 P16 P23 P34 P56 instead.
DivisorTerms case_2_10_as_printed();

/// Runs analyse_fibration on the case and appends the claims for that class:
/// fibre types, named sections, MW rank or order (structure) and the numeric
/// table columns (table).
FibrationReport verify_construction(std::string_view id);

} // namespace k3fib
