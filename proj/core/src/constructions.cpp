#include "k3fib/constructions.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "k3fib/reference_data.hpp"

namespace k3fib {

namespace {

// "2l1 e12 mu_13_26" -> terms
DivisorTerms terms(std::string_view text)
{
    DivisorTerms out;
    std::istringstream in{std::string(text)};
    std::string tok;
    while (in >> tok) {
        std::size_t k = 0;
        while (k < tok.size() && tok[k] >= '0' && tok[k] <= '9') ++k;
        out.emplace_back(tok.substr(k), k ? std::stoi(tok.substr(0, k)) : 1);
    }
    return out;
}

std::string join(const std::vector<std::string>& xs)
{
    std::string s;
    for (const auto& x : xs) s += (s.empty() ? "" : ", ") + x;
    return s.empty() ? "-" : s;
}

} // namespace

const std::vector<Construction>& constructions()
{
    static const std::vector<Construction> all{
        {"1.1", terms("l1 e12 l2 e23 l3 e34 l4 e45 l5 e15"), {"e16"}, {}, "10-gon through l1..l5"},
        {"1.2", terms("l1 e12 l2 e23 l3 e34 l4 e14"), {"e16"}, {}, "8-gon through l1..l4"},
        {"1.3", terms("l1 e12 l2 e23 l3 e13"), {"e16"}, {}, "hexagon through l1..l3"},
        {"1.4", terms("l1 2e12 3l2 2e23 l3 2e24 l4"), {"e16"}, {}, "IV* centred at l2"},
        {"2.1", terms("e15 2l1 3e12 4l2 5e23 6l3 4e34 2l4 3e36"), {"l5"}, {{"l6", 3}}, "II* chain"},
        {"2.2", terms("e34 2l3 3e13 4l1 2e15 3e12 2l2 e26"), {"l4", "l6"}, {}, "III* centred at l1"},
        {"2.3", terms("e34 2l3 3e13 4l1 2e15 3e12 2l2 e25"), {"l4"}, {}, "III* with l6 in an I0*"},
        {"2.4", terms("e15 e16 2l1 2e12 2l2 2e23 2l3 2e34 2l4 e45 mu_13_26"), {"l6"}, {}, "I6*"},
        {"2.5", terms("e15 e14 2l1 2e12 2l2 2e23 2l3 e35 e36"), {"l4", "l6"}, {}, "I4*"},
        {"2.6", terms("e15 e14 2l1 2e12 2l2 2e23 2l3 e35 mu_16_24"), {"l4"}, {}, "I4* with an I0*"},
        {"2.7", terms("e13 e14 2l1 2e12 2l2 e25 e26"), {"l3", "l4", "l5", "l6"}, {}, "I2*"},
        {"2.8", terms("e13 e14 2l1 2e12 2l2 e24 e25"), {"l3", "l5"}, {}, "I2* with an I0*"},
        {"2.9", terms("e13 e14 2l1 2e12 2l2 e24 mu_15_36"), {"l3"}, {}, "two I2*"},
        {"2.10", terms("e13 e14 2l1 2e12 2l2 e24 conic_15_16_23_34_56"), {"l3"}, {},
         "I2* with two I0*; conic through P15 P16 P23 P34 P56"},
        {"2.11", terms("2l1 e12 e13 e14 e15"), {"l2", "l3", "l4", "l5"}, {}, "two I0* centred at l1 and l6"},
        {"2.12", terms("mu_23_56 e14 e15 e16 2l1"), {"l5", "l6"}, {}, "three I0*"},
    };
    return all;
}

const Construction& construction(std::string_view id)
{
    const auto& all = constructions();
    auto it = std::find_if(all.begin(), all.end(), [id](const Construction& c) { return c.id == id; });
    if (it == all.end()) throw std::out_of_range("unknown case id '" + std::string(id) + "'");
    return *it;
}

DivisorTerms case_2_10_as_printed()
{
    return terms("e13 e14 2l1 2e12 2l2 e24 conic_13_15_23_46_56");
}

FibrationReport verify_construction(std::string_view id)
{
    const Construction& c = construction(id);
    FibrationReport rep = analyse_fibration(FibrationInput{c.divisor, &catalog_with_conics()});
    rep.case_id = c.id;

    auto claim = [&](std::string name, ClaimKind kind, std::string expected, std::string actual) {
        bool ok = expected == actual;
        rep.claims.push_back({std::move(name), kind, std::move(expected), std::move(actual), ok});
    };

    std::vector<std::string> missing;
    for (const auto& s : c.sections)
        if (std::find(rep.sections.begin(), rep.sections.end(), s) == rep.sections.end()) missing.push_back(s);
    claim("named sections", ClaimKind::Structure, join(c.sections),
          missing.empty() ? join(c.sections) : "missing " + join(missing));
    for (const auto& m : c.multisections) {
        auto it = std::find_if(rep.multisections.begin(), rep.multisections.end(),
                               [&](const Multisection& x) { return x.name == m.name; });
        claim("multisection " + m.name, ClaimKind::Structure, "degree " + std::to_string(m.degree),
              it == rep.multisections.end() ? "not a multisection" : "degree " + std::to_string(it->degree));
    }

    if (const auto* row = find_infinite_row(id)) {
        claim("Mordell-Weil", ClaimKind::Structure, "infinite",
              rep.mode == FibrationMode::InfiniteMW ? "infinite" : "finite");
        claim("fibre types", ClaimKind::Structure, multiset_name(row->fibers), multiset_name(rep.counted_fibers));
        claim("MW rank", ClaimKind::Structure, std::to_string(row->mw_rank), std::to_string(rep.mw_rank));
        claim("2a+b", ClaimKind::Table, std::to_string(row->two_a_plus_b), std::to_string(rep.euler_residual));
    } else if (const auto* row = find_finite_row(id)) {
        claim("Mordell-Weil", ClaimKind::Structure, "finite",
              rep.mode == FibrationMode::InfiniteMW ? "infinite" : "finite");
        claim("fibre types", ClaimKind::Structure, multiset_name(row->fibers), multiset_name(rep.counted_fibers));
        claim("MW order", ClaimKind::Structure, std::to_string(mw_label_order(row->mw_label)) + " (" + row->mw_label + ")",
              rep.mw_order ? std::to_string(*rep.mw_order) + " (" + mw_label_for_order(*rep.mw_order) + ")" : "-");
        claim("iii+i2", ClaimKind::Table, std::to_string(row->iii_plus_i2), std::to_string(rep.slack));
        claim("3iii+2i2+2ii+i1", ClaimKind::Table, std::to_string(row->weighted_small),
              std::to_string(rep.euler_residual));
    }
    return rep;
}

} // namespace k3fib
