#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "k3fib/classifier.hpp"
#include "k3fib/constructions.hpp"
#include "k3fib/reference_data.hpp"

using namespace k3fib;

namespace {

const RuleRecord& rule(const Enumeration& e, const std::string& id)
{
    auto it = std::find_if(e.rules.begin(), e.rules.end(), [&](const RuleRecord& r) { return r.id == id; });
    REQUIRE(it != e.rules.end());
    return *it;
}

bool killed(const RuleRecord& r, const std::string& prefix)
{
    return std::any_of(r.killed.begin(), r.killed.end(),
                       [&](const std::string& k) { return k.rfind(prefix, 0) == 0 && (k.size() == prefix.size() || k[prefix.size()] == ':'); });
}

int total_killed(const Enumeration& e)
{
    int n = 0;
    for (const auto& r : e.rules) n += static_cast<int>(r.killed.size());
    return n;
}

} // namespace

TEST_CASE("branch degree of a fibre")
{
    CHECK(fibre_branch_degree() == 4);
    // F.B computed from each construction's fibre class; all specials vertical gives 0
    for (const auto& c : constructions()) {
        CAPTURE(c.id);
        const auto rep = verify_construction(c.id);
        const int expected = rep.mode == FibrationMode::FiniteMW ? fibre_branch_degree() : 0;
        CHECK(pairing(rep.fiber_class, branch_class()) == expected);
    }
}

TEST_CASE("free contacts of every colouring add up to F.B")
{
    for (auto t : reducible_types_on_x()) {
        const auto d = affine_diagram(t);
        for (int k = 0; k < static_cast<int>(d.special_masks.size()); ++k) {
            CAPTURE(t.name());
            // F.B = sum of m_v (C_v.B), where C.B = 2 for ordinary and -2 for special components
            int expected = 0;
            for (int v = 0; v < d.size(); ++v) expected += d.special_masks[k][v] ? -2 * d.multiplicities[v] : 2 * d.multiplicities[v];
            CHECK(contact_data(t, k).total() == expected);
            CHECK((expected == 0 || expected == fibre_branch_degree()));
            const auto f = t.family();
            if (f == KodairaFamily::IStar || f == KodairaFamily::IIIStar || f == KodairaFamily::IIStar)
                CHECK(expected == fibre_branch_degree());
        }
    }
    CHECK_THROWS_AS(contact_data(KodairaType::I(4), 5), std::invalid_argument);
}

TEST_CASE("realisable degree vectors")
{
    // I0*: four simple ordinary ends, each meeting one free special once
    const auto c = contact_data(KodairaType::IStar(0));
    CHECK(c.parts == std::vector<int>{1, 1, 1, 1});
    CHECK(c.double_parts.empty());
    const auto two = realisable_degrees(c, 2);
    CHECK(two == std::vector<std::vector<int>>{{2, 2}, {3, 1}});
    CHECK(realisable_degrees(c, 5).empty());
    CHECK(realisable_degrees(c, 0).empty());
    for (const auto& v : realisable_degrees(c, 3)) CHECK(std::accumulate(v.begin(), v.end(), 0) == 4);
}

TEST_CASE("infinite enumeration")
{
    const auto e = enumerate_infinite();
    REQUIRE(e.rows.size() == 4);
    for (const auto& row : e.rows) {
        const auto* ref = find_infinite_row(row.class_id);
        REQUIRE(ref != nullptr);
        CHECK(row.large_fibers == canonical(ref->fibers));
        CHECK(row.mw_rank == ref->mw_rank);
        CHECK(row.euler_residual == 12);
        CHECK(row.specials_in_fibers == 6);
        int euler = 0;
        for (auto t : row.large_fibers) euler += t.euler();
        CHECK(row.euler_residual == 24 - euler);
    }
    const auto& excl = rule(e, "EXCL-I10-III");
    CHECK(excl.stage == RuleStage::Geometric);
    REQUIRE(excl.killed.size() == 1);
    CHECK(excl.killed.front().rfind("I10 + III", 0) == 0);
    CHECK_FALSE(excl.citation.empty());
    CHECK(e.overshoot() == 1);
    CHECK(total_killed(e) + static_cast<int>(e.rows.size()) == e.universe);
}

TEST_CASE("finite enumeration")
{
    const auto e = enumerate_finite();
    REQUIRE(e.rows.size() == finite_class_rows().size());
    for (const auto& ref : finite_class_rows()) {
        CAPTURE(ref.id);
        auto it = std::find_if(e.rows.begin(), e.rows.end(), [&](const ConfigurationRow& r) { return r.class_id == ref.id; });
        REQUIRE(it != e.rows.end());
        CHECK(it->large_fibers == canonical(ref.fibers));
        CHECK(it->mw_group_label == ref.mw_label);
        CHECK(it->slack == ref.iii_plus_i2);
        CHECK(it->mw_rank == 0);
        int m = 0, euler = 0;
        for (auto t : it->large_fibers) {
            m += t.components() - 1;
            euler += t.euler();
        }
        CHECK(it->slack == 14 - m);
        CHECK(it->euler_residual == 24 - euler);
        REQUIRE(it->mw_order_derived.has_value());
        CHECK(*it->mw_order_derived == mw_label_order(ref.mw_label));
    }
    CHECK(e.overshoot() > 0);
    CHECK(e.arithmetic_passes > static_cast<int>(e.rows.size()));
    CHECK(total_killed(e) + static_cast<int>(e.rows.size()) == e.universe);
}

TEST_CASE("finite rows agree with the constructions")
{
    const auto e = enumerate_finite();
    for (const auto& row : e.rows) {
        CAPTURE(row.class_id);
        const auto rep = verify_construction(row.class_id);
        CHECK(canonical(rep.counted_fibers) == row.large_fibers);
        CHECK(rep.slack == row.slack);
        CHECK(rep.euler_residual == row.euler_residual);
        CHECK(rep.mw_order == row.mw_order_derived);
    }
}

TEST_CASE("negative cases")
{
    const auto e = enumerate_finite();
    CHECK(killed(rule(e, "EXCL-PURE-SMALL"), "(no large fibres)"));
    CHECK(killed(rule(e, "A-ST-BUDGET"), "I0* + I0* + I0* + I0*"));
    for (const auto& r : e.rules) CHECK_FALSE(r.citation.empty());
    for (const auto& r : finite_rules()) CHECK(static_cast<bool>(r.check));
}

TEST_CASE("generic rows")
{
    const auto rows = enumerate_generic();
    int finite = 0, infinite = 0;
    for (const auto& r : rows) {
        if (r.generic_i2) {
            ++finite;
            CHECK(*r.generic_i2 == r.slack);
            CHECK(*r.generic_i1 == r.euler_residual - 2 * r.slack);
            CHECK(*r.generic_i1 >= 0);
        } else {
            ++infinite;
            REQUIRE(r.a_bound.has_value());
            CHECK(*r.a_bound == r.mw_rank);
            CHECK_FALSE(r.note.empty());
        }
    }
    CHECK(finite == 12);
    CHECK(infinite == 4);
    auto row = [&](const std::string& id) {
        return *std::find_if(rows.begin(), rows.end(), [&](const ConfigurationRow& r) { return r.class_id == id && r.generic_i2; });
    };
    CHECK(*row("2.1").generic_i2 == 6);
    CHECK(*row("2.1").generic_i1 == 2);
    CHECK(*row("2.12").generic_i2 == 2);
    CHECK(*row("2.12").generic_i1 == 2);
    CHECK(*row("2.7").generic_i2 == 8);
    CHECK(*row("2.7").generic_i1 == 0);
}

TEST_CASE("rule audit matches the enumerations")
{
    const auto a = rule_audit();
    CHECK(a.infinite.rows.size() == enumerate_infinite().rows.size());
    CHECK(a.finite.rows.size() == enumerate_finite().rows.size());
    CHECK(a.finite.universe == enumerate_finite().universe);
}

TEST_CASE("candidate bookkeeping")
{
    Candidate c{{KodairaType::I(10), KodairaType::III()}, {5, 1}};
    CHECK(c.total_specials() == 6);
    CHECK(c.sum_m_minus_1() == 10);
    CHECK(c.euler() == 13);
    CHECK(c.name() == "I10 + III(1 special)");
    CHECK(Candidate{}.name() == "(no large fibres)");
}
