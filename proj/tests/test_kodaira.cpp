#include <doctest.h>

#include <algorithm>

#include "k3fib/kodaira.hpp"

using namespace k3fib;

TEST_CASE("Euler numbers and component counts")
{
    for (int n = 1; n <= 12; ++n) {
        auto info = type_info(KodairaType::I(n));
        CHECK(info.euler == n);
        CHECK(info.components == n);
        CHECK(info.table_components == n + 1);
    }
    for (int n = 0; n <= 6; ++n) {
        auto info = type_info(KodairaType::IStar(n));
        CHECK(info.euler == 6 + n);
        CHECK(info.components == n + 5);
    }
    CHECK(type_info(KodairaType::IStar(0)).table_components == 1);
    CHECK(type_info(KodairaType::IStar(2)).table_components == 7);

    struct Row {
        KodairaType t;
        int euler;
        int components;
    };
    for (const Row& r : {Row{KodairaType::II(), 2, 1}, Row{KodairaType::III(), 3, 2}, Row{KodairaType::IV(), 4, 3},
                         Row{KodairaType::IVStar(), 8, 7}, Row{KodairaType::IIIStar(), 9, 8},
                         Row{KodairaType::IIStar(), 10, 9}}) {
        CHECK(type_info(r.t).euler == r.euler);
        CHECK(type_info(r.t).components == r.components);
    }
    CHECK(type_info(KodairaType::I(0)).euler == 0);
}

TEST_CASE("component count matches the affine diagram")
{
    for (auto t : reducible_types_on_x()) CHECK(affine_diagram(t).size() == t.components());
    for (int n = 1; n <= 12; ++n) CHECK(affine_diagram(KodairaType::I(n)).size() == n);
    CHECK_THROWS_AS(affine_diagram(KodairaType::I(0)), std::invalid_argument);
}

TEST_CASE("special-component profiles")
{
    using P = SpecialProfile;
    CHECK(type_info(KodairaType::IStar(0)).profiles == std::vector<P>{{1, 0, 4}});
    CHECK(type_info(KodairaType::I(2)).profiles == std::vector<P>{{0, 0, 2}, {1, 1, 1}});
    CHECK(type_info(KodairaType::I(4)).profiles == std::vector<P>{{2, 2, 2}});
    CHECK(type_info(KodairaType::II()).profiles == std::vector<P>{{0, 0, 0}});
    CHECK(type_info(KodairaType::IIStar()).profiles == std::vector<P>{{4, 0, 1}});
    CHECK(type_info(KodairaType::IIIStar()).profiles == std::vector<P>{{3, 0, 2}});
    CHECK(type_info(KodairaType::IVStar()).profiles == std::vector<P>{{4, 3, 0}});
    CHECK_FALSE(type_info(KodairaType::I(3)).occurs_on_x());
    CHECK_FALSE(type_info(KodairaType::IV()).occurs_on_x());
    CHECK_FALSE(type_info(KodairaType::IStar(1)).occurs_on_x());
}

TEST_CASE("special masks agree with the profiles")
{
    for (auto t : reducible_types_on_x()) {
        const auto d = affine_diagram(t);
        const auto info = type_info(t);
        REQUIRE_FALSE(d.special_masks.empty());
        for (const auto& mask : d.special_masks) {
            SpecialProfile p;
            for (int v = 0; v < d.size(); ++v) {
                if (mask[v]) {
                    ++p.specials;
                    if (d.multiplicities[v] == 1) ++p.simple_specials;
                } else if (d.multiplicities[v] == 1) {
                    ++p.simple_ordinaries;
                }
                // specials are disjoint
                for (int u = 0; u < d.size(); ++u)
                    if (u != v && mask[u] && mask[v]) CHECK(d.gram[u][v] == 0);
            }
            CHECK(std::find(info.profiles.begin(), info.profiles.end(), p) != info.profiles.end());
        }
    }
}

TEST_CASE("null vectors of the diagrams have square zero")
{
    for (auto t : reducible_types_on_x()) {
        const auto d = affine_diagram(t);
        for (int v = 0; v < d.size(); ++v) {
            long s = 0;
            for (int u = 0; u < d.size(); ++u) s += static_cast<long>(d.gram[v][u]) * d.multiplicities[u];
            CHECK(s == 0);
        }
    }
}

TEST_CASE("parse and name")
{
    for (const char* s : {"I1", "I10", "I0*", "I2*", "II", "III", "IV", "IV*", "III*", "II*"})
        CHECK(KodairaType::parse(s).name() == s);
    CHECK(KodairaType::parse("I_10") == KodairaType::I(10));
    CHECK_THROWS_AS(KodairaType::parse("V"), std::invalid_argument);
    CHECK_THROWS_AS(KodairaType::parse("I-1"), std::invalid_argument);
}

TEST_CASE("display order and multiset names")
{
    CHECK(multiset_name({KodairaType::IStar(0), KodairaType::IStar(2), KodairaType::IStar(0)}) == "I2* 2I0*");
    CHECK(multiset_name({KodairaType::I(4), KodairaType::IVStar()}) == "IV* I4");
    CHECK(multiset_name({}) == "-");
    auto all = reducible_types_on_x();
    CHECK(canonical(all) == all);
    CHECK(std::is_sorted(all.begin(), all.end()));
}

TEST_CASE("j classes")
{
    CHECK(to_string(type_info(KodairaType::IIStar()).j) == "0");
    CHECK(to_string(type_info(KodairaType::III()).j) == "1728");
    CHECK(to_string(type_info(KodairaType::I(4)).j) == "infinity");
}
