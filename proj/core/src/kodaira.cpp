#include "k3fib/kodaira.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <stdexcept>

namespace k3fib {

KodairaType KodairaType::I(int n)
{
    if (n < 0) throw std::invalid_argument("I_n needs n >= 0");
    return KodairaType(KodairaFamily::I, n);
}

KodairaType KodairaType::IStar(int n)
{
    if (n < 0) throw std::invalid_argument("I_n* needs n >= 0");
    return KodairaType(KodairaFamily::IStar, n);
}

KodairaType KodairaType::parse(std::string_view text)
{
    static const std::map<std::string_view, KodairaType> fixed{
        {"II", II()},         {"III", III()},         {"IV", IV()},
        {"IV*", IVStar()},    {"III*", IIIStar()},    {"II*", IIStar()},
    };
    if (auto it = fixed.find(text); it != fixed.end()) return it->second;
    std::string_view s = text;
    if (!s.empty() && s.front() == 'I') {
        s.remove_prefix(1);
        if (!s.empty() && s.front() == '_') s.remove_prefix(1);
        bool star = !s.empty() && s.back() == '*';
        if (star) s.remove_suffix(1);
        int n = 0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), n);
        if (!s.empty() && ec == std::errc{} && ptr == s.data() + s.size() && n >= 0)
            return star ? IStar(n) : I(n);
    }
    throw std::invalid_argument("not a Kodaira type: '" + std::string(text) + "'");
}

std::string KodairaType::name() const
{
    switch (family_) {
    case KodairaFamily::I: return "I" + std::to_string(n_);
    case KodairaFamily::IStar: return "I" + std::to_string(n_) + "*";
    case KodairaFamily::II: return "II";
    case KodairaFamily::III: return "III";
    case KodairaFamily::IV: return "IV";
    case KodairaFamily::IVStar: return "IV*";
    case KodairaFamily::IIIStar: return "III*";
    case KodairaFamily::IIStar: return "II*";
    }
    return "?";
}

int KodairaType::components() const
{
    switch (family_) {
    case KodairaFamily::I: return n_ == 0 ? 1 : n_;
    case KodairaFamily::IStar: return n_ + 5;
    case KodairaFamily::II: return 1;
    case KodairaFamily::III: return 2;
    case KodairaFamily::IV: return 3;
    case KodairaFamily::IVStar: return 7;
    case KodairaFamily::IIIStar: return 8;
    case KodairaFamily::IIStar: return 9;
    }
    return 0;
}

int KodairaType::euler() const
{
    switch (family_) {
    case KodairaFamily::I: return n_;
    case KodairaFamily::IStar: return n_ + 6;
    case KodairaFamily::II: return 2;
    case KodairaFamily::III: return 3;
    case KodairaFamily::IV: return 4;
    case KodairaFamily::IVStar: return 8;
    case KodairaFamily::IIIStar: return 9;
    case KodairaFamily::IIStar: return 10;
    }
    return 0;
}

bool KodairaType::is_small() const
{
    return (family_ == KodairaFamily::I && (n_ == 1 || n_ == 2)) || family_ == KodairaFamily::II ||
           family_ == KodairaFamily::III;
}

int KodairaType::display_rank() const
{
    int group = 0;
    switch (family_) {
    case KodairaFamily::IIStar: group = 0; break;
    case KodairaFamily::IIIStar: group = 1; break;
    case KodairaFamily::IVStar: group = 2; break;
    case KodairaFamily::IStar: group = 3; break;
    case KodairaFamily::I: group = 4; break;
    case KodairaFamily::IV: group = 5; break;
    case KodairaFamily::III: group = 6; break;
    case KodairaFamily::II: group = 7; break;
    }
    return group * 1000 + (999 - n_);
}

std::strong_ordering operator<=>(const KodairaType& a, const KodairaType& b)
{
    return a.display_rank() <=> b.display_rank();
}

std::string_view to_string(JClass j)
{
    switch (j) {
    case JClass::Zero: return "0";
    case JClass::Twelve28: return "1728";
    case JClass::Infinity: return "infinity";
    case JClass::FiniteNonspecial: return "finite";
    }
    return "?";
}

FiberTypeInfo type_info(KodairaType t)
{
    FiberTypeInfo info;
    info.euler = t.euler();
    info.components = t.components();
    info.table_components = info.components;
    const int n = t.index();
    switch (t.family()) {
    case KodairaFamily::I:
        info.j = n == 0 ? JClass::FiniteNonspecial : JClass::Infinity;
        if (n > 0) info.table_components = n + 1;
        if (n == 1) info.profiles = {{0, 0, 0}};
        else if (n == 2) info.profiles = {{0, 0, 2}, {1, 1, 1}};
        else if (n >= 4 && n <= 10 && n % 2 == 0) info.profiles = {{n / 2, n / 2, n / 2}};
        break;
    case KodairaFamily::IStar:
        info.j = n == 0 ? JClass::FiniteNonspecial : JClass::Infinity;
        if (n == 0) info.table_components = 1;
        if (n <= 6 && n % 2 == 0) info.profiles = {{n / 2 + 1, 0, 4}};
        break;
    case KodairaFamily::II:
        info.j = JClass::Zero;
        info.profiles = {{0, 0, 0}};
        break;
    case KodairaFamily::III:
        info.j = JClass::Twelve28;
        info.profiles = {{0, 0, 2}, {1, 1, 1}};
        break;
    case KodairaFamily::IV:
        info.j = JClass::Zero;
        break;
    case KodairaFamily::IVStar:
        info.j = JClass::Zero;
        info.profiles = {{4, 3, 0}};
        break;
    case KodairaFamily::IIIStar:
        info.j = JClass::Twelve28;
        info.profiles = {{3, 0, 2}};
        break;
    case KodairaFamily::IIStar:
        info.j = JClass::Zero;
        info.profiles = {{4, 0, 1}};
        break;
    }
    return info;
}

std::vector<KodairaType> reducible_types_on_x()
{
    std::vector<KodairaType> out{KodairaType::IIStar(), KodairaType::IIIStar(), KodairaType::IVStar()};
    for (int n = 6; n >= 0; n -= 2) out.push_back(KodairaType::IStar(n));
    for (int n = 10; n >= 2; n -= 2) out.push_back(KodairaType::I(n));
    out.push_back(KodairaType::III());
    return out;
}

std::vector<KodairaType> canonical(std::vector<KodairaType> types)
{
    std::sort(types.begin(), types.end());
    return types;
}

std::string multiset_name(std::vector<KodairaType> types)
{
    types = canonical(std::move(types));
    std::string out;
    for (std::size_t k = 0; k < types.size();) {
        std::size_t r = k;
        while (r < types.size() && types[r] == types[k]) ++r;
        if (!out.empty()) out += " ";
        if (r - k > 1) out += std::to_string(r - k);
        out += types[k].name();
        k = r;
    }
    return out.empty() ? std::string("-") : out;
}

namespace {

struct DiagramBuilder {
    std::vector<std::vector<int>> gram;
    std::vector<int> mult;

    int add(int m)
    {
        for (auto& row : gram) row.push_back(0);
        gram.emplace_back(gram.size() + 1, 0);
        gram.back().back() = -2;
        mult.push_back(m);
        return static_cast<int>(mult.size()) - 1;
    }
    void join(int a, int b, int w = 1)
    {
        gram[a][b] = w;
        gram[b][a] = w;
    }
};

} // namespace

AffineDiagram affine_diagram(KodairaType t)
{
    DiagramBuilder b;
    std::vector<std::vector<bool>> masks;
    const int n = t.index();
    const bool on_x = type_info(t).occurs_on_x();

    switch (t.family()) {
    case KodairaFamily::I:
        if (n == 0) throw std::invalid_argument("I0 is a smooth fibre and has no dual graph");
        if (n == 1) {
            b.add(1);
            b.gram[0][0] = 0;
            masks = {{false}};
        } else if (n == 2) {
            b.add(1);
            b.add(1);
            b.join(0, 1, 2);
            masks = {{false, false}, {true, false}};
        } else {
            for (int k = 0; k < n; ++k) b.add(1);
            for (int k = 0; k < n; ++k) b.join(k, (k + 1) % n);
            if (on_x) {
                std::vector<bool> m(n);
                for (int k = 0; k < n; ++k) m[k] = k % 2 == 0;
                masks = {m};
            }
        }
        break;
    case KodairaFamily::IStar: {
        // chain c_0..c_n, then two ends on c_0 and two on c_n
        for (int k = 0; k <= n; ++k) b.add(2);
        for (int k = 0; k < n; ++k) b.join(k, k + 1);
        for (int e = 0; e < 2; ++e) b.join(0, b.add(1));
        for (int e = 0; e < 2; ++e) b.join(n, b.add(1));
        if (on_x) {
            std::vector<bool> m(b.mult.size(), false);
            for (int k = 0; k <= n; k += 2) m[k] = true;
            masks = {m};
        }
        break;
    }
    case KodairaFamily::II:
        b.add(1);
        b.gram[0][0] = 0;
        masks = {{false}};
        break;
    case KodairaFamily::III:
        b.add(1);
        b.add(1);
        b.join(0, 1, 2);
        masks = {{false, false}, {true, false}};
        break;
    case KodairaFamily::IV:
        for (int k = 0; k < 3; ++k) b.add(1);
        b.join(0, 1);
        b.join(1, 2);
        b.join(2, 0);
        break;
    case KodairaFamily::IVStar: {
        int c = b.add(3);
        for (int arm = 0; arm < 3; ++arm) {
            int a1 = b.add(2);
            int a2 = b.add(1);
            b.join(c, a1);
            b.join(a1, a2);
        }
        masks = {{true, false, true, false, true, false, true}};
        break;
    }
    case KodairaFamily::IIIStar: {
        const int m[] = {1, 2, 3, 4, 3, 2, 1};
        for (int k = 0; k < 7; ++k) b.add(m[k]);
        for (int k = 0; k < 6; ++k) b.join(k, k + 1);
        b.join(3, b.add(2));
        masks = {{false, true, false, true, false, true, false, false}};
        break;
    }
    case KodairaFamily::IIStar: {
        int c = b.add(6);
        int prev = c;
        for (int m = 5; m >= 1; --m) {
            int v = b.add(m);
            b.join(prev, v);
            prev = v;
        }
        int b1 = b.add(4);
        int b2 = b.add(2);
        b.join(c, b1);
        b.join(b1, b2);
        b.join(c, b.add(3));
        // centre, 2nd and 4th on the long arm, end of the short arm
        masks = {{true, false, true, false, true, false, false, true, false}};
        break;
    }
    }
    return AffineDiagram{t, std::move(b.gram), std::move(b.mult), std::move(masks)};
}

} // namespace k3fib
