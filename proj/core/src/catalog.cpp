#include "k3fib/catalog.hpp"

#include <algorithm>
#include <charconv>
#include <set>

namespace k3fib {

std::string_view to_string(CurveKind k)
{
    switch (k) {
    case CurveKind::Special: return "special";
    case CurveKind::Exceptional: return "exceptional";
    case CurveKind::OrdinaryLine: return "ordinary_line";
    case CurveKind::OrdinaryConic: return "ordinary_conic";
    }
    return "?";
}

UnknownNameError::UnknownNameError(std::string token, const std::string& why)
    : std::invalid_argument("unknown curve name '" + token + "': " + why), token_(std::move(token))
{
}

DivisorClass mu_class(NodePair a, NodePair b)
{
    if (a.meets(b) || a == b)
        throw std::invalid_argument("mu needs disjoint node pairs, got " + a.digits() + " and " +
                                    b.digits());
    return hyperplane_class() - exceptional_class(a) - exceptional_class(b);
}

std::string mu_name(NodePair a, NodePair b)
{
    if (b < a) std::swap(a, b);
    return "mu_" + a.digits() + "_" + b.digits();
}

std::array<int, kLineCount> node_incidence(std::span<const NodePair> nodes)
{
    std::array<int, kLineCount> c{};
    for (const auto& p : nodes) {
        ++c[p.first() - 1];
        ++c[p.second() - 1];
    }
    return c;
}

bool conic_admissible(std::span<const NodePair> nodes)
{
    if (nodes.size() != 5) return false;
    std::set<NodePair> distinct(nodes.begin(), nodes.end());
    if (distinct.size() != 5) return false;
    const auto inc = node_incidence(nodes);
    // three nodes on L_n would force L_n into the conic
    if (std::any_of(inc.begin(), inc.end(), [](int c) { return c >= 3; })) return false;
    // a line with fewer than two nodes meets the conic transversally off the
    // nodes, where the branch divisor has odd contact
    return std::any_of(inc.begin(), inc.end(), [](int c) { return c < 2; });
}

DivisorClass conic_class(std::span<const NodePair> nodes)
{
    if (!conic_admissible(nodes))
        throw std::invalid_argument("inadmissible conic node set " + conic_name(nodes));
    DivisorClass d = 2 * hyperplane_class();
    for (const auto& p : nodes) d -= exceptional_class(p);
    return d;
}

std::string conic_name(std::span<const NodePair> nodes)
{
    std::vector<NodePair> sorted(nodes.begin(), nodes.end());
    std::sort(sorted.begin(), sorted.end());
    std::string s = "conic";
    for (const auto& p : sorted) s += "_" + p.digits();
    return s;
}

namespace {

std::optional<NodePair> parse_pair(std::string_view digits)
{
    if (digits.size() != 2) return std::nullopt;
    int i = digits[0] - '0';
    int j = digits[1] - '0';
    if (i < 1 || i > kLineCount || j < 1 || j > kLineCount || i >= j) return std::nullopt;
    return NodePair(i, j);
}

std::vector<std::string_view> split_underscore(std::string_view s)
{
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        auto pos = s.find('_', start);
        out.push_back(s.substr(start, pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

} // namespace

Curve curve_from_name(std::string_view name)
{
    const std::string token(name);
    if (name.size() == 2 && name[0] == 'l') {
        int i = name[1] - '0';
        if (i < 1 || i > kLineCount) throw UnknownNameError(token, "special line index must be 1..6");
        return Curve{token, CurveKind::Special, special_line_class(i)};
    }
    if (name.size() == 3 && name[0] == 'e') {
        auto p = parse_pair(name.substr(1));
        if (!p) throw UnknownNameError(token, "expected e<i><j> with 1 <= i < j <= 6");
        return Curve{token, CurveKind::Exceptional, exceptional_class(*p)};
    }
    if (name.starts_with("mu_")) {
        auto parts = split_underscore(name.substr(3));
        if (parts.size() != 2) throw UnknownNameError(token, "expected mu_<ij>_<km>");
        auto a = parse_pair(parts[0]);
        auto b = parse_pair(parts[1]);
        if (!a || !b) throw UnknownNameError(token, "expected mu_<ij>_<km> with i<j, k<m");
        if (a->meets(*b)) throw UnknownNameError(token, "node pairs must be disjoint");
        if (mu_name(*a, *b) != name) throw UnknownNameError(token, "non-canonical, use " + mu_name(*a, *b));
        return Curve{token, CurveKind::OrdinaryLine, mu_class(*a, *b)};
    }
    if (name.starts_with("conic_")) {
        auto parts = split_underscore(name.substr(6));
        std::vector<NodePair> nodes;
        for (auto part : parts) {
            auto p = parse_pair(part);
            if (!p) throw UnknownNameError(token, "bad node '" + std::string(part) + "'");
            nodes.push_back(*p);
        }
        if (!conic_admissible(nodes)) throw UnknownNameError(token, "node set is not admissible");
        if (conic_name(nodes) != name) throw UnknownNameError(token, "non-canonical, use " + conic_name(nodes));
        return Curve{token, CurveKind::OrdinaryConic, conic_class(nodes), true};
    }
    throw UnknownNameError(token, "expected l<i>, e<ij>, mu_<ij>_<km> or conic_<nodes>");
}

DivisorClass class_from_name(std::string_view name)
{
    if (name == "H") return hyperplane_class();
    return curve_from_name(name).cls;
}

Catalog Catalog::build(bool include_conics)
{
    Catalog c;
    c.has_conics_ = include_conics;
    for (int i = 1; i <= kLineCount; ++i)
        c.curves_.push_back({"l" + std::to_string(i), CurveKind::Special, special_line_class(i)});
    const auto pairs = NodePair::all();
    for (const auto& p : pairs)
        c.curves_.push_back({"e" + p.digits(), CurveKind::Exceptional, exceptional_class(p)});
    for (std::size_t a = 0; a < pairs.size(); ++a)
        for (std::size_t b = a + 1; b < pairs.size(); ++b)
            if (!pairs[a].meets(pairs[b]))
                c.curves_.push_back({mu_name(pairs[a], pairs[b]), CurveKind::OrdinaryLine,
                                     mu_class(pairs[a], pairs[b])});
    if (include_conics) {
        // all 5-subsets of the 15 nodes in lexicographic order
        std::array<int, 5> idx{0, 1, 2, 3, 4};
        while (true) {
            std::array<NodePair, 5> nodes{pairs[idx[0]], pairs[idx[1]], pairs[idx[2]],
                                          pairs[idx[3]], pairs[idx[4]]};
            if (conic_admissible(nodes))
                c.curves_.push_back({conic_name(nodes), CurveKind::OrdinaryConic, conic_class(nodes), true});
            int k = 4;
            while (k >= 0 && idx[k] == 10 + k) --k;
            if (k < 0) break;
            ++idx[k];
            for (int t = k + 1; t < 5; ++t) idx[t] = idx[t - 1] + 1;
        }
    }
    for (std::size_t k = 0; k < c.curves_.size(); ++k) c.by_name_.emplace(c.curves_[k].name, k);
    return c;
}

const Curve* Catalog::find(std::string_view name) const
{
    auto it = by_name_.find(std::string(name));
    return it == by_name_.end() ? nullptr : &curves_[it->second];
}

std::optional<std::size_t> Catalog::index_of(std::string_view name) const
{
    auto it = by_name_.find(std::string(name));
    if (it == by_name_.end()) return std::nullopt;
    return it->second;
}

const Curve& Catalog::at(std::string_view name) const
{
    if (const Curve* c = find(name)) return *c;
    // well-formed names missing from this catalog (e.g. conics in a line-only
    // catalog) get a more useful message
    curve_from_name(name);
    throw UnknownNameError(std::string(name), "not in this catalog (built without conics?)");
}

std::size_t Catalog::count(CurveKind k) const
{
    return static_cast<std::size_t>(
        std::count_if(curves_.begin(), curves_.end(), [k](const Curve& c) { return c.kind == k; }));
}

const Catalog& catalog_with_conics()
{
    static const Catalog c = Catalog::build(true);
    return c;
}

const Catalog& catalog_lines_only()
{
    static const Catalog c = Catalog::build(false);
    return c;
}

} // namespace k3fib
