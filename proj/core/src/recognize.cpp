#include "k3fib/recognize.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <tuple>

namespace k3fib {

namespace {

// Every affine diagram with (-2)-vertices and at most `max` of them.
std::vector<KodairaType> candidate_types(int max)
{
    std::vector<KodairaType> out;
    for (int n = 2; n <= max; ++n) out.push_back(KodairaType::I(n));
    out.push_back(KodairaType::III());
    out.push_back(KodairaType::IV());
    for (int n = 0; n + 5 <= max; ++n) out.push_back(KodairaType::IStar(n));
    for (auto t : {KodairaType::IVStar(), KodairaType::IIIStar(), KodairaType::IIStar()})
        if (t.components() <= max) out.push_back(t);
    return out;
}

// Search order: breadth first per connected component, with the already
// placed neighbour each vertex hangs off (or -1 for a component root).
std::pair<std::vector<int>, std::vector<int>> search_order(const DualGraph& g)
{
    const int n = g.size();
    std::vector<int> order;
    std::vector<int> parent(n, -1);
    std::vector<bool> seen(n, false);
    for (int root = 0; root < n; ++root) {
        if (seen[root]) continue;
        seen[root] = true;
        std::size_t head = order.size();
        order.push_back(root);
        while (head < order.size()) {
            int v = order[head++];
            for (int u = 0; u < n; ++u)
                if (!seen[u] && g.adjacent(u, v)) {
                    seen[u] = true;
                    parent[u] = v;
                    order.push_back(u);
                }
        }
    }
    return {order, parent};
}

void for_each_embedding(const DualGraph& g, const AffineDiagram& d,
                        const std::function<void(const std::vector<int>&)>& visit)
{
    const int n = g.size();
    if (n > d.size()) return;
    auto [order, parent] = search_order(g);
    std::vector<int> image(n, -1);
    std::vector<bool> used(d.size(), false);

    std::function<void(int)> step = [&](int k) {
        if (k == n) {
            visit(image);
            return;
        }
        const int v = order[k];
        auto try_target = [&](int t) {
            if (used[t] || d.gram[t][t] != g.gram[v][v]) return;
            for (int j = 0; j < k; ++j) {
                int u = order[j];
                if (d.gram[t][image[u]] != g.gram[v][u]) return;
            }
            used[t] = true;
            image[v] = t;
            step(k + 1);
            used[t] = false;
            image[v] = -1;
        };
        if (parent[v] >= 0) {
            const int p = image[parent[v]];
            for (int t = 0; t < d.size(); ++t)
                if (t != p && d.gram[p][t] != 0) try_target(t);
        } else {
            for (int t = 0; t < d.size(); ++t) try_target(t);
        }
    };
    step(0);
}

bool has_known_kind(const std::vector<VertexKind>& kinds)
{
    return std::any_of(kinds.begin(), kinds.end(), [](VertexKind k) { return k != VertexKind::Unknown; });
}

// Fewest special vertices outside the image over the colourings that fit, or
// -1 if none fits.
int best_added_specials(const AffineDiagram& d, const std::vector<int>& image,
                        const std::vector<VertexKind>& kinds, bool added_ordinary_only)
{
    if (d.special_masks.empty()) return has_known_kind(kinds) ? -1 : 0;
    std::vector<bool> in_image(d.size(), false);
    for (int t : image) in_image[t] = true;
    int best = -1;
    for (const auto& mask : d.special_masks) {
        bool ok = true;
        for (std::size_t v = 0; v < image.size() && ok; ++v) {
            if (kinds[v] == VertexKind::Special && !mask[image[v]]) ok = false;
            if (kinds[v] == VertexKind::Ordinary && mask[image[v]]) ok = false;
        }
        if (!ok) continue;
        int added = 0;
        for (int t = 0; t < d.size(); ++t)
            if (!in_image[t] && mask[t]) ++added;
        if (added_ordinary_only && added > 0) continue;
        if (best < 0 || added < best) best = added;
    }
    return best;
}

} // namespace

bool kinds_fit(const AffineDiagram& d, const std::vector<int>& image, const std::vector<VertexKind>& kinds,
               bool added_ordinary_only)
{
    return best_added_specials(d, image, kinds, added_ordinary_only) >= 0;
}

std::vector<Completion> completions(const DualGraph& g, const CompletionOptions& opts)
{
    std::vector<Completion> out;
    std::map<std::tuple<int, std::vector<int>, int>, bool> seen;
    for (KodairaType t : candidate_types(opts.max_components)) {
        const AffineDiagram d = affine_diagram(t);
        if (d.size() <= g.size()) continue;
        for_each_embedding(g, d, [&](const std::vector<int>& image) {
            int added_specials = -1;
            if (opts.respect_kinds) {
                added_specials = best_added_specials(d, image, g.kinds, opts.added_ordinary_only);
                if (added_specials < 0) return;
            }
            std::vector<int> mult;
            for (int img : image) mult.push_back(d.multiplicities[img]);
            auto key = std::make_tuple(t.display_rank(), mult, added_specials);
            if (!seen.emplace(key, true).second) return;
            out.push_back(Completion{t, d.size() - g.size(), image, std::move(mult), added_specials});
        });
    }
    std::stable_sort(out.begin(), out.end(), [](const Completion& a, const Completion& b) {
        if (a.added != b.added) return a.added < b.added;
        return a.type < b.type;
    });
    return out;
}

RecognitionResult recognize(const DualGraph& g, const CompletionOptions& opts)
{
    if (!g.connected()) throw RecognitionError("cluster is not connected");
    const int n = g.size();
    if (n == 1 && g.gram[0][0] == 0) return AmbiguousI1orII{};
    if (n == 2 && g.gram[0][0] == -2 && g.gram[1][1] == -2 && g.gram[0][1] == 2) return AmbiguousI2orIII{};

    if (auto m = null_vector(g)) {
        // I_n comes before IV so a triangle reads as I3; the two are not
        // separable from intersection numbers alone.
        std::vector<KodairaType> same_size;
        if (n >= 3) same_size.push_back(KodairaType::I(n));
        if (n >= 5) same_size.push_back(KodairaType::IStar(n - 5));
        for (auto t : {KodairaType::IVStar(), KodairaType::IIIStar(), KodairaType::IIStar(), KodairaType::IV()})
            if (t.components() == n) same_size.push_back(t);
        for (KodairaType t : same_size) {
            const AffineDiagram d = affine_diagram(t);
            std::vector<int> iso;
            for_each_embedding(g, d, [&](const std::vector<int>& image) {
                if (iso.empty()) iso = image;
            });
            if (iso.empty()) continue;
            for (int v = 0; v < n; ++v)
                if (d.multiplicities[iso[v]] != (*m)[v])
                    throw std::logic_error("null vector disagrees with the " + t.name() + " diagram");
            return ExactFiber{t, *m};
        }
        throw RecognitionError("cluster has a fibre-like null vector but is not an affine ADE diagram");
    }

    auto found = completions(g, opts);
    if (found.empty())
        throw RecognitionError("cluster does not embed in any affine diagram with at most " +
                               std::to_string(opts.max_components) + " components");
    return PartialFiber{std::move(found)};
}

bool special_count_consistent(KodairaType t, const std::vector<VertexKind>& kinds,
                              const std::vector<int>& multiplicities)
{
    const bool irreducible =
        (t.family() == KodairaFamily::I && t.index() == 1) || t.family() == KodairaFamily::II;
    if (irreducible) return kinds.size() == 1 && kinds[0] != VertexKind::Special;
    if (static_cast<int>(kinds.size()) != t.components()) return false;
    SpecialProfile p;
    for (std::size_t v = 0; v < kinds.size(); ++v) {
        const bool special = kinds[v] == VertexKind::Special;
        const bool simple = multiplicities[v] == 1;
        if (special) ++p.specials;
        if (special && simple) ++p.simple_specials;
        if (!special && simple) ++p.simple_ordinaries;
    }
    const auto profiles = type_info(t).profiles;
    return std::find(profiles.begin(), profiles.end(), p) != profiles.end();
}

std::string describe(const RecognitionResult& r)
{
    struct Visitor {
        std::string operator()(const ExactFiber& e) const { return e.type.name(); }
        std::string operator()(const AmbiguousI2orIII&) const { return "I2/III"; }
        std::string operator()(const AmbiguousI1orII&) const { return "I1/II"; }
        std::string operator()(const PartialFiber& p) const
        {
            std::ostringstream os;
            os << "partial -> " << p.minimal().type.name() << " (+" << p.minimal().added << ")";
            return os.str();
        }
    };
    return std::visit(Visitor{}, r);
}

} // namespace k3fib
