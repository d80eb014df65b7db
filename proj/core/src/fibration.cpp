#include "k3fib/fibration.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace k3fib {

DivisorInputError::DivisorInputError(std::string token, const std::string& why)
    : std::invalid_argument("bad divisor term '" + token + "': " + why), token_(std::move(token))
{
}

namespace {

int int_pairing(const DivisorClass& a, const DivisorClass& b)
{
    const Rational p = pairing(a, b);
    if (!is_integer(p)) throw std::logic_error("non-integral pairing " + to_string(p));
    return static_cast<int>(p.numerator());
}

struct ResolvedTerm {
    std::string name;
    int multiplicity;
    DivisorClass cls;
};

std::vector<ResolvedTerm> resolve_terms(const FibrationInput& inp)
{
    if (inp.fiber_divisor.empty()) throw DivisorInputError("{}", "divisor is empty");
    std::vector<ResolvedTerm> out;
    std::map<std::string, std::size_t> pos;
    for (const auto& [name, mult] : inp.fiber_divisor) {
        if (mult < 1) throw DivisorInputError(name, "multiplicity must be a positive integer, got " + std::to_string(mult));
        DivisorClass cls = name == "H" ? hyperplane_class() : inp.catalog->at(name).cls;
        if (auto it = pos.find(name); it != pos.end()) {
            out[it->second].multiplicity += mult;
            continue;
        }
        pos.emplace(name, out.size());
        out.push_back({name, mult, std::move(cls)});
    }
    return out;
}

std::string superscript_square(const Rational& r)
{
    // D² with a proper minus sign
    std::string v = to_string(r);
    if (!v.empty() && v[0] == '-') v = "−" + v.substr(1);
    return "D²=" + v;
}

VertexKind vertex_kind(CurveKind k)
{
    return is_special(k) ? VertexKind::Special : VertexKind::Ordinary;
}

} // namespace

DivisorClass validate_fiber_divisor(const FibrationInput& inp)
{
    const auto terms = resolve_terms(inp);
    DivisorClass f;
    for (const auto& t : terms) f += Rational(t.multiplicity) * t.cls;

    const Rational sq = square(f);
    if (sq != 0) throw FibrationError("not a fiber class: " + superscript_square(sq));
    if (arithmetic_genus(f) != 1)
        throw FibrationError("arithmetic genus " + to_string(arithmetic_genus(f)) + " is not 1");

    DualGraph support;
    for (const auto& a : terms) {
        support.names.push_back(a.name);
        support.kinds.push_back(VertexKind::Unknown);
        std::vector<int> row;
        for (const auto& b : terms) row.push_back(int_pairing(a.cls, b.cls));
        support.gram.push_back(std::move(row));
    }
    if (!support.connected()) throw FibrationError("not connected: the support splits into several components");
    return f;
}

SectionData find_sections(const DivisorClass& f, const Catalog& catalog)
{
    SectionData out;
    for (const auto& c : catalog.curves()) {
        const int d = int_pairing(c.cls, f);
        if (d == 1) out.sections.push_back(c.name);
        else if (d >= 2) out.multisections.push_back({c.name, d});
    }
    return out;
}

DualGraph dual_graph_of(const Catalog& catalog, const std::vector<std::size_t>& curves)
{
    DualGraph g;
    for (auto a : curves) {
        g.names.push_back(catalog[a].name);
        g.kinds.push_back(vertex_kind(catalog[a].kind));
        std::vector<int> row;
        for (auto b : curves) row.push_back(int_pairing(catalog[a].cls, catalog[b].cls));
        g.gram.push_back(std::move(row));
    }
    return g;
}

std::vector<Cluster> orthogonal_fibers(const DivisorClass& f, const Catalog& catalog)
{
    std::vector<std::size_t> orth;
    for (std::size_t k = 0; k < catalog.size(); ++k)
        if (pairing(catalog[k].cls, f) == 0) orth.push_back(k);

    const DualGraph all = dual_graph_of(catalog, orth);
    std::vector<int> comp(orth.size(), -1);
    int ncomp = 0;
    for (std::size_t s = 0; s < orth.size(); ++s) {
        if (comp[s] >= 0) continue;
        std::vector<std::size_t> stack{s};
        comp[s] = ncomp;
        while (!stack.empty()) {
            auto v = stack.back();
            stack.pop_back();
            for (std::size_t u = 0; u < orth.size(); ++u)
                if (comp[u] < 0 && all.adjacent(static_cast<int>(u), static_cast<int>(v))) {
                    comp[u] = ncomp;
                    stack.push_back(u);
                }
        }
        ++ncomp;
    }

    const CompletionOptions opts{true, true, 15};
    std::vector<Cluster> out;
    for (int c = 0; c < ncomp; ++c) {
        std::vector<int> local;
        std::vector<std::size_t> curves;
        for (std::size_t k = 0; k < orth.size(); ++k)
            if (comp[k] == c) {
                local.push_back(static_cast<int>(k));
                curves.push_back(orth[k]);
            }
        DualGraph g = all.induced(local);
        RecognitionResult r = recognize(g, opts);
        out.push_back(Cluster{std::move(curves), std::move(g), std::move(r)});
    }
    return out;
}

int shioda_tate_rank(const std::vector<KodairaType>& fibers, int slack)
{
    int r = 14 - slack;
    for (auto t : fibers) r -= t.components() - 1;
    if (r < 0) throw std::domain_error("Shioda-Tate gives negative Mordell-Weil rank " + std::to_string(r));
    return r;
}

EulerAccount euler_accounting(const std::vector<KodairaType>& fibers)
{
    EulerAccount a;
    for (auto t : fibers) a.used += t.euler();
    if (a.used > 24) throw std::domain_error("Euler numbers sum to " + std::to_string(a.used) + " > 24");
    a.residual = 24 - a.used;
    return a;
}

bool FibrationReport::checks_ok() const
{
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.ok; });
}

bool FibrationReport::claims_ok(ClaimKind kind) const
{
    return std::all_of(claims.begin(), claims.end(),
                       [kind](const Claim& c) { return c.kind != kind || c.ok; });
}

namespace {

bool is_small_type(KodairaType t)
{
    return t.is_small();
}

struct CompletionChoice {
    std::optional<Completion> chosen;
    std::vector<std::string> notes;
};

// Picks the completion of a partial cluster: it must fit an allowed colouring,
// add only ordinary components, and keep every curve meeting F within its
// intersection number with F. The fewest added components wins.
CompletionChoice choose_completion(const Cluster& cl, const Catalog& catalog, const std::vector<int>& f_pair)
{
    CompletionChoice out;
    const auto loose = completions(cl.graph, {false, false, 15});
    const auto strict = completions(cl.graph, {true, true, 15});

    std::vector<std::vector<int>> contact; // per positive curve, pairing with cluster vertices
    std::vector<std::size_t> positive;
    for (std::size_t k = 0; k < catalog.size(); ++k) {
        if (f_pair[k] <= 0) continue;
        positive.push_back(k);
        std::vector<int> row;
        for (auto v : cl.curves) row.push_back(int_pairing(catalog[k].cls, catalog[v].cls));
        contact.push_back(std::move(row));
    }
    auto contact_violation = [&](const Completion& c) -> std::optional<std::string> {
        for (std::size_t i = 0; i < positive.size(); ++i) {
            int s = 0;
            for (std::size_t v = 0; v < c.multiplicities.size(); ++v) s += c.multiplicities[v] * contact[i][v];
            if (s > f_pair[positive[i]])
                return catalog[positive[i]].name + " would meet the fibre " + std::to_string(s) +
                       " times but meets F " + std::to_string(f_pair[positive[i]]) + " times";
        }
        return std::nullopt;
    };

    std::map<int, std::string> rejected; // display rank -> reason, best placement per type
    std::vector<const Completion*> survivors;
    for (const auto& c : strict) {
        if (auto why = contact_violation(c)) {
            rejected.emplace(c.type.display_rank(), c.type.name() + " (+" + std::to_string(c.added) + "): " + *why);
            continue;
        }
        survivors.push_back(&c);
    }
    std::set<int> strict_types;
    for (const auto& c : strict) strict_types.insert(c.type.display_rank());
    for (const auto& c : loose)
        if (!strict_types.count(c.type.display_rank()))
            rejected.emplace(c.type.display_rank(), c.type.name() + " (+" + std::to_string(c.added) +
                                                        "): no allowed special/ordinary colouring with "
                                                        "ordinary added components");

    if (survivors.empty()) {
        out.notes.push_back("no completion passes the colouring and contact filters");
        return out;
    }
    const Completion& best = *survivors.front();
    out.chosen = best;
    std::set<int> surviving_types;
    for (auto* c : survivors) surviving_types.insert(c->type.display_rank());
    for (const auto& c : loose) {
        if (c.added > best.added) continue;
        const int key = c.type.display_rank();
        if (c.type == best.type) continue;
        if (surviving_types.count(key)) {
            if (!(is_small_type(c.type) && is_small_type(best.type)))
                out.notes.push_back("tie: " + c.type.name() + " (+" + std::to_string(c.added) + ") also fits");
        } else if (auto it = rejected.find(key); it != rejected.end()) {
            out.notes.push_back("rejected " + it->second);
            rejected.erase(it);
        }
    }
    return out;
}

DivisorClass cluster_class(const Catalog& catalog, const Cluster& cl, const std::vector<int>& mult)
{
    DivisorClass d;
    for (std::size_t v = 0; v < cl.curves.size(); ++v) d += Rational(mult[v]) * catalog[cl.curves[v]].cls;
    return d;
}

std::string join(const std::vector<std::string>& xs, const std::string& sep = ", ")
{
    std::string s;
    for (const auto& x : xs) {
        if (!s.empty()) s += sep;
        s += x;
    }
    return s;
}

} // namespace

FibrationReport analyse_fibration(const FibrationInput& inp)
{
    const Catalog& catalog = *inp.catalog;
    FibrationReport rep;
    rep.divisor = inp.fiber_divisor;
    rep.fiber_class = validate_fiber_divisor(inp);
    const DivisorClass& f = rep.fiber_class;
    rep.checks.push_back({"fibre class", true, "F² = 0, p_a(F) = 1, support connected"});

    std::vector<int> f_pair(catalog.size());
    for (std::size_t k = 0; k < catalog.size(); ++k) f_pair[k] = int_pairing(catalog[k].cls, f);
    auto sd = find_sections(f, catalog);
    rep.sections = std::move(sd.sections);
    rep.multisections = std::move(sd.multisections);

    bool all_specials_vertical = true;
    for (std::size_t k = 0; k < catalog.size(); ++k)
        if (is_special(catalog[k].kind) && f_pair[k] != 0) all_specials_vertical = false;
    rep.mode = all_specials_vertical ? FibrationMode::InfiniteMW : FibrationMode::FiniteMW;
    const bool infinite = rep.mode == FibrationMode::InfiniteMW;

    std::set<std::string> support;
    for (const auto& [name, m] : inp.fiber_divisor) support.insert(name);

    const auto clusters = orthogonal_fibers(f, catalog);
    bool classes_match = true;
    bool compositions_ok = true;
    bool completions_ok = true;
    bool small_without_special = true;
    std::vector<std::string> class_failures;
    std::vector<std::string> composition_failures;
    int support_clusters = 0;
    bool support_is_fibre = false;

    for (const auto& cl : clusters) {
        FiberReport fr;
        for (auto k : cl.curves) fr.curves.push_back(catalog[k].name);
        fr.kinds = cl.graph.kinds;
        fr.recognition = describe(cl.recognition);
        const int nspecial = static_cast<int>(
            std::count(fr.kinds.begin(), fr.kinds.end(), VertexKind::Special));
        const bool has_support = std::any_of(fr.curves.begin(), fr.curves.end(),
                                             [&](const std::string& n) { return support.count(n) > 0; });
        fr.contains_support = has_support;
        if (has_support) ++support_clusters;

        auto resolve_small = [&](const std::string& how) {
            fr.small = true;
            if (infinite && nspecial > 0) {
                fr.type = KodairaType::I(2);
                fr.small = false;
                fr.notes.push_back(how + " resolved to I2: the configuration I10 + III with all special "
                                         "curves in fibres is excluded");
            }
            if (!infinite && nspecial > 0) small_without_special = false;
        };

        if (const auto* e = std::get_if<ExactFiber>(&cl.recognition)) {
            fr.type = e->type;
            fr.multiplicities = e->multiplicities;
            if (cluster_class(catalog, cl, e->multiplicities) != f) {
                classes_match = false;
                class_failures.push_back(e->type.name() + " {" + join(fr.curves) + "}");
            }
            if (!special_count_consistent(e->type, fr.kinds, e->multiplicities)) {
                compositions_ok = false;
                composition_failures.push_back(e->type.name() + " {" + join(fr.curves) + "}");
            }
            if (has_support) support_is_fibre = cluster_class(catalog, cl, e->multiplicities) == f;
        } else if (const auto* a = std::get_if<AmbiguousI2orIII>(&cl.recognition)) {
            fr.multiplicities = a->multiplicities;
            if (cluster_class(catalog, cl, a->multiplicities) != f) {
                classes_match = false;
                class_failures.push_back("I2/III {" + join(fr.curves) + "}");
            }
            if (has_support) support_is_fibre = cluster_class(catalog, cl, a->multiplicities) == f;
            resolve_small("I2/III");
        } else if (std::holds_alternative<PartialFiber>(cl.recognition)) {
            auto choice = choose_completion(cl, catalog, f_pair);
            fr.notes = std::move(choice.notes);
            if (!choice.chosen) {
                completions_ok = false;
            } else {
                const Completion& c = *choice.chosen;
                fr.multiplicities = c.multiplicities;
                fr.added_components = c.added;
                if (is_small_type(c.type)) {
                    fr.recognition = "partial -> I2/III (+" + std::to_string(c.added) + ")";
                    resolve_small("completion I2/III");
                } else {
                    fr.type = c.type;
                    fr.recognition = "partial -> " + c.type.name() + " (+" + std::to_string(c.added) + ")";
                    fr.notes.insert(fr.notes.begin(), "completed with " + std::to_string(c.added) +
                                                          " ordinary component(s) outside the catalog");
                }
            }
        }
        rep.fibers.push_back(std::move(fr));
    }

    // bookkeeping
    for (const auto& fr : rep.fibers) {
        if (!fr.type) {
            if (fr.small) ++rep.visible_small;
            continue;
        }
        if (infinite || !fr.type->is_small()) rep.counted_fibers.push_back(*fr.type);
        else ++rep.visible_small;
    }
    rep.counted_fibers = canonical(rep.counted_fibers);
    for (auto t : rep.counted_fibers) {
        rep.sum_m_minus_1 += t.components() - 1;
        rep.euler_used += t.euler();
    }
    rep.euler_residual = 24 - rep.euler_used;
    if (infinite) {
        rep.slack = 0;
        rep.mw_rank = 14 - rep.sum_m_minus_1;
    } else {
        rep.mw_rank = 0;
        rep.slack = 14 - rep.sum_m_minus_1;
        rep.mw_order = static_cast<int>(rep.sections.size());
    }

    auto add = [&](std::string name, bool ok, std::string detail) {
        rep.checks.push_back({std::move(name), ok, std::move(detail)});
    };
    add("support is one fibre", support_clusters == 1 && support_is_fibre,
        support_clusters == 1 ? (support_is_fibre ? "the input divisor is a complete fibre"
                                                   : "the support cluster's null vector does not give F")
                              : "support spread over " + std::to_string(support_clusters) + " clusters");
    add("complete clusters are fibres", classes_match,
        classes_match ? "every complete cluster sums to F" : "class differs from F: " + join(class_failures));
    add("special composition", compositions_ok,
        compositions_ok ? "every complete fibre matches an allowed special/ordinary profile"
                        : "profile mismatch: " + join(composition_failures));
    add("completions", completions_ok,
        completions_ok ? "every partial cluster has an admissible completion"
                       : "some partial cluster has no admissible completion");
    add("Picard budget", rep.sum_m_minus_1 <= 14,
        "sum(m-1) = " + std::to_string(rep.sum_m_minus_1) + " <= 14");
    add("Shioda-Tate", rep.mw_rank >= 0 && rep.slack >= 0 && rep.mw_rank + rep.sum_m_minus_1 + rep.slack == 14,
        std::to_string(rep.mw_rank) + " + " + std::to_string(rep.sum_m_minus_1) + " + " +
            std::to_string(rep.slack) + " = 14");
    add("Noether", rep.euler_used <= 24 && rep.euler_used + rep.euler_residual == 24,
        std::to_string(rep.euler_used) + " + " + std::to_string(rep.euler_residual) + " = 24");

    if (infinite) {
        int with_special = 0;
        int specials_seen = 0;
        for (const auto& fr : rep.fibers) {
            int s = static_cast<int>(std::count(fr.kinds.begin(), fr.kinds.end(), VertexKind::Special));
            if (s > 0) ++with_special;
            specials_seen += s;
        }
        const bool two = with_special == 2 && specials_seen == 6 && rep.fibers.size() == 2;
        add("two reducible fibres", two,
            std::to_string(rep.fibers.size()) + " clusters, " + std::to_string(with_special) +
                " holding the " + std::to_string(specials_seen) + " special curves");
        add("positive rank", rep.mw_rank > 0, "rank " + std::to_string(rep.mw_rank));
    } else {
        add("small fibres fit the slack", rep.visible_small <= rep.slack,
            std::to_string(rep.visible_small) + " visible I2/III clusters <= slack " + std::to_string(rep.slack));
        add("Euler room for small fibres", rep.euler_residual >= 2 * rep.slack,
            "residual " + std::to_string(rep.euler_residual) + " >= 2 * " + std::to_string(rep.slack));
        add("no special curve in I2/III", small_without_special,
            small_without_special ? "small clusters are ordinary" : "a small cluster contains a special curve");
        std::vector<std::string> nonspecial;
        for (const auto& s : rep.sections)
            if (!is_special(catalog.at(s).kind)) nonspecial.push_back(s);
        add("sections are special", nonspecial.empty(),
            nonspecial.empty() ? "all " + std::to_string(rep.sections.size()) + " sections are special curves"
                               : "ordinary sections: " + join(nonspecial));
    }
    return rep;
}

} // namespace k3fib
