#include "k3fib/classifier.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "k3fib/lattice.hpp"
#include "k3fib/reference_data.hpp"

namespace k3fib {

std::string_view to_string(RuleStage s)
{
    return s == RuleStage::Arithmetic ? "arithmetic" : "geometric";
}

int Candidate::total_specials() const
{
    return std::accumulate(specials.begin(), specials.end(), 0);
}

int Candidate::sum_m_minus_1() const
{
    int s = 0;
    for (auto t : fibers) s += t.components() - 1;
    return s;
}

int Candidate::euler() const
{
    int s = 0;
    for (auto t : fibers) s += t.euler();
    return s;
}

std::string Candidate::name() const
{
    if (fibers.empty()) return "(no large fibres)";
    std::string s;
    for (std::size_t k = 0; k < fibers.size(); ++k) {
        if (!s.empty()) s += " + ";
        s += fibers[k].name();
        const auto f = fibers[k].family();
        if (f == KodairaFamily::III || (f == KodairaFamily::I && fibers[k].index() == 2))
            s += "(" + std::to_string(specials[k]) + " special)";
    }
    return s;
}

int ContactData::total() const
{
    int s = 0;
    for (int p : parts) s += p;
    for (int p : double_parts) s += 2 * p;
    return s;
}

ContactData contact_data(KodairaType t, int special_mask)
{
    const AffineDiagram d = affine_diagram(t);
    if (special_mask < 0 || special_mask >= static_cast<int>(d.special_masks.size()))
        throw std::invalid_argument(t.name() + " has no colouring number " + std::to_string(special_mask));
    const auto& mask = d.special_masks[special_mask];
    ContactData c;
    for (int v = 0; v < d.size(); ++v) {
        if (mask[v]) continue;
        // an ordinary curve meets the branch curve twice in total
        int inside = 0;
        for (int u = 0; u < d.size(); ++u)
            if (u != v && mask[u]) inside += d.gram[v][u];
        const int free = 2 - inside;
        if (free < 0) throw std::logic_error("colouring of " + t.name() + " overloads an ordinary component");
        if (free == 1) c.parts.push_back(d.multiplicities[v]);
        if (free == 2) c.double_parts.push_back(d.multiplicities[v]);
    }
    std::sort(c.parts.begin(), c.parts.end());
    return c;
}

int fibre_branch_degree()
{
    // F.B on an I0* fibre: B.l = -2 for a special curve, +2 for an ordinary one
    const AffineDiagram d = affine_diagram(KodairaType::IStar(0));
    int s = 0;
    for (int v = 0; v < d.size(); ++v) s += d.multiplicities[v] * (d.special_masks[0][v] ? -2 : 2);
    return s;
}

std::vector<std::vector<int>> realisable_degrees(const ContactData& c, int free_specials)
{
    std::set<std::vector<int>> out;
    if (free_specials <= 0) return {};
    // expand each doubly meeting component either as one contact of weight 2m
    // or as two of weight m
    const std::size_t nd = c.double_parts.size();
    for (unsigned split = 0; split < (1u << nd); ++split) {
        std::vector<int> parts = c.parts;
        for (std::size_t k = 0; k < nd; ++k) {
            if (split & (1u << k)) {
                parts.push_back(c.double_parts[k]);
                parts.push_back(c.double_parts[k]);
            } else {
                parts.push_back(2 * c.double_parts[k]);
            }
        }
        std::vector<int> bin_of(parts.size(), 0);
        while (true) {
            std::vector<int> bins(free_specials, 0);
            for (std::size_t k = 0; k < parts.size(); ++k) bins[bin_of[k]] += parts[k];
            if (std::all_of(bins.begin(), bins.end(), [](int b) { return b > 0; })) {
                std::sort(bins.rbegin(), bins.rend());
                out.insert(bins);
            }
            std::size_t k = 0;
            while (k < bin_of.size() && ++bin_of[k] == free_specials) bin_of[k++] = 0;
            if (k == bin_of.size()) break;
        }
    }
    return {out.begin(), out.end()};
}

namespace {

bool is_i2k(KodairaType t)
{
    return t.family() == KodairaFamily::I && t.index() >= 4;
}

int free_specials_of(const Candidate& c)
{
    return kLineCount - c.total_specials();
}

// Degree vectors with a unit entry realisable by every fibre of the candidate.
std::vector<std::vector<int>> common_degrees(const Candidate& c)
{
    const int f = free_specials_of(c);
    std::optional<std::set<std::vector<int>>> common;
    for (auto t : c.fibers) {
        auto ds = realisable_degrees(contact_data(t), f);
        std::set<std::vector<int>> here(ds.begin(), ds.end());
        if (!common) {
            common = here;
        } else {
            std::set<std::vector<int>> both;
            std::set_intersection(common->begin(), common->end(), here.begin(), here.end(),
                                  std::inserter(both, both.begin()));
            common = both;
        }
    }
    std::vector<std::vector<int>> out;
    if (!common) return out;
    for (const auto& d : *common)
        if (std::find(d.begin(), d.end(), 1) != d.end()) out.push_back(d);
    return out;
}

std::string degrees_text(const std::vector<int>& d)
{
    std::string s = "(";
    for (std::size_t k = 0; k < d.size(); ++k) s += (k ? "," : "") + std::to_string(d[k]);
    return s + ")";
}

} // namespace

std::vector<ConstraintRule> finite_rules()
{
    return {
        {"A-ST-BUDGET", RuleStage::Arithmetic, "Shioda-Tate with Picard number 16 and finite Mordell-Weil group",
         [](const Candidate& c) {
             int s = c.sum_m_minus_1();
             return RuleVerdict{s <= 14, "sum(m-1) = " + std::to_string(s) + (s <= 14 ? " <= 14" : " > 14")};
         }},
        {"A-NOETHER", RuleStage::Arithmetic, "Noether formula: Euler numbers of the singular fibres sum to 24",
         [](const Candidate& c) {
             int e = c.euler();
             return RuleVerdict{e <= 24, "Euler sum " + std::to_string(e)};
         }},
        {"A-FREE-SPECIAL", RuleStage::Arithmetic, "finite case: some special curve is not a fibre component",
         [](const Candidate& c) {
             int s = c.total_specials();
             return RuleVerdict{s <= 5, std::to_string(s) + " special components"};
         }},
        {"EXCL-PURE-SMALL", RuleStage::Arithmetic,
         "case without large fibres: the I2/III fibres need twice the slack in Euler number",
         [](const Candidate& c) {
             int slack = 14 - c.sum_m_minus_1();
             int residual = 24 - c.euler();
             return RuleVerdict{residual >= 2 * slack, "residual " + std::to_string(residual) + " vs 2*" +
                                                           std::to_string(slack)};
         }},
        {"G-NO-I2K", RuleStage::Geometric,
         "finite case: the only fibres of type I_n are I1 and I2, since an I_2k (k > 1) with a special "
         "component would give an ordinary curve of branch degree 3",
         [](const Candidate& c) {
             bool bad = std::any_of(c.fibers.begin(), c.fibers.end(), is_i2k);
             return RuleVerdict{!bad, bad ? "contains I_2k with k > 1" : ""};
         }},
        {"G-NO-IV-STAR", RuleStage::Geometric,
         "IV* case: its four special components leave the other two special curves disjoint from the "
         "fibre, so every special curve would be a fibre component",
         [](const Candidate& c) {
             bool bad = std::any_of(c.fibers.begin(), c.fibers.end(),
                                    [](KodairaType t) { return t == KodairaType::IVStar(); });
             return RuleVerdict{!bad, bad ? "IV* has no contact with special curves outside it" : ""};
         }},
        {"G-FREE-SPECIALS-BOUND", RuleStage::Geometric,
         "I0* case argument: the free special curves meet each fibre with total degree F.B = 4",
         [](const Candidate& c) {
             const int f = free_specials_of(c);
             const int fb = fibre_branch_degree();
             if (f > fb)
                 return RuleVerdict{false, std::to_string(f) + " free special curves but F.B = " + std::to_string(fb)};
             for (auto t : c.fibers)
                 if (contact_data(t).total() != fb)
                     return RuleVerdict{false, t.name() + " meets the free special curves " +
                                                   std::to_string(contact_data(t).total()) + " times"};
             return RuleVerdict{true, ""};
         }},
        {"G-SECTION-CONTACT", RuleStage::Geometric,
         "sections are special curves when a fibre is I_2k*, III* or II*; every fibre must realise the "
         "same degrees F.l on the free special curves, one of them the zero section",
         [](const Candidate& c) {
             auto ds = common_degrees(c);
             return RuleVerdict{!ds.empty(), ds.empty() ? "no common degree vector with a section"
                                                         : "degrees " + degrees_text(ds.front())};
         }},
    };
}

std::vector<ConstraintRule> infinite_rules()
{
    return {
        {"A-ALL-SPECIALS", RuleStage::Arithmetic, "infinite case: all six special curves are fibre components",
         [](const Candidate& c) {
             int s = c.total_specials();
             return RuleVerdict{s == 6, std::to_string(s) + " special components"};
         }},
        {"A-SIMPLE-SPECIAL", RuleStage::Arithmetic,
         "a section is then ordinary and meets each reducible fibre in a simple special component",
         [](const Candidate& c) {
             for (std::size_t k = 0; k < c.fibers.size(); ++k) {
                 const auto info = type_info(c.fibers[k]);
                 bool ok = std::any_of(info.profiles.begin(), info.profiles.end(), [&](const SpecialProfile& p) {
                     return p.specials == c.specials[k] && p.simple_specials > 0;
                 });
                 if (!ok) return RuleVerdict{false, c.fibers[k].name() + " has no simple special component"};
             }
             return RuleVerdict{true, ""};
         }},
        {"A-RANK-POSITIVE", RuleStage::Arithmetic, "Shioda-Tate with Picard number 16 and positive rank",
         [](const Candidate& c) {
             int r = 14 - c.sum_m_minus_1();
             return RuleVerdict{r > 0, "rank " + std::to_string(r)};
         }},
        {"A-NOETHER", RuleStage::Arithmetic, "Noether formula: Euler numbers of the singular fibres sum to 24",
         [](const Candidate& c) {
             int e = c.euler();
             return RuleVerdict{e <= 24, "Euler sum " + std::to_string(e)};
         }},
        {"EXCL-I10-III", RuleStage::Geometric,
         "infinite case analysis: the configuration I10 III aII bI1 is shown not to exist",
         [](const Candidate& c) {
             bool bad = c.fibers.size() == 2 && c.fibers[0] == KodairaType::I(10) &&
                        c.fibers[1] == KodairaType::III();
             return RuleVerdict{!bad, bad ? "I10 + III excluded" : ""};
         }},
    };
}

namespace {

Enumeration run(const std::string& mode, const std::vector<Candidate>& universe,
                const std::vector<ConstraintRule>& rules,
                const std::function<ConfigurationRow(const Candidate&)>& make_row)
{
    Enumeration e;
    e.mode = mode;
    e.universe = static_cast<int>(universe.size());
    for (const auto& r : rules) e.rules.push_back({r.id, r.stage, r.citation, {}, 0});
    for (const auto& cand : universe) {
        bool alive = true;
        bool arithmetic_ok = true;
        for (std::size_t k = 0; k < rules.size() && alive; ++k) {
            auto v = rules[k].check(cand);
            if (v.pass) {
                ++e.rules[k].passed;
                continue;
            }
            alive = false;
            if (rules[k].stage == RuleStage::Arithmetic) arithmetic_ok = false;
            e.rules[k].killed.push_back(cand.name() + (v.detail.empty() ? "" : ": " + v.detail));
        }
        if (arithmetic_ok) ++e.arithmetic_passes;
        if (alive) e.rows.push_back(make_row(cand));
    }
    return e;
}

bool id_less(const std::string& a, const std::string& b)
{
    auto key = [](const std::string& s) {
        auto dot = s.find('.');
        return std::make_pair(std::stoi(s.substr(0, dot)), std::stoi(s.substr(dot + 1)));
    };
    if (a.empty() || b.empty()) return !a.empty() && b.empty();
    return key(a) < key(b);
}

void sort_rows(std::vector<ConfigurationRow>& rows)
{
    std::stable_sort(rows.begin(), rows.end(),
                     [](const ConfigurationRow& a, const ConfigurationRow& b) { return id_less(a.class_id, b.class_id); });
}

std::vector<KodairaType> large_types_on_x()
{
    std::vector<KodairaType> out;
    for (auto t : reducible_types_on_x())
        if (!t.is_small()) out.push_back(t);
    return out;
}

void multisets(const std::vector<KodairaType>& types, std::size_t from, std::vector<KodairaType>& cur, int specials,
               std::vector<Candidate>& out)
{
    Candidate c;
    c.fibers = cur;
    for (auto t : cur) c.specials.push_back(type_info(t).profiles.front().specials);
    out.push_back(c);
    for (std::size_t k = from; k < types.size(); ++k) {
        int s = type_info(types[k]).profiles.front().specials;
        if (specials + s > kLineCount) continue;
        cur.push_back(types[k]);
        multisets(types, k, cur, specials + s, out);
        cur.pop_back();
    }
}

} // namespace

Enumeration enumerate_finite()
{
    std::vector<Candidate> universe;
    std::vector<KodairaType> cur;
    multisets(large_types_on_x(), 0, cur, 0, universe);

    return [&] {
        Enumeration e = run("finite", universe, finite_rules(), [](const Candidate& c) {
            ConfigurationRow row;
            row.large_fibers = canonical(c.fibers);
            row.specials_in_fibers = c.total_specials();
            row.mw_rank = 0;
            row.slack = 14 - c.sum_m_minus_1();
            row.euler_residual = 24 - c.euler();
            auto ds = common_degrees(c);
            row.free_special_degrees = ds.front();
            if (ds.size() == 1) {
                // all sections are special, so they are the free curves of degree 1
                int order = static_cast<int>(std::count(ds.front().begin(), ds.front().end(), 1));
                row.mw_order_derived = order;
                row.mw_group_label = mw_label_for_order(order);
            } else {
                row.note = "several degree vectors fit";
            }
            for (const auto& ref : finite_class_rows())
                if (canonical(ref.fibers) == row.large_fibers) row.class_id = ref.id;
            return row;
        });
        sort_rows(e.rows);
        return e;
    }();
}

Enumeration enumerate_infinite()
{
    std::vector<Candidate> universe;
    const auto types = reducible_types_on_x();
    auto options = [](KodairaType t) {
        std::vector<int> s;
        for (const auto& p : type_info(t).profiles) s.push_back(p.specials);
        return s;
    };
    for (std::size_t a = 0; a < types.size(); ++a)
        for (std::size_t b = a; b < types.size(); ++b)
            for (int sa : options(types[a]))
                for (int sb : options(types[b])) {
                    if (a == b && sb < sa) continue;
                    universe.push_back(Candidate{{types[a], types[b]}, {sa, sb}});
                }

    Enumeration e = run("infinite", universe, infinite_rules(), [](const Candidate& c) {
        ConfigurationRow row;
        row.large_fibers = canonical(c.fibers);
        row.specials_in_fibers = c.total_specials();
        row.mw_rank = 14 - c.sum_m_minus_1();
        row.mw_group_label = "rank " + std::to_string(row.mw_rank);
        row.slack = 0;
        row.euler_residual = 24 - c.euler();
        for (const auto& ref : infinite_class_rows())
            if (canonical(ref.fibers) == row.large_fibers) row.class_id = ref.id;
        return row;
    });
    sort_rows(e.rows);
    return e;
}

std::vector<ConfigurationRow> enumerate_generic()
{
    std::vector<ConfigurationRow> rows;
    for (auto row : enumerate_finite().rows) {
        // rank 0 leaves no room for III, II or IV fibres on a general X
        row.generic_i2 = row.slack;
        row.generic_i1 = row.euler_residual - 2 * row.slack;
        if (*row.generic_i1 < 0) row.note = "negative i1: inconsistent configuration";
        rows.push_back(std::move(row));
    }
    for (auto row : enumerate_infinite().rows) {
        row.a_bound = row.mw_rank;
        row.note = "a <= " + std::to_string(row.mw_rank) + "; a = 0 expected generically (conjectural, not checked)";
        rows.push_back(std::move(row));
    }
    return rows;
}

RuleAudit rule_audit()
{
    return RuleAudit{enumerate_infinite(), enumerate_finite()};
}

} // namespace k3fib
