#include "render.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "k3fib/reference_data.hpp"

namespace k3fib::cli {

namespace {

std::string kind_name(VertexKind k)
{
    switch (k) {
    case VertexKind::Special: return "special";
    case VertexKind::Ordinary: return "ordinary";
    case VertexKind::Unknown: return "unknown";
    }
    return "?";
}

std::vector<std::string> type_names(const std::vector<KodairaType>& ts)
{
    std::vector<std::string> out;
    for (auto t : ts) out.push_back(t.name());
    return out;
}

template <typename T>
json opt(const std::optional<T>& v)
{
    return v ? json(*v) : json(nullptr);
}

std::string join(const std::vector<std::string>& xs, const std::string& sep = ", ")
{
    std::string s;
    for (const auto& x : xs) s += (s.empty() ? "" : sep) + x;
    return s;
}

std::string pad(std::string s, std::size_t w)
{
    // width in code points, so UTF-8 labels line up
    std::size_t cp = 0;
    for (unsigned char c : s)
        if ((c & 0xC0) != 0x80) ++cp;
    if (cp < w) s.append(w - cp, ' ');
    return s;
}

std::string divisor_text(const DivisorTerms& terms)
{
    std::string s;
    for (const auto& [name, m] : terms) s += (s.empty() ? "" : " + ") + (m == 1 ? "" : std::to_string(m)) + name;
    return s;
}

} // namespace

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
}

std::string canonical_dump(const json& j)
{
    return j.dump(2) + "\n";
}

json to_json(const DivisorClass& d)
{
    json a = json::array();
    for (const auto& c : d.coords()) a.push_back(to_string(c));
    return a;
}

json to_json(const Catalog& catalog)
{
    json j;
    json basis = json::array();
    for (auto b : BasisIndex::all()) basis.push_back(b.name());
    j["basis"] = basis;
    const DivisorClass b = branch_class();
    json curves = json::array();
    for (const auto& c : catalog.curves()) {
        curves.push_back({{"name", c.name},
                          {"kind", std::string(to_string(c.kind))},
                          {"coords", to_json(c.cls)},
                          {"square", to_string(square(c.cls))},
                          {"b_pairing", to_string(pairing(c.cls, b))},
                          {"rule_derived", c.rule_derived}});
    }
    j["curves"] = curves;
    j["counts"] = {{"special", catalog.count(CurveKind::Special)},
                   {"exceptional", catalog.count(CurveKind::Exceptional)},
                   {"ordinary_line", catalog.count(CurveKind::OrdinaryLine)},
                   {"ordinary_conic", catalog.count(CurveKind::OrdinaryConic)},
                   {"total", catalog.size()}};
    return j;
}

void catalog_csv(std::ostream& os, const Catalog& catalog)
{
    os << "name,kind";
    for (auto b : BasisIndex::all()) os << "," << b.name();
    os << ",square,b_pairing,rule_derived\n";
    const DivisorClass b = branch_class();
    for (const auto& c : catalog.curves()) {
        os << csv_field(c.name) << "," << to_string(c.kind);
        for (const auto& x : c.cls.coords()) os << "," << to_string(x);
        os << "," << to_string(square(c.cls)) << "," << to_string(pairing(c.cls, b)) << ","
           << (c.rule_derived ? "true" : "false") << "\n";
    }
}

void catalog_text(std::ostream& os, const Catalog& catalog)
{
    const DivisorClass b = branch_class();
    os << pad("name", 22) << pad("kind", 16) << pad("C²", 5) << pad("C·B", 5) << "coordinates (l1; e12..e56)\n";
    for (const auto& c : catalog.curves()) {
        std::string coords;
        for (const auto& x : c.cls.coords()) coords += (coords.empty() ? "" : " ") + to_string(x);
        os << pad(c.name, 22) << pad(std::string(to_string(c.kind)), 16) << pad(to_string(square(c.cls)), 5)
           << pad(to_string(pairing(c.cls, b)), 5) << coords << (c.rule_derived ? "  [rule-derived]" : "") << "\n";
    }
    os << "\n" << catalog.count(CurveKind::Special) << " special, " << catalog.count(CurveKind::Exceptional)
       << " exceptional, " << catalog.count(CurveKind::OrdinaryLine) << " ordinary lines, "
       << catalog.count(CurveKind::OrdinaryConic) << " conics; " << catalog.size() << " curves\n";
}

json to_json(const FibrationReport& rep)
{
    json j;
    j["case"] = rep.case_id.empty() ? json(nullptr) : json(rep.case_id);
    json div = json::object();
    for (const auto& [name, m] : rep.divisor) div[name] = div.contains(name) ? div[name].get<int>() + m : m;
    j["divisor"] = div;
    j["fiber_class"] = to_json(rep.fiber_class);
    j["mode"] = rep.mode == FibrationMode::InfiniteMW ? "infinite" : "finite";
    json fibres = json::array();
    for (const auto& f : rep.fibers) {
        json kinds = json::array();
        for (auto k : f.kinds) kinds.push_back(kind_name(k));
        fibres.push_back({{"curves", f.curves},
                          {"kinds", kinds},
                          {"recognition", f.recognition},
                          {"type", f.type ? json(f.type->name()) : json(nullptr)},
                          {"small", f.small},
                          {"added_components", f.added_components},
                          {"multiplicities", f.multiplicities},
                          {"contains_support", f.contains_support},
                          {"notes", f.notes}});
    }
    j["fibres"] = fibres;
    j["sections"] = rep.sections;
    json ms = json::array();
    for (const auto& m : rep.multisections) ms.push_back({{"name", m.name}, {"degree", m.degree}});
    j["multisections"] = ms;
    j["counted_fibres"] = type_names(rep.counted_fibers);
    j["sum_m_minus_1"] = rep.sum_m_minus_1;
    j["mw_rank"] = rep.mw_rank;
    j["slack_iii_i2"] = rep.slack;
    j["euler_used"] = rep.euler_used;
    j["euler_residual"] = rep.euler_residual;
    j["visible_small"] = rep.visible_small;
    j["mw_order"] = opt(rep.mw_order);
    json checks = json::array();
    for (const auto& c : rep.checks) checks.push_back({{"name", c.name}, {"ok", c.ok}, {"detail", c.detail}});
    j["checks"] = checks;
    json claims = json::array();
    for (const auto& c : rep.claims)
        claims.push_back({{"name", c.name},
                          {"kind", c.kind == ClaimKind::Structure ? "structure" : "table"},
                          {"expected", c.expected},
                          {"actual", c.actual},
                          {"ok", c.ok}});
    j["claims"] = claims;
    j["passed"] = rep.ok();
    return j;
}

void report_text(std::ostream& os, const FibrationReport& rep)
{
    if (!rep.case_id.empty()) os << "case " << rep.case_id << "\n";
    os << "fibre divisor: " << divisor_text(rep.divisor) << "\n";
    os << "Mordell-Weil: " << (rep.mode == FibrationMode::InfiniteMW ? "infinite" : "finite") << "\n";
    os << "fibres:\n";
    for (const auto& f : rep.fibers) {
        std::string label = f.type ? f.type->name() : std::string("I2/III");
        os << "  " << pad(label, 8) << "{" << join(f.curves) << "}";
        if (f.recognition.rfind("partial", 0) == 0) os << "  " << f.recognition;
        if (f.contains_support) os << "  (input divisor)";
        os << "\n";
        for (const auto& n : f.notes) os << "      " << n << "\n";
    }
    os << "sections: " << (rep.sections.empty() ? std::string("none") : join(rep.sections)) << "\n";
    std::vector<std::string> special_multi;
    for (const auto& m : rep.multisections)
        if (m.name.size() == 2 && m.name[0] == 'l') special_multi.push_back(m.name + " (" + std::to_string(m.degree) + ")");
    os << "special multisections: " << (special_multi.empty() ? std::string("none") : join(special_multi)) << "; "
       << rep.multisections.size() << " multisections in the catalog\n";
    os << "large/reducible fibres: " << multiset_name(rep.counted_fibers) << "\n";
    os << "sum(m-1) = " << rep.sum_m_minus_1 << ", MW rank " << rep.mw_rank << ", iii+i2 = " << rep.slack
       << ", Euler used " << rep.euler_used << ", residual " << rep.euler_residual;
    if (rep.mw_order) os << ", |MW| = " << *rep.mw_order;
    os << "\n";
    os << "checks:\n";
    for (const auto& c : rep.checks) os << "  [" << (c.ok ? "ok" : "FAIL") << "] " << c.name << ": " << c.detail << "\n";
    if (!rep.claims.empty()) {
        os << "claims:\n";
        for (const auto& c : rep.claims)
            os << "  [" << (c.ok ? "PASS" : "FAIL") << "] " << pad(c.kind == ClaimKind::Structure ? "structure" : "table", 10)
               << c.name << ": expected " << c.expected << ", computed " << c.actual << "\n";
    }
    os << "result: " << (rep.ok() ? "PASS" : "FAIL") << "\n";
}

json to_json(const ConfigurationRow& row)
{
    return {{"class", row.class_id.empty() ? json(nullptr) : json(row.class_id)},
            {"large_fibres", type_names(row.large_fibers)},
            {"configuration", multiset_name(row.large_fibers)},
            {"specials_in_fibres", row.specials_in_fibers},
            {"mw_rank", row.mw_rank},
            {"mw_group", row.mw_group_label},
            {"mw_order", opt(row.mw_order_derived)},
            {"slack_iii_i2", row.slack},
            {"euler_residual", row.euler_residual},
            {"generic_i2", opt(row.generic_i2)},
            {"generic_i1", opt(row.generic_i1)},
            {"free_special_degrees", row.free_special_degrees},
            {"a_bound", opt(row.a_bound)},
            {"note", row.note}};
}

json to_json(const Enumeration& e, bool with_audit)
{
    json j;
    j["mode"] = e.mode;
    json rows = json::array();
    for (const auto& r : e.rows) rows.push_back(to_json(r));
    j["rows"] = rows;
    if (with_audit) {
        json rules = json::array();
        for (const auto& r : e.rules)
            rules.push_back({{"id", r.id},
                             {"stage", std::string(to_string(r.stage))},
                             {"citation", r.citation},
                             {"killed", r.killed},
                             {"passed", r.passed}});
        j["audit"] = {{"rules", rules},
                      {"universe", e.universe},
                      {"arithmetic_passes", e.arithmetic_passes},
                      {"overshoot", e.overshoot()}};
    }
    return j;
}

void rows_csv(std::ostream& os, const std::vector<ConfigurationRow>& rows)
{
    os << "class,configuration,specials_in_fibres,mw_rank,mw_group,slack_iii_i2,euler_residual,generic_i2,"
          "generic_i1,a_bound\n";
    auto o = [](const std::optional<int>& v) { return v ? std::to_string(*v) : std::string(); };
    for (const auto& r : rows)
        os << csv_field(r.class_id) << "," << csv_field(multiset_name(r.large_fibers)) << "," << r.specials_in_fibers
           << "," << r.mw_rank << "," << csv_field(r.mw_group_label) << "," << r.slack << "," << r.euler_residual
           << "," << o(r.generic_i2) << "," << o(r.generic_i1) << "," << o(r.a_bound) << "\n";
}

void rows_text(std::ostream& os, const std::string& mode, const std::vector<ConfigurationRow>& rows)
{
    if (mode == "infinite") {
        os << pad("Class", 7) << pad("Configuration of singular fibres", 36) << pad("", 10) << "MW-rank\n";
        for (const auto& r : rows)
            os << pad(r.class_id, 7) << pad(multiset_name(r.large_fibers) + " aII bI1", 36)
               << pad("2a+b=" + std::to_string(r.euler_residual), 10) << r.mw_rank << "\n";
        return;
    }
    if (mode == "finite") {
        os << pad("Class", 7) << pad("Configuration", 16) << pad("MW", 11) << pad("iii+i2", 8) << "3iii+2i2+2ii+i1\n";
        for (const auto& r : rows)
            os << pad(r.class_id, 7) << pad(multiset_name(r.large_fibers), 16) << pad(r.mw_group_label, 11)
               << pad(std::to_string(r.slack), 8) << r.euler_residual << "\n";
        return;
    }
    os << pad("Class", 7) << pad("Configuration", 16) << pad("MW", 11) << pad("i2", 5) << "i1\n";
    for (const auto& r : rows) {
        if (!r.generic_i2) continue;
        os << pad(r.class_id, 7) << pad(multiset_name(r.large_fibers), 16) << pad(r.mw_group_label, 11)
           << pad(std::to_string(*r.generic_i2), 5) << *r.generic_i1 << (r.note.empty() ? "" : "  " + r.note) << "\n";
    }
    os << "\n" << pad("Class", 7) << pad("Configuration", 16) << "bound on a (II fibres)\n";
    for (const auto& r : rows) {
        if (!r.a_bound) continue;
        os << pad(r.class_id, 7) << pad(multiset_name(r.large_fibers), 16) << "a <= " << *r.a_bound << "\n";
    }
    os << "note: a = 0 is expected for a general X in every positive-rank class; this is conjectural and not "
          "checked\n";
}

void audit_text(std::ostream& os, const Enumeration& e)
{
    os << "rule audit (" << e.mode << "): " << e.universe << " candidates, " << e.arithmetic_passes
       << " pass the arithmetic stage, " << e.rows.size() << " survive, overshoot " << e.overshoot() << "\n";
    for (const auto& r : e.rules) {
        os << "  " << pad(r.id, 24) << pad(std::string(to_string(r.stage)), 12) << "passed " << std::setw(3)
           << r.passed << ", killed " << r.killed.size() << "\n";
        os << "      " << r.citation << "\n";
        for (const auto& k : r.killed) os << "      x " << k << "\n";
    }
}

namespace {

struct Cell {
    std::string name;
    std::string reference;
    std::string computed;
    bool ok() const { return reference == computed; }
};

struct TableRow {
    std::string id;
    std::string configuration;
    std::vector<Cell> cells;
    std::string note;
    bool ok() const
    {
        return std::all_of(cells.begin(), cells.end(), [](const Cell& c) { return c.ok(); });
    }
};

struct Comparison {
    std::string title;
    std::vector<TableRow> rows;
    std::vector<std::string> extra;
};

const ConfigurationRow* match(const std::vector<ConfigurationRow>& rows, const std::vector<KodairaType>& fibres)
{
    for (const auto& r : rows)
        if (r.large_fibers == canonical(fibres)) return &r;
    return nullptr;
}

std::string readings_note(const std::vector<KodairaType>& fibres)
{
    auto a = reading_dual_graph(fibres);
    auto b = reading_table_column(fibres);
    return "dual-graph components give (" + std::to_string(a.slack) + ", " + std::to_string(a.residual) +
           "); the literal component column gives (" + std::to_string(b.slack) + ", " + std::to_string(b.residual) + ")";
}

std::vector<Comparison> compare_all()
{
    const auto inf = enumerate_infinite().rows;
    const auto fin = enumerate_finite().rows;
    const auto gen = enumerate_generic();
    std::vector<Comparison> out;
    const std::string none = "-";

    Comparison ci{"Positive Mordell-Weil rank", {}, {}};
    for (const auto& ref : infinite_class_rows()) {
        const auto* r = match(inf, ref.fibers);
        ci.rows.push_back({ref.id,
                           multiset_name(ref.fibers),
                           {{"present", "yes", r ? "yes" : "no"},
                            {"MW-rank", std::to_string(ref.mw_rank), r ? std::to_string(r->mw_rank) : none},
                            {"2a+b", std::to_string(ref.two_a_plus_b), r ? std::to_string(r->euler_residual) : none}},
                           ""});
    }
    for (const auto& r : inf)
        if (r.class_id.empty()) ci.extra.push_back(multiset_name(r.large_fibers));
    out.push_back(ci);

    Comparison cf{"Finite Mordell-Weil group", {}, {}};
    for (const auto& ref : finite_class_rows()) {
        const auto* r = match(fin, ref.fibers);
        TableRow row{ref.id,
                     multiset_name(ref.fibers),
                     {{"present", "yes", r ? "yes" : "no"},
                      {"MW", ref.mw_label, r ? r->mw_group_label : none},
                      {"iii+i2", std::to_string(ref.iii_plus_i2), r ? std::to_string(r->slack) : none},
                      {"3iii+2i2+2ii+i1", std::to_string(ref.weighted_small), r ? std::to_string(r->euler_residual) : none}},
                     ""};
        if (!row.ok()) row.note = readings_note(ref.fibers);
        cf.rows.push_back(row);
    }
    for (const auto& r : fin)
        if (r.class_id.empty()) cf.extra.push_back(multiset_name(r.large_fibers));
    out.push_back(cf);

    Comparison cg{"Finite Mordell-Weil group, general X", {}, {}};
    for (const auto& ref : generic_rows()) {
        const ConfigurationRow* r = nullptr;
        for (const auto& g : gen)
            if (g.class_id == ref.id && g.generic_i2) r = &g;
        TableRow row{ref.id,
                     r ? multiset_name(r->large_fibers) : none,
                     {{"i2", std::to_string(ref.i2), r ? std::to_string(*r->generic_i2) : none},
                      {"i1", std::to_string(ref.i1), r ? std::to_string(*r->generic_i1) : none}},
                     ""};
        if (!row.ok()) row.note = "i1 = (3iii+2i2+2ii+i1) - 2(iii+i2) with the computed residual";
        cg.rows.push_back(row);
    }
    out.push_back(cg);
    return out;
}

} // namespace

bool tables_text(std::ostream& os)
{
    bool all = true;
    for (const auto& c : compare_all()) {
        os << c.title << "\n";
        for (const auto& r : c.rows) {
            os << "  " << pad(r.id, 6) << pad(r.configuration, 14);
            for (const auto& cell : r.cells) {
                if (cell.name == "present") continue;
                os << pad(cell.name + " " + cell.reference + " | " + cell.computed, 26);
            }
            if (r.cells.front().name == "present" && !r.cells.front().ok()) os << pad("(not derived)", 16);
            os << (r.ok() ? "PASS" : "FAIL") << "\n";
            if (!r.note.empty()) os << "          " << r.note << "\n";
            all = all && r.ok();
        }
        for (const auto& e : c.extra) {
            os << "  extra computed row: " << e << "  FAIL\n";
            all = false;
        }
        os << "\n";
    }
    os << "cells show reference | computed\n";
    os << (all ? "all values match\n" : "some values differ\n");
    return all;
}

json tables_json()
{
    json j = json::array();
    bool all = true;
    for (const auto& c : compare_all()) {
        json rows = json::array();
        for (const auto& r : c.rows) {
            json cells = json::array();
            for (const auto& cell : r.cells)
                cells.push_back({{"name", cell.name}, {"reference", cell.reference}, {"computed", cell.computed}, {"ok", cell.ok()}});
            rows.push_back({{"class", r.id}, {"configuration", r.configuration}, {"cells", cells}, {"ok", r.ok()}, {"note", r.note}});
            all = all && r.ok();
        }
        all = all && c.extra.empty();
        j.push_back({{"title", c.title}, {"rows", rows}, {"extra_rows", c.extra}});
    }
    return {{"tables", j}, {"all_match", all}};
}

} // namespace k3fib::cli
