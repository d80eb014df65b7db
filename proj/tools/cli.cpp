#include "cli.hpp"

#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "k3fib/constructions.hpp"
#include "render.hpp"

namespace k3fib::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

DivisorTerms read_divisor_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open divisor file '" + path + "'");
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw UsageError("divisor file '" + path + "' is not valid JSON: " + e.what());
    }
    if (!j.is_object()) throw UsageError("divisor file must hold a JSON object of name -> multiplicity");
    DivisorTerms terms;
    for (const auto& [name, value] : j.items()) {
        if (!value.is_number_integer())
            throw DivisorInputError(name, "multiplicity must be a positive integer, got " + value.dump());
        auto m = value.get<std::int64_t>();
        if (m < 1 || m > std::numeric_limits<int>::max())
            throw DivisorInputError(name, "multiplicity must be a positive integer, got " + value.dump());
        terms.emplace_back(name, static_cast<int>(m));
    }
    return terms;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Elliptic fibrations on the double plane branched over six lines", "k3fib"};
    app.require_subcommand(1);

    auto* catalog_cmd = app.add_subcommand("catalog", "List the (-2)-curves of the catalog");
    bool conics = false;
    catalog_cmd->add_flag("--conics", conics, "Include the conics through five nodes");
    std::string catalog_format = "json";
    catalog_cmd->add_option("--format", catalog_format, "Output format")
        ->check(CLI::IsMember({"json", "csv", "text"}))
        ->capture_default_str();

    auto* verify_cmd = app.add_subcommand("verify", "Analyse the fibration defined by a fibre divisor");
    std::string case_id;
    std::string divisor_file;
    auto* case_opt = verify_cmd->add_option("--case", case_id, "Built-in construction, e.g. 2.1");
    auto* file_opt = verify_cmd->add_option("--divisor", divisor_file, "JSON file: curve name -> multiplicity");
    case_opt->excludes(file_opt);
    std::string verify_format = "text";
    verify_cmd->add_option("--format", verify_format, "Output format")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();

    auto* enum_cmd = app.add_subcommand("enumerate", "Enumerate singular-fibre configurations");
    std::string mode;
    enum_cmd->add_option("--mode", mode, "infinite, finite or generic")
        ->required()
        ->check(CLI::IsMember({"infinite", "finite", "generic"}));
    bool with_audit = false;
    enum_cmd->add_flag("--audit", with_audit, "Include the per-rule kill lists");
    std::string enum_format = "text";
    enum_cmd->add_option("--format", enum_format, "Output format")
        ->check(CLI::IsMember({"json", "csv", "text"}))
        ->capture_default_str();

    auto* tables_cmd = app.add_subcommand("tables", "Compare computed classification values with the reference lists");
    std::string tables_format = "text";
    tables_cmd->add_option("--format", tables_format, "Output format")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();

    auto* audit_cmd = app.add_subcommand("audit", "Which rule removed which candidate, for both modes");
    std::string audit_format = "text";
    audit_cmd->add_option("--format", audit_format, "Output format")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        const CLI::App* sub = app.get_subcommands().empty() ? &app : app.get_subcommands().front();
        err << sub->help();
        return kUsage;
    }

    try {
        if (catalog_cmd->parsed()) {
            const Catalog& cat = conics ? catalog_with_conics() : catalog_lines_only();
            if (catalog_format == "json")
                out << canonical_dump(to_json(cat));
            else if (catalog_format == "csv")
                catalog_csv(out, cat);
            else
                catalog_text(out, cat);
            return kOk;
        }

        if (verify_cmd->parsed()) {
            if (case_id.empty() && divisor_file.empty()) {
                err << "error: verify needs --case or --divisor\n" << verify_cmd->help();
                return kUsage;
            }
            FibrationReport rep;
            try {
                if (!case_id.empty()) {
                    try {
                        construction(case_id);
                    } catch (const std::out_of_range& e) {
                        throw UsageError(e.what());
                    }
                    rep = verify_construction(case_id);
                } else {
                    rep = analyse_fibration(FibrationInput{read_divisor_file(divisor_file)});
                }
            } catch (const FibrationError& e) {
                if (verify_format == "json") {
                    out << canonical_dump({{"error", e.what()}, {"passed", false}});
                    err << e.what() << "\n";
                } else {
                    out << e.what() << "\n";
                }
                return kMismatch;
            }
            if (verify_format == "json")
                out << canonical_dump(to_json(rep));
            else
                report_text(out, rep);
            return rep.ok() ? kOk : kMismatch;
        }

        if (enum_cmd->parsed()) {
            Enumeration e;
            if (mode == "infinite")
                e = enumerate_infinite();
            else if (mode == "finite")
                e = enumerate_finite();
            else
                e = Enumeration{"generic", enumerate_generic(), {}, 0, 0};
            if (enum_format == "json") {
                out << canonical_dump(to_json(e, with_audit && mode != "generic"));
            } else if (enum_format == "csv") {
                rows_csv(out, e.rows);
            } else {
                rows_text(out, mode, e.rows);
                if (with_audit && mode != "generic") {
                    out << "\n";
                    audit_text(out, e);
                }
            }
            return kOk;
        }

        if (tables_cmd->parsed()) {
            if (tables_format == "json") {
                json j = tables_json();
                out << canonical_dump(j);
                return j["all_match"].get<bool>() ? kOk : kMismatch;
            }
            return tables_text(out) ? kOk : kMismatch;
        }

        if (audit_cmd->parsed()) {
            RuleAudit a = rule_audit();
            if (audit_format == "json") {
                out << canonical_dump({{"infinite", to_json(a.infinite, true)}, {"finite", to_json(a.finite, true)}});
            } else {
                audit_text(out, a.infinite);
                out << "\n";
                audit_text(out, a.finite);
            }
            return kOk;
        }
    } catch (const DivisorInputError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const UnknownNameError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}

} // namespace k3fib::cli
