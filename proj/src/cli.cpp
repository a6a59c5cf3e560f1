// Copyright 2026 The fusionkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "fusionkit/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <filesystem>
#include <optional>

#include "fusionkit/fixtures.hpp"
#include "fusionkit/fusion_vg.hpp"
#include "fusionkit/io.hpp"
#include "fusionkit/orbifold.hpp"
#include "fusionkit/unitary_space.hpp"

namespace fusionkit::cli {

namespace {

using io::Json;

enum class Format { text, csv, json };

struct Options {
    std::string datum;
    std::string action;
    std::string chars;
    std::string intertwiners;
    std::string fixture;
    std::string format = "text";
    std::optional<double> tolerance;
};

struct Inputs {
    std::shared_ptr<const ModularDatum> datum;
    std::shared_ptr<const ModuleAction> action;
    bool action_given = false;
    std::optional<TableSet> tables;
    bool tables_given = false;
    std::vector<IntertwinerActionData> intertwiners;
};

// ---------------------------------------------------------------------------
// Loading

template <typename F>
auto parse_file(const std::string &path, F &&parse) {
    Json j = io::read_json_file(path);
    try {
        return parse(j);
    } catch (const StructuralError &e) {
        throw StructuralError(path + ": " + e.what());
    }
}

Inputs load_inputs(const Options &opt) {
    namespace fs = std::filesystem;
    std::string datum_path = opt.datum;
    std::string action_path = opt.action;
    std::string chars_path = opt.chars;
    std::string inter_path = opt.intertwiners;
    if (!opt.fixture.empty()) {
        fs::path dir = fs::path(fixtures::fixture_directory()) / opt.fixture;
        if (!fs::is_directory(dir)) {
            throw StructuralError("unknown fixture '" + opt.fixture + "' (looked in " + dir.string() + ")");
        }
        auto fill = [&](std::string &path, const char *file) {
            if (path.empty() && fs::exists(dir / file)) {
                path = (dir / file).string();
            }
        };
        fill(datum_path, "datum.json");
        fill(action_path, "action.json");
        fill(chars_path, "chars.json");
        fill(inter_path, "intertwiners.json");
    }
    if (datum_path.empty()) {
        throw StructuralError("no modular datum given; pass --datum or --fixture");
    }

    Inputs in;
    ModularDatum md = parse_file(datum_path, io::datum_from_json);
    if (opt.tolerance) {
        md = md.with_tolerance(*opt.tolerance);
    }
    in.datum = std::make_shared<const ModularDatum>(std::move(md));
    if (!action_path.empty()) {
        in.action = std::make_shared<const ModuleAction>(
            parse_file(action_path, [&](const Json &j) { return io::action_from_json(j, in.datum); }));
        in.action_given = true;
    } else {
        in.action = std::make_shared<const ModuleAction>(ModuleAction::trivial(make_cyclic(1), in.datum));
    }
    if (!chars_path.empty()) {
        in.tables = parse_file(chars_path, [&](const Json &j) { return io::tables_from_json(j, in.action->group()); });
        in.tables_given = true;
    } else {
        in.tables.emplace(in.action->group());
    }
    if (!inter_path.empty()) {
        in.intertwiners =
            parse_file(inter_path, [&](const Json &j) { return io::intertwiners_from_json(j, *in.action); });
    }
    return in;
}

// ---------------------------------------------------------------------------
// Formatting

std::string fmt_number(double v, int digits = io::kReportDigits) {
    return format_number(io::round_significant(v, digits), digits);
}

std::string fmt_complex(Complex z) {
    double re = io::round_significant(z.real(), io::kReportDigits);
    double im = io::round_significant(z.imag(), io::kReportDigits);
    if (im == 0.0) {
        return fmt_number(re);
    }
    std::string out = re == 0.0 ? "" : fmt_number(re);
    if (im > 0 && !out.empty()) {
        out += "+";
    }
    return out + fmt_number(im) + "i";
}

std::string fmt_deviation(double d) {
    return fmt_number(d, 3);
}

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

std::string csv_field(const std::string &s) {
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (char c : s) {
        out += c == '"' ? std::string("\"\"") : std::string(1, c);
    }
    return out + "\"";
}

void print_table(std::ostream &out, const Table &t, Format format) {
    if (format == Format::csv) {
        auto line = [&](const std::vector<std::string> &cells) {
            for (std::size_t i = 0; i < cells.size(); i++) {
                out << (i ? "," : "") << csv_field(cells[i]);
            }
            out << "\n";
        };
        line(t.header);
        for (const auto &r : t.rows) {
            line(r);
        }
        return;
    }
    std::vector<std::size_t> width(t.header.size(), 0);
    auto measure = [&](const std::vector<std::string> &cells) {
        for (std::size_t i = 0; i < cells.size(); i++) {
            width[i] = std::max(width[i], cells[i].size());
        }
    };
    measure(t.header);
    for (const auto &r : t.rows) {
        measure(r);
    }
    auto line = [&](const std::vector<std::string> &cells) {
        std::string s;
        for (std::size_t i = 0; i < cells.size(); i++) {
            s += cells[i];
            if (i + 1 < cells.size()) {
                s += std::string(width[i] - cells[i].size() + 2, ' ');
            }
        }
        out << s << "\n";
    };
    line(t.header);
    for (const auto &r : t.rows) {
        line(r);
    }
}

void print_section(std::ostream &out, const std::string &title, const Table &t, Format format) {
    out << (format == Format::csv ? "# " : "") << title << "\n";
    print_table(out, t, format);
    out << "\n";
}

std::vector<Check> flatten(const std::vector<ValidationReport> &reports) {
    std::vector<Check> out;
    for (const auto &r : reports) {
        for (const auto &c : r.checks) {
            Check named = c;
            named.name = r.subject + "." + c.name;
            out.push_back(std::move(named));
        }
    }
    return out;
}

bool any_failed(const std::vector<Check> &checks) {
    return std::any_of(checks.begin(), checks.end(), [](const Check &c) { return c.status == CheckStatus::fail; });
}

Table checks_table(const std::vector<Check> &checks) {
    Table t{{"check", "status", "deviation", "detail"}, {}};
    for (const auto &c : checks) {
        t.rows.push_back({c.name, to_string(c.status), fmt_deviation(c.deviation), c.detail});
    }
    return t;
}

Json checks_json(const std::vector<Check> &checks) {
    Json list = Json::array();
    for (const auto &c : checks) {
        Json j;
        j["name"] = c.name;
        j["status"] = to_string(c.status);
        j["deviation"] = io::round_significant(c.deviation, 3);
        j["detail"] = c.detail;
        list.push_back(std::move(j));
    }
    return list;
}

const char *verdict(bool failed) {
    return failed ? "fail" : "pass";
}

void print_json(std::ostream &out, const Json &j) {
    out << j.dump(2) << "\n";
}

// ---------------------------------------------------------------------------
// Commands

std::optional<FusionTensor> try_fusion(const ModularDatum &md) {
    try {
        return verlinde_fusion(md);
    } catch (const MathError &) {
        return std::nullopt;
    }
}

int cmd_validate(const Inputs &in, Format format, std::ostream &out, std::ostream &err) {
    const auto &md = *in.datum;
    std::vector<ValidationReport> reports{validate(md)};
    auto fusion = try_fusion(md);
    if (fusion) {
        reports.push_back(check_fusion_invariants(md, *fusion));
        reports.push_back(fusion_s_identity_check(md, *fusion));
    }
    if (in.action_given) {
        reports.push_back(validate_action(*in.action, fusion ? &*fusion : nullptr));
        reports.push_back(burnside_check(*in.action));
        reports.push_back(twisted_stabilizer_checker(*in.action).to_report());
    }
    if (in.tables_given) {
        for (const auto &[sub, table] : in.tables->supplied()) {
            auto r = validate_table(table, md.tolerance());
            std::string elems;
            for (std::size_t g : sub.elements()) {
                elems += (elems.empty() ? "" : ",") + in.action->group().name(g);
            }
            r.subject = "characters{" + elems + "}";
            reports.push_back(std::move(r));
        }
    }
    auto checks = flatten(reports);
    bool failed = any_failed(checks);
    if (format == Format::json) {
        Json j;
        j["command"] = "validate";
        j["status"] = verdict(failed);
        j["checks"] = checks_json(checks);
        print_json(out, j);
    } else {
        if (format == Format::text) {
            out << "validate: " << verdict(failed) << "\n";
        }
        print_table(out, checks_table(checks), format);
    }
    if (failed) {
        for (const auto &c : checks) {
            if (c.status == CheckStatus::fail) {
                err << "failed: " << c.name << (c.detail.empty() ? "" : ": " + c.detail) << "\n";
            }
        }
        return kExitMathFailure;
    }
    return kExitPass;
}

int cmd_fusion(const Inputs &in, Format format, std::ostream &out) {
    const auto &md = *in.datum;
    FusionTensor fusion = verlinde_fusion(md);
    const std::size_t n = md.size();
    if (format == Format::json) {
        Json j;
        j["command"] = "fusion";
        j["labels"] = md.labels();
        Json entries = Json::array();
        for (std::size_t a = 0; a < n; a++) {
            for (std::size_t b = 0; b < n; b++) {
                for (std::size_t c = 0; c < n; c++) {
                    Json e;
                    e["i"] = md.label(a);
                    e["j"] = md.label(b);
                    e["k"] = md.label(c);
                    e["N"] = fusion.at(a, b, c);
                    entries.push_back(std::move(e));
                }
            }
        }
        j["entries"] = std::move(entries);
        print_json(out, j);
        return kExitPass;
    }
    Table t{{"i", "j", "k", "N"}, {}};
    for (std::size_t a = 0; a < n; a++) {
        for (std::size_t b = 0; b < n; b++) {
            for (std::size_t c = 0; c < n; c++) {
                t.rows.push_back({md.label(a), md.label(b), md.label(c), std::to_string(fusion.at(a, b, c))});
            }
        }
    }
    print_table(out, t, format);
    return kExitPass;
}

std::string subgroup_names(const FiniteGroup &group, const Subgroup &sub) {
    std::string out;
    for (std::size_t g : sub.elements()) {
        out += (out.empty() ? "" : " ") + group.name(g);
    }
    return out;
}

std::vector<ValidationReport> catalog_reports(const TypeOneCatalog &cat) {
    return {
        module_s_consistency_check(cat),
        proportionality_check(cat),
        vacuum_scaling_check(cat),
        qdim_relations_check(cat),
        annihilator_dimension_report(cat).to_report(),
    };
}

Json catalog_inputs_json(const TypeOneCatalog &cat) {
    std::vector<std::pair<Subgroup, CharacterTable>> tables;
    for (const auto &orb : cat.orbits()) {
        bool seen = std::any_of(tables.begin(), tables.end(), [&](const auto &p) { return p.first == orb.stabilizer; });
        if (!seen) {
            tables.emplace_back(orb.stabilizer, orb.characters);
        }
    }
    Json j;
    j["datum"] = io::datum_to_json(cat.datum());
    j["action"] = io::action_to_json(cat.action());
    j["chars"] = io::tables_to_json(tables, cat.group());
    return j;
}

int cmd_catalog(const Inputs &in, Format format, std::ostream &out, std::ostream &err) {
    TypeOneCatalog cat = build_catalog(in.action, *in.tables);
    const auto &md = cat.datum();
    const auto &G = cat.group();
    auto checks = flatten(catalog_reports(cat));
    bool failed = any_failed(checks);
    ComplexMatrix s = extended_s_block(cat);

    if (format == Format::json) {
        Json j;
        j["command"] = "catalog";
        j["status"] = verdict(failed);
        j["group_order"] = G.order();
        Json entries = Json::array();
        for (const auto &e : cat.entries()) {
            const auto &orb = cat.orbits()[e.orbit];
            Json row;
            row["name"] = e.name;
            row["orbit_rep"] = md.label(orb.representative);
            Json members = Json::array();
            for (std::size_t m : orb.members) {
                members.push_back(md.label(m));
            }
            row["orbit"] = std::move(members);
            row["character"] = orb.characters.character(e.label.character).name;
            Json stab = Json::array();
            for (std::size_t g : orb.stabilizer.elements()) {
                stab.push_back(G.name(g));
            }
            row["stabilizer"] = std::move(stab);
            row["stabilizer_order"] = orb.stabilizer.order();
            row["dim"] = e.dim;
            row["qdim"] = io::round_significant(e.qdim, io::kReportDigits);
            entries.push_back(std::move(row));
        }
        j["entries"] = std::move(entries);
        Json block = Json::array();
        for (std::size_t a = 0; a < cat.size(); a++) {
            Json row = Json::array();
            for (std::size_t b = 0; b < cat.size(); b++) {
                row.push_back(io::complex_to_json(s(a, b)));
            }
            block.push_back(std::move(row));
        }
        j["extended_s"] = std::move(block);
        j["checks"] = checks_json(checks);
        j["inputs"] = catalog_inputs_json(cat);
        print_json(out, j);
    } else {
        if (format == Format::text) {
            out << "catalog: " << cat.size() << " type-one entries, group order " << G.order() << ", "
                << verdict(failed) << "\n\n";
        }
        Table entries{{"name", "orbit_rep", "orbit", "character", "stabilizer", "dim", "qdim"}, {}};
        for (const auto &e : cat.entries()) {
            const auto &orb = cat.orbits()[e.orbit];
            std::string members;
            for (std::size_t m : orb.members) {
                members += (members.empty() ? "" : " ") + md.label(m);
            }
            entries.rows.push_back(
                {e.name,
                 md.label(orb.representative),
                 members,
                 orb.characters.character(e.label.character).name,
                 subgroup_names(G, orb.stabilizer),
                 std::to_string(e.dim),
                 fmt_number(e.qdim)});
        }
        print_section(out, "entries", entries, format);
        Table block;
        block.header.push_back("S");
        for (const auto &e : cat.entries()) {
            block.header.push_back(e.name);
        }
        for (std::size_t a = 0; a < cat.size(); a++) {
            std::vector<std::string> row{cat.entries()[a].name};
            for (std::size_t b = 0; b < cat.size(); b++) {
                row.push_back(fmt_complex(s(a, b)));
            }
            block.rows.push_back(std::move(row));
        }
        print_section(out, "extended_s", block, format);
        print_section(out, "checks", checks_table(checks), format);
    }
    if (failed) {
        err << "catalog checks failed\n";
        return kExitMathFailure;
    }
    return kExitPass;
}

std::string fmt_sum(const ModularDatum &md, const FormalModuleSum &sum) {
    std::string out;
    for (const auto &[label, mult] : sum.terms()) {
        out += (out.empty() ? "" : " ") + md.label(label) + ":" + format_rational(mult);
    }
    return out.empty() ? "0" : out;
}

int cmd_orbifold_fusion(const Inputs &in, Format format, std::ostream &out, std::ostream &err) {
    TypeOneCatalog cat = build_catalog(in.action, *in.tables);
    const auto &md = cat.datum();
    const auto &act = cat.action();
    FusionTensor fusion = verlinde_fusion(md);

    std::vector<ValidationReport> reports{v_regular_check(act, fusion), aggregate_identity_check(cat, fusion)};

    Table fixed{{"M", "N", "sum_g M x N.g"}, {}};
    for (const auto &om : cat.orbits()) {
        for (const auto &on : cat.orbits()) {
            fixed.rows.push_back(
                {md.label(om.representative),
                 md.label(on.representative),
                 fmt_sum(md, fuse_over_fixed_points(act, fusion, om.representative, on.representative))});
        }
    }

    Table aggregates{{"a", "b", "F", "aggregate", "s_route"}, {}};
    for (const auto &ea : cat.entries()) {
        for (const auto &eb : cat.entries()) {
            for (const auto &of : cat.orbits()) {
                std::size_t f = of.representative;
                aggregates.rows.push_back(
                    {ea.name,
                     eb.name,
                     md.label(f),
                     format_rational(aggregate_fusion(cat, fusion, ea.label, eb.label, f)),
                     fmt_complex(aggregate_fusion_s_route(cat, ea.label, eb.label, f))});
            }
        }
    }

    ValidationReport proportional;
    proportional.subject = "proportional_distribution";
    for (const auto &om : cat.orbits()) {
        for (const auto &on : cat.orbits()) {
            for (const auto &of : cat.orbits()) {
                auto r = proportional_distribution_check(
                    cat, fusion, om.representative, on.representative, of.representative);
                for (auto c : r.checks) {
                    c.name = md.label(om.representative) + "," + md.label(on.representative) + "," +
                             md.label(of.representative);
                    proportional.checks.push_back(std::move(c));
                }
            }
        }
    }
    reports.push_back(std::move(proportional));

    Table resolved{{"a", "b", "F", "xi", "dim", "multiplicity"}, {}};
    std::vector<std::string> inconsistencies;
    for (std::size_t d = 0; d < in.intertwiners.size(); d++) {
        const auto &data = in.intertwiners[d];
        const auto &om = cat.orbit_of(data.triple[0]);
        const auto &on = cat.orbit_of(data.triple[1]);
        std::size_t f = data.triple[2];
        auto usable = [&](const CatalogOrbit &orb, std::size_t c) {
            return data.subgroup.is_subset_of(orb.stabilizer) || c == orb.characters.trivial_index();
        };
        for (std::size_t l = 0; l < om.characters.size(); l++) {
            for (std::size_t x = 0; x < on.characters.size(); x++) {
                if (!usable(om, l) || !usable(on, x)) {
                    continue;
                }
                TypeOneLabel a{om.representative, l};
                TypeOneLabel b{on.representative, x};
                auto result = resolve_fusion_unchecked(cat, fusion, *in.tables, a, b, f, data);
                auto report = resolved_sum_rule_check(result);
                std::string where = cat.entry(a).name + " x " + cat.entry(b).name + " -> " + md.label(f);
                for (const auto &ch : result.channels) {
                    resolved.rows.push_back(
                        {cat.entry(a).name,
                         cat.entry(b).name,
                         md.label(f),
                         ch.name,
                         std::to_string(ch.dim),
                         std::to_string(ch.multiplicity)});
                }
                if (const Check *bad = report.first_failure()) {
                    inconsistencies.push_back(
                        "inconsistent intertwiner data #" + std::to_string(d) + " for " + where + " (" + bad->name +
                        "): " + bad->detail);
                }
                report.subject = "resolved[" + std::to_string(d) + "] " + where;
                reports.push_back(std::move(report));
            }
        }
    }

    auto checks = flatten(reports);
    bool failed = any_failed(checks);
    if (format == Format::json) {
        auto rows_json = [](const Table &t) {
            Json list = Json::array();
            for (const auto &r : t.rows) {
                Json j;
                for (std::size_t i = 0; i < t.header.size(); i++) {
                    j[t.header[i]] = r[i];
                }
                list.push_back(std::move(j));
            }
            return list;
        };
        Json j;
        j["command"] = "orbifold-fusion";
        j["status"] = verdict(failed);
        j["fixed_point_fusion"] = rows_json(fixed);
        j["aggregates"] = rows_json(aggregates);
        j["resolved"] = rows_json(resolved);
        j["checks"] = checks_json(checks);
        print_json(out, j);
    } else {
        if (format == Format::text) {
            out << "orbifold-fusion: " << verdict(failed) << "\n\n";
        }
        print_section(out, "fixed_point_fusion", fixed, format);
        print_section(out, "aggregates", aggregates, format);
        if (!resolved.rows.empty()) {
            print_section(out, "resolved", resolved, format);
        }
        print_section(out, "checks", checks_table(checks), format);
    }
    for (const auto &msg : inconsistencies) {
        err << msg << "\n";
    }
    if (failed) {
        if (inconsistencies.empty()) {
            err << "orbifold fusion checks failed\n";
        }
        return kExitMathFailure;
    }
    return kExitPass;
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Modular data validation and fixed-point orbifold bookkeeping"};
    app.name("fusionkit");
    app.require_subcommand(1);
    Options opt;

    auto add_inputs = [&](CLI::App *sub) {
        sub->add_option("--datum", opt.datum, "modular datum JSON file");
        sub->add_option("--fixture", opt.fixture, "fixture name under the fixture directory");
        sub->add_option("--tolerance", opt.tolerance, "matrix comparison tolerance")->check(CLI::PositiveNumber);
        sub->add_option("--format", opt.format, "output format")->check(CLI::IsMember({"text", "csv", "json"}));
        sub->add_option("--action", opt.action, "group action JSON file");
        sub->add_option("--chars", opt.chars, "character table JSON file");
        sub->add_option("--intertwiners", opt.intertwiners, "intertwiner action JSON file");
    };
    CLI::App *validate_cmd = app.add_subcommand("validate", "check the datum, action and character tables");
    CLI::App *fusion_cmd = app.add_subcommand("fusion", "print the Verlinde fusion tensor");
    CLI::App *catalog_cmd = app.add_subcommand("catalog", "type-one catalog, extended S-matrix and identities");
    CLI::App *orbifold_cmd = app.add_subcommand("orbifold-fusion", "fusion over the fixed-point algebra");
    for (CLI::App *sub : {validate_cmd, fusion_cmd, catalog_cmd, orbifold_cmd}) {
        add_inputs(sub);
    }

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitPass : kExitInputError;
    }

    Format format = opt.format == "csv" ? Format::csv : opt.format == "json" ? Format::json : Format::text;
    try {
        Inputs in = load_inputs(opt);
        if (validate_cmd->parsed()) {
            return cmd_validate(in, format, out, err);
        }
        if (fusion_cmd->parsed()) {
            return cmd_fusion(in, format, out);
        }
        if (catalog_cmd->parsed()) {
            return cmd_catalog(in, format, out, err);
        }
        return cmd_orbifold_fusion(in, format, out, err);
    } catch (const StructuralError &e) {
        err << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const MathError &e) {
        err << "math failure: " << e.what() << "\n";
        return kExitMathFailure;
    }
}

}  // namespace fusionkit::cli
