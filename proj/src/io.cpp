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

#include "fusionkit/io.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <initializer_list>
#include <map>
#include <set>

namespace fusionkit::io {

namespace {

[[noreturn]] void fail(const std::string &where, const std::string &what) {
    throw StructuralError(where + ": " + what);
}

void expect_object(const Json &j, const std::string &where, std::initializer_list<const char *> allowed) {
    if (!j.is_object()) {
        fail(where, "expected an object");
    }
    std::set<std::string> ok(allowed.begin(), allowed.end());
    for (const auto &[key, value] : j.items()) {
        if (ok.count(key) == 0) {
            fail(where, "unknown field '" + key + "'");
        }
    }
}

const Json &require(const Json &j, const char *key, const std::string &where) {
    auto it = j.find(key);
    if (it == j.end()) {
        fail(where, std::string("missing field '") + key + "'");
    }
    return *it;
}

const Json &require_array(const Json &j, const std::string &where) {
    if (!j.is_array()) {
        fail(where, "expected an array");
    }
    return j;
}

std::string as_string(const Json &j, const std::string &where) {
    if (!j.is_string()) {
        fail(where, "expected a string");
    }
    return j.get<std::string>();
}

double as_number(const Json &j, const std::string &where) {
    if (!j.is_number()) {
        fail(where, "expected a number");
    }
    return j.get<double>();
}

Complex as_complex(const Json &j, const std::string &where) {
    if (j.is_number()) {
        return {j.get<double>(), 0.0};
    }
    if (!j.is_array() || j.size() != 2) {
        fail(where, "expected a number or an [re, im] pair");
    }
    return {as_number(j[0], where + "[0]"), as_number(j[1], where + "[1]")};
}

std::vector<std::string> as_string_list(const Json &j, const std::string &where) {
    require_array(j, where);
    std::vector<std::string> out;
    for (std::size_t i = 0; i < j.size(); i++) {
        out.push_back(as_string(j[i], where + "[" + std::to_string(i) + "]"));
    }
    return out;
}

std::size_t label_index(const ModularDatum &md, const std::string &name, const std::string &where) {
    for (std::size_t i = 0; i < md.size(); i++) {
        if (md.label(i) == name) {
            return i;
        }
    }
    fail(where, "unknown label '" + name + "'");
}

std::size_t element_index(const FiniteGroup &group, const std::string &name, const std::string &where) {
    for (std::size_t i = 0; i < group.order(); i++) {
        if (group.name(i) == name) {
            return i;
        }
    }
    fail(where, "unknown group element '" + name + "'");
}

/// Subgroup from a list of element names, plus the listed order so values
/// given in that order can be placed by subgroup position.
std::pair<Subgroup, std::vector<std::size_t>> subgroup_from_json(
    const Json &j, const FiniteGroup &group, const std::string &where) {
    std::vector<std::size_t> listed;
    auto names = as_string_list(j, where);
    for (std::size_t i = 0; i < names.size(); i++) {
        listed.push_back(element_index(group, names[i], where + "[" + std::to_string(i) + "]"));
    }
    std::set<std::size_t> distinct(listed.begin(), listed.end());
    if (distinct.size() != listed.size()) {
        fail(where, "subgroup lists an element twice");
    }
    Subgroup sub;
    try {
        sub = Subgroup::of(group, listed);
    } catch (const StructuralError &e) {
        fail(where, e.what());
    }
    return {sub, listed};
}

ClassFunction values_by_position(
    const Json &j, const Subgroup &sub, const std::vector<std::size_t> &listed, const std::string &where) {
    require_array(j, where);
    if (j.size() != listed.size()) {
        fail(where, "expected " + std::to_string(listed.size()) + " values, one per subgroup element");
    }
    ClassFunction out(sub.order());
    for (std::size_t i = 0; i < listed.size(); i++) {
        out[sub.position_of(listed[i])] = as_complex(j[i], where + "[" + std::to_string(i) + "]");
    }
    return out;
}

std::vector<std::size_t> parse_cycles(const ModularDatum &md, const std::string &text, const std::string &where) {
    std::vector<std::size_t> image(md.size());
    for (std::size_t m = 0; m < md.size(); m++) {
        image[m] = m;
    }
    std::set<std::size_t> used;
    std::size_t pos = 0;
    auto skip_space = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) {
            pos++;
        }
    };
    skip_space();
    while (pos < text.size()) {
        if (text[pos] != '(') {
            fail(where, "expected '(' at offset " + std::to_string(pos));
        }
        pos++;
        std::vector<std::size_t> cycle;
        while (true) {
            skip_space();
            if (pos >= text.size()) {
                fail(where, "unterminated cycle");
            }
            if (text[pos] == ')') {
                pos++;
                break;
            }
            std::size_t start = pos;
            while (pos < text.size() && text[pos] != ')' && !std::isspace(static_cast<unsigned char>(text[pos]))) {
                pos++;
            }
            std::size_t m = label_index(md, text.substr(start, pos - start), where);
            if (!used.insert(m).second) {
                fail(where, "label '" + md.label(m) + "' appears in two cycles");
            }
            cycle.push_back(m);
        }
        for (std::size_t i = 0; i < cycle.size(); i++) {
            image[cycle[i]] = cycle[(i + 1) % cycle.size()];
        }
        skip_space();
    }
    return image;
}

Json number_json(double v, int digits) {
    return Json(digits > 0 ? round_significant(v, digits) : (v == 0.0 ? 0.0 : v));
}

}  // namespace

Json read_json_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw StructuralError(path + ": cannot open file");
    }
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::parse_error &e) {
        throw StructuralError(path + ": byte " + std::to_string(e.byte) + ": " + e.what());
    }
}

ModularDatum datum_from_json(const Json &j) {
    expect_object(j, "datum", {"labels", "vacuum", "s_matrix", "tolerance"});
    auto labels = as_string_list(require(j, "labels", "datum"), "datum.labels");
    auto vacuum = as_string(require(j, "vacuum", "datum"), "datum.vacuum");
    const Json &s = require_array(require(j, "s_matrix", "datum"), "datum.s_matrix");
    std::vector<std::vector<Complex>> rows;
    for (std::size_t i = 0; i < s.size(); i++) {
        std::string where = "datum.s_matrix[" + std::to_string(i) + "]";
        require_array(s[i], where);
        if (s[i].size() != labels.size()) {
            fail(where, "row has " + std::to_string(s[i].size()) + " entries, expected " + std::to_string(labels.size()));
        }
        std::vector<Complex> row;
        for (std::size_t k = 0; k < s[i].size(); k++) {
            row.push_back(as_complex(s[i][k], where + "[" + std::to_string(k) + "]"));
        }
        rows.push_back(std::move(row));
    }
    double tol = kDefaultTolerance;
    if (j.contains("tolerance")) {
        tol = as_number(j["tolerance"], "datum.tolerance");
    }
    try {
        return ModularDatum::create(std::move(labels), vacuum, rows, tol);
    } catch (const StructuralError &e) {
        fail("datum", e.what());
    }
}

FiniteGroup group_from_json(const Json &j) {
    expect_object(j, "group", {"cyclic", "elements", "table", "identity"});
    if (j.contains("cyclic")) {
        if (j.contains("elements") || j.contains("table") || j.contains("identity")) {
            fail("group", "give either 'cyclic' or an explicit table, not both");
        }
        const Json &n = j["cyclic"];
        if (!n.is_number_integer() || n.get<long long>() < 1) {
            fail("group.cyclic", "expected a positive integer");
        }
        return make_cyclic(n.get<std::size_t>());
    }
    auto names = as_string_list(require(j, "elements", "group"), "group.elements");
    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < names.size(); i++) {
        index.emplace(names[i], i);
    }
    auto lookup = [&](const std::string &name, const std::string &where) {
        auto it = index.find(name);
        if (it == index.end()) {
            fail(where, "unknown group element '" + name + "'");
        }
        return it->second;
    };
    const Json &t = require_array(require(j, "table", "group"), "group.table");
    if (t.size() != names.size()) {
        fail("group.table", "expected " + std::to_string(names.size()) + " rows");
    }
    std::vector<std::size_t> table;
    for (std::size_t a = 0; a < t.size(); a++) {
        auto row = as_string_list(t[a], "group.table[" + std::to_string(a) + "]");
        if (row.size() != names.size()) {
            fail("group.table[" + std::to_string(a) + "]", "expected " + std::to_string(names.size()) + " entries");
        }
        for (std::size_t b = 0; b < row.size(); b++) {
            table.push_back(lookup(row[b], "group.table[" + std::to_string(a) + "][" + std::to_string(b) + "]"));
        }
    }
    std::size_t identity = names.size();
    if (j.contains("identity")) {
        identity = lookup(as_string(j["identity"], "group.identity"), "group.identity");
    } else {
        for (std::size_t a = 0; a < names.size() && identity == names.size(); a++) {
            bool is_identity = true;
            for (std::size_t b = 0; b < names.size(); b++) {
                is_identity = is_identity && table[a * names.size() + b] == b;
            }
            if (is_identity) {
                identity = a;
            }
        }
        if (identity == names.size()) {
            fail("group", "no identity element in the table");
        }
    }
    try {
        return FiniteGroup(std::move(names), std::move(table), identity);
    } catch (const StructuralError &e) {
        fail("group", e.what());
    }
}

ModuleAction action_from_json(const Json &j, std::shared_ptr<const ModularDatum> datum) {
    expect_object(j, "action", {"group", "perm"});
    FiniteGroup group = group_from_json(require(j, "group", "action"));
    if (!j.contains("perm")) {
        return ModuleAction::trivial(std::move(group), std::move(datum));
    }
    std::map<std::size_t, std::vector<std::size_t>> given;
    {
        const Json &perm = j["perm"];
        if (!perm.is_object()) {
            fail("action.perm", "expected an object mapping elements to permutations");
        }
        for (const auto &[name, value] : perm.items()) {
            std::string where = "action.perm." + name;
            std::size_t g = element_index(group, name, where);
            if (value.is_string()) {
                given[g] = parse_cycles(*datum, value.get<std::string>(), where);
            } else {
                auto images = as_string_list(value, where);
                if (images.size() != datum->size()) {
                    fail(where, "expected " + std::to_string(datum->size()) + " images");
                }
                std::vector<std::size_t> p;
                for (std::size_t m = 0; m < images.size(); m++) {
                    p.push_back(label_index(*datum, images[m], where + "[" + std::to_string(m) + "]"));
                }
                given[g] = std::move(p);
            }
        }
    }
    try {
        return ModuleAction::from_generators(std::move(group), std::move(datum), given);
    } catch (const StructuralError &e) {
        fail("action", e.what());
    }
}

TableSet tables_from_json(const Json &j, const FiniteGroup &group) {
    expect_object(j, "chars", {"tables"});
    const Json &tables = require_array(require(j, "tables", "chars"), "chars.tables");
    TableSet out(group);
    for (std::size_t t = 0; t < tables.size(); t++) {
        std::string where = "chars.tables[" + std::to_string(t) + "]";
        expect_object(tables[t], where, {"subgroup", "characters", "projective"});
        auto [sub, listed] = subgroup_from_json(require(tables[t], "subgroup", where), group, where + ".subgroup");
        const Json &chars = require(tables[t], "characters", where);
        if (!chars.is_object()) {
            fail(where + ".characters", "expected an object mapping names to values");
        }
        std::vector<Character> list;
        for (const auto &[name, values] : chars.items()) {
            list.push_back(Character{name, values_by_position(values, sub, listed, where + ".characters." + name)});
        }
        bool projective = false;
        if (tables[t].contains("projective")) {
            if (!tables[t]["projective"].is_boolean()) {
                fail(where + ".projective", "expected true or false");
            }
            projective = tables[t]["projective"].get<bool>();
        }
        try {
            out.add(sub, CharacterTable(sub.as_group(group), std::move(list), projective));
        } catch (const StructuralError &e) {
            fail(where, e.what());
        }
    }
    return out;
}

std::vector<IntertwinerActionData> intertwiners_from_json(const Json &j, const ModuleAction &act) {
    expect_object(j, "intertwiners", {"intertwiners"});
    const Json &list = require_array(require(j, "intertwiners", "intertwiners"), "intertwiners.intertwiners");
    std::vector<IntertwinerActionData> out;
    for (std::size_t i = 0; i < list.size(); i++) {
        std::string where = "intertwiners[" + std::to_string(i) + "]";
        expect_object(list[i], where, {"triple", "subgroup", "character", "inducing_subgroup"});
        IntertwinerActionData d;
        auto triple = as_string_list(require(list[i], "triple", where), where + ".triple");
        if (triple.size() != 3) {
            fail(where + ".triple", "expected three labels");
        }
        for (std::size_t k = 0; k < 3; k++) {
            d.triple[k] = label_index(act.datum(), triple[k], where + ".triple");
        }
        auto [sub, listed] = subgroup_from_json(require(list[i], "subgroup", where), act.group(), where + ".subgroup");
        d.character = values_by_position(require(list[i], "character", where), sub, listed, where + ".character");
        d.subgroup = sub;
        if (list[i].contains("inducing_subgroup")) {
            d.inducing_subgroup =
                subgroup_from_json(list[i]["inducing_subgroup"], act.group(), where + ".inducing_subgroup").first;
        }
        out.push_back(std::move(d));
    }
    return out;
}

double round_significant(double value, int digits) {
    if (std::abs(value) < kReportZero || value == 0.0) {
        return 0.0;
    }
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*g", digits, value);
    double out = std::strtod(buf, nullptr);
    return out == 0.0 ? 0.0 : out;
}

Json complex_to_json(Complex value, int digits) {
    return Json::array({number_json(value.real(), digits), number_json(value.imag(), digits)});
}

Json datum_to_json(const ModularDatum &md, int digits) {
    Json j;
    j["labels"] = md.labels();
    j["vacuum"] = md.label(ModularDatum::vacuum());
    Json rows = Json::array();
    for (std::size_t i = 0; i < md.size(); i++) {
        Json row = Json::array();
        for (std::size_t k = 0; k < md.size(); k++) {
            row.push_back(complex_to_json(md.s(i, k), digits));
        }
        rows.push_back(std::move(row));
    }
    j["s_matrix"] = std::move(rows);
    j["tolerance"] = md.tolerance();
    return j;
}

Json group_to_json(const FiniteGroup &group) {
    Json j;
    if (group == make_cyclic(group.order())) {
        j["cyclic"] = group.order();
        return j;
    }
    j["elements"] = group.names();
    Json table = Json::array();
    for (std::size_t a = 0; a < group.order(); a++) {
        Json row = Json::array();
        for (std::size_t b = 0; b < group.order(); b++) {
            row.push_back(group.name(group.mul(a, b)));
        }
        table.push_back(std::move(row));
    }
    j["table"] = std::move(table);
    j["identity"] = group.name(group.identity());
    return j;
}

Json action_to_json(const ModuleAction &act) {
    Json j;
    j["group"] = group_to_json(act.group());
    Json perm = Json::object();
    for (std::size_t g = 0; g < act.group().order(); g++) {
        Json images = Json::array();
        for (std::size_t m = 0; m < act.label_count(); m++) {
            images.push_back(act.datum().label(act.apply(g, m)));
        }
        perm[act.group().name(g)] = std::move(images);
    }
    j["perm"] = std::move(perm);
    return j;
}

Json tables_to_json(const std::vector<std::pair<Subgroup, CharacterTable>> &tables, const FiniteGroup &parent, int digits) {
    Json list = Json::array();
    for (const auto &[sub, table] : tables) {
        Json t;
        Json names = Json::array();
        for (std::size_t g : sub.elements()) {
            names.push_back(parent.name(g));
        }
        t["subgroup"] = std::move(names);
        Json chars = Json::object();
        for (const auto &c : table.characters()) {
            Json values = Json::array();
            for (Complex v : c.values) {
                values.push_back(complex_to_json(v, digits));
            }
            chars[c.name] = std::move(values);
        }
        t["characters"] = std::move(chars);
        if (table.projective()) {
            t["projective"] = true;
        }
        list.push_back(std::move(t));
    }
    Json j;
    j["tables"] = std::move(list);
    return j;
}

}  // namespace fusionkit::io
