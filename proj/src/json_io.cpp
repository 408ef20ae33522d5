// Copyright 2026 The gptkit authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gptk/json_io.hpp"

#include <istream>
#include <ostream>
#include <sstream>

#include "gptk/errors.hpp"
#include "gptk/linalg.hpp"

namespace gptk {

Json vec_to_json(const Vec &v) {
    Json j = Json::array();
    for (const Rat &x : v) {
        j.push_back(rat_str(x));
    }
    return j;
}

Vec vec_from_json(const Json &j) {
    if (!j.is_array()) {
        throw ParseError("expected an array of scalars");
    }
    Vec v;
    for (const Json &x : j) {
        if (x.is_string()) {
            v.push_back(rat_parse(x.get<std::string>()));
        } else if (x.is_number_integer()) {
            v.push_back(Rat(x.get<long>()));
        } else {
            throw ParseError("scalars must be \"p/q\" strings or integers");
        }
    }
    return v;
}

Json mat_to_json(const Mat &m) {
    Json j = Json::array();
    for (const Vec &row : m) {
        j.push_back(vec_to_json(row));
    }
    return j;
}

Mat mat_from_json(const Json &j) {
    if (!j.is_array()) {
        throw ParseError("expected an array of rows");
    }
    Mat m;
    for (const Json &row : j) {
        m.push_back(vec_from_json(row));
    }
    return m;
}

namespace {

std::vector<std::string> split_csv_line(const std::string &line) {
    std::vector<std::string> fields;
    std::string field;
    for (char c : line) {
        if (c == ',') {
            fields.push_back(field);
            field.clear();
        } else if (c != '\r') {
            field.push_back(c);
        }
    }
    fields.push_back(field);
    for (std::string &f : fields) {
        std::size_t a = f.find_first_not_of(" \t");
        std::size_t b = f.find_last_not_of(" \t");
        f = (a == std::string::npos) ? "" : f.substr(a, b - a + 1);
    }
    return fields;
}

} // namespace

RawTable read_raw_table_csv(std::istream &in) {
    RawTable table;
    std::string line;
    int line_no = 0;
    std::size_t width = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) {
            continue;
        }
        std::vector<std::string> fields = split_csv_line(line);
        if (table.col_labels.empty() && table.entries.empty()) {
            if (fields.size() < 2) {
                throw ParseError("line 1: header needs at least one effect label");
            }
            table.col_labels.assign(fields.begin() + 1, fields.end());
            width = table.col_labels.size();
            continue;
        }
        if (fields.size() != width + 1) {
            throw ParseError("line " + std::to_string(line_no) + ": expected " +
                             std::to_string(width + 1) + " fields, got " +
                             std::to_string(fields.size()));
        }
        table.row_labels.push_back(fields[0]);
        Vec row;
        for (std::size_t c = 1; c < fields.size(); ++c) {
            try {
                row.push_back(rat_parse(fields[c]));
            } catch (const ParseError &err) {
                throw ParseError("line " + std::to_string(line_no) + ", column " +
                                 std::to_string(c + 1) + ": " + err.what());
            }
        }
        table.entries.push_back(std::move(row));
    }
    if (table.entries.empty()) {
        throw EmptyTable();
    }
    return table;
}

void write_raw_table_csv(std::ostream &out, const RawTable &table) {
    out << "";
    for (const std::string &label : table.col_labels) {
        out << "," << label;
    }
    out << "\n";
    for (std::size_t r = 0; r < table.entries.size(); ++r) {
        out << table.row_labels[r];
        for (const Rat &p : table.entries[r]) {
            out << "," << rat_str(p);
        }
        out << "\n";
    }
}

Json coordrep_to_json(const CoordRep &rep) {
    Json j;
    j["dim"] = rep.dim;
    j["effects"] = Json::array();
    for (const Vec &e : rep.effect_coords) {
        j["effects"].push_back(vec_to_json(e));
    }
    j["states"] = Json::array();
    for (const Vec &s : rep.state_coords) {
        j["states"].push_back(vec_to_json(s));
    }
    j["basis_effect_rows"] = rep.basis_effect_rows;
    j["basis_state_cols"] = rep.basis_state_cols;
    j["conjugate_basis"] = mat_to_json(rep.conjugate_basis);
    return j;
}

Json system_to_json(const GptSystem &sys) {
    Json j;
    j["name"] = sys.name;
    j["dim"] = sys.dim;
    j["states"] = Json::array();
    for (const Vec &s : sys.state_body.vertices) {
        j["states"].push_back(vec_to_json(s));
    }
    j["effects"] = Json::array();
    for (const Vec &e : sys.effect_body.vertices) {
        j["effects"].push_back(vec_to_json(e));
    }
    j["unit"] = vec_to_json(sys.unit);
    if (sys.numeric) {
        j["numeric"] = true;
        j["tolerance"] = sys.tolerance;
    }
    return j;
}

GptSystem system_from_json(const Json &j) {
    if (!j.contains("dim") || !j.contains("states") || !j.contains("effects") ||
        !j.contains("unit")) {
        throw ParseError("system schema needs dim, states, effects, unit");
    }
    if (j.value("numeric", false)) {
        GptSystem sys;
        sys.name = j.value("name", "numeric");
        sys.dim = j["dim"].get<int>();
        sys.unit = vec_from_json(j["unit"]);
        sys.zero = zero_vec(sys.dim);
        sys.numeric = true;
        sys.tolerance = j.value("tolerance", 1e-9);
        sys.state_body.dim = sys.dim;
        sys.state_cone.dim = sys.dim;
        sys.effect_body.dim = sys.dim;
        return sys;
    }
    std::vector<Vec> states;
    for (const Json &s : j["states"]) {
        states.push_back(vec_from_json(s));
    }
    std::vector<Vec> effects;
    for (const Json &e : j["effects"]) {
        effects.push_back(vec_from_json(e));
    }
    Vec unit = vec_from_json(j["unit"]);
    int dim = j["dim"].get<int>();
    for (const Vec &s : states) {
        if (static_cast<int>(s.size()) != dim) {
            throw ParseError("state dimension disagrees with dim");
        }
    }
    GptSystem sys = make_system(j.value("name", "system"), std::move(states),
                                std::move(effects), std::move(unit));
    return sys;
}

std::string rule_name(TensorRule rule) {
    switch (rule) {
        case TensorRule::Min:
            return "min";
        case TensorRule::Max:
            return "max";
        case TensorRule::MaxGeneralized:
            return "genmax";
        case TensorRule::Explicit:
            return "explicit";
    }
    return "min";
}

TensorRule rule_from_name(const std::string &name) {
    if (name == "min") {
        return TensorRule::Min;
    }
    if (name == "max") {
        return TensorRule::Max;
    }
    if (name == "genmax") {
        return TensorRule::MaxGeneralized;
    }
    if (name == "explicit") {
        return TensorRule::Explicit;
    }
    throw ParseError("unknown tensor rule '" + name + "'");
}

Json joint_system_to_json(const JointSystem &sys) {
    Json j;
    j["left"] = sys.left.name;
    j["right"] = sys.right.name;
    j["rule"] = rule_name(sys.rule);
    j["left_system"] = system_to_json(sys.left);
    j["right_system"] = system_to_json(sys.right);
    j["unit"] = vec_to_json(sys.unit);
    if (sys.state_cone.generators) {
        Json gens = Json::array();
        for (const Vec &g : *sys.state_cone.generators) {
            gens.push_back(vec_to_json(g));
        }
        j["state_generators"] = std::move(gens);
    }
    if (sys.state_cone.halfspaces) {
        Json rows = Json::array();
        for (const Vec &h : *sys.state_cone.halfspaces) {
            rows.push_back(vec_to_json(h));
        }
        j["state_halfspaces"] = std::move(rows);
    }
    Json effs = Json::array();
    for (const Vec &e : sys.effect_generators) {
        effs.push_back(vec_to_json(e));
    }
    j["effect_generators"] = std::move(effs);
    return j;
}

JointSystem joint_system_from_json(const Json &j) {
    JointSystem sys;
    sys.left = system_from_json(j.at("left_system"));
    sys.right = system_from_json(j.at("right_system"));
    sys.rule = rule_from_name(j.at("rule").get<std::string>());
    sys.unit = vec_from_json(j.at("unit"));
    sys.state_cone.dim = sys.left.dim * sys.right.dim;
    if (j.contains("state_generators")) {
        std::vector<Vec> gens;
        for (const Json &g : j["state_generators"]) {
            gens.push_back(vec_from_json(g));
        }
        sys.state_cone.generators = std::move(gens);
    }
    if (j.contains("state_halfspaces")) {
        std::vector<Vec> rows;
        for (const Json &h : j["state_halfspaces"]) {
            rows.push_back(vec_from_json(h));
        }
        sys.state_cone.halfspaces = std::move(rows);
    }
    if (!sys.state_cone.generators && !sys.state_cone.halfspaces) {
        throw ParseError("joint system needs a state cone representation");
    }
    for (const Json &e : j.at("effect_generators")) {
        sys.effect_generators.push_back(vec_from_json(e));
    }
    return sys;
}

Json joint_state_to_json(const JointSystem &sys, const Vec &state) {
    Json j;
    j["left"] = sys.left.name;
    j["right"] = sys.right.name;
    j["rule"] = rule_name(sys.rule);
    j["coords"] = mat_to_json(as_matrix(state, sys.left.dim, sys.right.dim));
    return j;
}

Vec joint_state_from_json(const Json &j, const JointSystem &sys) {
    Mat coords = mat_from_json(j.at("coords"));
    if (static_cast<int>(coords.size()) != sys.left.dim) {
        throw ParseError("joint state has wrong row count");
    }
    for (const Vec &row : coords) {
        if (static_cast<int>(row.size()) != sys.right.dim) {
            throw ParseError("joint state has wrong column count");
        }
    }
    return flatten(coords);
}

Json measurements_to_json(const ChshMeasurements &m) {
    auto pair = [](const BinaryMeasurement &b) {
        Json j = Json::array();
        j.push_back(vec_to_json(b.outcome0));
        j.push_back(vec_to_json(b.outcome1));
        return j;
    };
    Json j;
    j["A0"] = pair(m.a0);
    j["A1"] = pair(m.a1);
    j["B0"] = pair(m.b0);
    j["B1"] = pair(m.b1);
    return j;
}

ChshMeasurements measurements_from_json(const Json &j) {
    auto pair = [](const Json &jj) {
        if (!jj.is_array() || jj.size() != 2) {
            throw ParseError("a binary measurement is a pair of effects");
        }
        BinaryMeasurement m;
        m.outcome0 = vec_from_json(jj[0]);
        m.outcome1 = vec_from_json(jj[1]);
        return m;
    };
    ChshMeasurements m;
    m.a0 = pair(j.at("A0"));
    m.a1 = pair(j.at("A1"));
    m.b0 = pair(j.at("B0"));
    m.b1 = pair(j.at("B1"));
    return m;
}

void write_behavior_csv(std::ostream &out, const Behavior &b) {
    out << "a,b,x,y,p\n";
    for (int a = 0; a < 2; ++a) {
        for (int bb = 0; bb < 2; ++bb) {
            for (int x = 0; x < 2; ++x) {
                for (int y = 0; y < 2; ++y) {
                    out << a << "," << bb << "," << x << "," << y << ","
                        << rat_str(b.at(a, bb, x, y)) << "\n";
                }
            }
        }
    }
}

Behavior read_behavior_csv(std::istream &in) {
    Behavior b;
    std::array<bool, 16> seen{};
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) {
            continue;
        }
        std::vector<std::string> fields = split_csv_line(line);
        if (line_no == 1 && !fields.empty() && fields[0] == "a") {
            continue;
        }
        if (fields.size() != 5) {
            throw ParseError("line " + std::to_string(line_no) + ": expected a,b,x,y,p");
        }
        int idx[4];
        for (int k = 0; k < 4; ++k) {
            if (fields[k] != "0" && fields[k] != "1") {
                throw ParseError("line " + std::to_string(line_no) + ": indices must be 0/1");
            }
            idx[k] = fields[k] == "1" ? 1 : 0;
        }
        b.at(idx[0], idx[1], idx[2], idx[3]) = rat_parse(fields[4]);
        seen[idx[0] * 8 + idx[1] * 4 + idx[2] * 2 + idx[3]] = true;
    }
    for (bool s : seen) {
        if (!s) {
            throw ParseError("behavior table is missing entries");
        }
    }
    return b;
}

} // namespace gptk
