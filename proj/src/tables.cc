// Copyright 2026 The magicdistill Authors
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

#include "magicdistill/tables.h"

#include <openssl/sha.h>

#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace magicdistill {

namespace {

using nlohmann::json;

Rational rational_field(const json& j, const char* what) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (j.is_string()) return parse_rational(j.get<std::string>());
    throw std::invalid_argument(std::string("tables: bad rational in ") + what);
}

int int_field(const json& obj, const char* key) {
    if (!obj.contains(key)) return 0;
    if (!obj.at(key).is_number_integer()) throw std::invalid_argument(std::string("tables: bad integer ") + key);
    return obj.at(key).get<int>();
}

}  // namespace

Tables parse_tables(const std::string& json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("tables: ") + e.what());
    }
    Tables t;
    try {
        if (doc.at("format").get<int>() != 1) throw std::invalid_argument("tables: unsupported format");
        for (const auto& ce : doc.at("counterexamples")) {
            Counterexample c;
            c.f = rational_field(ce.at("f"), "f");
            c.state = RationalCoefficients(2);
            c.state[0] = Rational(1, 4);
            for (const auto& [label, v] : ce.at("coords").items()) {
                if (label.size() != 2 || label == "II") throw std::invalid_argument("tables: bad coordinate label");
                c.state.at(label) = c.f * rational_field(v, "coords");
            }
            t.counterexamples.push_back(std::move(c));
        }
        for (const auto& f : doc.at("facets")) {
            std::map<std::string, Rational> entries;
            for (const auto& [label, v] : f.items()) entries[label] = rational_field(v, "facets");
            t.facets.push_back(Halfspace::from_labels(2, entries));
        }
        const auto& code = doc.at("five_qubit_code");
        t.five_qubit_code = StabilizerGroup::from_strings(code.at("generators").get<std::vector<std::string>>());
        t.logical_x = PauliOperator::from_string(code.at("logical_x").get<std::string>());
        t.logical_z = PauliOperator::from_string(code.at("logical_z").get<std::string>());
        const auto& p = doc.at("diagonal_point");
        t.diagonal_scale = rational_field(p.at("scale"), "scale");
        t.diagonal_x_prefix = p.at("x_prefix").get<std::string>();
        t.diagonal_z_prefix = p.at("z_prefix").get<std::string>();
        t.x_sqrt7 = int_field(p.at("x_numerator"), "sqrt7");
        t.x_const = int_field(p.at("x_numerator"), "const");
        t.z_sqrt14 = int_field(p.at("z_numerator"), "sqrt14");
        t.z_const = int_field(p.at("z_numerator"), "const");
        t.d_const = int_field(p.at("denominator"), "const");
        t.d_sqrt2 = int_field(p.at("denominator"), "sqrt2");
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("tables: ") + e.what());
    }
    t.canonical_json = doc.dump();
    return t;
}

Tables load_tables(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open tables file " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_tables(ss.str());
}

const Tables& embedded_tables() {
    static const Tables t = parse_tables(embedded_tables_json());
    return t;
}

std::string sha1_hex(std::string_view data) {
    unsigned char digest[SHA_DIGEST_LENGTH];
    SHA1(reinterpret_cast<const unsigned char*>(data.data()), data.size(), digest);
    std::string out;
    char buf[3];
    for (unsigned char b : digest) {
        std::snprintf(buf, sizeof buf, "%02x", b);
        out += buf;
    }
    return out;
}

std::string data_hash(const Tables& t) {
    std::string blob = "blob " + std::to_string(t.canonical_json.size());
    blob.push_back('\0');
    blob += t.canonical_json;
    return sha1_hex(blob);
}

const char* const kExpectedDataHash = "469de2ee5106f135352195301c7a3314f8e93da0";

RationalCoefficients counterexample_state(const Tables& t, size_t i) { return t.counterexamples.at(i).state; }

}  // namespace magicdistill
