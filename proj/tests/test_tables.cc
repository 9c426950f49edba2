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

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "magicdistill/acceptance.h"
#include "magicdistill/tables.h"

using namespace magicdistill;

TEST(Tables, EmbeddedDataParses) {
    const auto& t = embedded_tables();
    EXPECT_EQ(t.counterexamples.size(), 7u);
    EXPECT_EQ(t.facets.size(), 8u);
    EXPECT_EQ(t.five_qubit_code.num_generators(), 4);
    EXPECT_EQ(t.counterexamples[0].f, Rational(1, 12));
    EXPECT_EQ(t.counterexamples[0].state.at("XX"), Rational(-1, 12));
    EXPECT_EQ(t.counterexamples[0].state.at("II"), Rational(1, 4));
    EXPECT_EQ(t.logical_x, PauliOperator::from_string("XXXXX"));
}

TEST(Tables, ChecksumMatches) { EXPECT_EQ(data_hash(embedded_tables()), kExpectedDataHash); }

TEST(Tables, Sha1KnownVectors) {
    EXPECT_EQ(sha1_hex(""), "da39a3ee5e6b4b0d3255bfef95601890afd80709");
    EXPECT_EQ(sha1_hex("abc"), "a9993e364706816aba3e25717850c26c9cd0d89d");
    // Git blob hash of "hello\n".
    EXPECT_EQ(sha1_hex(std::string("blob 6\0hello\n", 13)), "ce013625030ba8dba906f756967f9e9ca394464a");
}

TEST(Tables, FileMatchesEmbedded) {
    const auto t = load_tables(MAGICDISTILL_SOURCE_DIR "/data/tables.json");
    EXPECT_EQ(data_hash(t), data_hash(embedded_tables()));
    EXPECT_THROW(load_tables("/nonexistent/tables.json"), std::invalid_argument);
}

TEST(Tables, MalformedDocumentsThrow) {
    EXPECT_THROW(parse_tables("{"), std::invalid_argument);
    EXPECT_THROW(parse_tables("{\"format\": 2}"), std::invalid_argument);
    auto doc = nlohmann::json::parse(embedded_tables_json());
    doc["counterexamples"][0]["coords"]["QQ"] = 1;
    EXPECT_THROW(parse_tables(doc.dump()), std::invalid_argument);
}

TEST(Tables, SignFlipChangesChecksum) {
    auto doc = nlohmann::json::parse(embedded_tables_json());
    doc["facets"][3]["XY"] = -doc["facets"][3]["XY"].get<int>();
    const auto t = parse_tables(doc.dump());
    EXPECT_NE(data_hash(t), kExpectedDataHash);
    AcceptanceOptions o;
    o.only = {"data", "polytope"};
    bool checksum_failed = false;
    for (const auto& r : run_acceptance(t, o))
        if (r.name == "data_checksum") checksum_failed = !r.pass;
    EXPECT_TRUE(checksum_failed);
}

TEST(Tables, EveryCorruptionIsNamed) {
    const auto outcomes = negative_controls(embedded_tables());
    EXPECT_GT(outcomes.size(), 150u);
    for (const auto& o : outcomes) {
        ASSERT_FALSE(o.failed_checks.empty()) << o.location;
        bool named = false;
        for (const auto& c : o.failed_checks) named = named || c == "data/data_checksum" || c.starts_with("parse:");
        EXPECT_TRUE(named) << o.location;
    }
}

TEST(Tables, AcceptanceGroups) {
    for (const auto& g : check_groups()) EXPECT_GT(group_criterion(g), 0) << g;
    for (const auto& g : table_groups()) EXPECT_GT(group_criterion(g), 0) << g;
    EXPECT_EQ(group_criterion("nope"), 0);
    AcceptanceOptions o;
    o.only = {"nope"};
    EXPECT_THROW(run_acceptance(embedded_tables(), o), std::invalid_argument);
}
