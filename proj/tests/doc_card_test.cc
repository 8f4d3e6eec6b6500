// Copyright 2026 The qoracle Authors
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

#include "qoracle/doc_card.h"

#include <gtest/gtest.h>

using namespace qoracle;
using Card = OracleDocCard;

namespace {

OracleRequest range(OracleId id, size_t n, uint64_t n1, uint64_t n2) {
    return {id, n, 0, 0, n1, n2};
}

const CardCheck *find_check(const CardReport &r, std::string_view prefix) {
    for (const auto &c : r.checks) {
        if (c.claim.rfind(prefix, 0) == 0) {
            return &c;
        }
    }
    return nullptr;
}

}  // namespace

TEST(generate_card, range_a) {
    auto card = generate_card(range(OracleId::RangeA, 3, 4, 7));
    ASSERT_EQ(card.oracle, OracleId::RangeA);
    ASSERT_EQ(card.components.size(), 2u);
    ASSERT_EQ(card.components[0].request, (OracleRequest{OracleId::LessThan, 3, 8}));
    ASSERT_EQ(card.components[1].request, (OracleRequest{OracleId::LessThan, 3, 4}));
    ASSERT_EQ(card.preconditions.input_state, Card::InputState::Any);
    ASSERT_EQ(card.postconditions.effect, Card::Effect::PhaseMarkInterval);
    ASSERT_EQ(card.postconditions.begin, 4u);
    ASSERT_EQ(card.postconditions.end, 8u);
    ASSERT_EQ(card.circuit_properties.unitary_class, Card::UnitaryClass::Diagonal);
    ASSERT_EQ(card.request(), range(OracleId::RangeA, 3, 4, 7));
    ASSERT_EQ(card.circuit_properties.depth, 4u);
}

TEST(generate_card, range_b) {
    auto card = generate_card(range(OracleId::RangeB, 3, 4, 7));
    ASSERT_EQ(card.components.size(), 2u);
    ASSERT_EQ(card.components[0].request, (OracleRequest{OracleId::LessThan, 3, 4}));
    ASSERT_EQ(card.components[1].request, (OracleRequest{OracleId::Add, 3, 0, 4}));
    ASSERT_EQ(card.preconditions.input_state, Card::InputState::Uniform);
    ASSERT_NE(card.preconditions.description.find("uniform superposition"), std::string::npos);
    ASSERT_EQ(card.circuit_properties.unitary_class, Card::UnitaryClass::Permutation);

    // Same black box, different contract.
    auto a = generate_card(range(OracleId::RangeA, 3, 4, 7));
    ASSERT_EQ(card.black_box_function, a.black_box_function);
    ASSERT_NE(card.preconditions, a.preconditions);
    ASSERT_EQ(card.postconditions.begin, a.postconditions.begin);
    ASSERT_EQ(card.postconditions.end, a.postconditions.end);

    // Starting at 0 the adder is empty and B acts on any input.
    ASSERT_EQ(generate_card(range(OracleId::RangeB, 3, 0, 5)).preconditions.input_state, Card::InputState::Any);
}

TEST(generate_card, add_const) {
    auto card = generate_card({OracleId::Add, 3, 0, 3});
    ASSERT_EQ(card.postconditions.effect, Card::Effect::Displacement);
    ASSERT_EQ(card.postconditions.shift, 3u);
    auto out = apply_postcondition(card.postconditions, StateVector::basis(3, 4));
    for (size_t i = 0; i < out.size(); i++) {
        ASSERT_EQ(out[i], std::complex<double>(i == 7 ? 1.0 : 0.0));
    }
    ASSERT_EQ(card.components.size(), 1u);
    ASSERT_EQ(card.components[0].request.id, OracleId::QFT);
}

TEST(generate_card, gate_set_is_measured) {
    auto card = generate_card(range(OracleId::RangeA, 3, 4, 7));
    // Only single-qubit Z and X flips survive in this instance.
    ASSERT_EQ(card.circuit_properties.gate_set, (std::vector<std::string>{"X", "RZ"}));
    // With n1 = 4 the adder only touches qubit 2, so no CX appears either.
    auto b = generate_card(range(OracleId::RangeB, 3, 4, 7));
    ASSERT_EQ(b.circuit_properties.gate_set, (std::vector<std::string>{"X", "SX", "RZ"}));
    b = generate_card(range(OracleId::RangeB, 3, 1, 6));
    ASSERT_EQ(b.circuit_properties.gate_set, (std::vector<std::string>{"X", "SX", "RZ", "CX"}));
}

TEST(generate_card, depth_summary_from_sweep) {
    auto data = sweep(3, 4);
    auto card = generate_card(range(OracleId::RangeB, 4, 3, 9), &data);
    ASSERT_EQ(card.circuit_properties.depth_summary.size(), 2u);
    ASSERT_EQ(card.circuit_properties.depth_summary[1].n, 4u);
    ASSERT_EQ(card.circuit_properties.depth_summary[1].max, data.summary.rows[1].depth_b.max);
}

TEST(check_card, generated_cards_pass) {
    for (size_t n = 3; n <= 5; n++) {
        for (auto [n1, n2] : std::vector<std::pair<uint64_t, uint64_t>>{{1, 2}, {0, 3}, {2, 6}, {5, 7}}) {
            for (auto id : {OracleId::RangeA, OracleId::RangeB}) {
                auto card = generate_card(range(id, n, n1, n2));
                auto report = check_card(card);
                ASSERT_TRUE(report.ok()) << report.to_text();
            }
        }
    }
    for (OracleRequest req : std::vector<OracleRequest>{
             {OracleId::MCZ, 4, 0, 0, 0, 0, {0, 2}}, {OracleId::LessThan, 4, 11}, {OracleId::QFT, 3},
             {OracleId::Add, 4, 0, 6}, {OracleId::Add, 3, 0, 0}}) {
        auto report = check_card(generate_card(req));
        ASSERT_TRUE(report.ok()) << report.to_text();
    }
}

TEST(check_card, b_precondition_relaxed_fails_on_basis_zero) {
    auto card = generate_card(range(OracleId::RangeB, 3, 4, 7));
    card.preconditions.input_state = Card::InputState::Any;
    card.preconditions.description = "Any input state.";
    auto report = check_card(card);
    ASSERT_FALSE(report.ok());
    const auto *post = find_check(report, "postcondition");
    ASSERT_NE(post, nullptr);
    ASSERT_FALSE(post->passed);
    ASSERT_NE(post->detail.find("basis |0>"), std::string::npos) << post->detail;
}

TEST(check_card, stale_depth_fails) {
    auto card = generate_card(range(OracleId::RangeA, 3, 2, 5));
    card.circuit_properties.depth += 1;
    auto report = check_card(card);
    ASSERT_FALSE(report.ok());
    ASSERT_FALSE(find_check(report, "depth")->passed);

    auto data = sweep(3, 3);
    auto b = generate_card(range(OracleId::RangeB, 3, 2, 5), &data);
    ASSERT_TRUE(check_card(b).ok());
    b.circuit_properties.depth_summary[0].max -= 1;
    auto stale = check_card(b);
    ASSERT_FALSE(stale.ok());
    ASSERT_FALSE(find_check(stale, "depth summary n=3")->passed);
}

TEST(check_card, wrong_class_and_gate_set_fail) {
    auto card = generate_card(range(OracleId::RangeA, 3, 2, 5));
    card.circuit_properties.unitary_class = Card::UnitaryClass::Dense;
    ASSERT_FALSE(find_check(check_card(card), "unitary class")->passed);
    card = generate_card(range(OracleId::RangeA, 3, 2, 5));
    card.circuit_properties.gate_set.pop_back();
    ASSERT_FALSE(find_check(check_card(card), "gate set")->passed);
}

TEST(check_card, errors) {
    auto card = generate_card(range(OracleId::RangeA, 3, 2, 5));
    card.builder_params[2].value = 1;  // n2 < n1
    ASSERT_THROW(check_card(card), std::invalid_argument);
    ASSERT_THROW(check_card(generate_card(range(OracleId::RangeA, 7, 2, 5))), std::invalid_argument);
}

TEST(render, markdown_sections_in_order) {
    auto md = render(generate_card(range(OracleId::RangeA, 3, 4, 7)), CardFormat::Markdown);
    size_t pos = 0;
    for (const char *section : {"## Black Box", "## Components", "## Parameters", "## Pre", "## Post",
                                "## Circuit Properties"}) {
        auto at = md.find(std::string("\n") + section + "\n", pos);
        ASSERT_NE(at, std::string::npos) << section;
        pos = at + 1;
    }
}

TEST(render, deterministic) {
    auto card = generate_card(range(OracleId::RangeB, 4, 3, 9));
    ASSERT_EQ(render(card, CardFormat::Json), render(card, CardFormat::Json));
    ASSERT_EQ(render(card, CardFormat::Markdown), render(generate_card(range(OracleId::RangeB, 4, 3, 9)),
                                                         CardFormat::Markdown));
    ASSERT_EQ(card_format_from_name("md"), CardFormat::Markdown);
    ASSERT_FALSE(card_format_from_name("html").has_value());
}

TEST(card_json, round_trip) {
    auto data = sweep(3, 3);
    for (OracleRequest req : std::vector<OracleRequest>{range(OracleId::RangeA, 3, 4, 7),
                                                        range(OracleId::RangeB, 3, 4, 7),
                                                        {OracleId::MCZ, 4, 0, 0, 0, 0, {1, 3}},
                                                        {OracleId::LessThan, 4, 11},
                                                        {OracleId::QFT, 3},
                                                        {OracleId::Add, 4, 0, 6}}) {
        auto card = generate_card(req, &data);
        auto text = render(card, CardFormat::Json);
        auto back = card_from_json(nlohmann::json::parse(text));
        ASSERT_EQ(back, card);
        ASSERT_EQ(render(back, CardFormat::Json), text);
    }
}

TEST(card_json, strict_schema) {
    auto j = card_to_json(generate_card(range(OracleId::RangeA, 3, 4, 7)));
    ASSERT_EQ(j["schema"], "qoracle.doc-card/1");

    auto extra = j;
    extra["color"] = "blue";
    ASSERT_THROW(card_from_json(extra), std::invalid_argument);

    auto nested_extra = j;
    nested_extra["postconditions"]["phase"] = 1;
    ASSERT_THROW(card_from_json(nested_extra), std::invalid_argument);

    auto missing = j;
    missing.erase("notes");
    ASSERT_THROW(card_from_json(missing), std::invalid_argument);

    auto nested_missing = j;
    nested_missing["circuit_properties"].erase("depth");
    ASSERT_THROW(card_from_json(nested_missing), std::invalid_argument);

    auto wrong_type = j;
    wrong_type["circuit_properties"]["depth"] = "four";
    ASSERT_THROW(card_from_json(wrong_type), std::invalid_argument);

    auto bad_schema = j;
    bad_schema["schema"] = "qoracle.doc-card/2";
    ASSERT_THROW(card_from_json(bad_schema), std::invalid_argument);
}
