// Copyright 2026 The PCE Channels Authors
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

#include "pce/diagram.hpp"

#include "gtest/gtest.h"

#include "oracles.hpp"
#include "pce/generators.hpp"
#include "pce/io.hpp"
#include "pce/random.hpp"

using namespace pce;

namespace {

PceMap load(const std::string& name) {
    return io::parse_channel(io::parse_text(oracle::slurp(oracle::data_path(name + ".json"))));
}

}  // namespace

TEST(diagram, golden_ascii) {
    for (const char* name : {"q1_identity", "q1_dephasing", "q1_depolarizing", "q1_bloch_disk", "q2_depolarizing", "q2_four_components", "q2_generator_10", "q2_generator_32", "q2_generator_22", "q2_identity"}) {
        ASSERT_EQ(render_ascii(load(name)), oracle::slurp(oracle::golden_path(std::string(name) + ".txt"))) << name;
    }
}

TEST(diagram, golden_svg) {
    for (const char* name : {"q1_identity", "q1_dephasing", "q1_depolarizing", "q1_bloch_disk", "q2_depolarizing", "q2_four_components", "q2_generator_10", "q2_generator_32", "q2_generator_22", "q2_identity"}) {
        ASSERT_EQ(render_svg(load(name)), oracle::slurp(oracle::golden_path(std::string(name) + ".svg"))) << name;
    }
}

TEST(diagram, two_qubit_examples_are_the_named_channels) {
    ASSERT_EQ(load("q2_depolarizing"), PceMap::depolarizing(2));
    ASSERT_EQ(load("q2_generator_10"), generator_map(MultiIndex::parse("10")).map());
    ASSERT_EQ(load("q2_generator_32"), generator_map(MultiIndex::parse("32")).map());
    ASSERT_EQ(load("q2_generator_22"), generator_map(MultiIndex::parse("22")).map());
    ASSERT_EQ(load("q2_identity"), PceMap::identity(2));
    ASSERT_EQ(load("q1_identity"), PceMap::identity(1));
    ASSERT_EQ(load("q1_depolarizing"), PceMap::depolarizing(1));
    ASSERT_EQ(load("q1_dephasing"), generator_map(MultiIndex::parse("3")).map());
}

TEST(diagram, orientation) {
    // Row is the qubit-1 digit, column the qubit-2 digit.
    const std::vector<MultiIndex> one = {MultiIndex::parse("12")};
    TauBitset tau(16);
    tau.set(0);
    tau.set(MultiIndex::parse("12").word());
    ASSERT_EQ(render_ascii(PceMap::from_tau(2, tau)), "#...\n..#.\n....\n....\n");
    TauBitset tau3(64);
    tau3.set(0);
    tau3.set(MultiIndex::parse("123").word());
    ASSERT_EQ(render_ascii(PceMap::from_tau(3, tau3)),
              "#... .... .... ....\n"
              ".... .... ...# ....\n"
              ".... .... .... ....\n"
              ".... .... .... ....\n");
}

TEST(diagram, ascii_round_trip) {
    Rng rng(131);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 1 + trial % 3;
        TauBitset tau(index_space_size(n));
        for (std::size_t i = 0; i < tau.size(); ++i) {
            tau[i] = rng.bits() & 1u;
        }
        const PceMap m = PceMap::from_tau(n, tau);
        ASSERT_EQ(parse_ascii(render_ascii(m)).tau(), tau);
    }
}

TEST(diagram, errors) {
    ASSERT_THROW(render_ascii(PceMap::identity(4)), CapacityError);
    ASSERT_THROW(render_svg(PceMap::identity(4)), CapacityError);
    ASSERT_THROW(parse_ascii("#\n#\n#\n"), ParseError);
    ASSERT_THROW(parse_ascii("#\n#\n#\nx\n"), ParseError);
    ASSERT_THROW(parse_ascii("##\n##\n##\n##\n"), ParseError);
    ASSERT_THROW(parse_ascii("####\n###\n####\n####\n"), ParseError);
}
