#include <set>

#include "doctest.h"
#include "test_support.hpp"
#include "tutte/graph_io.hpp"
#include "tutte/schreier.hpp"

using namespace tutte;
using test_support::Rng;

namespace {

// Generator index by display name within a group's table.
std::size_t gen_index(const GroupSpec& spec, const std::string& name) {
    for (std::size_t i = 0; i < spec.generators.size(); ++i) {
        if (spec.generators[i].name == name) return i;
    }
    FAIL("no generator named " << name);
    return 0;
}

// Encode a word string (first letter leftmost) as the integer vertex id.
std::uint64_t encode(const std::string& word) {
    std::uint64_t w = 0;
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (word[i] == '1') w |= std::uint64_t{1} << i;
    }
    return w;
}

}  // namespace

TEST_SUITE_BEGIN("schreier");

TEST_CASE("group names parse and print") {
    CHECK(group_name(Group::Grigorchuk) == "grigorchuk");
    CHECK(group_name(Group::Basilica) == "basilica");
    CHECK(group_from_name("basilica") == Group::Basilica);
    CHECK_FALSE(group_from_name("dihedral").has_value());
}

TEST_CASE("generator tables carry the recursion structure") {
    const GroupSpec& grig = group_spec(Group::Grigorchuk);
    CHECK(grig.generators.size() == 4);
    CHECK(grig.involutive_edges);
    CHECK(grig.generators[gen_index(grig, "a")].flip);
    CHECK_FALSE(grig.generators[gen_index(grig, "b")].flip);

    const GroupSpec& bas = group_spec(Group::Basilica);
    CHECK(bas.generators.size() == 2);
    CHECK_FALSE(bas.involutive_edges);
    CHECK_FALSE(bas.generators[gen_index(bas, "a")].flip);
    CHECK(bas.generators[gen_index(bas, "b")].flip);
}

TEST_CASE("single applications match the hand-computed words") {
    const GroupSpec& grig = group_spec(Group::Grigorchuk);
    // first generator flips the first letter: "01" -> "11"
    CHECK(apply_generator(grig, gen_index(grig, "a"), encode("01"), 2) == encode("11"));
    // second generator recurses into the first on a leading zero: "00" -> "01"
    CHECK(apply_generator(grig, gen_index(grig, "b"), encode("00"), 2) == encode("01"));

    const GroupSpec& bas = group_spec(Group::Basilica);
    // flipping generator with recursion on the zero branch: "00" -> "1" + a("0") = "10"
    CHECK(apply_generator(bas, gen_index(bas, "b"), encode("00"), 2) == encode("10"));
    CHECK(apply_generator(bas, gen_index(bas, "b"), encode("10"), 2) == encode("00"));
}

TEST_CASE("word labels expose the first letter leftmost") {
    CHECK(word_label(encode("11"), 2) == "11");
    CHECK(word_label(encode("01"), 2) == "01");
    CHECK(word_label(0, 3) == "000");
    CHECK(word_label(4, 3) == "001");
}

TEST_CASE("all four involutive generators square to the identity") {
    const GroupSpec& grig = group_spec(Group::Grigorchuk);
    for (unsigned level = 1; level <= 7; ++level) {
        const std::uint64_t count = std::uint64_t{1} << level;
        for (std::uint64_t w = 0; w < count; ++w) {
            for (std::size_t g = 0; g < grig.generators.size(); ++g) {
                CHECK(apply_generator(grig, g, apply_generator(grig, g, w, level), level) == w);
            }
        }
    }
    Rng rng(41);
    for (unsigned level = 8; level <= 10; ++level) {
        const std::uint64_t count = std::uint64_t{1} << level;
        for (int i = 0; i < 200; ++i) {
            const std::uint64_t w = rng.below(count);
            for (std::size_t g = 0; g < grig.generators.size(); ++g) {
                CHECK(apply_generator(grig, g, apply_generator(grig, g, w, level), level) == w);
            }
        }
    }
}

TEST_CASE("the product relations among the non-flipping generators hold") {
    const GroupSpec& grig = group_spec(Group::Grigorchuk);
    const std::size_t b = gen_index(grig, "b");
    const std::size_t c = gen_index(grig, "c");
    const std::size_t d = gen_index(grig, "d");
    for (unsigned level = 1; level <= 6; ++level) {
        const std::uint64_t count = std::uint64_t{1} << level;
        for (std::uint64_t w = 0; w < count; ++w) {
            CHECK(apply_generator(grig, b, apply_generator(grig, c, w, level), level) ==
                  apply_generator(grig, d, w, level));
            CHECK(apply_generator(grig, c, apply_generator(grig, d, w, level), level) ==
                  apply_generator(grig, b, w, level));
            CHECK(apply_generator(grig, b, apply_generator(grig, d, w, level), level) ==
                  apply_generator(grig, c, w, level));
        }
    }
}

TEST_CASE("the second family's generators are not involutions") {
    const GroupSpec& bas = group_spec(Group::Basilica);
    const std::size_t a = gen_index(bas, "a");
    std::size_t moved = 0;
    const unsigned level = 4;
    for (std::uint64_t w = 0; w < 16; ++w) {
        if (apply_generator(bas, a, apply_generator(bas, a, w, level), level) != w) ++moved;
    }
    CHECK(moved > 0);
    // concrete witness: a^2 sends 0001 to 0000 (words first-letter leftmost)
    const std::uint64_t w = encode("0001");
    CHECK(apply_generator(bas, a, apply_generator(bas, a, w, 4), 4) == encode("0000"));
}

TEST_CASE("the level-1 graph matches the frozen edge list") {
    const MultiGraph g = schreier_graph(Group::Grigorchuk, 1);
    CHECK(to_edge_text(g) ==
          "vertices 2\n"
          "0 1 a\n"
          "0 0 b\n"
          "1 1 b\n"
          "0 0 c\n"
          "1 1 c\n"
          "0 0 d\n"
          "1 1 d\n");
}

TEST_CASE("involutive actions produce one edge per orbit, others one per vertex") {
    // 5*2^(n-1) + 2 edges for the involutive family
    for (unsigned n = 1; n <= 6; ++n) {
        CHECK(schreier_graph(Group::Grigorchuk, n).edge_count() == 5 * (1u << (n - 1)) + 2);
    }
    // 2 generators x 2^n vertices = 2^{n+1} for the non-involutive family
    for (unsigned n = 1; n <= 6; ++n) {
        CHECK(schreier_graph(Group::Basilica, n).edge_count() == (1u << (n + 1)));
    }
}

TEST_CASE("vertex labels enumerate the level words") {
    const MultiGraph g = schreier_graph(Group::Basilica, 2);
    REQUIRE(g.vertex_labels().size() == 4);
    CHECK(g.vertex_labels()[0] == "00");
    CHECK(g.vertex_labels()[1] == "10");
    CHECK(g.vertex_labels()[2] == "01");
    CHECK(g.vertex_labels()[3] == "11");
    SchreierOptions plain;
    plain.vertex_labels = false;
    CHECK(schreier_graph(Group::Basilica, 2, plain).vertex_labels().empty());
}

TEST_CASE("level bounds are guarded") {
    CHECK_THROWS_AS(schreier_graph(Group::Basilica, 0), GuardError);
    CHECK_THROWS_AS(schreier_graph(Group::Basilica, 21), GuardError);
    SchreierOptions tight;
    tight.max_level = 3;
    CHECK_THROWS_AS(schreier_graph(Group::Basilica, 4, tight), GuardError);
    CHECK(schreier_graph(Group::Basilica, 3, tight).vertex_count() == 8);
}

TEST_CASE("structure verification passes through level 8") {
    for (Group g : {Group::Grigorchuk, Group::Basilica}) {
        for (unsigned n = 1; n <= 8; ++n) {
            const StructureReport r = verify_structure(g, n);
            INFO(group_name(g) << " level " << n);
            for (const StructureCheck& c : r.checks) {
                INFO(c.name << ": expected " << c.expected << " got " << c.actual);
                CHECK(c.pass);
            }
            CHECK(r.all_pass);
        }
    }
}

TEST_CASE("frozen structure counts at specific levels") {
    {
        const MultiGraph g = schreier_graph(Group::Grigorchuk, 5);
        const BlockDecomposition d = g.block_decompose();
        CHECK(g.edge_count() == 82);
        CHECK(d.loop_count == 36);
        CHECK(d.bridge_count == 16);
        CHECK(d.cycle_length_counts.at(2) == 15);
        CHECK(d.is_cactus());
    }
    {
        const BlockDecomposition d = schreier_graph(Group::Basilica, 5).block_decompose();
        CHECK(d.cycle_length_counts.at(2) == 12);
        CHECK(d.cycle_length_counts.at(4) == 4);
        CHECK(d.cycle_length_counts.at(8) == 1);
        CHECK(d.bridge_count == 0);
        CHECK(d.loop_count == 16);
    }
    {
        const BlockDecomposition d = schreier_graph(Group::Basilica, 6).block_decompose();
        CHECK(d.cycle_length_counts.at(2) == 24);
        CHECK(d.cycle_length_counts.at(4) == 6);
        CHECK(d.cycle_length_counts.at(8) == 3);
        CHECK(d.loop_count == 32);
    }
    {
        const BlockDecomposition d = schreier_graph(Group::Basilica, 3).block_decompose();
        CHECK(d.cycle_length_counts.at(2) == 4);
        CHECK(d.cycle_length_counts.at(4) == 1);
    }
}

TEST_CASE("predicted structure profiles match generated graphs at depth") {
    for (Group g : {Group::Grigorchuk, Group::Basilica}) {
        const StructureProfile p = predicted_structure(g, 9);
        const MultiGraph graph = schreier_graph(g, 9);
        const BlockDecomposition d = graph.block_decompose();
        CHECK(p.vertices == graph.vertex_count());
        CHECK(p.edges == graph.edge_count());
        CHECK(p.loops == d.loop_count);
        CHECK(p.bridges == d.bridge_count);
        CHECK(p.cycle_length_counts == d.cycle_length_counts);
    }
}

TEST_SUITE_END();
