#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tutte/multigraph.hpp"

namespace tutte {

enum class Group { Grigorchuk, Basilica };

std::string group_name(Group g);                               // "grigorchuk" / "basilica"
std::optional<Group> group_from_name(const std::string& name);

// One generator of a self-similar group in wreath-recursion form:
//   s(x w) = sigma(x) . s_x(w)
// where sigma swaps the first letter iff `flip`, and s_x is the generator
// with index restriction[x] (or the identity for -1).
struct GeneratorAction {
    std::string name;
    bool flip = false;
    int restriction[2] = {-1, -1};
};

struct GroupSpec {
    Group group;
    std::vector<GeneratorAction> generators;
    // True when every generator is an involution, in which case each 2-orbit
    // {w, s(w)} contributes one edge and each fixed point one loop. False
    // keeps one edge per (vertex, generator) pair.
    bool involutive_edges = false;
};

const GroupSpec& group_spec(Group g);

// Image of a level-n word under generators[gen_index]. Words are integers in
// [0, 2^n) with the first letter stored in the least significant bit.
std::uint64_t apply_generator(const GroupSpec& spec, std::size_t gen_index, std::uint64_t word,
                              unsigned level);

// The word as a binary string, first letter leftmost ("100" for 1 at level 3).
std::string word_label(std::uint64_t word, unsigned level);

struct SchreierOptions {
    unsigned max_level = 20;  // 2^20 vertices; raise deliberately if ever needed
    bool vertex_labels = true;
};

// Level-n Schreier graph of the group acting on binary words of length n.
// Vertices are the 2^n words; edges are added generator-major, then by
// ascending source word, so ids are deterministic. Throws GuardError when
// level is 0 or exceeds options.max_level.
MultiGraph schreier_graph(Group g, unsigned level, const SchreierOptions& options = {});

struct StructureCheck {
    std::string name;
    std::string expected;
    std::string actual;
    bool pass = false;
};

struct StructureReport {
    Group group;
    unsigned level = 0;
    std::vector<StructureCheck> checks;
    bool all_pass = true;
};

// Compares the generated graph against the predicted structural profile:
// vertex/edge/loop/bridge counts, the full cycle-length spectrum, maximum
// cycle length, connectivity, and cactus shape.
StructureReport verify_structure(Group g, unsigned level, const SchreierOptions& options = {});

// Predicted block profile of the level-n graph (independent of generation):
// bridge count and multiset of cycle lengths {length -> count}.
struct StructureProfile {
    std::size_t vertices = 0;
    std::size_t edges = 0;
    std::size_t loops = 0;
    std::size_t bridges = 0;
    std::map<std::size_t, std::size_t> cycle_length_counts;
    std::size_t max_cycle_length = 0;
};
StructureProfile predicted_structure(Group g, unsigned level);

}  // namespace tutte
