#pragma once

// Plat closures and the writhe coefficient series.
//
// A plat program is a stack of diagram levels on an even number of strands,
// read top to bottom, with cap pairs (2j, 2j+1) closing the strands at both
// ends.  Levels are classical crossings, virtual swaps, or routing
// permutations.  Orientations are assigned by walking each closed component
// from the left leg of its top cap, downward first; each crossing then
// compiles to one of the maps
//
//   parallel (down, down):      the crossing map of the switch, or its
//                               inverse for the negative crossing
//   antiparallel:               a sideways map P or Q (by which strand
//                               points up), inverted for the other sign
//   parallel (up, up):          the crossing seen rotated by half a turn,
//                               emitted as the inverse crossing map
//                               conjugated by a swap route
//
// phi(program, B) seeds every pairwise-diagonal tuple (v0,v0,v1,v1,...) at
// the top caps, runs the ops, and counts runs that land back on the
// diagonal.  The writhe series varies the diagram writhe by appending kinks
// next to the bottom cap of the first strand pair; values below the base
// writhe read the extended word through the inverse operators.

#include <string>
#include <vector>

#include "birack/braid.hpp"
#include "birack/core.hpp"

namespace birack::plat {

struct DiagramLevel {
    enum class Kind { crossing, virtual_swap, route };
    Kind kind = Kind::crossing;
    int index = 0;  // 1-based position, acts on strands (index-1, index)
    int sign = 1;   // crossings only
    Perm route;     // route levels only: strand p continues at route[p]

    bool operator==(const DiagramLevel&) const = default;
};

using Diagram = std::vector<DiagramLevel>;

struct LevelOp {
    enum class Kind { S, S_inv, P, P_inv, Q, Q_inv, route };
    Kind kind = Kind::S;
    int pos = 0;  // 0-based left strand for the pair kinds
    Perm route;

    bool operator==(const LevelOp&) const = default;
};

const char* level_op_name(LevelOp::Kind k);

struct PlatProgram {
    int strands = 0;  // even
    Diagram levels;
    // orientation of every segment, indexed boundary * strands + position,
    // with boundaries 0..levels.size(); +1 points down, -1 up
    std::vector<int> orientations;
    std::vector<LevelOp> ops;
    int base_writhe = 0;

    bool operator==(const PlatProgram&) const = default;
};

// number of closed components of the capped-off diagram
int component_count(int strands, const Diagram& levels);

// walk the components and fill orientations + ops; seeds point down at the
// left leg of each top cap unless seed_up is set (the seeding direction is
// reported alongside series diagnostics)
void assign_orientations(PlatProgram& p, bool seed_up = false);

std::vector<LevelOp> invert_ops(const std::vector<LevelOp>& ops);

// w kinks on one cap pair; the tower of the w-writhe unknot diagram
PlatProgram unknot_tower(int w, bool seed_up = false);

// plat presentation of the braid closure: the 2k-strand plat routing cap
// legs to the braid and its return strands, then the word, then the route
// back
PlatProgram closure_to_plat(const braid::Word& w, bool seed_up = false);

long long phi(const PlatProgram& p, const Birack& b,
              const braid::CountOptions& opts = {});
// phi of the inverse program
long long phi_negative(const PlatProgram& p, const Birack& b,
                       const braid::CountOptions& opts = {});

struct WritheSeries {
    int base_writhe = 0;
    // writhe -> phi for base_writhe - half_width .. base_writhe + half_width
    std::vector<std::pair<int, long long>> values;
    // least p with the forward sequence p-periodic over a doubled window; 0
    // when no period was found within 2 |X|^(strands/2) + 1 terms
    int period = 0;

    long long at(int writhe) const;
};

// phi under writhe variation: k extra kinks give the value at
// base_writhe + k, and the inverse of that extended operator word gives the
// value at base_writhe - k
WritheSeries series(const PlatProgram& p, const Birack& b, int half_width,
                    const braid::CountOptions& opts = {});

}  // namespace birack::plat
