#include "birack/plat.hpp"

#include <algorithm>
#include <cstdlib>

#include "birack/kernels.hpp"

namespace birack::plat {

namespace {

// position transfer through one level, top to bottom
int transfer_down(const DiagramLevel& lv, int strands, int pos) {
    switch (lv.kind) {
        case DiagramLevel::Kind::route:
            return lv.route[pos];
        case DiagramLevel::Kind::crossing:
        case DiagramLevel::Kind::virtual_swap:
            if (pos == lv.index - 1) return lv.index;
            if (pos == lv.index) return lv.index - 1;
            return pos;
    }
    (void)strands;
    return pos;
}

int transfer_up(const DiagramLevel& lv, int strands, int pos) {
    if (lv.kind == DiagramLevel::Kind::route)
        return inverse_perm(lv.route)[pos];
    return transfer_down(lv, strands, pos);  // swaps are involutions
}

void validate_diagram(int strands, const Diagram& levels) {
    if (strands <= 0 || strands % 2)
        throw domain_error("plat diagrams need a positive even strand count");
    for (const DiagramLevel& lv : levels) {
        if (lv.kind == DiagramLevel::Kind::route) {
            if ((int)lv.route.size() != strands || !is_perm(lv.route))
                throw domain_error(
                    "route level is not a permutation of the strands");
        } else if (lv.index < 1 || lv.index > strands - 1) {
            throw domain_error("crossing index out of range for the diagram");
        } else if (lv.kind == DiagramLevel::Kind::crossing && lv.sign != 1 &&
                   lv.sign != -1) {
            throw domain_error("crossing sign must be +1 or -1");
        }
    }
}

// walk every closed component from the left leg of its top cap and record
// segment directions; returns the number of components
int walk_components(int strands, const Diagram& levels,
                    std::vector<int>& orientations, bool seed_up) {
    validate_diagram(strands, levels);
    const int boundaries = (int)levels.size() + 1;
    orientations.assign((size_t)boundaries * strands, 0);
    int components = 0;
    for (int seed = 0; seed < strands; seed += 2) {
        if (orientations[seed] != 0) continue;
        ++components;
        int b = 0, pos = seed, dir = seed_up ? -1 : 1;
        while (orientations[(size_t)b * strands + pos] == 0) {
            orientations[(size_t)b * strands + pos] = dir;
            if (dir > 0) {
                if (b == (int)levels.size()) {
                    pos ^= 1;  // bottom cap u-turn
                    dir = -1;
                } else {
                    pos = transfer_down(levels[b], strands, pos);
                    ++b;
                }
            } else {
                if (b == 0) {
                    pos ^= 1;  // top cap u-turn
                    dir = 1;
                } else {
                    pos = transfer_up(levels[b - 1], strands, pos);
                    --b;
                }
            }
        }
    }
    return components;
}

Perm swap_route(int strands, int pos) {
    Perm r = identity_perm(strands);
    std::swap(r[pos], r[pos + 1]);
    return r;
}

}  // namespace

const char* level_op_name(LevelOp::Kind k) {
    switch (k) {
        case LevelOp::Kind::S: return "S";
        case LevelOp::Kind::S_inv: return "S_inv";
        case LevelOp::Kind::P: return "P";
        case LevelOp::Kind::P_inv: return "P_inv";
        case LevelOp::Kind::Q: return "Q";
        case LevelOp::Kind::Q_inv: return "Q_inv";
        case LevelOp::Kind::route: return "route";
    }
    return "?";
}

int component_count(int strands, const Diagram& levels) {
    std::vector<int> orientations;
    return walk_components(strands, levels, orientations, false);
}

void assign_orientations(PlatProgram& p, bool seed_up) {
    walk_components(p.strands, p.levels, p.orientations, seed_up);
    p.ops.clear();
    p.base_writhe = 0;
    for (size_t l = 0; l < p.levels.size(); ++l) {
        const DiagramLevel& lv = p.levels[l];
        if (lv.kind == DiagramLevel::Kind::route) {
            p.ops.push_back({LevelOp::Kind::route, 0, lv.route});
            continue;
        }
        const int a = lv.index - 1;
        if (lv.kind == DiagramLevel::Kind::virtual_swap) {
            p.ops.push_back(
                {LevelOp::Kind::route, 0, swap_route(p.strands, a)});
            continue;
        }
        const int dl = p.orientations[l * p.strands + a];
        const int dr = p.orientations[l * p.strands + a + 1];
        p.base_writhe += dl == dr ? lv.sign : -lv.sign;
        if (dl > 0 && dr > 0) {
            p.ops.push_back(
                {lv.sign > 0 ? LevelOp::Kind::S : LevelOp::Kind::S_inv, a, {}});
        } else if (dl > 0) {
            p.ops.push_back(
                {lv.sign < 0 ? LevelOp::Kind::P : LevelOp::Kind::P_inv, a, {}});
        } else if (dr > 0) {
            p.ops.push_back(
                {lv.sign < 0 ? LevelOp::Kind::Q : LevelOp::Kind::Q_inv, a, {}});
        } else {
            // both strands point up: the crossing seen rotated by half a
            // turn, i.e. the inverse crossing map conjugated by a swap
            Perm sw = swap_route(p.strands, a);
            p.ops.push_back({LevelOp::Kind::route, 0, sw});
            p.ops.push_back(
                {lv.sign > 0 ? LevelOp::Kind::S_inv : LevelOp::Kind::S, a, {}});
            p.ops.push_back({LevelOp::Kind::route, 0, sw});
        }
    }
}

std::vector<LevelOp> invert_ops(const std::vector<LevelOp>& ops) {
    std::vector<LevelOp> out;
    out.reserve(ops.size());
    for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
        LevelOp op = *it;
        switch (op.kind) {
            case LevelOp::Kind::S: op.kind = LevelOp::Kind::S_inv; break;
            case LevelOp::Kind::S_inv: op.kind = LevelOp::Kind::S; break;
            case LevelOp::Kind::P: op.kind = LevelOp::Kind::P_inv; break;
            case LevelOp::Kind::P_inv: op.kind = LevelOp::Kind::P; break;
            case LevelOp::Kind::Q: op.kind = LevelOp::Kind::Q_inv; break;
            case LevelOp::Kind::Q_inv: op.kind = LevelOp::Kind::Q; break;
            case LevelOp::Kind::route: op.route = inverse_perm(op.route); break;
        }
        out.push_back(std::move(op));
    }
    return out;
}

PlatProgram unknot_tower(int w, bool seed_up) {
    PlatProgram p;
    p.strands = 2;
    // a negative letter between the antiparallel cap strands is a +1 kink
    const int sign = w >= 0 ? -1 : 1;
    for (int i = 0; i < std::abs(w); ++i)
        p.levels.push_back({DiagramLevel::Kind::crossing, 1, sign, {}});
    assign_orientations(p, seed_up);
    return p;
}

PlatProgram closure_to_plat(const braid::Word& w, bool seed_up) {
    const int k = std::max(1, braid::strands(w));
    for (const braid::Letter& let : w.letters)
        if (let.index + 1 > k)
            throw domain_error("word does not fit on " + std::to_string(k) +
                               " strands");
    PlatProgram p;
    p.strands = 2 * k;
    Perm rho((size_t)2 * k);
    for (int j = 0; j < k; ++j) {
        rho[2 * j] = j;
        rho[2 * j + 1] = k + j;
    }
    p.levels.push_back({DiagramLevel::Kind::route, 0, 1, rho});
    for (const braid::Letter& let : w.letters) {
        if (let.is_virtual)
            p.levels.push_back(
                {DiagramLevel::Kind::virtual_swap, let.index, 1, {}});
        else
            p.levels.push_back(
                {DiagramLevel::Kind::crossing, let.index, let.sign, {}});
    }
    p.levels.push_back({DiagramLevel::Kind::route, 0, 1, inverse_perm(rho)});
    assign_orientations(p, seed_up);
    return p;
}

namespace {

kern::CompiledProgram compile_ops(const std::vector<LevelOp>& ops, int strands,
                                  const Birack& b) {
    validate_rows(b);
    kern::CompiledProgram cp;
    cp.strands = strands;
    cp.n = b.n;
    const kern::PairTable* cache[6] = {};
    auto table_for = [&](LevelOp::Kind k) {
        const int slot = (int)k;
        if (cache[slot]) return cache[slot];
        std::unique_ptr<kern::PairTable> t;
        switch (k) {
            case LevelOp::Kind::S:
                t = kern::make_pair_table(b.n, [&](int x, int y) {
                    return std::pair{b.dn[x][y], b.up[y][x]};
                });
                break;
            case LevelOp::Kind::S_inv: {
                t = std::make_unique<kern::PairTable>();
                t->n = b.n;
                t->out_a.assign((size_t)b.n * b.n, -1);
                t->out_b.assign((size_t)b.n * b.n, -1);
                for (int x = 0; x < b.n; ++x)
                    for (int y = 0; y < b.n; ++y) {
                        size_t img = (size_t)b.dn[x][y] * b.n + b.up[y][x];
                        if (t->out_a[img] != -1)
                            throw structural_error(
                                "crossing map is not invertible");
                        t->out_a[img] = x;
                        t->out_b[img] = y;
                    }
                break;
            }
            case LevelOp::Kind::P:
                t = kern::make_pair_table(
                    b.n, [&](int x, int y) { return sideways_P(b, x, y); });
                break;
            case LevelOp::Kind::P_inv:
                t = kern::make_pair_table(
                    b.n, [&](int x, int y) { return sideways_P_inv(b, x, y); });
                break;
            case LevelOp::Kind::Q:
                t = kern::make_pair_table(
                    b.n, [&](int x, int y) { return sideways_Q(b, x, y); });
                break;
            case LevelOp::Kind::Q_inv:
                t = kern::make_pair_table(
                    b.n, [&](int x, int y) { return sideways_Q_inv(b, x, y); });
                break;
            case LevelOp::Kind::route:
                break;
        }
        cache[slot] = cp.add_table(std::move(t));
        return cache[slot];
    };
    for (const LevelOp& op : ops) {
        kern::Op ko;
        if (op.kind == LevelOp::Kind::route) {
            ko.kind = kern::Op::Kind::route;
            ko.route.assign(op.route.begin(), op.route.end());
        } else {
            ko.kind = kern::Op::Kind::pair;
            ko.pos = op.pos;
            ko.table = table_for(op.kind);
        }
        cp.ops.push_back(std::move(ko));
    }
    return cp;
}

void require_assigned(const PlatProgram& p) {
    if (p.orientations.size() != (p.levels.size() + 1) * (size_t)p.strands)
        throw domain_error(
            "plat program is missing its orientation assignment");
}

}  // namespace

long long phi(const PlatProgram& p, const Birack& b,
              const braid::CountOptions& opts) {
    require_assigned(p);
    kern::CompiledProgram cp = compile_ops(p.ops, p.strands, b);
    return kern::count_diagonal(cp.ops, cp.strands, cp.n, opts.budget,
                                opts.workers);
}

long long phi_negative(const PlatProgram& p, const Birack& b,
                       const braid::CountOptions& opts) {
    require_assigned(p);
    kern::CompiledProgram cp = compile_ops(invert_ops(p.ops), p.strands, b);
    return kern::count_diagonal(cp.ops, cp.strands, cp.n, opts.budget,
                                opts.workers);
}

long long WritheSeries::at(int writhe) const {
    for (const auto& [w, v] : values)
        if (w == writhe) return v;
    throw domain_error("writhe " + std::to_string(writhe) +
                       " is outside the computed series");
}

WritheSeries series(const PlatProgram& p, const Birack& b, int half_width,
                    const braid::CountOptions& opts) {
    if (half_width < 0) throw domain_error("half width must be nonnegative");
    require_assigned(p);
    const bool seeded_up = !p.orientations.empty() && p.orientations[0] == -1;

    // the program with k extra kinks next to the bottom cap of the first
    // strand pair; the kink legs are antiparallel there, so each one raises
    // the writhe by one
    auto kinked = [&](int kinks) {
        PlatProgram q;
        q.strands = p.strands;
        q.levels = p.levels;
        for (int i = 0; i < kinks; ++i)
            q.levels.push_back({DiagramLevel::Kind::crossing, 1, -1, {}});
        assign_orientations(q, seeded_up);
        return q;
    };

    WritheSeries out;
    out.base_writhe = p.base_writhe;
    std::vector<long long> forward;  // forward[k] = phi at base_writhe + k
    forward.push_back(phi(p, b, opts));
    out.values.emplace_back(p.base_writhe, forward[0]);
    for (int k = 1; k <= half_width; ++k) {
        // the value below the base writhe reads the same extended word
        // through the inverse operators
        PlatProgram q = kinked(k);
        out.values.emplace_back(p.base_writhe - k, phi_negative(q, b, opts));
        forward.push_back(phi(q, b, opts));
        out.values.emplace_back(p.base_writhe + k, forward.back());
    }
    std::sort(out.values.begin(), out.values.end());

    // look for a period of the forward sequence within 2 |X|^(strands/2) + 1
    // terms, requiring a doubled window before accepting; the probe spends at
    // most `budget` tuple evaluations in total before giving up
    long long runs_per_phi = 1;
    for (int i = 0; i < p.strands / 2; ++i) {
        runs_per_phi *= b.n;
        if (runs_per_phi > 500'000) break;
    }
    const long long term_cap =
        std::min(2 * runs_per_phi + 1, (long long)1'000'001);
    auto probe = [&forward]() {
        for (int q = 1; 2 * q <= (int)forward.size(); ++q) {
            bool periodic = true;
            for (size_t i = 0; i + q < forward.size() && periodic; ++i)
                periodic = forward[i] == forward[i + q];
            if (periodic) return q;
        }
        return 0;
    };
    long long spent = (long long)out.values.size() * runs_per_phi;
    try {
        out.period = probe();  // the computed terms may already repeat
        while (out.period == 0 && (long long)forward.size() < term_cap &&
               (spent += runs_per_phi) <= opts.budget) {
            forward.push_back(phi(kinked((int)forward.size()), b, opts));
            out.period = probe();
        }
    } catch (const capacity_error&) {
        out.period = 0;  // ran out of budget before a doubled window appeared
    }
    return out;
}

}  // namespace birack::plat
