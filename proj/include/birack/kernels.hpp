#pragma once

// Sweep kernels for fixed-point style counts.
//
// A braid word or plat program compiles down to a flat list of ops acting on
// a strand-state vector: either a binary op applied at adjacent positions
// (p, p+1) through a precomputed n*n lookup pair, or a routing permutation of
// the whole state.  The two sweeps are:
//
//   count_fixed_tuples: run every tuple in X^strands, count fixed points
//   count_diagonal:     seed (v0,v0,v1,v1,...), count runs that land back on
//                       the pairwise diagonal
//
// There is a scalar reference kernel and an AVX2 kernel that runs eight
// tuples per iteration; the dispatcher picks at runtime (see avx2_selected)
// and the two are equivalence-tested against each other.  Setting
// BIRACK_FORCE_SCALAR in the environment pins the scalar path.

#include <cstdint>
#include <memory>
#include <vector>

namespace birack::kern {

struct PairTable {
    int n = 0;
    std::vector<int32_t> out_a, out_b;  // indexed by a * n + b
};

struct Op {
    enum class Kind { pair, route };
    Kind kind = Kind::pair;
    int pos = 0;                      // left strand of a pair op
    const PairTable* table = nullptr; // owned by the surrounding program
    std::vector<int32_t> route;       // route[p] = destination strand of p
};

struct CompiledProgram {
    int strands = 0;
    int n = 0;
    std::vector<std::unique_ptr<PairTable>> tables;
    std::vector<Op> ops;

    const PairTable* add_table(std::unique_ptr<PairTable> t) {
        tables.push_back(std::move(t));
        return tables.back().get();
    }
};

// tabulate an arbitrary binary map (a, b) -> (a', b') over X^2
template <class F>
std::unique_ptr<PairTable> make_pair_table(int n, F&& f) {
    auto t = std::make_unique<PairTable>();
    t->n = n;
    t->out_a.resize((size_t)n * n);
    t->out_b.resize((size_t)n * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            auto [c, d] = f(a, b);
            t->out_a[(size_t)a * n + b] = c;
            t->out_b[(size_t)a * n + b] = d;
        }
    return t;
}

bool avx2_compiled();
bool avx2_supported();
// what the dispatcher will actually use (respects BIRACK_FORCE_SCALAR)
bool avx2_selected();

// dispatching entry points; throw capacity_error when the sweep would exceed
// `budget` tuple evaluations
long long count_fixed_tuples(const std::vector<Op>& ops, int strands, int n,
                             long long budget, int workers = 1);
long long count_diagonal(const std::vector<Op>& ops, int strands, int n,
                         long long budget, int workers = 1);

// direct kernel entry points (for the scalar/AVX2 equivalence tests); the
// AVX2 versions must only be called when avx2_supported()
long long count_fixed_tuples_scalar(const std::vector<Op>& ops, int strands,
                                    int n, long long lo, long long hi);
long long count_fixed_tuples_avx2(const std::vector<Op>& ops, int strands,
                                  int n, long long lo, long long hi);
long long count_diagonal_scalar(const std::vector<Op>& ops, int strands,
                                int n, long long lo, long long hi);
long long count_diagonal_avx2(const std::vector<Op>& ops, int strands, int n,
                              long long lo, long long hi);

}  // namespace birack::kern
