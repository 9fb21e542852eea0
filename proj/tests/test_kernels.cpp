#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "birack/core.hpp"
#include "birack/kernels.hpp"
#include "doctest.h"

using namespace birack;
using kern::CompiledProgram;
using kern::Op;

namespace {

// a random program mixing pair ops (arbitrary tabulated maps) and routes
CompiledProgram random_program(std::mt19937& rng, int strands, int n,
                               int length) {
    CompiledProgram p;
    p.strands = strands;
    p.n = n;
    std::uniform_int_distribution<int> color(0, n - 1);
    std::uniform_int_distribution<int> pos(0, strands - 2);
    std::uniform_int_distribution<int> kind(0, 3);
    for (int i = 0; i < length; ++i) {
        if (kind(rng) == 0) {
            Perm route(strands);
            std::iota(route.begin(), route.end(), 0);
            std::shuffle(route.begin(), route.end(), rng);
            Op op;
            op.kind = Op::Kind::route;
            op.route.assign(route.begin(), route.end());
            p.ops.push_back(std::move(op));
        } else {
            std::vector<int> va((size_t)n * n), vb((size_t)n * n);
            for (auto& v : va) v = color(rng);
            for (auto& v : vb) v = color(rng);
            const kern::PairTable* t = p.add_table(kern::make_pair_table(
                n, [&](int a, int b) {
                    return std::pair{va[(size_t)a * n + b],
                                     vb[(size_t)a * n + b]};
                }));
            Op op;
            op.kind = Op::Kind::pair;
            op.pos = pos(rng);
            op.table = t;
            p.ops.push_back(std::move(op));
        }
    }
    return p;
}

long long pow_ll(long long base, int exp) {
    long long out = 1;
    for (int i = 0; i < exp; ++i) out *= base;
    return out;
}

}  // namespace

TEST_CASE("the AVX2 kernel agrees with the scalar reference") {
    if (!kern::avx2_compiled() || !kern::avx2_supported()) {
        MESSAGE("AVX2 unavailable; dispatch equivalence skipped");
        return;
    }
    std::mt19937 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        const int strands = 2 + 2 * (trial % 3);  // 2, 4, 6
        const int n = 2 + trial % 4;              // 2..5
        CompiledProgram p = random_program(rng, strands, n, 1 + trial % 7);
        const long long total = pow_ll(n, strands);
        CHECK(kern::count_fixed_tuples_scalar(p.ops, strands, n, 0, total) ==
              kern::count_fixed_tuples_avx2(p.ops, strands, n, 0, total));

        const long long half = pow_ll(n, strands / 2);
        CHECK(kern::count_diagonal_scalar(p.ops, strands, n, 0, half) ==
              kern::count_diagonal_avx2(p.ops, strands, n, 0, half));

        // splitting the range cannot change the sum
        const long long cut = total / 3;
        CHECK(kern::count_fixed_tuples_scalar(p.ops, strands, n, 0, total) ==
              kern::count_fixed_tuples_scalar(p.ops, strands, n, 0, cut) +
                  kern::count_fixed_tuples_scalar(p.ops, strands, n, cut,
                                                  total));
    }
}

TEST_CASE("dispatcher results do not depend on the worker count") {
    std::mt19937 rng(11);
    CompiledProgram p = random_program(rng, 4, 3, 5);
    const long long budget = 1'000'000;
    const long long one = kern::count_fixed_tuples(p.ops, 4, 3, budget, 1);
    CHECK(one == kern::count_fixed_tuples(p.ops, 4, 3, budget, 2));
    CHECK(one == kern::count_fixed_tuples(p.ops, 4, 3, budget, 5));

    const long long d1 = kern::count_diagonal(p.ops, 4, 3, budget, 1);
    CHECK(d1 == kern::count_diagonal(p.ops, 4, 3, budget, 3));
}

TEST_CASE("the budget limit throws instead of running forever") {
    CompiledProgram p;
    p.strands = 6;
    p.n = 4;
    CHECK_THROWS_AS(kern::count_fixed_tuples(p.ops, 6, 4, 100, 1),
                    capacity_error);
    CHECK_THROWS_AS(kern::count_diagonal(p.ops, 6, 4, 10, 1), capacity_error);
}

TEST_CASE("route semantics: a strand moves to route[p]") {
    // rotation 0 -> 1 -> 2 -> 0: fixed tuples are exactly the constant ones
    CompiledProgram p;
    p.strands = 3;
    p.n = 3;
    Op op;
    op.kind = Op::Kind::route;
    op.route = {1, 2, 0};
    p.ops.push_back(op);
    CHECK(kern::count_fixed_tuples(p.ops, 3, 3, 1'000, 1) == 3);

    // a route followed by its inverse fixes everything
    Op inv;
    inv.kind = Op::Kind::route;
    inv.route = {2, 0, 1};
    p.ops.push_back(inv);
    CHECK(kern::count_fixed_tuples(p.ops, 3, 3, 1'000, 1) == 27);
}

TEST_CASE("pair ops read (a, b) at positions (p, p+1)") {
    // the swap map fixes exactly the pairs with equal colors
    CompiledProgram p;
    p.strands = 2;
    p.n = 5;
    const kern::PairTable* swap = p.add_table(
        kern::make_pair_table(5, [](int a, int b) { return std::pair{b, a}; }));
    Op op;
    op.kind = Op::Kind::pair;
    op.pos = 0;
    op.table = swap;
    p.ops.push_back(op);
    CHECK(kern::count_fixed_tuples(p.ops, 2, 5, 1'000, 1) == 5);
}

TEST_CASE("diagonal counting over an empty program") {
    CompiledProgram p;
    p.strands = 6;
    p.n = 3;
    CHECK(kern::count_diagonal(p.ops, 6, 3, 1'000, 1) == 27);
}

TEST_CASE("kernel selection is consistent with cpu support") {
    if (kern::avx2_selected()) CHECK(kern::avx2_supported());
}
