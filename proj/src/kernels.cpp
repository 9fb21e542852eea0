#include "birack/kernels.hpp"

#include <cstdlib>
#include <string>
#include <thread>

#include "birack/core.hpp"

namespace birack::kern {

bool avx2_supported() {
#if defined(__x86_64__) || defined(__i386__)
    return avx2_compiled() && __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

bool avx2_selected() {
    const char* force = std::getenv("BIRACK_FORCE_SCALAR");
    if (force && *force && std::string(force) != "0") return false;
    return avx2_supported();
}

namespace {

long long ipow(int base, int exp) {
    long long v = 1;
    for (int i = 0; i < exp; ++i) v *= base;
    return v;
}

// decode linear index into digits, strand 0 most significant
inline void decode(long long idx, int digits, int n, int* out) {
    for (int s = digits - 1; s >= 0; --s) {
        out[s] = (int)(idx % n);
        idx /= n;
    }
}

inline void apply_scalar(const std::vector<Op>& ops, int strands, int n,
                         int* x, int* tmp) {
    for (const Op& op : ops) {
        if (op.kind == Op::Kind::pair) {
            size_t idx = (size_t)x[op.pos] * n + x[op.pos + 1];
            int a = op.table->out_a[idx];
            int b = op.table->out_b[idx];
            x[op.pos] = a;
            x[op.pos + 1] = b;
        } else {
            for (int p = 0; p < strands; ++p) tmp[op.route[p]] = x[p];
            for (int p = 0; p < strands; ++p) x[p] = tmp[p];
        }
    }
}

void check_ops(const std::vector<Op>& ops, int strands, int n) {
    for (const Op& op : ops) {
        if (op.kind == Op::Kind::pair) {
            if (op.pos < 0 || op.pos + 1 >= strands)
                throw domain_error("pair op position out of range");
            if (!op.table || op.table->n != n)
                throw domain_error("pair op table does not match the sweep");
        } else if ((int)op.route.size() != strands) {
            throw domain_error("route permutation does not match the strand count");
        }
    }
}

long long run_range(const std::vector<Op>& ops, int strands, int n,
                    long long lo, long long hi, bool diagonal) {
    if (avx2_selected())
        return diagonal ? count_diagonal_avx2(ops, strands, n, lo, hi)
                        : count_fixed_tuples_avx2(ops, strands, n, lo, hi);
    return diagonal ? count_diagonal_scalar(ops, strands, n, lo, hi)
                    : count_fixed_tuples_scalar(ops, strands, n, lo, hi);
}

long long run_sweep(const std::vector<Op>& ops, int strands, int n,
                    long long budget, int workers, bool diagonal) {
    check_ops(ops, strands, n);
    if (diagonal && strands % 2 != 0)
        throw domain_error("diagonal sweep needs an even strand count");
    int digits = diagonal ? strands / 2 : strands;
    long long total = 1;
    for (int i = 0; i < digits; ++i) {
        total *= n;
        if (total > budget)
            throw capacity_error(
                "sweep needs " + std::to_string(ipow(n, digits)) +
                " tuple evaluations, over the budget of " +
                std::to_string(budget) +
                "; raise --budget or split the run with --workers");
    }
    if (workers <= 1 || total < 2 * workers)
        return run_range(ops, strands, n, 0, total, diagonal);
    // contiguous chunks of the index range; the per-chunk counts are summed
    // in chunk order so any worker count gives the same answer
    std::vector<long long> partial(workers, 0);
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
        long long lo = total * w / workers, hi = total * (w + 1) / workers;
        pool.emplace_back([&, w, lo, hi] {
            partial[w] = run_range(ops, strands, n, lo, hi, diagonal);
        });
    }
    for (auto& t : pool) t.join();
    long long sum = 0;
    for (long long p : partial) sum += p;
    return sum;
}

}  // namespace

long long count_fixed_tuples(const std::vector<Op>& ops, int strands, int n,
                             long long budget, int workers) {
    return run_sweep(ops, strands, n, budget, workers, false);
}

long long count_diagonal(const std::vector<Op>& ops, int strands, int n,
                         long long budget, int workers) {
    return run_sweep(ops, strands, n, budget, workers, true);
}

long long count_fixed_tuples_scalar(const std::vector<Op>& ops, int strands,
                                    int n, long long lo, long long hi) {
    std::vector<int> x(strands), init(strands), tmp(strands);
    long long count = 0;
    for (long long idx = lo; idx < hi; ++idx) {
        decode(idx, strands, n, init.data());
        x = init;
        apply_scalar(ops, strands, n, x.data(), tmp.data());
        if (x == init) ++count;
    }
    return count;
}

long long count_diagonal_scalar(const std::vector<Op>& ops, int strands,
                                int n, long long lo, long long hi) {
    int half = strands / 2;
    std::vector<int> diag(half), x(strands), tmp(strands);
    long long count = 0;
    for (long long idx = lo; idx < hi; ++idx) {
        decode(idx, half, n, diag.data());
        for (int j = 0; j < half; ++j) x[2 * j] = x[2 * j + 1] = diag[j];
        apply_scalar(ops, strands, n, x.data(), tmp.data());
        bool on_diag = true;
        for (int j = 0; j < half && on_diag; ++j)
            on_diag = x[2 * j] == x[2 * j + 1];
        if (on_diag) ++count;
    }
    return count;
}

}  // namespace birack::kern
