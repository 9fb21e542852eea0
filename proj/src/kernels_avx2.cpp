// AVX2 variants of the sweep kernels: eight tuples ride in the int32 lanes
// of one __m256i per strand, pair ops become two gathers into the lookup
// tables, and routes shuffle the per-strand registers.  This file is the
// only one compiled with -mavx2; everything else reaches it through the
// dispatcher in kernels.cpp.

#include "birack/kernels.hpp"

#include "birack/core.hpp"

#ifdef BIRACK_BUILD_AVX2
#include <immintrin.h>
#endif

namespace birack::kern {

bool avx2_compiled() {
#ifdef BIRACK_BUILD_AVX2
    return true;
#else
    return false;
#endif
}

#ifndef BIRACK_BUILD_AVX2

long long count_fixed_tuples_avx2(const std::vector<Op>&, int, int, long long,
                                  long long) {
    throw capacity_error("AVX2 kernel not compiled in");
}

long long count_diagonal_avx2(const std::vector<Op>&, int, int, long long,
                              long long) {
    throw capacity_error("AVX2 kernel not compiled in");
}

#else

namespace {

// named wrapper so std::vector carries the 32-byte alignment as part of the
// element type (a bare __m256i template argument drops it with a warning)
struct Lanes {
    __m256i v;
};

struct LaneState {
    std::vector<Lanes> reg;
    explicit LaneState(int strands) : reg(strands) {}
};

// load eight consecutive linear indices decoded per strand; strand 0 holds
// the most significant digit, matching the scalar kernel
inline void decode_block(long long base, int digits, int n, LaneState& st) {
    alignas(32) int32_t buf[8];
    for (int s = digits - 1; s >= 0; --s) {
        for (int lane = 0; lane < 8; ++lane) {
            long long idx = base + lane;
            for (int k = digits - 1; k > s; --k) idx /= n;
            buf[lane] = (int32_t)(idx % n);
        }
        st.reg[s].v = _mm256_load_si256((const __m256i*)buf);
    }
}

inline void apply_ops(const std::vector<Op>& ops, int strands, int n,
                      LaneState& st, LaneState& tmp) {
    const __m256i vn = _mm256_set1_epi32(n);
    for (const Op& op : ops) {
        if (op.kind == Op::Kind::pair) {
            __m256i idx = _mm256_add_epi32(
                _mm256_mullo_epi32(st.reg[op.pos].v, vn), st.reg[op.pos + 1].v);
            __m256i a = _mm256_i32gather_epi32(op.table->out_a.data(), idx, 4);
            __m256i b = _mm256_i32gather_epi32(op.table->out_b.data(), idx, 4);
            st.reg[op.pos].v = a;
            st.reg[op.pos + 1].v = b;
        } else {
            for (int p = 0; p < strands; ++p) tmp.reg[op.route[p]] = st.reg[p];
            std::swap(st.reg, tmp.reg);
        }
    }
}

inline int popcount_mask(__m256i eq_acc) {
    int mask = _mm256_movemask_ps(_mm256_castsi256_ps(eq_acc));
    return __builtin_popcount(mask & 0xff);
}

}  // namespace

long long count_fixed_tuples_avx2(const std::vector<Op>& ops, int strands,
                                  int n, long long lo, long long hi) {
    long long count = 0;
    LaneState st(strands), init(strands), tmp(strands);
    long long idx = lo;
    for (; idx + 8 <= hi; idx += 8) {
        decode_block(idx, strands, n, init);
        st.reg = init.reg;
        apply_ops(ops, strands, n, st, tmp);
        __m256i acc = _mm256_set1_epi32(-1);
        for (int s = 0; s < strands; ++s)
            acc = _mm256_and_si256(acc,
                                   _mm256_cmpeq_epi32(st.reg[s].v, init.reg[s].v));
        count += popcount_mask(acc);
    }
    if (idx < hi) count += count_fixed_tuples_scalar(ops, strands, n, idx, hi);
    return count;
}

long long count_diagonal_avx2(const std::vector<Op>& ops, int strands, int n,
                              long long lo, long long hi) {
    int half = strands / 2;
    long long count = 0;
    LaneState st(strands), diag(half), tmp(strands);
    long long idx = lo;
    for (; idx + 8 <= hi; idx += 8) {
        decode_block(idx, half, n, diag);
        for (int j = 0; j < half; ++j)
            st.reg[2 * j] = st.reg[2 * j + 1] = diag.reg[j];
        apply_ops(ops, strands, n, st, tmp);
        __m256i acc = _mm256_set1_epi32(-1);
        for (int j = 0; j < half; ++j)
            acc = _mm256_and_si256(
                acc, _mm256_cmpeq_epi32(st.reg[2 * j].v, st.reg[2 * j + 1].v));
        count += popcount_mask(acc);
    }
    if (idx < hi) count += count_diagonal_scalar(ops, strands, n, idx, hi);
    return count;
}

#endif  // BIRACK_BUILD_AVX2

}  // namespace birack::kern
