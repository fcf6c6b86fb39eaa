#pragma once

#include <chrono>
#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "acc/algorithms.hpp"
#include "acc/bounded_queue.hpp"
#include "acc/bounded_stack.hpp"
#include "acc/counters.hpp"
#include "acc/rng.hpp"

namespace acc {

// One CSV row. comparisons/moves are the maximum observed for a single
// operation across the reps, so analytic bounds (binary search <=
// floor(log2 n) + 2, linear scan <= n) can be checked against the row
// directly. Only nanos is wall-clock and may vary run to run.
struct BenchRow {
    std::string suite;
    std::string op;
    int n = 0;
    int reps = 0;
    unsigned long long comparisons = 0;
    unsigned long long moves = 0;
    unsigned long long nanos = 0;
};

namespace detail {

inline std::vector<int> random_values(Lcg& rng, int n, int spread) {
    std::vector<int> v;
    v.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; i++) v.push_back(static_cast<int>(rng.next_range(
        static_cast<std::uint32_t>(spread))));
    return v;
}

inline unsigned long long elapsed_nanos(std::chrono::steady_clock::time_point start) {
    auto end = std::chrono::steady_clock::now();
    return static_cast<unsigned long long>(
        std::chrono::duration_cast<std::chrono::nanoseconds>(end - start).count());
}

inline void fold_max(BenchRow& row, const OpCounters& c) {
    if (c.comparisons > row.comparisons) row.comparisons = c.comparisons;
    if (c.moves > row.moves) row.moves = c.moves;
}

} // namespace detail

// search: per size, `reps` random-target queries against one sorted array,
// one row for the linear scan and one for binary search.
inline std::vector<BenchRow> bench_search(const std::vector<int>& sizes, int reps,
                                          std::uint32_t seed) {
    std::vector<BenchRow> rows;
    Lcg rng(seed);
    for (int n : sizes) {
        std::vector<int> data = detail::random_values(rng, n, 4 * n + 16);
        data = sort_descending(data, SortStrategy::InPlace);
        std::vector<int> ascending(data.rbegin(), data.rend());
        std::vector<int> targets;
        for (int r = 0; r < reps; r++)
            targets.push_back(static_cast<int>(rng.next_range(
                static_cast<std::uint32_t>(4 * n + 16))));

        BenchRow linear{"search", "linear_search", n, reps, 0, 0, 0};
        auto t0 = std::chrono::steady_clock::now();
        for (int target : targets) {
            OpCounters c;
            (void)linear_search(ascending, target, &c);
            detail::fold_max(linear, c);
        }
        linear.nanos = detail::elapsed_nanos(t0);
        rows.push_back(linear);

        BenchRow binary{"search", "binary_search", n, reps, 0, 0, 0};
        t0 = std::chrono::steady_clock::now();
        for (int target : targets) {
            OpCounters c;
            (void)binary_search(ascending, target, &c);
            detail::fold_max(binary, c);
        }
        binary.nanos = detail::elapsed_nanos(t0);
        rows.push_back(binary);
    }
    return rows;
}

// sort: per size, `reps` fresh random arrays sorted by both strategies.
inline std::vector<BenchRow> bench_sort(const std::vector<int>& sizes, int reps,
                                        std::uint32_t seed) {
    std::vector<BenchRow> rows;
    Lcg rng(seed);
    for (int n : sizes) {
        std::vector<std::vector<int>> inputs;
        for (int r = 0; r < reps; r++) inputs.push_back(detail::random_values(rng, n, 1000));

        BenchRow extract{"sort", "extract_max", n, reps, 0, 0, 0};
        auto t0 = std::chrono::steady_clock::now();
        for (const auto& input : inputs) {
            OpCounters c;
            (void)sort_descending(input, SortStrategy::ExtractMax, &c);
            detail::fold_max(extract, c);
        }
        extract.nanos = detail::elapsed_nanos(t0);
        rows.push_back(extract);

        BenchRow inplace{"sort", "in_place", n, reps, 0, 0, 0};
        t0 = std::chrono::steady_clock::now();
        for (const auto& input : inputs) {
            OpCounters c;
            (void)sort_descending(input, SortStrategy::InPlace, &c);
            detail::fold_max(inplace, c);
        }
        inplace.nanos = detail::elapsed_nanos(t0);
        rows.push_back(inplace);
    }
    return rows;
}

// containers: per size, fill-then-drain cycles. The queue row exposes the
// shift-down cost of dequeueing from a front-always-zero array; the stack
// row stays flat.
inline std::vector<BenchRow> bench_containers(const std::vector<int>& sizes, int reps,
                                              std::uint32_t seed) {
    std::vector<BenchRow> rows;
    Lcg rng(seed);
    for (int n : sizes) {
        std::vector<int> values = detail::random_values(rng, n, 1000);

        BenchRow qrow{"containers", "enqueue_dequeue", n, reps, 0, 0, 0};
        auto t0 = std::chrono::steady_clock::now();
        for (int r = 0; r < reps; r++) {
            BoundedQueue q(n);
            for (int v : values) {
                OpCounters c;
                enqueue(q, v, &c);
                detail::fold_max(qrow, c);
            }
            int got = 0;
            for (int i = 0; i < n; i++) {
                OpCounters c;
                dequeue(q, got, true, &c);
                detail::fold_max(qrow, c);
            }
        }
        qrow.nanos = detail::elapsed_nanos(t0);
        rows.push_back(qrow);

        BenchRow srow{"containers", "push_pop", n, reps, 0, 0, 0};
        t0 = std::chrono::steady_clock::now();
        for (int r = 0; r < reps; r++) {
            BoundedStack s(n);
            for (int v : values) {
                OpCounters c;
                push(s, v, &c);
                detail::fold_max(srow, c);
            }
            int got = 0;
            for (int i = 0; i < n; i++) {
                OpCounters c;
                pop(s, got, true, &c);
                detail::fold_max(srow, c);
            }
        }
        srow.nanos = detail::elapsed_nanos(t0);
        rows.push_back(srow);
    }
    return rows;
}

inline std::vector<BenchRow> run_bench(const std::string& suite, const std::vector<int>& sizes,
                                       int reps, std::uint32_t seed) {
    if (suite == "search") return bench_search(sizes, reps, seed);
    if (suite == "sort") return bench_sort(sizes, reps, seed);
    if (suite == "containers") return bench_containers(sizes, reps, seed);
    return {};
}

inline std::string bench_csv(const std::vector<BenchRow>& rows) {
    std::ostringstream os;
    os << "suite,op,n,reps,comparisons,moves,nanos\n";
    for (const auto& r : rows)
        os << r.suite << "," << r.op << "," << r.n << "," << r.reps << "," << r.comparisons
           << "," << r.moves << "," << r.nanos << "\n";
    return os.str();
}

} // namespace acc
