#pragma once

namespace acc {

// Exact operation counts for the instrumented algorithms. A comparison is one
// element-vs-element test (a three-way probe counts once); a move is one
// element assignment, so a swap costs three.
struct OpCounters {
    unsigned long long comparisons = 0;
    unsigned long long moves = 0;

    void add_comparison(unsigned long long k = 1) { comparisons += k; }
    void add_move(unsigned long long k = 1) { moves += k; }
};

// All instrumented functions take an optional counter sink; counting is off
// when it is null.
inline void count_comparison(OpCounters* c, unsigned long long k = 1) {
    if (c) c->add_comparison(k);
}

inline void count_move(OpCounters* c, unsigned long long k = 1) {
    if (c) c->add_move(k);
}

} // namespace acc
