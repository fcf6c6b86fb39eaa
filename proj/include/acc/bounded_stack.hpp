#pragma once

#include <vector>

#include "acc/counters.hpp"

namespace acc {

enum class StackStatus {
    Ok,
    Full,
    Empty,
};

// Bounded LIFO over a plain array; the top lives at index count-1. Freed
// slots are reset to 0.
struct BoundedStack {
    std::vector<int> data;
    int count = 0;
    int max = 0;

    BoundedStack() = default;
    explicit BoundedStack(int max_size)
        : data(static_cast<size_t>(max_size), 0), max(max_size) {}
};

inline StackStatus push(BoundedStack& s, int value, OpCounters* counters = nullptr) {
    if (s.count >= s.max) return StackStatus::Full;
    s.data[static_cast<size_t>(s.count)] = value;
    count_move(counters);
    s.count++;
    return StackStatus::Ok;
}

// consume=false is the read-only peek.
inline StackStatus pop(BoundedStack& s, int& out, bool consume = true,
                       OpCounters* counters = nullptr) {
    if (s.count <= 0) return StackStatus::Empty;
    out = s.data[static_cast<size_t>(s.count - 1)];
    if (consume) {
        count_move(counters);
        s.count--;
        s.data[static_cast<size_t>(s.count)] = 0;
    }
    return StackStatus::Ok;
}

} // namespace acc
