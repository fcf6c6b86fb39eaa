#pragma once

#include <vector>

#include "acc/counters.hpp"

namespace acc {

enum class QueueStatus {
    Ok,
    Full,
    Empty,
};

// Bounded FIFO over a plain array: the front is always index 0 and dequeue
// shifts the survivors down one slot. Freed slots are reset to 0.
struct BoundedQueue {
    std::vector<int> data;
    int count = 0;
    int max = 0;

    BoundedQueue() = default;
    explicit BoundedQueue(int max_size)
        : data(static_cast<size_t>(max_size), 0), max(max_size) {}
};

inline QueueStatus enqueue(BoundedQueue& q, int value, OpCounters* counters = nullptr) {
    if (q.count >= q.max) return QueueStatus::Full;
    q.data[static_cast<size_t>(q.count)] = value;
    count_move(counters);
    q.count++;
    return QueueStatus::Ok;
}

// consume=false is the read-only peek; the queue is untouched either way on
// failure.
inline QueueStatus dequeue(BoundedQueue& q, int& out, bool consume = true,
                           OpCounters* counters = nullptr) {
    if (q.count <= 0) return QueueStatus::Empty;
    out = q.data[0];
    if (consume) {
        for (int i = 1; i < q.count; i++) {
            q.data[static_cast<size_t>(i - 1)] = q.data[static_cast<size_t>(i)];
            count_move(counters);
        }
        q.count--;
        q.data[static_cast<size_t>(q.count)] = 0;
    }
    return QueueStatus::Ok;
}

} // namespace acc
