#pragma once

#include <vector>

#include "acc/counters.hpp"

namespace acc {

enum class ArrayStatus {
    Ok,
    Bounds,
    Full,
};

// Fixed-capacity integer array with an occupied prefix. Slots at index >=
// length hold 0; occupancy is tracked solely by length, so the sentinel is
// cosmetic.
struct ShiftArray {
    std::vector<int> slots;
    int length = 0;

    ShiftArray() = default;
    explicit ShiftArray(int capacity) : slots(static_cast<size_t>(capacity), 0) {}

    int capacity() const { return static_cast<int>(slots.size()); }
};

enum class ShiftDir {
    Up,
    Down,
};

// Shifts slots [lo, hi] one position up (toward higher indices) or down.
// The loop runs opposite to the shift direction so no value is overwritten
// before it is copied. An empty range (lo > hi) is a no-op, not an error.
inline ArrayStatus shift(ShiftArray& arr, int lo, int hi, ShiftDir dir,
                         OpCounters* counters = nullptr) {
    if (lo > hi) return ArrayStatus::Ok;
    if (lo < 0 || hi >= arr.capacity()) return ArrayStatus::Bounds;
    if (dir == ShiftDir::Up) {
        if (hi + 1 >= arr.capacity()) return ArrayStatus::Bounds;
        for (int i = hi; i >= lo; i--) {
            arr.slots[static_cast<size_t>(i + 1)] = arr.slots[static_cast<size_t>(i)];
            count_move(counters);
        }
    } else {
        if (lo < 1) return ArrayStatus::Bounds;
        for (int i = lo; i <= hi; i++) {
            arr.slots[static_cast<size_t>(i - 1)] = arr.slots[static_cast<size_t>(i)];
            count_move(counters);
        }
    }
    return ArrayStatus::Ok;
}

inline ArrayStatus insert_at(ShiftArray& arr, int index, int value,
                             OpCounters* counters = nullptr) {
    if (arr.length >= arr.capacity()) return ArrayStatus::Full;
    if (index < 0 || index > arr.length) return ArrayStatus::Bounds;
    ArrayStatus st = shift(arr, index, arr.length - 1, ShiftDir::Up, counters);
    if (st != ArrayStatus::Ok) return st;
    arr.slots[static_cast<size_t>(index)] = value;
    count_move(counters);
    arr.length++;
    return ArrayStatus::Ok;
}

inline ArrayStatus delete_at(ShiftArray& arr, int index, OpCounters* counters = nullptr) {
    if (index < 0 || index >= arr.length) return ArrayStatus::Bounds;
    ArrayStatus st = shift(arr, index + 1, arr.length - 1, ShiftDir::Down, counters);
    if (st != ArrayStatus::Ok) return st;
    arr.length--;
    arr.slots[static_cast<size_t>(arr.length)] = 0;
    return ArrayStatus::Ok;
}

// Wraps an index into [0, n); i may have run past the end any number of
// times. n <= 0 has no valid wrap and yields -1.
inline int circular_index(long long i, int n) {
    if (n <= 0) return -1;
    long long m = i % n;
    if (m < 0) m += n;
    return static_cast<int>(m);
}

} // namespace acc
