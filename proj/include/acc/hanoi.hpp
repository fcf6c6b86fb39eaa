#pragma once

#include <array>

#include "acc/bounded_stack.hpp"

namespace acc {

// Three bars holding disks 1..n (1 is the smallest); every bar is strictly
// increasing in size from the top down and the three bars always hold
// exactly the full disk set.
struct HanoiGame {
    std::array<BoundedStack, 3> bars;
    int n = 0;
};

// Bar A starts loaded n..1 bottom to top; B and C are empty.
inline HanoiGame make_hanoi(int n) {
    HanoiGame g;
    g.n = n;
    for (auto& bar : g.bars) bar = BoundedStack(n);
    for (int disk = n; disk >= 1; disk--) push(g.bars[0], disk);
    return g;
}

enum class MoveStatus {
    Ok,
    SourceEmpty,
    RuleViolation, // larger disk refused on a smaller one
    SameBar,
};

// The only mutation: move one disk from the top of one bar to another,
// enforced atomically so an illegal move cannot leave a half-done state.
inline MoveStatus move_disk(HanoiGame& g, int from, int to) {
    if (from == to) return MoveStatus::SameBar;
    int disk = 0;
    if (pop(g.bars[static_cast<size_t>(from)], disk, false) == StackStatus::Empty)
        return MoveStatus::SourceEmpty;
    int resident = 0;
    if (pop(g.bars[static_cast<size_t>(to)], resident, false) == StackStatus::Ok &&
        resident < disk)
        return MoveStatus::RuleViolation;
    pop(g.bars[static_cast<size_t>(from)], disk);
    push(g.bars[static_cast<size_t>(to)], disk);
    return MoveStatus::Ok;
}

// Won when bar C holds every disk; ordering then follows from the invariant.
inline bool is_won(const HanoiGame& g) { return g.bars[2].count == g.n; }

} // namespace acc
