#pragma once

#include <cmath>
#include <cstdlib>
#include <optional>
#include <vector>

namespace acc {

// World-coordinate sprite-sized thing. Capabilities say how the stepper
// treats it; they replace a class hierarchy with flags.
enum Capability : unsigned {
    CapAnimated = 1u << 0,
    CapCloner = 1u << 1,
    CapBullet = 1u << 2,
    CapPlayer = 1u << 3,
    CapEnemy = 1u << 4,
    CapPrize = 1u << 5,
    CapJitter = 1u << 6, // wanders by a fresh jitter pair each frame
    CapPatrol = 1u << 7, // moves by vx and bounces off the world edges
};

struct GameObject {
    int x = 0;
    int y = 0;
    int vx = 0;
    int vy = 0;
    int w = 0;
    int h = 0;
    bool visible = true;
    int shape_id = 0;
    unsigned caps = 0;

    bool has(Capability c) const { return (caps & c) != 0; }
};

// Per-axis pursuit step: move speed pixels toward the target on each axis
// independently; an axis already at the target holds (stepping away on an
// equal axis is the oscillation the strict else would cause).
inline void move_toward(GameObject& obj, int target_x, int target_y, int speed) {
    if (obj.x < target_x)
        obj.x += speed;
    else if (obj.x > target_x)
        obj.x -= speed;
    if (obj.y < target_y)
        obj.y += speed;
    else if (obj.y > target_y)
        obj.y -= speed;
}

inline double distance(const GameObject& a, const GameObject& b) {
    double dx = static_cast<double>(a.x) - static_cast<double>(b.x);
    double dy = static_cast<double>(a.y) - static_cast<double>(b.y);
    return std::sqrt(dx * dx + dy * dy);
}

// Proximity collision: both axis deltas strictly under the threshold.
inline bool check_collision(const GameObject& a, const GameObject& b, int threshold = 10) {
    return std::abs(a.x - b.x) < threshold && std::abs(a.y - b.y) < threshold;
}

// Point-in-box with strict inequalities: points on the border are outside.
inline bool aabb_contains(int px, int py, const GameObject& box) {
    return px > box.x && px < box.x + box.w && py > box.y && py < box.y + box.h;
}

enum class GuardState {
    Walk,
    Watch,
    Attack,
};

// Distance-triggered guard behavior; the thresholds are half-open so every
// distance maps to exactly one state.
inline GuardState guard_fsm(double dist) {
    if (dist > 200.0) return GuardState::Walk;
    if (dist > 100.0) return GuardState::Watch;
    return GuardState::Attack;
}

// Ballistic jump driven by elapsed frames, not velocity integration: each
// step evaluates y0 + v0*t + g*t*t/2 with truncating division and lands the
// first time the candidate passes below ground.
struct JumpState {
    int y0 = 0;
    int v0 = 0;
    int t = 0;
    bool jumping = false;
};

inline void start_jump(JumpState& j, int current_y, int v0 = -25) {
    j.jumping = true;
    j.y0 = current_y;
    j.v0 = v0;
    j.t = 0;
}

// Returns the new y, or nothing when called while not jumping.
inline std::optional<int> jump_step(JumpState& j, int ground, int g = 1) {
    if (!j.jumping) return std::nullopt;
    int candidate = j.y0 + j.v0 * j.t + g * j.t * j.t / 2;
    int new_y;
    if (candidate > ground) {
        new_y = ground;
        j.jumping = false;
    } else {
        new_y = candidate;
    }
    j.t++;
    return new_y;
}

// Horizontal camera displacement from the screen-centered start; screen x of
// a world point is x - offset.
inline int camera_offset(int player_x, int screen_w, int player_w) {
    return player_x - (screen_w / 2 - player_w / 2);
}

struct AnimationState {
    std::vector<int> frame_shape_ids;
    int current_frame = 0;
};

inline void advance_animation(AnimationState& a) {
    if (a.frame_shape_ids.empty()) return;
    a.current_frame++;
    if (a.current_frame == static_cast<int>(a.frame_shape_ids.size())) a.current_frame = 0;
}

inline int current_shape(const AnimationState& a) {
    if (a.frame_shape_ids.empty()) return 0;
    return a.frame_shape_ids[static_cast<size_t>(a.current_frame)];
}

// Per-level respawn coordinates; resetting to them discards whatever the
// object accumulated during play.
struct LevelTable {
    std::vector<int> default_x;
    std::vector<int> default_y;
};

inline LevelTable default_level_table() {
    return {{100, 120, 140, 160, 180}, {100, 120, 140, 160, 180}};
}

inline bool spawn_at_level(GameObject& obj, int level, const LevelTable& table) {
    if (level < 0 || level >= static_cast<int>(table.default_x.size()) ||
        level >= static_cast<int>(table.default_y.size()))
        return false;
    obj.x = table.default_x[static_cast<size_t>(level)];
    obj.y = table.default_y[static_cast<size_t>(level)];
    return true;
}

} // namespace acc
