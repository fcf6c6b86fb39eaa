#pragma once

#include <cstdlib>
#include <optional>
#include <vector>

#include "acc/kernel.hpp"
#include "acc/linked_list.hpp"
#include "acc/rng.hpp"

namespace acc {

// An enemy that may clone itself once: age counts frames up to 50, then the
// clone is emitted and age parks at -1 forever.
struct Enemy {
    GameObject obj;
    int age = 0;
};

// Ages the enemy one frame; at exactly 50 it emits a copy at its own
// position with fresh jitter velocities (two draws, vx then vy) and never
// clones again. Clones start at age 0, so each may clone once itself.
inline std::optional<Enemy> age_and_clone(Enemy& e, Lcg& rng) {
    if (e.age == -1) return std::nullopt;
    e.age++;
    if (e.age != 50) return std::nullopt;
    Enemy clone;
    clone.obj = e.obj;
    clone.obj.vx = rng.next_jitter();
    clone.obj.vy = rng.next_jitter();
    clone.age = 0;
    e.age = -1;
    return clone;
}

struct Particle {
    int x = 0;
    int y = 0;
    int visibility = 0;
};

// Exactly 20 particles for the system's lifetime; dead particles are
// recycled at the source, never allocated or freed.
inline constexpr int kNumParticles = 20;

struct ParticleSystem {
    Particle particles[kNumParticles];
    GameObject source;
};

inline ParticleSystem make_particle_system(const GameObject& source, Lcg& rng) {
    ParticleSystem ps;
    ps.source = source;
    for (auto& p : ps.particles) {
        p.x = source.x;
        p.y = source.y;
        p.visibility = static_cast<int>(rng.next_range(100));
    }
    return ps;
}

// The source moves by (dx, dy); every particle wanders by an independent
// jitter pair and fades one step. A particle that fades out is relocated to
// the source and relit at 100.
inline void particle_step(ParticleSystem& ps, int dx, int dy, Lcg& rng) {
    ps.source.x += dx;
    ps.source.y += dy;
    for (auto& p : ps.particles) {
        p.x += rng.next_jitter();
        p.y += rng.next_jitter();
        p.visibility--;
        if (p.visibility <= 0) {
            p.x = ps.source.x;
            p.y = ps.source.y;
            p.visibility = 100;
        }
    }
}

// Appends a bullet at the shooter's position flying straight up. All
// bullets share the one flyweight shape.
inline void fire_bullet(const GameObject& shooter, LinkedList<GameObject>& bullets,
                        int bullet_speed, int shared_shape, int bullet_w = 8, int bullet_h = 8) {
    GameObject b;
    b.x = shooter.x;
    b.y = shooter.y;
    b.vx = 0;
    b.vy = -bullet_speed;
    b.w = bullet_w;
    b.h = bullet_h;
    b.visible = true;
    b.shape_id = shared_shape;
    b.caps = CapBullet;
    list_append(bullets, b);
}

// Every bullet moves by its velocity; only the head bullet is collision
// tested (against *enemy when given) and only the head is culled when it
// leaves the top of the screen. The hit verdict is taken before the cull.
inline bool update_bullets(LinkedList<GameObject>& bullets, const GameObject* enemy) {
    if (bullets.head == nullptr) return false;
    for (auto* n = bullets.head; n != nullptr; n = n->next) {
        n->payload.x += n->payload.vx;
        n->payload.y += n->payload.vy;
    }
    bool hit = enemy != nullptr && check_collision(bullets.head->payload, *enemy);
    if (bullets.head->payload.y < 0) list_delete(bullets, 0);
    return hit;
}

enum class Key {
    Left,
    Right,
    Up,
    Down,
    Space,
    Escape,
};

struct InputEvent {
    int frame = 0;
    Key key = Key::Left;
    bool down = true;
};

struct InputFlags {
    bool left = false;
    bool right = false;
    bool up = false;
    bool down = false;
};

// Movement scheme of the whole world: TopDown is four-directional on a
// single screen; Scroller is horizontal plus jump with a following camera.
enum class SimMode {
    TopDown,
    Scroller,
};

// Effect identifiers stamped on render commands; the imaging layer maps
// them to concrete effect parameters.
enum EffectId : int {
    FxNone = 0,
    FxGray = 1,
    FxBlur = 2,
    FxBrightUp = 3,
    FxBrightDown = 4,
    FxFill = 5,
};

struct RenderCommand {
    int shape_id = 0;
    int screen_x = 0;
    int screen_y = 0;
    int effect = FxNone;

    bool operator==(const RenderCommand&) const = default;
};

struct World {
    GameObject player;
    JumpState jump;
    AnimationState anim;
    std::vector<Enemy> enemies;
    GameObject prize;
    LinkedList<GameObject> player_bullets;
    GameObject enemy_bullet; // single reusable slot; visible doubles as active
    int offset = 0;
    int ground_level = 380;
    int screen_w = 640;
    int screen_h = 480;
    int world_w = 640; // map width; patrol enemies bounce off [0, world_w]
    int frame_count = 0;
    Lcg rng;
    bool quit = false;
    bool win = false;
    InputFlags flags;
    SimMode mode = SimMode::TopDown;
    int player_speed = 3;
    int bullet_speed = 4;
    int player_bullet_shape = 0;
    int player_effect = FxNone;
    int enemy_effect = FxNone;
    int prize_effect = FxNone;
    int bullet_effect = FxNone;
};

namespace detail {

inline int to_screen_x(const World& w, int world_x) {
    return w.mode == SimMode::Scroller ? world_x - w.offset : world_x;
}

} // namespace detail

// Advances the world exactly one frame. Every event must be tagged with the
// world's current frame; a stray tag aborts the step untouched. The phases
// run in a fixed order: input edges, player movement, enemies, player
// bullets, collisions (prize before any losing check, so a simultaneous
// prize and enemy touch is a win), camera/frame bookkeeping, and finally
// the painter-ordered render commands.
inline bool step_frame(World& w, const std::vector<InputEvent>& events,
                       std::vector<RenderCommand>& out) {
    out.clear();
    for (const auto& e : events)
        if (e.frame != w.frame_count) return false;

    // input edges
    for (const auto& e : events) {
        switch (e.key) {
        case Key::Left:
            w.flags.left = e.down;
            break;
        case Key::Right:
            w.flags.right = e.down;
            break;
        case Key::Up:
            w.flags.up = e.down;
            break;
        case Key::Down:
            w.flags.down = e.down;
            break;
        case Key::Space:
            if (e.down) {
                fire_bullet(w.player, w.player_bullets, w.bullet_speed, w.player_bullet_shape);
                if (w.mode == SimMode::Scroller && !w.jump.jumping)
                    start_jump(w.jump, w.player.y);
            }
            break;
        case Key::Escape:
            if (e.down) w.quit = true;
            break;
        }
    }

    // player movement
    w.player.vx = (w.flags.right ? w.player_speed : 0) - (w.flags.left ? w.player_speed : 0);
    if (w.mode == SimMode::TopDown)
        w.player.vy = (w.flags.down ? w.player_speed : 0) - (w.flags.up ? w.player_speed : 0);
    else
        w.player.vy = 0;
    w.player.x += w.player.vx;
    w.player.y += w.player.vy;
    if (w.mode == SimMode::Scroller && w.jump.jumping) {
        if (auto y = jump_step(w.jump, w.ground_level - w.player.h)) w.player.y = *y;
    }
    if (w.player.has(CapAnimated)) {
        if (w.player.vx != 0) advance_animation(w.anim);
        w.player.shape_id = current_shape(w.anim);
    }

    // enemies: move, then age; clones join the list after the sweep and act
    // from the next frame on
    std::vector<Enemy> clones;
    for (auto& e : w.enemies) {
        if (!e.obj.visible) continue;
        if (e.obj.has(CapJitter)) {
            e.obj.x += w.rng.next_jitter();
            e.obj.y += w.rng.next_jitter();
        } else if (e.obj.has(CapPatrol)) {
            e.obj.x += e.obj.vx;
            if (e.obj.x < 0 || e.obj.x > w.world_w) e.obj.vx *= -1;
        }
        if (e.obj.has(CapCloner)) {
            if (auto clone = age_and_clone(e, w.rng)) clones.push_back(*clone);
        }
    }
    for (auto& c : clones) w.enemies.push_back(c);

    // the single enemy bullet: an inactive slot refires off the first
    // aligned visible enemy; an active one falls and expires off-screen
    if (!w.enemy_bullet.visible) {
        for (const auto& e : w.enemies) {
            if (e.obj.visible && std::abs(e.obj.x - w.player.x) < 5) {
                w.enemy_bullet.x = e.obj.x;
                w.enemy_bullet.y = e.obj.y;
                w.enemy_bullet.vy = w.bullet_speed;
                w.enemy_bullet.visible = true;
                break;
            }
        }
    } else {
        w.enemy_bullet.y += w.enemy_bullet.vy;
        if (w.enemy_bullet.y > w.screen_h) w.enemy_bullet.visible = false;
    }

    // player bullets against the first visible enemy
    Enemy* target = nullptr;
    for (auto& e : w.enemies) {
        if (e.obj.visible) {
            target = &e;
            break;
        }
    }
    bool hit = update_bullets(w.player_bullets, target ? &target->obj : nullptr);
    if (hit && target != nullptr) {
        target->obj.visible = false;
        w.win = true;
        w.quit = true;
    }

    // collisions: the prize check runs first and a win shields the frame
    // from the losing checks
    if (w.prize.visible && check_collision(w.player, w.prize)) {
        w.win = true;
        w.quit = true;
        w.prize.visible = false;
    } else {
        for (const auto& e : w.enemies) {
            if (e.obj.visible && check_collision(w.player, e.obj)) {
                w.win = false;
                w.quit = true;
                break;
            }
        }
        if (w.enemy_bullet.visible && check_collision(w.player, w.enemy_bullet)) {
            w.win = false;
            w.quit = true;
        }
    }

    w.offset = camera_offset(w.player.x, w.screen_w, w.player.w);
    w.frame_count++;

    // painter order: prize, enemy bullet, enemies, player, player bullets
    if (w.prize.visible)
        out.push_back({w.prize.shape_id, detail::to_screen_x(w, w.prize.x), w.prize.y,
                       w.prize_effect});
    if (w.enemy_bullet.visible)
        out.push_back({w.enemy_bullet.shape_id, detail::to_screen_x(w, w.enemy_bullet.x),
                       w.enemy_bullet.y, w.bullet_effect});
    for (const auto& e : w.enemies)
        if (e.obj.visible)
            out.push_back({e.obj.shape_id, detail::to_screen_x(w, e.obj.x), e.obj.y,
                           w.enemy_effect});
    if (w.player.visible)
        out.push_back({w.player.shape_id, detail::to_screen_x(w, w.player.x), w.player.y,
                       w.player_effect});
    for (auto* n = w.player_bullets.head; n != nullptr; n = n->next)
        if (n->payload.visible)
            out.push_back({n->payload.shape_id, detail::to_screen_x(w, n->payload.x),
                           n->payload.y, w.bullet_effect});
    return true;
}

} // namespace acc
