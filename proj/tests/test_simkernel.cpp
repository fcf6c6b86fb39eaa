#include <cstdint>
#include <set>
#include <vector>

#include "doctest.h"

#include "acc/kernel.hpp"
#include "acc/rng.hpp"
#include "acc/world.hpp"
#include "acc/worlds.hpp"

using namespace acc;

namespace {

// Wide-integer reference for the 32-bit generator: same recurrence, the
// wrap done by an explicit modulus instead of unsigned overflow.
std::uint32_t lcg_reference(std::uint32_t state) {
    std::uint64_t wide = static_cast<std::uint64_t>(state) * 1664525ull + 1013904223ull;
    return static_cast<std::uint32_t>(wide % 4294967296ull);
}

// Closed-form trajectory the stepper must reproduce sample by sample.
int jump_height(int y0, int v0, int g, int t) { return y0 + v0 * t + g * t * t / 2; }

} // namespace

TEST_CASE("generator follows the fixed recurrence") {
    CHECK(Lcg(1).next() == 1015568748u);

    Lcg rng(99);
    std::uint32_t state = 99;
    for (int i = 0; i < 1000; i++) {
        state = lcg_reference(state);
        REQUIRE(rng.next() == state);
    }
}

TEST_CASE("ranged draws use the upper state bits") {
    CHECK(Lcg(1).next_range(10) == (1015568748u >> 16) % 10);

    Lcg rng(5);
    for (int i = 0; i < 500; i++) {
        std::uint32_t v = rng.next_range(7);
        REQUIRE(v < 7);
    }
}

TEST_CASE("jitter spans exactly [-2, 2]") {
    Lcg rng(3);
    std::set<int> seen;
    for (int i = 0; i < 1000; i++) {
        int j = rng.next_jitter();
        REQUIRE(j >= -2);
        REQUIRE(j <= 2);
        seen.insert(j);
    }
    CHECK(seen.size() == 5);
}

TEST_CASE("move_toward steps each axis independently and holds on arrival") {
    GameObject chaser;
    chaser.x = 10;
    chaser.y = 20;

    move_toward(chaser, 20, 20, 3);
    CHECK(chaser.x == 13);
    CHECK(chaser.y == 20);

    move_toward(chaser, 0, 0, 3);
    CHECK(chaser.x == 10);
    CHECK(chaser.y == 17);

    chaser.x = 5;
    chaser.y = 5;
    move_toward(chaser, 5, 5, 3);
    CHECK(chaser.x == 5);
    CHECK(chaser.y == 5);
}

TEST_CASE("collision needs both axis gaps strictly under the threshold") {
    GameObject a, b;
    a.x = 100;
    a.y = 100;

    b.x = 109;
    b.y = 109;
    CHECK(check_collision(a, b));

    b.x = 110;
    CHECK_FALSE(check_collision(a, b));

    b.x = 109;
    b.y = 110;
    CHECK_FALSE(check_collision(a, b));

    b.x = 91;
    b.y = 91;
    CHECK(check_collision(a, b));

    b.x = 104;
    b.y = 96;
    CHECK(check_collision(a, b, 5));
    CHECK_FALSE(check_collision(a, b, 4));
}

TEST_CASE("bounding box containment excludes the border") {
    GameObject box;
    box.x = 10;
    box.y = 20;
    box.w = 30;
    box.h = 40;

    CHECK(aabb_contains(11, 21, box));
    CHECK(aabb_contains(39, 59, box));
    CHECK_FALSE(aabb_contains(10, 30, box));
    CHECK_FALSE(aabb_contains(40, 30, box));
    CHECK_FALSE(aabb_contains(20, 20, box));
    CHECK_FALSE(aabb_contains(20, 60, box));
}

TEST_CASE("guard state thresholds") {
    CHECK(guard_fsm(250) == GuardState::Walk);
    CHECK(guard_fsm(150) == GuardState::Watch);
    CHECK(guard_fsm(50) == GuardState::Attack);
    CHECK(guard_fsm(200) == GuardState::Watch);
    CHECK(guard_fsm(100) == GuardState::Attack);
    CHECK(guard_fsm(200.5) == GuardState::Walk);
    CHECK(guard_fsm(100.5) == GuardState::Watch);
    CHECK(guard_fsm(0) == GuardState::Attack);
}

TEST_CASE("jump follows the closed-form arc and lands past the ground") {
    JumpState j;
    CHECK_FALSE(jump_step(j, 380).has_value());

    start_jump(j, 380);
    REQUIRE(j.jumping);

    std::vector<int> ys;
    for (int t = 0; t <= 50; t++) {
        auto y = jump_step(j, 380);
        REQUIRE(y.has_value());
        REQUIRE(*y == jump_height(380, -25, 1, t));
        ys.push_back(*y);
    }
    CHECK(ys[0] == 380);
    CHECK(ys[10] == 180);
    CHECK(ys[50] == 380);
    CHECK(j.jumping);

    auto landing = jump_step(j, 380);
    REQUIRE(landing.has_value());
    CHECK(*landing == 380);
    CHECK_FALSE(j.jumping);
    CHECK(j.t == 52);
}

TEST_CASE("camera offset centers the player") {
    CHECK(camera_offset(296, 640, 48) == 0);
    CHECK(camera_offset(300, 640, 48) == 4);
    CHECK(camera_offset(0, 640, 48) == -296);
}

TEST_CASE("animation cycles through its frames") {
    AnimationState a;
    CHECK(current_shape(a) == 0);
    advance_animation(a); // empty cycle stays put

    a.frame_shape_ids = {7, 8, 9};
    CHECK(current_shape(a) == 7);
    advance_animation(a);
    CHECK(current_shape(a) == 8);
    advance_animation(a);
    CHECK(current_shape(a) == 9);
    advance_animation(a);
    CHECK(current_shape(a) == 7);
}

TEST_CASE("spawn resets to the level defaults") {
    LevelTable table = default_level_table();
    GameObject obj;
    obj.x = 999;
    obj.y = 999;

    REQUIRE(spawn_at_level(obj, 0, table));
    CHECK(obj.x == 100);
    CHECK(obj.y == 100);

    REQUIRE(spawn_at_level(obj, 4, table));
    CHECK(obj.x == 180);
    CHECK(obj.y == 180);

    CHECK_FALSE(spawn_at_level(obj, 5, table));
    CHECK_FALSE(spawn_at_level(obj, -1, table));
    CHECK(obj.x == 180);
}

TEST_CASE("a cloner clones exactly once, at age fifty") {
    Enemy e;
    e.obj.x = 40;
    e.obj.y = 60;
    Lcg rng(17);

    for (int i = 0; i < 49; i++) REQUIRE_FALSE(age_and_clone(e, rng).has_value());
    CHECK(e.age == 49);

    Lcg expect = rng;
    auto clone = age_and_clone(e, rng);
    REQUIRE(clone.has_value());
    CHECK(clone->obj.x == 40);
    CHECK(clone->obj.y == 60);
    CHECK(clone->obj.vx == expect.next_jitter());
    CHECK(clone->obj.vy == expect.next_jitter());
    CHECK(clone->age == 0);
    CHECK(e.age == -1);

    for (int i = 0; i < 100; i++) REQUIRE_FALSE(age_and_clone(e, rng).has_value());
    CHECK(e.age == -1);
}

TEST_CASE("particles fade, wander, and recycle at the source") {
    GameObject source;
    source.x = 50;
    source.y = 70;
    Lcg rng(29);

    ParticleSystem ps = make_particle_system(source, rng);
    for (const auto& p : ps.particles) {
        CHECK(p.x == 50);
        CHECK(p.y == 70);
        CHECK(p.visibility >= 0);
        CHECK(p.visibility < 100);
    }

    ps.particles[0].visibility = 1;
    particle_step(ps, 3, -2, rng);
    CHECK(ps.source.x == 53);
    CHECK(ps.source.y == 68);
    CHECK(ps.particles[0].x == 53);
    CHECK(ps.particles[0].y == 68);
    CHECK(ps.particles[0].visibility == 100);

    for (int i = 0; i < 200; i++) particle_step(ps, 0, 0, rng);
    for (const auto& p : ps.particles) {
        CHECK(p.visibility > 0);
        CHECK(p.visibility <= 100);
    }
}

TEST_CASE("bullets append at the tail and share the flyweight shape") {
    GameObject shooter;
    shooter.x = 11;
    shooter.y = 22;
    LinkedList<GameObject> bullets;

    fire_bullet(shooter, bullets, 4, 6);
    shooter.x = 33;
    fire_bullet(shooter, bullets, 4, 6);

    REQUIRE(bullets.count == 2);
    CHECK(bullets.head->payload.x == 11);
    CHECK(bullets.tail->payload.x == 33);
    CHECK(bullets.head->payload.vy == -4);
    CHECK(bullets.head->payload.shape_id == 6);
    CHECK(bullets.tail->payload.shape_id == 6);
}

TEST_CASE("bullet update moves all, tests and culls only the head") {
    LinkedList<GameObject> bullets;
    GameObject shooter;
    shooter.x = 100;
    shooter.y = 2;
    fire_bullet(shooter, bullets, 4, 6);
    shooter.y = 300;
    fire_bullet(shooter, bullets, 4, 6);

    GameObject enemy;
    enemy.x = 100;
    enemy.y = -2;

    // head moves to y=-2 onto the enemy; the verdict lands before the cull
    CHECK(update_bullets(bullets, &enemy));
    CHECK(bullets.count == 1);
    CHECK(bullets.head->payload.y == 296);

    CHECK_FALSE(update_bullets(bullets, &enemy));
    CHECK(bullets.count == 1);
    CHECK_FALSE(update_bullets(bullets, nullptr));

    LinkedList<GameObject> none;
    CHECK_FALSE(update_bullets(none, &enemy));
}

TEST_CASE("step_frame rejects a mistagged event untouched") {
    World w = make_topdown_world(1);
    World before = make_topdown_world(1);
    std::vector<RenderCommand> commands;

    CHECK_FALSE(step_frame(w, {{3, Key::Right, true}}, commands));
    CHECK(w.frame_count == before.frame_count);
    CHECK(w.player.x == before.player.x);
    CHECK(w.rng.state == before.rng.state);
    CHECK(commands.empty());
}

TEST_CASE("step_frame is deterministic for equal worlds and inputs") {
    World a = make_topdown_world(9);
    World b = make_topdown_world(9);
    std::vector<RenderCommand> ca, cb;

    for (int f = 0; f < 120; f++) {
        std::vector<InputEvent> events;
        if (f == 0) events.push_back({0, Key::Right, true});
        if (f == 30) events.push_back({30, Key::Down, true});
        REQUIRE(step_frame(a, events, ca));
        REQUIRE(step_frame(b, events, cb));
        REQUIRE(ca == cb);
        if (a.quit) break;
    }
    CHECK(a.player.x == b.player.x);
    CHECK(a.rng.state == b.rng.state);
}

TEST_CASE("held movement keys translate the player at walk speed") {
    World w = make_topdown_world(1);
    std::vector<RenderCommand> commands;

    REQUIRE(step_frame(w, {{0, Key::Right, true}}, commands));
    CHECK(w.player.x == 3);
    REQUIRE(step_frame(w, {}, commands));
    CHECK(w.player.x == 6);

    REQUIRE(step_frame(w, {{2, Key::Right, false}, {2, Key::Down, true}}, commands));
    CHECK(w.player.x == 6);
    CHECK(w.player.y == 3);
}

TEST_CASE("escape quits without winning") {
    World w = make_topdown_world(1);
    std::vector<RenderCommand> commands;
    REQUIRE(step_frame(w, {{0, Key::Escape, true}}, commands));
    CHECK(w.quit);
    CHECK_FALSE(w.win);
}

TEST_CASE("space fires a bullet from the player") {
    World w = make_topdown_world(1);
    w.player.y = 200; // clear of the top edge so the new bullet survives
    std::vector<RenderCommand> commands;
    REQUIRE(step_frame(w, {{0, Key::Space, true}}, commands));
    REQUIRE(w.player_bullets.count == 1);
    CHECK(w.player_bullets.head->payload.vy == -w.bullet_speed);
    CHECK(w.player_bullets.head->payload.y == 200 - w.bullet_speed);
}

TEST_CASE("space also starts the scroller jump") {
    World w = make_scroller_world(1);
    std::vector<RenderCommand> commands;
    int start_y = w.player.y;

    REQUIRE(step_frame(w, {{0, Key::Space, true}}, commands));
    CHECK(w.jump.jumping);
    CHECK(w.player.y == start_y); // the arc starts at its launch height

    REQUIRE(step_frame(w, {}, commands));
    CHECK(w.player.y == start_y - 25); // t=1: -25 plus a truncated 1/2
}

TEST_CASE("prize contact wins even when an enemy arrives the same frame") {
    World w = make_topdown_world(1);
    w.enemies.clear();
    Enemy e;
    e.obj.x = 300;
    e.obj.y = 300;
    e.age = -1; // never clones, and without jitter caps it stands still
    w.enemies.push_back(e);
    w.prize.x = 302;
    w.prize.y = 300;
    w.player.x = 301;
    w.player.y = 300;

    std::vector<RenderCommand> commands;
    REQUIRE(step_frame(w, {}, commands));
    CHECK(w.quit);
    CHECK(w.win);
    CHECK_FALSE(w.prize.visible);
}

TEST_CASE("enemy contact without the prize loses") {
    World w = make_topdown_world(1);
    w.enemies.clear();
    Enemy e;
    e.obj.x = 5;
    e.obj.y = 5;
    w.enemies.push_back(e);
    w.player.x = 4;
    w.player.y = 4;
    w.prize.x = 500;
    w.prize.y = 400;

    std::vector<RenderCommand> commands;
    REQUIRE(step_frame(w, {}, commands));
    CHECK(w.quit);
    CHECK_FALSE(w.win);
}

TEST_CASE("a player bullet fells the first visible enemy") {
    World w = make_topdown_world(1);
    w.enemies.clear();
    Enemy e;
    e.obj.x = 100;
    e.obj.y = 100;
    e.age = -1;
    w.enemies.push_back(e);
    w.player.x = 100;
    w.player.y = 112;
    w.prize.x = 500;
    w.prize.y = 400;

    std::vector<RenderCommand> commands;
    REQUIRE(step_frame(w, {{0, Key::Space, true}}, commands));
    // the bullet spawns at 112 and moves to 108 this same frame; 100 is
    // still 8 away on y, within the collision window
    CHECK(w.quit);
    CHECK(w.win);
    CHECK_FALSE(w.enemies[0].obj.visible);
}

TEST_CASE("the enemy bullet slot refires only when aligned and inactive") {
    World w = make_topdown_world(1);
    w.enemies.clear();
    Enemy e;
    e.obj.x = 200;
    e.obj.y = 240;
    e.age = -1;
    w.enemies.push_back(e);
    w.player.x = 240;
    w.player.y = 470;
    w.prize.x = 500;
    w.prize.y = 20;

    std::vector<RenderCommand> commands;
    REQUIRE(step_frame(w, {}, commands));
    CHECK_FALSE(w.enemy_bullet.visible);

    w.player.x = 204;
    REQUIRE(step_frame(w, {}, commands));
    REQUIRE(w.enemy_bullet.visible);
    CHECK(w.enemy_bullet.x == 200);
    CHECK(w.enemy_bullet.y == 240);
    CHECK(w.enemy_bullet.vy == w.bullet_speed);

    // step the player out of the bullet's path, then let the slot fall and
    // expire below the screen
    w.player.x = 400;
    int last_y = w.enemy_bullet.y;
    while (w.enemy_bullet.visible) {
        REQUIRE(step_frame(w, {}, commands));
        REQUIRE_FALSE(w.quit);
        if (w.enemy_bullet.visible) {
            CHECK(w.enemy_bullet.y == last_y + w.bullet_speed);
            last_y = w.enemy_bullet.y;
        }
    }
    CHECK(last_y + w.bullet_speed > w.screen_h);
}

TEST_CASE("patrol enemies bounce off the world edges") {
    World w = make_scroller_world(1);
    w.enemies[0].obj.x = w.world_w - 1;
    w.enemies[0].obj.vx = 2;
    w.prize.x = 5000; // out of reach
    std::vector<RenderCommand> commands;

    REQUIRE(step_frame(w, {}, commands));
    CHECK(w.enemies[0].obj.x == w.world_w + 1);
    CHECK(w.enemies[0].obj.vx == -2);

    REQUIRE(step_frame(w, {}, commands));
    CHECK(w.enemies[0].obj.x == w.world_w - 1);
    CHECK(w.enemies[0].obj.vx == -2);
}

TEST_CASE("a cloner world grows by one enemy at age fifty") {
    World w = make_topdown_world(1);
    std::vector<RenderCommand> commands;
    REQUIRE(w.enemies.size() == 1);

    for (int f = 0; f < 49; f++) {
        REQUIRE(step_frame(w, {}, commands));
        REQUIRE(w.enemies.size() == 1);
    }
    REQUIRE(step_frame(w, {}, commands));
    CHECK(w.enemies.size() == 2);
    CHECK(w.enemies[0].age == -1);
    CHECK(w.enemies[1].age == 0); // joined after the sweep, acts next frame
}

TEST_CASE("render commands are painter ordered and camera adjusted") {
    World w = make_scroller_world(1);
    std::vector<RenderCommand> commands;
    REQUIRE(step_frame(w, {}, commands));

    REQUIRE(commands.size() == 3);
    CHECK(commands[0].shape_id == ShapePrize);
    CHECK(commands[1].shape_id == ShapeEnemy);
    CHECK(commands[2].shape_id == w.player.shape_id);
    // scroller subtracts the camera offset
    CHECK(commands[2].screen_x == w.player.x - w.offset);
    CHECK(commands[0].screen_x == w.prize.x - w.offset);

    World t = make_topdown_world(1);
    REQUIRE(step_frame(t, {}, commands));
    bool found_player = false;
    for (const auto& c : commands) {
        if (c.shape_id == t.player.shape_id) {
            found_player = true;
            CHECK(c.screen_x == t.player.x);
        }
    }
    CHECK(found_player);
}

TEST_CASE("world factories honor the config knobs") {
    Config cfg;
    cfg["player_speed"] = "5";
    cfg["bullet_speed"] = "9";
    cfg["enemy_speed"] = "4";
    cfg["ground_level"] = "400";
    cfg["player_effect"] = "gray";

    World w = make_scroller_world(3, cfg);
    CHECK(w.player_speed == 5);
    CHECK(w.bullet_speed == 9);
    CHECK(w.ground_level == 400);
    CHECK(w.enemies[0].obj.vx == 4);
    CHECK(w.player_effect == FxGray);
    CHECK(w.player.y == 400 - kPlayerH);

    World d = make_scroller_world(3);
    CHECK(d.player_speed == 3);
    CHECK(d.bullet_speed == 4);
    CHECK(d.enemies[0].obj.vx == 2);
    CHECK(d.offset == 0);
}
