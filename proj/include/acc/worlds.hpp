#pragma once

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <string>
#include <vector>

#include "acc/image.hpp"
#include "acc/trace.hpp"
#include "acc/world.hpp"

namespace acc {

// Sprite identifiers for the built-in worlds. The three player shapes are
// the walk-cycle frames.
enum ShapeId : int {
    ShapePlayer0 = 1,
    ShapePlayer1 = 2,
    ShapePlayer2 = 3,
    ShapeEnemy = 4,
    ShapePrize = 5,
    ShapePlayerBullet = 6,
    ShapeEnemyBullet = 7,
};

inline constexpr int kPlayerW = 48;
inline constexpr int kPlayerH = 48;
inline constexpr int kEnemyW = 37;
inline constexpr int kEnemyH = 37;

namespace detail {

// Flat-color sprite with a darker border; the mask color is white, so none
// of the art may use pure white.
inline PixelBuffer solid_sprite(int w, int h, Color body, Color border) {
    PixelBuffer buf(w, h, body);
    for (int x = 0; x < w; x++) {
        buf.at(x, 0) = border;
        buf.at(x, h - 1) = border;
    }
    for (int y = 0; y < h; y++) {
        buf.at(0, y) = border;
        buf.at(w - 1, y) = border;
    }
    buf.mask = white_mask();
    return buf;
}

} // namespace detail

// Procedural art so the repository ships no binary assets. The player
// frames differ by the row of their highlight stripe, which makes the walk
// cycle visible in dumps.
inline SpriteRegistry make_default_sprites() {
    SpriteRegistry reg;
    for (int frame = 0; frame < 3; frame++) {
        PixelBuffer p = detail::solid_sprite(kPlayerW, kPlayerH, {40, 70, 200, 255},
                                             {20, 35, 100, 255});
        int stripe_top = 8 + frame * 12;
        for (int y = stripe_top; y < stripe_top + 5; y++)
            for (int x = 4; x < kPlayerW - 4; x++) p.at(x, y) = {200, 220, 240, 255};
        reg.sprites[ShapePlayer0 + frame] = p;
    }
    reg.sprites[ShapeEnemy] =
        detail::solid_sprite(kEnemyW, kEnemyH, {200, 50, 40, 255}, {110, 20, 15, 255});
    reg.sprites[ShapePrize] =
        detail::solid_sprite(kEnemyW, kEnemyH, {230, 200, 40, 255}, {140, 115, 15, 255});
    reg.sprites[ShapePlayerBullet] =
        detail::solid_sprite(8, 8, {200, 200, 200, 255}, {120, 120, 120, 255});
    reg.sprites[ShapeEnemyBullet] =
        detail::solid_sprite(8, 8, {90, 80, 110, 255}, {45, 40, 60, 255});
    return reg;
}

// Single-screen grass field for the top-down chase.
inline PixelBuffer make_topdown_map() { return PixelBuffer(640, 480, {40, 120, 40, 255}); }

// Two-screen side map: sky above the ground line, earth below.
inline PixelBuffer make_scroller_map(int ground_level = 380) {
    PixelBuffer map(1280, 480, {120, 180, 255, 255});
    for (int y = ground_level; y < map.height; y++)
        for (int x = 0; x < map.width; x++) map.at(x, y) = {90, 60, 30, 255};
    return map;
}

namespace detail {

inline void apply_world_config(World& w, const Config& cfg) {
    w.player_speed = config_int(cfg, "player_speed", w.player_speed);
    w.bullet_speed = config_int(cfg, "bullet_speed", w.bullet_speed);
    w.ground_level = config_int(cfg, "ground_level", w.ground_level);
    auto effect = [&](const char* key, int fallback) {
        auto it = cfg.find(key);
        return it == cfg.end() ? fallback : effect_id_from_name(it->second);
    };
    w.player_effect = effect("player_effect", w.player_effect);
    w.enemy_effect = effect("enemy_effect", w.enemy_effect);
    w.prize_effect = effect("prize_effect", w.prize_effect);
    w.bullet_effect = effect("bullet_effect", w.bullet_effect);
}

} // namespace detail

// The chase on one still screen: the player starts in the corner, a
// wandering cloner enemy guards the middle, the prize sits beyond it.
inline World make_topdown_world(std::uint32_t seed, const Config& cfg = {}) {
    World w;
    w.mode = SimMode::TopDown;
    w.rng = Lcg(seed);
    w.world_w = 640;

    w.player.x = 0;
    w.player.y = 0;
    w.player.w = kPlayerW;
    w.player.h = kPlayerH;
    w.player.shape_id = ShapePlayer0;
    w.player.caps = CapPlayer;
    w.anim.frame_shape_ids = {ShapePlayer0};
    w.player_bullet_shape = ShapePlayerBullet;

    Enemy e;
    e.obj.x = 100;
    e.obj.y = 180;
    e.obj.w = kEnemyW;
    e.obj.h = kEnemyH;
    e.obj.shape_id = ShapeEnemy;
    e.obj.caps = CapEnemy | CapJitter | CapCloner;
    e.age = 0;
    w.enemies.push_back(e);

    w.prize.x = 200;
    w.prize.y = 200;
    w.prize.w = kEnemyW;
    w.prize.h = kEnemyH;
    w.prize.shape_id = ShapePrize;
    w.prize.caps = CapPrize;

    w.enemy_bullet.w = 8;
    w.enemy_bullet.h = 8;
    w.enemy_bullet.shape_id = ShapeEnemyBullet;
    w.enemy_bullet.visible = false;
    w.enemy_bullet.caps = CapBullet;

    detail::apply_world_config(w, cfg);
    return w;
}

// The side-scrolling walk: animated player on the ground line, a patrolling
// enemy in the way, the prize on the far screen.
inline World make_scroller_world(std::uint32_t seed, const Config& cfg = {}) {
    World w;
    w.mode = SimMode::Scroller;
    w.rng = Lcg(seed);
    w.world_w = 1280;
    w.ground_level = config_int(cfg, "ground_level", 380);

    w.player.w = kPlayerW;
    w.player.h = kPlayerH;
    w.player.x = w.screen_w / 2 - kPlayerW / 2;
    w.player.y = w.ground_level - kPlayerH;
    w.player.shape_id = ShapePlayer0;
    w.player.caps = CapPlayer | CapAnimated;
    w.anim.frame_shape_ids = {ShapePlayer0, ShapePlayer1, ShapePlayer2};
    w.player_bullet_shape = ShapePlayerBullet;

    Enemy e;
    e.obj.w = kEnemyW;
    e.obj.h = kEnemyH;
    e.obj.x = 480;
    e.obj.y = w.ground_level - kEnemyH;
    e.obj.vx = config_int(cfg, "enemy_speed", 2);
    e.obj.shape_id = ShapeEnemy;
    e.obj.caps = CapEnemy | CapPatrol;
    e.age = -1;
    w.enemies.push_back(e);

    w.prize.w = kEnemyW;
    w.prize.h = kEnemyH;
    w.prize.x = 960;
    w.prize.y = w.ground_level - kEnemyH;
    w.prize.shape_id = ShapePrize;
    w.prize.caps = CapPrize;

    w.enemy_bullet.w = 8;
    w.enemy_bullet.h = 8;
    w.enemy_bullet.shape_id = ShapeEnemyBullet;
    w.enemy_bullet.visible = false;
    w.enemy_bullet.caps = CapBullet;

    w.offset = camera_offset(w.player.x, w.screen_w, w.player.w);
    detail::apply_world_config(w, cfg);
    return w;
}

struct SimSummary {
    int frame_count = 0;
    bool quit = false;
    bool win = false;
    int player_x = 0;
    int player_y = 0;
    int enemy_count = 0;
    std::uint64_t digest = 0;
};

// Steps the world through the trace for at most `frames` frames, stopping
// early when the world quits (the loop is the book's while-not-quit bounded
// by the frame budget). Every frame is rendered and folded into the digest;
// dump_dir, when nonempty, receives the frames as frame_%05d.ppm.
inline bool run_sim_trace(World& w, const std::vector<InputEvent>& trace, int frames,
                          const SpriteRegistry& registry, const PixelBuffer& map,
                          const std::map<int, EffectSpec>& effects, const std::string& dump_dir,
                          SimSummary& out, std::string& error) {
    for (const auto& e : trace) {
        if (e.frame >= frames) {
            error = "trace event at frame " + std::to_string(e.frame) +
                    " is outside the " + std::to_string(frames) + "-frame budget";
            return false;
        }
    }
    if (!dump_dir.empty()) {
        std::error_code ec;
        std::filesystem::create_directories(dump_dir, ec);
        if (ec) {
            error = "cannot create dump directory " + dump_dir;
            return false;
        }
    }

    std::uint64_t digest = 14695981039346656037ull;
    size_t cursor = 0;
    std::vector<RenderCommand> commands;
    for (int frame = 0; frame < frames && !w.quit; frame++) {
        std::vector<InputEvent> todays;
        while (cursor < trace.size() && trace[cursor].frame == frame) {
            todays.push_back(trace[cursor]);
            cursor++;
        }
        if (!step_frame(w, todays, commands)) {
            error = "trace event tagged with the wrong frame";
            return false;
        }

        PixelBuffer screen(w.screen_w, w.screen_h);
        int map_x = w.mode == SimMode::Scroller ? -w.offset : 0;
        blit(screen, map, map_x, 0, false);
        PixelBuffer rendered;
        if (!render_frame(commands, registry, screen, effects, rendered)) {
            error = "render command referenced an unknown sprite";
            return false;
        }
        std::vector<std::uint8_t> bytes = encode_ppm(rendered);
        digest = fnv1a64(bytes.data(), bytes.size(), digest);

        if (!dump_dir.empty()) {
            char name[32];
            std::snprintf(name, sizeof(name), "frame_%05d.ppm", frame);
            std::filesystem::path path = std::filesystem::path(dump_dir) / name;
            std::ofstream f(path, std::ios::binary);
            f.write(reinterpret_cast<const char*>(bytes.data()),
                    static_cast<std::streamsize>(bytes.size()));
            if (!f) {
                error = "cannot write " + path.string();
                return false;
            }
        }
    }

    out.frame_count = w.frame_count;
    out.quit = w.quit;
    out.win = w.win;
    out.player_x = w.player.x;
    out.player_y = w.player.y;
    out.enemy_count = static_cast<int>(w.enemies.size());
    out.digest = digest;
    return true;
}

} // namespace acc
