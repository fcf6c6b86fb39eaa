#pragma once

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "acc/image.hpp"
#include "acc/world.hpp"

namespace acc {

inline std::optional<Key> key_from_name(const std::string& name) {
    if (name == "LEFT") return Key::Left;
    if (name == "RIGHT") return Key::Right;
    if (name == "UP") return Key::Up;
    if (name == "DOWN") return Key::Down;
    if (name == "SPACE") return Key::Space;
    if (name == "ESCAPE") return Key::Escape;
    return std::nullopt;
}

// Trace files are line-oriented: "# comment" or "<frame> <KEY> <DOWN|UP>",
// frames nondecreasing. Blank lines are fine. Parsing fails with a message
// naming the offending line.
inline bool parse_trace(std::istream& in, std::vector<InputEvent>& out, std::string& error) {
    out.clear();
    std::string line;
    int line_no = 0;
    int last_frame = -1;
    while (std::getline(in, line)) {
        line_no++;
        size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        if (line[first] == '#') continue;
        std::istringstream ls(line);
        int frame = 0;
        std::string key_name, edge;
        if (!(ls >> frame >> key_name >> edge)) {
            error = "trace line " + std::to_string(line_no) + ": expected <frame> <KEY> <DOWN|UP>";
            return false;
        }
        std::string rest;
        if (ls >> rest) {
            error = "trace line " + std::to_string(line_no) + ": trailing input";
            return false;
        }
        if (frame < last_frame) {
            error = "trace line " + std::to_string(line_no) + ": frames must be nondecreasing";
            return false;
        }
        auto key = key_from_name(key_name);
        if (!key) {
            error = "trace line " + std::to_string(line_no) + ": unknown key " + key_name;
            return false;
        }
        bool down;
        if (edge == "DOWN")
            down = true;
        else if (edge == "UP")
            down = false;
        else {
            error = "trace line " + std::to_string(line_no) + ": edge must be DOWN or UP";
            return false;
        }
        out.push_back({frame, *key, down});
        last_frame = frame;
    }
    return true;
}

// Flat "key=value" configuration with "#" comments and trimmed whitespace.
using Config = std::map<std::string, std::string>;

inline bool parse_config(std::istream& in, Config& out, std::string& error) {
    out.clear();
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        line_no++;
        size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        size_t eq = line.find('=');
        if (eq == std::string::npos) {
            error = "config line " + std::to_string(line_no) + ": expected key=value";
            return false;
        }
        auto trim = [](std::string s) {
            size_t b = s.find_first_not_of(" \t\r");
            if (b == std::string::npos) return std::string();
            size_t e = s.find_last_not_of(" \t\r");
            return s.substr(b, e - b + 1);
        };
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (key.empty()) {
            error = "config line " + std::to_string(line_no) + ": empty key";
            return false;
        }
        out[key] = value;
    }
    return true;
}

inline int config_int(const Config& c, const std::string& key, int fallback) {
    auto it = c.find(key);
    if (it == c.end()) return fallback;
    try {
        return std::stoi(it->second);
    } catch (...) {
        return fallback;
    }
}

inline bool config_flag(const Config& c, const std::string& key, bool fallback) {
    auto it = c.find(key);
    if (it == c.end()) return fallback;
    return it->second == "1" || it->second == "true" || it->second == "yes";
}

// Effect selectors shared by the filter mode and the config keys:
// none | gray | blur | brightup:D | brightdown:D | fill:RRGGBB.
inline bool parse_effect_spec(const std::string& text, EffectSpec& out, std::string& error) {
    out = EffectSpec{};
    if (text == "none") {
        out.kind = EffectSpec::None;
        return true;
    }
    if (text == "gray") {
        out.kind = EffectSpec::Gray;
        return true;
    }
    if (text == "blur") {
        out.kind = EffectSpec::Blur;
        return true;
    }
    auto parse_delta = [&](const std::string& prefix, EffectSpec::Kind kind) -> std::optional<bool> {
        if (text.rfind(prefix + ":", 0) != 0) return std::nullopt;
        std::string num = text.substr(prefix.size() + 1);
        try {
            size_t used = 0;
            int delta = std::stoi(num, &used);
            if (used != num.size() || delta < 0) throw std::invalid_argument(num);
            out.kind = kind;
            out.delta = delta;
            return true;
        } catch (...) {
            error = "bad delta in effect '" + text + "'";
            return false;
        }
    };
    if (auto r = parse_delta("brightup", EffectSpec::BrightUp)) return *r;
    if (auto r = parse_delta("brightdown", EffectSpec::BrightDown)) return *r;
    if (text.rfind("fill:", 0) == 0) {
        std::string hex = text.substr(5);
        if (hex.size() != 6 || hex.find_first_not_of("0123456789abcdefABCDEF") != std::string::npos) {
            error = "fill color must be RRGGBB hex";
            return false;
        }
        auto byte = [&](size_t at) {
            return static_cast<std::uint8_t>(std::stoi(hex.substr(at, 2), nullptr, 16));
        };
        out.kind = EffectSpec::Fill;
        out.color = {byte(0), byte(2), byte(4), 255};
        return true;
    }
    error = "unknown effect '" + text + "'";
    return false;
}

// The effect id on a render command picks one of these; the table is what
// render_frame consults.
inline std::map<int, EffectSpec> default_effect_table() {
    return {
        {FxNone, {EffectSpec::None, 0, {}}},
        {FxGray, {EffectSpec::Gray, 0, {}}},
        {FxBlur, {EffectSpec::Blur, 0, {}}},
        {FxBrightUp, {EffectSpec::BrightUp, 40, {}}},
        {FxBrightDown, {EffectSpec::BrightDown, 40, {}}},
        {FxFill, {EffectSpec::Fill, 0, {0, 0, 0, 255}}},
    };
}

inline int effect_id_from_name(const std::string& name) {
    if (name == "gray") return FxGray;
    if (name == "blur") return FxBlur;
    if (name == "brightup") return FxBrightUp;
    if (name == "brightdown") return FxBrightDown;
    if (name == "fill") return FxFill;
    return FxNone;
}

} // namespace acc
