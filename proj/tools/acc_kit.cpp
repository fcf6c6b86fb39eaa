#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "acc/bench.hpp"
#include "acc/image.hpp"
#include "acc/repl.hpp"
#include "acc/trace.hpp"
#include "acc/worlds.hpp"

namespace {

int fail(const std::string& message) {
    std::cerr << "error: " << message << "\n";
    return 1;
}

bool read_file_bytes(const std::string& path, std::vector<std::uint8_t>& out,
                     std::string& error) {
    std::ifstream f(path, std::ios::binary);
    if (!f) {
        error = "cannot open " + path;
        return false;
    }
    out.assign(std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>());
    return true;
}

bool write_file_bytes(const std::string& path, const std::vector<std::uint8_t>& bytes,
                      std::string& error) {
    std::ofstream f(path, std::ios::binary);
    f.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
    if (!f) {
        error = "cannot write " + path;
        return false;
    }
    return true;
}

bool parse_sizes(const std::string& text, std::vector<int>& out, std::string& error) {
    std::istringstream is(text);
    std::string token;
    while (std::getline(is, token, ',')) {
        try {
            int n = std::stoi(token);
            if (n <= 0) throw std::invalid_argument("");
            out.push_back(n);
        } catch (const std::exception&) {
            error = "bad size '" + token + "' (expected positive integers like 16,64,256)";
            return false;
        }
    }
    if (out.empty()) {
        error = "no sizes given";
        return false;
    }
    return true;
}

int run_filter(const std::string& effect_text, const std::string& in_path,
               const std::string& out_path) {
    acc::EffectSpec effect;
    std::string error;
    if (!acc::parse_effect_spec(effect_text, effect, error)) return fail(error);

    std::vector<std::uint8_t> bytes;
    if (!read_file_bytes(in_path, bytes, error)) return fail(error);
    acc::PixelBuffer image;
    if (!acc::decode_ppm(bytes, image, error)) return fail(in_path + ": " + error);

    acc::apply_effect(image, effect);
    if (!write_file_bytes(out_path, acc::encode_ppm(image), error)) return fail(error);
    return 0;
}

int run_sim(const std::string& trace_path, int frames, const std::string& dump_dir,
            const std::string& mode_name, std::uint32_t seed, const acc::Config& cfg) {
    std::ifstream tf(trace_path);
    if (!tf) return fail("cannot open trace " + trace_path);
    std::vector<acc::InputEvent> events;
    std::string error;
    if (!acc::parse_trace(tf, events, error)) return fail(trace_path + ": " + error);

    bool scroller = mode_name == "scroller";
    acc::World world =
        scroller ? acc::make_scroller_world(seed, cfg) : acc::make_topdown_world(seed, cfg);
    acc::SpriteRegistry sprites = acc::make_default_sprites();
    acc::PixelBuffer map =
        scroller ? acc::make_scroller_map(world.ground_level) : acc::make_topdown_map();

    acc::SimSummary summary;
    if (!acc::run_sim_trace(world, events, frames, sprites, map, acc::default_effect_table(),
                            dump_dir, summary, error))
        return fail(error);

    char digest[17];
    std::snprintf(digest, sizeof(digest), "%016llx",
                  static_cast<unsigned long long>(summary.digest));
    std::cout << "frames: " << summary.frame_count << "\n";
    std::cout << "quit: " << (summary.quit ? "true" : "false") << "\n";
    std::cout << "win: " << (summary.win ? "true" : "false") << "\n";
    std::cout << "player: " << summary.player_x << " " << summary.player_y << "\n";
    std::cout << "enemies: " << summary.enemy_count << "\n";
    std::cout << "digest: " << digest << "\n";
    return 0;
}

int run_bank_mode(const std::string& journal_path, bool strict) {
    acc::Ledger ledger;
    ledger.strict_overdraft = strict;

    std::vector<acc::Transaction> replay;
    if (!journal_path.empty()) {
        std::ifstream jf(journal_path);
        std::string line;
        while (std::getline(jf, line)) {
            if (auto t = acc::parse_journal_line(line)) replay.push_back(*t);
        }
    }

    std::vector<acc::Transaction> applied;
    acc::run_bank(std::cin, std::cout, ledger, replay.empty() ? nullptr : &replay, &applied);

    if (!journal_path.empty()) {
        std::ofstream jf(journal_path, std::ios::trunc);
        for (const auto& t : applied) jf << acc::journal_line(t) << "\n";
        if (!jf) return fail("cannot write journal " + journal_path);
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"container, search, and 2D-simulation demos with an offline trace runner"};
    app.require_subcommand(1);

    std::uint32_t seed = 1;
    std::string config_path;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--seed", seed, "random generator seed")->capture_default_str();
        sub->add_option("--config", config_path, "key=value settings file");
        return sub;
    };

    auto* calc = add_common(app.add_subcommand("calc", "integer four-function calculator"));
    auto* guess = add_common(app.add_subcommand("guess", "number guessing game"));

    auto* bank = add_common(app.add_subcommand("bank", "account and transaction processor"));
    std::string journal_path;
    bool strict_overdraft = false;
    bank->add_option("--journal", journal_path, "transaction journal to replay and update");
    bank->add_flag("--strict", strict_overdraft, "reject withdrawals beyond the balance");

    auto* lend = add_common(app.add_subcommand("lend", "lending desk over a small registry"));
    bool patron_view = false;
    lend->add_flag("--patron-view", patron_view, "hide borrower ids in reports");

    auto* queue = add_common(app.add_subcommand("queue", "bounded queue demo"));
    auto* stack = add_common(app.add_subcommand("stack", "bounded stack demo"));
    int capacity = 10;
    queue->add_option("--capacity", capacity, "slot count")->capture_default_str();
    stack->add_option("--capacity", capacity, "slot count")->capture_default_str();

    auto* list = add_common(app.add_subcommand("list", "linked-list roster demo"));

    auto* hanoi = add_common(app.add_subcommand("hanoi", "three-bar disk puzzle"));
    int disks = 4;
    hanoi->add_option("--disks", disks, "disk count")->check(CLI::Range(1, 16))
        ->capture_default_str();

    auto* undo = add_common(app.add_subcommand("undo", "text buffer with undo history"));
    int undo_rows = 10;
    int undo_history = 100;
    undo->add_option("--rows", undo_rows, "buffer height")->check(CLI::Range(1, 1000))
        ->capture_default_str();
    undo->add_option("--history", undo_history, "undo depth")->check(CLI::Range(1, 100000))
        ->capture_default_str();

    auto* filter = add_common(app.add_subcommand("filter", "apply an effect to a PPM image"));
    std::string effect_text, filter_in, filter_out;
    filter->add_option("effect", effect_text,
                       "gray|blur|brightup:D|brightdown:D|fill:RRGGBB|none")->required();
    filter->add_option("input", filter_in, "source .ppm")->required();
    filter->add_option("output", filter_out, "destination .ppm")->required();

    auto* sim = add_common(app.add_subcommand("sim", "run a world from an input trace"));
    std::string trace_path, dump_dir, mode_name = "topdown";
    int frames = 0;
    sim->add_option("--trace", trace_path, "input event trace")->required();
    sim->add_option("--frames", frames, "frame budget")->required()
        ->check(CLI::Range(1, 1000000));
    sim->add_option("--dump", dump_dir, "directory for frame_%05d.ppm dumps");
    sim->add_option("--mode", mode_name, "world layout")
        ->check(CLI::IsMember({"topdown", "scroller"}))->capture_default_str();

    auto* bench = add_common(app.add_subcommand("bench", "counter-instrumented benchmarks"));
    std::string suite, sizes_text = "16,64,256,1024";
    int reps = 5;
    bench->add_option("--suite", suite, "search|sort|containers")->required()
        ->check(CLI::IsMember({"search", "sort", "containers"}));
    bench->add_option("--sizes", sizes_text, "comma-separated input sizes")
        ->capture_default_str();
    bench->add_option("--reps", reps, "repetitions per size")->check(CLI::Range(1, 1000000))
        ->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    acc::Config cfg;
    if (!config_path.empty()) {
        std::ifstream f(config_path);
        if (!f) return fail("cannot open config " + config_path);
        std::string error;
        if (!acc::parse_config(f, cfg, error)) return fail(config_path + ": " + error);
    }

    if (calc->parsed()) {
        acc::run_calc(std::cin, std::cout);
        return 0;
    }
    if (guess->parsed()) {
        acc::Lcg rng(seed);
        acc::run_guess(std::cin, std::cout, rng);
        return 0;
    }
    if (bank->parsed()) return run_bank_mode(journal_path, strict_overdraft);
    if (lend->parsed()) {
        acc::Lcg rng(seed);
        acc::Registry registry = acc::make_default_registry(rng);
        acc::run_lend(std::cin, std::cout, registry, !patron_view);
        return 0;
    }
    if (queue->parsed()) {
        acc::run_queue(std::cin, std::cout, capacity);
        return 0;
    }
    if (stack->parsed()) {
        acc::run_stack(std::cin, std::cout, capacity);
        return 0;
    }
    if (list->parsed()) {
        acc::Lcg rng(seed);
        acc::run_list(std::cin, std::cout, rng);
        return 0;
    }
    if (hanoi->parsed()) {
        acc::run_hanoi(std::cin, std::cout, disks);
        return 0;
    }
    if (undo->parsed()) {
        acc::run_undo(std::cin, std::cout, undo_rows, undo_history);
        return 0;
    }
    if (filter->parsed()) return run_filter(effect_text, filter_in, filter_out);
    if (sim->parsed()) return run_sim(trace_path, frames, dump_dir, mode_name, seed, cfg);
    if (bench->parsed()) {
        std::vector<int> sizes;
        std::string error;
        if (!parse_sizes(sizes_text, sizes, error)) return fail(error);
        std::cout << acc::bench_csv(acc::run_bench(suite, sizes, reps, seed));
        return 0;
    }
    return 0;
}
