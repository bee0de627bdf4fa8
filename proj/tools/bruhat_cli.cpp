#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "bruhat/decompose.hpp"
#include "bruhat/json_io.hpp"
#include "bruhat/suites.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitMalformed = 1;
constexpr int kExitSingular = 2;
constexpr int kExitPrecision = 3;
constexpr int kExitUnknownSuite = 4;

struct CliOptions {
    bruhat::RunConfig flags; // values parsed from the command line
    bruhat::RunConfig cfg;   // effective config after merging
    std::string chi_json;
    std::string config_path;
    std::string preset = "default";
    std::string input; // decompose: matrix JSON file, "-" for stdin

    CLI::Option* o_p = nullptr;
    CLI::Option* o_n = nullptr;
    CLI::Option* o_precision = nullptr;
    CLI::Option* o_seed = nullptr;
    CLI::Option* o_trials = nullptr;
    CLI::Option* o_preset = nullptr;
    CLI::Option* o_valwindow = nullptr;
    CLI::Option* o_level = nullptr;
};

void add_common_flags(CLI::App* app, CliOptions& opt) {
    opt.o_p = app->add_option("--p", opt.flags.p, "prime");
    opt.o_n = app->add_option("--n", opt.flags.n, "matrix dimension");
    opt.o_precision =
        app->add_option("--precision", opt.flags.precision, "relative precision (digits)");
    opt.o_seed = app->add_option("--seed", opt.flags.seed, "RNG seed");
    opt.o_trials =
        app->add_option("--trials", opt.flags.trials, "trials per suite (0 = default)");
    opt.o_preset =
        app->add_option("--preset", opt.preset, "Weyl ordering preset (default | paper-n3)");
    app->add_option("--chi", opt.chi_json, "character spec as inline JSON");
    opt.o_valwindow =
        app->add_option("--valwindow", opt.flags.bounds.val_window, "sample valuation window");
    opt.o_level =
        app->add_option("--level", opt.flags.level, "congruence level for quotient-formula");
    app->add_option("--config", opt.config_path, "JSON config file (same keys as flags)");
}

void finalize_config(CliOptions& opt) {
    if (!opt.config_path.empty()) {
        std::ifstream in(opt.config_path);
        if (!in) throw bruhat::parse_error("cannot open config: " + opt.config_path);
        opt.cfg = bruhat::RunConfig::from_json(json::parse(in));
    }
    // explicit flags override the config file
    if (opt.o_p->count()) opt.cfg.p = opt.flags.p;
    if (opt.o_n->count()) opt.cfg.n = opt.flags.n;
    if (opt.o_precision->count()) opt.cfg.precision = opt.flags.precision;
    if (opt.o_seed->count()) opt.cfg.seed = opt.flags.seed;
    if (opt.o_trials->count()) opt.cfg.trials = opt.flags.trials;
    if (opt.o_preset->count() || opt.config_path.empty())
        opt.cfg.preset = bruhat::parse_preset(opt.preset);
    if (opt.o_valwindow->count()) opt.cfg.bounds.val_window = opt.flags.bounds.val_window;
    if (opt.o_level->count()) opt.cfg.level = opt.flags.level;
    if (!opt.chi_json.empty())
        opt.cfg.chi = bruhat::character_from_json(json::parse(opt.chi_json));
    if (const char* env = std::getenv("BRUHAT_SEED"))
        opt.cfg.seed = std::stoull(env);
}

std::string read_input(const std::string& path) {
    if (path.empty() || path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) throw bruhat::parse_error("cannot open input: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

int cmd_decompose(CliOptions& opt) {
    json j;
    bruhat::PMatrix g(1, opt.cfg.p, opt.cfg.precision);
    try {
        j = json::parse(read_input(opt.input));
        g = bruhat::matrix_from_json(j, opt.cfg.p, opt.cfg.precision);
    } catch (const json::exception& e) {
        std::cerr << "malformed input: " << e.what() << "\n";
        return kExitMalformed;
    } catch (const bruhat::parse_error& e) {
        std::cerr << "malformed input: " << e.what() << "\n";
        return kExitMalformed;
    }
    try {
        bruhat::RBDecomposition d = bruhat::rb_decompose(g);
        std::cout << bruhat::decomposition_to_json(d, opt.cfg.precision).dump() << "\n";
        std::cerr << "w = " << d.w.str() << "\n";
        return kExitOk;
    } catch (const bruhat::singular_to_precision& e) {
        std::cerr << "singular to precision: " << e.what() << "\n";
        return kExitSingular;
    } catch (const bruhat::insufficient_precision& e) {
        std::cerr << "insufficient precision: " << e.what() << "\n";
        return kExitPrecision;
    }
}

int cmd_verify(const std::string& suite, CliOptions& opt) {
    const auto& names = bruhat::suite_names();
    if (std::find(names.begin(), names.end(), suite) == names.end()) {
        std::cerr << "unknown suite: " << suite << "\n";
        return kExitUnknownSuite;
    }
    try {
        bruhat::SuiteReport rep = bruhat::run_suite(suite, opt.cfg);
        json out = rep.to_json();
        out["config"] = opt.cfg.to_json();
        std::cout << out.dump() << "\n";
        std::cerr << suite << ": " << rep.trials << " trials, " << rep.failures.size()
                  << " failures, " << rep.precision_aborts << " precision aborts\n";
        return rep.ok() ? kExitOk : kExitMalformed;
    } catch (const bruhat::insufficient_precision& e) {
        std::cerr << "insufficient precision: " << e.what() << "\n";
        return kExitPrecision;
    } catch (const bruhat::singular_to_precision& e) {
        std::cerr << "singular to precision: " << e.what() << "\n";
        return kExitSingular;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"p-adic Bruhat decomposition and principal-series verifier"};
    app.require_subcommand(1);
    CliOptions opt;

    add_common_flags(&app, opt);

    CLI::App* dec = app.add_subcommand("decompose", "factor g = r * b from matrix JSON");
    dec->add_option("input", opt.input, "matrix JSON file, '-' for stdin");
    dec->fallthrough();

    std::string suite;
    CLI::App* ver = app.add_subcommand("verify", "run a verification suite");
    ver->add_option("suite", suite, "suite name")->required();
    ver->fallthrough();

    CLI11_PARSE(app, argc, argv);

    try {
        finalize_config(opt);
        if (dec->parsed()) return cmd_decompose(opt);
        return cmd_verify(suite, opt);
    } catch (const bruhat::character_not_admissible& e) {
        std::cerr << "character not admissible: " << e.what() << "\n";
        return kExitMalformed;
    } catch (const bruhat::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMalformed;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "malformed input: " << e.what() << "\n";
        return kExitMalformed;
    }
}
