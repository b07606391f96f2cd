// Command-line front end: loads a market spec, runs the requested analysis,
// and prints the report as text or JSON. Exit codes: 0 success, 1 parse or
// validation failure, 2 usage error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "holarb/errors.hpp"
#include "holarb/market_spec.hpp"
#include "holarb/report_io.hpp"

namespace {

using namespace holarb;

struct LoopChoice {
    Loop loop;
    std::string label;
};

std::vector<std::string> split_ids(const std::string& text) {
    std::vector<std::string> ids;
    std::string current;
    for (char c : text) {
        if (c == ',') {
            if (!current.empty()) ids.push_back(std::move(current));
            current.clear();
        } else {
            current += c;
        }
    }
    if (!current.empty()) ids.push_back(std::move(current));
    return ids;
}

LoopChoice resolve_loop(const MarketSpec& spec, const TimeCategory& category,
                        const std::string& text) {
    if (const LoopRecord* named = spec.find_loop(text))
        return LoopChoice{make_loop(category, named->arrows), named->name};
    std::vector<std::string> ids = split_ids(text);
    if (ids.empty()) throw ValidationError("--loop: empty loop specification");
    LoopChoice choice{make_loop(category, ids), text};
    // an id list that matches a named loop inherits its declarations
    for (const auto& record : spec.loops)
        if (record.arrows == ids) choice.label = record.name;
    return choice;
}

std::optional<std::size_t> loop_cap_from_env() {
    const char* raw = std::getenv("HOLARB_MAX_LOOPS");
    if (!raw) return std::nullopt;
    try {
        std::size_t pos = 0;
        unsigned long long value = std::stoull(raw, &pos);
        if (pos != std::string(raw).size()) throw std::invalid_argument(raw);
        return static_cast<std::size_t>(value);
    } catch (const std::exception&) {
        throw ValidationError(std::string("HOLARB_MAX_LOOPS is not a count: '") + raw + "'");
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

Rat parse_epsilon(const std::string& text) {
    Rat epsilon;
    try {
        epsilon = parse_rational(text);
    } catch (const std::invalid_argument& e) {
        throw ValidationError(std::string("--epsilon: ") + e.what());
    }
    if (epsilon < 0) throw ValidationError("--epsilon must be >= 0");
    return epsilon;
}

void emit(const std::string& format, const std::string& text, const ReportJson& doc) {
    if (format == "json")
        std::cout << doc.dump(2) << "\n";
    else
        std::cout << text;
}

int run(int argc, char** argv) {
    CLI::App app{"holarb - loop holonomy and arbitrage analysis for finite market systems"};
    app.require_subcommand(1);

    std::string format = "text";
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));

    std::string spec_path = "-";
    auto add_spec_option = [&](CLI::App* sub) {
        sub->add_option("--spec", spec_path, "market spec file, '-' for stdin")
            ->capture_default_str();
    };

    auto* cmd_validate = app.add_subcommand("validate", "check shapes and null-preservation");
    bool with_cocycle = false;
    add_spec_option(cmd_validate);
    cmd_validate->add_flag("--cocycle", with_cocycle,
                           "also verify the cocycle law on all composable pairs");

    auto* cmd_distortion = app.add_subcommand("distortion", "print distortions dF");
    std::vector<std::string> arrow_ids;
    add_spec_option(cmd_distortion);
    cmd_distortion->add_option("--arrow", arrow_ids, "arrow id (repeatable; default: all)");

    auto* cmd_holonomy = app.add_subcommand("holonomy", "holonomy of one loop with its trace");
    std::string loop_text;
    add_spec_option(cmd_holonomy);
    cmd_holonomy->add_option("--loop", loop_text, "loop name or comma-separated arrow ids")
        ->required();

    auto* cmd_scan = app.add_subcommand("scan", "classify all loops based at an object");
    std::string base;
    std::size_t max_len = 4;
    std::string epsilon_text = "0";
    bool allow_repeats = false;
    bool serial = false;
    add_spec_option(cmd_scan);
    cmd_scan->add_option("--base", base, "base object")->required();
    cmd_scan->add_option("--max-len", max_len, "maximum loop length")->capture_default_str();
    cmd_scan->add_option("--epsilon", epsilon_text, "deviation threshold")->capture_default_str();
    cmd_scan->add_flag("--allow-repeats", allow_repeats, "allow repeated arrows in a loop");
    cmd_scan->add_flag("--serial", serial, "disable the parallel fan-out");

    auto* cmd_martingale = app.add_subcommand("martingale", "test a family for the F-martingale law");
    std::string family_path;
    add_spec_option(cmd_martingale);
    cmd_martingale->add_option("--family", family_path, "JSON file: object id -> values")
        ->required();

    auto* cmd_strategy = app.add_subcommand("strategy", "simulate a loop trading strategy");
    std::string strategy_mode = "ab";
    add_spec_option(cmd_strategy);
    cmd_strategy->add_option("--loop", loop_text, "loop name or comma-separated arrow ids")
        ->required();
    cmd_strategy->add_option("--mode", strategy_mode, "position rule")
        ->check(CLI::IsMember({"ab", "wab"}))
        ->capture_default_str();
    cmd_strategy->add_option("--epsilon", epsilon_text, "wab deviation threshold")
        ->capture_default_str();

    auto* cmd_gen = app.add_subcommand("gen", "generate a random valid market spec");
    GenOptions gen;
    cmd_gen->add_option("--seed", gen.seed, "rng seed")->required();
    cmd_gen->add_option("--objects", gen.objects, "number of time objects")->capture_default_str();
    cmd_gen->add_option("--max-points", gen.max_points, "points per space bound")
        ->capture_default_str();
    cmd_gen->add_option("--arrows", gen.arrows, "number of arrows")->capture_default_str();
    cmd_gen->add_flag("--measure-preserving", gen.measure_preserving,
                      "uniform weights and permutation maps");
    cmd_gen->add_flag("--with-nulls", gen.with_nulls, "null points where no map can reach them");

    auto* cmd_example = app.add_subcommand("example", "print a built-in fixture");
    std::string example_name;
    cmd_example->add_option("name", example_name, "simple | stronger")
        ->required()
        ->check(CLI::IsMember({"simple", "stronger"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (*cmd_gen) {
        std::cout << print_market_spec(generate_random_system(gen));
        return 0;
    }
    if (*cmd_example) {
        std::cout << print_market_spec(example_name == "simple" ? simple_fixture()
                                                                : stronger_fixture());
        return 0;
    }

    MarketSpec spec = parse_market_spec_file(spec_path);

    if (*cmd_validate) {
        Filtration filtration = build_filtration(spec);
        FiltrationReport report = validate_filtration(filtration);
        std::string text = filtration_report_text(report);
        ReportJson doc = filtration_report_json(report);
        bool ok = report.ok;
        if (with_cocycle && report.ok) {
            std::vector<CocycleReport> cocycles;
            for (const auto& first : filtration.category().arrows)
                for (const auto& second : filtration.category().arrows)
                    if (first.dst == second.src) {
                        cocycles.push_back(check_cocycle(filtration, first.id, second.id));
                        ok = ok && cocycles.back().ok;
                    }
            text += "cocycle checks:\n" + cocycle_reports_text(filtration, cocycles);
            doc["cocycle"] = cocycle_reports_json(filtration, cocycles);
        }
        emit(format, text, doc);
        return ok ? 0 : 1;
    }

    Filtration filtration = build_validated_filtration(spec);

    if (*cmd_distortion) {
        if (arrow_ids.empty())
            for (const auto& arrow : filtration.category().arrows) arrow_ids.push_back(arrow.id);
        emit(format, distortion_table_text(filtration, arrow_ids),
             distortion_table_json(filtration, arrow_ids));
        return 0;
    }

    if (*cmd_holonomy) {
        LoopChoice choice = resolve_loop(spec, filtration.category(), loop_text);
        HolonomyTrace trace = holonomy(filtration, choice.loop);
        emit(format, holonomy_text(filtration, choice.loop, trace),
             holonomy_json(filtration, choice.loop, trace));
        return 0;
    }

    if (*cmd_scan) {
        ScanOptions options;
        options.allow_repeat_arrows = allow_repeats;
        options.parallel = !serial;
        options.max_loops = loop_cap_from_env().value_or(100000);
        ScanResult result = scan(filtration, base, max_len, parse_epsilon(epsilon_text), options);
        emit(format, scan_text(filtration, base, max_len, result),
             scan_json(filtration, base, max_len, result));
        return 0;
    }

    if (*cmd_martingale) {
        MartingaleFamily family = parse_family(read_file(family_path), filtration);
        MartingaleReport report = is_F_martingale(filtration, family);
        emit(format, martingale_report_text(filtration, report),
             martingale_report_json(filtration, report));
        return 0;
    }

    if (*cmd_strategy) {
        LoopChoice choice = resolve_loop(spec, filtration.category(), loop_text);
        StrategyRun run;
        run.mode = strategy_mode;
        run.epsilon = parse_epsilon(epsilon_text);
        run.loop = choice.loop;
        run.loop_label = choice.label;
        run.holonomy = classify_loop(filtration, choice.loop, run.epsilon);
        const FinProbSpace& base_space = filtration.space_of(choice.loop.base());
        bool require_reverse = false;
        if (run.mode == "ab") {
            run.position = ab_position(run.holonomy.hol);
            run.report = ab_wealth(base_space, run.holonomy.hol);
        } else {
            run.position = wab_position(run.holonomy.hol, run.epsilon);
            run.report = wab_wealth(base_space, run.holonomy.hol, run.epsilon);
            for (std::size_t x = 0; x < base_space.size(); ++x)
                if (base_space.weights[x] > 0 && run.position.values.values[x] == -1)
                    require_reverse = true;
        }
        run.wealth_trace = self_financing_wealth_trace(filtration, choice.loop);

        bool declared = !spec.arrow_executable.empty() ||
                        spec.loop_admissibility.count(choice.label) > 0;
        if (declared) {
            AdmissibilityDeclaration decl = declaration_for(spec, choice.label);
            run.admissibility = check_admissibility(choice.loop, decl, require_reverse);
            bool admissible = run.mode == "wab" && require_reverse
                                  ? run.admissibility->wab_admissible
                                  : run.admissibility->admissible;
            apply_admissibility(run.report, admissible, run.holonomy.p_gt_1);
        }
        emit(format, strategy_run_text(filtration, run), strategy_run_json(filtration, run));
        return 0;
    }

    return 2;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const holarb::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
