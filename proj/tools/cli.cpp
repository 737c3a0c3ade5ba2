#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "ducci/builder.hpp"
#include "ducci/core.hpp"
#include "ducci/errors.hpp"
#include "ducci/json_io.hpp"
#include "ducci/survey.hpp"
#include "ducci/verify.hpp"

namespace ducci::cli {
namespace {

enum class Format { Text, Json, Csv };

struct Config {
    std::string command;
    std::vector<std::string> tuple_args;
    std::vector<std::string> suites;
    std::size_t k = 4;
    std::size_t target = 0;
    std::uint64_t steps = 1;
    std::uint64_t bound = 0;
    std::uint64_t samples = 10'000;
    std::uint64_t seed = 1;
    std::size_t cases = 256;
    int jobs = 1;
    std::string mode = "exhaustive";
    std::string emit = "tuple";
    std::string format;
    std::string output;
    std::string records;
    std::size_t max_steps = kDefaultStepCap;
};

Format resolve_format(const Config& cfg, Format fallback) {
    std::string name = cfg.format;
    if (name.empty()) {
        // DUCCI_FORMAT overrides the per-command default.
        if (const char* env = std::getenv("DUCCI_FORMAT"); env && *env) name = env;
    }
    if (name.empty()) return fallback;
    if (name == "text") return Format::Text;
    if (name == "json") return Format::Json;
    if (name == "csv") return Format::Csv;
    throw ValidationError("unknown format '" + name + "' (expected text, json or csv)");
}

std::string rows(const std::vector<GameTuple>& states) {
    std::size_t width = 1;
    for (const auto& s : states) {
        for (const auto& e : s) width = std::max(width, e.str().size());
    }
    const std::size_t label_width = 4 + std::to_string(states.size() - 1).size();
    std::ostringstream os;
    for (std::size_t i = 0; i < states.size(); ++i) {
        std::string label = "A_" + std::to_string(i) + " =";
        os << label << std::string(label_width - label.size() + 1, ' ');
        for (std::size_t j = 0; j < states[i].size(); ++j) {
            const auto v = states[i][j].str();
            os << (j ? " " : "") << std::string(width - v.size(), ' ') << v;
        }
        os << '\n';
    }
    return os.str();
}

std::string play(const Config& cfg) {
    const auto tr = trajectory(parse_tuple(std::span<const std::string>(cfg.tuple_args)), cfg.max_steps);
    if (resolve_format(cfg, Format::Text) == Format::Json) return to_json(tr) + "\n";
    // A zero game ends at its first all-zero row; a cycle shows the repeat.
    const std::size_t shown = tr.terminal == TerminalKind::Zero ? tr.repeat_target + 1 : tr.states.size();
    std::string out = rows({tr.states.begin(), tr.states.begin() + static_cast<std::ptrdiff_t>(shown)});
    if (tr.terminal == TerminalKind::Zero) {
        out += "life " + std::to_string(tr.life) + " (zero)\n";
    } else {
        out += "life " + std::to_string(tr.life) + " (cycle: A_" + std::to_string(tr.repeat_at) + " = A_" +
               std::to_string(tr.repeat_target) + ", pre-period " + std::to_string(tr.pre_period()) +
               ", cycle length " + std::to_string(tr.cycle_length()) + ")\n";
    }
    return out;
}

std::string life_cmd(const Config& cfg) {
    const auto tr = trajectory(parse_tuple(std::span<const std::string>(cfg.tuple_args)), cfg.max_steps);
    if (resolve_format(cfg, Format::Text) == Format::Json) {
        return "{\"life\":" + std::to_string(tr.life) + ",\"terminal\":\"" +
               (tr.terminal == TerminalKind::Zero ? "zero" : "cycle") + "\"}\n";
    }
    return std::to_string(tr.life) + "\n";
}

std::string build(const Config& cfg) {
    if (cfg.emit == "chain") {
        std::string out;
        for (const auto& st : build_chain(cfg.k, cfg.target)) {
            out += "{\"stage\":" + std::to_string(st.stage) + ",\"tuple\":" + json_array(st.tuple) +
                   ",\"life\":" + std::to_string(st.life) + "}\n";
        }
        return out;
    }
    if (cfg.emit != "tuple") throw ValidationError("--emit must be tuple or chain");
    const auto t = build_with_life(cfg.k, cfg.target);
    const auto l = life(t, cfg.max_steps);
    if (resolve_format(cfg, Format::Text) == Format::Json) {
        return "{\"k\":" + std::to_string(cfg.k) + ",\"target\":" + std::to_string(cfg.target) +
               ",\"tuple\":" + json_array(t) + ",\"life\":" + std::to_string(l) + "}\n";
    }
    return t.to_string() + "\n";
}

std::string skip(const Config& cfg) {
    const auto s = skip_transform(cfg.steps);
    std::optional<CanonicalQuad> out;
    if (!cfg.tuple_args.empty()) {
        out = apply_skip(s, CanonicalQuad::from_tuple(parse_tuple(std::span<const std::string>(cfg.tuple_args))));
    }
    if (resolve_format(cfg, Format::Text) == Format::Json) {
        std::string j = "{\"steps\":" + std::to_string(s.steps) + ",\"matrix\":[";
        for (std::size_t i = 0; i < 3; ++i) {
            j += i ? ",[" : "[";
            for (std::size_t c = 0; c < 3; ++c) j += (c ? "," : "") + s.matrix[i][c].str();
            j += "]";
        }
        j += "]";
        if (out) j += ",\"tuple\":" + json_array(out->tuple()) + ",\"life\":" + std::to_string(life(out->tuple()));
        return j + "}\n";
    }
    std::string text;
    static constexpr const char* names[] = {"A'", "B'", "C'"};
    for (std::size_t i = 0; i < 3; ++i) {
        text += std::string(names[i]) + " = " + s.matrix[i][0].str() + " A + " + s.matrix[i][1].str() + " B + " +
                s.matrix[i][2].str() + " C\n";
    }
    if (out) text += out->tuple().to_string() + "\nlife " + std::to_string(life(out->tuple())) + "\n";
    return text;
}

std::string preimage(const Config& cfg) {
    const auto t = parse_tuple(std::span<const std::string>(cfg.tuple_args));
    const auto pre = find_preimage(t);
    if (!pre) throw Infeasible("not a difference set");
    if (resolve_format(cfg, Format::Text) == Format::Json) return json_array(*pre) + "\n";
    return pre->to_string() + "\n";
}

void write_file(const std::string& path, const std::string& body) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw ValidationError("cannot open '" + path + "' for writing");
    f << body;
}

std::string survey(const Config& cfg) {
    SurveyRecord rec;
    if (cfg.mode == "exhaustive") {
        rec = exhaustive_survey(cfg.k, cfg.bound, cfg.jobs);
    } else if (cfg.mode == "random") {
        rec = random_survey(cfg.k, cfg.bound, cfg.samples, cfg.seed, cfg.jobs);
    } else {
        throw ValidationError("--mode must be exhaustive or random");
    }
    if (!cfg.records.empty()) write_file(cfg.records, records_json(rec) + "\n");
    switch (resolve_format(cfg, Format::Csv)) {
        case Format::Json:
            return to_json(rec) + "\n";
        case Format::Csv:
            return to_csv(rec);
        case Format::Text:
            break;
    }
    std::string out = to_csv(rec);
    out += "max life " + std::to_string(rec.max_life()) + " at (" + rec.witnesses.rbegin()->second.to_string(",") +
           ")\n";
    return out;
}

int verify(const Config& cfg, std::string& body) {
    const auto report = verify_suites(cfg.suites.empty() ? std::vector<std::string>{"all"} : cfg.suites, cfg.cases);
    body = resolve_format(cfg, Format::Text) == Format::Json ? report.to_json() + "\n" : report.to_text();
    return report.all_passed() ? kOk : kPropertyFailed;
}

void add_tuple(CLI::App* sub, Config& cfg, bool required) {
    auto* opt = sub->add_option("tuple", cfg.tuple_args, "entries, space- or comma-separated naturals");
    if (required) opt->required();
}

void add_format(CLI::App* sub, Config& cfg) {
    sub->add_option("--format", cfg.format, "text, json or csv (default from DUCCI_FORMAT)");
    sub->add_option("-o,--output", cfg.output, "write to this file instead of stdout");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Config cfg;
    CLI::App app{"Ducci difference game: trajectories, life, constructions and surveys", "ducci"};
    app.require_subcommand(1);

    auto* play_cmd = app.add_subcommand("play", "print the trajectory up to the first repetition");
    add_tuple(play_cmd, cfg, true);
    add_format(play_cmd, cfg);
    play_cmd->add_option("--max-steps", cfg.max_steps, "step cap for cycle detection");

    auto* life_sub = app.add_subcommand("life", "print the life of a tuple");
    add_tuple(life_sub, cfg, true);
    add_format(life_sub, cfg);
    life_sub->add_option("--max-steps", cfg.max_steps, "step cap for cycle detection");

    auto* build_cmd = app.add_subcommand("build", "construct a tuple with at least the given life");
    build_cmd->add_option("--k", cfg.k, "tuple length (>= 3)")->required();
    build_cmd->add_option("--life", cfg.target, "target life")->required();
    build_cmd->add_option("--emit", cfg.emit, "tuple or chain (JSON lines, one per stage)");
    build_cmd->add_option("--max-steps", cfg.max_steps, "step cap for the final verification");
    add_format(build_cmd, cfg);

    auto* skip_cmd = app.add_subcommand("skip", "show a skip transform, optionally applied to (0, A, B, C)");
    skip_cmd->add_option("--steps", cfg.steps, "power of 2")->required();
    add_tuple(skip_cmd, cfg, false);
    add_format(skip_cmd, cfg);

    auto* survey_cmd = app.add_subcommand("survey", "life histogram over many tuples");
    survey_cmd->add_option("--k", cfg.k, "tuple length")->required();
    survey_cmd->add_option("--bound", cfg.bound, "largest entry")->required();
    survey_cmd->add_option("--mode", cfg.mode, "exhaustive or random");
    survey_cmd->add_option("--samples", cfg.samples, "random mode sample count");
    survey_cmd->add_option("--seed", cfg.seed, "random mode seed");
    survey_cmd->add_option("--jobs", cfg.jobs, "worker threads");
    survey_cmd->add_option("--records", cfg.records, "write record tuples as JSON here");
    add_format(survey_cmd, cfg);

    auto* verify_cmd = app.add_subcommand("verify", "run property suites with fixed seeds");
    verify_cmd->add_option("suites", cfg.suites, "parity divisibility builders equivalence necessity all");
    verify_cmd->add_option("--cases", cfg.cases, "cases per randomized property");
    add_format(verify_cmd, cfg);

    auto* preimage_cmd = app.add_subcommand("preimage", "find a tuple whose differences are the input");
    add_tuple(preimage_cmd, cfg, true);
    add_format(preimage_cmd, cfg);

    std::vector<std::string> reversed(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kValidation;
    }

    try {
        std::string body;
        int code = kOk;
        if (*play_cmd) {
            body = play(cfg);
        } else if (*life_sub) {
            body = life_cmd(cfg);
        } else if (*build_cmd) {
            body = build(cfg);
        } else if (*skip_cmd) {
            body = skip(cfg);
        } else if (*survey_cmd) {
            body = survey(cfg);
        } else if (*verify_cmd) {
            code = verify(cfg, body);
        } else if (*preimage_cmd) {
            body = preimage(cfg);
        }
        if (cfg.output.empty()) {
            out << body;
        } else {
            write_file(cfg.output, body);
        }
        return code;
    } catch (const Infeasible& e) {
        err << "error: " << e.what() << "\n";
        return kInfeasible;
    } catch (const StepCapExceeded& e) {
        err << "error: " << e.what() << "; raise --max-steps if the input is intended\n";
        return kValidation;
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << "\n";
        return kValidation;
    } catch (const CapExceeded& e) {
        err << "error: " << e.what() << "\n";
        return kValidation;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kPropertyFailed;
    }
}

}  // namespace ducci::cli
