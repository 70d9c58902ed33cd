#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "namelint/config.hpp"
#include "namelint/runner.hpp"

namespace {

struct CliOverrides {
    std::optional<std::string> config_path;
    std::optional<std::string> format;
    std::optional<std::string> fail_on;
    std::optional<int> max_words;
    std::optional<int> soft_words;
    std::optional<std::string> style;
    std::optional<int> jobs;
    std::vector<std::string> lexicon_dirs;
    std::vector<std::string> project_terms;
    std::vector<std::string> test_patterns;
};

// Command line beats config file beats built-in defaults.
namelint::AppConfig build_config(const CliOverrides& cli) {
    namelint::AppConfig config;
    std::optional<std::filesystem::path> explicit_path;
    if (cli.config_path) explicit_path = *cli.config_path;
    if (auto path = namelint::resolve_config_path(explicit_path))
        namelint::load_config_file(*path, config);

    if (cli.format && !namelint::output_format_from_string(*cli.format, config.format))
        throw namelint::ConfigError("--format must be text or machine");
    if (cli.fail_on && !namelint::fail_on_from_string(*cli.fail_on, config.fail_on))
        throw namelint::ConfigError("--fail-on must be error, warn, or never");
    if (cli.max_words) config.rules.max_words = *cli.max_words;
    if (cli.soft_words) config.rules.soft_words = *cli.soft_words;
    if (cli.style) {
        namelint::NamingStyle style;
        if (!namelint::style_from_string(*cli.style, style))
            throw namelint::ConfigError("unknown style: " + *cli.style);
        config.rules.style_override = style;
    }
    if (cli.jobs) config.jobs = *cli.jobs;
    for (const auto& dir : cli.lexicon_dirs) config.lexicon.lexicon_dirs.emplace_back(dir);
    for (const auto& term : cli.project_terms) config.lexicon.extra_project_terms.push_back(term);
    for (const auto& pattern : cli.test_patterns) config.test_patterns.push_back(pattern);

    config.rules.validate();
    if (config.jobs < 1) throw namelint::ConfigError("--jobs must be positive");
    return config;
}

void add_common_flags(CLI::App* cmd, CliOverrides& cli) {
    cmd->add_option("--format", cli.format, "Output format: text or machine");
    cmd->add_option("--fail-on", cli.fail_on, "Findings that fail the run: error, warn, never");
    cmd->add_option("--max-words", cli.max_words, "Maximum words per name");
    cmd->add_option("--soft-words", cli.soft_words, "Preferred maximum words per name");
    cmd->add_option("--style", cli.style, "Expected naming style (overrides corpus detection)");
    cmd->add_option("--jobs", cli.jobs, "Worker count for evaluation");
    cmd->add_option("--lexicon", cli.lexicon_dirs,
                    "Directory of lexicon files to merge over the defaults (repeatable)");
    cmd->add_option("--project-term", cli.project_terms,
                    "Term treated as a system name for the prefix/suffix rule (repeatable)");
    cmd->add_option("--test-pattern", cli.test_patterns,
                    "Glob or re: pattern marking test methods (repeatable)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"namelint: method-name quality linter"};
    app.require_subcommand(1);

    CliOverrides cli;
    app.add_option("--config", cli.config_path,
                   "Config file (default ./namelint.config or $NAMELINT_CONFIG)");

    std::vector<std::string> paths;
    std::string explain_rule;
    std::string debug_name;

    CLI::App* check = app.add_subcommand("check", "Lint identifier lists or source files");
    check->add_option("paths", paths, "Files or directories")->required();
    add_common_flags(check, cli);

    CLI::App* analyze = app.add_subcommand("analyze", "Corpus analytics without failing");
    analyze->add_option("paths", paths, "Files or directories")->required();
    add_common_flags(analyze, cli);

    CLI::App* explain = app.add_subcommand("explain", "Describe a rule");
    explain->add_option("rule", explain_rule, "Rule id, e.g. R3_VERB")->required();

    CLI::App* debug = app.add_subcommand("debug", "Show tokenizer/grammar internals for a name");
    debug->add_option("name", debug_name, "Identifier to inspect")->required();
    add_common_flags(debug, cli);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*explain) {
            std::cout << namelint::run_explain(explain_rule);
            return 0;
        }
        namelint::AppConfig config = build_config(cli);
        if (*check) return namelint::run_check(paths, config, std::cout, std::cerr);
        if (*analyze) return namelint::run_analyze(paths, config, std::cout, std::cerr);
        if (*debug) {
            std::cout << namelint::run_debug(debug_name, config);
            return 0;
        }
    } catch (const namelint::ConfigError& e) {
        std::cerr << "namelint: " << e.what() << "\n";
        return 2;
    } catch (const namelint::InputError& e) {
        std::cerr << "namelint: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "namelint: internal error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
