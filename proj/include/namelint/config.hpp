#pragma once

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "namelint/errors.hpp"
#include "namelint/lexicon.hpp"
#include "namelint/report.hpp"
#include "namelint/rules.hpp"

namespace namelint {

// Everything the CLI needs: rule settings, lexicon paths, ingestion
// patterns, and output choices.  Precedence: command line > config file >
// built-in default.
struct AppConfig {
    RuleConfig rules;
    LexiconConfig lexicon;
    std::vector<std::string> test_patterns;
    std::vector<std::string> include_globs;
    std::vector<std::string> exclude_globs;
    OutputFormat format = OutputFormat::Text;
    FailOn fail_on = FailOn::Error;
    int jobs = 1;

    RenderOptions render_options() const {
        RenderOptions opts;
        opts.format = format;
        opts.fail_on = fail_on;
        return opts;
    }
};

namespace detail {

inline void apply_config_json(const nlohmann::json& doc, AppConfig& config,
                              const std::string& origin) {
    auto fail = [&](const std::string& why) -> ConfigError {
        return ConfigError(origin + ": " + why);
    };
    if (!doc.is_object()) throw fail("config must be a JSON object");

    for (const auto& [key, value] : doc.items()) {
        if (key == "enabled") {
            if (!value.is_object()) throw fail("\"enabled\" must map rule ids to booleans");
            for (const auto& [rule_text, flag] : value.items()) {
                RuleId rule;
                if (!rule_id_from_string(rule_text, rule)) throw fail("unknown rule id " + rule_text);
                if (!flag.is_boolean()) throw fail("\"enabled\" values must be booleans");
                config.rules.enabled[rule] = flag.get<bool>();
            }
        } else if (key == "weights") {
            if (!value.is_object()) throw fail("\"weights\" must map rule ids to numbers");
            for (const auto& [rule_text, weight] : value.items()) {
                RuleId rule;
                if (!rule_id_from_string(rule_text, rule)) throw fail("unknown rule id " + rule_text);
                if (!weight.is_number()) throw fail("\"weights\" values must be numbers");
                config.rules.weights[rule] = weight.get<double>();
            }
        } else if (key == "max_words") {
            if (!value.is_number_integer()) throw fail("\"max_words\" must be an integer");
            config.rules.max_words = value.get<int>();
        } else if (key == "soft_words") {
            if (!value.is_number_integer()) throw fail("\"soft_words\" must be an integer");
            config.rules.soft_words = value.get<int>();
        } else if (key == "accessor_exemption") {
            if (!value.is_boolean()) throw fail("\"accessor_exemption\" must be a boolean");
            config.rules.accessor_exemption = value.get<bool>();
        } else if (key == "test_exemption") {
            if (!value.is_boolean()) throw fail("\"test_exemption\" must be a boolean");
            config.rules.test_exemption = value.get<bool>();
        } else if (key == "style_override") {
            if (!value.is_string()) throw fail("\"style_override\" must be a style name");
            NamingStyle style;
            if (!style_from_string(value.get<std::string>(), style))
                throw fail("unknown style " + value.get<std::string>());
            config.rules.style_override = style;
        } else if (key == "languages_without_namespaces") {
            if (!value.is_array()) throw fail("\"languages_without_namespaces\" must be an array");
            config.rules.languages_without_namespaces.clear();
            for (const auto& lang : value) {
                if (!lang.is_string()) throw fail("language tags must be strings");
                config.rules.languages_without_namespaces.insert(lang.get<std::string>());
            }
        } else if (key == "pascal_camel_equivalent") {
            if (!value.is_boolean()) throw fail("\"pascal_camel_equivalent\" must be a boolean");
            config.rules.pascal_camel_equivalent = value.get<bool>();
        } else if (key == "low_consensus_info") {
            if (!value.is_boolean()) throw fail("\"low_consensus_info\" must be a boolean");
            config.rules.low_consensus_info = value.get<bool>();
        } else if (key == "lexicon") {
            if (!value.is_object()) throw fail("\"lexicon\" must be an object of path lists");
            auto read_paths = [&](const char* name,
                                  std::vector<std::filesystem::path>& target) {
                if (!value.contains(name)) return;
                const auto& list = value[name];
                if (!list.is_array()) throw fail(std::string("lexicon.") + name + " must be an array");
                for (const auto& p : list) {
                    if (!p.is_string()) throw fail("lexicon paths must be strings");
                    target.emplace_back(p.get<std::string>());
                }
            };
            read_paths("dictionary", config.lexicon.dictionary_files);
            read_paths("pos", config.lexicon.pos_files);
            read_paths("abbreviations", config.lexicon.abbreviation_files);
            read_paths("acronyms", config.lexicon.acronym_files);
            read_paths("slang", config.lexicon.slang_files);
            read_paths("project_terms", config.lexicon.project_term_files);
            read_paths("domain_terms", config.lexicon.domain_term_files);
            read_paths("dirs", config.lexicon.lexicon_dirs);
        } else if (key == "project_terms") {
            if (!value.is_array()) throw fail("\"project_terms\" must be an array of terms");
            for (const auto& term : value) {
                if (!term.is_string()) throw fail("project terms must be strings");
                config.lexicon.extra_project_terms.push_back(term.get<std::string>());
            }
        } else if (key == "test_patterns") {
            if (!value.is_array()) throw fail("\"test_patterns\" must be an array");
            config.test_patterns.clear();
            for (const auto& p : value) {
                if (!p.is_string()) throw fail("test patterns must be strings");
                config.test_patterns.push_back(p.get<std::string>());
            }
        } else if (key == "include") {
            if (!value.is_array()) throw fail("\"include\" must be an array");
            for (const auto& p : value) {
                if (!p.is_string()) throw fail("include globs must be strings");
                config.include_globs.push_back(p.get<std::string>());
            }
        } else if (key == "exclude") {
            if (!value.is_array()) throw fail("\"exclude\" must be an array");
            for (const auto& p : value) {
                if (!p.is_string()) throw fail("exclude globs must be strings");
                config.exclude_globs.push_back(p.get<std::string>());
            }
        } else if (key == "format") {
            if (!value.is_string() ||
                !output_format_from_string(value.get<std::string>(), config.format))
                throw fail("\"format\" must be \"text\" or \"machine\"");
        } else if (key == "fail_on") {
            if (!value.is_string() || !fail_on_from_string(value.get<std::string>(), config.fail_on))
                throw fail("\"fail_on\" must be \"error\", \"warn\", or \"never\"");
        } else if (key == "jobs") {
            if (!value.is_number_integer() || value.get<int>() < 1)
                throw fail("\"jobs\" must be a positive integer");
            config.jobs = value.get<int>();
        } else {
            throw fail("unknown config key \"" + key + "\"");
        }
    }
}

}  // namespace detail

/// Loads a config file into `config`.  Throws ConfigError on any problem.
inline void load_config_file(const std::filesystem::path& path, AppConfig& config) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open config file: " + path.string());
    nlohmann::json doc = nlohmann::json::parse(in, nullptr, false);
    if (doc.is_discarded()) throw ConfigError(path.string() + ": invalid JSON");
    detail::apply_config_json(doc, config, path.string());
    config.rules.validate();
}

/// Resolves the config file location: explicit flag, then NAMELINT_CONFIG,
/// then ./namelint.config when present.
inline std::optional<std::filesystem::path> resolve_config_path(
    const std::optional<std::filesystem::path>& flag_path) {
    if (flag_path) return flag_path;
    if (const char* env = std::getenv("NAMELINT_CONFIG"); env && *env)
        return std::filesystem::path(env);
    std::filesystem::path fallback = "namelint.config";
    if (std::filesystem::exists(fallback)) return fallback;
    return std::nullopt;
}

}  // namespace namelint
