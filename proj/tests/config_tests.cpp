#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "namelint/config.hpp"

using namespace namelint;

namespace {

std::filesystem::path write_temp(const std::string& name, const std::string& content) {
    auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out << content;
    return path;
}

}  // namespace

TEST_CASE("defaults are valid with no config file") {
    AppConfig config;
    config.rules.validate();
    CHECK(config.rules.max_words == 7);
    CHECK(config.rules.soft_words == 5);
    CHECK(config.rules.accessor_exemption);
    CHECK(config.rules.test_exemption);
    CHECK_FALSE(config.rules.style_override);
    CHECK(config.rules.languages_without_namespaces == std::set<std::string>{"c"});
    CHECK(config.format == OutputFormat::Text);
    CHECK(config.fail_on == FailOn::Error);
    CHECK(config.jobs == 1);
}

TEST_CASE("config file values land in the right fields") {
    auto path = write_temp("namelint_config.json", R"({
        "max_words": 9,
        "soft_words": 4,
        "accessor_exemption": false,
        "style_override": "SNAKE",
        "languages_without_namespaces": ["c", "fortran"],
        "enabled": {"R11_HUNGARIAN": true},
        "weights": {"R2_GRAMMAR": 60.5},
        "test_patterns": ["test*", "spec/**"],
        "project_terms": ["gimp"],
        "format": "machine",
        "fail_on": "warn",
        "jobs": 4
    })");
    AppConfig config;
    load_config_file(path, config);
    CHECK(config.rules.max_words == 9);
    CHECK(config.rules.soft_words == 4);
    CHECK_FALSE(config.rules.accessor_exemption);
    CHECK(config.rules.style_override == NamingStyle::Snake);
    CHECK(config.rules.languages_without_namespaces.count("fortran"));
    CHECK(config.rules.is_enabled(RuleId::R11Hungarian));
    CHECK(config.rules.weight(RuleId::R2Grammar) == 60.5);
    CHECK(config.test_patterns == std::vector<std::string>{"test*", "spec/**"});
    CHECK(config.lexicon.extra_project_terms == std::vector<std::string>{"gimp"});
    CHECK(config.format == OutputFormat::Machine);
    CHECK(config.fail_on == FailOn::Warn);
    CHECK(config.jobs == 4);
    std::filesystem::remove(path);
}

TEST_CASE("unknown keys and bad values are configuration errors") {
    auto unknown = write_temp("namelint_unknown.json", R"({"max_wordz": 9})");
    AppConfig config;
    CHECK_THROWS_AS(load_config_file(unknown, config), ConfigError);
    std::filesystem::remove(unknown);

    auto bad_value = write_temp("namelint_badvalue.json", R"({"fail_on": "sometimes"})");
    CHECK_THROWS_AS(load_config_file(bad_value, config), ConfigError);
    std::filesystem::remove(bad_value);

    auto bad_rule = write_temp("namelint_badrule.json", R"({"weights": {"R99": 5}})");
    CHECK_THROWS_AS(load_config_file(bad_rule, config), ConfigError);
    std::filesystem::remove(bad_rule);

    auto invalid = write_temp("namelint_invalid.json", R"({"soft_words": 9, "max_words": 3})");
    CHECK_THROWS_AS(load_config_file(invalid, config), ConfigError);
    std::filesystem::remove(invalid);

    auto not_json = write_temp("namelint_notjson.json", "max_words = 9\n");
    CHECK_THROWS_AS(load_config_file(not_json, config), ConfigError);
    std::filesystem::remove(not_json);

    CHECK_THROWS_AS(load_config_file("/nonexistent/namelint.config", config), ConfigError);
}

TEST_CASE("config path resolution prefers flag, then environment") {
    auto env_path = write_temp("namelint_env.json", R"({"max_words": 8})");
    setenv("NAMELINT_CONFIG", env_path.string().c_str(), 1);

    auto resolved = resolve_config_path(std::nullopt);
    REQUIRE(resolved);
    CHECK(*resolved == env_path);

    auto flagged = resolve_config_path(std::filesystem::path("/explicit/path.json"));
    REQUIRE(flagged);
    CHECK(flagged->string() == "/explicit/path.json");

    unsetenv("NAMELINT_CONFIG");
    std::filesystem::remove(env_path);
}

TEST_CASE("lexicon paths from config reach the loader") {
    auto dict = write_temp("namelint_extra_dict.txt", "zzgloop\n");
    auto config_file = write_temp("namelint_lexcfg.json", std::string(R"({
        "lexicon": {"dictionary": [")") + dict.string() +
                                       R"("]}
    })");
    AppConfig config;
    load_config_file(config_file, config);
    Lexicon lex = load_lexicon(config.lexicon);
    CHECK(lex.dictionary.count("zzgloop"));
    std::filesystem::remove(dict);
    std::filesystem::remove(config_file);
}
