#pragma once

#include <stdexcept>
#include <string>

namespace namelint {

// Bad configuration: missing lexicon files, malformed config, invalid
// patterns or rule ids.  The CLI maps these to exit code 2.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Unusable input: unreadable files, malformed identifier lists.
// Also mapped to exit code 2.
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace namelint
