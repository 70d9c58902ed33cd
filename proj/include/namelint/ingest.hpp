#pragma once

#include <filesystem>
#include <fstream>
#include <optional>
#include <regex>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "json.hpp"
#include "namelint/errors.hpp"
#include "namelint/tokenizer.hpp"

namespace namelint {

enum class RecordKind {
    Method,
    Function,
    Test,
    Unknown,
};

inline const char* to_string(RecordKind k) {
    switch (k) {
    case RecordKind::Method: return "method";
    case RecordKind::Function: return "function";
    case RecordKind::Test: return "test";
    case RecordKind::Unknown: return "unknown";
    }
    return "unknown";
}

inline bool record_kind_from_string(std::string_view text, RecordKind& out) {
    for (RecordKind k : {RecordKind::Method, RecordKind::Function, RecordKind::Test,
                         RecordKind::Unknown}) {
        if (text == to_string(k)) {
            out = k;
            return true;
        }
    }
    return false;
}

// One extracted method/function name plus location and context metadata.
struct IdentifierRecord {
    std::string name;
    RecordKind kind = RecordKind::Method;
    std::string language = "unknown";
    std::string path;
    int line = 1;
    std::optional<std::string> container;
    std::vector<std::string> project_terms_hint;
};

inline bool valid_identifier_name(std::string_view name) {
    if (name.empty()) return false;
    for (char c : name) {
        if (!detail::is_letter(c) && !detail::is_digit_ch(c) && c != '_' && c != '-') return false;
    }
    return true;
}

/// Maps a file extension to a language tag; empty when unknown.
inline std::string extension_language(const std::filesystem::path& path) {
    std::string ext = path.extension().string();
    for (char& c : ext) c = detail::to_lower_ch(c);
    if (ext == ".c" || ext == ".h") return "c";
    if (ext == ".cpp" || ext == ".cc" || ext == ".cxx" || ext == ".hpp" || ext == ".hh" ||
        ext == ".hxx")
        return "cpp";
    if (ext == ".java") return "java";
    if (ext == ".cs") return "csharp";
    if (ext == ".py") return "python";
    if (ext == ".js" || ext == ".jsx" || ext == ".ts" || ext == ".tsx") return "javascript";
    if (ext == ".go") return "go";
    if (ext == ".rs") return "rust";
    return "";
}

/// Reads a line-delimited identifier list: one JSON object per line with
/// fields name (required), kind, language, path, line, container.
/// A malformed line rejects the whole file.
inline std::vector<IdentifierRecord> read_identifier_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open identifier file: " + path.string());

    std::vector<IdentifierRecord> records;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::string_view trimmed(line);
        while (!trimmed.empty() && (trimmed.front() == ' ' || trimmed.front() == '\t'))
            trimmed.remove_prefix(1);
        if (trimmed.empty()) continue;

        auto fail = [&](const std::string& why) -> InputError {
            return InputError(path.string() + ":" + std::to_string(lineno) + ": " + why);
        };
        nlohmann::json obj = nlohmann::json::parse(trimmed, nullptr, false);
        if (obj.is_discarded() || !obj.is_object()) throw fail("not a JSON object");

        IdentifierRecord rec;
        if (!obj.contains("name") || !obj["name"].is_string())
            throw fail("missing required string field \"name\"");
        rec.name = obj["name"].get<std::string>();
        if (!valid_identifier_name(rec.name))
            throw fail("invalid identifier name: \"" + rec.name + "\"");

        if (obj.contains("kind")) {
            if (!obj["kind"].is_string() ||
                !record_kind_from_string(obj["kind"].get<std::string>(), rec.kind))
                throw fail("invalid \"kind\"");
        }
        if (obj.contains("path")) {
            if (!obj["path"].is_string()) throw fail("invalid \"path\"");
            rec.path = obj["path"].get<std::string>();
        }
        if (obj.contains("line")) {
            long long value = obj["line"].is_number_integer() ? obj["line"].get<long long>() : 0;
            if (value < 1 || value > 2000000000LL)
                throw fail("\"line\" must be a positive integer");
            rec.line = static_cast<int>(value);
        }
        if (obj.contains("language")) {
            if (!obj["language"].is_string()) throw fail("invalid \"language\"");
            rec.language = obj["language"].get<std::string>();
        } else if (!rec.path.empty()) {
            std::string inferred = extension_language(rec.path);
            if (!inferred.empty()) rec.language = inferred;
        }
        if (obj.contains("container")) {
            if (!obj["container"].is_string()) throw fail("invalid \"container\"");
            rec.container = obj["container"].get<std::string>();
        }
        if (obj.contains("project_terms_hint")) {
            if (!obj["project_terms_hint"].is_array()) throw fail("invalid \"project_terms_hint\"");
            for (const auto& term : obj["project_terms_hint"]) {
                if (!term.is_string()) throw fail("invalid \"project_terms_hint\"");
                rec.project_terms_hint.push_back(term.get<std::string>());
            }
        }
        records.push_back(std::move(rec));
    }
    return records;
}

namespace detail {

inline const std::regex& identifier_regex() {
    static const std::regex re("[A-Za-z_][A-Za-z0-9_]*");
    return re;
}

inline bool is_reserved_word(const std::string& w) {
    static const std::unordered_set<std::string> kReserved = {
        "if",     "else",   "for",    "while",  "switch", "return", "catch",  "do",
        "new",    "delete", "sizeof", "throw",  "case",   "default", "goto",  "try",
        "assert", "not",    "and",    "or",     "in",     "is",      "with",  "print",
        "defer",  "match",  "select", "yield",  "await",  "lambda",  "except", "elif",
        "raise",  "pass",   "foreach", "lock",  "using",  "static_assert",
    };
    return kReserved.count(w) > 0;
}

struct ContainerFrame {
    int depth = 0;          // brace depth where the type body starts
    int indent = 0;         // indentation column (python)
    std::string name;
};

// Heuristic scan for `def name(`-style definitions in indentation languages.
inline void scan_python_like(const std::string& text, const std::string& path,
                             std::vector<IdentifierRecord>& out) {
    static const std::regex def_re(R"(^(\s*)(?:async\s+)?def\s+([A-Za-z_][A-Za-z0-9_]*)\s*\()");
    static const std::regex class_re(R"(^(\s*)class\s+([A-Za-z_][A-Za-z0-9_]*))");
    std::vector<ContainerFrame> stack;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::smatch m;
        if (std::regex_search(line, m, class_re)) {
            ContainerFrame frame;
            frame.indent = static_cast<int>(m[1].length());
            frame.name = m[2];
            while (!stack.empty() && stack.back().indent >= frame.indent) stack.pop_back();
            stack.push_back(frame);
            continue;
        }
        if (std::regex_search(line, m, def_re)) {
            int indent = static_cast<int>(m[1].length());
            while (!stack.empty() && stack.back().indent >= indent) stack.pop_back();
            IdentifierRecord rec;
            rec.name = m[2];
            rec.kind = stack.empty() ? RecordKind::Function : RecordKind::Method;
            rec.language = "python";
            rec.path = path;
            rec.line = lineno;
            if (!stack.empty()) rec.container = stack.back().name;
            if (valid_identifier_name(rec.name)) out.push_back(std::move(rec));
        }
    }
}

// Heuristic scan for brace languages: a type-ish word, a name, an open
// parenthesis, and eventually an opening brace.  Not a parser.
inline void scan_brace_language(const std::string& text, const std::string& path,
                                const std::string& language,
                                std::vector<IdentifierRecord>& out) {
    static const std::regex func_re(
        R"(^\s*(?:[A-Za-z_][A-Za-z0-9_:<>,&*\[\]\s]*?[\s&*])?([A-Za-z_][A-Za-z0-9_]*)\s*\([^;{}]*\)\s*(?:const\s*)?(?:noexcept\s*)?(?:override\s*)?\{)");
    static const std::regex go_re(
        R"(^\s*func\s+(?:\([^)]*\)\s*)?([A-Za-z_][A-Za-z0-9_]*)\s*\()");
    static const std::regex rust_re(R"(^\s*(?:pub\s+)?(?:async\s+)?fn\s+([A-Za-z_][A-Za-z0-9_]*))");
    static const std::regex js_re(
        R"(^\s*(?:export\s+)?(?:async\s+)?function\s+([A-Za-z_][A-Za-z0-9_]*)\s*\()");
    static const std::regex type_re(
        R"((?:class|struct|interface)\s+([A-Za-z_][A-Za-z0-9_]*))");

    std::vector<ContainerFrame> stack;
    int depth = 0;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    std::optional<ContainerFrame> pending_type;
    while (std::getline(in, line)) {
        ++lineno;
        std::smatch m;
        if (std::regex_search(line, m, type_re)) {
            pending_type = ContainerFrame{depth, 0, m[1]};
        }

        const std::regex* re = nullptr;
        if (language == "go")
            re = &go_re;
        else if (language == "rust")
            re = &rust_re;
        else if (language == "javascript")
            re = &js_re;
        else
            re = &func_re;
        if (std::regex_search(line, m, *re)) {
            std::string name = m[1];
            bool inside_type = !stack.empty();
            // Skip flow keywords, constructors, destructors, operators.
            bool skip = is_reserved_word(name) || name.rfind("operator", 0) == 0 ||
                        line.find('~') != std::string::npos ||
                        (inside_type && name == stack.back().name);
            if (!skip && valid_identifier_name(name)) {
                IdentifierRecord rec;
                rec.name = name;
                rec.kind = inside_type ? RecordKind::Method : RecordKind::Function;
                rec.language = language;
                rec.path = path;
                rec.line = lineno;
                if (inside_type) rec.container = stack.back().name;
                out.push_back(std::move(rec));
            }
        }

        for (char c : line) {
            if (c == '{') {
                if (pending_type) {
                    pending_type->depth = depth;
                    stack.push_back(*pending_type);
                    pending_type.reset();
                }
                ++depth;
            } else if (c == '}') {
                --depth;
                while (!stack.empty() && stack.back().depth >= depth) stack.pop_back();
            }
        }
    }
}

}  // namespace detail

/// Best-effort lexical extraction of method/function definitions.
/// `language` must be a supported tag or "auto" (extension detection).
inline std::vector<IdentifierRecord> scan_source(const std::filesystem::path& path,
                                                 const std::string& language) {
    std::string effective = language;
    if (effective == "auto") {
        effective = extension_language(path);
        if (effective.empty())
            throw ConfigError("cannot detect language from extension: " + path.string());
    }
    static const std::unordered_set<std::string> kSupported = {
        "c", "cpp", "java", "csharp", "python", "javascript", "go", "rust"};
    if (!kSupported.count(effective)) throw ConfigError("unsupported language tag: " + effective);

    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open source file: " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();

    std::vector<IdentifierRecord> out;
    if (effective == "python")
        detail::scan_python_like(text, path.string(), out);
    else
        detail::scan_brace_language(text, path.string(), effective, out);
    return out;
}

// Compiled test-name patterns.  Globs use * (any run), ? (one char) and
// ** (any run including '/'); a "re:" prefix switches to raw ECMAScript
// regular expressions.
class TestPatterns {
public:
    TestPatterns() = default;

    explicit TestPatterns(const std::vector<std::string>& patterns) {
        for (const auto& p : patterns) {
            try {
                if (p.rfind("re:", 0) == 0)
                    regexes_.emplace_back(p.substr(3));
                else
                    regexes_.emplace_back(glob_to_regex(p));
            } catch (const std::regex_error& e) {
                throw ConfigError("invalid test pattern \"" + p + "\": " + e.what());
            }
        }
    }

    bool matches(const IdentifierRecord& rec) const {
        for (const auto& re : regexes_) {
            if (std::regex_match(rec.name, re)) return true;
            if (!rec.path.empty() && std::regex_match(rec.path, re)) return true;
        }
        return false;
    }

    static std::string glob_to_regex(std::string_view glob) {
        std::string re;
        for (std::size_t i = 0; i < glob.size(); ++i) {
            char c = glob[i];
            if (c == '*') {
                if (i + 1 < glob.size() && glob[i + 1] == '*') {
                    re += ".*";
                    ++i;
                } else {
                    re += "[^/]*";
                }
            } else if (c == '?') {
                re += '.';
            } else if (std::string_view("\\^$.|+()[]{}").find(c) != std::string_view::npos) {
                re += '\\';
                re += c;
            } else {
                re += c;
            }
        }
        return re;
    }

private:
    std::vector<std::regex> regexes_;
};

/// Marks a record as a test when its name or path matches any pattern.
/// Idempotent; records already classified stay classified.
inline IdentifierRecord classify_test_method(IdentifierRecord record,
                                             const TestPatterns& patterns) {
    if (record.kind != RecordKind::Test && patterns.matches(record))
        record.kind = RecordKind::Test;
    return record;
}

inline IdentifierRecord classify_test_method(IdentifierRecord record,
                                             const std::vector<std::string>& patterns) {
    return classify_test_method(std::move(record), TestPatterns(patterns));
}

}  // namespace namelint
