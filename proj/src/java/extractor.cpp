#include <map>
#include <sstream>

#include "smelter/java/analysis.hpp"

namespace smelter::java {

namespace {

const std::unordered_set<std::string_view> kModifiers = {
    "public", "private",   "protected", "static",    "final",
    "abstract", "synchronized", "native", "strictfp", "transient",
    "volatile", "default",
};

bool is_class_like(const Token& t) {
    return t.kind == TokenKind::Keyword &&
           (t.text == "class" || t.text == "interface" || t.text == "enum" ||
            t.text == "record");
}

struct Parser {
    const std::vector<Token>& tokens;       // original stream, with comments
    std::vector<std::size_t> s;             // structural indices into tokens
    const std::string& project;
    std::vector<std::string> package_path;
    std::vector<MethodUnit> units;
    std::vector<std::pair<std::size_t, std::size_t>> unit_spans;  // structural [start, end]

    explicit Parser(const std::vector<Token>& toks, const std::string& proj)
        : tokens(toks), project(proj) {
        for (std::size_t i = 0; i < tokens.size(); ++i)
            if (tokens[i].kind != TokenKind::Comment) s.push_back(i);
    }

    std::size_t size() const { return s.size(); }
    const Token& at(std::size_t i) const { return tokens[s[i]]; }
    bool text_is(std::size_t i, std::string_view w) const {
        return i < size() && at(i).text == w;
    }

    std::size_t match_brace(std::size_t open) const {
        int depth = 0;
        for (std::size_t i = open; i < size(); ++i) {
            if (text_is(i, "{")) ++depth;
            else if (text_is(i, "}")) {
                --depth;
                if (depth == 0) return i;
            }
        }
        throw ExtractError("unbalanced braces: block opened at line " +
                           std::to_string(at(open).line) + " never closes");
    }

    std::size_t match_paren(std::size_t open) const {
        int depth = 0;
        for (std::size_t i = open; i < size(); ++i) {
            if (text_is(i, "(")) ++depth;
            else if (text_is(i, ")")) {
                --depth;
                if (depth == 0) return i;
            }
        }
        throw ExtractError("unbalanced parentheses at line " + std::to_string(at(open).line));
    }

    void check_balanced() const {
        int depth = 0;
        for (std::size_t i = 0; i < size(); ++i) {
            if (text_is(i, "{")) ++depth;
            else if (text_is(i, "}")) {
                --depth;
                if (depth < 0)
                    throw ExtractError("unbalanced braces: stray '}' at line " +
                                       std::to_string(at(i).line));
            }
        }
        if (depth != 0) throw ExtractError("unbalanced braces: " + std::to_string(depth) +
                                           " block(s) never closed");
    }

    void parse_unit() {
        check_balanced();
        std::size_t i = 0;
        while (i < size()) {
            if (text_is(i, "package")) {
                ++i;
                std::string name;
                while (i < size() && !text_is(i, ";")) {
                    if (at(i).kind == TokenKind::Identifier) {
                        if (!name.empty()) name += '.';
                        name += at(i).text;
                    }
                    ++i;
                }
                std::stringstream ss(name);
                std::string part;
                package_path.clear();
                while (std::getline(ss, part, '.'))
                    if (!part.empty()) package_path.push_back(part);
                continue;
            }
            if (is_class_like(at(i)) && i + 1 < size() &&
                at(i + 1).kind == TokenKind::Identifier) {
                i = parse_type_decl(i, "");
                continue;
            }
            ++i;
        }
    }

    // Returns the structural index just past the type's closing brace.
    std::size_t parse_type_decl(std::size_t kw, const std::string& enclosing) {
        bool is_enum = at(kw).text == "enum";
        std::string name = at(kw + 1).text;
        std::string path = enclosing.empty() ? name : enclosing + "." + name;

        std::size_t i = kw + 2;
        while (i < size() && !text_is(i, "{")) {
            if (text_is(i, "(")) { i = match_paren(i) + 1; continue; }  // record header
            if (text_is(i, ";")) return i + 1;  // bodyless declaration
            ++i;
        }
        if (i >= size()) return size();
        std::size_t close = match_brace(i);
        parse_class_body(i, close, path, is_enum);
        return close + 1;
    }

    void parse_class_body(std::size_t open, std::size_t close, const std::string& path,
                          bool is_enum) {
        std::size_t i = open + 1;
        if (is_enum) i = skip_enum_constants(i, close);
        while (i < close) {
            i = parse_member(i, close, path);
        }
    }

    // Enum constants run until the first ';' at body depth; each may carry
    // arguments and an anonymous body.
    std::size_t skip_enum_constants(std::size_t i, std::size_t close) {
        while (i < close) {
            if (text_is(i, "(")) { i = match_paren(i) + 1; continue; }
            if (text_is(i, "{")) { i = match_brace(i) + 1; continue; }
            if (text_is(i, ";")) return i + 1;
            ++i;
        }
        return close;
    }

    std::size_t parse_member(std::size_t start, std::size_t close, const std::string& path) {
        std::size_t i = start;

        // Leading annotations (with optional argument lists) and modifiers.
        while (i < close) {
            if (at(i).kind == TokenKind::Annotation) {
                ++i;
                if (text_is(i, "(")) i = match_paren(i) + 1;
                continue;
            }
            if (at(i).kind == TokenKind::Keyword && kModifiers.count(at(i).text)) {
                ++i;
                continue;
            }
            break;
        }
        if (i >= close) return close;

        if (text_is(i, ";")) return i + 1;

        if (is_class_like(at(i)) && i + 1 < close && at(i + 1).kind == TokenKind::Identifier) {
            return parse_type_decl(i, path);
        }

        // Initializer block (instance or, via the modifier skip, static).
        if (text_is(i, "{")) return match_brace(i) + 1;

        // Walk the declaration looking for the first '(' / '=' / ';' / '{'
        // outside any nesting; that token decides what the member is.
        std::size_t j = i;
        while (j < close) {
            const Token& t = at(j);
            if (t.kind == TokenKind::Annotation) {
                ++j;
                if (text_is(j, "(")) j = match_paren(j) + 1;
                continue;
            }
            if (t.text == "(") {
                if (j > start && at(j - 1).kind == TokenKind::Identifier) {
                    return finish_method(start, j - 1, j, close, path);
                }
                j = match_paren(j) + 1;
                continue;
            }
            if (t.text == "[") {
                // array brackets in types/dimensions
                ++j;
                continue;
            }
            if (t.text == "=") return skip_statement(j, close);
            if (t.text == ";") return j + 1;
            if (t.text == "{") return match_brace(j) + 1;
            ++j;
        }
        return close;
    }

    // Skip past a field initializer to its terminating ';' at top level.
    std::size_t skip_statement(std::size_t i, std::size_t close) {
        while (i < close) {
            if (text_is(i, "(")) { i = match_paren(i) + 1; continue; }
            if (text_is(i, "{")) { i = match_brace(i) + 1; continue; }
            if (text_is(i, ";")) return i + 1;
            ++i;
        }
        return close;
    }

    std::size_t finish_method(std::size_t decl_start, std::size_t name_idx,
                              std::size_t paren_open, std::size_t close,
                              const std::string& path) {
        std::size_t paren_close = match_paren(paren_open);
        std::size_t k = paren_close + 1;
        while (k < close) {
            if (at(k).kind == TokenKind::Annotation) {
                ++k;
                if (text_is(k, "(")) k = match_paren(k) + 1;
                continue;
            }
            if (text_is(k, ";")) return k + 1;  // abstract / native: no body
            if (text_is(k, "{")) break;
            ++k;  // throws clauses and the like
        }
        if (k >= close) return close;

        std::size_t body_close = match_brace(k);
        MethodUnit unit;
        unit.project = project;
        unit.package_path = package_path;
        unit.class_name = path;
        unit.method_name = at(name_idx).text;
        unit_spans.emplace_back(decl_start, body_close);
        units.push_back(std::move(unit));
        return body_close + 1;
    }
};

}  // namespace

std::string MethodUnit::identity() const {
    std::string pkg;
    for (const auto& p : package_path) {
        if (!pkg.empty()) pkg += '.';
        pkg += p;
    }
    return project + "/" + pkg + "/" + class_name + "/" + method_name;
}

std::vector<MethodUnit> extract_methods(const std::string& compilation_unit,
                                        const std::string& project,
                                        bool count_logical_operators) {
    auto tokens = tokenize_java(compilation_unit);
    Parser parser(tokens, project);
    parser.parse_unit();

    auto& units = parser.units;
    for (std::size_t u = 0; u < units.size(); ++u) {
        auto [s_begin, s_end] = parser.unit_spans[u];
        std::size_t t_begin = parser.s[s_begin];
        std::size_t t_end = parser.s[s_end];
        const Token& first = tokens[t_begin];
        const Token& last = tokens[t_end];
        units[u].source = compilation_unit.substr(first.begin, last.end - first.begin);

        std::vector<Token> slice(tokens.begin() + static_cast<std::ptrdiff_t>(t_begin),
                                 tokens.begin() + static_cast<std::ptrdiff_t>(t_end) + 1);
        units[u].cyclomatic_complexity = cyclomatic_complexity(slice, count_logical_operators);
        units[u].condition_stats = condition_clauses(slice);
    }

    // Disambiguate overloads with ordinal suffixes, in declaration order.
    std::map<std::string, std::vector<std::size_t>> by_name;
    for (std::size_t u = 0; u < units.size(); ++u)
        by_name[units[u].class_name + "::" + units[u].method_name].push_back(u);
    for (auto& [name, idxs] : by_name) {
        if (idxs.size() < 2) continue;
        for (std::size_t k = 0; k < idxs.size(); ++k)
            units[idxs[k]].method_name += "#" + std::to_string(k + 1);
    }
    return units;
}

}  // namespace smelter::java
