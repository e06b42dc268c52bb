#include <algorithm>

#include "smelter/java/analysis.hpp"

namespace smelter::java {

namespace {

bool is_text(const Token& t, std::string_view s) { return t.text == s; }

// Structural tokens only; comments never contribute decision points and
// literal contents are already opaque single tokens.
std::vector<const Token*> structural(const std::vector<Token>& tokens) {
    std::vector<const Token*> out;
    out.reserve(tokens.size());
    for (const auto& t : tokens)
        if (t.kind != TokenKind::Comment) out.push_back(&t);
    return out;
}

// A '?' is a generics wildcard (not a ternary) when the next structural
// token is 'extends', 'super', '>' or ','.
bool is_wildcard_question(const std::vector<const Token*>& ts, std::size_t i) {
    if (i + 1 >= ts.size()) return true;
    const Token& next = *ts[i + 1];
    return is_text(next, "extends") || is_text(next, "super") || is_text(next, ">") ||
           is_text(next, ",");
}

// The while of a do-while closes the do's body: same brace depth as the
// matching 'do' and directly preceded by '}' or ';'.
struct DoWhilePairing {
    std::vector<int> do_depths;
    bool is_do_tail(std::size_t i, const std::vector<const Token*>& ts, int depth) {
        if (do_depths.empty() || do_depths.back() != depth) return false;
        if (i == 0) return false;
        const Token& prev = *ts[i - 1];
        if (!is_text(prev, "}") && !is_text(prev, ";")) return false;
        do_depths.pop_back();
        return true;
    }
};

std::size_t find_matching_paren(const std::vector<const Token*>& ts, std::size_t open) {
    int depth = 0;
    for (std::size_t i = open; i < ts.size(); ++i) {
        if (is_text(*ts[i], "(")) ++depth;
        else if (is_text(*ts[i], ")")) {
            --depth;
            if (depth == 0) return i;
        }
    }
    return ts.size();
}

int count_logical_ops(const std::vector<const Token*>& ts, std::size_t begin, std::size_t end) {
    int n = 0;
    for (std::size_t i = begin; i < end && i < ts.size(); ++i) {
        if (ts[i]->kind == TokenKind::Operator &&
            (ts[i]->text == "&&" || ts[i]->text == "||"))
            ++n;
    }
    return n;
}

// Start of a ternary's condition: walk left from '?' until an expression
// boundary at the same nesting level.
std::size_t ternary_condition_start(const std::vector<const Token*>& ts, std::size_t qmark) {
    int paren = 0;
    int bracket = 0;
    for (std::size_t i = qmark; i-- > 0;) {
        const Token& t = *ts[i];
        if (is_text(t, ")")) ++paren;
        else if (is_text(t, "(")) {
            if (paren == 0) return i + 1;
            --paren;
        } else if (is_text(t, "]")) ++bracket;
        else if (is_text(t, "[")) {
            if (bracket == 0) return i + 1;
            --bracket;
        } else if (paren == 0 && bracket == 0) {
            if (is_text(t, ";") || is_text(t, "{") || is_text(t, "}") || is_text(t, ",") ||
                is_text(t, "?") || is_text(t, ":") || is_text(t, "->") ||
                is_text(t, "return") || is_text(t, "throw") || is_text(t, "case") ||
                is_text(t, "yield") ||
                (t.kind == TokenKind::Operator && t.text.size() >= 1 && t.text.back() == '=' &&
                 t.text != "==" && t.text != "!=" && t.text != "<=" && t.text != ">="))
                return i + 1;
        }
    }
    return 0;
}

}  // namespace

int cyclomatic_complexity(const std::vector<Token>& method_tokens, bool count_logical_operators) {
    auto ts = structural(method_tokens);
    int decision_points = 0;
    int brace_depth = 0;
    DoWhilePairing dws;

    for (std::size_t i = 0; i < ts.size(); ++i) {
        const Token& t = *ts[i];
        if (is_text(t, "{")) {
            ++brace_depth;
            continue;
        }
        if (is_text(t, "}")) {
            --brace_depth;
            continue;
        }
        if (t.kind == TokenKind::Keyword) {
            if (t.text == "if" || t.text == "for" || t.text == "case" || t.text == "catch") {
                ++decision_points;
            } else if (t.text == "do") {
                ++decision_points;
                dws.do_depths.push_back(brace_depth);
            } else if (t.text == "while") {
                if (!dws.is_do_tail(i, ts, brace_depth)) ++decision_points;
            }
            continue;
        }
        if (t.kind == TokenKind::Operator) {
            if (count_logical_operators && (t.text == "&&" || t.text == "||")) {
                ++decision_points;
            } else if (t.text == "?" && !is_wildcard_question(ts, i)) {
                ++decision_points;
            }
        }
    }
    return 1 + decision_points;
}

std::vector<ConditionStat> condition_clauses(const std::vector<Token>& method_tokens) {
    auto ts = structural(method_tokens);
    std::vector<ConditionStat> stats;

    auto push_stat = [&](const Token& at, int ops) {
        ConditionStat s;
        s.line = at.line;
        s.column = at.column;
        s.logical_operator_count = ops;
        s.atomic_clause_count = ops + 1;
        stats.push_back(s);
    };

    for (std::size_t i = 0; i < ts.size(); ++i) {
        const Token& t = *ts[i];
        if (t.kind == TokenKind::Keyword && (t.text == "if" || t.text == "while")) {
            if (i + 1 < ts.size() && is_text(*ts[i + 1], "(")) {
                std::size_t close = find_matching_paren(ts, i + 1);
                push_stat(t, count_logical_ops(ts, i + 2, close));
            }
            continue;
        }
        if (t.kind == TokenKind::Keyword && t.text == "for") {
            if (i + 1 < ts.size() && is_text(*ts[i + 1], "(")) {
                std::size_t open = i + 1;
                std::size_t close = find_matching_paren(ts, open);
                // Locate top-level semicolons; an enhanced for has none.
                std::vector<std::size_t> semis;
                int depth = 0;
                for (std::size_t j = open + 1; j < close; ++j) {
                    if (is_text(*ts[j], "(")) ++depth;
                    else if (is_text(*ts[j], ")")) --depth;
                    else if (depth == 0 && is_text(*ts[j], ";")) semis.push_back(j);
                }
                if (semis.size() >= 2 && semis[1] > semis[0] + 1) {
                    push_stat(t, count_logical_ops(ts, semis[0] + 1, semis[1]));
                }
            }
            continue;
        }
        if (t.kind == TokenKind::Operator && t.text == "?" && !is_wildcard_question(ts, i)) {
            std::size_t start = ternary_condition_start(ts, i);
            push_stat(t, count_logical_ops(ts, start, i));
        }
    }
    return stats;
}

std::vector<SmellLabel> detect_smells(const MethodUnit& method, const SmellThresholds& thresholds) {
    bool cm = method.cyclomatic_complexity > thresholds.cm_complexity_gt;
    bool cc = std::any_of(method.condition_stats.begin(), method.condition_stats.end(),
                          [&](const ConditionStat& s) {
                              return s.logical_operator_count >= thresholds.cc_logical_ops_ge;
                          });
    return {
        SmellLabel{SmellKind::ComplexConditional, cc, Provenance::Heuristic},
        SmellLabel{SmellKind::ComplexMethod, cm, Provenance::Heuristic},
    };
}

const char* smell_kind_name(SmellKind kind) {
    return kind == SmellKind::ComplexConditional ? "complex_conditional" : "complex_method";
}

const char* provenance_name(Provenance p) {
    switch (p) {
        case Provenance::Heuristic: return "heuristic";
        case Provenance::Manual: return "manual";
        case Provenance::Model: return "model";
    }
    return "heuristic";
}

}  // namespace smelter::java
