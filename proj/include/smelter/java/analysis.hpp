#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "smelter/java/lexer.hpp"

namespace smelter::java {

struct ConditionStat {
    int line = 0;
    int column = 0;
    int logical_operator_count = 0;  // short-circuit && / || inside one condition
    int atomic_clause_count = 1;     // always logical_operator_count + 1
};

struct MethodUnit {
    std::string project;
    std::vector<std::string> package_path;
    std::string class_name;   // dotted for nested classes, e.g. "Outer.Inner"
    std::string method_name;  // "#k" ordinal appended when overloaded
    std::string source;       // signature and body, verbatim
    int token_count = 0;      // per the pipeline tokenizer; filled downstream
    int cyclomatic_complexity = 1;
    std::vector<ConditionStat> condition_stats;

    std::string identity() const;
};

enum class SmellKind { ComplexConditional, ComplexMethod };
enum class Provenance { Heuristic, Manual, Model };

struct SmellLabel {
    SmellKind kind;
    bool positive = false;
    Provenance provenance = Provenance::Heuristic;
};

struct SmellThresholds {
    int cm_complexity_gt = 8;   // ComplexMethod when complexity > this
    int cc_logical_ops_ge = 3;  // ComplexConditional when any condition has >= this
    // Extended-McCabe toggle: whether && / || add to cyclomatic complexity.
    bool count_logical_operators = true;
};

struct ExtractError : std::runtime_error {
    explicit ExtractError(const std::string& msg) : std::runtime_error(msg) {}
};

// One MethodUnit per method or constructor body found by brace-balanced
// scanning beneath class-like declarations. Metrics fields come
// pre-populated. Throws ExtractError on unbalanced braces and LexError
// on lexing failures. Zero methods is an empty list, not an error.
std::vector<MethodUnit> extract_methods(const std::string& compilation_unit,
                                        const std::string& project,
                                        bool count_logical_operators = true);

// 1 + decision points over a method token stream. Decision points: if,
// for, while, do, case, catch, ternary '?', and (when
// count_logical_operators) each && / ||. The while closing a do-while
// body is not counted again; 'default' labels never count.
int cyclomatic_complexity(const std::vector<Token>& method_tokens,
                          bool count_logical_operators = true);

// One entry per condition expression: if / while / do-while parens, the
// middle clause of a classic for, and each ternary condition.
std::vector<ConditionStat> condition_clauses(const std::vector<Token>& method_tokens);

// Always two labels (ComplexConditional, ComplexMethod) with heuristic
// provenance; positive per thresholds.
std::vector<SmellLabel> detect_smells(const MethodUnit& method, const SmellThresholds& thresholds);

const char* smell_kind_name(SmellKind kind);
const char* provenance_name(Provenance p);

}  // namespace smelter::java
