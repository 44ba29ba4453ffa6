#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "alcove/regparts.hpp"
#include "alcove/weight.hpp"

namespace alcove {

struct ParseError : std::runtime_error {
    std::size_t pos;
    ParseError(std::size_t p, const std::string& msg)
        : std::runtime_error(msg + " (at position " + std::to_string(p) + ")"), pos(p) {}
};

/// One parsed atom: L(word;weight), Delta(word;weight), T(weight) or a
/// Custom name applied to a weight.  A missing weight defaults to zero.
struct ExprAtom {
    LabelKind kind = LabelKind::Simple;
    std::string name;       // Custom only
    std::vector<int> word;  // empty = e
    std::optional<Weight> weight;
    std::size_t pos = 0;
};

struct ObjExpr {
    std::vector<ExprAtom> atoms; // tensor factors, left to right
};

/// Grammar, whitespace insensitive:
///   expr   := atom (('*' | unicode tensor sign) atom)*
///   atom   := ('L' | 'Delta' | 'T' | IDENT) '(' inner ')'
///   inner  := word (';' weight)?   for L and Delta
///           | weight               for T and Custom idents
///   word   := 'e' | ('s' DIGIT)+
///   weight := INT (',' INT)*
/// Throws ParseError with the offending position; checks weight lengths and
/// generator indices against the rank.
ObjExpr parse_expr(const std::string& text, int rank);

} // namespace alcove
