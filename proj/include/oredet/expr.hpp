#pragma once

#include <string>
#include <string_view>

#include "oredet/ore_op.hpp"

namespace oredet {

/// Parses an operator expression in x and d. Grammar (whitespace ignored):
///
///   expr   := ["+" | "-"] term { ("+" | "-") term }
///   term   := factor { ("*" | "/") factor }
///   factor := base [ "^" natural ]
///   base   := integer | "x" | "d" | "(" expr ")"
///
/// Products are noncommutative and normalized with d*f = f*d + f'.
/// The right operand of "/" must be a nonzero element of Q(x) (no d).
/// Throws ParseError with the 1-based column of the problem.
OreOp parse_operator_expr(std::string_view s);

/// Canonical descending form; parse_operator_expr(render_operator(a)) == a.
std::string render_operator(const OreOp& a);

}  // namespace oredet
