#pragma once

#include <string_view>
#include <vector>

#include "hv/algebra.hpp"
#include "hv/grading.hpp"
#include "hv/scalar.hpp"

namespace hv {

// Text grammar shared by the CLI and the tests. Errors are thrown as
// Error(SyntaxError) with a `line L, column C` position.
//
//   scalar  := ['+'|'-'] sterm (('+'|'-') sterm)*
//   sterm   := power (('*'|'/') power)*
//   power   := primary ['^' ['-'] int]
//   primary := int | 'e' int | '(' scalar ')'
//
//   element := '0' | ['+'|'-'] term (('+'|'-') term)*
//   term    := (factor '*')* basis
//   factor  := int ['/' int] | 'e' int ['^' int] | '(' scalar ')'
//   basis   := ('L'|'I') '[' int (',' int)* ']' | 'CL' | 'CI' | 'CLI' digit+ | 'CLIP'

Scalar parse_scalar(std::string_view text);

/// `[a1,...,an]`
GroupElem parse_group_elem(std::string_view text);

/// `[s1, s2, ...]` of scalars.
std::vector<Scalar> parse_scalar_list(std::string_view text);

/// Parses and validates against ctx (rank, active central keys, I(0) in g').
/// In the derived-prime algebra a bare `CLI` is accepted for CLI0.
Element parse_element(const AlgebraContext& ctx, std::string_view text);

}  // namespace hv
