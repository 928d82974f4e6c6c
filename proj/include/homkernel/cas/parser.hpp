#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "homkernel/cas/scalar.hpp"

namespace homkernel::cas {

/// Parses an arithmetic expression over the declared parameters.
///
/// Grammar (whitespace is insignificant between tokens):
///
///     expr    = term { ("+" | "-") term } ;
///     term    = unary { ("*" | "/") unary } ;
///     unary   = ("-" | "+") unary | power ;
///     power   = primary [ "^" integer ] ;
///     primary = integer | identifier | "(" expr ")" ;
///     identifier = letter { letter | digit | "_" } ;
///
/// Errors: SyntaxError, UnknownParameter, DivisionByZeroConstant.
Scalar parse_expr(std::string_view src, const std::vector<std::string>& params);

/// True when `name` is a valid parameter identifier.
bool is_identifier(std::string_view name);

}  // namespace homkernel::cas
