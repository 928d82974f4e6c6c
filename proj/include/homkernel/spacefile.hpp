#pragma once

#include <string>

#include "homkernel/homspace.hpp"

/// Line-oriented text format for homogeneous pairs.
///
///     # comment
///     [params]
///     names = a, b, c, d
///     nonzero = a*(a-4*d)          # repeatable
///     set eta = 1                  # fixed value, substituted on load
///
///     [algebra]
///     basis = e1, e2, e3, e4, e5
///     bracket e1 e2 = 2*e2         # both orders must be listed
///     bracket e2 e1 = -2*e2
///
///     [isotropy]
///     h1 = e3 + e4
///
///     [complement]
///     u1 = e1
///
///     [metric]
///     form = a*(th1*th1 - th1*th3) + b*th2*th2
///     # or entries: g13 = -a/2 (missing entries are 0, gij implies gji)
///
/// `form` uses the symmetric product: th_i*th_j contributes half to the
/// (i,j) and (j,i) Gram entries. The coframe names default to th1..thn and
/// can be changed with `coframe = ...`. Expressions use the parse_expr grammar.
namespace homkernel::spacefile {

homspace::HomogeneousPair parse_space(const std::string& text, const std::string& name = "space");
/// Reads and parses a file. Also checks the Jacobi identity.
homspace::HomogeneousPair load_space(const std::string& path);
/// Renders a pair in the same format (Gram entries, no `set` lines).
std::string render_space(const homspace::HomogeneousPair& pair);

}  // namespace homkernel::spacefile
