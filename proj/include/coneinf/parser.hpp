#pragma once

#include <string>

#include "coneinf/polynomial.hpp"

namespace coneinf {

// Grammar:
//   expr     := sign? term (('+'|'-') term)*
//   term     := factor ('*' factor)*
//   factor   := base ('^' nat)?
//   base     := rational | var | '(' expr ')'
//   rational := '-'? digits ('/' digits)?
// Multiplication is always explicit ("2*x", never "2x"). Variables must be
// declared in the context. Errors carry a 0-based character offset.
Polynomial parse_polynomial(const std::string& text, const ContextPtr& ctx);

// Inverse of parse_polynomial up to whitespace: terms are printed in
// descending grevlex order, unit coefficients are omitted, and
// parse_polynomial(format_polynomial(f), ctx) == f.
std::string format_polynomial(const Polynomial& p);

} // namespace coneinf
