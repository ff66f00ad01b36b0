#ifndef BAIRE_PARSE_HPP
#define BAIRE_PARSE_HPP

#include <string>

#include "baire/expr.hpp"

namespace baire {

// Function DSL:
//   expr  := "const" rat | "affine" "(" rat "," rat "," expr ")"
//          | "glue" "(" expr "," expr ")" | "spike" "(" expr "," point "," rat ")"
//          | "stack" "(" seq "," rat ")" | "sum" "(" expr "," expr ")"
//          | "prod" "(" expr "," expr ")" | "canon" "(" ord "," side ")"
//   seq   := "cycle" "[" expr ("," expr)* "]" | "fund" "(" ord "," side ")"
//   point := bits "~" bit
//   rat   := int ["/" posint]
//   side  := "two" | "left" | "right" | "one" | "limit" | "cont"
ExprPtr parse_expr(const std::string& text);

Rat parse_rational(const std::string& text);

}  // namespace baire

#endif
