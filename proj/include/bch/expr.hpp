#pragma once

/**
 * Expression trees for formulas such as log(exp(A)*exp(B)).
 *
 * Nodes are immutable and shared; an expression stays alive as long as
 * some handle refers to it, so there is no global arena to release.
 */

#include "bch/arith.hpp"

#include <memory>
#include <string>
#include <string_view>

namespace bch {

enum class ExprKind {
	Identity,
	Generator,
	Sum,
	Difference,
	Product,
	Negation,
	Term,
	Exponential,
	Logarithm,
	Commutator,
};

struct ExprNode;
using Expr = std::shared_ptr<const ExprNode>;

struct ExprNode {
	ExprKind kind;
	int generator = 0;  // Generator
	Rational coefficient; // Term
	Expr lhs;           // unary argument or left operand
	Expr rhs;
};

Expr identity();
Expr generator(int g);
Expr sum(Expr a, Expr b);
Expr difference(Expr a, Expr b);
Expr product(Expr a, Expr b);
Expr negation(Expr a);
// (num/den) * a; throws ParameterError if den == 0.
Expr term(BigInt num, BigInt den, Expr a);
Expr exponential(Expr a);
Expr logarithm(Expr a);
Expr commutator(Expr a, Expr b);

// Highest generator index occurring in e, plus one.
int generator_count(const Expr &e);

// Fully parenthesised text accepted by parse(); names[g] names generator g.
std::string to_string(const Expr &e, std::string_view names);

struct ParsedExpression {
	Expr expression;
	std::string generators; // distinct symbols, sorted; symbol k is generator k
	int number_of_generators = 0;
};

/**
 * Parses the formula syntax
 *
 *   expression := ['-'] summand { ('+'|'-') summand }
 *   summand    := factor { '*' factor }
 *   factor     := rational ['*' primary] | primary
 *   primary    := NAME | 'exp' '(' expression ')' | 'log' '(' expression ')'
 *               | '[' expression ',' expression ']' | '(' expression ')' | 'Id'
 *   rational   := INTEGER ['/' INTEGER]
 *
 * NAME is a single letter; exp, log and Id are reserved. Whitespace is
 * ignored. Throws ParseError with the byte offset of the problem.
 */
ParsedExpression parse(std::string_view input);

// Formula text of the built-in expressions 0..5; ParameterError otherwise.
std::string_view predefined_expression(int id);
inline constexpr int num_predefined_expressions = 6;

} // namespace bch
