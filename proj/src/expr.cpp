#include "bch/expr.hpp"

#include "bch/words.hpp"

#include <algorithm>
#include <array>

namespace bch {

namespace {

Expr make(ExprKind kind, Expr lhs = nullptr, Expr rhs = nullptr)
{
	auto node = std::make_shared<ExprNode>();
	node->kind = kind;
	node->lhs = std::move(lhs);
	node->rhs = std::move(rhs);
	return node;
}

void require(const Expr &e)
{
	if (!e)
		throw ParameterError("null expression operand");
}

} // namespace

Expr identity() { return make(ExprKind::Identity); }

Expr generator(int g)
{
	if (g < 0 || g >= max_generators)
		throw ParameterError("generator index out of range");
	auto node = std::make_shared<ExprNode>();
	node->kind = ExprKind::Generator;
	node->generator = g;
	return node;
}

Expr sum(Expr a, Expr b)
{
	require(a);
	require(b);
	return make(ExprKind::Sum, std::move(a), std::move(b));
}

Expr difference(Expr a, Expr b)
{
	require(a);
	require(b);
	return make(ExprKind::Difference, std::move(a), std::move(b));
}

Expr product(Expr a, Expr b)
{
	require(a);
	require(b);
	return make(ExprKind::Product, std::move(a), std::move(b));
}

Expr negation(Expr a)
{
	require(a);
	return make(ExprKind::Negation, std::move(a));
}

Expr term(BigInt num, BigInt den, Expr a)
{
	require(a);
	if (den.is_zero())
		throw ParameterError("term with zero denominator");
	auto node = std::make_shared<ExprNode>();
	node->kind = ExprKind::Term;
	node->coefficient = Rational(num, den);
	node->lhs = std::move(a);
	return node;
}

Expr exponential(Expr a)
{
	require(a);
	return make(ExprKind::Exponential, std::move(a));
}

Expr logarithm(Expr a)
{
	require(a);
	return make(ExprKind::Logarithm, std::move(a));
}

Expr commutator(Expr a, Expr b)
{
	require(a);
	require(b);
	return make(ExprKind::Commutator, std::move(a), std::move(b));
}

int generator_count(const Expr &e)
{
	if (!e)
		return 0;
	if (e->kind == ExprKind::Generator)
		return e->generator + 1;
	return std::max(generator_count(e->lhs), generator_count(e->rhs));
}

std::string to_string(const Expr &e, std::string_view names)
{
	switch (e->kind) {
	case ExprKind::Identity:
		return "Id";
	case ExprKind::Generator:
		return std::string(1, names.at(e->generator));
	case ExprKind::Sum:
		return "(" + to_string(e->lhs, names) + "+" + to_string(e->rhs, names) + ")";
	case ExprKind::Difference:
		return "(" + to_string(e->lhs, names) + "-" + to_string(e->rhs, names) + ")";
	case ExprKind::Product:
		return "(" + to_string(e->lhs, names) + "*" + to_string(e->rhs, names) + ")";
	case ExprKind::Negation:
		return "(-" + to_string(e->lhs, names) + ")";
	case ExprKind::Term: {
		// The grammar has no signed literals, so a negative factor becomes a
		// negation around the term.
		const Rational &c = e->coefficient;
		std::string lit = to_string(abs(c.num())) + "/" + to_string(c.den());
		std::string t = "(" + lit + "*(" + to_string(e->lhs, names) + "))";
		return c.sign() < 0 ? "(-" + t + ")" : t;
	}
	case ExprKind::Exponential:
		return "exp(" + to_string(e->lhs, names) + ")";
	case ExprKind::Logarithm:
		return "log(" + to_string(e->lhs, names) + ")";
	case ExprKind::Commutator:
		return "[" + to_string(e->lhs, names) + "," + to_string(e->rhs, names) + "]";
	}
	throw InternalError("unknown expression kind");
}

std::string_view predefined_expression(int id)
{
	static constexpr std::array<std::string_view, num_predefined_expressions> formulas = {
	    "log(exp(A)*exp(B))",
	    "log(exp(1/2*A)*exp(B)*exp(1/2*A))",
	    "log(exp(A)*exp(B)*exp(A))",
	    "log(exp(A)*exp(B)*exp(C))",
	    "log(exp(A)*exp(B)*exp(-A)*exp(-B))",
	    "log(exp(1/6*B)*exp(1/2*A)*exp(2/3*B+1/72*[B,[A,B]])*exp(1/2*A)*exp(1/6*B))",
	};
	if (id < 0 || id >= num_predefined_expressions)
		throw ParameterError("no predefined expression " + std::to_string(id));
	return formulas[id];
}

} // namespace bch
