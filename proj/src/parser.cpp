#include "bch/expr.hpp"

#include "bch/words.hpp"

#include <algorithm>
#include <cctype>
#include <vector>

namespace bch {

namespace {

enum class Tok { Name, Integer, Exp, Log, Id, Plus, Minus, Star, Slash, LParen, RParen, LBracket, RBracket, Comma, End };

struct Token {
	Tok kind;
	std::size_t offset;
	std::string_view text;
};

std::vector<Token> tokenize(std::string_view in)
{
	std::vector<Token> tokens;
	std::size_t i = 0;
	while (i < in.size()) {
		unsigned char c = static_cast<unsigned char>(in[i]);
		if (std::isspace(c)) {
			++i;
			continue;
		}
		std::size_t start = i;
		if (std::isdigit(c)) {
			while (i < in.size() && std::isdigit(static_cast<unsigned char>(in[i])))
				++i;
			tokens.push_back({Tok::Integer, start, in.substr(start, i - start)});
			continue;
		}
		if (std::isalpha(c)) {
			while (i < in.size() && std::isalpha(static_cast<unsigned char>(in[i])))
				++i;
			auto word = in.substr(start, i - start);
			if (word == "exp")
				tokens.push_back({Tok::Exp, start, word});
			else if (word == "log")
				tokens.push_back({Tok::Log, start, word});
			else if (word == "Id")
				tokens.push_back({Tok::Id, start, word});
			else if (word.size() == 1)
				tokens.push_back({Tok::Name, start, word});
			else
				throw ParseError(start, "unknown identifier '" + std::string(word) +
				                            "' (generator names are single letters)");
			continue;
		}
		Tok kind;
		switch (c) {
		case '+': kind = Tok::Plus; break;
		case '-': kind = Tok::Minus; break;
		case '*': kind = Tok::Star; break;
		case '/': kind = Tok::Slash; break;
		case '(': kind = Tok::LParen; break;
		case ')': kind = Tok::RParen; break;
		case '[': kind = Tok::LBracket; break;
		case ']': kind = Tok::RBracket; break;
		case ',': kind = Tok::Comma; break;
		default:
			throw ParseError(start, std::string("unexpected character '") + in[i] + "'");
		}
		tokens.push_back({kind, start, in.substr(start, 1)});
		++i;
	}
	tokens.push_back({Tok::End, in.size(), {}});
	return tokens;
}

class Parser {
public:
	Parser(std::vector<Token> tokens, std::string_view symbols)
	    : tokens_(std::move(tokens)), symbols_(symbols)
	{}

	Expr parse_all()
	{
		Expr e = expression();
		if (peek().kind != Tok::End)
			fail("unexpected '" + std::string(peek().text) + "'");
		return e;
	}

private:
	const Token &peek(std::size_t ahead = 0) const
	{
		return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)];
	}

	bool accept(Tok k)
	{
		if (peek().kind != k)
			return false;
		++pos_;
		return true;
	}

	void expect(Tok k, const char *what)
	{
		if (!accept(k))
			fail(std::string("expected ") + what);
	}

	[[noreturn]] void fail(const std::string &msg) const
	{
		throw ParseError(peek().offset, msg);
	}

	static bool starts_primary(Tok k)
	{
		return k == Tok::Name || k == Tok::Exp || k == Tok::Log || k == Tok::Id ||
		       k == Tok::LBracket || k == Tok::LParen;
	}

	Expr expression()
	{
		Expr e;
		if (accept(Tok::Minus))
			e = negation(summand());
		else
			e = summand();
		for (;;) {
			if (accept(Tok::Plus))
				e = sum(e, summand());
			else if (accept(Tok::Minus))
				e = difference(e, summand());
			else
				return e;
		}
	}

	Expr summand()
	{
		Expr e = factor();
		while (accept(Tok::Star))
			e = product(e, factor());
		return e;
	}

	Expr factor()
	{
		if (peek().kind != Tok::Integer)
			return primary();
		BigInt num = integer();
		BigInt den = 1;
		if (accept(Tok::Slash)) {
			if (peek().kind != Tok::Integer)
				fail("expected integer denominator");
			std::size_t at = peek().offset;
			den = integer();
			if (den.is_zero())
				throw ParseError(at, "zero denominator");
		}
		// A rational binds to the primary right after it; otherwise it
		// multiplies the identity and any '*' is left to the summand.
		if (peek().kind == Tok::Star && starts_primary(peek(1).kind)) {
			++pos_;
			return term(num, den, primary());
		}
		return term(num, den, identity());
	}

	BigInt integer()
	{
		const Token &t = peek();
		try {
			BigInt v = parse_integer(t.text);
			++pos_;
			return v;
		} catch (const OverflowError &) {
			throw ParseError(t.offset, "integer literal too large");
		}
	}

	Expr primary()
	{
		const Token &t = peek();
		switch (t.kind) {
		case Tok::Name: {
			++pos_;
			auto g = symbols_.find(t.text[0]);
			return generator(static_cast<int>(g));
		}
		case Tok::Id:
			++pos_;
			return identity();
		case Tok::Exp:
		case Tok::Log: {
			++pos_;
			expect(Tok::LParen, "'('");
			Expr arg = expression();
			expect(Tok::RParen, "')'");
			return t.kind == Tok::Exp ? exponential(arg) : logarithm(arg);
		}
		case Tok::LBracket: {
			++pos_;
			Expr a = expression();
			expect(Tok::Comma, "','");
			Expr b = expression();
			expect(Tok::RBracket, "']'");
			return commutator(a, b);
		}
		case Tok::LParen: {
			++pos_;
			Expr a = expression();
			expect(Tok::RParen, "')'");
			return a;
		}
		case Tok::End:
			fail("unexpected end of input");
		default:
			fail("unexpected '" + std::string(t.text) + "'");
		}
	}

	std::vector<Token> tokens_;
	std::string_view symbols_;
	std::size_t pos_ = 0;
};

} // namespace

ParsedExpression parse(std::string_view input)
{
	auto tokens = tokenize(input);
	if (tokens.size() == 1)
		throw ParseError(0, "empty expression");

	std::string symbols;
	for (const auto &t : tokens)
		if (t.kind == Tok::Name && symbols.find(t.text[0]) == std::string::npos)
			symbols += t.text[0];
	std::sort(symbols.begin(), symbols.end());
	if (symbols.size() > static_cast<std::size_t>(max_generators))
		throw ParseError(0, "too many distinct generators (at most 16)");

	ParsedExpression result;
	result.expression = Parser(std::move(tokens), symbols).parse_all();
	result.number_of_generators = static_cast<int>(symbols.size());
	result.generators = std::move(symbols);
	return result;
}

} // namespace bch
