#pragma once

#include "bch/arith.hpp"
#include "bch/expr.hpp"
#include "bch/words.hpp"

#include <map>
#include <span>
#include <vector>

namespace bch {

/**
 * Coefficients of words in the formal power series of an expression.
 *
 * For a word w of length n every node is evaluated to the upper triangular
 * (n+1)x(n+1) matrix whose (i,j) entry is the coefficient of the subword
 * w[i..j). Generators become shift matrices, products become matrix
 * products, and exp/log become their (finite, nilpotent) power series, so
 * truncation at degree n is exact.
 *
 * The constant terms of all exp/log arguments are validated once, in the
 * constructor: exp needs constant term 0, log needs constant term 1.
 */
class WordCoefficientEvaluator {
public:
	explicit WordCoefficientEvaluator(Expr e);

	// Coefficient of w; the empty word gives the constant term.
	Rational operator()(std::span<const Letter> w) const;

	const Rational &constant_term() const { return constant_term_; }
	const Expr &expression() const { return expr_; }

private:
	Expr expr_;
	Rational constant_term_;
};

Rational word_coefficient(const Expr &e, std::span<const Letter> w);

// True for log(exp(g0)*exp(g1)) built from generators 0 and 1.
bool is_classical_bch(const Expr &e);

/**
 * Coefficients of A^{q1} B^{q2} A^{q3} ... in log(exp(A) exp(B)).
 *
 * The value does not depend on the order of the exponents, so results are
 * cached under the sorted exponent list. Words starting with B are reduced
 * to the A-first case via H(A,B) = -H(-B,-A) mirrored, which contributes a
 * sign (-1)^(n+1).
 */
class GoldbergCache {
public:
	GoldbergCache();

	// Exponents of the alternating block word starting with A.
	Rational coefficient(std::span<const int> exponents);
	// Any word over {0, 1}.
	Rational word(std::span<const Letter> w);

	std::size_t size() const { return cache_.size(); }

private:
	WordCoefficientEvaluator bch_;
	std::map<std::vector<int>, Rational> cache_;
};

// Coefficient of A^{q1} B^{q2} ... (first block in A) in log(exp(A)exp(B)).
// Throws ParameterError for an empty or non-positive exponent list.
Rational goldberg_coefficient(std::span<const int> exponents);

struct CoefficientOptions {
	int threads = 1;
	bool use_goldberg = true; // only effective for the classical BCH expression
};

// values[i] = coefficient of table.word(i) in e.
std::vector<Rational> lyndon_coefficients(const Expr &e, const LyndonTable &table,
                                          const CoefficientOptions &options = {});

/**
 * Checks that the truncation of e to degree check_degree is a Lie
 * polynomial: the constant term vanishes and the Lyndon-basis
 * reconstruction from Lyndon-word coefficients reproduces the coefficient
 * of every word of degree <= check_degree.
 */
bool is_lie_element(const Expr &e, int check_degree);

} // namespace bch
