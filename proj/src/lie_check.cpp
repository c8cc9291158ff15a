#include "bch/bases.hpp"
#include "bch/wordcoeffs.hpp"

#include <algorithm>

namespace bch {

bool is_lie_element(const Expr &e, int check_degree)
{
	if (check_degree < 1 || check_degree > max_degree)
		throw ParameterError("check degree must be in [1, 30]");
	WordCoefficientEvaluator evaluator(e);
	if (!evaluator.constant_term().is_zero())
		return false;

	const int k = std::max(1, generator_count(e));
	LyndonTable table(k, check_degree);
	BasisTable basis = lyndon_basis(table);
	WordExpansion expansion(basis);

	// Lyndon-basis coefficients by unit-triangular substitution, per block.
	std::vector<Rational> x(table.size());
	for (const Block &block : table.blocks().blocks()) {
		for (std::size_t a = 0; a < block.members.size(); ++a) {
			const int i = block.members[a];
			expansion.set_word(table.word(i));
			Rational r = evaluator(table.word(i));
			for (std::size_t b = 0; b < a; ++b) {
				const int j = block.members[b];
				if (x[j].is_zero())
					continue;
				if (std::int64_t c = expansion.coefficient(j); c != 0)
					r -= x[j] * Rational(c);
			}
			x[i] = r;
		}
	}

	// Compare on every word of every degree up to check_degree.
	for (int n = 1; n <= check_degree; ++n) {
		Word w(n, 0);
		for (;;) {
			expansion.set_word(w);
			const PackedDegree pd = pack(multi_degree(w, k));
			Rational expected;
			if (auto b = table.blocks().find(pd))
				for (int j : table.blocks().block(*b).members)
					if (!x[j].is_zero())
						if (std::int64_t c = expansion.coefficient(j); c != 0)
							expected += x[j] * Rational(c);
			if (evaluator(w) != expected)
				return false;

			int p = n - 1;
			while (p >= 0 && w[p] == k - 1)
				w[p--] = 0;
			if (p < 0)
				break;
			++w[p];
		}
	}
	return true;
}

} // namespace bch
