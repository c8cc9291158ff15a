#include "bch/wordcoeffs.hpp"

#include "parallel.hpp"

#include <algorithm>
#include <unordered_map>

namespace bch {

namespace {

// Upper triangular matrix over the subword intervals of one word.
class IntervalMatrix {
public:
	explicit IntervalMatrix(int n) : n_(n), a_((n + 1) * (n + 1)) {}

	static IntervalMatrix identity(int n)
	{
		IntervalMatrix m(n);
		for (int i = 0; i <= n; ++i)
			m(i, i) = Rational(1);
		return m;
	}

	int n() const { return n_; }
	Rational &operator()(int i, int j) { return a_[i * (n_ + 1) + j]; }
	const Rational &operator()(int i, int j) const { return a_[i * (n_ + 1) + j]; }

	bool is_zero() const
	{
		return std::all_of(a_.begin(), a_.end(), [](const Rational &r) { return r.is_zero(); });
	}

	IntervalMatrix &operator+=(const IntervalMatrix &b)
	{
		for (std::size_t k = 0; k < a_.size(); ++k)
			if (!b.a_[k].is_zero())
				a_[k] += b.a_[k];
		return *this;
	}
	IntervalMatrix &operator-=(const IntervalMatrix &b)
	{
		for (std::size_t k = 0; k < a_.size(); ++k)
			if (!b.a_[k].is_zero())
				a_[k] -= b.a_[k];
		return *this;
	}
	IntervalMatrix &operator*=(const Rational &c)
	{
		for (auto &x : a_)
			if (!x.is_zero())
				x *= c;
		return *this;
	}
	IntervalMatrix operator-() const
	{
		IntervalMatrix r = *this;
		for (auto &x : r.a_)
			x = -x;
		return r;
	}

	friend IntervalMatrix operator*(const IntervalMatrix &a, const IntervalMatrix &b)
	{
		const int n = a.n_;
		IntervalMatrix c(n);
		for (int i = 0; i <= n; ++i)
			for (int k = i; k <= n; ++k) {
				const Rational &aik = a(i, k);
				if (aik.is_zero())
					continue;
				for (int j = k; j <= n; ++j) {
					const Rational &bkj = b(k, j);
					if (!bkj.is_zero())
						c(i, j) += aik * bkj;
				}
			}
		return c;
	}

private:
	int n_;
	std::vector<Rational> a_;
};

Rational validate_constant_terms(const Expr &e)
{
	switch (e->kind) {
	case ExprKind::Identity:
		return Rational(1);
	case ExprKind::Generator:
		return Rational();
	case ExprKind::Sum:
		return validate_constant_terms(e->lhs) + validate_constant_terms(e->rhs);
	case ExprKind::Difference:
		return validate_constant_terms(e->lhs) - validate_constant_terms(e->rhs);
	case ExprKind::Product:
		return validate_constant_terms(e->lhs) * validate_constant_terms(e->rhs);
	case ExprKind::Negation:
		return -validate_constant_terms(e->lhs);
	case ExprKind::Term:
		return e->coefficient * validate_constant_terms(e->lhs);
	case ExprKind::Exponential:
		if (!validate_constant_terms(e->lhs).is_zero())
			throw DomainError("argument of exp has nonzero constant term");
		return Rational(1);
	case ExprKind::Logarithm:
		if (validate_constant_terms(e->lhs) != Rational(1))
			throw DomainError("argument of log does not have constant term 1");
		return Rational();
	case ExprKind::Commutator:
		validate_constant_terms(e->lhs);
		validate_constant_terms(e->rhs);
		return Rational();
	}
	throw InternalError("unknown expression kind");
}

class WordEvaluation {
public:
	explicit WordEvaluation(std::span<const Letter> w) : word_(w), n_(static_cast<int>(w.size())) {}

	const IntervalMatrix &eval(const ExprNode *e)
	{
		auto it = memo_.find(e);
		if (it != memo_.end())
			return it->second;
		IntervalMatrix m = compute(e);
		return memo_.emplace(e, std::move(m)).first->second;
	}

private:
	IntervalMatrix compute(const ExprNode *e)
	{
		switch (e->kind) {
		case ExprKind::Identity:
			return IntervalMatrix::identity(n_);
		case ExprKind::Generator: {
			IntervalMatrix m(n_);
			for (int i = 0; i < n_; ++i)
				if (word_[i] == e->generator)
					m(i, i + 1) = Rational(1);
			return m;
		}
		case ExprKind::Sum: {
			IntervalMatrix m = eval(e->lhs.get());
			m += eval(e->rhs.get());
			return m;
		}
		case ExprKind::Difference: {
			IntervalMatrix m = eval(e->lhs.get());
			m -= eval(e->rhs.get());
			return m;
		}
		case ExprKind::Product:
			return eval(e->lhs.get()) * eval(e->rhs.get());
		case ExprKind::Negation:
			return -eval(e->lhs.get());
		case ExprKind::Term: {
			IntervalMatrix m = eval(e->lhs.get());
			m *= e->coefficient;
			return m;
		}
		case ExprKind::Commutator: {
			const IntervalMatrix &a = eval(e->lhs.get());
			const IntervalMatrix &b = eval(e->rhs.get());
			IntervalMatrix m = a * b;
			m -= b * a;
			return m;
		}
		case ExprKind::Exponential: {
			// exp(S) = sum_k S^k / k!, S strictly upper triangular.
			const IntervalMatrix &s = eval(e->lhs.get());
			IntervalMatrix result = IntervalMatrix::identity(n_);
			IntervalMatrix power = IntervalMatrix::identity(n_);
			for (int k = 1; k <= n_; ++k) {
				power = power * s;
				power *= Rational(1, k);
				if (power.is_zero())
					break;
				result += power;
			}
			return result;
		}
		case ExprKind::Logarithm: {
			// log(S) = sum_k (-1)^(k+1)/k (S - 1)^k.
			IntervalMatrix t = eval(e->lhs.get());
			for (int i = 0; i <= n_; ++i)
				t(i, i) = Rational();
			IntervalMatrix result(n_);
			IntervalMatrix power = IntervalMatrix::identity(n_);
			for (int k = 1; k <= n_; ++k) {
				power = power * t;
				if (power.is_zero())
					break;
				IntervalMatrix contribution = power;
				contribution *= Rational(k % 2 == 1 ? 1 : -1, k);
				result += contribution;
			}
			return result;
		}
		}
		throw InternalError("unknown expression kind");
	}

	std::span<const Letter> word_;
	int n_;
	std::unordered_map<const ExprNode *, IntervalMatrix> memo_;
};

std::vector<int> block_exponents(std::span<const Letter> w)
{
	std::vector<int> q;
	for (std::size_t i = 0; i < w.size(); ++i) {
		if (i == 0 || w[i] != w[i - 1])
			q.push_back(0);
		++q.back();
	}
	return q;
}

Expr classical_bch()
{
	return logarithm(product(exponential(generator(0)), exponential(generator(1))));
}

} // namespace

WordCoefficientEvaluator::WordCoefficientEvaluator(Expr e) : expr_(std::move(e))
{
	if (!expr_)
		throw ParameterError("null expression");
	constant_term_ = validate_constant_terms(expr_);
}

Rational WordCoefficientEvaluator::operator()(std::span<const Letter> w) const
{
	if (w.empty())
		return constant_term_;
	WordEvaluation eval(w);
	return eval.eval(expr_.get())(0, static_cast<int>(w.size()));
}

Rational word_coefficient(const Expr &e, std::span<const Letter> w)
{
	return WordCoefficientEvaluator(e)(w);
}

bool is_classical_bch(const Expr &e)
{
	auto is_exp_of = [](const Expr &x, int g) {
		return x && x->kind == ExprKind::Exponential && x->lhs->kind == ExprKind::Generator &&
		       x->lhs->generator == g;
	};
	return e && e->kind == ExprKind::Logarithm && e->lhs->kind == ExprKind::Product &&
	       is_exp_of(e->lhs->lhs, 0) && is_exp_of(e->lhs->rhs, 1);
}

GoldbergCache::GoldbergCache() : bch_(classical_bch()) {}

Rational GoldbergCache::coefficient(std::span<const int> exponents)
{
	if (exponents.empty())
		throw ParameterError("empty exponent list");
	std::vector<int> key(exponents.begin(), exponents.end());
	if (std::any_of(key.begin(), key.end(), [](int q) { return q <= 0; }))
		throw ParameterError("exponents must be positive");
	std::sort(key.begin(), key.end());
	auto it = cache_.find(key);
	if (it != cache_.end())
		return it->second;

	Word w;
	for (std::size_t b = 0; b < key.size(); ++b)
		w.insert(w.end(), key[b], static_cast<Letter>(b % 2));
	Rational c = bch_(w);
	cache_.emplace(std::move(key), c);
	return c;
}

Rational GoldbergCache::word(std::span<const Letter> w)
{
	if (w.empty())
		return Rational();
	Rational c = coefficient(block_exponents(w));
	if (w[0] == 0 || w.size() % 2 == 1)
		return c;
	return -c;
}

Rational goldberg_coefficient(std::span<const int> exponents)
{
	GoldbergCache cache;
	return cache.coefficient(exponents);
}

std::vector<Rational> lyndon_coefficients(const Expr &e, const LyndonTable &table,
                                          const CoefficientOptions &options)
{
	WordCoefficientEvaluator evaluator(e);
	std::vector<Rational> values(table.size());

	if (options.use_goldberg && is_classical_bch(e) && table.num_generators() == 2) {
		GoldbergCache cache;
		for (std::size_t i = 0; i < table.size(); ++i)
			values[i] = cache.word(table.word(static_cast<int>(i)));
		return values;
	}

	detail::parallel_for(table.size(), options.threads, [&](std::size_t i, int) {
		try {
			values[i] = evaluator(table.word(static_cast<int>(i)));
		} catch (const OverflowError &err) {
			throw OverflowError(std::string(err.what()) + " (degree " +
			                    std::to_string(table.degree(static_cast<int>(i))) + ")");
		}
	});
	return values;
}

} // namespace bch
