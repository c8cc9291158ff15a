#include "bch/lie_series.hpp"
#include "oracle/poly_oracle.hpp"

#include <gtest/gtest.h>

using namespace bch;

namespace {

Expr predefined(int id) { return parse(predefined_expression(id)).expression; }

// Keeps only the terms of degree 1..n; the oracle carries the constant term too.
oracle::Poly without_constant(const oracle::Poly &p)
{
	oracle::Poly r(p.max_degree());
	for (const auto &[w, c] : p.terms())
		if (!w.empty())
			r.add(w, c);
	return r;
}

} // namespace

TEST(LieSeries, AllBasesReproduceTheOracle)
{
	for (int id = 0; id < num_predefined_expressions; ++id) {
		const int k = id == 3 ? 3 : 2;
		const int n = id == 3 ? 5 : 7;
		const oracle::Poly expected = without_constant(oracle::evaluate(predefined(id), n));
		for (BasisKind kind : {BasisKind::Lyndon, BasisKind::RightNormed, BasisKind::Hall}) {
			LieSeries s = lie_series(k, predefined(id), n, kind);
			EXPECT_EQ(oracle::expand_series(s), expected)
			    << "expression " << id << " basis " << static_cast<int>(kind);
		}
	}
}

TEST(LieSeries, KnownDenominators)
{
	EXPECT_EQ(bch::bch(5, 0).denominator(), BigInt(720));
	EXPECT_EQ(format_integer(bch::bch(18, 0).denominator()), "64023737057280000");
	const BigInt d = bch::bch(12, 0).denominator();
	EXPECT_EQ(bch::bch(12, 1).denominator(), d);
	EXPECT_EQ(bch::bch(12, 2).denominator(), d);
}

TEST(LieSeries, AccessorsOnBch5)
{
	LieSeries s = bch::bch(5, 0);
	EXPECT_EQ(s.dimension(), 14);
	EXPECT_EQ(s.maximum_degree(), 5);
	EXPECT_EQ(s.number_of_generators(), 2);
	EXPECT_EQ(s.coefficient(2), Rational(BigInt(1), BigInt(2)));
	EXPECT_EQ(s.coefficient_string(8), "-1/720");
	EXPECT_EQ(s.coefficient_string(5), "0/1");
	EXPECT_EQ(s.numerator_of_coefficient(2), BigInt(360));
	EXPECT_EQ(s.degree(10), 5);
	EXPECT_EQ(s.degree_of_generator(10, 0), 3);
	EXPECT_EQ(s.degree_of_generator(10, 1), 2);
	EXPECT_EQ(s.left_factor(10), 3);
	EXPECT_EQ(s.right_factor(10), 2);
	EXPECT_EQ(s.left_factor(0), 0);
	EXPECT_EQ(s.right_factor(1), 0);
	EXPECT_EQ(s.multi_degree(12).to_string(), "(2,3)");
	EXPECT_EQ(s.foliage(10, "AB"), "AABAB");
	EXPECT_EQ(s.basis_element(10, "xy"), "[[x,[x,y]],[x,y]]");
	EXPECT_EQ(s.write_basis_element(nullptr, 10, "AB"), 17u);
	EXPECT_EQ(s.write_coefficient(nullptr, 8), 6u);
	char buf[32] = {};
	s.write_foliage(buf, 4, "AB");
	EXPECT_STREQ(buf, "ABB");
	EXPECT_THROW(s.coefficient(14), ParameterError);
	EXPECT_THROW(s.degree(-1), ParameterError);
	EXPECT_THROW(s.basis_element(2, "A"), ParameterError);
	EXPECT_THROW(s.degree_of_generator(2, 2), ParameterError);
}

TEST(LieSeries, SymmetricBchHasNoEvenTerms)
{
	LieSeries s = symbch(8, 0);
	for (int i = 0; i < s.dimension(); ++i)
		if (s.degree(i) % 2 == 0)
			EXPECT_TRUE(s.numerator_of_coefficient(i).is_zero());
}

TEST(LieSeries, ClassicalBchMirrorSymmetry)
{
	// H(-B,-A) = -H(A,B): the word coefficient of w equals (-1)^(|w|+1) times
	// that of its letter-swapped image.
	const int n = 6;
	oracle::Poly h = oracle::expand_series(bch::bch(n, 0));
	for (const auto &[w, c] : h.terms()) {
		oracle::Word m = w;
		for (int &g : m)
			g = 1 - g;
		EXPECT_EQ(h.at(m), (w.size() % 2 == 1 ? c : -c));
	}
}

TEST(LieSeries, StatisticsOnBch20Lyndon)
{
	LieSeries s = bch::bch(14, 0);
	SeriesStatistics st = statistics(s);
	ASSERT_EQ(st.degrees.size(), 14u);
	EXPECT_EQ(st.degrees[12].dimension, 630);
	EXPECT_EQ(st.degrees[12].nonzero, 630);
	EXPECT_EQ(st.degrees[13].cumulative_dimension, 2538);
	EXPECT_EQ(st.degrees[13].cumulative_nonzero, 1792);
	EXPECT_EQ(st.nonzero, 1792);
	long long dims = 0;
	for (const auto &m : st.multi_degrees)
		dims += m.dimension;
	EXPECT_EQ(dims, 2538);
	EXPECT_TRUE(std::is_sorted(st.multi_degrees.begin(), st.multi_degrees.end(),
	                           [](const auto &a, const auto &b) { return a.multi_degree < b.multi_degree; }));
}

TEST(LieSeries, ThreadCountDoesNotChangeResults)
{
	for (BasisKind kind : {BasisKind::Lyndon, BasisKind::RightNormed, BasisKind::Hall}) {
		RunInfo info;
		LieSeries a = lie_series(2, predefined(0), 12, kind, {.threads = 1}, &info);
		LieSeries b = lie_series(2, predefined(0), 12, kind, {.threads = 4});
		EXPECT_EQ(a.denominator(), b.denominator());
		EXPECT_EQ(a.numerators(), b.numerators());
		EXPECT_TRUE(info.used_goldberg);
		EXPECT_EQ(info.lyndon_words, 747u);
	}
}

TEST(LieSeries, ProgressPhasesInOrder)
{
	std::vector<Phase> seen;
	PipelineOptions options;
	options.progress = [&](Phase p, const RunInfo &, const BigInt &) { seen.push_back(p); };
	lie_series(2, predefined(1), 6, BasisKind::Lyndon, options);
	EXPECT_EQ(seen, (std::vector<Phase>{Phase::LyndonWords, Phase::Coefficients, Phase::Denominator,
	                                    Phase::Conversion}));
}

TEST(LieSeries, SingleGeneratorAndErrors)
{
	LieSeries s = lie_series(1, parse("log(exp(A)*exp(2*A))").expression, 4, 0);
	ASSERT_EQ(s.dimension(), 1);
	EXPECT_EQ(s.coefficient(0), Rational(3));
	EXPECT_THROW(lie_series(2, predefined(0), 0, 0), ParameterError);
	EXPECT_THROW(lie_series(2, predefined(0), 31, 0), ParameterError);
	EXPECT_THROW(lie_series(2, predefined(0), 5, 3), ParameterError);
	EXPECT_THROW(lie_series(1, predefined(0), 5, 0), ParameterError);
	EXPECT_THROW(LieSeries(lyndon_basis(generate_lyndon_words(2, 2)), BigInt(0), std::vector<BigInt>(3)),
	             ParameterError);
}
