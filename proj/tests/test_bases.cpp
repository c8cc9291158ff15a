#include "bch/bases.hpp"
#include "oracle/poly_oracle.hpp"

#include <gtest/gtest.h>

using namespace bch;
using oracle::Q;

namespace {

using boost::multiprecision::cpp_int;

// All leading principal minors by fraction-free (Bareiss) elimination.
std::vector<cpp_int> leading_minors(std::vector<std::vector<std::int64_t>> m)
{
	const std::size_t d = m.size();
	std::vector<std::vector<cpp_int>> a(d, std::vector<cpp_int>(d));
	for (std::size_t i = 0; i < d; ++i)
		for (std::size_t j = 0; j < d; ++j)
			a[i][j] = m[i][j];
	std::vector<cpp_int> minors;
	cpp_int prev = 1;
	for (std::size_t k = 0; k < d; ++k) {
		minors.push_back(a[k][k]);
		if (a[k][k] == 0)
			break;
		for (std::size_t i = k + 1; i < d; ++i)
			for (std::size_t j = k + 1; j < d; ++j)
				a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
		prev = a[k][k];
	}
	return minors;
}

std::string element(const BasisTable &b, int i) { return b.element_string(i, "AB"); }

} // namespace

TEST(LyndonBasis, ConversionBlocksAreUnitTriangular)
{
	LyndonTable t = generate_lyndon_words(2, 10);
	BasisTable basis = lyndon_basis(t);
	for (std::size_t b = 0; b < t.blocks().size(); ++b) {
		auto m = conversion_matrix(t, basis, static_cast<int>(b));
		for (std::size_t i = 0; i < m.size(); ++i)
			for (std::size_t j = 0; j < m.size(); ++j) {
				if (i == j)
					ASSERT_EQ(m[i][j], 1);
				else if (j > i)
					ASSERT_EQ(m[i][j], 0);
			}
	}
}

TEST(LyndonBasis, PublishedElements)
{
	BasisTable b = lyndon_basis(generate_lyndon_words(2, 5));
	const std::vector<std::string> expected = {
	    "A", "B", "[A,B]", "[A,[A,B]]", "[[A,B],B]", "[A,[A,[A,B]]]", "[A,[[A,B],B]]",
	    "[[[A,B],B],B]", "[A,[A,[A,[A,B]]]]", "[A,[A,[[A,B],B]]]", "[[A,[A,B]],[A,B]]",
	    "[A,[[[A,B],B],B]]", "[[A,B],[[A,B],B]]", "[[[[A,B],B],B],B]"};
	ASSERT_EQ(b.size(), expected.size());
	for (std::size_t i = 0; i < expected.size(); ++i)
		EXPECT_EQ(element(b, static_cast<int>(i)), expected[i]);
	EXPECT_EQ(b.element_string(nullptr, 10, "AB"), expected[10].size());
}

TEST(RightNormedBasis, LeadingMinorsAreUnits)
{
	LyndonTable t = generate_lyndon_words(2, 8);
	BasisTable basis = rightnormed_basis(t);
	for (std::size_t b = 0; b < t.blocks().size(); ++b) {
		auto m = conversion_matrix(t, basis, static_cast<int>(b));
		auto minors = leading_minors(m);
		ASSERT_EQ(minors.size(), m.size());
		// Bareiss pivots are the leading minors themselves
		for (const cpp_int &pivot : minors)
			EXPECT_TRUE(pivot == 1 || pivot == -1) << t.blocks().block(b).multi_degree.to_string();
	}
}

TEST(RightNormedBasis, ThreeGeneratorsLeadingMinors)
{
	LyndonTable t = generate_lyndon_words(3, 6);
	BasisTable basis = rightnormed_basis(t, 2);
	for (std::size_t b = 0; b < t.blocks().size(); ++b)
		for (const cpp_int &pivot : leading_minors(conversion_matrix(t, basis, static_cast<int>(b))))
			EXPECT_TRUE(pivot == 1 || pivot == -1);
}

TEST(RightNormedBasis, ElementsAreRightNested)
{
	LyndonTable t = generate_lyndon_words(2, 12);
	BasisTable b = rightnormed_basis(t);
	for (std::size_t i = 2; i < b.size(); ++i)
		EXPECT_EQ(b.degree(b.left(static_cast<int>(i))), 1);
	const std::vector<std::string> expected = {
	    "A", "B", "[B,A]", "[A,[B,A]]", "[B,[B,A]]", "[A,[A,[B,A]]]", "[B,[A,[B,A]]]",
	    "[B,[B,[B,A]]]", "[A,[A,[A,[B,A]]]]", "[B,[A,[A,[B,A]]]]", "[A,[B,[A,[B,A]]]]",
	    "[B,[B,[A,[B,A]]]]", "[A,[B,[B,[B,A]]]]", "[B,[B,[B,[B,A]]]]"};
	for (std::size_t i = 0; i < expected.size(); ++i)
		EXPECT_EQ(element(b, static_cast<int>(i)), expected[i]);
}

TEST(RightNormedBasis, DeterministicAcrossThreadCounts)
{
	LyndonTable t = generate_lyndon_words(2, 11);
	BasisTable a = rightnormed_basis(t, 1);
	BasisTable b = rightnormed_basis(t, 4);
	ASSERT_EQ(a.size(), b.size());
	for (std::size_t i = 0; i < a.size(); ++i)
		EXPECT_EQ(element(a, static_cast<int>(i)), element(b, static_cast<int>(i)));
}

TEST(HallBasis, AdmissibilityAndDimensions)
{
	BasisTable h = hall_basis(2, 12);
	LyndonTable t = generate_lyndon_words(2, 12);
	ASSERT_EQ(h.size(), t.size());
	for (std::size_t i = 2; i < h.size(); ++i) {
		const int k = static_cast<int>(i);
		const int x = h.left(k), y = h.right(k);
		EXPECT_GT(x, y);
		if (h.degree(x) >= 2)
			EXPECT_LE(h.right(x), y);
	}
	for (int n = 1; n <= 12; ++n) {
		long long count = 0;
		for (std::size_t i = 0; i < h.size(); ++i)
			count += h.degree(static_cast<int>(i)) == n;
		EXPECT_EQ(count, witt_dimension(2, n));
	}
	const std::vector<std::string> expected = {"A", "B", "[B,A]", "[[B,A],A]", "[[B,A],B]"};
	for (std::size_t i = 0; i < expected.size(); ++i)
		EXPECT_EQ(element(h, static_cast<int>(i)), expected[i]);
}

TEST(WordExpansion, AgreesWithPolynomialExpansion)
{
	const int n = 7;
	LyndonTable t = generate_lyndon_words(2, n);
	for (const BasisTable &basis : {lyndon_basis(t), rightnormed_basis(t), hall_basis(2, n)}) {
		WordExpansion expansion(basis);
		for (std::size_t i = 0; i < basis.size(); ++i) {
			const int h = static_cast<int>(i);
			oracle::Poly p = oracle::expand_element(basis, h, n);
			for (std::size_t j = 0; j < t.size(); ++j) {
				auto w = t.word(static_cast<int>(j));
				expansion.set_word(w);
				ASSERT_EQ(Q(expansion.coefficient(h)), p.at(oracle::Word(w.begin(), w.end())));
			}
		}
	}
	BasisTable b = lyndon_basis(t);
	EXPECT_EQ(coeff_of_word_in_element(Word{0, 1}, 2, b), BigInt(1));
	EXPECT_EQ(coeff_of_word_in_element(Word{1, 0}, 2, b), BigInt(-1));
	EXPECT_EQ(coeff_of_word_in_element(Word{1, 0, 0}, 2, b), BigInt(0));
}

TEST(Conversion, RecoversKnownCombination)
{
	// A Lie polynomial with known coordinates, expanded to words and converted back.
	const int n = 8;
	LyndonTable t = generate_lyndon_words(2, n);
	for (const BasisTable &basis : {lyndon_basis(t), rightnormed_basis(t)}) {
		std::vector<long long> coords(basis.size());
		for (std::size_t i = 0; i < coords.size(); ++i)
			coords[i] = static_cast<long long>((i * 7919) % 11) - 5;
		oracle::Poly p(n);
		for (std::size_t i = 0; i < coords.size(); ++i)
			p = p + oracle::expand_element(basis, static_cast<int>(i), n) * Q(coords[i]);
		std::vector<BigInt> words(t.size());
		for (std::size_t j = 0; j < t.size(); ++j) {
			auto w = t.word(static_cast<int>(j));
			words[j] = parse_integer(p.at(oracle::Word(w.begin(), w.end())).str());
		}
		auto x = convert_to_basis(words, t, basis, {.threads = 3});
		for (std::size_t i = 0; i < coords.size(); ++i)
			EXPECT_EQ(x[i], BigInt(coords[i]));
	}
}

TEST(Conversion, HallRewritePreservesTheElement)
{
	const int n = 8;
	LyndonTable t = generate_lyndon_words(2, n);
	BasisTable lyn = lyndon_basis(t);
	BasisTable hall = hall_basis(2, n);
	std::vector<BigInt> coords(lyn.size());
	for (std::size_t i = 0; i < coords.size(); ++i)
		coords[i] = BigInt(static_cast<long long>((i * 104729) % 13) - 6);
	auto h = rewrite_lyndon_to_hall(coords, lyn, hall);
	oracle::Poly a(n), b(n);
	for (std::size_t i = 0; i < coords.size(); ++i) {
		a = a + oracle::expand_element(lyn, static_cast<int>(i), n) * Q(coords[i].to_ll());
		b = b + oracle::expand_element(hall, static_cast<int>(i), n) * Q(h[i].to_ll());
	}
	EXPECT_EQ(a, b);
}

TEST(BasisTable, ParameterChecks)
{
	EXPECT_THROW(BasisTable(BasisKind::Lyndon, 0, 5), ParameterError);
	EXPECT_THROW(BasisTable(BasisKind::Lyndon, 2, 31), ParameterError);
	EXPECT_THROW(basis_kind_from_int(3), ParameterError);
	BasisTable b = lyndon_basis(generate_lyndon_words(2, 3));
	EXPECT_THROW(b.element_string(0, ""), ParameterError);
	LyndonTable t = generate_lyndon_words(2, 4);
	EXPECT_THROW(convert_to_basis(std::vector<BigInt>(3), t, lyndon_basis(t)), ParameterError);
}
