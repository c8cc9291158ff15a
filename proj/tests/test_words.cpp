#include "bch/words.hpp"
#include "bch/errors.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

using namespace bch;

namespace {

// Lyndon by definition: primitive and strictly smaller than every rotation.
bool lyndon_by_rotations(const Word &w)
{
	for (std::size_t r = 1; r < w.size(); ++r) {
		Word rot(w.begin() + static_cast<std::ptrdiff_t>(r), w.end());
		rot.insert(rot.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(r));
		if (!(w < rot))
			return false;
	}
	return !w.empty();
}

std::vector<Word> all_words(int k, int n)
{
	std::vector<Word> out{{}};
	for (int len = 1; len <= n; ++len) {
		std::vector<Word> next;
		for (const Word &w : out)
			if (static_cast<int>(w.size()) == len - 1)
				for (int g = 0; g < k; ++g) {
					Word v = w;
					v.push_back(static_cast<Letter>(g));
					next.push_back(v);
				}
		out.insert(out.end(), next.begin(), next.end());
	}
	return out;
}

Word to_word(std::span<const Letter> s) { return Word(s.begin(), s.end()); }

} // namespace

TEST(Lyndon, MatchesBruteForceEnumeration)
{
	for (auto [k, n] : {std::pair{2, 12}, std::pair{3, 7}, std::pair{4, 5}}) {
		std::vector<Word> expected;
		for (const Word &w : all_words(k, n))
			if (lyndon_by_rotations(w))
				expected.push_back(w);
		std::stable_sort(expected.begin(), expected.end(),
		                 [](const Word &a, const Word &b) { return a.size() < b.size(); });
		// stable sort keeps the lexicographic order within each length
		std::sort(expected.begin(), expected.end(), [](const Word &a, const Word &b) {
			return a.size() != b.size() ? a.size() < b.size() : a < b;
		});
		LyndonTable t = generate_lyndon_words(k, n);
		ASSERT_EQ(t.size(), expected.size()) << "K=" << k << " N=" << n;
		for (std::size_t i = 0; i < t.size(); ++i)
			EXPECT_EQ(to_word(t.word(static_cast<int>(i))), expected[i]);
	}
}

TEST(Lyndon, IsLyndonAgreesWithRotationDefinition)
{
	for (const Word &w : all_words(3, 7))
		EXPECT_EQ(is_lyndon(w), lyndon_by_rotations(w)) << word_string(w, "ABC");
}

TEST(Lyndon, StandardFactorization)
{
	LyndonTable t = generate_lyndon_words(2, 12);
	for (std::size_t i = 2; i < t.size(); ++i) {
		const int k = static_cast<int>(i);
		Word w = to_word(t.word(k));
		Word u = to_word(t.word(t.left(k)));
		Word v = to_word(t.word(t.right(k)));
		Word uv = u;
		uv.insert(uv.end(), v.begin(), v.end());
		EXPECT_EQ(uv, w);
		// v is the longest proper Lyndon suffix
		for (std::size_t s = 1; s < w.size(); ++s) {
			Word suffix(w.begin() + static_cast<std::ptrdiff_t>(s), w.end());
			if (is_lyndon(suffix)) {
				EXPECT_EQ(suffix, v);
				break;
			}
		}
		auto [a, b] = standard_factorization(w);
		EXPECT_EQ(a, u);
		EXPECT_EQ(b, v);
	}
	EXPECT_THROW(standard_factorization(Word{1, 0}), ParameterError);
	EXPECT_THROW(standard_factorization(Word{0}), ParameterError);
}

TEST(Lyndon, KnownCounts)
{
	EXPECT_EQ(generate_lyndon_words(2, 5).size(), 14u);
	EXPECT_EQ(generate_lyndon_words(2, 20).size(), 111013u);
}

TEST(Lyndon, WittFormula)
{
	for (int k : {2, 3}) {
		LyndonTable t = generate_lyndon_words(k, 12);
		for (int n = 1; n <= 12; ++n)
			EXPECT_EQ(static_cast<long long>(t.count_of_degree(n)), witt_dimension(k, n))
			    << "K=" << k << " n=" << n;
	}
	EXPECT_EQ(witt_dimension(2, 20), 52377);
	EXPECT_EQ(witt_dimension(2, 1), 2);
}

TEST(Lyndon, FindAndBlocks)
{
	LyndonTable t = generate_lyndon_words(2, 8);
	for (std::size_t i = 0; i < t.size(); ++i)
		EXPECT_EQ(t.find(t.word(static_cast<int>(i))), std::optional<int>(static_cast<int>(i)));
	EXPECT_FALSE(t.find(Word{1, 0}).has_value());
	std::set<int> seen;
	for (const Block &b : t.blocks().blocks()) {
		for (int m : b.members) {
			EXPECT_EQ(t.multi_degree(m), b.multi_degree);
			EXPECT_TRUE(seen.insert(m).second);
		}
		EXPECT_TRUE(std::is_sorted(b.members.begin(), b.members.end()));
	}
	EXPECT_EQ(seen.size(), t.size());
}

TEST(Lyndon, ParameterRanges)
{
	EXPECT_THROW(generate_lyndon_words(0, 5), ParameterError);
	EXPECT_THROW(generate_lyndon_words(17, 5), ParameterError);
	EXPECT_THROW(generate_lyndon_words(2, 0), ParameterError);
	EXPECT_THROW(generate_lyndon_words(2, 31), ParameterError);
	EXPECT_EQ(generate_lyndon_words(1, 5).size(), 1u);
}

TEST(Words, MultiDegreeAndPacking)
{
	Word w{0, 0, 1, 0, 1};
	MultiDegree md = multi_degree(w, 2);
	EXPECT_EQ(md.counts, (std::vector<int>{3, 2}));
	EXPECT_EQ(md.degree(), 5);
	EXPECT_EQ(md.to_string(), "(3,2)");
	EXPECT_EQ(pack(md), 3 * letter_unit(0) + 2 * letter_unit(1));
	EXPECT_LT(pack_word(Word{0, 1}), pack_word(Word{0, 1, 1}));
	EXPECT_LT(pack_word(Word{0, 1, 1}), pack_word(Word{1}));
	EXPECT_EQ(word_string(w, "xy"), "xxyxy");
}
