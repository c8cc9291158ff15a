#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace bch {

using Letter = std::uint8_t;
using Word = std::vector<Letter>;

inline constexpr int max_generators = 16;
inline constexpr int max_degree = 30;

// Number of occurrences of each generator.
struct MultiDegree {
	std::vector<int> counts;

	int degree() const;
	std::string to_string() const; // "(a,b,...)"

	friend bool operator==(const MultiDegree &, const MultiDegree &) = default;
	friend auto operator<=>(const MultiDegree &, const MultiDegree &) = default;
};

MultiDegree multi_degree(std::span<const Letter> w, int num_generators);

// A multi-degree packed into 5 bits per generator, so that equality tests
// and incremental updates are single integer operations.
using PackedDegree = unsigned __int128;

PackedDegree pack(const MultiDegree &md);
inline PackedDegree letter_unit(Letter g) { return PackedDegree{1} << (5 * g); }

// A word packed left-aligned into 4 bits per letter plus its length. The
// natural ordering of (bits, length) is the lexicographic order of words.
struct PackedWord {
	unsigned __int128 bits = 0;
	std::uint8_t length = 0;

	friend bool operator==(const PackedWord &, const PackedWord &) = default;
	friend auto operator<=>(const PackedWord &, const PackedWord &) = default;
};

PackedWord pack_word(std::span<const Letter> w);

struct PackedWordHash {
	std::size_t operator()(const PackedWord &p) const noexcept;
};

// True iff w is strictly smaller than each of its proper suffixes.
bool is_lyndon(std::span<const Letter> w);

// w = uv with v the longest proper Lyndon suffix. Requires w Lyndon with
// degree >= 2; throws ParameterError otherwise.
std::pair<Word, Word> standard_factorization(std::span<const Letter> w);

// Renders a word with the given generator names ("AB" -> letter 0 is 'A').
std::string word_string(std::span<const Letter> w, std::string_view names);

struct Block {
	MultiDegree multi_degree;
	PackedDegree packed = 0;
	std::vector<int> members; // global indices, in index order
};

// Partition of an indexed family (words, basis elements) into multi-degree
// classes. Blocks are numbered in order of first appearance.
class BlockPartition {
public:
	BlockPartition() = default;
	explicit BlockPartition(std::span<const MultiDegree> mds);

	std::size_t size() const { return blocks_.size(); }
	const Block &block(std::size_t b) const { return blocks_[b]; }
	const std::vector<Block> &blocks() const { return blocks_; }
	int block_of(int i) const { return block_of_[i]; }
	int local_index(int i) const { return local_[i]; }
	std::optional<int> find(PackedDegree packed) const;

private:
	std::vector<Block> blocks_;
	std::vector<int> block_of_;
	std::vector<int> local_;
	std::unordered_map<unsigned long long, std::vector<int>> by_hash_;
};

/**
 * All Lyndon words of degree <= N over K letters, ordered by degree and then
 * lexicographically, with standard factorizations.
 *
 * Index i < K is the single letter i. For degree >= 2,
 * word(i) == word(left(i)) ++ word(right(i)).
 */
class LyndonTable {
public:
	LyndonTable(int num_generators, int max_degree);

	int num_generators() const { return num_generators_; }
	int max_degree() const { return max_degree_; }
	std::size_t size() const { return degree_.size(); }

	std::span<const Letter> word(int i) const
	{
		return {letters_.data() + offset_[i], static_cast<std::size_t>(degree_[i])};
	}
	int degree(int i) const { return degree_[i]; }
	int left(int i) const { return left_[i]; }
	int right(int i) const { return right_[i]; }
	const MultiDegree &multi_degree(int i) const { return multi_degree_[i]; }
	PackedDegree packed_degree(int i) const { return packed_degree_[i]; }
	PackedWord packed(int i) const { return packed_[i]; }

	std::optional<int> find(std::span<const Letter> w) const;

	// Number of words of exactly degree n.
	std::size_t count_of_degree(int n) const;

	const BlockPartition &blocks() const { return blocks_; }

private:
	int num_generators_;
	int max_degree_;
	std::vector<Letter> letters_;
	std::vector<std::size_t> offset_;
	std::vector<int> degree_;
	std::vector<int> left_;
	std::vector<int> right_;
	std::vector<MultiDegree> multi_degree_;
	std::vector<PackedDegree> packed_degree_;
	std::vector<PackedWord> packed_;
	std::unordered_map<PackedWord, int, PackedWordHash> lookup_;
	BlockPartition blocks_;
};

// Throws ParameterError unless 1 <= K <= max_generators and
// 1 <= N <= max_degree.
LyndonTable generate_lyndon_words(int num_generators, int max_degree);

// Number of Lyndon words of length n over K letters (necklace formula).
long long witt_dimension(int num_generators, int n);

} // namespace bch
