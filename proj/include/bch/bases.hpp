#pragma once

/**
 * Lie bases of the free Lie algebra and conversion of word coefficients
 * into basis coefficients.
 *
 * Every basis element of degree >= 2 is a bracket [left, right] of two
 * elements of the same basis. Elements are numbered by degree; the first K
 * elements are the generators. Degree-1 elements carry left = own index and
 * right = 0.
 */

#include "bch/arith.hpp"
#include "bch/words.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace bch {

enum class BasisKind {
	Lyndon = 0,
	RightNormed = 1,
	Hall = 2,
};

BasisKind basis_kind_from_int(int kind);

class BasisTable {
public:
	BasisTable(BasisKind kind, int num_generators, int max_degree);

	BasisKind kind() const { return kind_; }
	int num_generators() const { return num_generators_; }
	int max_degree() const { return max_degree_; }
	std::size_t size() const { return degree_.size(); }

	int degree(int i) const { return degree_[i]; }
	int left(int i) const { return left_[i]; }
	int right(int i) const { return right_[i]; }
	std::span<const Letter> foliage(int i) const
	{
		return {foliage_.data() + static_cast<std::size_t>(i) * max_degree_,
		        static_cast<std::size_t>(degree_[i])};
	}
	const MultiDegree &multi_degree(int i) const { return multi_degree_[i]; }
	PackedDegree packed_degree(int i) const { return packed_degree_[i]; }
	const BlockPartition &blocks() const { return blocks_; }

	// "[A,[A,B]]"; with out == nullptr only the length is returned.
	std::size_t element_string(char *out, int i, std::string_view names) const;
	std::string element_string(int i, std::string_view names) const;

	// Appends a generator or a bracket of existing elements.
	int add_generator(Letter g);
	int add_bracket(int left, int right);
	// Builds the multi-degree blocks; call once after the last add.
	void finalize();

private:
	BasisKind kind_;
	int num_generators_;
	int max_degree_;
	std::vector<int> degree_;
	std::vector<int> left_;
	std::vector<int> right_;
	std::vector<Letter> foliage_; // fixed stride max_degree_
	std::vector<MultiDegree> multi_degree_;
	std::vector<PackedDegree> packed_degree_;
	BlockPartition blocks_;
};

// Element i is the standard bracketing of Lyndon word i.
BasisTable lyndon_basis(const LyndonTable &table);

/**
 * Right-normed basis indexed like the Lyndon words; every element of degree
 * >= 2 is [x, e] with x a generator and e a right-normed element.
 *
 * Within a multi-degree block the candidates (x, e) are taken in order of e,
 * then x. Each candidate claims the Lyndon word obtained by inserting x into
 * the word of e at the rightmost position that gives a Lyndon word, unless
 * an earlier candidate claimed it. Words are then assigned in Lyndon order,
 * trying the claiming candidate first and the remaining candidates after it,
 * keeping only choices for which every leading principal minor of the
 * word/element coefficient matrix is +-1 (with backtracking).
 */
BasisTable rightnormed_basis(const LyndonTable &table, int threads = 1);

/**
 * Classical Hall set up to degree N. Within a degree, elements are created
 * by increasing right factor and then increasing left factor; [x,y] is
 * admitted iff x > y and, when x = [u,v], v <= y.
 */
BasisTable hall_basis(int num_generators, int max_degree);

/**
 * Coefficients of one word in basis elements of the same multi-degree.
 *
 *   c(w, g) = [w == g]
 *   c(w, [p,q]) = sum_{w=uv, |u|=|p|} c(u,p) c(v,q) - sum_{w=uv, |u|=|q|} c(u,q) c(v,p)
 *
 * memoized on (subword interval, element). The memo is reused across words;
 * set_word() invalidates it in O(1).
 */
class WordExpansion {
public:
	explicit WordExpansion(const BasisTable &basis);

	void set_word(std::span<const Letter> w);
	// Coefficient of the current word in element h (0 on multi-degree mismatch).
	std::int64_t coefficient(int h);
	// Same for the subword of length len starting at l.
	std::int64_t coefficient(int l, int len, int h);

private:
	std::int64_t coeff(int l, int len, int h);
	std::size_t interval(int l, int len) const { return static_cast<std::size_t>(l) * (stride_) + len; }

	struct Memo {
		std::vector<std::int64_t> value;
		std::vector<std::uint32_t> stamp;
	};

	const BasisTable *basis_;
	int stride_;
	Word word_;
	std::vector<PackedDegree> interval_degree_;
	std::vector<Memo> memo_;
	std::uint32_t generation_ = 0;
};

// One-off coefficient of w in element h of basis.
BigInt coeff_of_word_in_element(std::span<const Letter> w, int h, const BasisTable &basis);

// M[i][j] = coefficient of the i-th Lyndon word of the block in the j-th
// element of the same multi-degree block of basis.
std::vector<std::vector<std::int64_t>> conversion_matrix(const LyndonTable &table,
                                                         const BasisTable &basis, int block);

struct ConversionOptions {
	int threads = 1;
};

/**
 * Basis numerators from Lyndon-word numerators (both over the same common
 * denominator). Works block by block: unit-triangular substitution for the
 * Lyndon basis, Gaussian elimination without pivoting (all pivots +-1) for
 * the right-normed basis. Hall bases are handled by rewrite_lyndon_to_hall.
 */
std::vector<BigInt> convert_to_basis(std::span<const BigInt> word_numerators,
                                     const LyndonTable &table, const BasisTable &basis,
                                     const ConversionOptions &options = {});

/**
 * Rewrites a series given in the Lyndon basis into the Hall basis using
 * antisymmetry and the Jacobi identity. Integer coefficients only.
 */
std::vector<BigInt> rewrite_lyndon_to_hall(std::span<const BigInt> lyndon_numerators,
                                           const BasisTable &lyndon, const BasisTable &hall);

} // namespace bch
