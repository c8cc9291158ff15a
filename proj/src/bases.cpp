#include "bch/bases.hpp"

#include "parallel.hpp"
#include "sparse_lu.hpp"

#include <algorithm>
#include <optional>
#include <unordered_map>

namespace bch {

BasisKind basis_kind_from_int(int kind)
{
	switch (kind) {
	case 0:
		return BasisKind::Lyndon;
	case 1:
		return BasisKind::RightNormed;
	case 2:
		return BasisKind::Hall;
	}
	throw ParameterError("basis must be 0 (Lyndon), 1 (right-normed) or 2 (Hall)");
}

BasisTable::BasisTable(BasisKind kind, int num_generators, int max_degree)
    : kind_(kind), num_generators_(num_generators), max_degree_(max_degree)
{
	if (num_generators < 1 || num_generators > bch::max_generators)
		throw ParameterError("number of generators must be in [1, 16]");
	if (max_degree < 1 || max_degree > bch::max_degree)
		throw ParameterError("maximum degree must be in [1, 30]");
}

int BasisTable::add_generator(Letter g)
{
	int i = static_cast<int>(size());
	degree_.push_back(1);
	left_.push_back(i);
	right_.push_back(0);
	foliage_.resize(foliage_.size() + max_degree_);
	foliage_[static_cast<std::size_t>(i) * max_degree_] = g;
	MultiDegree md{std::vector<int>(num_generators_, 0)};
	md.counts[g] = 1;
	packed_degree_.push_back(pack(md));
	multi_degree_.push_back(std::move(md));
	return i;
}

int BasisTable::add_bracket(int left, int right)
{
	int i = static_cast<int>(size());
	int n = degree_[left] + degree_[right];
	if (n > max_degree_)
		throw InternalError("bracket exceeds maximum degree");
	degree_.push_back(n);
	left_.push_back(left);
	right_.push_back(right);
	foliage_.resize(foliage_.size() + max_degree_);
	auto fl = foliage(left);
	auto fr = foliage(right);
	auto out = foliage_.begin() + static_cast<std::ptrdiff_t>(i) * max_degree_;
	std::copy(fr.begin(), fr.end(), std::copy(fl.begin(), fl.end(), out));
	MultiDegree md = multi_degree_[left];
	for (int g = 0; g < num_generators_; ++g)
		md.counts[g] += multi_degree_[right].counts[g];
	packed_degree_.push_back(packed_degree_[left] + packed_degree_[right]);
	multi_degree_.push_back(std::move(md));
	return i;
}

void BasisTable::finalize() { blocks_ = BlockPartition(multi_degree_); }

std::size_t BasisTable::element_string(char *out, int i, std::string_view names) const
{
	if (degree_[i] == 1) {
		if (out != nullptr)
			*out = names[foliage(i)[0]];
		return 1;
	}
	std::size_t n = 0;
	auto put = [&](char c) {
		if (out != nullptr)
			out[n] = c;
		++n;
	};
	put('[');
	n += element_string(out != nullptr ? out + n : nullptr, left_[i], names);
	put(',');
	n += element_string(out != nullptr ? out + n : nullptr, right_[i], names);
	put(']');
	return n;
}

std::string BasisTable::element_string(int i, std::string_view names) const
{
	if (names.size() < static_cast<std::size_t>(num_generators_))
		throw ParameterError("not enough generator names");
	std::string s(element_string(nullptr, i, names), '\0');
	element_string(s.data(), i, names);
	return s;
}

BasisTable lyndon_basis(const LyndonTable &table)
{
	BasisTable basis(BasisKind::Lyndon, table.num_generators(), table.max_degree());
	for (std::size_t i = 0; i < table.size(); ++i) {
		int k = static_cast<int>(i);
		if (table.degree(k) == 1)
			basis.add_generator(table.word(k)[0]);
		else
			basis.add_bracket(table.left(k), table.right(k));
	}
	basis.finalize();
	return basis;
}

namespace {

struct Candidate {
	Letter x;
	int inner;
};

// Column of [x, R(inner)] over the Lyndon words of a block:
// c(w, [x,e]) = [w_0 = x] c(w_1..w_{n-1}, e) - [w_{n-1} = x] c(w_0..w_{n-2}, e).
std::int64_t bracket_entry(WordExpansion &expansion, std::span<const Letter> w, Candidate c)
{
	const int n = static_cast<int>(w.size());
	std::int64_t v = 0;
	if (w.front() == c.x)
		v += expansion.coefficient(1, n - 1, c.inner);
	if (w.back() == c.x)
		v -= expansion.coefficient(0, n - 1, c.inner);
	return v;
}

// Rightmost insertion of x into the Lyndon word `inner` that yields a Lyndon word.
std::optional<int> insertion_target(const LyndonTable &table, int inner, Letter x, Word &scratch)
{
	auto v = table.word(inner);
	for (std::size_t p = v.size() + 1; p-- > 0;) {
		scratch.assign(v.begin(), v.end());
		scratch.insert(scratch.begin() + static_cast<std::ptrdiff_t>(p), x);
		if (auto t = table.find(scratch))
			return t;
	}
	return std::nullopt;
}

std::vector<Candidate> choose_block(const LyndonTable &table, const BasisTable &basis,
                                    const Block &block, WordExpansion &expansion)
{
	const std::size_t d = block.members.size();
	std::vector<Candidate> pairs;
	for (Letter x = 0; x < table.num_generators(); ++x) {
		if (block.multi_degree.counts[x] == 0)
			continue;
		auto lower = basis.blocks().find(block.packed - letter_unit(x));
		if (!lower)
			continue;
		for (int v : basis.blocks().block(*lower).members)
			pairs.push_back({x, v});
	}
	std::sort(pairs.begin(), pairs.end(), [](const Candidate &a, const Candidate &b) {
		return a.inner != b.inner ? a.inner < b.inner : a.x < b.x;
	});

	// Each pair claims the word reached by rightmost insertion unless an
	// earlier pair already did.
	std::unordered_map<int, std::size_t> local;
	for (std::size_t i = 0; i < d; ++i)
		local.emplace(block.members[i], i);
	std::vector<int> preferred(d, -1);
	Word scratch;
	for (std::size_t p = 0; p < pairs.size(); ++p) {
		auto t = insertion_target(table, pairs[p].inner, pairs[p].x, scratch);
		if (!t)
			continue;
		auto it = local.find(*t);
		if (it != local.end() && preferred[it->second] < 0)
			preferred[it->second] = static_cast<int>(p);
	}

	std::vector<detail::SparseColumn> columns(pairs.size());
	for (std::size_t i = 0; i < d; ++i) {
		auto w = table.word(block.members[i]);
		expansion.set_word(w);
		for (std::size_t p = 0; p < pairs.size(); ++p)
			if (std::int64_t v = bracket_entry(expansion, w, pairs[p]))
				columns[p].emplace_back(static_cast<int>(i), v);
	}
	// Candidate t for position i: the preferred pair first, then all pairs in order.
	auto candidate = [&](std::size_t i, std::size_t t) -> int {
		if (preferred[i] >= 0) {
			if (t == 0)
				return preferred[i];
			--t;
			if (t >= static_cast<std::size_t>(preferred[i]))
				++t;
		}
		return t < pairs.size() ? static_cast<int>(t) : -1;
	};

	detail::UnitLU lu(d);
	std::vector<char> used(pairs.size(), 0);
	std::vector<int> chosen(d, -1);
	std::vector<std::size_t> next(d + 1, 0);
	std::size_t i = 0;
	while (i < d) {
		bool placed = false;
		for (int p; (p = candidate(i, next[i])) >= 0;) {
			++next[i];
			if (used[p] || !lu.push(columns[p]))
				continue;
			used[p] = 1;
			chosen[i] = p;
			placed = true;
			break;
		}
		if (placed) {
			next[++i] = 0;
			continue;
		}
		if (i == 0)
			throw InternalError("no right-normed basis with unit minors in block " +
			                    block.multi_degree.to_string());
		--i;
		lu.pop();
		used[chosen[i]] = 0;
	}
	std::vector<Candidate> out(d);
	for (std::size_t k = 0; k < d; ++k)
		out[k] = pairs[chosen[k]];
	return out;
}

} // namespace

BasisTable rightnormed_basis(const LyndonTable &table, int threads)
{
	BasisTable basis(BasisKind::RightNormed, table.num_generators(), table.max_degree());
	std::vector<Candidate> choice(table.size(), Candidate{0, -1});
	std::size_t done = 0;
	for (int n = 1; n <= table.max_degree(); ++n) {
		const std::size_t end = done + table.count_of_degree(n);
		if (n >= 2) {
			basis.finalize();
			std::vector<const Block *> blocks;
			for (const Block &b : table.blocks().blocks())
				if (b.multi_degree.degree() == n)
					blocks.push_back(&b);
			const int workers = detail::worker_count(blocks.size(), threads);
			std::vector<WordExpansion> expansions(workers, WordExpansion(basis));
			detail::parallel_for(blocks.size(), threads, [&](std::size_t b, int w) {
				auto picks = choose_block(table, basis, *blocks[b], expansions[w]);
				for (std::size_t k = 0; k < picks.size(); ++k)
					choice[blocks[b]->members[k]] = picks[k];
			});
		}
		for (std::size_t i = done; i < end; ++i) {
			int k = static_cast<int>(i);
			if (n == 1)
				basis.add_generator(table.word(k)[0]);
			else
				// generators occupy indices 0..K-1 in letter order
				basis.add_bracket(choice[i].x, choice[i].inner);
		}
		done = end;
	}
	basis.finalize();
	return basis;
}

BasisTable hall_basis(int num_generators, int max_degree)
{
	BasisTable basis(BasisKind::Hall, num_generators, max_degree);
	// first index of each degree; degree_start[n+1] is one past the last
	std::vector<int> degree_start(max_degree + 2, 0);
	for (int g = 0; g < num_generators; ++g)
		basis.add_generator(static_cast<Letter>(g));
	degree_start[1] = 0;
	degree_start[2] = num_generators;
	for (int n = 2; n <= max_degree; ++n) {
		const int below = degree_start[n];
		for (int y = 0; y < below; ++y) {
			int dx = n - basis.degree(y);
			for (int x = std::max(degree_start[dx], y + 1); x < degree_start[dx + 1]; ++x) {
				if (basis.degree(x) >= 2 && basis.right(x) > y)
					continue;
				basis.add_bracket(x, y);
			}
		}
		degree_start[n + 1] = static_cast<int>(basis.size());
	}
	basis.finalize();
	return basis;
}

WordExpansion::WordExpansion(const BasisTable &basis)
    : basis_(&basis), stride_(basis.max_degree() + 1),
      interval_degree_(static_cast<std::size_t>(stride_) * stride_),
      memo_(static_cast<std::size_t>(stride_) * stride_)
{}

void WordExpansion::set_word(std::span<const Letter> w)
{
	if (w.size() > static_cast<std::size_t>(basis_->max_degree()))
		throw ParameterError("word longer than the basis degree");
	word_.assign(w.begin(), w.end());
	const int n = static_cast<int>(w.size());
	for (int l = 0; l < n; ++l) {
		PackedDegree d = 0;
		for (int len = 1; l + len <= n; ++len) {
			d += letter_unit(word_[l + len - 1]);
			interval_degree_[interval(l, len)] = d;
		}
	}
	if (++generation_ == 0) {
		for (auto &m : memo_)
			std::fill(m.stamp.begin(), m.stamp.end(), 0);
		generation_ = 1;
	}
}

std::int64_t WordExpansion::coefficient(int h)
{
	return coefficient(0, static_cast<int>(word_.size()), h);
}

std::int64_t WordExpansion::coefficient(int l, int len, int h)
{
	if (len <= 0 || l < 0 || l + len > static_cast<int>(word_.size()) ||
	    basis_->degree(h) != len || interval_degree_[interval(l, len)] != basis_->packed_degree(h))
		return 0;
	return coeff(l, len, h);
}

std::int64_t WordExpansion::coeff(int l, int len, int h)
{
	const BasisTable &b = *basis_;
	if (len == 1)
		return b.foliage(h)[0] == word_[l] ? 1 : 0;

	Memo &m = memo_[interval(l, len)];
	const auto k = static_cast<std::size_t>(b.blocks().local_index(h));
	if (m.stamp.size() <= k) {
		std::size_t size = b.blocks().block(b.blocks().block_of(h)).members.size();
		m.stamp.resize(size, 0);
		m.value.resize(size, 0);
	}
	if (m.stamp[k] == generation_)
		return m.value[k];

	const int p = b.left(h);
	const int q = b.right(h);
	const int dp = b.degree(p);
	const int dq = len - dp;
	std::int64_t c = 0;
	if (interval_degree_[interval(l, dp)] == b.packed_degree(p)) {
		std::int64_t u = coeff(l, dp, p);
		if (u != 0)
			c += u * coeff(l + dp, dq, q);
	}
	if (interval_degree_[interval(l, dq)] == b.packed_degree(q)) {
		std::int64_t u = coeff(l, dq, q);
		if (u != 0)
			c -= u * coeff(l + dq, dp, p);
	}
	m.stamp[k] = generation_;
	m.value[k] = c;
	return c;
}

BigInt coeff_of_word_in_element(std::span<const Letter> w, int h, const BasisTable &basis)
{
	WordExpansion expansion(basis);
	expansion.set_word(w);
	return expansion.coefficient(h);
}

namespace {

const Block *matching_block(const BasisTable &basis, const Block &lyndon_block)
{
	auto b = basis.blocks().find(lyndon_block.packed);
	if (!b)
		throw InternalError("basis lacks multi-degree " + lyndon_block.multi_degree.to_string());
	const Block &block = basis.blocks().block(*b);
	if (block.members.size() != lyndon_block.members.size())
		throw InternalError("basis block dimension differs from Lyndon block " +
		                    lyndon_block.multi_degree.to_string());
	return &block;
}

BigInt mul(BigInt a, std::int64_t c) { return a * BigInt(static_cast<long long>(c)); }

void solve_lyndon_block(const LyndonTable &table, const Block &block,
                        std::span<const BigInt> rhs, std::span<BigInt> x,
                        WordExpansion &expansion)
{
	const auto &members = block.members;
	std::vector<int> nonzero; // members solved so far with x != 0
	for (int i : members) {
		expansion.set_word(table.word(i));
		BigInt r = rhs[i];
		for (int j : nonzero) {
			std::int64_t c = expansion.coefficient(j);
			if (c != 0)
				r -= mul(x[j], c);
		}
		if (expansion.coefficient(i) != 1)
			throw InternalError("Lyndon conversion matrix is not unit triangular");
		x[i] = r;
		if (!r.is_zero())
			nonzero.push_back(i);
	}
}

void solve_rightnormed_block(const LyndonTable &table, const Block &words, const Block &elements,
                             std::span<const BigInt> rhs, std::span<BigInt> x,
                             WordExpansion &expansion)
{
	const std::size_t d = words.members.size();
	std::vector<detail::SparseColumn> columns(d);
	for (std::size_t i = 0; i < d; ++i) {
		expansion.set_word(table.word(words.members[i]));
		for (std::size_t j = 0; j < d; ++j)
			if (std::int64_t c = expansion.coefficient(elements.members[j]))
				columns[j].emplace_back(static_cast<int>(i), c);
	}
	detail::UnitLU lu(d);
	for (auto &c : columns) {
		if (!lu.push(c))
			throw InternalError("right-normed conversion block has a non-unit pivot");
		c = {};
	}
	std::vector<BigInt> b(d);
	for (std::size_t i = 0; i < d; ++i)
		b[i] = rhs[words.members[i]];
	auto sol = lu.solve(std::move(b));
	for (std::size_t j = 0; j < d; ++j)
		x[elements.members[j]] = sol[j];
}

} // namespace

std::vector<std::vector<std::int64_t>> conversion_matrix(const LyndonTable &table,
                                                         const BasisTable &basis, int block)
{
	const Block &words = table.blocks().block(block);
	const Block &elements = *matching_block(basis, words);
	WordExpansion expansion(basis);
	std::vector<std::vector<std::int64_t>> m;
	for (int i : words.members) {
		expansion.set_word(table.word(i));
		auto &row = m.emplace_back();
		for (int j : elements.members)
			row.push_back(expansion.coefficient(j));
	}
	return m;
}

std::vector<BigInt> convert_to_basis(std::span<const BigInt> word_numerators,
                                     const LyndonTable &table, const BasisTable &basis,
                                     const ConversionOptions &options)
{
	if (word_numerators.size() != table.size())
		throw ParameterError("one numerator per Lyndon word expected");
	if (basis.kind() == BasisKind::Hall)
		throw ParameterError("Hall basis is reached via rewrite_lyndon_to_hall");
	if (basis.num_generators() != table.num_generators() || basis.size() != table.size())
		throw ParameterError("basis and Lyndon table do not match");

	std::vector<BigInt> x(basis.size());
	const auto &blocks = table.blocks().blocks();
	const int workers = detail::worker_count(blocks.size(), options.threads);
	std::vector<WordExpansion> expansions(workers, WordExpansion(basis));

	detail::parallel_for(blocks.size(), options.threads, [&](std::size_t b, int w) {
		const Block &block = blocks[b];
		try {
			if (basis.kind() == BasisKind::Lyndon)
				solve_lyndon_block(table, block, word_numerators, x, expansions[w]);
			else
				solve_rightnormed_block(table, block, *matching_block(basis, block),
				                        word_numerators, x, expansions[w]);
		} catch (const OverflowError &err) {
			throw OverflowError(std::string(err.what()) + " (converting multi-degree " +
			                    block.multi_degree.to_string() + ")");
		}
	});
	return x;
}

namespace {

using LinComb = std::vector<std::pair<int, std::int64_t>>;

std::int64_t checked_mul(std::int64_t a, std::int64_t b)
{
	std::int64_t r;
	if (__builtin_mul_overflow(a, b, &r))
		throw OverflowError("64-bit overflow in Hall rewriting");
	return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b)
{
	std::int64_t r;
	if (__builtin_add_overflow(a, b, &r))
		throw OverflowError("64-bit overflow in Hall rewriting");
	return r;
}

// Sorts by index, merges duplicates and drops zeros.
void normalize(LinComb &terms)
{
	std::sort(terms.begin(), terms.end(),
	          [](const auto &a, const auto &b) { return a.first < b.first; });
	std::size_t out = 0;
	for (std::size_t i = 0; i < terms.size();) {
		int idx = terms[i].first;
		std::int64_t c = 0;
		for (; i < terms.size() && terms[i].first == idx; ++i)
			c = checked_add(c, terms[i].second);
		if (c != 0)
			terms[out++] = {idx, c};
	}
	terms.resize(out);
}

class HallRewriter {
public:
	explicit HallRewriter(const BasisTable &hall) : hall_(hall)
	{
		for (std::size_t i = 0; i < hall.size(); ++i)
			if (hall.degree(static_cast<int>(i)) >= 2)
				element_.emplace(key(hall.left(static_cast<int>(i)), hall.right(static_cast<int>(i))),
				                 static_cast<int>(i));
	}

	// [x, y] of two Hall elements as a combination of Hall elements.
	const LinComb &bracket(int x, int y)
	{
		auto it = memo_.find(key(x, y));
		if (it != memo_.end())
			return it->second;
		if (++steps_ > step_limit)
			throw InternalError("Hall rewriting does not terminate");
		LinComb r = compute(x, y);
		return memo_.emplace(key(x, y), std::move(r)).first->second;
	}

	// [p, q] extended bilinearly.
	LinComb bracket(const LinComb &p, const LinComb &q)
	{
		LinComb out;
		for (const auto &[a, ca] : p)
			for (const auto &[b, cb] : q) {
				const std::int64_t c = checked_mul(ca, cb);
				for (const auto &[h, ch] : bracket(a, b))
					out.emplace_back(h, checked_mul(c, ch));
			}
		normalize(out);
		return out;
	}

private:
	static constexpr std::size_t step_limit = std::size_t{1} << 34;

	static std::uint64_t key(int x, int y)
	{
		return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(x)) << 32) |
		       static_cast<std::uint32_t>(y);
	}

	LinComb compute(int x, int y)
	{
		if (x == y)
			return {};
		if (x < y) {
			LinComb r = bracket(y, x);
			for (auto &t : r)
				t.second = -t.second;
			return r;
		}
		if (hall_.degree(x) == 1 || hall_.right(x) <= y) {
			auto it = element_.find(key(x, y));
			if (it == element_.end())
				throw InternalError("Hall bracket missing from table");
			return {{it->second, 1}};
		}
		// [[u,v],y] = [[u,y],v] + [u,[v,y]] with v > y.
		const int u = hall_.left(x);
		const int v = hall_.right(x);
		LinComb out;
		LinComb uy = bracket(u, y);
		for (const auto &[a, ca] : uy)
			for (const auto &[h, ch] : bracket(a, v))
				out.emplace_back(h, checked_mul(ca, ch));
		LinComb vy = bracket(v, y);
		for (const auto &[b, cb] : vy)
			for (const auto &[h, ch] : bracket(u, b))
				out.emplace_back(h, checked_mul(cb, ch));
		normalize(out);
		return out;
	}

	const BasisTable &hall_;
	std::unordered_map<std::uint64_t, int> element_;
	std::unordered_map<std::uint64_t, LinComb> memo_;
	std::size_t steps_ = 0;
};

} // namespace

std::vector<BigInt> rewrite_lyndon_to_hall(std::span<const BigInt> lyndon_numerators,
                                           const BasisTable &lyndon, const BasisTable &hall)
{
	if (lyndon.kind() != BasisKind::Lyndon || hall.kind() != BasisKind::Hall)
		throw ParameterError("rewrite_lyndon_to_hall expects Lyndon and Hall tables");
	if (lyndon.num_generators() != hall.num_generators() ||
	    lyndon.max_degree() > hall.max_degree() || lyndon_numerators.size() != lyndon.size())
		throw ParameterError("Lyndon and Hall tables do not match");

	HallRewriter rewriter(hall);
	std::vector<LinComb> image(lyndon.size());
	std::vector<char> done(lyndon.size(), 0);
	auto expand = [&](auto &&self, int j) -> const LinComb & {
		if (!done[j]) {
			if (lyndon.degree(j) == 1)
				image[j] = {{static_cast<int>(lyndon.foliage(j)[0]), 1}};
			else
				image[j] = rewriter.bracket(self(self, lyndon.left(j)), self(self, lyndon.right(j)));
			done[j] = 1;
		}
		return image[j];
	};

	std::vector<BigInt> out(hall.size());
	for (std::size_t j = 0; j < lyndon.size(); ++j) {
		if (lyndon_numerators[j].is_zero())
			continue;
		for (const auto &[h, c] : expand(expand, static_cast<int>(j)))
			out[h] += mul(lyndon_numerators[j], c);
	}
	return out;
}

} // namespace bch
