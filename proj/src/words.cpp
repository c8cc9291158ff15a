#include "bch/words.hpp"

#include "bch/errors.hpp"

#include <algorithm>
#include <numeric>

namespace bch {

int MultiDegree::degree() const
{
	return std::accumulate(counts.begin(), counts.end(), 0);
}

std::string MultiDegree::to_string() const
{
	std::string s = "(";
	for (std::size_t g = 0; g < counts.size(); ++g) {
		if (g > 0)
			s += ',';
		s += std::to_string(counts[g]);
	}
	return s + ")";
}

MultiDegree multi_degree(std::span<const Letter> w, int num_generators)
{
	MultiDegree md{std::vector<int>(num_generators, 0)};
	for (Letter a : w) {
		if (a >= num_generators)
			throw ParameterError("letter out of range for alphabet");
		++md.counts[a];
	}
	return md;
}

PackedDegree pack(const MultiDegree &md)
{
	PackedDegree p = 0;
	for (std::size_t g = 0; g < md.counts.size(); ++g)
		p += static_cast<PackedDegree>(md.counts[g]) << (5 * g);
	return p;
}

PackedWord pack_word(std::span<const Letter> w)
{
	PackedWord p;
	for (std::size_t i = 0; i < w.size(); ++i)
		p.bits |= static_cast<unsigned __int128>(w[i]) << (124 - 4 * i);
	p.length = static_cast<std::uint8_t>(w.size());
	return p;
}

std::size_t PackedWordHash::operator()(const PackedWord &p) const noexcept
{
	auto hi = static_cast<std::uint64_t>(p.bits >> 64);
	auto lo = static_cast<std::uint64_t>(p.bits);
	std::uint64_t h = hi * 0x9E3779B97F4A7C15ull ^ (lo + 0x632BE59BD9B4E019ull + p.length);
	h ^= h >> 29;
	h *= 0xBF58476D1CE4E5B9ull;
	return static_cast<std::size_t>(h ^ (h >> 32));
}

bool is_lyndon(std::span<const Letter> w)
{
	if (w.empty())
		return false;
	for (std::size_t i = 1; i < w.size(); ++i) {
		auto suffix = w.subspan(i);
		if (!std::lexicographical_compare(w.begin(), w.end(), suffix.begin(),
		                                  suffix.end()))
			return false;
	}
	return true;
}

std::pair<Word, Word> standard_factorization(std::span<const Letter> w)
{
	if (w.size() < 2)
		throw ParameterError("standard factorization undefined for degree < 2");
	if (!is_lyndon(w))
		throw ParameterError("standard factorization requires a Lyndon word");
	for (std::size_t p = 1; p < w.size(); ++p) {
		if (is_lyndon(w.subspan(p)))
			return {Word(w.begin(), w.begin() + p), Word(w.begin() + p, w.end())};
	}
	// The last letter is always a Lyndon suffix.
	throw InternalError("no Lyndon suffix found");
}

std::string word_string(std::span<const Letter> w, std::string_view names)
{
	std::string s;
	s.reserve(w.size());
	for (Letter a : w)
		s += names[a];
	return s;
}

BlockPartition::BlockPartition(std::span<const MultiDegree> mds)
{
	block_of_.resize(mds.size());
	local_.resize(mds.size());
	for (std::size_t i = 0; i < mds.size(); ++i) {
		PackedDegree p = pack(mds[i]);
		auto found = find(p);
		int b;
		if (found) {
			b = *found;
		} else {
			b = static_cast<int>(blocks_.size());
			blocks_.push_back(Block{mds[i], p, {}});
			by_hash_[static_cast<unsigned long long>(p ^ (p >> 64))].push_back(b);
		}
		block_of_[i] = b;
		local_[i] = static_cast<int>(blocks_[b].members.size());
		blocks_[b].members.push_back(static_cast<int>(i));
	}
}

std::optional<int> BlockPartition::find(PackedDegree packed) const
{
	auto it = by_hash_.find(static_cast<unsigned long long>(packed ^ (packed >> 64)));
	if (it == by_hash_.end())
		return std::nullopt;
	for (int b : it->second)
		if (blocks_[b].packed == packed)
			return b;
	return std::nullopt;
}

LyndonTable::LyndonTable(int num_generators, int max_degree)
    : num_generators_(num_generators), max_degree_(max_degree)
{
	if (num_generators < 1 || num_generators > bch::max_generators)
		throw ParameterError("number of generators must be in [1, 16]");
	if (max_degree < 1 || max_degree > bch::max_degree)
		throw ParameterError("maximum degree must be in [1, 30]");

	// Duval's successor iteration enumerates all Lyndon words of length <= N
	// in lexicographic order; bucket them by length to get (degree, lex).
	std::vector<std::vector<Letter>> by_degree(max_degree + 1);
	Word w{0};
	const auto top = static_cast<Letter>(num_generators - 1);
	while (!w.empty()) {
		by_degree[w.size()].insert(by_degree[w.size()].end(), w.begin(), w.end());
		std::size_t m = w.size();
		while (w.size() < static_cast<std::size_t>(max_degree))
			w.push_back(w[w.size() - m]);
		while (!w.empty() && w.back() == top)
			w.pop_back();
		if (!w.empty())
			++w.back();
	}

	for (int n = 1; n <= max_degree; ++n) {
		const auto &bucket = by_degree[n];
		for (std::size_t pos = 0; pos < bucket.size(); pos += n) {
			offset_.push_back(letters_.size());
			letters_.insert(letters_.end(), bucket.begin() + pos, bucket.begin() + pos + n);
			degree_.push_back(n);
		}
	}

	const std::size_t count = degree_.size();
	packed_.resize(count);
	multi_degree_.resize(count);
	packed_degree_.resize(count);
	lookup_.reserve(count);
	for (std::size_t i = 0; i < count; ++i) {
		auto w_i = word(static_cast<int>(i));
		packed_[i] = pack_word(w_i);
		multi_degree_[i] = bch::multi_degree(w_i, num_generators);
		packed_degree_[i] = pack(multi_degree_[i]);
		lookup_.emplace(packed_[i], static_cast<int>(i));
	}

	left_.assign(count, 0);
	right_.assign(count, 0);
	for (std::size_t i = 0; i < count; ++i) {
		auto w_i = word(static_cast<int>(i));
		if (w_i.size() == 1) {
			left_[i] = static_cast<int>(i);
			right_[i] = 0;
			continue;
		}
		for (std::size_t p = 1; p < w_i.size(); ++p) {
			if (auto r = find(w_i.subspan(p))) {
				left_[i] = *find(w_i.first(p));
				right_[i] = *r;
				break;
			}
		}
	}

	blocks_ = BlockPartition(multi_degree_);
}

std::optional<int> LyndonTable::find(std::span<const Letter> w) const
{
	if (w.empty() || w.size() > static_cast<std::size_t>(max_degree_))
		return std::nullopt;
	auto it = lookup_.find(pack_word(w));
	if (it == lookup_.end())
		return std::nullopt;
	return it->second;
}

std::size_t LyndonTable::count_of_degree(int n) const
{
	auto [lo, hi] = std::equal_range(degree_.begin(), degree_.end(), n);
	return static_cast<std::size_t>(hi - lo);
}

LyndonTable generate_lyndon_words(int num_generators, int max_degree)
{
	return LyndonTable(num_generators, max_degree);
}

long long witt_dimension(int num_generators, int n)
{
	// (1/n) sum_{d | n} mu(d) K^{n/d}
	auto mobius = [](int d) {
		int result = 1;
		for (int p = 2; p * p <= d; ++p) {
			if (d % p == 0) {
				d /= p;
				if (d % p == 0)
					return 0;
				result = -result;
			}
		}
		if (d > 1)
			result = -result;
		return result;
	};
	long long sum = 0;
	for (int d = 1; d <= n; ++d) {
		if (n % d != 0)
			continue;
		long long power = 1;
		for (int e = 0; e < n / d; ++e)
			power *= num_generators;
		sum += mobius(d) * power;
	}
	return sum / n;
}

} // namespace bch
