#pragma once

#include "bch/arith.hpp"
#include "bch/errors.hpp"

#include <algorithm>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace bch::detail {

using SparseColumn = std::vector<std::pair<int, std::int64_t>>;

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b, const char *what)
{
	std::int64_t r;
	if (__builtin_mul_overflow(a, b, &r))
		throw OverflowError(what);
	return r;
}

inline std::int64_t checked_add(std::int64_t a, std::int64_t b, const char *what)
{
	std::int64_t r;
	if (__builtin_add_overflow(a, b, &r))
		throw OverflowError(what);
	return r;
}

/**
 * LU factorization without pivoting of a square integer matrix whose
 * leading principal minors are all +-1, built one column at a time.
 * L is unit lower triangular, U upper triangular with +-1 on the diagonal,
 * so every factor entry is an integer.
 */
class UnitLU {
public:
	explicit UnitLU(std::size_t dimension) : acc_(dimension, 0), mark_(dimension, 0) {}

	std::size_t dimension() const { return acc_.size(); }
	std::size_t size() const { return lower_.size(); }

	// Appends column c (row, value pairs). Returns false and leaves the
	// factorization unchanged if the new pivot is not +-1.
	bool push(const SparseColumn &c)
	{
		static constexpr const char *what = "64-bit overflow in right-normed LU factorization";
		const int j = static_cast<int>(size());
		touched_.clear();
		auto touch = [&](int r) {
			if (!mark_[r]) {
				mark_[r] = 1;
				touched_.push_back(r);
			}
		};
		for (auto [r, v] : c) {
			touch(r);
			acc_[r] = v;
		}
		for (int k = 0; k < j; ++k) {
			const std::int64_t a = acc_[k];
			if (a == 0)
				continue;
			for (auto [r, l] : lower_[k]) {
				touch(r);
				acc_[r] = checked_add(acc_[r], -checked_mul(a, l, what), what);
			}
		}
		const std::int64_t pivot = acc_[j];
		const bool ok = pivot == 1 || pivot == -1;
		if (ok) {
			SparseColumn up, low;
			for (int r : touched_) {
				const std::int64_t v = acc_[r];
				if (v == 0)
					continue;
				if (r <= j)
					up.emplace_back(r, v);
				else
					low.emplace_back(r, v * pivot);
			}
			std::sort(up.begin(), up.end());
			std::sort(low.begin(), low.end());
			upper_.push_back(std::move(up));
			lower_.push_back(std::move(low));
		}
		for (int r : touched_) {
			acc_[r] = 0;
			mark_[r] = 0;
		}
		return ok;
	}

	void pop()
	{
		upper_.pop_back();
		lower_.pop_back();
	}

	// Solves A x = b for a complete factorization.
	std::vector<BigInt> solve(std::vector<BigInt> y) const
	{
		const std::size_t d = size();
		for (std::size_t k = 0; k < d; ++k) {
			if (y[k].is_zero())
				continue;
			for (auto [r, l] : lower_[k])
				y[r] -= y[k] * BigInt(static_cast<long long>(l));
		}
		std::vector<BigInt> x(d);
		for (std::size_t i = d; i-- > 0;) {
			const auto &col = upper_[i];
			x[i] = y[i] * BigInt(static_cast<long long>(col.back().second));
			if (x[i].is_zero())
				continue;
			for (std::size_t t = 0; t + 1 < col.size(); ++t)
				y[col[t].first] -= x[i] * BigInt(static_cast<long long>(col[t].second));
		}
		return x;
	}

private:
	std::vector<SparseColumn> lower_;
	std::vector<SparseColumn> upper_;
	std::vector<std::int64_t> acc_;
	std::vector<char> mark_;
	std::vector<int> touched_;
};

} // namespace bch::detail
