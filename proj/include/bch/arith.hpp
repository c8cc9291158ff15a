#pragma once

/**
 * Exact signed 128-bit integers and rationals.
 *
 * Every arithmetic operation on BigInt is overflow-checked and throws
 * OverflowError instead of wrapping. Rational keeps the usual invariants:
 * positive denominator, lowest terms, zero stored as 0/1.
 */

#include "bch/errors.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>

namespace bch {

class BigInt {
public:
	using value_type = __int128;

	constexpr BigInt() = default;
	constexpr BigInt(long long v) : v_(v) {}

	static constexpr BigInt from_raw(value_type v)
	{
		BigInt r;
		r.v_ = v;
		return r;
	}

	constexpr value_type raw() const { return v_; }

	constexpr bool is_zero() const { return v_ == 0; }
	constexpr int sign() const { return (v_ > 0) - (v_ < 0); }
	constexpr explicit operator bool() const { return v_ != 0; }

	// Narrowing accessor; throws OverflowError if out of range.
	long long to_ll() const;

	static constexpr BigInt max()
	{
		return from_raw(static_cast<value_type>(
		    ~static_cast<unsigned __int128>(0) >> 1));
	}
	static constexpr BigInt min() { return from_raw(-max().v_ - 1); }

	friend BigInt operator+(BigInt a, BigInt b)
	{
		value_type r;
		if (__builtin_add_overflow(a.v_, b.v_, &r))
			overflow("addition");
		return from_raw(r);
	}
	friend BigInt operator-(BigInt a, BigInt b)
	{
		value_type r;
		if (__builtin_sub_overflow(a.v_, b.v_, &r))
			overflow("subtraction");
		return from_raw(r);
	}
	friend BigInt operator*(BigInt a, BigInt b)
	{
		value_type r;
		if (__builtin_mul_overflow(a.v_, b.v_, &r))
			overflow("multiplication");
		return from_raw(r);
	}
	// Truncating division, as for built-in integers.
	friend BigInt operator/(BigInt a, BigInt b)
	{
		if (b.v_ == 0)
			throw DivisionByZeroError();
		if (a == min() && b.v_ == -1)
			overflow("division");
		return from_raw(a.v_ / b.v_);
	}
	friend BigInt operator%(BigInt a, BigInt b)
	{
		if (b.v_ == 0)
			throw DivisionByZeroError();
		if (b.v_ == -1)
			return BigInt();
		return from_raw(a.v_ % b.v_);
	}
	BigInt operator-() const
	{
		if (*this == min())
			overflow("negation");
		return from_raw(-v_);
	}

	BigInt &operator+=(BigInt b) { return *this = *this + b; }
	BigInt &operator-=(BigInt b) { return *this = *this - b; }
	BigInt &operator*=(BigInt b) { return *this = *this * b; }
	BigInt &operator/=(BigInt b) { return *this = *this / b; }

	friend constexpr bool operator==(BigInt a, BigInt b) = default;
	friend constexpr std::strong_ordering operator<=>(BigInt a, BigInt b)
	{
		return a.v_ <=> b.v_;
	}

private:
	[[noreturn]] static void overflow(const char *what);

	value_type v_ = 0;
};

BigInt abs(BigInt x);

// Division that must leave no remainder; throws InternalError otherwise.
BigInt exact_div(BigInt a, BigInt b);

// Nonnegative gcd; gcd(0, 0) = 0.
BigInt gcd(BigInt a, BigInt b);
// Nonnegative lcm; lcm(0, x) = 0.
BigInt lcm(BigInt a, BigInt b);

// Decimal representation. With out == nullptr nothing is written and the
// length that would have been written is returned. No terminator is written.
std::size_t format_integer(BigInt x, char *out);
std::string format_integer(BigInt x);
std::string to_string(BigInt x);

// Parses an optionally signed decimal integer. Throws ParameterError on
// malformed input and OverflowError if the value does not fit.
BigInt parse_integer(std::string_view s);

class Rational {
public:
	Rational() = default;
	Rational(BigInt n) : num_(n) {}
	Rational(long long n) : num_(n) {}
	// Reduces; throws DivisionByZeroError for d == 0.
	Rational(BigInt n, BigInt d);

	BigInt num() const { return num_; }
	BigInt den() const { return den_; }
	bool is_zero() const { return num_.is_zero(); }
	int sign() const { return num_.sign(); }

	friend Rational operator+(const Rational &a, const Rational &b);
	friend Rational operator-(const Rational &a, const Rational &b);
	friend Rational operator*(const Rational &a, const Rational &b);
	friend Rational operator/(const Rational &a, const Rational &b);
	Rational operator-() const;

	Rational &operator+=(const Rational &b) { return *this = *this + b; }
	Rational &operator-=(const Rational &b) { return *this = *this - b; }
	Rational &operator*=(const Rational &b) { return *this = *this * b; }
	Rational &operator/=(const Rational &b) { return *this = *this / b; }

	friend bool operator==(const Rational &a, const Rational &b) = default;

private:
	BigInt num_{0};
	BigInt den_{1};
};

Rational reduce(BigInt num, BigInt den);

// "p/q" in lowest terms, sign on p, zero as "0/1".
std::size_t format_rational(BigInt num, BigInt den, char *out);
std::string format_rational(BigInt num, BigInt den);
std::string to_string(const Rational &r);

// lcm of the denominators; 1 for an empty sequence.
BigInt lcm_of_denominators(std::span<const Rational> rs);

} // namespace bch
