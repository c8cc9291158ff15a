#include "bch/arith.hpp"

#include <algorithm>
#include <string>

namespace bch {

namespace {

using u128 = unsigned __int128;

int ctz128(u128 x)
{
	auto lo = static_cast<std::uint64_t>(x);
	if (lo != 0)
		return __builtin_ctzll(lo);
	return 64 + __builtin_ctzll(static_cast<std::uint64_t>(x >> 64));
}

u128 magnitude(BigInt x)
{
	// Works for min() as well: two's complement negation in unsigned space.
	auto v = static_cast<u128>(x.raw());
	return x.sign() < 0 ? -v : v;
}

u128 binary_gcd(u128 a, u128 b)
{
	if (a == 0)
		return b;
	if (b == 0)
		return a;
	int shift = ctz128(a | b);
	a >>= ctz128(a);
	while (b != 0) {
		b >>= ctz128(b);
		if (a > b)
			std::swap(a, b);
		b -= a;
	}
	return a << shift;
}

BigInt from_magnitude(u128 m)
{
	if (m > static_cast<u128>(BigInt::max().raw()))
		throw OverflowError("integer overflow: gcd/lcm result exceeds 127 bits");
	return BigInt::from_raw(static_cast<BigInt::value_type>(m));
}

} // namespace

void BigInt::overflow(const char *what)
{
	throw OverflowError(std::string("128-bit integer overflow in ") + what);
}

long long BigInt::to_ll() const
{
	if (v_ > static_cast<value_type>(INT64_MAX) ||
	    v_ < static_cast<value_type>(INT64_MIN))
		throw OverflowError("integer does not fit in 64 bits");
	return static_cast<long long>(v_);
}

BigInt abs(BigInt x) { return x.sign() < 0 ? -x : x; }

BigInt exact_div(BigInt a, BigInt b)
{
	if (!(a % b).is_zero())
		throw InternalError("inexact division " + to_string(a) + " / " +
		                    to_string(b));
	return a / b;
}

BigInt gcd(BigInt a, BigInt b)
{
	return from_magnitude(binary_gcd(magnitude(a), magnitude(b)));
}

BigInt lcm(BigInt a, BigInt b)
{
	if (a.is_zero() || b.is_zero())
		return BigInt();
	BigInt g = gcd(a, b);
	return abs(a / g) * abs(b);
}

std::size_t format_integer(BigInt x, char *out)
{
	char buf[48];
	char *p = buf + sizeof(buf);
	u128 m = magnitude(x);
	do {
		*--p = static_cast<char>('0' + static_cast<int>(m % 10));
		m /= 10;
	} while (m != 0);
	if (x.sign() < 0)
		*--p = '-';
	auto len = static_cast<std::size_t>(buf + sizeof(buf) - p);
	if (out != nullptr)
		std::copy(p, p + len, out);
	return len;
}

std::string format_integer(BigInt x)
{
	std::string s(format_integer(x, nullptr), '\0');
	format_integer(x, s.data());
	return s;
}

std::string to_string(BigInt x) { return format_integer(x); }

BigInt parse_integer(std::string_view s)
{
	std::size_t i = 0;
	bool negative = false;
	if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
		negative = s[i] == '-';
		++i;
	}
	if (i == s.size())
		throw ParameterError("malformed integer '" + std::string(s) + "'");
	BigInt r;
	for (; i < s.size(); ++i) {
		if (s[i] < '0' || s[i] > '9')
			throw ParameterError("malformed integer '" + std::string(s) + "'");
		// Accumulate negatively so that min() parses.
		r = r * 10 + (negative ? -(s[i] - '0') : (s[i] - '0'));
	}
	return r;
}

Rational::Rational(BigInt n, BigInt d)
{
	if (d.is_zero())
		throw DivisionByZeroError();
	if (n.is_zero())
		return;
	BigInt g = gcd(n, d);
	n = n / g;
	d = d / g;
	if (d.sign() < 0) {
		n = -n;
		d = -d;
	}
	num_ = n;
	den_ = d;
}

Rational reduce(BigInt num, BigInt den) { return Rational(num, den); }

Rational operator+(const Rational &a, const Rational &b)
{
	if (a.is_zero())
		return b;
	if (b.is_zero())
		return a;
	if (a.den_ == b.den_)
		return Rational(a.num_ + b.num_, a.den_);
	BigInt g = gcd(a.den_, b.den_);
	BigInt bd = b.den_ / g;
	return Rational(a.num_ * bd + b.num_ * (a.den_ / g), a.den_ * bd);
}

Rational operator-(const Rational &a, const Rational &b) { return a + (-b); }

Rational operator*(const Rational &a, const Rational &b)
{
	if (a.is_zero() || b.is_zero())
		return Rational();
	// Cross-cancel first so that intermediates stay as small as the result.
	BigInt g1 = gcd(a.num_, b.den_);
	BigInt g2 = gcd(b.num_, a.den_);
	Rational r;
	r.num_ = (a.num_ / g1) * (b.num_ / g2);
	r.den_ = (a.den_ / g2) * (b.den_ / g1);
	return r;
}

Rational operator/(const Rational &a, const Rational &b)
{
	if (b.is_zero())
		throw DivisionByZeroError();
	return a * Rational(b.den_, b.num_);
}

Rational Rational::operator-() const
{
	Rational r;
	r.num_ = -num_;
	r.den_ = den_;
	return r;
}

std::size_t format_rational(BigInt num, BigInt den, char *out)
{
	Rational r(num, den);
	std::size_t n = format_integer(r.num(), out);
	if (out != nullptr)
		out[n] = '/';
	return n + 1 + format_integer(r.den(), out != nullptr ? out + n + 1 : nullptr);
}

std::string format_rational(BigInt num, BigInt den)
{
	std::string s(format_rational(num, den, nullptr), '\0');
	format_rational(num, den, s.data());
	return s;
}

std::string to_string(const Rational &r) { return format_rational(r.num(), r.den()); }

BigInt lcm_of_denominators(std::span<const Rational> rs)
{
	BigInt d = 1;
	for (const auto &r : rs)
		d = lcm(d, r.den());
	return d;
}

} // namespace bch
