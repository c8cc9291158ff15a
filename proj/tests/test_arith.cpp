#include "bch/arith.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <gtest/gtest.h>

#include <random>

using namespace bch;
using boost::multiprecision::cpp_int;
using boost::multiprecision::cpp_rational;

namespace {

cpp_int big(BigInt x) { return cpp_int(format_integer(x)); }

BigInt random_bigint(std::mt19937_64 &rng, int bits)
{
	unsigned __int128 v = (static_cast<unsigned __int128>(rng()) << 64) | rng();
	v >>= (128 - bits);
	BigInt r = BigInt::from_raw(static_cast<__int128>(v));
	return (rng() & 1) ? -r : r;
}

} // namespace

TEST(BigInt, FormatsExtremes)
{
	EXPECT_EQ(format_integer(BigInt(0)), "0");
	EXPECT_EQ(format_integer(BigInt(-42)), "-42");
	EXPECT_EQ(format_integer(BigInt::max()), "170141183460469231731687303715884105727");
	EXPECT_EQ(format_integer(BigInt::min()), "-170141183460469231731687303715884105728");
	EXPECT_EQ(format_integer(BigInt(123), nullptr), 3u);
}

TEST(BigInt, ParseRoundTrip)
{
	for (const char *s : {"0", "7", "-7", "102181884343418880000",
	                      "170141183460469231731687303715884105727",
	                      "-170141183460469231731687303715884105728"})
		EXPECT_EQ(format_integer(parse_integer(s)), s);
	EXPECT_EQ(parse_integer("+15"), BigInt(15));
	EXPECT_THROW(parse_integer(""), ParameterError);
	EXPECT_THROW(parse_integer("12a"), ParameterError);
	EXPECT_THROW(parse_integer("-"), ParameterError);
	EXPECT_THROW(parse_integer("170141183460469231731687303715884105728"), OverflowError);
}

TEST(BigInt, OverflowIsDetected)
{
	EXPECT_THROW(BigInt::max() + BigInt(1), OverflowError);
	EXPECT_THROW(BigInt::min() - BigInt(1), OverflowError);
	EXPECT_THROW(BigInt::max() * BigInt(2), OverflowError);
	EXPECT_THROW(-BigInt::min(), OverflowError);
	EXPECT_THROW(BigInt::min() / BigInt(-1), OverflowError);
	EXPECT_THROW(BigInt(1) / BigInt(0), DivisionByZeroError);
	EXPECT_THROW(BigInt::max().to_ll(), OverflowError);
}

TEST(BigInt, GcdLcm)
{
	EXPECT_EQ(gcd(BigInt(0), BigInt(0)), BigInt(0));
	EXPECT_EQ(gcd(BigInt(-12), BigInt(18)), BigInt(6));
	EXPECT_EQ(lcm(BigInt(4), BigInt(-6)), BigInt(12));
	EXPECT_EQ(lcm(BigInt(0), BigInt(5)), BigInt(0));
	EXPECT_EQ(exact_div(BigInt(720), BigInt(-24)), BigInt(-30));
	EXPECT_THROW(exact_div(BigInt(7), BigInt(2)), InternalError);
}

TEST(BigInt, AgreesWithArbitraryPrecision)
{
	std::mt19937_64 rng(20240611);
	for (int iter = 0; iter < 5000; ++iter) {
		BigInt a = random_bigint(rng, 1 + static_cast<int>(rng() % 126));
		BigInt b = random_bigint(rng, 1 + static_cast<int>(rng() % 126));
		cpp_int A = big(a), B = big(b);
		const cpp_int lo = big(BigInt::min()), hi = big(BigInt::max());
		auto check = [&](auto op, const cpp_int &exact) {
			if (exact < lo || exact > hi)
				EXPECT_THROW(op(), OverflowError);
			else
				EXPECT_EQ(big(op()), exact);
		};
		check([&] { return a + b; }, A + B);
		check([&] { return a - b; }, A - B);
		check([&] { return a * b; }, A * B);
		if (!b.is_zero()) {
			EXPECT_EQ(big(a / b), A / B);
			EXPECT_EQ(big(a % b), A % B);
		}
		EXPECT_EQ(big(gcd(a, b)), boost::multiprecision::gcd(A, B));
	}
}

TEST(Rational, ReducedForm)
{
	Rational r(BigInt(6), BigInt(-4));
	EXPECT_EQ(r.num(), BigInt(-3));
	EXPECT_EQ(r.den(), BigInt(2));
	Rational z(BigInt(0), BigInt(-5));
	EXPECT_EQ(z.den(), BigInt(1));
	EXPECT_EQ(to_string(z), "0/1");
	EXPECT_EQ(to_string(Rational(BigInt(-1), BigInt(720))), "-1/720");
	EXPECT_EQ(format_rational(BigInt(2), BigInt(4)), "1/2");
	EXPECT_EQ(format_rational(BigInt(-3), BigInt(9), nullptr), 4u);
	EXPECT_THROW(Rational(BigInt(1), BigInt(0)), DivisionByZeroError);
	EXPECT_THROW(Rational(1) / Rational(0), DivisionByZeroError);
}

TEST(Rational, AgreesWithArbitraryPrecision)
{
	std::mt19937_64 rng(7);
	auto q = [](const Rational &r) { return cpp_rational(big(r.num()), big(r.den())); };
	for (int iter = 0; iter < 3000; ++iter) {
		auto pick = [&] {
			BigInt d = random_bigint(rng, 1 + static_cast<int>(rng() % 40));
			if (d.is_zero())
				d = BigInt(1);
			return Rational(random_bigint(rng, 1 + static_cast<int>(rng() % 40)), d);
		};
		Rational a = pick(), b = pick();
		EXPECT_EQ(q(a + b), q(a) + q(b));
		EXPECT_EQ(q(a - b), q(a) - q(b));
		EXPECT_EQ(q(a * b), q(a) * q(b));
		if (!b.is_zero())
			EXPECT_EQ(q(a / b), q(a) / q(b));
		Rational s = a + b;
		EXPECT_GT(s.den(), BigInt(0));
		EXPECT_EQ(gcd(s.num(), s.den()), s.num().is_zero() ? s.den() : BigInt(1));
	}
}

TEST(Rational, LcmOfDenominators)
{
	std::vector<Rational> rs = {Rational(BigInt(1), BigInt(12)), Rational(BigInt(-1), BigInt(720)),
	                            Rational(BigInt(3), BigInt(8)), Rational(0)};
	EXPECT_EQ(lcm_of_denominators(rs), BigInt(720));
	EXPECT_EQ(lcm_of_denominators({}), BigInt(1));
}
