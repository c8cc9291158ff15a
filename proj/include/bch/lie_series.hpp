#pragma once

#include "bch/arith.hpp"
#include "bch/bases.hpp"
#include "bch/expr.hpp"
#include "bch/words.hpp"

#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace bch {

/**
 * A truncated Lie series: a basis together with a common denominator D and
 * one integer numerator per basis element.
 */
class LieSeries {
public:
	LieSeries(BasisTable basis, BigInt denominator, std::vector<BigInt> numerators);

	int dimension() const { return static_cast<int>(numerators_.size()); }
	int maximum_degree() const { return basis_.max_degree(); }
	int number_of_generators() const { return basis_.num_generators(); }
	const BigInt &denominator() const { return denominator_; }
	const BasisTable &basis() const { return basis_; }
	const std::vector<BigInt> &numerators() const { return numerators_; }

	const BigInt &numerator_of_coefficient(int i) const;
	Rational coefficient(int i) const;
	int degree(int i) const;
	int degree_of_generator(int i, int g) const;
	int left_factor(int i) const;
	int right_factor(int i) const;
	const MultiDegree &multi_degree(int i) const;

	// With out == nullptr these return the length without writing.
	std::size_t write_foliage(char *out, int i, std::string_view names) const;
	std::size_t write_basis_element(char *out, int i, std::string_view names) const;
	std::size_t write_coefficient(char *out, int i) const;

	std::string foliage(int i, std::string_view names) const;
	std::string basis_element(int i, std::string_view names) const;
	std::string coefficient_string(int i) const;

private:
	void check_index(int i) const;
	void check_names(std::string_view names) const;

	BasisTable basis_;
	BigInt denominator_;
	std::vector<BigInt> numerators_;
};

// Timings and counts gathered while computing a series.
struct RunInfo {
	std::size_t lyndon_words = 0;
	double time_lyndon_words = 0;
	bool used_goldberg = false;
	double time_goldberg = 0;
	double time_coefficients = 0;
	double time_conversion = 0;
	double time_total = 0;
};

enum class Phase {
	LyndonWords,
	Goldberg,
	Coefficients,
	Denominator,
	Conversion,
};

struct PipelineOptions {
	int threads = 1;
	// Called as each phase finishes; lets callers stream diagnostics.
	std::function<void(Phase, const RunInfo &, const BigInt &denominator)> progress;
};

LieSeries lie_series(int num_generators, const Expr &e, int max_degree, BasisKind kind,
                     const PipelineOptions &options = {}, RunInfo *info = nullptr);
LieSeries lie_series(int num_generators, const Expr &e, int max_degree, int kind);

// log(exp(A) exp(B)) and log(exp(A/2) exp(B) exp(A/2)).
LieSeries bch(int max_degree, int kind);
LieSeries symbch(int max_degree, int kind);

struct DegreeStatistics {
	int degree = 0;
	long long dimension = 0;
	long long nonzero = 0;
	long long cumulative_dimension = 0;
	long long cumulative_nonzero = 0;
};

struct MultiDegreeStatistics {
	MultiDegree multi_degree;
	long long dimension = 0;
	long long nonzero = 0;
};

struct SeriesStatistics {
	std::vector<DegreeStatistics> degrees;           // degrees 1..N
	std::vector<MultiDegreeStatistics> multi_degrees; // ascending multi-degree
	long long nonzero = 0;
};

SeriesStatistics statistics(const LieSeries &series);

} // namespace bch
