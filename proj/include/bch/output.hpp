#pragma once

#include "bch/lie_series.hpp"

#include <cstdio>
#include <string>
#include <string_view>

namespace bch {

struct PrintOptions {
	bool table_output = false;
	bool print_index = true;
	bool print_degree = true;
	bool print_multi_degree = false;
	bool print_factors = true;
	bool print_foliage = false;
	bool print_basis_element = false;
	bool print_coefficient = true;
	std::string generator_names = "ABCDEFGHIJKLMNOP";
	int verbosity_level = 0;
};

// Table output is the default from this many nonzero terms on.
inline constexpr long long table_output_threshold = 200;

// "+1/1*A+1/1*B+1/2*[A,B]..."; zero terms are skipped.
std::string format_linear_combination(const LieSeries &series, std::string_view names);

// One tab-separated row per basis element, zero coefficients included.
std::string format_table(const LieSeries &series, const PrintOptions &options);

/**
 * '#'-prefixed diagnostics, built incrementally so that a caller can print
 * each part as soon as the pipeline reaches it.
 */
class Diagnostics {
public:
	Diagnostics(int num_generators, int max_degree, std::string expression_text)
	    : num_generators_(num_generators), max_degree_(max_degree),
	      expression_(std::move(expression_text))
	{}

	// Header lines that are known once the Lyndon words exist.
	std::string after_lyndon_words(const RunInfo &info) const;
	// Denominator and coefficient timings.
	std::string after_coefficients(const RunInfo &info, const BigInt &denominator) const;
	std::string after_conversion(const RunInfo &info) const;
	// Dimension/#nonzero tables by degree and by multi-degree of degree N.
	std::string tables(const LieSeries &series) const;

private:
	int num_generators_;
	int max_degree_;
	std::string expression_;
};

// All diagnostics of a finished run, in print order.
std::string emit_diagnostics(const RunInfo &info, const LieSeries &series,
                             std::string_view expression_text);

} // namespace bch
