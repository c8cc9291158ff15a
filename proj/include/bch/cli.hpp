#pragma once

#include "bch/output.hpp"

#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>

namespace bch {

struct CliConfig {
	int N = 5;
	int basis = 0;
	std::optional<std::string> generators;
	// A single digit 0-5 selects a predefined expression.
	std::string expression = "0";
	std::optional<bool> table_output;
	int verbosity_level = 0;
	bool print_index = true;
	bool print_degree = true;
	bool print_multi_degree = false;
	bool print_factors = true;
	bool print_foliage = false;
	bool print_basis_element = false;
	bool print_coefficient = true;
	int threads = 0; // 0: all hardware threads
};

// Throws UsageError for unknown parameters or malformed values.
CliConfig parse_args(std::span<const std::string_view> args);

// Runs the pipeline and prints diagnostics and the result; returns the exit code.
int run(const CliConfig &config, std::ostream &out, std::ostream &err);

// parse_args + run, reporting usage errors on err.
int main_entry(std::span<const std::string_view> args, std::ostream &out, std::ostream &err);

} // namespace bch
