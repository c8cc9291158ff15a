#include "bch/cli.hpp"

#include "bch/errors.hpp"
#include "bch/wordcoeffs.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <functional>
#include <map>

namespace bch {

namespace {

int parse_int(std::string_view name, std::string_view value, int lo, int hi)
{
	int v = 0;
	auto [end, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
	if (ec != std::errc{} || end != value.data() + value.size() || v < lo || v > hi)
		throw UsageError("invalid value for " + std::string(name) + ": '" + std::string(value) +
		                 "' (expected an integer in [" + std::to_string(lo) + ", " +
		                 std::to_string(hi) + "])");
	return v;
}

bool parse_flag(std::string_view name, std::string_view value)
{
	return parse_int(name, value, 0, 1) == 1;
}

bool is_predefined_id(std::string_view s)
{
	return s.size() == 1 && s[0] >= '0' && s[0] < '0' + num_predefined_expressions;
}

// Replaces every generator symbol of the formula by its display name.
std::string rename_generators(std::string_view formula, std::string_view symbols,
                              std::string_view names)
{
	std::string out;
	for (std::size_t i = 0; i < formula.size(); ++i) {
		char c = formula[i];
		auto k = symbols.find(c);
		bool is_name = k != std::string_view::npos &&
		               (i == 0 || !std::isalpha(static_cast<unsigned char>(formula[i - 1]))) &&
		               (i + 1 == formula.size() ||
		                !std::isalpha(static_cast<unsigned char>(formula[i + 1])));
		out += is_name ? names[k] : c;
	}
	return out;
}

} // namespace

CliConfig parse_args(std::span<const std::string_view> args)
{
	CliConfig c;
	using Setter = std::function<void(std::string_view, std::string_view)>;
	auto flag = [](bool &target) -> Setter {
		return [&target](std::string_view n, std::string_view v) { target = parse_flag(n, v); };
	};
	const std::map<std::string_view, Setter> setters = {
	    {"N", [&](auto n, auto v) { c.N = parse_int(n, v, 1, max_degree); }},
	    {"basis", [&](auto n, auto v) { c.basis = parse_int(n, v, 0, 2); }},
	    {"generators",
	     [&](auto, auto v) {
		     if (v.empty())
			     throw UsageError("generators must not be empty");
		     c.generators = std::string(v);
	     }},
	    {"expression",
	     [&](auto, auto v) {
		     if (v.empty())
			     throw UsageError("expression must not be empty");
		     c.expression = std::string(v);
	     }},
	    {"table_output", [&](auto n, auto v) { c.table_output = parse_flag(n, v); }},
	    {"verbosity_level", [&](auto n, auto v) { c.verbosity_level = parse_int(n, v, 0, 1000); }},
	    {"print_index", flag(c.print_index)},
	    {"print_degree", flag(c.print_degree)},
	    {"print_multi_degree", flag(c.print_multi_degree)},
	    {"print_factors", flag(c.print_factors)},
	    {"print_foliage", flag(c.print_foliage)},
	    {"print_basis_element", flag(c.print_basis_element)},
	    {"print_coefficient", flag(c.print_coefficient)},
	    {"threads", [&](auto n, auto v) { c.threads = parse_int(n, v, 0, 1024); }},
	};
	for (std::string_view arg : args) {
		auto eq = arg.find('=');
		if (eq == std::string_view::npos)
			throw UsageError("argument '" + std::string(arg) + "' is not of the form parameter=value");
		auto name = arg.substr(0, eq);
		auto it = setters.find(name);
		if (it == setters.end())
			throw UsageError("unknown parameter '" + std::string(name) + "'");
		it->second(name, arg.substr(eq + 1));
	}
	return c;
}

int run(const CliConfig &config, std::ostream &out, std::ostream &err)
{
	try {
		const bool predefined = is_predefined_id(config.expression);
		const std::string formula = predefined
		                                ? std::string(predefined_expression(config.expression[0] - '0'))
		                                : config.expression;
		ParsedExpression parsed = parse(formula);
		const int K = std::max(1, parsed.number_of_generators);
		std::string names = config.generators ? *config.generators : parsed.generators;
		if (names.empty())
			names = "A";
		if (static_cast<int>(names.size()) < K)
			throw UsageError("generators must name at least " + std::to_string(K) + " generators");

		if (!predefined && !is_lie_element(parsed.expression, std::min(config.N, 8)))
			throw DomainError("expression is not a Lie element: " + formula);

		const int v = config.verbosity_level;
		Diagnostics diag(K, config.N, rename_generators(formula, parsed.generators, names));
		auto emit = [&](const std::string &text) {
			if (v < 1)
				return;
			out << text;
			if (v >= 2)
				out.flush();
		};
		PipelineOptions options;
		options.threads = config.threads;
		options.progress = [&](Phase phase, const RunInfo &info, const BigInt &denominator) {
			switch (phase) {
			case Phase::LyndonWords:
				emit(diag.after_lyndon_words(info));
				break;
			case Phase::Denominator:
				emit(diag.after_coefficients(info, denominator));
				break;
			case Phase::Conversion:
				emit(diag.after_conversion(info));
				break;
			default:
				break;
			}
		};
		RunInfo info;
		LieSeries series = lie_series(K, parsed.expression, config.N,
		                              basis_kind_from_int(config.basis), options, &info);
		const SeriesStatistics stats = statistics(series);
		if (v >= 1)
			emit(diag.tables(series));

		PrintOptions print;
		print.table_output = config.table_output.value_or(stats.nonzero >= table_output_threshold);
		print.print_index = config.print_index;
		print.print_degree = config.print_degree;
		print.print_multi_degree = config.print_multi_degree;
		print.print_factors = config.print_factors;
		print.print_foliage = config.print_foliage;
		print.print_basis_element = config.print_basis_element;
		print.print_coefficient = config.print_coefficient;
		print.generator_names = names;
		print.verbosity_level = v;
		if (print.table_output)
			out << format_table(series, print);
		else
			out << format_linear_combination(series, names) << '\n';
		out.flush();
		return 0;
	} catch (const OverflowError &e) {
		err << "bch: overflow: " << e.what() << '\n';
	} catch (const std::exception &e) {
		err << "bch: " << e.what() << '\n';
	}
	return 1;
}

int main_entry(std::span<const std::string_view> args, std::ostream &out, std::ostream &err)
{
	CliConfig config;
	try {
		config = parse_args(args);
	} catch (const UsageError &e) {
		err << "bch: " << e.what() << '\n'
		    << "usage: bch [N=5] [basis=0|1|2] [generators=AB...] [expression=0..5|formula]\n"
		       "           [table_output=0|1] [verbosity_level=0] [print_index=1] [print_degree=1]\n"
		       "           [print_multi_degree=0] [print_factors=1] [print_foliage=0]\n"
		       "           [print_basis_element=0] [print_coefficient=1] [threads=0]\n";
		return 2;
	}
	return run(config, out, err);
}

} // namespace bch
