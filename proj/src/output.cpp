#include "bch/output.hpp"

#include <algorithm>
#include <cstdarg>

namespace bch {

namespace {

void appendf(std::string &out, const char *fmt, ...) __attribute__((format(printf, 2, 3)));

void appendf(std::string &out, const char *fmt, ...)
{
	char buf[256];
	va_list args;
	va_start(args, fmt);
	int n = std::vsnprintf(buf, sizeof buf, fmt, args);
	va_end(args);
	if (n > 0)
		out.append(buf, std::min<std::size_t>(static_cast<std::size_t>(n), sizeof buf - 1));
}

std::string multi_degree_cell(const MultiDegree &md, const char *field)
{
	std::string s = "(";
	for (std::size_t g = 0; g < md.counts.size(); ++g) {
		if (g > 0)
			s += ',';
		appendf(s, field, md.counts[g]);
	}
	return s + ")";
}

} // namespace

std::string format_linear_combination(const LieSeries &series, std::string_view names)
{
	std::string out;
	for (int i = 0; i < series.dimension(); ++i) {
		if (series.numerator_of_coefficient(i).is_zero())
			continue;
		std::string c = series.coefficient_string(i);
		if (c[0] != '-')
			out += '+';
		out += c;
		out += '*';
		out += series.basis_element(i, names);
	}
	return out;
}

std::string format_table(const LieSeries &series, const PrintOptions &o)
{
	std::string out;
	auto row = [&out](std::initializer_list<std::pair<bool, std::string>> cells) {
		bool first = true;
		for (const auto &[on, text] : cells) {
			if (!on)
				continue;
			if (!first)
				out += '\t';
			out += text;
			first = false;
		}
		out += '\n';
	};
	if (o.verbosity_level >= 1) {
		out += "# ";
		row({{o.print_index, "i"},
		     {o.print_degree, "|i|"},
		     {o.print_multi_degree, "multi degree"},
		     {o.print_factors, "i'\ti\""},
		     {o.print_foliage, "foliage"},
		     {o.print_basis_element, "basis element"},
		     {o.print_coefficient, "coefficient"}});
	}
	for (int i = 0; i < series.dimension(); ++i) {
		const std::string_view names = o.generator_names;
		row({{o.print_index, std::to_string(i)},
		     {o.print_degree, std::to_string(series.degree(i))},
		     {o.print_multi_degree, o.print_multi_degree ? multi_degree_cell(series.multi_degree(i), "%d") : ""},
		     {o.print_factors,
		      std::to_string(series.left_factor(i)) + '\t' + std::to_string(series.right_factor(i))},
		     {o.print_foliage, o.print_foliage ? series.foliage(i, names) : ""},
		     {o.print_basis_element, o.print_basis_element ? series.basis_element(i, names) : ""},
		     {o.print_coefficient, series.coefficient_string(i)}});
	}
	return out;
}

std::string Diagnostics::after_lyndon_words(const RunInfo &info) const
{
	std::string out;
	appendf(out, "#number of Lyndon words of length<=%d over set of %d letters: %zu\n", max_degree_,
	        num_generators_, info.lyndon_words);
	appendf(out, "#initialize Lyndon words: time=%g sec\n", info.time_lyndon_words);
	out += "#expression=" + expression_ + '\n';
	return out;
}

std::string Diagnostics::after_coefficients(const RunInfo &info, const BigInt &denominator) const
{
	std::string out = "#denominator=" + format_integer(denominator) + '\n';
	if (info.used_goldberg)
		appendf(out, "#compute Goldberg coefficients: time=%g sec\n", info.time_goldberg);
	appendf(out, "#compute coefficients of Lyndon words: time=%g sec\n", info.time_coefficients);
	return out;
}

std::string Diagnostics::after_conversion(const RunInfo &info) const
{
	std::string out;
	appendf(out, "#convert to Lie series: time=%g sec\n", info.time_conversion);
	appendf(out, "#total time=%g sec\n", info.time_total);
	return out;
}

std::string Diagnostics::tables(const LieSeries &series) const
{
	const SeriesStatistics stats = statistics(series);
	std::string out;
	appendf(out, "#%7s%12s%12s%12s%12s\n", "degree", "dim", "#nonzero", "dim(cum.)", "#nz(cum.)");
	for (const auto &d : stats.degrees)
		appendf(out, "#%7d%12lld%12lld%12lld%12lld\n", d.degree, d.dimension, d.nonzero,
		        d.cumulative_dimension, d.cumulative_nonzero);
	out += "#\n";
	out += "# multi-degree\tdim\t#nonzero\n";
	for (const auto &m : stats.multi_degrees) {
		if (m.multi_degree.degree() != max_degree_)
			continue;
		appendf(out, "# %s\t%lld\t%lld\n", multi_degree_cell(m.multi_degree, "%2d").c_str(),
		        m.dimension, m.nonzero);
	}
	out += "#\n";
	return out;
}

std::string emit_diagnostics(const RunInfo &info, const LieSeries &series,
                             std::string_view expression_text)
{
	Diagnostics d(series.number_of_generators(), series.maximum_degree(), std::string(expression_text));
	return d.after_lyndon_words(info) + d.after_coefficients(info, series.denominator()) +
	       d.after_conversion(info) + d.tables(series);
}

} // namespace bch
