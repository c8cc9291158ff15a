#include "bch/lie_series.hpp"

#include "bch/wordcoeffs.hpp"

#include <chrono>
#include <map>

namespace bch {

LieSeries::LieSeries(BasisTable basis, BigInt denominator, std::vector<BigInt> numerators)
    : basis_(std::move(basis)), denominator_(denominator), numerators_(std::move(numerators))
{
	if (denominator_ <= BigInt(0))
		throw ParameterError("denominator must be positive");
	if (numerators_.size() != basis_.size())
		throw ParameterError("one numerator per basis element expected");
}

void LieSeries::check_index(int i) const
{
	if (i < 0 || i >= dimension())
		throw ParameterError("basis index " + std::to_string(i) + " out of range [0, " +
		                     std::to_string(dimension()) + ")");
}

void LieSeries::check_names(std::string_view names) const
{
	if (names.size() < static_cast<std::size_t>(number_of_generators()))
		throw ParameterError("need " + std::to_string(number_of_generators()) + " generator names");
}

const BigInt &LieSeries::numerator_of_coefficient(int i) const
{
	check_index(i);
	return numerators_[i];
}

Rational LieSeries::coefficient(int i) const
{
	check_index(i);
	return Rational(numerators_[i], denominator_);
}

int LieSeries::degree(int i) const
{
	check_index(i);
	return basis_.degree(i);
}

int LieSeries::degree_of_generator(int i, int g) const
{
	check_index(i);
	if (g < 0 || g >= number_of_generators())
		throw ParameterError("generator index out of range");
	return basis_.multi_degree(i).counts[g];
}

int LieSeries::left_factor(int i) const
{
	check_index(i);
	return basis_.left(i);
}

int LieSeries::right_factor(int i) const
{
	check_index(i);
	return basis_.right(i);
}

const MultiDegree &LieSeries::multi_degree(int i) const
{
	check_index(i);
	return basis_.multi_degree(i);
}

std::size_t LieSeries::write_foliage(char *out, int i, std::string_view names) const
{
	check_index(i);
	check_names(names);
	auto w = basis_.foliage(i);
	if (out != nullptr)
		for (std::size_t k = 0; k < w.size(); ++k)
			out[k] = names[w[k]];
	return w.size();
}

std::size_t LieSeries::write_basis_element(char *out, int i, std::string_view names) const
{
	check_index(i);
	check_names(names);
	return basis_.element_string(out, i, names);
}

std::size_t LieSeries::write_coefficient(char *out, int i) const
{
	check_index(i);
	return format_rational(numerators_[i], denominator_, out);
}

std::string LieSeries::foliage(int i, std::string_view names) const
{
	std::string s(write_foliage(nullptr, i, names), '\0');
	write_foliage(s.data(), i, names);
	return s;
}

std::string LieSeries::basis_element(int i, std::string_view names) const
{
	std::string s(write_basis_element(nullptr, i, names), '\0');
	write_basis_element(s.data(), i, names);
	return s;
}

std::string LieSeries::coefficient_string(int i) const
{
	check_index(i);
	return format_rational(numerators_[i], denominator_);
}

namespace {

class Stopwatch {
public:
	double lap()
	{
		auto now = std::chrono::steady_clock::now();
		double s = std::chrono::duration<double>(now - last_).count();
		last_ = now;
		return s;
	}

private:
	std::chrono::steady_clock::time_point last_ = std::chrono::steady_clock::now();
};

} // namespace

LieSeries lie_series(int num_generators, const Expr &e, int max_degree, BasisKind kind,
                     const PipelineOptions &options, RunInfo *info)
{
	if (!e)
		throw ParameterError("null expression");
	if (num_generators < generator_count(e))
		throw ParameterError("expression uses more generators than requested");

	RunInfo run;
	BigInt denominator(1);
	auto report = [&](Phase phase) {
		if (options.progress)
			options.progress(phase, run, denominator);
	};
	auto start = std::chrono::steady_clock::now();
	Stopwatch clock;

	LyndonTable table(num_generators, max_degree);
	run.lyndon_words = table.size();
	run.time_lyndon_words = clock.lap();
	report(Phase::LyndonWords);

	std::vector<Rational> values;
	if (num_generators == 2 && is_classical_bch(e)) {
		run.used_goldberg = true;
		GoldbergCache cache;
		for (std::size_t i = 0; i < table.size(); ++i)
			cache.word(table.word(static_cast<int>(i)));
		run.time_goldberg = clock.lap();
		report(Phase::Goldberg);
		values.resize(table.size());
		for (std::size_t i = 0; i < table.size(); ++i)
			values[i] = cache.word(table.word(static_cast<int>(i)));
	} else {
		values = lyndon_coefficients(e, table, {.threads = options.threads, .use_goldberg = false});
	}
	run.time_coefficients = clock.lap();
	report(Phase::Coefficients);

	denominator = lcm_of_denominators(values);
	std::vector<BigInt> word_numerators(values.size());
	for (std::size_t i = 0; i < values.size(); ++i)
		if (!values[i].is_zero())
			word_numerators[i] = values[i].num() * exact_div(denominator, values[i].den());
	report(Phase::Denominator);

	const ConversionOptions conversion{.threads = options.threads};
	std::vector<BigInt> numerators;
	BasisTable basis = kind == BasisKind::RightNormed ? rightnormed_basis(table, options.threads)
	                                                  : lyndon_basis(table);
	numerators = convert_to_basis(word_numerators, table, basis, conversion);
	if (kind == BasisKind::Hall) {
		BasisTable hall = hall_basis(num_generators, max_degree);
		numerators = rewrite_lyndon_to_hall(numerators, basis, hall);
		basis = std::move(hall);
	}
	run.time_conversion = clock.lap();
	run.time_total = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
	report(Phase::Conversion);

	if (info != nullptr)
		*info = run;
	return LieSeries(std::move(basis), denominator, std::move(numerators));
}

LieSeries lie_series(int num_generators, const Expr &e, int max_degree, int kind)
{
	return lie_series(num_generators, e, max_degree, basis_kind_from_int(kind));
}

LieSeries bch(int max_degree, int kind)
{
	return lie_series(2, parse(predefined_expression(0)).expression, max_degree, kind);
}

LieSeries symbch(int max_degree, int kind)
{
	return lie_series(2, parse(predefined_expression(1)).expression, max_degree, kind);
}

SeriesStatistics statistics(const LieSeries &series)
{
	SeriesStatistics s;
	const int n = series.maximum_degree();
	s.degrees.resize(n);
	for (int d = 0; d < n; ++d)
		s.degrees[d].degree = d + 1;

	std::map<MultiDegree, MultiDegreeStatistics> by_md;
	for (int i = 0; i < series.dimension(); ++i) {
		const bool nz = !series.numerators()[i].is_zero();
		auto &row = s.degrees[series.basis().degree(i) - 1];
		++row.dimension;
		row.nonzero += nz;
		auto &md = by_md[series.basis().multi_degree(i)];
		md.multi_degree = series.basis().multi_degree(i);
		++md.dimension;
		md.nonzero += nz;
		s.nonzero += nz;
	}
	long long dim = 0;
	long long nz = 0;
	for (auto &row : s.degrees) {
		dim += row.dimension;
		nz += row.nonzero;
		row.cumulative_dimension = dim;
		row.cumulative_nonzero = nz;
	}
	for (auto &[md, row] : by_md)
		s.multi_degrees.push_back(std::move(row));
	return s;
}

} // namespace bch
