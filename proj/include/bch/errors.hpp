#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bch {

// Invalid argument to a library function (index out of range, bad degree, ...).
class ParameterError : public std::invalid_argument {
public:
	using std::invalid_argument::invalid_argument;
};

// Mathematically undefined input: zero denominators, log/exp of series with
// the wrong constant term.
class DomainError : public std::domain_error {
public:
	using std::domain_error::domain_error;
};

class DivisionByZeroError : public DomainError {
public:
	DivisionByZeroError() : DomainError("division by zero") {}
};

// A 128-bit intermediate result does not fit. Usually means the maximum
// degree is too large for the expression.
class OverflowError : public std::overflow_error {
public:
	using std::overflow_error::overflow_error;
};

class ParseError : public std::runtime_error {
public:
	ParseError(std::size_t offset, const std::string &message)
	    : std::runtime_error("parse error at offset " + std::to_string(offset) +
	                         ": " + message),
	      offset_(offset), message_(message)
	{}

	std::size_t offset() const noexcept { return offset_; }
	const std::string &message() const noexcept { return message_; }

private:
	std::size_t offset_;
	std::string message_;
};

// Bad command-line parameter or value.
class UsageError : public std::invalid_argument {
public:
	using std::invalid_argument::invalid_argument;
};

// Broken internal invariant (non-unit pivot, inexact division, runaway
// rewriting). Indicates a bug, not bad input.
class InternalError : public std::logic_error {
public:
	using std::logic_error::logic_error;
};

} // namespace bch
