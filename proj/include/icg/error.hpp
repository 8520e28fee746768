#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace icg {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
	using std::runtime_error::runtime_error;
};

/// Malformed textual input. Line and column are 1-based.
class ParseError : public Error {
public:
	ParseError(const std::string& what, std::size_t line, std::size_t column)
		: Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
		  line_(line), column_(column) {}

	std::size_t line() const noexcept { return line_; }
	std::size_t column() const noexcept { return column_; }

private:
	std::size_t line_;
	std::size_t column_;
};

/// Two automata or languages that must share an alphabet do not.
class AlphabetMismatch : public Error {
public:
	using Error::Error;
};

/// A configurable size guard (monoid cap, frontier cap, search space) was exceeded.
class ResourceError : public Error {
public:
	using Error::Error;
};

/// Violated precondition: foreign letter, bad decomposition, parameter out of range.
class DomainError : public Error {
public:
	using Error::Error;
};

/// Results contradict a known inclusion between families.
class InternalError : public Error {
public:
	using Error::Error;
};

} // namespace icg
