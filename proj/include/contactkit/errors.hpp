#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace contactkit {

// Base for all domain errors. `kind()` is the stable error name echoed by
// the CLI (NotContact, SingularMatrix, ...).
class Error : public std::runtime_error {
  public:
	Error(std::string kind, const std::string &what)
	    : std::runtime_error(what), kind_(std::move(kind))
	{}
	const std::string &kind() const { return kind_; }

  private:
	std::string kind_;
};

struct DimensionMismatch : Error
{
	explicit DimensionMismatch(const std::string &w)
	    : Error("DimensionMismatch", w)
	{}
};

struct IndexOutOfRange : Error
{
	explicit IndexOutOfRange(const std::string &w)
	    : Error("IndexOutOfRange", w)
	{}
};

struct DivisionByZero : Error
{
	explicit DivisionByZero(const std::string &w) : Error("DivisionByZero", w)
	{}
};

struct DegreeError : Error
{
	explicit DegreeError(const std::string &w) : Error("DegreeError", w) {}
};

struct SingularMatrix : Error
{
	explicit SingularMatrix(const std::string &w) : Error("SingularMatrix", w)
	{}
};

struct InconsistentSystem : Error
{
	explicit InconsistentSystem(const std::string &w)
	    : Error("InconsistentSystem", w)
	{}
};

struct NotContact : Error
{
	explicit NotContact(const std::string &w) : Error("NotContact", w) {}
};

struct NotTangent : Error
{
	explicit NotTangent(const std::string &w) : Error("NotTangent", w) {}
};

struct InconsistentFrame : Error
{
	explicit InconsistentFrame(const std::string &w)
	    : Error("InconsistentFrame", w)
	{}
};

struct ZeroFunction : Error
{
	explicit ZeroFunction(const std::string &w) : Error("ZeroFunction", w) {}
};

struct WeightMismatch : Error
{
	explicit WeightMismatch(const std::string &w) : Error("WeightMismatch", w)
	{}
};

struct UnknownSuite : Error
{
	explicit UnknownSuite(const std::string &w) : Error("UnknownSuite", w) {}
};

// Parse errors carry a 1-based character offset into the source text.
struct SyntaxError : Error
{
	SyntaxError(std::size_t offset, const std::string &w)
	    : Error("SyntaxError",
	            w + " (at offset " + std::to_string(offset) + ")"),
	      offset(offset)
	{}
	std::size_t offset;
};

struct UnknownVariable : Error
{
	UnknownVariable(std::size_t offset, const std::string &name)
	    : Error("UnknownVariable", "unknown variable '" + name +
	                                   "' (at offset " +
	                                   std::to_string(offset) + ")"),
	      offset(offset), name(name)
	{}
	std::size_t offset;
	std::string name;
};

struct ZeroDenominator : Error
{
	explicit ZeroDenominator(const std::string &w) : Error("ZeroDenominator", w)
	{}
};

} // namespace contactkit
