#ifndef VBRAID_ERROR_HPP
#define VBRAID_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace vbraid {

// Exception hierarchy. The CLI maps the three intermediate classes onto exit
// codes: ParseError -> 2, DomainError -> 3, PreconditionError -> 4.

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

class SyntaxError : public ParseError {
 public:
  SyntaxError(std::size_t position, std::string const& what)
      : ParseError("syntax error at position " + std::to_string(position) + ": "
                   + what),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class IndexOutOfRange : public ParseError {
 public:
  using ParseError::ParseError;
};

class LetterNotAllowedInFlavor : public ParseError {
 public:
  using ParseError::ParseError;
};

class InverseNotAllowedInMonoid : public ParseError {
 public:
  using ParseError::ParseError;
};

class LabelCountError : public ParseError {
 public:
  using ParseError::ParseError;
};

class FlavorError : public DomainError {
 public:
  using DomainError::DomainError;
};

class MonoidHasNoInverses : public DomainError {
 public:
  using DomainError::DomainError;
};

class DimensionMismatch : public DomainError {
 public:
  using DomainError::DomainError;
};

class NonUnitDeterminant : public DomainError {
 public:
  using DomainError::DomainError;
};

class InexactDivision : public DomainError {
 public:
  using DomainError::DomainError;
};

class NotAKnot : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

}  // namespace vbraid

#endif  // VBRAID_ERROR_HPP
