#ifndef HOPFIND_ERROR_HPP
#define HOPFIND_ERROR_HPP

#include <stdexcept>
#include <string>

namespace hopfind {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Dimension or shape mismatch between operands.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// Malformed input: unparsable files, schema violations, unknown names.
class InputError : public Error {
 public:
  using Error::Error;
};

/// A mathematical hypothesis of a construction does not hold for the
/// given data (e.g. a subalgebra that is not normal).
class HypothesisError : public Error {
 public:
  HypothesisError(std::string check, std::string witness)
      : Error(check + ": " + witness), check_(std::move(check)), witness_(std::move(witness)) {}
  const std::string& check() const { return check_; }
  const std::string& witness() const { return witness_; }

 private:
  std::string check_;
  std::string witness_;
};

/// An axiom or identity failed during a construction.
class VerificationError : public Error {
 public:
  VerificationError(std::string check, std::string witness)
      : Error(check + ": " + witness), check_(std::move(check)), witness_(std::move(witness)) {}
  const std::string& check() const { return check_; }
  const std::string& witness() const { return witness_; }

 private:
  std::string check_;
  std::string witness_;
};

}  // namespace hopfind

#endif  // HOPFIND_ERROR_HPP
