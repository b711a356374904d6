#ifndef RADX_ERRORS_HPP
#define RADX_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace radx {

/// Base class for every error this library throws on purpose.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Problem text / polynomial grammar errors, with a 0-based input position.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// The local quotient algebra is infinite-dimensional: the complex zero at the
/// origin is not isolated, or the staircase failed to close below the degree cap.
class NotAlgebraicallyIsolated : public Error {
 public:
  explicit NotAlgebraicallyIsolated(const std::string& what, bool cap_reached = false)
      : Error(what), cap_reached_(cap_reached) {}
  bool cap_reached() const { return cap_reached_; }

 private:
  bool cap_reached_;
};

/// The residue pairing came out singular. The theory guarantees non-degeneracy,
/// so this always signals an internal bug; callers must not continue.
class DegenerateForm : public Error {
 public:
  explicit DegenerateForm(const std::string& what) : Error(what) {}
};

class SingularMatrix : public Error {
 public:
  explicit SingularMatrix(const std::string& what) : Error(what) {}
};

class ZeroOnSphere : public Error {
 public:
  explicit ZeroOnSphere(const std::string& what) : Error(what) {}
};

class NotCertified : public Error {
 public:
  explicit NotCertified(const std::string& what) : Error(what) {}
};

class SuspectIrregularValue : public Error {
 public:
  explicit SuspectIrregularValue(const std::string& what) : Error(what) {}
};

class RankDrop : public Error {
 public:
  explicit RankDrop(const std::string& what) : Error(what) {}
};

class UnsupportedDimension : public Error {
 public:
  explicit UnsupportedDimension(const std::string& what) : Error(what) {}
};

/// An isolation hypothesis of an index formula could not be certified
/// (or an index it needs could not be computed by any engine).
class IsolationFailure : public Error {
 public:
  explicit IsolationFailure(const std::string& what) : Error(what) {}
};

/// A closed formula that must produce an integer produced something else.
/// Always an internal bug, never a recoverable condition.
class IntegralityError : public Error {
 public:
  explicit IntegralityError(const std::string& what) : Error(what) {}
};

}  // namespace radx

#endif  // RADX_ERRORS_HPP
