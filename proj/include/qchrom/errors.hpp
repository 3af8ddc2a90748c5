#ifndef QCHROM_ERRORS_HPP
#define QCHROM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qchrom {

// Base class for all library errors. Each concrete class corresponds to a
// distinct failure mode and maps to its own CLI exit code.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Polynomial division left a remainder. This is a correctness alarm: callers
// divide only where exactness is guaranteed by an identity.
class NonzeroRemainder : public Error {
public:
  explicit NonzeroRemainder(const std::string& msg) : Error(msg) {}
};

// A conversion that must land in integer coefficients produced a fraction.
class NonIntegral : public Error {
public:
  explicit NonIntegral(const std::string& msg) : Error(msg) {}
};

class ShapeMismatch : public Error {
public:
  explicit ShapeMismatch(const std::string& msg) : Error(msg) {}
};

class SizeMismatch : public Error {
public:
  explicit SizeMismatch(const std::string& msg) : Error(msg) {}
};

class LengthMismatch : public Error {
public:
  explicit LengthMismatch(const std::string& msg) : Error(msg) {}
};

class InvalidMSeq : public Error {
public:
  InvalidMSeq(const std::string& msg, int index) : Error(msg), index(index) {}
  int index;  // 1-based position of the violating entry
};

class InvalidArea : public Error {
public:
  InvalidArea(const std::string& msg, int index) : Error(msg), index(index) {}
  int index;
};

class NotUnitInterval : public Error {
public:
  explicit NotUnitInterval(const std::string& msg) : Error(msg) {}
};

class NotATriangle : public Error {
public:
  explicit NotATriangle(const std::string& msg) : Error(msg) {}
};

class BruteForceBound : public Error {
public:
  explicit BruteForceBound(const std::string& msg) : Error(msg) {}
};

class ParseError : public Error {
public:
  ParseError(const std::string& msg, std::size_t position)
      : Error(msg), position(position) {}
  std::size_t position;  // byte offset into the input text
};

class RangeError : public Error {
public:
  explicit RangeError(const std::string& msg) : Error(msg) {}
};

}  // namespace qchrom

#endif
