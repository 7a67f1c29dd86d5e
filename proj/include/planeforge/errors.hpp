#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace planeforge {

using IdSet = std::vector<std::string>;

/// Base class for every recoverable error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two distinct lines share two points.
class ExchangeViolation : public Error {
 public:
  ExchangeViolation(IdSet first, IdSet second, IdSet pair);
  const IdSet& first_line() const { return first_; }
  const IdSet& second_line() const { return second_; }
  const IdSet& shared_pair() const { return pair_; }

 private:
  IdSet first_, second_, pair_;
};

class UnknownPoint : public Error {
 public:
  explicit UnknownPoint(const std::string& id)
      : Error("unknown point '" + id + "'"), id_(id) {}
  const std::string& id() const { return id_; }

 private:
  std::string id_;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line_(line), column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_, column_;
};

#define PLANEFORGE_SIMPLE_ERROR(Name)      \
  class Name : public Error {              \
   public:                                 \
    using Error::Error;                    \
  };

PLANEFORGE_SIMPLE_ERROR(InvalidLine)
PLANEFORGE_SIMPLE_ERROR(NotASubplane)
PLANEFORGE_SIMPLE_ERROR(NotAFlat)
PLANEFORGE_SIMPLE_ERROR(OverlappingSets)
PLANEFORGE_SIMPLE_ERROR(NotASubset)
PLANEFORGE_SIMPLE_ERROR(NotInK0)
PLANEFORGE_SIMPLE_ERROR(NotWedgeSubgeometry)
PLANEFORGE_SIMPLE_ERROR(NotStrong)
PLANEFORGE_SIMPLE_ERROR(NotPrimitive)
PLANEFORGE_SIMPLE_ERROR(PreconditionViolated)
PLANEFORGE_SIMPLE_ERROR(BudgetExceeded)

#undef PLANEFORGE_SIMPLE_ERROR

/// An internal cross-check failed. Never expected; indicates a bug.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

std::string join_ids(const IdSet& ids);

}  // namespace planeforge
