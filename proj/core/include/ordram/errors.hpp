#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ordram {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& what, std::size_t pos)
      : Error(what + " at position " + std::to_string(pos)), pos_(pos) {}
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

class ZeroOrdinal : public Error {
 public:
  ZeroOrdinal() : Error("operation undefined on the ordinal 0") {}
};

class RankZero : public Error {
 public:
  RankZero() : Error("ordinal has Cantor-Bendixson rank 0 and no subfan") {}
};

#define ORDRAM_SIMPLE_ERROR(Name)        \
  class Name : public Error {            \
   public:                               \
    using Error::Error;                  \
  };

ORDRAM_SIMPLE_ERROR(OutOfRange)
ORDRAM_SIMPLE_ERROR(Overflow)
ORDRAM_SIMPLE_ERROR(NotASubsetOfLevel)
ORDRAM_SIMPLE_ERROR(NotLarge)
ORDRAM_SIMPLE_ERROR(WindowExhausted)
ORDRAM_SIMPLE_ERROR(OutOfUniverse)
ORDRAM_SIMPLE_ERROR(NotIncreasing)
ORDRAM_SIMPLE_ERROR(UnsupportedClauseForm)
ORDRAM_SIMPLE_ERROR(FormatError)

#undef ORDRAM_SIMPLE_ERROR

}  // namespace ordram
