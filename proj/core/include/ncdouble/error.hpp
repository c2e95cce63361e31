#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ncd {

/// Broad classes used by the command line front end to pick an exit code.
enum class ErrorClass {
  Input,     // malformed or inconsistent user input
  Resource,  // fuel or degree bounds exceeded
  Math,      // a mathematical precondition failed (pole, singular system, ...)
};

class Error : public std::runtime_error {
 public:
  Error(ErrorClass cls, const std::string& what) : std::runtime_error(what), cls_(cls) {}
  ErrorClass error_class() const noexcept { return cls_; }

 private:
  ErrorClass cls_;
};

#define NCD_DEFINE_ERROR(Name, Cls)                                              \
  class Name : public Error {                                                   \
   public:                                                                      \
    explicit Name(const std::string& what) : Error(ErrorClass::Cls, #Name ": " + what) {} \
  }

NCD_DEFINE_ERROR(DivisionByZero, Math);
NCD_DEFINE_ERROR(PoleAtSubstitution, Math);
NCD_DEFINE_ERROR(AlphabetMismatch, Input);
NCD_DEFINE_ERROR(AlphabetCollision, Input);
NCD_DEFINE_ERROR(UnmappedGenerator, Input);
NCD_DEFINE_ERROR(UnknownGenerator, Input);
NCD_DEFINE_ERROR(FuelExhausted, Resource);
NCD_DEFINE_ERROR(RuleConstructionError, Input);
NCD_DEFINE_ERROR(BoundTooSmall, Resource);
NCD_DEFINE_ERROR(DimensionNotSquare, Input);
NCD_DEFINE_ERROR(NotSkewInvertible, Math);
NCD_DEFINE_ERROR(LegDimensionMismatch, Input);
NCD_DEFINE_ERROR(MissingCounit, Input);
NCD_DEFINE_ERROR(TruncationEscape, Resource);
NCD_DEFINE_ERROR(NotConfluent, Math);
NCD_DEFINE_ERROR(UnknownEntry, Input);
NCD_DEFINE_ERROR(InvalidParams, Input);

#undef NCD_DEFINE_ERROR

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t offset, const std::string& what)
      : Error(ErrorClass::Input,
              "SyntaxError at offset " + std::to_string(offset) + ": " + what),
        offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace ncd
