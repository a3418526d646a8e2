#pragma once

#include <stdexcept>
#include <string>

namespace sgspec {

enum class Errc {
  DUPLICATE_EDGE,
  LOOP,
  INDEX_OUT_OF_RANGE,
  INVALID_COLORING,
  NON_INTEGER_ENTRIES,
  NOT_SYMMETRIC,
  REDUCIBLE_MINPOLY,
  UNSUPPORTED_DEGREE,
  LIMIT_EXCEEDED,
  UNKNOWN_NAME,
  BAD_PARAMS,
  VERIFICATION_FAILED,
  DIVISION_BY_ZERO,
  NOT_TOP_EIGENVALUE,
  DIMENSION_TOO_SMALL,
  NOT_UNIT,
  AMBIGUOUS_PRODUCT,
  NUMERIC_FAILURE,
  FIELD_MISMATCH,
  PARSE_ERROR,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

}  // namespace sgspec
