#ifndef RELCOMM_ERROR_HPP
#define RELCOMM_ERROR_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace relcomm {

// Every failure the engine can report.  Input-shaped problems (bad tables,
// bad words, bad files) and contract violations (budget, kind) are separate
// from InternalError, which marks a broken runtime assertion and is never
// expected on valid inputs.
enum class ErrorCode {
  NotLatinSquare,
  NoUnit,
  NotAssociative,
  AxiomViolation,
  ArityMismatch,
  SignatureMismatch,
  KindUnsupported,
  BudgetExceeded,
  NonCommutingSquare,
  NotEquivalenceRelation,
  NoCentralizingIdeal,
  ParseError,
  InvalidArgument,
  InternalError,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void throw_error(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

// Runtime assertion that survives NDEBUG; used for the post-checks the
// engine is contractually required to perform.  The const char* overload
// keeps literal messages allocation-free on the success path, which matters
// in the per-operation hot loops.
inline void require_internal(bool cond, const char* what) {
  if (!cond) {
    throw Error(ErrorCode::InternalError, what);
  }
}

inline void require_internal(bool cond, const std::string& what) {
  if (!cond) {
    throw Error(ErrorCode::InternalError, what);
  }
}

class BudgetExceededError : public Error {
 public:
  BudgetExceededError(std::uint64_t estimate, std::uint64_t cap,
                      const std::string& where)
      : Error(ErrorCode::BudgetExceeded,
              where + ": estimated " + std::to_string(estimate) +
                  " evaluations exceeds budget " + std::to_string(cap)),
        estimate_(estimate),
        cap_(cap) {}

  std::uint64_t estimate() const { return estimate_; }
  std::uint64_t cap() const { return cap_; }

 private:
  std::uint64_t estimate_;
  std::uint64_t cap_;
};

}  // namespace relcomm

#endif
