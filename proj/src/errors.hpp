#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace reachlp {

enum class Errc {
  // lp_solver
  MalformedProblem,
  IterationLimit,
  // geometry
  TooFewNormals,
  EmptyPolytope,
  Unbounded,
  NormalMismatch,
  EmptyExtremeSet,
  // stable_norm
  NotContractive,
  AssumptionViolated,
  // system_model / input documents
  SchemaError,
  DimensionMismatch,
  // dual_reach
  DualUnbounded,
  InternalError,
  // cli / config
  BadConfig,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, std::string msg) : std::runtime_error(std::move(msg)), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

}  // namespace reachlp
