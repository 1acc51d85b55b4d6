#pragma once

#include <stdexcept>
#include <string>

namespace qice {

enum class Errc {
  unknown_vertex,
  unknown_arrow,
  non_parallel_relation,
  not_admissible,
  not_finite_dimensional,
  algebra_mismatch,
  non_split_end_algebra,
  indeterminate,
  not_nakayama,
  budget_exhausted,
  census_incomplete,
  invalid_input,
  internal,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

inline void require(bool cond, Errc code, const std::string& what) {
  if (!cond) fail(code, what);
}

}  // namespace qice
