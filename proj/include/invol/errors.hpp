#pragma once

#include <stdexcept>
#include <string>

namespace invol {

enum class Errc {
  malformed,
  not_a_permutation,
  not_an_involution,
  invalid_params,
  resource_limit,
  non_unit_constant,
  negative_valuation,
  not_avoiding,
  not_primitive,
  wrong_occurrence_count,
  no_fixed_point,
  not_in_class,
  empty_input,
  not_involution_query,
};

class Error : public std::runtime_error {
 public:
  Error(Errc c, const std::string& what) : std::runtime_error(what), code_(c) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc c, const std::string& what) { throw Error(c, what); }

const char* errc_name(Errc c);

}  // namespace invol
