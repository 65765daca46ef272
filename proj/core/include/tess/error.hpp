#pragma once

#include <stdexcept>
#include <string>

namespace tess {

enum class errc {
  malformed_input,
  non_spherical_embedding,
  invalid_argument,
  incomplete_pattern,
  not_nonnegatively_curved,
  incompatible_boundaries,
  non_simple_result,
  not_prismlike_structure,
  undefined_for_flat,
};

const char* to_string(errc c);

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) {
  throw error(code, what);
}

}  // namespace tess
