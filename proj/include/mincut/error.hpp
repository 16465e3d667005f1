#pragma once

#include <stdexcept>
#include <string>

namespace mincut {

enum class errc {
  malformed_input,
  vertex_out_of_range,
  negative_weight,
  disconnected,
  all_zero_weights,
  weight_ratio_too_large,
  bad_argument,
  internal,
};

class MincutError : public std::runtime_error {
 public:
  MincutError(errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& msg) {
  throw MincutError(code, msg);
}

inline void require(bool cond, errc code, const std::string& msg) {
  if (!cond) fail(code, msg);
}

}  // namespace mincut
