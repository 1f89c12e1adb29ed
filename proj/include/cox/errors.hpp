#pragma once

#include <stdexcept>
#include <string>

namespace cox {

enum class Err {
  invalid_subset,
  not_spherical,
  invalid_word,
  graph_mismatch,
  not_a_reflection,
  not_a_marking,
  invalid_marking,
  invalid_twist,
  walls_intersect,
  not_separated,
  domain_selection_failed,
  radius_exhausted,
  inconclusive_radius,
  cap_exhausted,
  verification_failed,
  unsupported,
  parse_error,
  internal_error,
};

class CoxError : public std::runtime_error {
 public:
  CoxError(Err code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Err code() const { return code_; }

 private:
  Err code_;
};

// Exit statuses used by the CLI: 1 verification failure, 2 input error,
// 3 resource exhaustion.
inline int exit_status(Err e) {
  switch (e) {
    case Err::radius_exhausted:
    case Err::inconclusive_radius:
    case Err::cap_exhausted:
      return 3;
    case Err::verification_failed:
      return 1;
    default:
      return 2;
  }
}

}  // namespace cox
