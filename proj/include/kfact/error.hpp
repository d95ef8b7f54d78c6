#pragma once

#include <stdexcept>
#include <string>

namespace kfact {

enum class errc {
  size_mismatch,
  entry_out_of_range,
  not_a_bijection,
  self_loop,
  cycle_detected,
  colour_out_of_range,
  wrong_factor_count,
  not_min_first,
  product_not_full_cycle,
  not_in_lower_image,
  not_a_parking_function,
  stack_not_emptied,
  empty_pop_required,
  size_guard,
  inconsistency,
  parse_error,
};

constexpr const char* to_string(errc c) {
  switch (c) {
    case errc::size_mismatch: return "SizeMismatch";
    case errc::entry_out_of_range: return "EntryOutOfRange";
    case errc::not_a_bijection: return "NotABijection";
    case errc::self_loop: return "SelfLoop";
    case errc::cycle_detected: return "CycleDetected";
    case errc::colour_out_of_range: return "ColourOutOfRange";
    case errc::wrong_factor_count: return "WrongFactorCount";
    case errc::not_min_first: return "NotMinFirst";
    case errc::product_not_full_cycle: return "ProductNotFullCycle";
    case errc::not_in_lower_image: return "NotInLowerImage";
    case errc::not_a_parking_function: return "NotAParkingFunction";
    case errc::stack_not_emptied: return "StackNotEmptied";
    case errc::empty_pop_required: return "EmptyPopRequired";
    case errc::size_guard: return "SizeGuard";
    case errc::inconsistency: return "Inconsistency";
    case errc::parse_error: return "ParseError";
  }
  return "UnknownError";
}

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& detail) {
  throw Error(code, detail);
}

}  // namespace kfact
