#include "involution_lab/valuation.hpp"

#include "involution_lab/errors.hpp"

namespace involution_lab {

std::uint64_t Valuation::value() const {
  if (infinite_) throw ArgumentError("valuation is infinite");
  return value_;
}

std::string Valuation::to_string() const { return infinite_ ? "inf" : std::to_string(value_); }

}  // namespace involution_lab
