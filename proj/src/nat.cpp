#include "pellphi/nat.hpp"

#include <algorithm>
#include <stdexcept>

namespace pellphi {

Nat parse_nat(std::string_view text) {
  if (text.empty() ||
      !std::all_of(text.begin(), text.end(),
                   [](char c) { return c >= '0' && c <= '9'; })) {
    throw std::invalid_argument("not a decimal natural number: '" +
                                std::string(text) + "'");
  }
  return Nat(std::string(text), 10);
}

std::string to_string(const Nat& n) { return n.get_str(10); }

}  // namespace pellphi
