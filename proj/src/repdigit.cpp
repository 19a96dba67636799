#include "pellphi/repdigit.hpp"

#include <string>

#include "pellphi/arith.hpp"

namespace pellphi::repdigit {

Nat repdigit_value(RepdigitForm form) {
  if (form.digit < 1 || form.digit > 9 || form.length < 1) {
    throw arith::DomainError("invalid repdigit form (" + std::to_string(form.digit) +
                             ", " + std::to_string(form.length) + ")");
  }
  Nat power;
  mpz_ui_pow_ui(power.get_mpz_t(), 10, form.length);
  return form.digit * ((power - 1) / 9);
}

std::optional<RepdigitForm> as_repdigit(const Nat& n) {
  if (n <= 0) return std::nullopt;
  const auto digit = static_cast<unsigned>(mpz_fdiv_ui(n.get_mpz_t(), 10));
  if (digit == 0) return std::nullopt;
  // sizeinbase may overshoot by one.
  const auto size = static_cast<unsigned>(mpz_sizeinbase(n.get_mpz_t(), 10));
  for (unsigned length = size; length >= 1 && length + 1 >= size; --length) {
    if (repdigit_value({digit, length}) == n) return RepdigitForm{digit, length};
  }
  return std::nullopt;
}

}  // namespace pellphi::repdigit
