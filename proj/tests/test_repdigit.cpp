#include <doctest.h>

#include "oracles.hpp"
#include "pellphi/arith.hpp"
#include "pellphi/repdigit.hpp"

using namespace pellphi;
using repdigit::RepdigitForm;

TEST_CASE("repdigit_value") {
  CHECK(repdigit::repdigit_value({7, 1}) == 7);
  CHECK(repdigit::repdigit_value({8, 4}) == 8888);
  CHECK(repdigit::repdigit_value({1, 25}) == Nat("1111111111111111111111111"));
  CHECK_THROWS_AS(repdigit::repdigit_value({0, 3}), arith::DomainError);
  CHECK_THROWS_AS(repdigit::repdigit_value({10, 3}), arith::DomainError);
  CHECK_THROWS_AS(repdigit::repdigit_value({3, 0}), arith::DomainError);
}

TEST_CASE("as_repdigit agrees with a digit scan") {
  for (std::uint64_t n = 0; n <= 200000; ++n) {
    const auto form = repdigit::as_repdigit(Nat(static_cast<unsigned long>(n)));
    REQUIRE(form.has_value() == oracle::digits_all_equal(n));
    if (form) REQUIRE(repdigit::repdigit_value(*form) == Nat(static_cast<unsigned long>(n)));
  }
}

TEST_CASE("as_repdigit on long values") {
  CHECK(repdigit::as_repdigit(repdigit::repdigit_value({9, 40})) == RepdigitForm{9, 40});
  CHECK_FALSE(repdigit::as_repdigit(repdigit::repdigit_value({9, 40}) + 1));
  CHECK(repdigit::as_repdigit(Nat(2306880)) == std::nullopt);
}
