#include "pellphi/modular.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include "pellphi/arith.hpp"

namespace pellphi::modular {

namespace {

constexpr std::uint64_t kMaxModulus = 1'000'000;

void check_modulus(std::uint64_t k) {
  if (k < 2) throw arith::DomainError("modulus must be >= 2");
}

ResidueSet make_set(std::uint64_t modulus, std::vector<std::uint64_t> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  return {modulus, std::move(members)};
}

std::uint64_t reduce(std::int64_t c, std::uint64_t k) {
  const auto m = static_cast<__int128>(k);
  return static_cast<std::uint64_t>(((c % m) + m) % m);
}

}  // namespace

bool ResidueSet::contains(std::uint64_t r) const {
  return std::binary_search(members.begin(), members.end(), r);
}

PeriodTable period_table(seq::SequenceKind kind, std::uint64_t k) {
  check_modulus(k);
  if (k > kMaxModulus) throw arith::DomainError("modulus above 1e6");

  // u(n+1) = a u(n) + c u(n-1)
  const std::uint64_t a = (kind == seq::SequenceKind::Balancing) ? 6 % k : 2 % k;
  const std::uint64_t c = (kind == seq::SequenceKind::Balancing) ? k - 1 : 1;
  const std::uint64_t u0 = (kind == seq::SequenceKind::AssocPell) ? 1 % k : 0;
  const std::uint64_t u1 = 1 % k;

  PeriodTable table{kind, k, {}};
  std::uint64_t x = u0;
  std::uint64_t y = u1;
  const std::uint64_t step_cap = k * k;
  do {
    table.residues.push_back(x);
    const std::uint64_t next = (a * y + c * x) % k;
    x = y;
    y = next;
    if (table.residues.size() > step_cap) {
      throw std::logic_error("pair state did not return to the start");
    }
  } while (x != u0 || y != u1);
  return table;
}

ResidueSet residue_preimages(const PeriodTable& table, std::uint64_t r) {
  if (r >= table.modulus) throw arith::DomainError("residue outside [0, k)");
  std::vector<std::uint64_t> out;
  for (std::uint64_t n = 0; n < table.period(); ++n) {
    if (table.residues[n] == r) out.push_back(n);
  }
  return {table.period(), std::move(out)};
}

ResidueSet residue_preimages(seq::SequenceKind kind, std::uint64_t k, std::uint64_t r) {
  return residue_preimages(period_table(kind, k), r);
}

ResidueSet qr_set(std::uint64_t k) {
  check_modulus(k);
  std::vector<std::uint64_t> squares;
  squares.reserve(k);
  for (std::uint64_t x = 0; x < k; ++x) {
    squares.push_back(static_cast<std::uint64_t>(static_cast<unsigned __int128>(x) * x % k));
  }
  return make_set(k, std::move(squares));
}

std::uint64_t eval_poly_mod(std::span<const std::int64_t> coeffs, std::uint64_t r,
                            std::uint64_t k) {
  check_modulus(k);
  unsigned __int128 acc = 0;
  for (std::int64_t c : coeffs) acc = (acc * r + reduce(c, k)) % k;
  return static_cast<std::uint64_t>(acc);
}

ResidueSet poly_qr_filter(std::span<const std::int64_t> coeffs, std::uint64_t k) {
  const ResidueSet squares = qr_set(k);
  std::vector<std::uint64_t> out;
  for (std::uint64_t r = 0; r < k; ++r) {
    if (squares.contains(eval_poly_mod(coeffs, r, k))) out.push_back(r);
  }
  return {k, std::move(out)};
}

ResidueSet power_residue_set(const Nat& base, std::uint64_t k) {
  check_modulus(k);
  if (base < 1) throw arith::DomainError("power_residue_set needs base >= 1");
  const std::uint64_t b = mpz_fdiv_ui(base.get_mpz_t(), k);
  std::unordered_map<std::uint64_t, std::size_t> first_seen;
  std::vector<std::uint64_t> orbit;
  std::uint64_t x = b;
  while (!first_seen.contains(x)) {
    first_seen.emplace(x, orbit.size());
    orbit.push_back(x);
    x = static_cast<std::uint64_t>(static_cast<unsigned __int128>(x) * b % k);
  }
  return make_set(k, {orbit.begin() + static_cast<std::ptrdiff_t>(first_seen[x]),
                      orbit.end()});
}

}  // namespace pellphi::modular
