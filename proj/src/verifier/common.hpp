#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <string>
#include <thread>
#include <vector>

#include "pellphi/verifier.hpp"

namespace pellphi::verify::detail {

// Runs fn(i) for lo <= i <= hi on up to `jobs` threads. Callers write into
// per-index slots so the merged result does not depend on the schedule.
template <typename Fn>
void parallel_for(std::uint64_t lo, std::uint64_t hi, unsigned jobs, Fn&& fn) {
  if (hi < lo) return;
  const std::uint64_t count = hi - lo + 1;
  const unsigned workers =
      static_cast<unsigned>(std::min<std::uint64_t>(std::max(jobs, 1u), count));
  if (workers == 1) {
    for (std::uint64_t i = lo; i <= hi; ++i) fn(i);
    return;
  }
  std::atomic<std::uint64_t> next{lo};
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::uint64_t i = next++; i <= hi; i = next++) fn(i);
    });
  }
}

class Stopwatch {
 public:
  std::chrono::duration<double> elapsed() const {
    return std::chrono::steady_clock::now() - start_;
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

template <typename Container>
std::string join(const Container& items, std::string_view sep = ", ") {
  std::string out;
  bool first = true;
  for (const auto& item : items) {
    if (!first) out += sep;
    first = false;
    if constexpr (std::is_convertible_v<decltype(item), std::string_view>) {
      out += item;
    } else if constexpr (std::is_same_v<std::decay_t<decltype(item)>, Nat>) {
      out += item.get_str();
    } else {
      out += std::to_string(item);
    }
  }
  return out;
}

template <typename Container>
std::string set_text(const Container& items) {
  return "{" + join(items) + "}";
}

inline std::string kind_param(seq::SequenceKind kind) {
  return std::string(seq::name(kind));
}

}  // namespace pellphi::verify::detail
