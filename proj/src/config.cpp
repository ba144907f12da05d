#include "polynum/config.hpp"

#include <atomic>
#include <cstdlib>
#include <optional>

namespace polynum {

namespace {

constexpr int kDefaultCap = 512;

std::optional<int> cap_from_env() {
  const char* raw = std::getenv("POLYNUM_MAX_ORDER");
  if (raw == nullptr || *raw == '\0') {
    return std::nullopt;
  }
  char* end = nullptr;
  long value = std::strtol(raw, &end, 10);
  if (end == raw || *end != '\0' || value < 1 || value > 1'000'000'000L) {
    throw std::invalid_argument(
        "POLYNUM_MAX_ORDER must be a positive integer, got \"" +
        std::string(raw) + "\"");
  }
  return static_cast<int>(value);
}

std::atomic<int>& cap_slot() {
  static std::atomic<int> cap{0};  // 0 = not yet initialized
  return cap;
}

}  // namespace

int max_order() {
  int current = cap_slot().load(std::memory_order_relaxed);
  if (current == 0) {
    int initial = cap_from_env().value_or(kDefaultCap);
    int expected = 0;
    cap_slot().compare_exchange_strong(expected, initial);
    current = cap_slot().load(std::memory_order_relaxed);
  }
  return current;
}

void set_max_order(int cap) {
  if (cap < 1) {
    throw std::invalid_argument("order cap must be >= 1");
  }
  cap_slot().store(cap, std::memory_order_relaxed);
}

void validate_order_cap_env() { cap_from_env(); }

void require_within_cap(int order, const char* what) {
  int cap = max_order();
  if (order > cap) {
    throw OrderCapError(std::string(what) + ": requested order " +
                        std::to_string(order) + " exceeds cap " +
                        std::to_string(cap) +
                        " (override with POLYNUM_MAX_ORDER)");
  }
}

}  // namespace polynum
