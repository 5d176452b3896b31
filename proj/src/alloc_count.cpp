// alloc_count.cpp - allocation counter storage.

#include "krmul/alloc_count.hpp"

#include <atomic>

namespace krmul::allocs {
namespace {
std::atomic<std::uint64_t> g_count{0};
std::atomic<std::uint64_t> g_bytes{0};
}  // namespace

void record_alloc(std::size_t n) noexcept {
  g_count.fetch_add(1, std::memory_order_relaxed);
  g_bytes.fetch_add(n, std::memory_order_relaxed);
}

std::uint64_t count() noexcept { return g_count.load(std::memory_order_relaxed); }
std::uint64_t bytes() noexcept { return g_bytes.load(std::memory_order_relaxed); }

void reset() noexcept {
  g_count.store(0, std::memory_order_relaxed);
  g_bytes.store(0, std::memory_order_relaxed);
}

}  // namespace krmul::allocs
