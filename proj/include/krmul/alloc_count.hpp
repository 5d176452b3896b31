#pragma once
// alloc_count.hpp - process-wide heap allocation counters.
//
// The counters are fed by replacement operator new/delete defined in a
// separate object that executables opt into (tools/alloc_hooks.cpp);
// binaries without the hooks simply read zeros.

#include <cstddef>
#include <cstdint>

namespace krmul::allocs {

void record_alloc(std::size_t bytes) noexcept;
std::uint64_t count() noexcept;
std::uint64_t bytes() noexcept;
void reset() noexcept;

}  // namespace krmul::allocs
