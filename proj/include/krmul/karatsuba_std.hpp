#pragma once
// karatsuba_std.hpp - conventional subtractive Karatsuba (KS) with explicit
// per-call scratch. Serves as the time/space baseline for the in-place
// variant: every splitting call draws exactly 2*floor(n/2) limbs from a
// caller-provided arena, and the arena high-water mark stays below 2n limbs
// for the whole multiplication.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "krmul/limb_core.hpp"

namespace krmul {

enum class ScratchTag { core, block_save };

struct ScratchEvent {
  ScratchTag tag;
  std::size_t limbs;     // size of this allocation
  std::size_t call_len;  // operand length of the call that made it
};

// Bump arena with stack (LIFO) discipline. Exhaustion is a programming
// error: the requirement is computable up front with ks_scratch_limbs.
class ScratchArena {
 public:
  explicit ScratchArena(std::size_t capacity_limbs) : buf_(capacity_limbs) {}

  limb* alloc(std::size_t count, ScratchTag tag, std::size_t call_len);
  void release(std::size_t count);

  std::size_t capacity() const { return buf_.size(); }
  std::size_t used() const { return used_; }
  std::size_t high_water() const { return high_water_; }
  void reset_high_water() { high_water_ = used_; }

  // When set, every alloc appends a ScratchEvent to *sink.
  void set_event_log(std::vector<ScratchEvent>* sink) { log_ = sink; }

 private:
  std::vector<limb> buf_;
  std::size_t used_ = 0;
  std::size_t high_water_ = 0;
  std::vector<ScratchEvent>* log_ = nullptr;
};

// Arena capacity sufficient for ks_mul on operands of n and m limbs.
inline std::size_t ks_scratch_limbs(std::size_t n, std::size_t m) {
  return 2 * (n > m ? n : m);
}

// d[0..n+m) = a * b; bit-identical to sb_mul on the output buffer.
// Lengths below `threshold` fall back to schoolbook.
void ks_mul(std::uint32_t rho, limb* d, const limb* a, std::size_t n,
            const limb* b, std::size_t m, ScratchArena& arena,
            std::size_t threshold = kDefaultThreshold);

}  // namespace krmul
