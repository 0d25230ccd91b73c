#pragma once

#include <array>
#include <optional>
#include <variant>
#include <vector>

#include "palstream/modhash.hpp"

namespace palstream {

// A candidate center and the radius of its last successful run.
struct Candidate {
  u64 center = 0;
  u64 radius = 0;
  bool operator==(const Candidate&) const = default;
};

struct SparseDesc {
  std::vector<Candidate> centers;
};

// Per-level data of a dense segment: residue arithmetic constants plus the
// cached extent of the periodic run around the segment on that level's grid.
struct LevelCache {
  int lambda = 0;
  u64 g2 = 0;   // 2^g = gcd(p, 2^lambda)
  u64 inv = 0;  // (p / 2^g)^-1 mod 2^(lambda - g)
  bool extents = false;
  bool unusable = false;
  u64 grid0 = 0;  // grid point at or just before the segment start
  bool left_capped = false;
  u64 x_lo = 0, x_hi = 0;  // first position of the run
  u64 y_grid = 0;          // last grid point the run is known to reach
  bool y_open = false;     // run still reaches the newest grid point
};

inline constexpr std::size_t kBufferSize = 5;

struct DenseDesc {
  u64 anchor = 0;  // every possibly alive center is anchor + alpha * p/2
  u64 p = 0;
  std::array<Candidate, kBufferSize> buffer{};
  std::size_t buffer_len = 0;  // most recent first
  std::vector<LevelCache> cache;

  std::vector<Candidate> buffered() const {
    return {buffer.begin(), buffer.begin() + static_cast<std::ptrdiff_t>(buffer_len)};
  }
  bool in_family(u64 c) const { return c >= anchor && (c - anchor) % (p / 2) == 0; }
};

struct SegmentBody {
  u64 start = 0;
  int exponent = 0;
  std::variant<SparseDesc, DenseDesc> desc;

  u64 length() const { return u64{1} << exponent; }
  u64 end() const { return start + length() - 1; }
  bool dense() const { return std::holds_alternative<DenseDesc>(desc); }
  std::size_t words() const;
};

// Counters for conditions the correctness argument rules out; tests expect zeros.
struct MergeStats {
  u64 merges = 0;
  u64 densified = 0;
  u64 premise_violations = 0;  // a center below the radius threshold blocked densify
  u64 wide_periods = 0;        // densify produced p above half the segment
};

SegmentBody unit_segment(u64 h);
DenseDesc densify(std::vector<u64> centers, const SegmentBody& seg);
std::optional<std::vector<Candidate>> survivors(const DenseDesc& d, int seg_exp);
std::pair<u64, u64> reconcile(u64 p_new, u64 c_new, u64 p_old, u64 c_old, const SegmentBody& seg);
void buffer_touch(DenseDesc& d, u64 center, u64 radius);
SegmentBody merge(const SegmentBody& s, const SegmentBody& s2, MergeStats* stats = nullptr);

// Smallest position >= from congruent to c modulo m.
u64 align_up(u64 from, u64 c, u64 m);

}  // namespace palstream
