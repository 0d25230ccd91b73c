#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "palstream/modhash.hpp"

namespace palstream {

using Handle = std::uint32_t;

struct SegmentRef {
  Handle handle;
  u64 start;
  int exponent;
  u64 end() const { return start + (u64{1} << exponent) - 1; }
};

// Two adjacent segments of length 2^exponent became one of length
// 2^(exponent+1) that keeps the left handle.
struct MergeEvent {
  int exponent;
  Handle left;
  Handle right;
  u64 start;
  u64 right_of;  // covered positions to the right of the merged pair
};

// Partition of T[1..h] into power-of-two segments with per-exponent counts
// held in {3,4,5} (the top exponent may hold 1..5).
class Partition {
 public:
  explicit Partition(bool linear_scan = false) : linear_scan_(linear_scan) {}

  std::optional<MergeEvent> advance(Handle fresh);

  u64 total() const { return total_; }
  int max_exponent() const { return static_cast<int>(groups_.size()) - 1; }
  int count(int exponent) const;
  std::size_t segment_count() const { return segments_; }

  // Segments from left (oldest, longest) to right.
  template <class F>
  void for_each(F&& fn) const {
    for (int e = max_exponent(); e >= 0; --e) {
      const Group& g = groups_[e];
      for (int i = 0; i < g.size; ++i) {
        const auto& slot = g.slots[(g.head + i) % kSlots];
        fn(SegmentRef{slot.handle, slot.start, e});
      }
    }
  }

  // Empty when every structural invariant holds; otherwise a description.
  std::string check_invariants() const;

  // Slow reference for the mergeable level search.
  int find_level_linear() const;
  // O(1) search through the run-length list.
  int find_level_runs() const;

 private:
  static constexpr int kSlots = 8;
  struct Slot {
    Handle handle = 0;
    u64 start = 0;
  };
  struct Group {
    std::array<Slot, kSlots> slots{};
    int head = 0;
    int size = 0;
    void push_back(Slot s) { slots[(head + size++) % kSlots] = s; }
    Slot pop_front() {
      Slot s = slots[head];
      head = (head + 1) % kSlots;
      --size;
      return s;
    }
  };
  // Maximal run of exponents lo..hi sharing one count.
  struct Run {
    int value;
    int lo;
    int hi;
  };

  void set_count(int exponent, int value);
  MergeEvent merge_front(int exponent);

  bool linear_scan_;
  std::vector<Group> groups_;
  std::vector<Run> runs_;  // highest exponents first; the back holds exponent 0
  u64 total_ = 0;
  std::size_t segments_ = 0;
};

}  // namespace palstream
