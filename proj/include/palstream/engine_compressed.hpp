#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "palstream/engine_basic.hpp"
#include "palstream/landmarks.hpp"
#include "palstream/partition.hpp"
#include "palstream/schemes.hpp"
#include "palstream/segments.hpp"

namespace palstream {

std::vector<int> associated_levels(int seg_exp, const SchemeConfig& cfg);

// Centers base + t * step (t >= 0) whose mirrors land on the 2^level grid.
struct ResidueFamily {
  u64 base = 0;
  u64 step = 0;
  u64 block_len = 0;
  int level = 0;
};

// Inverse of odd a modulo 2^k.
u64 inverse_mod_pow2(u64 a, int k);

std::optional<std::pair<ResidueFamily, ResidueFamily>> residue_bases(const DenseDesc& d, int lambda, u64 h);

// Extent of the blen-periodic run through T[i..i+2*blen-1], measured with
// ghost landmarks on the 2^lambda grid. nullopt when a needed landmark is gone.
std::optional<u64> extend_right(u64 i, u64 blen, int lambda, const LandmarkStore& store);

struct LeftExtension {
  u64 l = 0;
  bool capped = false;  // the run continues past the ghost window
};
std::optional<LeftExtension> extend_left(u64 i, u64 blen, int lambda, const LandmarkStore& store);

std::vector<u64> select_candidates(const ResidueFamily& fam, u64 l, u64 r, u64 seg_start, u64 seg_end);

struct CompressedOptions {
  bool linear_partition = false;  // debug: O(log n) scan instead of the run list
  bool rebuild_extents = false;   // debug: recompute run extents on every visit
  std::size_t enumerate_limit = 48;
};

struct CompressedStats {
  u64 checks = 0;
  u64 fallback_families = 0;  // structure window unavailable, all members run
  u64 extent_builds = 0;
  u64 dense_segments = 0;
  u64 sparse_segments = 0;
  MergeStats merge;
};

class CompressedEngine {
 public:
  CompressedEngine(const ApproxMode& mode, u64 seed, CompressedOptions opt = {});

  u64 push(u64 symbol);

  u64 best() const { return best_; }
  u64 h() const { return store_.h(); }
  const SchemeConfig& config() const { return cfg_; }
  const LandmarkStore& store() const { return store_; }
  const Partition& partition() const { return part_; }
  const CompressedStats& stats() const { return stats_; }
  const SegmentBody& body(Handle hd) const { return bodies_[hd]; }

  // Words held by the partition and segment descriptions.
  std::size_t aux_words() const { return aux_words_; }
  std::size_t peak_aux_words() const { return peak_aux_words_; }

 private:
  Handle alloc(SegmentBody body);
  void release(Handle hd);
  void visit_sparse(SegmentBody& seg);
  void visit_dense(SegmentBody& seg);
  void family_window(SegmentBody& seg, DenseDesc& d, int level, u64 cl, u64 cr, std::vector<u64>& out);
  LevelCache& cache_for(DenseDesc& d, int level);
  void build_extents(const SegmentBody& seg, const DenseDesc& d, LevelCache& lc, u64 W);
  void refresh_right(LevelCache& lc, u64 W, int level);
  bool check(u64 y);

  SchemeConfig cfg_;
  LandmarkStore store_;
  Partition part_;
  CompressedOptions opt_;
  std::vector<SegmentBody> bodies_;
  std::vector<Handle> free_;
  std::vector<u64> scratch_;
  CompressedStats stats_;
  u64 best_ = 0;
  std::size_t aux_words_ = 0;
  std::size_t peak_aux_words_ = 0;
};

}  // namespace palstream
