#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "palstream/modhash.hpp"

namespace palstream {

// Window sizes for one landmark level. An empty b means the level keeps every
// multiple of 2^lambda seen so far.
struct LevelConfig {
  int lambda = 0;
  std::optional<std::size_t> b;
  std::optional<std::size_t> f;

  static LevelConfig bounded(int lambda, std::size_t b, bool ghosts = true) {
    return {lambda, b, ghosts ? 4 * b : b};
  }
  static LevelConfig unbounded(int lambda) { return {lambda, std::nullopt, std::nullopt}; }
  bool is_bounded() const { return b.has_value(); }
};

// Prefix fingerprint of a landmark. The length is implied by the position.
struct LandmarkEntry {
  u64 fwd = 0;
  u64 rev = 0;
  u64 pw = 1;
  u64 ipw = 1;
};

inline constexpr std::size_t kWordsPerEntry = 4;

class LandmarkStore {
 public:
  LandmarkStore(std::vector<LevelConfig> cfg, const HashParams& params);

  void advance(u64 symbol);

  u64 h() const { return h_; }
  const HashParams& params() const { return hp_; }
  Fingerprint prefix() const { return {h_, cur_.fwd, cur_.rev, cur_.pw, cur_.ipw}; }
  const LandmarkEntry& prefix_entry() const { return cur_; }

  std::size_t level_count() const { return levels_.size(); }
  const LevelConfig& level(std::size_t i) const { return levels_[i].cfg; }
  // Index of the top level; levels are 0..L when lambdas are contiguous.
  int top_level() const { return static_cast<int>(levels_.size()) - 1; }
  bool contiguous() const { return contiguous_; }

  int classify_level(u64 y) const;

  // Hot-path lookup: pointer to the stored prefix data of position y, or null.
  const LandmarkEntry* find(u64 y, bool ghost = false) const;
  std::optional<Fingerprint> lookup(u64 y, bool ghost = false) const;
  std::optional<Fingerprint> range_fp(u64 t, u64 t2, bool ghost = false) const;
  std::optional<bool> is_period_over(u64 a, u64 b2, u64 q, bool ghost = false) const;

  // Smallest grid position of the contiguous window on a level (0 when the
  // window reaches the start of the text).
  u64 window_low(std::size_t level, bool ghost = false) const;

  // Raw access for engines: level i holds multiples j * 2^lambda for
  // j in [first_index(i), last_index(i)] (regular window).
  u64 last_index(std::size_t i) const { return h_ >> levels_[i].cfg.lambda; }
  u64 first_index(std::size_t i) const {
    const Level& lv = levels_[i];
    u64 top = h_ >> lv.cfg.lambda;
    if (!lv.cfg.b || top < *lv.cfg.b) return 1;
    return top - *lv.cfg.b + 1;
  }
  const LandmarkEntry& entry_at(std::size_t i, u64 j) const { return at(levels_[i], j); }
  const LandmarkEntry& empty_entry() const { return empty_; }

  // Visits every distinct regular landmark y (including 0) once.
  template <class F>
  void for_each_landmark(F&& fn) const;

  std::size_t entries(std::size_t level) const;
  std::size_t peak_entries(std::size_t level) const { return levels_[level].peak; }
  std::size_t total_entries() const { return total_; }
  std::size_t words() const { return total_ * kWordsPerEntry; }
  std::size_t peak_words() const { return peak_total_ * kWordsPerEntry; }

 private:
  struct Level {
    LevelConfig cfg;
    std::size_t cap = 0;  // ring capacity (ghost window); 0 for unbounded
    std::vector<LandmarkEntry> ring;
    std::size_t peak = 0;
  };

  const LandmarkEntry& at(const Level& lv, u64 j) const {
    return lv.cap ? lv.ring[j % lv.cap] : lv.ring[j - 1];
  }
  bool holds(const Level& lv, u64 j, bool ghost) const {
    if (j == 0) return false;
    u64 top = h_ >> lv.cfg.lambda;
    if (j > top) return false;
    if (!lv.cfg.b) return true;
    std::size_t w = ghost ? *lv.cfg.f : *lv.cfg.b;
    return top - j < w;
  }

  HashParams hp_;
  std::vector<Level> levels_;
  bool contiguous_ = true;
  u64 h_ = 0;
  LandmarkEntry cur_;
  LandmarkEntry empty_;
  std::size_t total_ = 0;
  std::size_t peak_total_ = 0;
};

template <class F>
void LandmarkStore::for_each_landmark(F&& fn) const {
  fn(u64{0}, empty_);
  for (std::size_t i = 0; i < levels_.size(); ++i) {
    const Level& lv = levels_[i];
    int lam = lv.cfg.lambda;
    u64 top = h_ >> lam;
    u64 w = lv.cfg.b ? *lv.cfg.b : top;
    u64 lo = top >= w ? top - w + 1 : 1;
    bool is_top = i + 1 == levels_.size();
    for (u64 j = lo; j <= top; ++j) {
      u64 y = j << lam;
      if (!is_top && contiguous_ && (j & 1) == 0) continue;  // owned by a higher level
      if (!contiguous_) {
        // Irregular layouts: report y only from the highest level holding it.
        bool higher = false;
        for (std::size_t k = i + 1; k < levels_.size() && !higher; ++k) {
          int lk = levels_[k].cfg.lambda;
          if ((y & ((u64{1} << lk) - 1)) == 0 && holds(levels_[k], y >> lk, false)) higher = true;
        }
        if (higher) continue;
      }
      fn(y, at(lv, j));
    }
  }
}

}  // namespace palstream
