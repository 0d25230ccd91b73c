#include "palstream/engine_basic.hpp"

#include <algorithm>
#include <stdexcept>

namespace palstream {

BasicEngine::BasicEngine(const ApproxMode& mode, u64 seed, BasicOptions opt)
    : cfg_(config_for(mode)), store_(cfg_.levels, HashParams::create(mode.n, seed)), opt_(opt) {}

RunOutcome BasicEngine::run_process(u64 c) {
  u64 h = store_.h();
  if (c < 1 || c > h) throw std::out_of_range("run_process: center outside [1, h]");
  if (2 * c < h + 2) return {RunKind::no_landmark, 0};
  u64 y = 2 * c - h - 2;
  const LandmarkEntry* e = store_.find(y);
  if (!e) return {RunKind::no_landmark, 0};
  ++checks_;
  const LandmarkEntry& cur = store_.prefix_entry();
  if (!range_is_palindrome(store_.params(), e->fwd, e->rev, e->pw, cur.fwd, cur.rev, cur.pw))
    return {RunKind::fail, 0};
  u64 r = h - c + 1;
  best_ = std::max(best_, r);
  return {RunKind::success, r};
}

u64 BasicEngine::push(u64 symbol) {
  if (store_.h() >= cfg_.mode.n) throw std::length_error("stream longer than the declared n");
  store_.advance(symbol);
  const u64 h = store_.h();
  const HashParams& hp = store_.params();
  const LandmarkEntry& cur = store_.prefix_entry();

  // Only mirrors y with (h - y) / 2 > best can raise the answer, and a
  // mirror pairs with an integral center only when y and h share parity.
  auto ceiling = [&]() -> std::int64_t { return static_cast<std::int64_t>(h) - 2 * static_cast<std::int64_t>(best_) - 2; };
  if ((h & 1) == 0 && ceiling() >= 0) {
    const LandmarkEntry& e = store_.empty_entry();
    ++checks_;
    if (range_is_palindrome(hp, e.fwd, e.rev, e.pw, cur.fwd, cur.rev, cur.pw)) best_ = h / 2;
  }

  const std::size_t levels = store_.level_count();
  for (std::size_t i = 0; i < levels; ++i) {
    if (static_cast<int>(i) == opt_.skip_level) continue;
    std::int64_t ymax = ceiling();
    if (ymax < 1) break;
    const int lam = store_.level(i).lambda;
    if (lam >= 1 && (h & 1)) continue;
    u64 jlo = store_.first_index(i);
    u64 jhi = std::min(store_.last_index(i), static_cast<u64>(ymax) >> lam);
    if (jlo > jhi) continue;
    const bool top = i + 1 == levels;
    u64 step = 1;
    if (lam == 0) {
      // y = j must match the parity of h.
      if ((jlo & 1) != (h & 1)) ++jlo;
      step = 2;
      if (!top && store_.contiguous() && (h & 1) == 0) continue;  // even y belong to higher levels
    } else if (!top && store_.contiguous()) {
      if ((jlo & 1) == 0) ++jlo;  // even multiples belong to higher levels
      step = 2;
    }
    // Ascending y means descending radius: stop at the first success.
    for (u64 j = jlo; j <= jhi; j += step) {
      const LandmarkEntry& e = store_.entry_at(i, j);
      ++checks_;
      if (range_is_palindrome(hp, e.fwd, e.rev, e.pw, cur.fwd, cur.rev, cur.pw)) {
        best_ = (h - (j << lam)) / 2;
        break;
      }
    }
  }
  return best_;
}

}  // namespace palstream
