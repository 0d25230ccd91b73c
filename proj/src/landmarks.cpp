#include "palstream/landmarks.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace palstream {

LandmarkStore::LandmarkStore(std::vector<LevelConfig> cfg, const HashParams& params) : hp_(params) {
  if (cfg.empty()) throw std::invalid_argument("landmark store needs at least one level");
  for (std::size_t i = 0; i < cfg.size(); ++i) {
    const LevelConfig& c = cfg[i];
    if (c.lambda < 0 || c.lambda > 62) throw std::invalid_argument("level exponent out of range");
    if (i && c.lambda <= cfg[i - 1].lambda) throw std::invalid_argument("levels must be increasing");
    if (c.b.has_value() != c.f.has_value()) throw std::invalid_argument("b and f must both be bounded");
    if (c.b && (*c.b == 0 || *c.f < *c.b)) throw std::invalid_argument("bad window sizes");
    Level lv;
    lv.cfg = c;
    if (c.b) {
      lv.cap = *c.f;
      lv.ring.resize(lv.cap);
    }
    levels_.push_back(std::move(lv));
  }

  // The O(1) classification needs levels 0..L with one shared window size below the top.
  for (std::size_t i = 0; i < cfg.size(); ++i) {
    if (cfg[i].lambda != static_cast<int>(i)) contiguous_ = false;
    if (i + 1 < cfg.size()) {
      if (!cfg[i].b || cfg[i].b != cfg[0].b || cfg[i].f != cfg[0].f) contiguous_ = false;
    } else if (cfg[i].b && cfg.size() > 1 && (*cfg[i].b < *cfg[0].b || *cfg[i].f < *cfg[0].f)) {
      contiguous_ = false;
    }
  }
}

void LandmarkStore::advance(u64 symbol) {
  Fingerprint next = append_char(hp_, prefix(), symbol);
  cur_ = {next.fwd, next.rev, next.pw, next.ipw};
  ++h_;
  for (Level& lv : levels_) {
    int lam = lv.cfg.lambda;
    if (h_ & ((u64{1} << lam) - 1)) {
      if (contiguous_) break;  // higher levels need even more trailing zeros
      continue;
    }
    u64 j = h_ >> lam;
    if (lv.cap) {
      lv.ring[j % lv.cap] = cur_;
      if (j <= lv.cap) ++total_;
    } else {
      lv.ring.push_back(cur_);
      ++total_;
    }
    lv.peak = std::max(lv.peak, static_cast<std::size_t>(std::min<u64>(j, lv.cap ? lv.cap : j)));
  }
  peak_total_ = std::max(peak_total_, total_);
}

int LandmarkStore::classify_level(u64 y) const {
  int tz = y == 0 ? 64 : std::countr_zero(y);
  if (contiguous_) return std::min(tz, top_level());
  int best = -1;
  for (std::size_t i = 0; i < levels_.size(); ++i)
    if (levels_[i].cfg.lambda <= tz) best = static_cast<int>(i);
  return best;
}

const LandmarkEntry* LandmarkStore::find(u64 y, bool ghost) const {
  if (y == 0) return &empty_;
  if (y > h_) return nullptr;
  if (contiguous_) {
    const Level& lv = levels_[std::min(std::countr_zero(y), top_level())];
    u64 j = y >> lv.cfg.lambda;
    return holds(lv, j, ghost) ? &at(lv, j) : nullptr;
  }
  int tz = std::countr_zero(y);
  for (const Level& lv : levels_) {
    if (lv.cfg.lambda > tz) break;
    u64 j = y >> lv.cfg.lambda;
    if (holds(lv, j, ghost)) return &at(lv, j);
  }
  return nullptr;
}

std::optional<Fingerprint> LandmarkStore::lookup(u64 y, bool ghost) const {
  if (y == h_) return prefix();
  const LandmarkEntry* e = find(y, ghost);
  if (!e) return std::nullopt;
  return Fingerprint{y, e->fwd, e->rev, e->pw, e->ipw};
}

std::optional<Fingerprint> LandmarkStore::range_fp(u64 t, u64 t2, bool ghost) const {
  if (t > t2) throw std::invalid_argument("range_fp: t > t2");
  auto a = lookup(t, ghost);
  if (!a) return std::nullopt;
  auto b = lookup(t2, ghost);
  if (!b) return std::nullopt;
  return erase_prefix(hp_, *b, *a);
}

std::optional<bool> LandmarkStore::is_period_over(u64 a, u64 b2, u64 q, bool ghost) const {
  if (q == 0) throw std::invalid_argument("is_period_over: q must be positive");
  if (a + q > b2) throw std::invalid_argument("is_period_over: a + q > b2");
  auto fa = lookup(a, ghost);
  auto fb = lookup(b2, ghost);
  auto fc = lookup(a + q, ghost);
  auto fd = lookup(b2 - q, ghost);
  if (!fa || !fb || !fc || !fd) return std::nullopt;
  // T[a+1..b2-q] against T[a+q+1..b2]
  return ranges_equal(hp_, fa->fwd, fa->pw, fd->fwd, fc->fwd, fc->pw, fb->fwd);
}

u64 LandmarkStore::window_low(std::size_t level, bool ghost) const {
  const Level& lv = levels_[level];
  if (!lv.cfg.b) return 0;
  u64 top = h_ >> lv.cfg.lambda;
  u64 w = ghost ? *lv.cfg.f : *lv.cfg.b;
  return top >= w ? (top - w + 1) << lv.cfg.lambda : 0;
}

std::size_t LandmarkStore::entries(std::size_t level) const {
  const Level& lv = levels_[level];
  u64 top = h_ >> lv.cfg.lambda;
  return lv.cap ? static_cast<std::size_t>(std::min<u64>(top, lv.cap)) : lv.ring.size();
}

}  // namespace palstream
