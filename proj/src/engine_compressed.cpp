#include "palstream/engine_compressed.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace palstream {

namespace {

u64 ceil_to(u64 v, u64 q) { return (v + q - 1) / q * q; }

}  // namespace

std::vector<int> associated_levels(int seg_exp, const SchemeConfig& cfg) {
  const u64 b = cfg.lower_b();
  const bool top_unbounded = !cfg.levels.back().b;
  const std::int64_t lo = 6 * (std::int64_t{1} << seg_exp) - 3;
  const std::int64_t hi = 40 * (std::int64_t{1} << seg_exp) - 18;
  std::vector<int> out;
  for (int lam = 0; lam < cfg.L; ++lam) {
    std::int64_t v = static_cast<std::int64_t>(b) << lam;
    if (v >= lo && v <= hi) out.push_back(lam);
  }
  if (cfg.L == 0 || top_unbounded || (static_cast<std::int64_t>(b) << (cfg.L - 1)) <= hi) out.push_back(cfg.L);
  return out;
}

u64 inverse_mod_pow2(u64 a, int k) {
  if (k <= 0) return 0;
  if ((a & 1) == 0) throw std::invalid_argument("inverse_mod_pow2: even value");
  u64 x = a;  // correct to 3 bits; each Newton step doubles that
  for (int i = 0; i < 5; ++i) x *= 2 - a * x;
  return k >= 64 ? x : x & ((u64{1} << k) - 1);
}

std::optional<std::pair<ResidueFamily, ResidueFamily>> residue_bases(const DenseDesc& d, int lambda, u64 h) {
  const u64 q = u64{1} << lambda;
  const u64 g2 = std::gcd(d.p, q);
  // alpha * p = h + 2 - 2c  (mod 2^lambda); work with a nonnegative representative.
  const std::int64_t diff = static_cast<std::int64_t>(h) + 2 - 2 * static_cast<std::int64_t>(d.anchor);
  const u64 rhs = static_cast<u64>(((diff % static_cast<std::int64_t>(q)) + static_cast<std::int64_t>(q)) %
                                   static_cast<std::int64_t>(q));
  if (rhs % g2 != 0) return std::nullopt;
  const int k = lambda - std::countr_zero(g2);
  const u64 mod = u64{1} << k;
  u64 inv = 0;
  bool cached = false;
  for (const LevelCache& lc : d.cache)
    if (lc.lambda == lambda) {
      inv = lc.inv;
      cached = true;
    }
  if (!cached) inv = inverse_mod_pow2(d.p / g2, k);
  const u64 alpha0 = k == 0 ? 0 : ((rhs / g2) % mod) * inv % mod;
  const u64 W = q / g2 * d.p;  // lcm(2^lambda, p)
  ResidueFamily a{d.anchor + alpha0 * (d.p / 2), W, W, lambda};
  ResidueFamily b{a.base + W / 2, W, W, lambda};
  return std::make_pair(a, b);
}

std::optional<u64> extend_right(u64 i, u64 blen, int lambda, const LandmarkStore& store) {
  const u64 q = u64{1} << lambda;
  if (i == 0 || blen == 0 || blen % q) throw std::invalid_argument("extend_right: block must be a positive multiple of 2^lambda");
  const u64 h = store.h();
  if (i - 1 + 2 * blen > h) throw std::invalid_argument("extend_right: w^2 does not fit before h");
  const u64 a0 = ceil_to(i - 1, q);
  u64 lo = (i - 1 + 2 * blen) / q;  // grid index known to satisfy the predicate
  u64 hi = h / q;
  auto pred = [&](u64 idx) { return store.is_period_over(a0, idx * q, blen, true); };
  auto top = pred(hi);
  if (!top) return std::nullopt;
  if (*top) {
    lo = hi;
  } else {
    while (hi - lo > 1) {
      u64 mid = lo + (hi - lo) / 2;
      auto v = pred(mid);
      if (!v) return std::nullopt;
      (*v ? lo : hi) = mid;
    }
  }
  return std::max<u64>(2, (lo * q - i + 1) / blen);
}

std::optional<LeftExtension> extend_left(u64 i, u64 blen, int lambda, const LandmarkStore& store) {
  const u64 q = u64{1} << lambda;
  if (i == 0 || blen == 0 || blen % q) throw std::invalid_argument("extend_left: block must be a positive multiple of 2^lambda");
  if (i - 1 + 2 * blen > store.h()) throw std::invalid_argument("extend_left: w^2 does not fit before h");
  const u64 b_top = (i - 1 + 2 * blen) / q * q;
  const u64 a_top = ceil_to(i - 1, q);
  const u64 floor_grid = ceil_to(store.window_low(static_cast<std::size_t>(lambda), true), q);
  auto pred = [&](u64 idx) { return store.is_period_over(idx * q, b_top, blen, true); };
  if (floor_grid > a_top) return LeftExtension{0, false};
  u64 lo = floor_grid / q, hi = a_top / q;
  auto at_floor = pred(lo);
  if (!at_floor) return std::nullopt;
  u64 a_star;
  bool capped = false;
  if (*at_floor) {
    a_star = lo * q;
    capped = a_star > 0;
  } else {
    while (hi - lo > 1) {
      u64 mid = lo + (hi - lo) / 2;
      auto v = pred(mid);
      if (!v) return std::nullopt;
      (*v ? hi : lo) = mid;
    }
    a_star = hi * q;
  }
  // The run starts at or before a_star + 1.
  u64 l = i > a_star + 1 ? (i - a_star - 1) / blen : 0;
  return LeftExtension{l, capped};
}

std::vector<u64> select_candidates(const ResidueFamily& fam, u64 l, u64 r, u64 seg_start, u64 seg_end) {
  std::vector<u64> out;
  const std::pair<u64, u64> combos[] = {{l, r}, {l + 1, r}, {l, r + 1}, {l + 1, r + 1}, {0, 1}};
  for (auto [ll, rr] : combos) {
    std::int64_t t0 = -static_cast<std::int64_t>(ll) + static_cast<std::int64_t>((ll + rr + 1) / 2) + 1;
    t0 = std::max<std::int64_t>(t0, 0);
    for (u64 x = 0; x < 5; ++x) {
      u64 c = fam.base + (static_cast<u64>(t0) + x) * fam.step;
      if (c >= seg_start && c <= seg_end) out.push_back(c);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

CompressedEngine::CompressedEngine(const ApproxMode& mode, u64 seed, CompressedOptions opt)
    : cfg_(config_for(mode)),
      store_(cfg_.with_ghosts(), HashParams::create(mode.n, seed)),
      part_(opt.linear_partition),
      opt_(opt) {
  if (mode.kind == ApproxKind::multiplicative_sparse)
    throw std::invalid_argument("the sparse landmark layout is only usable by the basic engine");
}

Handle CompressedEngine::alloc(SegmentBody body) {
  if (!free_.empty()) {
    Handle hd = free_.back();
    free_.pop_back();
    bodies_[hd] = std::move(body);
    return hd;
  }
  bodies_.push_back(std::move(body));
  return static_cast<Handle>(bodies_.size() - 1);
}

void CompressedEngine::release(Handle hd) {
  bodies_[hd] = SegmentBody{};
  free_.push_back(hd);
}

bool CompressedEngine::check(u64 y) {
  const LandmarkEntry* e = store_.find(y);
  if (!e) return false;
  ++stats_.checks;
  const LandmarkEntry& cur = store_.prefix_entry();
  return range_is_palindrome(store_.params(), e->fwd, e->rev, e->pw, cur.fwd, cur.rev, cur.pw);
}

u64 CompressedEngine::push(u64 symbol) {
  if (store_.h() >= cfg_.mode.n) throw std::length_error("stream longer than the declared n");
  store_.advance(symbol);
  const u64 h = store_.h();

  Handle hd = alloc(unit_segment(h));
  if (auto ev = part_.advance(hd)) {
    bodies_[ev->left] = merge(bodies_[ev->left], bodies_[ev->right], &stats_.merge);
    release(ev->right);
  }

  std::size_t words = 2 * part_.segment_count() + 3 * static_cast<std::size_t>(part_.max_exponent() + 1);
  stats_.dense_segments = stats_.sparse_segments = 0;
  part_.for_each([&](const SegmentRef& ref) {
    SegmentBody& seg = bodies_[ref.handle];
    if (seg.dense()) {
      ++stats_.dense_segments;
      visit_dense(seg);
    } else {
      ++stats_.sparse_segments;
      visit_sparse(seg);
    }
    words += seg.words();
  });
  aux_words_ = words;
  peak_aux_words_ = std::max(peak_aux_words_, words);
  return best_;
}

void CompressedEngine::visit_sparse(SegmentBody& seg) {
  const u64 h = store_.h();
  auto& list = std::get<SparseDesc>(seg.desc).centers;
  std::size_t keep = 0;
  for (std::size_t i = 0; i < list.size(); ++i) {
    Candidate cand = list[i];
    if (2 * cand.center < h + 2) continue;  // the mirror fell off the text start: dead
    u64 y = 2 * cand.center - h - 2;
    if (store_.find(y)) {
      if (!check(y)) continue;  // failed runs never recover
      cand.radius = h - cand.center + 1;
      best_ = std::max(best_, cand.radius);
    }
    list[keep++] = cand;
  }
  list.resize(keep);
}

void CompressedEngine::visit_dense(SegmentBody& seg) {
  const u64 h = store_.h();
  DenseDesc& d = std::get<DenseDesc>(seg.desc);
  const u64 cl = std::max({seg.start, d.anchor, (h + 3) / 2});
  const u64 cr = seg.end();
  if (cl > cr) return;
  const u64 ymin = 2 * cl - h - 2;
  const u64 ymax = 2 * cr - h - 2;
  const int L = store_.top_level();

  scratch_.clear();
  for (int lam = L; lam >= 0; --lam) {
    const u64 lo = store_.window_low(static_cast<std::size_t>(lam));
    if (lo > ymax) break;  // lower levels reach even less far back
    const bool top = lam == L;
    // Mirrors share the parity of h; below the top, even positions live higher up.
    if (lam >= 1 && (h & 1)) continue;
    if (lam == 0 && !top && (h & 1) == 0) continue;
    const u64 q = u64{1} << lam;
    const u64 ylo = std::max(ymin, lo);
    u64 first = ceil_to(ylo, q);
    u64 stride = q;
    if (lam == 0) {
      if ((first & 1) != (h & 1)) ++first;
      stride = 2;
    } else if (!top) {
      if (((first >> lam) & 1) == 0) first += q;
      stride = 2 * q;
    }
    if (first > ymax) continue;
    const u64 count = (ymax - first) / stride + 1;
    if (count <= opt_.enumerate_limit) {
      for (u64 y = first; y <= ymax; y += stride) {
        u64 c = (y + h + 2) / 2;
        if (d.in_family(c)) scratch_.push_back(c);
      }
    } else {
      family_window(seg, d, lam, std::max(cl, (ylo + h + 3) / 2), cr, scratch_);
    }
  }

  // Position 0 is kept forever.
  if (ymin == 0 && d.in_family(cl)) scratch_.push_back(cl);

  // Rightmost first, so the leftmost successes end up at the buffer front.
  std::sort(scratch_.begin(), scratch_.end(), std::greater<>());
  scratch_.erase(std::unique(scratch_.begin(), scratch_.end()), scratch_.end());
  for (u64 c : scratch_) {
    if (!check(2 * c - h - 2)) continue;
    u64 r = h - c + 1;
    best_ = std::max(best_, r);
    buffer_touch(d, c, r);
  }
}

LevelCache& CompressedEngine::cache_for(DenseDesc& d, int level) {
  for (LevelCache& lc : d.cache)
    if (lc.lambda == level) return lc;
  LevelCache lc;
  lc.lambda = level;
  const u64 q = u64{1} << level;
  lc.g2 = std::gcd(d.p, q);
  const int k = level - std::countr_zero(lc.g2);
  lc.inv = inverse_mod_pow2(d.p / lc.g2, k);
  d.cache.push_back(lc);
  return d.cache.back();
}

void CompressedEngine::build_extents(const SegmentBody& seg, const DenseDesc&, LevelCache& lc, u64 W) {
  ++stats_.extent_builds;
  const u64 q = u64{1} << lc.lambda;
  const u64 h = store_.h();
  lc.extents = true;
  lc.unusable = false;
  const u64 G = ceil_to(seg.start - 1, q);
  if (G + 2 * W > seg.end()) {
    lc.unusable = true;
    return;
  }
  lc.grid0 = G;
  const std::size_t lvl = static_cast<std::size_t>(lc.lambda);

  // Left end: smallest grid a with T[a+1..G+2W] W-periodic.
  const u64 floor_idx = ceil_to(store_.window_low(lvl, true), q) / q;
  auto left_pred = [&](u64 idx) { return store_.is_period_over(idx * q, G + 2 * W, W, true); };
  auto at_floor = left_pred(floor_idx);
  auto at_g = left_pred(G / q);
  if (!at_floor || !at_g || !*at_g) {
    lc.unusable = true;
    return;
  }
  if (*at_floor) {
    lc.left_capped = floor_idx > 0;
    lc.x_lo = 1;
    lc.x_hi = floor_idx * q + 1;
  } else {
    u64 lo = floor_idx, hi = G / q;
    while (hi - lo > 1) {
      u64 mid = lo + (hi - lo) / 2;
      auto v = left_pred(mid);
      if (!v) {
        lc.unusable = true;
        return;
      }
      (*v ? hi : lo) = mid;
    }
    lc.left_capped = false;
    lc.x_lo = hi * q - q + 2;
    lc.x_hi = hi * q + 1;
  }

  // Right end: largest grid b <= h with T[G+1..b] W-periodic.
  auto right_pred = [&](u64 idx) { return store_.is_period_over(G, idx * q, W, true); };
  u64 lo = (G + 2 * W) / q, hi = h / q;
  auto at_top = right_pred(hi);
  if (!at_top) {
    lc.unusable = true;
    return;
  }
  if (*at_top) {
    lo = hi;
  } else {
    while (hi - lo > 1) {
      u64 mid = lo + (hi - lo) / 2;
      auto v = right_pred(mid);
      if (!v) {
        lc.unusable = true;
        return;
      }
      (*v ? lo : hi) = mid;
    }
  }
  lc.y_grid = lo * q;
  lc.y_open = lc.y_grid == h / q * q;
}

void CompressedEngine::refresh_right(LevelCache& lc, u64 W, int level) {
  const u64 q = u64{1} << level;
  const u64 hgrid = store_.h() / q * q;
  while (lc.y_open && lc.y_grid < hgrid) {
    u64 g = lc.y_grid + q;
    auto ok = store_.is_period_over(g - q - W, g, W, true);
    if (!ok) {
      lc.unusable = true;
      return;
    }
    if (*ok)
      lc.y_grid = g;
    else
      lc.y_open = false;
  }
}

void CompressedEngine::family_window(SegmentBody& seg, DenseDesc& d, int level, u64 cl, u64 cr,
                                     std::vector<u64>& out) {
  const u64 h = store_.h();
  cache_for(d, level);
  auto fams = residue_bases(d, level, h);
  if (!fams) return;
  const u64 W = fams->first.block_len;
  const u64 step = W / 2;  // both families together
  const u64 base = fams->first.base;
  if (cl > cr) return;
  const u64 first = align_up(cl, base, step);
  if (first > cr) return;
  const u64 m = (cr - first) / step + 1;
  auto emit = [&](u64 from, u64 to) {
    if (from > to) return;
    for (u64 c = align_up(from, base, step); c <= to; c += step) out.push_back(c);
  };
  if (m <= 8) {
    emit(first, cr);
    return;
  }

  LevelCache& lc = cache_for(d, level);
  if (!lc.extents || opt_.rebuild_extents)
    build_extents(seg, d, lc, W);
  else if (!lc.unusable)
    refresh_right(lc, W, level);
  if (lc.unusable) {
    ++stats_.fallback_families;
    emit(first, cr);
    return;
  }

  // Every success satisfies 2c >= X + min(Y, h) + 1, and when the run reaches
  // h every center past (X + h + 1) / 2 succeeds; keep five past that point.
  const u64 q = u64{1} << level;
  const u64 y_lo = lc.y_grid;
  const u64 y_hi = lc.y_open ? h : std::min(h, lc.y_grid + q - 1);
  const u64 lower = lc.left_capped ? first : std::max(first, (lc.x_lo + y_lo + 2) / 2);
  const u64 upper = std::min(cr, std::max(first, (lc.x_hi + y_hi + 1) / 2) + 3 * W);
  emit(lower, upper);
}

}  // namespace palstream
