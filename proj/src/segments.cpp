#include "palstream/segments.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace palstream {

std::size_t SegmentBody::words() const {
  if (const auto* sp = std::get_if<SparseDesc>(&desc)) return 3 + 2 * sp->centers.size();
  const auto& d = std::get<DenseDesc>(desc);
  return 4 + 2 * kBufferSize + 10 * d.cache.size();
}

u64 align_up(u64 from, u64 c, u64 m) {
  if (c >= from) return c - ((c - from) / m) * m;
  return c + ((from - c + m - 1) / m) * m;
}

SegmentBody unit_segment(u64 h) {
  SegmentBody s;
  s.start = h;
  s.exponent = 0;
  s.desc = SparseDesc{{Candidate{h, 0}}};
  return s;
}

DenseDesc densify(std::vector<u64> centers, const SegmentBody& seg) {
  std::sort(centers.begin(), centers.end());
  centers.erase(std::unique(centers.begin(), centers.end()), centers.end());
  if (centers.size() < 5) throw std::invalid_argument("densify needs at least five centers");
  for (u64 c : centers)
    if (c < seg.start || c > seg.end()) throw std::invalid_argument("densify: center outside segment");
  u64 g = 0;
  for (std::size_t i = 1; i < centers.size(); ++i) g = std::gcd(g, centers[i] - centers[i - 1]);
  DenseDesc d;
  d.p = 2 * g;
  d.anchor = centers.front();
  return d;
}

std::optional<std::vector<Candidate>> survivors(const DenseDesc& d, int seg_exp) {
  u64 thr = u64{2} << seg_exp;
  std::vector<Candidate> out;
  for (std::size_t i = 0; i < d.buffer_len; ++i)
    if (d.buffer[i].radius >= thr) out.push_back(d.buffer[i]);
  if (out.size() > 4) return std::nullopt;
  return out;
}

std::pair<u64, u64> reconcile(u64 p_new, u64 c_new, u64 p_old, u64 c_old, const SegmentBody& seg) {
  if (p_new == p_old) return {align_up(seg.start, c_new, p_new / 2), p_new};
  // Both families are valid, so their common refinement is too; this keeps
  // every member of the old family even when p_old divides p_new.
  u64 p = std::gcd(p_new, p_old);
  return {align_up(seg.start, c_old, p / 2), p};
}

void buffer_touch(DenseDesc& d, u64 center, u64 radius) {
  std::size_t pos = d.buffer_len;
  for (std::size_t i = 0; i < d.buffer_len; ++i)
    if (d.buffer[i].center == center) pos = i;
  if (pos == d.buffer_len) {
    if (d.buffer_len < kBufferSize) ++d.buffer_len;
    pos = d.buffer_len - 1;  // overwrite the oldest when full
  }
  for (std::size_t i = pos; i > 0; --i) d.buffer[i] = d.buffer[i - 1];
  d.buffer[0] = Candidate{center, radius};
}

SegmentBody merge(const SegmentBody& s, const SegmentBody& s2, MergeStats* stats) {
  if (s.exponent != s2.exponent) throw std::invalid_argument("merge: unequal exponents");
  if (s.end() + 1 != s2.start) throw std::invalid_argument("merge: segments are not adjacent");
  MergeStats local;
  MergeStats& st = stats ? *stats : local;
  ++st.merges;

  int l = s.exponent;
  u64 thr = u64{2} << l;
  SegmentBody out;
  out.start = s.start;
  out.exponent = l + 1;

  std::vector<Candidate> expl;
  std::vector<const DenseDesc*> periodic;  // dense halves that stay dense
  for (const SegmentBody* side : {&s, &s2}) {
    if (const auto* sp = std::get_if<SparseDesc>(&side->desc)) {
      expl.insert(expl.end(), sp->centers.begin(), sp->centers.end());
      continue;
    }
    const auto& d = std::get<DenseDesc>(side->desc);
    if (auto sv = survivors(d, l)) {
      expl.insert(expl.end(), sv->begin(), sv->end());
    } else {
      for (std::size_t i = 0; i < d.buffer_len; ++i)
        if (d.buffer[i].radius >= thr) expl.push_back(d.buffer[i]);
      periodic.push_back(&d);
    }
  }

  if (periodic.empty()) {
    bool premise = std::all_of(expl.begin(), expl.end(), [&](const Candidate& c) { return c.radius >= thr; });
    if (expl.size() <= 4 || !premise) {
      if (expl.size() > 4) ++st.premise_violations;
      out.desc = SparseDesc{std::move(expl)};
      return out;
    }
  }

  std::vector<u64> centers;
  for (const Candidate& c : expl) centers.push_back(c.center);
  DenseDesc d = densify(centers, out);
  for (const DenseDesc* old : periodic) {
    auto [c, p] = reconcile(d.p, d.anchor, old->p, old->anchor, out);
    d.anchor = c;
    d.p = p;
  }
  d.anchor = align_up(out.start, d.anchor, d.p / 2);
  ++st.densified;
  if (d.p > out.length() / 2) ++st.wide_periods;
  out.desc = std::move(d);
  return out;
}

}  // namespace palstream
