#include "palstream/partition.hpp"

#include <algorithm>
#include <sstream>

namespace palstream {

int Partition::count(int exponent) const {
  if (exponent < 0 || exponent > max_exponent()) return 0;
  return groups_[exponent].size;
}

std::optional<MergeEvent> Partition::advance(Handle fresh) {
  ++total_;
  if (groups_.empty()) groups_.emplace_back();
  groups_[0].push_back({fresh, total_});
  ++segments_;
  set_count(0, groups_[0].size);

  int c0 = groups_[0].size;
  if (c0 == 5) return merge_front(0);
  if (c0 == 4) {
    int i = linear_scan_ ? find_level_linear() : find_level_runs();
    if (i > 0 && count(i) == 5) return merge_front(i);
  }
  return std::nullopt;
}

int Partition::find_level_linear() const {
  int i = 1;
  while (i <= max_exponent() && count(i) == 4) ++i;
  return i <= max_exponent() ? i : -1;
}

int Partition::find_level_runs() const {
  if (max_exponent() < 1) return -1;
  // The run holding exponent 1 is either the last run or the one before it.
  const Run* r = &runs_.back();
  if (r->hi < 1) r = &runs_[runs_.size() - 2];
  int i = r->value == 4 ? r->hi + 1 : 1;
  return i <= max_exponent() ? i : -1;
}

MergeEvent Partition::merge_front(int e) {
  Group& g = groups_[e];
  Slot a = g.pop_front();
  Slot b = g.pop_front();
  set_count(e, g.size);
  if (static_cast<int>(groups_.size()) == e + 1) groups_.emplace_back();
  groups_[e + 1].push_back(a);
  set_count(e + 1, groups_[e + 1].size);
  --segments_;
  u64 b_end = b.start + (u64{1} << e) - 1;
  return MergeEvent{e, a.handle, b.handle, a.start, total_ - b_end};
}

void Partition::set_count(int e, int v) {
  if (runs_.empty() || runs_.front().hi < e) {
    // A new top exponent; it sits at the front of the list.
    if (!runs_.empty() && runs_.front().value == v && runs_.front().hi + 1 == e) {
      runs_.front().hi = e;
    } else {
      runs_.insert(runs_.begin(), Run{v, e, e});
    }
    return;
  }
  int k = static_cast<int>(runs_.size()) - 1;
  while (runs_[k].hi < e) --k;
  Run r = runs_[k];
  if (r.value == v) return;

  Run pieces[3];
  int np = 0;
  if (r.hi > e) pieces[np++] = Run{r.value, e + 1, r.hi};
  pieces[np++] = Run{v, e, e};
  if (r.lo < e) pieces[np++] = Run{r.value, r.lo, e - 1};
  runs_.erase(runs_.begin() + k);
  runs_.insert(runs_.begin() + k, pieces, pieces + np);

  // Coalesce equal neighbours around the edit.
  int from = std::max(k - 1, 0);
  int to = std::min(k + np, static_cast<int>(runs_.size()) - 1);
  for (int j = to; j > from; --j) {
    if (runs_[j - 1].value == runs_[j].value) {
      runs_[j - 1].lo = runs_[j].lo;
      runs_.erase(runs_.begin() + j);
    }
  }
}

std::string Partition::check_invariants() const {
  std::ostringstream err;
  int M = max_exponent();
  u64 covered = 0;
  std::size_t segs = 0;
  for (int e = 0; e <= M; ++e) {
    int c = count(e);
    covered += static_cast<u64>(c) << e;
    segs += c;
    if (e < M && (c < 3 || c > 5)) err << "count c_" << e << "=" << c << " outside {3,4,5}; ";
    if (e == M && (c < 1 || c > 5)) err << "top count c_" << e << "=" << c << "; ";
    if (c == 5) {
      int j = e - 1;
      while (j >= 0 && count(j) == 4) --j;
      if (j < 0 || count(j) != 3) err << "c_" << e << "=5 without a 3,4..4 chain; ";
    }
  }
  if (covered != total_) err << "lengths sum to " << covered << " not " << total_ << "; ";
  if (segs != segments_) err << "segment counter drift; ";

  u64 next = 1;
  bool contiguous = true;
  for_each([&](const SegmentRef& s) {
    if (s.start != next) contiguous = false;
    next = s.end() + 1;
  });
  if (!contiguous) err << "segments are not contiguous; ";

  // The run list must mirror the counts exactly.
  int expect = M;
  for (const Run& r : runs_) {
    if (r.hi != expect || r.lo > r.hi) err << "run list out of shape; ";
    for (int e = r.lo; e <= r.hi; ++e)
      if (count(e) != r.value) err << "run value mismatch at " << e << "; ";
    expect = r.lo - 1;
  }
  if (M >= 0 && expect != -1) err << "run list does not reach exponent 0; ";
  for (std::size_t i = 1; i < runs_.size(); ++i)
    if (runs_[i - 1].value == runs_[i].value) err << "uncoalesced runs; ";
  return err.str();
}

}  // namespace palstream
