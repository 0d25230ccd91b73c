#include "palstream/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace palstream {

Text to_text(std::string_view s) {
  Text t(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) t[i] = static_cast<unsigned char>(s[i]);
  return t;
}

Text double_text(std::span<const Sym> s) {
  Text out;
  out.reserve(2 * s.size());
  for (Sym c : s) {
    out.push_back(c);
    out.push_back(c);
  }
  return out;
}

std::string double_text(std::string_view s) {
  std::string out;
  out.reserve(2 * s.size());
  for (char c : s) out.append(2, c);
  return out;
}

namespace {

// Manacher over the separator-interleaved text #s1#s2#...#sn#.
// P[i] is the radius around index i, which equals the palindrome length in s.
std::vector<u64> manacher_radii(std::span<const Sym> s) {
  std::size_t m = 2 * s.size() + 1;
  auto at = [&](std::size_t i) -> std::int64_t {
    return (i & 1) ? static_cast<std::int64_t>(s[i / 2]) : -1;
  };
  std::vector<u64> P(m, 0);
  std::size_t c = 0, r = 0;  // rightmost palindrome [c - P[c], r]
  for (std::size_t i = 0; i < m; ++i) {
    u64 k = 0;
    if (i < r) k = std::min<u64>(P[2 * c - i], r - i);
    while (i >= k + 1 && i + k + 1 < m && at(i - k - 1) == at(i + k + 1)) ++k;
    P[i] = k;
    if (i + k > r) {
      c = i;
      r = i + k;
    }
  }
  return P;
}

}  // namespace

u64 RadiusProfile::max() const {
  u64 best = 0;
  for (u64 r : R) best = std::max(best, r);
  return best;
}

RadiusProfile radius_profile(std::span<const Sym> s) {
  auto P = manacher_radii(s);
  RadiusProfile prof;
  prof.R.assign(s.size() + 2, 0);
  // Center c sits on separator index 2(c-1); an even palindrome of length
  // 2r there has radius r.
  for (std::size_t c = 1; c <= s.size() + 1; ++c) prof.R[c] = P[2 * (c - 1)] / 2;
  return prof;
}

u64 manacher_longest(std::span<const Sym> s) {
  auto P = manacher_radii(s);
  return P.empty() ? 0 : *std::max_element(P.begin(), P.end());
}

u64 manacher_longest(std::string_view s) { return manacher_longest(to_text(s)); }

u64 brute_longest(std::span<const Sym> s) {
  if (s.size() > kBruteGuard) throw std::length_error("brute_longest: input over guard");
  std::size_t n = s.size();
  u64 best = 0;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t k = 0;  // odd, centered on s[c]
    while (c >= k + 1 && c + k + 1 < n && s[c - k - 1] == s[c + k + 1]) ++k;
    best = std::max<u64>(best, 2 * k + 1);
    k = 0;  // even, between s[c] and s[c+1]
    while (c >= k && c + k + 1 < n && s[c - k] == s[c + k + 1]) ++k;
    best = std::max<u64>(best, 2 * k);
  }
  return best;
}

u64 brute_longest(std::string_view s) { return brute_longest(to_text(s)); }

std::vector<u64> prefix_longest(std::span<const Sym> s, bool even_only) {
  auto P = manacher_radii(s);
  std::vector<u64> out(s.size());
  // The longest palindrome ending at s_j is centered at the smallest index i
  // with i + P[i] >= 2j; that index never moves left as j grows.
  std::size_t i = 0;
  u64 best = 0;
  for (std::size_t j = 1; j <= s.size(); ++j) {
    while (i + P[i] < 2 * j || (even_only && (i & 1))) ++i;
    best = std::max<u64>(best, 2 * j - i);
    out[j - 1] = best;
  }
  return out;
}

std::vector<u64> prefix_longest_naive(std::span<const Sym> s, bool even_only) {
  if (s.size() > kPerPrefixGuard) throw std::length_error("per-prefix oracle limited to 2^13");
  std::vector<u64> out(s.size());
  u64 best = 0;
  for (std::size_t j = 0; j < s.size(); ++j) {
    // Palindromes ending at j: try every start, longest first.
    for (std::size_t st = 0; st <= j; ++st) {
      std::size_t len = j - st + 1;
      if (len <= best) break;
      if (even_only && (len & 1)) continue;
      bool ok = true;
      for (std::size_t a = st, b = j; a < b && ok; ++a, --b) ok = s[a] == s[b];
      if (ok) {
        best = len;
        break;
      }
    }
    out[j] = best;
  }
  return out;
}

}  // namespace palstream
