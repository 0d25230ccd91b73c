#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "palstream/modhash.hpp"

namespace palstream {

using Sym = std::uint32_t;
using Text = std::vector<Sym>;

Text to_text(std::string_view s);

// Every symbol emitted twice.
Text double_text(std::span<const Sym> s);
std::string double_text(std::string_view s);

// Even radii: entry c (1 <= c <= n+1) is the largest r with
// T[c..c+r-1] equal to the reverse of T[c-r..c-1]. Entry 0 is unused.
struct RadiusProfile {
  std::vector<u64> R;
  u64 max() const;
};
RadiusProfile radius_profile(std::span<const Sym> s);

u64 manacher_longest(std::span<const Sym> s);
u64 manacher_longest(std::string_view s);

inline constexpr std::size_t kBruteGuard = 10000;
u64 brute_longest(std::span<const Sym> s);
u64 brute_longest(std::string_view s);

// OPT after each prefix: out[j-1] = longest palindrome in s[1..j].
// even_only restricts to even-length palindromes.
std::vector<u64> prefix_longest(std::span<const Sym> s, bool even_only = false);

inline constexpr std::size_t kPerPrefixGuard = std::size_t{1} << 13;
// Incremental center expansion; quadratic, kept as a cross-check.
std::vector<u64> prefix_longest_naive(std::span<const Sym> s, bool even_only = false);

}  // namespace palstream
