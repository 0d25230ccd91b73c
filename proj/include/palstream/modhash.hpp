#pragma once

#include <cstdint>
#include <span>
#include <string_view>

namespace palstream {

using u64 = std::uint64_t;

inline constexpr u64 kMersenne61 = (u64{1} << 61) - 1;

// Field parameters for Karp-Rabin fingerprints. Any prime p works for the
// arithmetic; the engines always use 2^61 - 1.
struct HashParams {
  u64 p = kMersenne61;
  u64 x = 1;
  u64 x_inv = 1;

  static HashParams create(u64 n, u64 seed);
  static HashParams with_base(u64 p, u64 x);

  u64 mul(u64 a, u64 b) const {
    auto prod = static_cast<unsigned __int128>(a) * b;
    if (p == kMersenne61) {
      u64 r = static_cast<u64>(prod & kMersenne61) + static_cast<u64>(prod >> 61);
      return r >= p ? r - p : r;
    }
    return static_cast<u64>(prod % p);
  }
  u64 add(u64 a, u64 b) const {
    u64 r = a + b;
    return r >= p ? r - p : r;
  }
  u64 sub(u64 a, u64 b) const { return a >= b ? a - b : a + p - b; }
  u64 pow(u64 a, u64 e) const;
  u64 inv(u64 a) const { return pow(a, p - 2); }
};

// Phi(w): length, f(w), f(w^R), x^|w| and x^-|w|.
struct Fingerprint {
  u64 len = 0;
  u64 fwd = 0;
  u64 rev = 0;
  u64 pw = 1;
  u64 ipw = 1;

  bool operator==(const Fingerprint&) const = default;
};

// Byte b hashes as b + 1 so that no symbol collides with "absent".
constexpr u64 symbol_code(unsigned char b) { return u64{b} + 1; }

Fingerprint append_char(const HashParams& hp, const Fingerprint& fp, u64 a);
Fingerprint concat(const HashParams& hp, const Fingerprint& w, const Fingerprint& v);
Fingerprint erase_prefix(const HashParams& hp, const Fingerprint& wv, const Fingerprint& w);
Fingerprint erase_suffix(const HashParams& hp, const Fingerprint& wv, const Fingerprint& v);
Fingerprint reverse_fp(const Fingerprint& fp);
bool is_self_palindrome(const Fingerprint& fp);

Fingerprint fingerprint_of(const HashParams& hp, std::span<const u64> symbols);
Fingerprint fingerprint_of(const HashParams& hp, std::string_view bytes);

// Prefix-based shortcuts used on hot paths. Both avoid modular inverses by
// scaling each side with x^start instead of dividing it out.

// Is T[y+1..h] a palindrome, given Phi(T[1..y]) and Phi(T[1..h])?
inline bool range_is_palindrome(const HashParams& hp, u64 fy, u64 ry, u64 pwy,
                                u64 fh, u64 rh, u64 pwh) {
  return hp.sub(fh, fy) == hp.sub(hp.mul(rh, pwy), hp.mul(ry, pwh));
}

// Does T[a+1..b] equal T[c+1..d] (equal lengths), given the four prefixes?
inline bool ranges_equal(const HashParams& hp, u64 fa, u64 pwa, u64 fb, u64 fc,
                         u64 pwc, u64 fd) {
  return hp.mul(hp.sub(fb, fa), pwc) == hp.mul(hp.sub(fd, fc), pwa);
}

}  // namespace palstream
