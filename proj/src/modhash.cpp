#include "palstream/modhash.hpp"

#include <random>
#include <stdexcept>

namespace palstream {

HashParams HashParams::create(u64 n, u64 seed) {
  if (n == 0) throw std::invalid_argument("params_new: n must be positive");
  // Plain modulo keeps the base identical across standard libraries.
  std::mt19937_64 gen(seed);
  return with_base(kMersenne61, 1 + gen() % (kMersenne61 - 1));
}

HashParams HashParams::with_base(u64 p, u64 x) {
  if (p < 3) throw std::invalid_argument("modulus too small");
  x %= p;
  if (x == 0) throw std::invalid_argument("base must be nonzero mod p");
  HashParams hp;
  hp.p = p;
  hp.x = x;
  hp.x_inv = hp.inv(x);
  return hp;
}

u64 HashParams::pow(u64 a, u64 e) const {
  u64 r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

Fingerprint append_char(const HashParams& hp, const Fingerprint& fp, u64 a) {
  a %= hp.p;
  return {fp.len + 1, hp.add(fp.fwd, hp.mul(a, fp.pw)), hp.add(hp.mul(fp.rev, hp.x), a),
          hp.mul(fp.pw, hp.x), hp.mul(fp.ipw, hp.x_inv)};
}

Fingerprint concat(const HashParams& hp, const Fingerprint& w, const Fingerprint& v) {
  return {w.len + v.len, hp.add(w.fwd, hp.mul(w.pw, v.fwd)), hp.add(v.rev, hp.mul(v.pw, w.rev)),
          hp.mul(w.pw, v.pw), hp.mul(w.ipw, v.ipw)};
}

Fingerprint erase_prefix(const HashParams& hp, const Fingerprint& wv, const Fingerprint& w) {
  if (w.len > wv.len) throw std::invalid_argument("erase_prefix: length underflow");
  Fingerprint v;
  v.len = wv.len - w.len;
  v.pw = hp.mul(wv.pw, w.ipw);
  v.ipw = hp.mul(wv.ipw, w.pw);
  v.fwd = hp.mul(hp.sub(wv.fwd, w.fwd), w.ipw);
  // f((wv)^R) = f(v^R) + x^|v| f(w^R)
  v.rev = hp.sub(wv.rev, hp.mul(v.pw, w.rev));
  return v;
}

Fingerprint erase_suffix(const HashParams& hp, const Fingerprint& wv, const Fingerprint& v) {
  if (v.len > wv.len) throw std::invalid_argument("erase_suffix: length underflow");
  Fingerprint w;
  w.len = wv.len - v.len;
  w.pw = hp.mul(wv.pw, v.ipw);
  w.ipw = hp.mul(wv.ipw, v.pw);
  w.fwd = hp.sub(wv.fwd, hp.mul(w.pw, v.fwd));
  w.rev = hp.mul(hp.sub(wv.rev, v.rev), v.ipw);
  return w;
}

Fingerprint reverse_fp(const Fingerprint& fp) {
  Fingerprint r = fp;
  std::swap(r.fwd, r.rev);
  return r;
}

bool is_self_palindrome(const Fingerprint& fp) { return fp.fwd == fp.rev; }

Fingerprint fingerprint_of(const HashParams& hp, std::span<const u64> symbols) {
  Fingerprint fp;
  for (u64 a : symbols) fp = append_char(hp, fp, a);
  return fp;
}

Fingerprint fingerprint_of(const HashParams& hp, std::string_view bytes) {
  Fingerprint fp;
  for (char c : bytes) fp = append_char(hp, fp, symbol_code(static_cast<unsigned char>(c)));
  return fp;
}

}  // namespace palstream
