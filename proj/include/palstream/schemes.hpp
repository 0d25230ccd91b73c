#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "palstream/landmarks.hpp"

namespace palstream {

enum class ApproxKind { additive, multiplicative, multiplicative_sparse };

// Approximation target. n is the declared maximum internal (doubled) length.
struct ApproxMode {
  ApproxKind kind = ApproxKind::additive;
  u64 E = 1;
  double eps = 1.0;
  u64 n = 1;

  static ApproxMode additive(u64 n, u64 E) { return {ApproxKind::additive, E, 0.0, n}; }
  static ApproxMode multiplicative(u64 n, double eps) {
    return {ApproxKind::multiplicative, 0, eps, n};
  }
  static ApproxMode sparse(u64 n, double eps) {
    return {ApproxKind::multiplicative_sparse, 0, eps, n};
  }
  std::string describe() const;
};

// Promised error: either answer >= OPT - bound, or OPT * den <= num * answer.
struct Guarantee {
  bool additive = true;
  u64 bound = 0;
  u64 num = 1;
  u64 den = 1;

  double ratio() const { return static_cast<double>(num) / static_cast<double>(den); }
  bool holds(u64 opt, u64 answer) const {
    if (answer > opt) return false;
    if (additive) return opt - answer <= bound;
    return static_cast<unsigned __int128>(opt) * den <=
           static_cast<unsigned __int128>(num) * answer;
  }
};

struct SchemeConfig {
  ApproxMode mode;
  std::vector<LevelConfig> levels;  // regular windows only (f = b)
  int L = 0;
  u64 D = 0;  // multiplicative level size
  int k = 0;  // sparse spacing exponent
  Guarantee guarantee;

  // The same layout with 4x ghost windows on every bounded level.
  std::vector<LevelConfig> with_ghosts() const;
  // Window size shared by the bounded levels below the top.
  std::size_t lower_b() const;
};

inline constexpr std::size_t kLowerLevelSize = 12;

SchemeConfig additive_config(u64 n, u64 E);
SchemeConfig multiplicative_config(u64 n, double eps);
SchemeConfig sparse_config(u64 n, double eps);
SchemeConfig config_for(const ApproxMode& mode);
Guarantee guarantee_of(const SchemeConfig& cfg);

u64 multiplicative_size(double eps);

}  // namespace palstream
