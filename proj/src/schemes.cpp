#include "palstream/schemes.hpp"

#include <bit>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace palstream {

std::string ApproxMode::describe() const {
  std::ostringstream os;
  switch (kind) {
    case ApproxKind::additive: os << "additive(E=" << E << ")"; break;
    case ApproxKind::multiplicative: os << "multiplicative(eps=" << eps << ")"; break;
    case ApproxKind::multiplicative_sparse: os << "sparse(eps=" << eps << ")"; break;
  }
  return os.str();
}

std::vector<LevelConfig> SchemeConfig::with_ghosts() const {
  std::vector<LevelConfig> out = levels;
  for (LevelConfig& c : out)
    if (c.b) c.f = 4 * *c.b;
  return out;
}

std::size_t SchemeConfig::lower_b() const {
  for (const LevelConfig& c : levels)
    if (c.b) return *c.b;
  return 0;
}

SchemeConfig additive_config(u64 n, u64 E) {
  if (E < 1 || E > n) throw std::invalid_argument("additive error must lie in [1, n]");
  SchemeConfig cfg;
  cfg.mode = ApproxMode::additive(n, E);
  cfg.L = std::bit_width(E) - 1;
  for (int lam = 0; lam < cfg.L; ++lam)
    cfg.levels.push_back(LevelConfig::bounded(lam, kLowerLevelSize, false));
  cfg.levels.push_back(LevelConfig::unbounded(cfg.L));
  cfg.guarantee = guarantee_of(cfg);
  return cfg;
}

u64 multiplicative_size(double eps) {
  double d = std::ceil(5.0 + 4.0 / eps - 1e-9);
  return std::max<u64>(12, static_cast<u64>(d));
}

SchemeConfig multiplicative_config(u64 n, double eps) {
  if (!(eps >= 2.0 / static_cast<double>(n))) throw std::invalid_argument("eps below 2/n");
  if (eps > 1.0) eps = 1.0;
  SchemeConfig cfg;
  cfg.mode = ApproxMode::multiplicative(n, eps);
  cfg.D = multiplicative_size(eps);
  // Smallest L whose top window spans the whole text: (D-1) * 2^L >= n.
  int L = 0;
  while ((cfg.D - 1) << L < n) ++L;
  cfg.L = L;
  for (int lam = 0; lam <= L; ++lam)
    cfg.levels.push_back(LevelConfig::bounded(lam, cfg.D, false));
  cfg.guarantee = guarantee_of(cfg);
  return cfg;
}

SchemeConfig sparse_config(u64 n, double eps) {
  if (!(eps >= 1.0)) throw std::invalid_argument("sparse scheme needs eps >= 1");
  SchemeConfig cfg;
  cfg.mode = ApproxMode::sparse(n, eps);
  cfg.k = static_cast<int>(std::floor(std::log2(1.0 + eps) + 1e-12));
  int count = 0;
  while (count + 1 <= 62 / cfg.k && (u64{1} << (cfg.k * (count + 1))) <= n) ++count;
  count = std::max(count, 1);
  for (int i = 1; i <= count; ++i) cfg.levels.push_back(LevelConfig::bounded(cfg.k * i, 1, false));
  cfg.L = cfg.k * count;
  cfg.guarantee = guarantee_of(cfg);
  return cfg;
}

SchemeConfig config_for(const ApproxMode& mode) {
  switch (mode.kind) {
    case ApproxKind::additive: return additive_config(mode.n, mode.E);
    case ApproxKind::multiplicative: return multiplicative_config(mode.n, mode.eps);
    case ApproxKind::multiplicative_sparse: return sparse_config(mode.n, mode.eps);
  }
  throw std::invalid_argument("unknown mode");
}

Guarantee guarantee_of(const SchemeConfig& cfg) {
  Guarantee g;
  switch (cfg.mode.kind) {
    case ApproxKind::additive:
      g.additive = true;
      g.bound = u64{1} << cfg.L;
      break;
    case ApproxKind::multiplicative:
      g.additive = false;
      g.num = cfg.D - 1;
      g.den = cfg.D - 5;
      break;
    case ApproxKind::multiplicative_sparse:
      g.additive = false;
      g.den = 1000000;
      g.num = static_cast<u64>(std::llround((1.0 + cfg.mode.eps) * 1e6));
      break;
  }
  return g;
}

}  // namespace palstream
