#include "palstream/stream.hpp"

#include <algorithm>
#include <stdexcept>

namespace palstream {

std::string to_string(EngineKind k) { return k == EngineKind::basic ? "basic" : "compressed"; }

EngineKind engine_kind_from(const std::string& s) {
  if (s == "basic") return EngineKind::basic;
  if (s == "compressed") return EngineKind::compressed;
  throw std::invalid_argument("unknown engine: " + s);
}

ApproxMode internal_mode(const StreamConfig& cfg) {
  if (cfg.n == 0) throw std::invalid_argument("n must be positive");
  const u64 n = cfg.doubling ? 2 * cfg.n : cfg.n;
  switch (cfg.kind) {
    case ApproxKind::additive: {
      if (cfg.error == 0) throw std::invalid_argument("additive error must be positive");
      // Without separators the engine measures half lengths.
      u64 e = cfg.doubling ? cfg.error : std::max<u64>(1, cfg.error / 2);
      return ApproxMode::additive(n, e);
    }
    case ApproxKind::multiplicative:
      return ApproxMode::multiplicative(n, cfg.eps);
    case ApproxKind::multiplicative_sparse:
      return ApproxMode::sparse(n, cfg.eps);
  }
  throw std::invalid_argument("bad approximation kind");
}

namespace {

std::variant<BasicEngine, CompressedEngine> make_engine(const StreamConfig& cfg) {
  ApproxMode m = internal_mode(cfg);
  if (cfg.engine == EngineKind::basic)
    return std::variant<BasicEngine, CompressedEngine>(std::in_place_type<BasicEngine>, m, cfg.seed, cfg.basic);
  return std::variant<BasicEngine, CompressedEngine>(std::in_place_type<CompressedEngine>, m, cfg.seed,
                                                     cfg.compressed);
}

}  // namespace

PalindromeStream::PalindromeStream(const StreamConfig& cfg) : cfg_(cfg), eng_(make_engine(cfg)) {}

u64 PalindromeStream::feed(u64 sym) {
  return std::visit([&](auto& e) { return e.push(sym); }, eng_);
}

u64 PalindromeStream::push(u64 code) {
  if (code == 0) throw std::invalid_argument("symbol code 0 is reserved");
  if (len_ >= cfg_.n) throw std::length_error("stream longer than the declared n");
  ++len_;
  if (cfg_.doubling) {
    feed(code);
    answer_ = feed(code);
  } else {
    answer_ = 2 * feed(code);
  }
  return answer_;
}

const SchemeConfig& PalindromeStream::scheme() const {
  return std::visit([](const auto& e) -> const SchemeConfig& { return e.config(); }, eng_);
}

Guarantee PalindromeStream::guarantee() const {
  Guarantee g = guarantee_of(scheme());
  if (!cfg_.doubling && g.additive) g.bound *= 2;
  return g;
}

std::size_t PalindromeStream::landmark_words() const {
  return std::visit([](const auto& e) { return e.store().words(); }, eng_);
}

std::size_t PalindromeStream::peak_landmark_words() const {
  return std::visit([](const auto& e) { return e.store().peak_words(); }, eng_);
}

std::size_t PalindromeStream::aux_words() const {
  if (auto* c = compressed()) return c->aux_words();
  return 0;
}

std::size_t PalindromeStream::peak_aux_words() const {
  if (auto* c = compressed()) return c->peak_aux_words();
  return 0;
}

u64 PalindromeStream::checks() const {
  if (auto* b = basic()) return b->checks();
  return compressed()->stats().checks;
}

}  // namespace palstream
