#pragma once

#include <memory>
#include <string>
#include <variant>

#include "palstream/engine_basic.hpp"
#include "palstream/engine_compressed.hpp"
#include "palstream/oracle.hpp"

namespace palstream {

enum class EngineKind { basic, compressed };

std::string to_string(EngineKind k);
EngineKind engine_kind_from(const std::string& s);

// User-facing settings, all in units of the original stream.
struct StreamConfig {
  ApproxKind kind = ApproxKind::additive;
  u64 error = 1;      // additive error E on palindrome length
  double eps = 0.5;   // multiplicative schemes
  u64 n = 1 << 20;    // maximum number of original symbols
  bool doubling = true;  // false: even-length palindromes only
  EngineKind engine = EngineKind::compressed;
  u64 seed = 1;
  BasicOptions basic;
  CompressedOptions compressed;
};

// Parameters handed to the engine for a given user config.
ApproxMode internal_mode(const StreamConfig& cfg);

// Drives one engine over original symbols. With doubling on, every symbol is
// pushed twice, so an internal radius equals a palindrome length in the
// original text.
class PalindromeStream {
 public:
  explicit PalindromeStream(const StreamConfig& cfg);

  // Feeds one original symbol (code >= 1) and returns the answer.
  u64 push(u64 code);
  u64 answer() const { return answer_; }
  u64 length() const { return len_; }

  // Guarantee on palindrome lengths in the original text.
  Guarantee guarantee() const;
  const SchemeConfig& scheme() const;
  const StreamConfig& config() const { return cfg_; }

  std::size_t landmark_words() const;
  std::size_t peak_landmark_words() const;
  std::size_t aux_words() const;
  std::size_t peak_aux_words() const;
  u64 checks() const;

  const BasicEngine* basic() const { return std::get_if<BasicEngine>(&eng_); }
  const CompressedEngine* compressed() const { return std::get_if<CompressedEngine>(&eng_); }

 private:
  u64 feed(u64 sym);

  StreamConfig cfg_;
  std::variant<BasicEngine, CompressedEngine> eng_;
  u64 len_ = 0;
  u64 answer_ = 0;
};

}  // namespace palstream
