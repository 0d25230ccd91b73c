#pragma once

#include <optional>

#include "palstream/landmarks.hpp"
#include "palstream/schemes.hpp"

namespace palstream {

enum class RunKind { success, fail, no_landmark };

struct RunOutcome {
  RunKind kind = RunKind::no_landmark;
  u64 radius = 0;
};

struct BasicOptions {
  int skip_level = -1;  // fault injection: never use landmarks of this level index
};

// Reference engine: after each symbol, check every centered palindrome that
// the retained landmarks allow. Keeps no per-process state.
class BasicEngine {
 public:
  BasicEngine(const ApproxMode& mode, u64 seed, BasicOptions opt = {});

  u64 push(u64 symbol);
  RunOutcome run_process(u64 c);

  u64 best() const { return best_; }
  u64 h() const { return store_.h(); }
  const SchemeConfig& config() const { return cfg_; }
  const LandmarkStore& store() const { return store_; }
  u64 checks() const { return checks_; }

 private:
  SchemeConfig cfg_;
  LandmarkStore store_;
  BasicOptions opt_;
  u64 best_ = 0;
  u64 checks_ = 0;
};

}  // namespace palstream
