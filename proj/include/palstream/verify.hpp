#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "palstream/genlib.hpp"
#include "palstream/stream.hpp"

namespace palstream {

// Symbol codes for a byte string, as the engines consume them.
std::vector<u64> byte_codes(std::string_view s);

struct CaseResult {
  u64 prefixes = 0;
  u64 violations = 0;   // answer > OPT or the guarantee fails
  u64 mismatches = 0;   // answer != OPT
  u64 worst_gap = 0;    // max OPT - answer
  double worst_ratio = 1.0;  // max OPT / answer over prefixes with answer > 0
  std::string first_violation;
};

// Runs one engine over codes and checks every prefix against opt.
CaseResult check_case(const StreamConfig& cfg, std::span<const u64> codes, std::span<const u64> opt);

// Per-prefix OPT in original units for the given parity handling.
std::vector<u64> prefix_opt(std::span<const u64> codes, bool doubling);

struct VerifyReport {
  u64 cases = 0;
  u64 prefixes = 0;
  u64 violations = 0;
  u64 mismatches = 0;
  u64 worst_gap = 0;
  double worst_ratio = 1.0;
  std::vector<std::string> samples;  // first few violations, for diagnostics

  void add(const CaseResult& r, const std::string& label);
  nlohmann::json to_json() const;
};

// Checks every configuration in engines against the same case.
void verify_text(const StreamConfig& base, const std::vector<EngineKind>& engines, std::string_view text,
                 const std::string& label, VerifyReport& rep);

}  // namespace palstream
