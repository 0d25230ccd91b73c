#include "palstream/verify.hpp"

#include <algorithm>
#include <sstream>

namespace palstream {

std::vector<u64> byte_codes(std::string_view s) {
  std::vector<u64> out;
  out.reserve(s.size());
  for (unsigned char c : s) out.push_back(symbol_code(c));
  return out;
}

std::vector<u64> prefix_opt(std::span<const u64> codes, bool doubling) {
  Text t(codes.begin(), codes.end());
  return prefix_longest(t, !doubling);
}

CaseResult check_case(const StreamConfig& cfg, std::span<const u64> codes, std::span<const u64> opt) {
  PalindromeStream st(cfg);
  const Guarantee g = st.guarantee();
  CaseResult r;
  u64 prev = 0;
  for (std::size_t j = 0; j < codes.size(); ++j) {
    const u64 a = st.push(codes[j]);
    const u64 o = opt[j];
    ++r.prefixes;
    bool bad = !g.holds(o, a) || a < prev;
    prev = a;
    if (a != o) ++r.mismatches;
    if (o > a) r.worst_gap = std::max(r.worst_gap, o - a);
    if (a > 0) r.worst_ratio = std::max(r.worst_ratio, static_cast<double>(o) / static_cast<double>(a));
    if (bad) {
      if (r.violations == 0) {
        std::ostringstream os;
        os << to_string(cfg.engine) << " h=" << j + 1 << " answer=" << a << " opt=" << o;
        r.first_violation = os.str();
      }
      ++r.violations;
    }
  }
  return r;
}

void VerifyReport::add(const CaseResult& r, const std::string& label) {
  ++cases;
  prefixes += r.prefixes;
  violations += r.violations;
  mismatches += r.mismatches;
  worst_gap = std::max(worst_gap, r.worst_gap);
  worst_ratio = std::max(worst_ratio, r.worst_ratio);
  if (r.violations && samples.size() < 8) samples.push_back(label + ": " + r.first_violation);
}

nlohmann::json VerifyReport::to_json() const {
  return {{"cases", cases},       {"prefixes", prefixes},       {"violations", violations},
          {"mismatches", mismatches}, {"worst_gap", worst_gap}, {"worst_ratio", worst_ratio},
          {"samples", samples}};
}

void verify_text(const StreamConfig& base, const std::vector<EngineKind>& engines, std::string_view text,
                 const std::string& label, VerifyReport& rep) {
  const std::vector<u64> codes = byte_codes(text);
  const std::vector<u64> opt = prefix_opt(codes, base.doubling);
  for (EngineKind e : engines) {
    StreamConfig cfg = base;
    cfg.engine = e;
    rep.add(check_case(cfg, codes, opt), label);
  }
}

}  // namespace palstream
