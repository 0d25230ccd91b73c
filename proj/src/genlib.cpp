#include "palstream/genlib.hpp"

#include <random>
#include <stdexcept>

namespace palstream {

namespace {

// mt19937_64 output is fixed by the standard; plain modulo keeps the mapping
// identical across standard libraries.
char letter(std::mt19937_64& gen, unsigned k) {
  unsigned v = static_cast<unsigned>(gen() % k);
  return k <= 26 ? static_cast<char>('a' + v) : static_cast<char>(v);
}

void check_alphabet(unsigned k) {
  if (k < 2 || k > 256) throw std::invalid_argument("alphabet size must lie in [2, 256]");
}

}  // namespace

std::string nu_prefix(std::size_t d) {
  std::string out;
  out.reserve(d);
  for (std::size_t run = 1; out.size() < d; ++run) {
    for (std::size_t i = 0; i < run && out.size() < d; ++i) out.push_back('0');
    for (std::size_t i = 0; i < run && out.size() < d; ++i) out.push_back('1');
  }
  return out;
}

std::string morphism_image(unsigned c, unsigned sigma) {
  if (c < 1 || c > sigma) throw std::invalid_argument("morphism symbol out of range");
  std::string out;
  out.append(c, '1');
  out.push_back('0');
  out.append(sigma - c, '1');
  out += "1001";
  out.append(sigma - c, '1');
  out.push_back('0');
  out.append(c, '1');
  return out;
}

std::string morphism_encode(std::span<const unsigned> s, unsigned sigma) {
  std::string out;
  out.reserve(s.size() * (2 * sigma + 6));
  for (unsigned c : s) out += morphism_image(c, sigma);
  return out;
}

std::string generate(const GenSpec& spec) {
  std::mt19937_64 gen(spec.seed);
  std::string out;
  switch (spec.kind) {
    case GenKind::random:
      check_alphabet(spec.alphabet);
      out.resize(spec.length);
      for (char& ch : out) ch = letter(gen, spec.alphabet);
      return out;
    case GenKind::periodic:
      if (spec.period.empty()) throw std::invalid_argument("periodic spec needs a nonempty word");
      out.resize(spec.length);
      for (std::size_t i = 0; i < spec.length; ++i) out[i] = spec.period[i % spec.period.size()];
      return out;
    case GenKind::nu:
      return nu_prefix(spec.length);
    case GenKind::planted: {
      check_alphabet(spec.alphabet);
      if (spec.planted_pos + spec.planted_len > spec.length)
        throw std::invalid_argument("planted palindrome does not fit");
      out.resize(spec.length);
      for (char& ch : out) ch = letter(gen, spec.alphabet);
      for (std::size_t i = 0; i < spec.planted_len / 2; ++i) {
        char ch = letter(gen, spec.alphabet);
        out[spec.planted_pos + i] = ch;
        out[spec.planted_pos + spec.planted_len - 1 - i] = ch;
      }
      return out;
    }
    case GenKind::morphism: {
      if (spec.sigma < 1) throw std::invalid_argument("sigma must be positive");
      std::vector<unsigned> src = spec.source;
      if (src.empty()) {
        src.resize(spec.length);
        for (unsigned& c : src) c = 1 + static_cast<unsigned>(gen() % spec.sigma);
      }
      return morphism_encode(src, spec.sigma);
    }
  }
  throw std::invalid_argument("unknown generator kind");
}

const char* to_string(GenKind k) {
  switch (k) {
    case GenKind::random: return "random";
    case GenKind::periodic: return "periodic";
    case GenKind::nu: return "nu";
    case GenKind::planted: return "planted";
    case GenKind::morphism: return "morphism";
  }
  return "?";
}

GenKind gen_kind_from(const std::string& name) {
  for (GenKind k : {GenKind::random, GenKind::periodic, GenKind::nu, GenKind::planted, GenKind::morphism})
    if (name == to_string(k)) return k;
  throw std::invalid_argument("unknown generator kind: " + name);
}

void to_json(nlohmann::json& j, const GenSpec& g) {
  j = nlohmann::json{{"kind", to_string(g.kind)}, {"length", g.length},   {"alphabet", g.alphabet},
                     {"seed", g.seed},            {"period", g.period},   {"planted_len", g.planted_len},
                     {"planted_pos", g.planted_pos}, {"source", g.source}, {"sigma", g.sigma}};
}

void from_json(const nlohmann::json& j, GenSpec& g) {
  g = GenSpec{};
  if (j.contains("kind")) g.kind = gen_kind_from(j.at("kind").get<std::string>());
  if (j.contains("length")) j.at("length").get_to(g.length);
  if (j.contains("alphabet")) j.at("alphabet").get_to(g.alphabet);
  if (j.contains("seed")) j.at("seed").get_to(g.seed);
  if (j.contains("period")) j.at("period").get_to(g.period);
  if (j.contains("planted_len")) j.at("planted_len").get_to(g.planted_len);
  if (j.contains("planted_pos")) j.at("planted_pos").get_to(g.planted_pos);
  if (j.contains("source")) j.at("source").get_to(g.source);
  if (j.contains("sigma")) j.at("sigma").get_to(g.sigma);
}

}  // namespace palstream
