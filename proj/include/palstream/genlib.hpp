#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "palstream/oracle.hpp"

namespace palstream {

enum class GenKind { random, periodic, nu, planted, morphism };

struct GenSpec {
  GenKind kind = GenKind::random;
  std::size_t length = 0;
  unsigned alphabet = 2;
  u64 seed = 0;
  std::string period = "ab";         // periodic
  std::size_t planted_len = 0;       // planted
  std::size_t planted_pos = 0;       // planted, 0-based start
  std::vector<unsigned> source;      // morphism; random word of `length` symbols if empty
  unsigned sigma = 2;                // morphism
};

std::string generate(const GenSpec& spec);
std::string nu_prefix(std::size_t d);
// Image of s (symbols 1..sigma) under the palindromic alphabet-reduction map.
std::string morphism_encode(std::span<const unsigned> s, unsigned sigma);
std::string morphism_image(unsigned c, unsigned sigma);

const char* to_string(GenKind k);
GenKind gen_kind_from(const std::string& name);

void to_json(nlohmann::json& j, const GenSpec& g);
void from_json(const nlohmann::json& j, GenSpec& g);

}  // namespace palstream
