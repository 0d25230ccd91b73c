#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <random>

#include "palstream/genlib.hpp"
#include "palstream/oracle.hpp"

using namespace palstream;

namespace {

// The nu word built straight from its run-length definition.
std::string nu_by_runs(std::size_t d) {
  std::string s;
  for (std::size_t r = 1; s.size() < d; ++r) s += std::string(r, '0') + std::string(r, '1');
  return s.substr(0, d);
}

}  // namespace

TEST_CASE("nu prefixes") {
  CHECK(nu_prefix(10) == "0100110001");
  CHECK(nu_prefix(1000) == nu_by_runs(1000));
  GenSpec g;
  g.kind = GenKind::nu;
  g.length = 4096;
  u64 longest = manacher_longest(generate(g));
  MESSAGE("longest palindrome in nu(4096): " << longest);
  CHECK(longest <= 10 * 64);
}

TEST_CASE("morphism images") {
  CHECK(morphism_image(1, 1) == "10100101");
  for (unsigned sigma = 1; sigma <= 6; ++sigma)
    for (unsigned c = 1; c <= sigma; ++c) {
      std::string im = morphism_image(c, sigma);
      CHECK(im.size() == 2 * sigma + 6);
      CHECK(std::equal(im.begin(), im.end(), im.rbegin()));
    }
  CHECK_THROWS_AS(morphism_image(0, 2), std::invalid_argument);
  CHECK_THROWS_AS(morphism_image(3, 2), std::invalid_argument);
}

TEST_CASE("morphism scaling") {
  // Exact scaling fails because neighbouring images share palindromic
  // borders; the floor of the ratio recovers the source answer.
  std::mt19937_64 rng(12);
  const unsigned sigma = 4;
  u64 exact = 0, floor_ok = 0;
  for (int t = 0; t < 100; ++t) {
    std::vector<unsigned> src(1 + rng() % 40);
    Text st;
    for (auto& c : src) {
      c = 1 + rng() % sigma;
      st.push_back(c);
    }
    u64 a = manacher_longest(st), b = manacher_longest(morphism_encode(src, sigma));
    if (b == (2 * sigma + 6) * a) ++exact;
    if (b / (2 * sigma + 6) == a) ++floor_ok;
  }
  MESSAGE("exact scaling held on " << exact << " of 100 words");
  CHECK(floor_ok == 100);
}

TEST_CASE("generators are deterministic and valid") {
  GenSpec g;
  g.length = 500;
  g.alphabet = 4;
  g.seed = 9;
  CHECK(generate(g) == generate(g));
  for (char c : generate(g)) CHECK((c >= 'a' && c <= 'd'));

  GenSpec p;
  p.kind = GenKind::periodic;
  p.length = 7;
  p.period = "aab";
  CHECK(generate(p) == "aabaaba");

  GenSpec pl;
  pl.kind = GenKind::planted;
  pl.length = 1000;
  pl.planted_len = 64;
  pl.planted_pos = 200;
  std::string s = generate(pl);
  CHECK(manacher_longest(s) >= 64);
  std::string mid = s.substr(200, 64);
  CHECK(std::equal(mid.begin(), mid.end(), mid.rbegin()));

  GenSpec bad;
  bad.alphabet = 1;
  CHECK_THROWS_AS(generate(bad), std::invalid_argument);
  pl.planted_pos = 950;
  CHECK_THROWS_AS(generate(pl), std::invalid_argument);
  CHECK_THROWS_AS(gen_kind_from("zigzag"), std::invalid_argument);
}

TEST_CASE("spec round trip through JSON") {
  GenSpec g;
  g.kind = GenKind::morphism;
  g.source = {1, 2, 2, 1};
  g.sigma = 2;
  nlohmann::json j = g;
  GenSpec back = j.get<GenSpec>();
  CHECK(generate(back) == generate(g));
  CHECK(j.at("kind") == "morphism");
}
