#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "braidspan/braid_word.hpp"
#include "braidspan/json_io.hpp"

namespace braidspan {

struct RunConfig {
  std::string subcommand;
  int n = 3;
  int m = 2;
  std::string word;
  std::string flavor = "V";
  std::uint64_t seed = 1;
  int count = 1;
  int maxlen = 8;
  int limit = 6;             // oracle search bound
  bool report_only = false;  // verify: allow m < 2, never gate
  int threads = 0;           // 0 = hardware concurrency
  std::string out;           // empty = standard output
};

// Throws std::invalid_argument on an unusable configuration.
void validate(const RunConfig& cfg);

/// SplitMix64. state += 0x9E3779B97F4A7C15, then
///   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
///   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
///   return z ^ (z >> 31)
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();

 private:
  std::uint64_t state_;
};

// Per word: length = 1 + next() % maxlen, then per letter r = next() % (2(n-1))
// picks from (s1^-1, s1, s2^-1, s2, ...): generator r/2 + 1, positive iff r is odd.
std::vector<BraidWord> generate_words(int n, std::uint64_t seed, int count, int maxlen);

struct CommandResult {
  json doc;
  int exit_code = 0;
};

json cmd_nf(const RunConfig& cfg);
json cmd_rep(const RunConfig& cfg);
// Exit code 0 iff the gate (C1, C2a, C3, C4, C5) holds on every word; always 0 in report-only mode.
CommandResult cmd_verify(const RunConfig& cfg);
json cmd_simples(const RunConfig& cfg);
json cmd_oracle(const RunConfig& cfg);

CommandResult run_command(const RunConfig& cfg);

}  // namespace braidspan
