#include "braidspan/cli.hpp"

#include <stdexcept>

#include "braidspan/dual_garside.hpp"
#include "braidspan/lawrence_rep.hpp"
#include "braidspan/length_detect.hpp"
#include "braidspan/quantum_rep.hpp"

namespace braidspan {

void validate(const RunConfig& cfg) {
  if (cfg.n < 2) throw std::invalid_argument("--n must be at least 2");
  if (cfg.m < 0) throw std::invalid_argument("--m must be nonnegative");
  if (cfg.count < 1) throw std::invalid_argument("--count must be at least 1");
  if (cfg.maxlen < 1) throw std::invalid_argument("--maxlen must be at least 1");
}

std::uint64_t SplitMix64::next() {
  state_ += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::vector<BraidWord> generate_words(int n, std::uint64_t seed, int count, int maxlen) {
  SplitMix64 rng(seed);
  const std::uint64_t letters = 2 * static_cast<std::uint64_t>(n - 1);
  std::vector<BraidWord> out;
  out.reserve(count);
  for (int w = 0; w < count; ++w) {
    const int len = 1 + static_cast<int>(rng.next() % static_cast<std::uint64_t>(maxlen));
    std::vector<int> word;
    for (int k = 0; k < len; ++k) {
      const auto r = static_cast<int>(rng.next() % letters);
      word.push_back((r % 2 == 1 ? 1 : -1) * (r / 2 + 1));
    }
    out.emplace_back(n, std::move(word));
  }
  return out;
}

json cmd_nf(const RunConfig& cfg) {
  validate(cfg);
  const NormalForm nf = normal_form(parse_word(cfg.word, cfg.n));
  json doc = to_json(nf);
  doc.erase("n");
  doc.update(to_json(sup_inf_len(nf)));
  return doc;
}

json cmd_rep(const RunConfig& cfg) {
  validate(cfg);
  const BraidWord w = parse_word(cfg.word, cfg.n);
  RepMatrix mat;
  if (cfg.flavor == "V") {
    mat = rho_v_word(cfg.n, cfg.m, w);
  } else if (cfg.flavor == "W") {
    mat = rho_w_word(cfg.n, cfg.m, w);
  } else if (cfg.flavor == "L") {
    mat = lawrence_matrix(cfg.n, cfg.m, w);
  } else {
    throw std::invalid_argument("--flavor must be V, W or L");
  }
  const bool homological = mat.flavor == Flavor::L;
  const Span span = matrix_degree_span(mat, homological ? Variable::qh : Variable::s);
  json doc = to_json(mat);
  doc["spans"] = {{homological ? "qh" : "s", json::array({span.min, span.max})}};
  return doc;
}

CommandResult cmd_verify(const RunConfig& cfg) {
  validate(cfg);
  if (cfg.m < 2 && !cfg.report_only)
    throw std::invalid_argument("verify gates need --m >= 2; pass --report-only to inspect m < 2");
  const auto words = generate_words(cfg.n, cfg.seed, cfg.count, cfg.maxlen);

  const auto reports = claims_suite(cfg.n, cfg.m, words, cfg.threads);

  json table = json::array();
  int failures = 0;
  for (const auto& r : reports) {
    if (!r.gate()) ++failures;
    table.push_back(to_json(r));
  }
  CommandResult res;
  res.doc = {{"n", cfg.n},       {"m", cfg.m},           {"seed", cfg.seed},
             {"count", cfg.count}, {"maxlen", cfg.maxlen}, {"report_only", cfg.report_only},
             {"gate_failures", failures}, {"reports", table}};
  res.exit_code = (failures > 0 && !cfg.report_only) ? 1 : 0;
  return res;
}

json cmd_simples(const RunConfig& cfg) {
  validate(cfg);
  json list = json::array();
  for (const auto& x : enumerate_simples(cfg.n)) list.push_back(blocks_to_json(x));
  return {{"n", cfg.n}, {"count", list.size()}, {"simples", list}};
}

json cmd_oracle(const RunConfig& cfg) {
  validate(cfg);
  const BraidWord w = parse_word(cfg.word, cfg.n);
  const auto [inf, sup] = sup_inf_oracle(w, cfg.limit);
  return {{"n", cfg.n}, {"word", to_json(w)}, {"inf", inf}, {"sup", sup}, {"len", garside_length(inf, sup)}};
}

CommandResult run_command(const RunConfig& cfg) {
  if (cfg.subcommand == "verify") return cmd_verify(cfg);
  if (cfg.subcommand == "nf") return {cmd_nf(cfg), 0};
  if (cfg.subcommand == "rep") return {cmd_rep(cfg), 0};
  if (cfg.subcommand == "simples") return {cmd_simples(cfg), 0};
  if (cfg.subcommand == "oracle") return {cmd_oracle(cfg), 0};
  throw std::invalid_argument("unknown subcommand '" + cfg.subcommand + "'");
}

}  // namespace braidspan
