#include "braidspan/length_detect.hpp"

#include <algorithm>
#include <future>
#include <string>
#include <thread>

#include "braidspan/lawrence_rep.hpp"

namespace braidspan {

Span matrix_degree_span(const RepMatrix& mat, Variable which) {
  const auto [lo, hi] = degree_span(mat.entries, which);
  return {lo, hi};
}

namespace {

int exact_div(int num, int den, const char* what) {
  if (num % den != 0)
    throw LengthFormulaError(std::string(what) + ": " + std::to_string(num) +
                             " is not divisible by " + std::to_string(den));
  return num / den;
}

}  // namespace

GarsideBounds garside_from_lawrence(int n, int m, const BraidWord& w) {
  if (m < 2) throw std::invalid_argument("garside_from_lawrence requires m >= 2");
  const Span span = matrix_degree_span(lawrence_matrix(n, m, w), Variable::qh);
  const int sup = exact_div(-span.min, m, "sup from m_qh(L)");
  const int inf = exact_div(-span.max, m, "inf from M_qh(L)");
  return {inf, sup, garside_length(inf, sup)};
}

ClaimsReport claims_matrix(int n, int m, const BraidWord& w) {
  if (m < 1) throw std::invalid_argument("claims_matrix requires m >= 1");
  ClaimsReport r;
  r.word = w;
  r.n = n;
  r.m = m;
  r.garside = sup_inf_len(normal_form(w));

  const RepMatrix v = rho_v_word(n, m, w);
  const RepMatrix wm = null_vector_matrix(v);
  const RepMatrix l = specialize_matrix(wm);
  r.v_s = matrix_degree_span(v, Variable::s);
  r.w_s = matrix_degree_span(wm, Variable::s);
  r.l_qh = matrix_degree_span(l, Variable::qh);

  const int sup = r.garside.sup;
  const int inf = r.garside.inf;
  r.c1 = r.l_qh.min == -m * sup;
  r.c2a = r.l_qh.max == -m * inf;
  r.c2b = r.l_qh.max == m * inf;
  r.c3 = r.v_s.min == -2 * m * sup;
  r.c4 = r.w_s.min == -2 * m * sup;
  r.c5 = r.w_s.max == -2 * m * inf;
  r.c6 = r.v_s.max == -2 * m * inf;
  r.c3_clamped = r.v_s.min == -2 * m * std::max(sup, 0);
  r.c6_clamped = r.v_s.max == -2 * m * std::min(inf, 0);

  r.degree_chain = r.v_s.min <= 2 * r.l_qh.min && r.l_qh.min <= r.l_qh.max &&
                  2 * r.l_qh.max <= r.v_s.max;
  r.submatrix_inclusion = r.v_s.min <= r.w_s.min && r.w_s.max <= r.v_s.max;
  r.divisible = r.l_qh.min % m == 0 && r.l_qh.max % m == 0 && r.v_s.min % (2 * m) == 0 &&
                r.w_s.min % (2 * m) == 0 && r.w_s.max % (2 * m) == 0;
  r.cancellations = specialization_cancellations(wm, l);
  r.degree_transfer = 2 * r.l_qh.min == r.w_s.min && 2 * r.l_qh.max == r.w_s.max;
  r.length_formula =
      m * r.garside.len == std::max(0, -r.l_qh.min) - std::min(0, -r.l_qh.max);
  return r;
}

std::vector<ClaimsReport> claims_suite(int n, int m, const std::vector<BraidWord>& words, int threads) {
  std::vector<ClaimsReport> reports(words.size());
  if (words.empty()) return reports;
  unsigned workers = threads > 0 ? static_cast<unsigned>(threads) : std::thread::hardware_concurrency();
  workers = std::clamp<unsigned>(workers, 1, static_cast<unsigned>(words.size()));
  std::vector<std::future<void>> jobs;
  for (unsigned t = 0; t < workers; ++t)
    jobs.push_back(std::async(std::launch::async, [&, t] {
      for (std::size_t k = t; k < words.size(); k += workers) reports[k] = claims_matrix(n, m, words[k]);
    }));
  for (auto& j : jobs) j.get();
  return reports;
}

}  // namespace braidspan
