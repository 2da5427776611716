#include "braidspan/json_io.hpp"

#include <stdexcept>
#include <string>

namespace braidspan {

namespace {

const char* first_key(VarPair v) { return v == VarPair::qs ? "qe" : "qhe"; }
const char* second_key(VarPair v) { return v == VarPair::qs ? "se" : "the"; }

Flavor flavor_from_name(const std::string& s) {
  if (s == "V") return Flavor::V;
  if (s == "W") return Flavor::W;
  if (s == "L") return Flavor::L;
  throw std::invalid_argument("unknown flavor '" + s + "'");
}

json span_json(const Span& s) { return json::array({s.min, s.max}); }
Span span_from(const json& j) { return {j.at(0).get<int>(), j.at(1).get<int>()}; }

}  // namespace

json to_json(const LaurentPoly& p) {
  json out = json::array();
  const char* ka = first_key(p.vars());
  const char* kb = second_key(p.vars());
  for (const Term& t : p.terms()) out.push_back({{ka, t.a}, {kb, t.b}, {"c", t.c.get_str()}});
  return out;
}

LaurentPoly poly_from_json(const json& j, VarPair if_empty) {
  if (!j.is_array()) throw std::invalid_argument("polynomial must be a JSON array of terms");
  if (j.empty()) return LaurentPoly(if_empty);
  const VarPair vars = j.front().contains("qe") ? VarPair::qs : VarPair::qhth;
  std::vector<Term> terms;
  for (const json& t : j) {
    Term term;
    term.a = t.at(first_key(vars)).get<int>();
    term.b = t.at(second_key(vars)).get<int>();
    term.c = BigInt(t.at("c").get<std::string>());
    terms.push_back(std::move(term));
  }
  return LaurentPoly::from_terms(std::move(terms), vars);
}

json to_json(const BraidWord& w) { return w.letters; }

BraidWord word_from_json(const json& j, int n) { return BraidWord(n, j.get<std::vector<int>>()); }

json blocks_to_json(const SimpleElement& x) { return x.blocks(); }

SimpleElement simple_from_json(const json& j, int n) {
  return SimpleElement::from_blocks(n, j.get<std::vector<Block>>());
}

json to_json(const NormalForm& nf) {
  json factors = json::array();
  for (const auto& x : nf.factors) factors.push_back(blocks_to_json(x));
  return {{"n", nf.n}, {"delta_power", nf.delta_power}, {"factors", factors}};
}

NormalForm normal_form_from_json(const json& j, int n) {
  NormalForm nf;
  nf.n = j.contains("n") ? j.at("n").get<int>() : n;
  if (nf.n < 1) throw std::invalid_argument("normal form needs a strand count");
  nf.delta_power = j.at("delta_power").get<int>();
  for (const json& f : j.at("factors")) nf.factors.push_back(simple_from_json(f, nf.n));
  return nf;
}

json to_json(const GarsideBounds& b) { return {{"inf", b.inf}, {"sup", b.sup}, {"len", b.len}}; }

json to_json(const RepMatrix& mat) {
  json entries = json::array();
  for (int r = 0; r < mat.entries.rows(); ++r)
    for (int c = 0; c < mat.entries.cols(); ++c)
      if (!mat.entries(r, c).is_zero())
        entries.push_back({{"row", r}, {"col", c}, {"terms", to_json(mat.entries(r, c))}});
  return {{"flavor", flavor_name(mat.flavor)},
          {"n", mat.n},
          {"m", mat.m},
          {"basis", mat.basis},
          {"entries", entries}};
}

RepMatrix rep_matrix_from_json(const json& j) {
  RepMatrix mat;
  mat.flavor = flavor_from_name(j.at("flavor").get<std::string>());
  mat.n = j.at("n").get<int>();
  mat.m = j.at("m").get<int>();
  mat.basis = j.at("basis").get<std::vector<WeightIndex>>();
  const int dim = static_cast<int>(mat.basis.size());
  const VarPair vars = mat.flavor == Flavor::L ? VarPair::qhth : VarPair::qs;
  mat.entries = PolyMatrix(dim, dim, vars);
  for (const json& e : j.at("entries")) {
    const int r = e.at("row").get<int>();
    const int c = e.at("col").get<int>();
    if (r < 0 || r >= dim || c < 0 || c >= dim) throw std::invalid_argument("matrix entry out of range");
    mat.entries(r, c) = poly_from_json(e.at("terms"), vars);
  }
  return mat;
}

json to_json(const ClaimsReport& r) {
  return {{"word", to_json(r.word)},
          {"n", r.n},
          {"m", r.m},
          {"inf", r.garside.inf},
          {"sup", r.garside.sup},
          {"len", r.garside.len},
          {"spans", {{"v_s", span_json(r.v_s)}, {"w_s", span_json(r.w_s)}, {"l_qh", span_json(r.l_qh)}}},
          {"claims",
           {{"C1", r.c1}, {"C2a", r.c2a}, {"C2b", r.c2b}, {"C3", r.c3}, {"C4", r.c4}, {"C5", r.c5}, {"C6", r.c6}}},
          {"checks",
           {{"C3_clamped", r.c3_clamped},
            {"C6_clamped", r.c6_clamped},
            {"degree_chain", r.degree_chain},
            {"submatrix_inclusion", r.submatrix_inclusion},
            {"divisible", r.divisible},
            {"degree_transfer", r.degree_transfer},
            {"length_formula", r.length_formula},
            {"cancellations", r.cancellations}}},
          {"gate", r.gate()}};
}

ClaimsReport claims_from_json(const json& j) {
  ClaimsReport r;
  r.n = j.at("n").get<int>();
  r.m = j.at("m").get<int>();
  r.word = word_from_json(j.at("word"), r.n);
  r.garside = {j.at("inf").get<int>(), j.at("sup").get<int>(), j.at("len").get<int>()};
  const json& spans = j.at("spans");
  r.v_s = span_from(spans.at("v_s"));
  r.w_s = span_from(spans.at("w_s"));
  r.l_qh = span_from(spans.at("l_qh"));
  const json& c = j.at("claims");
  r.c1 = c.at("C1");
  r.c2a = c.at("C2a");
  r.c2b = c.at("C2b");
  r.c3 = c.at("C3");
  r.c4 = c.at("C4");
  r.c5 = c.at("C5");
  r.c6 = c.at("C6");
  const json& k = j.at("checks");
  r.c3_clamped = k.at("C3_clamped");
  r.c6_clamped = k.at("C6_clamped");
  r.degree_chain = k.at("degree_chain");
  r.submatrix_inclusion = k.at("submatrix_inclusion");
  r.divisible = k.at("divisible");
  r.degree_transfer = k.at("degree_transfer");
  r.length_formula = k.at("length_formula");
  r.cancellations = k.at("cancellations");
  return r;
}

}  // namespace braidspan
