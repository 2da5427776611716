#pragma once

#include <json.hpp>

#include "braidspan/braid_word.hpp"
#include "braidspan/dual_garside.hpp"
#include "braidspan/laurent.hpp"
#include "braidspan/length_detect.hpp"
#include "braidspan/quantum_rep.hpp"

// JSON forms. Term keys are "qe"/"se" over (q,s) and "qhe"/"the" over
// (qh,th); coefficients are decimal strings.

namespace braidspan {

using nlohmann::json;

json to_json(const LaurentPoly& p);
// An empty term list carries no tag, hence the explicit default.
LaurentPoly poly_from_json(const json& j, VarPair if_empty = VarPair::qs);

json to_json(const BraidWord& w);
BraidWord word_from_json(const json& j, int n);

json blocks_to_json(const SimpleElement& x);
SimpleElement simple_from_json(const json& j, int n);

// {"n":3,"delta_power":-1,"factors":[[[1,3],[2]]]}
json to_json(const NormalForm& nf);
// `n` is used when the document has no "n" key (the nf command omits it).
NormalForm normal_form_from_json(const json& j, int n = 0);

json to_json(const GarsideBounds& b);

// {"flavor":"V","n":2,"m":1,"basis":[[1,0],[0,1]],"entries":[{"row":0,"col":0,"terms":[...]}]}
// Only nonzero entries are listed.
json to_json(const RepMatrix& mat);
RepMatrix rep_matrix_from_json(const json& j);

json to_json(const ClaimsReport& r);
ClaimsReport claims_from_json(const json& j);

}  // namespace braidspan
