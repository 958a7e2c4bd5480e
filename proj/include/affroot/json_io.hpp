// JSON encodings for root systems, elements, parameters, views and words.

#pragma once

#include <json.hpp>

#include "affroot/words.hpp"

namespace affroot {

using Json = nlohmann::json;

// {"type":"A2","roots":[[1,0],...],"gram":[[[2,1],[-1,1]],...]}
Json to_json(const RootSystem& rs);
Json to_json(const IndexSet& s);
IndexSet index_set_from_json(const Json& j);

Json to_json(const Root& r);
Root root_from_json(const Json& j, int rank);
Json to_json(const RootSet& s);
RootSet root_set_from_json(const Json& j, int rank);

// {"level":m,"classical":[...]} with classical null for m delta.
Json to_json(const AffineRoot& b);
AffineRoot affine_root_from_json(const Json& j, int rank);
Json to_json(const AffineRootSet& s);
AffineRootSet affine_root_set_from_json(const Json& j, int rank);

// {"c":j} or {"a":c}
Json to_json(const AffineLetter& s);
AffineLetter letter_from_json(const Json& j);
Json to_json(const AffineWord& w);
AffineWord word_from_json(const Json& j);

// {"type":"A2","word":[1,2]}
Json to_json(const WeylElement& w);
WeylElement weyl_from_json(const Json& j, RootSystemPtr system);
// {"lambda":[...],"wbar":[...]}
Json to_json(const AffineWeylElement& x);
AffineWeylElement affine_element_from_json(const Json& j, RootSystemPtr system);

// {"J":[...],"K":[...],"u":[word],"y":{"lambda":[...],"wbar":[word]}}
Json to_json(const BiconvexParam& p);
BiconvexParam param_from_json(const Json& j, RootSystemPtr system);

// {"J":[...],"tail":[[...],...],"finite":[affine roots],"cutoff":N}
Json to_json(const BiconvexSetView& v);
BiconvexSetView view_from_json(const Json& j, int rank);

// {"J":[...],"head":[letters],"period":[letters]}
Json to_json(const InfiniteWord& s);
InfiniteWord infinite_word_from_json(const Json& j);

}  // namespace affroot
