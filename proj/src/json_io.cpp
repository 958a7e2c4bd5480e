#include "affroot/json_io.hpp"

#include <stdexcept>

namespace affroot {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw std::invalid_argument(std::string("missing JSON field '") + key + "'");
  return j.at(key);
}

std::vector<int> int_list(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected a JSON array of integers");
  std::vector<int> out;
  for (const Json& e : j) {
    if (!e.is_number_integer()) throw std::invalid_argument("expected a JSON array of integers");
    out.push_back(e.get<int>());
  }
  return out;
}

}  // namespace

Json to_json(const RootSystem& rs) {
  Json roots = Json::array();
  for (const Root& r : rs.roots()) roots.push_back(r.coords());
  Json gram = Json::array();
  for (const auto& row : rs.gram()) {
    Json jr = Json::array();
    for (const Rational& q : row) jr.push_back({q.numerator(), q.denominator()});
    gram.push_back(jr);
  }
  return {{"type", rs.type_label()}, {"roots", roots}, {"gram", gram}};
}

Json to_json(const IndexSet& s) { return s.values(); }

IndexSet index_set_from_json(const Json& j) { return IndexSet(int_list(j)); }

Json to_json(const Root& r) { return r.coords(); }

Root root_from_json(const Json& j, int rank) {
  std::vector<int> c = int_list(j);
  if (static_cast<int>(c.size()) != rank) throw std::invalid_argument("root has the wrong rank");
  return Root(std::move(c));
}

Json to_json(const RootSet& s) {
  Json out = Json::array();
  for (const Root& r : s) out.push_back(to_json(r));
  return out;
}

RootSet root_set_from_json(const Json& j, int rank) {
  if (!j.is_array()) throw std::invalid_argument("expected an array of roots");
  RootSet out;
  for (const Json& e : j) out.insert(root_from_json(e, rank));
  return out;
}

Json to_json(const AffineRoot& b) {
  Json c = b.classical.is_zero() ? Json(nullptr) : to_json(b.classical);
  return {{"level", b.level}, {"classical", c}};
}

AffineRoot affine_root_from_json(const Json& j, int rank) {
  const Json& lvl = field(j, "level");
  if (!lvl.is_number_integer()) throw std::invalid_argument("level must be an integer");
  const Json& c = field(j, "classical");
  if (c.is_null()) return AffineRoot::imaginary(rank, lvl.get<int>());
  return {lvl.get<int>(), root_from_json(c, rank)};
}

Json to_json(const AffineRootSet& s) {
  Json out = Json::array();
  for (const AffineRoot& b : s) out.push_back(to_json(b));
  return out;
}

AffineRootSet affine_root_set_from_json(const Json& j, int rank) {
  if (!j.is_array()) throw std::invalid_argument("expected an array of affine roots");
  AffineRootSet out;
  for (const Json& e : j) out.insert(affine_root_from_json(e, rank));
  return out;
}

Json to_json(const AffineLetter& s) { return {{s.is_affine() ? "a" : "c", s.index}}; }

AffineLetter letter_from_json(const Json& j) {
  if (j.is_object() && j.size() == 1) {
    if (j.contains("c") && j["c"].is_number_integer()) return AffineLetter::classical(j["c"].get<int>());
    if (j.contains("a") && j["a"].is_number_integer()) return AffineLetter::affine(j["a"].get<int>());
  }
  throw std::invalid_argument("letters are {\"c\":j} or {\"a\":c}");
}

Json to_json(const AffineWord& w) {
  Json out = Json::array();
  for (const AffineLetter& s : w) out.push_back(to_json(s));
  return out;
}

AffineWord word_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected an array of letters");
  AffineWord out;
  for (const Json& e : j) out.push_back(letter_from_json(e));
  return out;
}

Json to_json(const WeylElement& w) {
  return {{"type", w.system()->type_label()}, {"word", w.word()}};
}

WeylElement weyl_from_json(const Json& j, RootSystemPtr system) {
  const Json& w = j.is_array() ? j : field(j, "word");
  return WeylElement::from_word(std::move(system), int_list(w));
}

Json to_json(const AffineWeylElement& x) {
  return {{"lambda", x.lambda().coords()}, {"wbar", x.wbar().word()}};
}

AffineWeylElement affine_element_from_json(const Json& j, RootSystemPtr system) {
  std::vector<int> lam = int_list(field(j, "lambda"));
  if (static_cast<int>(lam.size()) != system->rank())
    throw std::invalid_argument("lambda has the wrong rank");
  WeylElement w = WeylElement::from_word(system, int_list(field(j, "wbar")));
  return {CorootVector(std::move(lam)), std::move(w)};
}

Json to_json(const BiconvexParam& p) {
  return {{"J", to_json(p.J)}, {"K", to_json(p.K)}, {"u", p.u.word()}, {"y", to_json(p.y)}};
}

BiconvexParam param_from_json(const Json& j, RootSystemPtr system) {
  BiconvexParam p;
  p.J = index_set_from_json(field(j, "J"));
  p.K = index_set_from_json(field(j, "K"));
  p.u = WeylElement::from_word(system, int_list(field(j, "u")));
  p.y = j.contains("y") ? affine_element_from_json(j.at("y"), system)
                        : AffineWeylElement::identity(system);
  p.validate(sub_system(system, p.J));
  return p;
}

Json to_json(const BiconvexSetView& v) {
  return {{"J", to_json(v.J)}, {"tail", to_json(v.tail)}, {"finite", to_json(v.finite)},
          {"cutoff", v.cutoff}};
}

BiconvexSetView view_from_json(const Json& j, int rank) {
  BiconvexSetView v;
  v.J = index_set_from_json(field(j, "J"));
  v.tail = root_set_from_json(field(j, "tail"), rank);
  v.finite = affine_root_set_from_json(field(j, "finite"), rank);
  const Json& c = field(j, "cutoff");
  if (!c.is_number_integer() || c.get<int>() < 0) throw std::invalid_argument("cutoff must be >= 0");
  v.cutoff = c.get<int>();
  return v;
}

Json to_json(const InfiniteWord& s) {
  return {{"J", to_json(s.J)}, {"head", to_json(s.head)}, {"period", to_json(s.period)}};
}

InfiniteWord infinite_word_from_json(const Json& j) {
  return {index_set_from_json(field(j, "J")), word_from_json(field(j, "head")),
          word_from_json(field(j, "period"))};
}

}  // namespace affroot
