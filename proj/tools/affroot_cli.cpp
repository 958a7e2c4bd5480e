// affroot: command-line front end.
//
//   affroot roots --type A2 --cutoff 1
//   affroot biconvex nabla --type A1 --param '{"J":[1],"K":[],"u":[],"y":{"lambda":[0],"wbar":[]}}' -N 3
//   affroot word make --type A2 --K 1
//   affroot verify word-realization --type A1 --len 4 --cutoff 6
//
// Exit status: 0 success, 1 counterexample found, 2 usage error or refusal.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "affroot/format.hpp"
#include "affroot/json_io.hpp"
#include "affroot/verify.hpp"

using namespace affroot;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string type = "A1";
  std::string J;
  std::string K;
  int cutoff = -1;
  int len = -1;
  int samples = -1;
  int max_size = -1;
  unsigned seed = 1;
  std::string format = "json";
  std::string out;
  std::string param;
  std::string view;
  std::string word;
  std::string word2;
  std::string x;
  std::string weyl_word;
  std::string input;
};

Json read_json_arg(const std::string& text, const char* what) {
  if (text.empty()) throw UsageError(std::string("missing --") + what);
  std::string body = text;
  if (text.front() == '@') {
    std::ifstream in(text.substr(1));
    if (!in) throw UsageError("cannot read " + text.substr(1));
    std::stringstream ss;
    ss << in.rdbuf();
    body = ss.str();
  }
  try {
    return Json::parse(body);
  } catch (const Json::exception& e) {
    throw UsageError(std::string("--") + what + " is not valid JSON: " + e.what());
  }
}

RootSystemPtr system_of(const Options& o) {
  try {
    return build_root_system(o.type);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

IndexSet J_of(const Options& o, const RootSystem& rs) {
  IndexSet J = o.J.empty() ? IndexSet::full(rs.rank()) : parse_index_set(o.J);
  for (int j : J)
    if (j > rs.rank()) throw UsageError("index " + std::to_string(j) + " exceeds the rank");
  return J;
}

void emit(const Options& o, const Json& j, const std::string& table) {
  const std::string text = o.format == "table" ? table : j.dump(2) + "\n";
  std::cout << text;
  if (!o.out.empty()) {
    std::ofstream f(o.out);
    if (!f) throw UsageError("cannot write " + o.out);
    f << j.dump(2) << "\n";
  }
}

std::string param_line(const BiconvexParam& p) {
  std::ostringstream os;
  os << "J=" << to_string(p.J) << " K=" << to_string(p.K) << " u=" << Json(p.u.word()).dump()
     << " y.lambda=" << Json(p.y.lambda().coords()).dump() << " y.wbar=" << Json(p.y.wbar().word()).dump()
     << "\n";
  return os.str();
}

std::string word_line(const InfiniteWord& s) {
  return "J=" + to_string(s.J) + " head=[" + format_word(s.head) + "] period=(" + format_word(s.period) +
         ")\n";
}

int cmd_roots(const Options& o) {
  auto rs = system_of(o);
  IndexSet J = J_of(o, *rs);
  SubSystem sub = sub_system(rs, J);
  const int N = o.cutoff < 0 ? 1 : o.cutoff;
  Json comps = Json::array(), highs = Json::array();
  for (const IndexSet& c : sub.components) comps.push_back(to_json(c));
  for (const Root& h : sub.highest_roots) highs.push_back(to_json(h));
  Json roots = Json::array();
  for (const Root& r : sub.roots) roots.push_back(to_json(r));
  const AffineRootSet window = positive_window(sub, N);
  Json j = to_json(*rs);
  j["J"] = to_json(J);
  j["subsystem_roots"] = roots;
  j["components"] = comps;
  j["highest_roots"] = highs;
  j["cutoff"] = N;
  j["window"] = to_json(window);
  std::ostringstream t;
  t << "type " << rs->type_label() << ", J = " << to_string(J) << "\n";
  t << "gram:";
  for (const auto& row : rs->gram()) {
    t << " [";
    for (std::size_t i = 0; i < row.size(); ++i) t << (i ? " " : "") << to_string(row[i]);
    t << "]";
  }
  t << "\nroots of Delta_J (" << sub.roots.size() << "):";
  for (const Root& r : sub.roots) t << " " << format_root(r);
  t << "\ncomponents:";
  for (std::size_t c = 0; c < sub.components.size(); ++c)
    t << " " << to_string(sub.components[c]) << " theta=" << format_root(sub.highest_roots[c]);
  t << "\nwindow of Delta_J+ up to level " << N << " (" << window.size() << "):";
  for (const AffineRoot& b : window) t << " " << format_affine(b);
  t << "\n";
  emit(o, j, t.str());
  return 0;
}

int cmd_weyl(const Options& o) {
  auto rs = system_of(o);
  std::vector<int> word;
  {
    std::string cur;
    for (char c : o.weyl_word + ",") {
      if (c == ',' || c == ' ') {
        if (!cur.empty()) word.push_back(std::stoi(cur));
        cur.clear();
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        cur += c;
      } else {
        throw UsageError("--word takes simple reflection indices like 1,2,1");
      }
    }
  }
  WeylElement w = WeylElement::from_word(rs, word);
  RootSet inv = inversion_set(w, IndexSet::full(rs->rank()));
  Json imgs = Json::array();
  for (const Root& r : w.images()) imgs.push_back(to_json(r));
  Json j = to_json(w);
  j["length"] = w.length();
  j["images"] = imgs;
  j["inversion_set"] = to_json(inv);
  std::ostringstream t;
  t << "reduced word " << Json(w.word()).dump() << ", length " << w.length() << "\ninversion set "
    << format_set(inv) << "\n";
  emit(o, j, t.str());
  return 0;
}

int cmd_nabla(const Options& o) {
  auto rs = system_of(o);
  BiconvexParam p = param_from_json(read_json_arg(o.param, "param"), rs);
  SubSystem sub = sub_system(rs, p.J);
  const int N = o.cutoff < 0 ? p.u.length() + length_J(p.y, sub_system(rs, p.K)) + 1 : o.cutoff;
  BiconvexSetView v = nabla(p, sub, N);
  const AffineRootSet elems = v.truncate(N);
  Json j = to_json(v);
  j["elements"] = to_json(elems);
  j["infinite"] = v.is_infinite();
  emit(o, j, "tail " + format_set(v.tail) + "\nfinite " + format_set(v.finite) + "\nlevel <= " +
                 std::to_string(N) + ": " + format_set(elems) + "\n");
  return 0;
}

int cmd_parametrize(const Options& o) {
  auto rs = system_of(o);
  Json in = read_json_arg(o.view, "view");
  BiconvexParam p;
  if (in.contains("finite")) {
    BiconvexSetView v = view_from_json(in, rs->rank());
    p = parametrize(v, sub_system(rs, v.J));
  } else {
    IndexSet J = index_set_from_json(in.at("J"));
    int N = in.at("cutoff").get<int>();
    p = parametrize(affine_root_set_from_json(in.at("elements"), rs->rank()),
                    root_set_from_json(in.at("tail"), rs->rank()), sub_system(rs, J), N);
  }
  emit(o, to_json(p), param_line(p));
  return 0;
}

int cmd_classify(const Options& o) {
  auto rs = system_of(o);
  Json in = read_json_arg(o.input, "set");
  IndexSet J = index_set_from_json(in.at("J"));
  int N = in.at("cutoff").get<int>();
  SubSystem sub = sub_system(rs, J);
  BiconvexClassification c =
      classify_biconvex(affine_root_set_from_json(in.at("elements"), rs->rank()),
                        root_set_from_json(in.at("tail"), rs->rank()), sub, N);
  Json j = {{"kind", std::string(1, kind_tag(c.kind))}};
  std::string t = std::string("kind (") + kind_tag(c.kind) + ")\n";
  if (c.z) {
    j["z"] = to_json(*c.z);
    t += "z: lambda=" + Json(c.z->lambda().coords()).dump() + " wbar=" + Json(c.z->wbar().word()).dump() + "\n";
  }
  if (c.param) {
    j["param"] = to_json(*c.param);
    t += param_line(*c.param);
  }
  emit(o, j, t);
  return 0;
}

int cmd_enumerate(const Options& o) {
  auto rs = system_of(o);
  SubSystem sub = sub_system(rs, J_of(o, *rs));
  const int N = o.cutoff < 0 ? 1 : o.cutoff;
  const int max_size = o.max_size < 0 ? 3 : o.max_size;
  std::vector<AffineRootSet> sets;
  try {
    sets = enumerate_biconvex_bruteforce(sub, N, max_size);
  } catch (const std::length_error& e) {
    throw UsageError(std::string("refused: ") + e.what());
  }
  Json arr = Json::array();
  std::string t;
  for (const AffineRootSet& s : sets) {
    arr.push_back(to_json(s));
    t += format_set(s) + "\n";
  }
  emit(o, {{"J", to_json(sub.J)}, {"cutoff", N}, {"max_size", max_size}, {"count", sets.size()}, {"sets", arr}},
       t + std::to_string(sets.size()) + " biconvex sets\n");
  return 0;
}

InfiniteWord word_arg(const std::string& text, const char* what) {
  return infinite_word_from_json(read_json_arg(text, what));
}

AffineWeylElement x_arg(const Options& o, const SubSystem& sub) {
  if (o.x.empty()) throw UsageError("missing --x");
  if (o.x.front() == '{' || o.x.front() == '@')
    return affine_element_from_json(read_json_arg(o.x, "x"), sub.system);
  return word_element(sub, parse_word(o.x));
}

Json word_out(const InfiniteWord& s, const SubSystem& sub) {
  Json j = to_json(s);
  j["class"] = to_json(classify_word(s, sub).canonical_param);
  return j;
}

int cmd_word_make(const Options& o) {
  auto rs = system_of(o);
  if (!o.param.empty()) {
    BiconvexParam p = param_from_json(read_json_arg(o.param, "param"), rs);
    SubSystem sub = sub_system(rs, p.J);
    InfiniteWord s = chi(p, sub);
    emit(o, word_out(s, sub), word_line(s));
    return 0;
  }
  SubSystem sub = sub_system(rs, J_of(o, *rs));
  IndexSet K = parse_index_set(o.K);
  CorootVector lam = z_lambda(sub, K);
  InfiniteWord s = z_word(sub, K);
  Json j = word_out(s, sub);
  j["lambda"] = lam.coords();
  emit(o, j, word_line(s) + "lambda=" + Json(lam.coords()).dump() + "\n");
  return 0;
}

int cmd_word_act(const Options& o) {
  auto rs = system_of(o);
  InfiniteWord s = word_arg(o.word, "word");
  SubSystem sub = sub_system(rs, s.J);
  InfiniteWord t = act(x_arg(o, sub), s, sub);
  emit(o, word_out(t, sub), word_line(t));
  return 0;
}

int cmd_word_equiv(const Options& o) {
  auto rs = system_of(o);
  InfiniteWord a = word_arg(o.word, "word"), b = word_arg(o.word2, "other");
  SubSystem sub = sub_system(rs, a.J);
  WordClass ca = classify_word(a, sub), cb = classify_word(b, sub);
  const bool same = ca == cb;
  emit(o, {{"equivalent", same}, {"first", to_json(ca.canonical_param)}, {"second", to_json(cb.canonical_param)}},
       std::string(same ? "equivalent" : "not equivalent") + "\n");
  return 0;
}

int cmd_word_classify(const Options& o) {
  auto rs = system_of(o);
  InfiniteWord s = word_arg(o.word, "word");
  SubSystem sub = sub_system(rs, s.J);
  WordClass c = classify_word(s, sub);
  const BiconvexParam& p = c.canonical_param;
  Json j = {{"param", to_json(p)}, {"orbit", to_json(p.K)}, {"tail", to_json(pointed_biclosed(sub, p.K, p.u))}};
  emit(o, j, param_line(p) + "tail " + format_set(pointed_biclosed(sub, p.K, p.u)) + "\n");
  return 0;
}

int cmd_verify(const Options& o, const std::string& name) {
  auto suite = suite_from_name(name);
  if (!suite) throw UsageError("unknown suite '" + name + "'");
  auto rs = system_of(o);
  VerifyBounds b;
  if (o.len >= 0) b.len = o.len;
  if (o.cutoff >= 0) b.cutoff = o.cutoff;
  if (o.samples >= 0) b.samples = o.samples;
  if (o.max_size >= 0) b.max_size = o.max_size;
  b.seed = o.seed;
  VerifyReport r;
  try {
    r = run_suite(*suite, rs, b);
  } catch (const BoundsRefused& e) {
    throw UsageError(std::string("refused: ") + e.what());
  } catch (const std::length_error& e) {
    throw UsageError(std::string("refused: ") + e.what());
  }
  Json j = {{"suite", r.suite}, {"type", r.type}, {"passed", r.passed()}, {"checks", r.checks},
            {"failures", r.failures}, {"notes", r.notes}};
  std::ostringstream t;
  t << (r.passed() ? "PASS " : "FAIL ") << r.suite << " " << r.type << ": " << r.checks << " checks, "
    << r.failures.size() << " failures\n";
  for (const std::string& n : r.notes) t << "  " << n << "\n";
  for (const std::string& f : r.failures) t << "  counterexample: " << f << "\n";
  emit(o, j, t.str());
  return r.passed() ? 0 : 1;
}

void common(CLI::App* sc, Options& o) {
  sc->add_option("--type,-t", o.type, "root system type, e.g. A2, B3, G2");
  sc->add_option("--J", o.J, "subset J of simple indices, e.g. 1,2 (default: all)");
  sc->add_option("--format", o.format, "json or table")->check(CLI::IsMember({"json", "table"}));
  sc->add_option("--out", o.out, "also write the JSON result to this file");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations in untwisted affine root systems"};
  app.require_subcommand(1);
  Options o;
  std::string suite;

  auto* roots = app.add_subcommand("roots", "list Delta_J, components, highest roots and a window");
  common(roots, o);
  roots->add_option("--cutoff,-N", o.cutoff, "window level")->check(CLI::NonNegativeNumber);

  auto* weyl = app.add_subcommand("weyl", "finite Weyl element from a word");
  common(weyl, o);
  weyl->add_option("--word", o.weyl_word, "simple reflection indices, e.g. 1,2,1");

  auto* bic = app.add_subcommand("biconvex", "biconvex sets and their parameters");
  bic->require_subcommand(1);
  auto* nab = bic->add_subcommand("nabla", "view of the set with the given parameter");
  common(nab, o);
  nab->add_option("--param", o.param, "parameter JSON or @file")->required();
  nab->add_option("--cutoff,-N", o.cutoff, "materialize up to this level")->check(CLI::NonNegativeNumber);
  auto* par = bic->add_subcommand("parametrize", "parameter of a view or window");
  common(par, o);
  par->add_option("--view", o.view, "view JSON or @file")->required();
  auto* cls = bic->add_subcommand("classify", "kind (a)-(d) of a biconvex set");
  common(cls, o);
  cls->add_option("--set", o.input, "{\"J\",\"elements\",\"tail\",\"cutoff\"} JSON or @file")->required();
  auto* en = bic->add_subcommand("enumerate", "brute-force biconvex sets in a window");
  common(en, o);
  en->add_option("--cutoff,-N", o.cutoff, "window level")->check(CLI::NonNegativeNumber);
  en->add_option("--max-size", o.max_size, "largest subset size")->check(CLI::NonNegativeNumber);

  auto* word = app.add_subcommand("word", "infinite reduced words");
  word->require_subcommand(1);
  auto* mk = word->add_subcommand("make", "Z^K_J, or chi of a parameter");
  common(mk, o);
  mk->add_option("--K", o.K, "subset K of J, e.g. 1");
  mk->add_option("--param", o.param, "parameter JSON or @file");
  auto* ac = word->add_subcommand("act", "x.s");
  common(ac, o);
  ac->add_option("--word", o.word, "word JSON or @file")->required();
  ac->add_option("--x", o.x, "element as letters (c1,a1) or {\"lambda\",\"wbar\"} JSON")->required();
  auto* eq = word->add_subcommand("equiv", "whether two words are equivalent");
  common(eq, o);
  eq->add_option("--word", o.word, "word JSON or @file")->required();
  eq->add_option("--other", o.word2, "word JSON or @file")->required();
  auto* wc = word->add_subcommand("classify", "canonical parameter of a word");
  common(wc, o);
  wc->add_option("--word", o.word, "word JSON or @file")->required();

  auto* ver = app.add_subcommand("verify", "run a property suite");
  common(ver, o);
  ver->add_option("suite", suite,
                  "finite-bijection, classification, parametrization, word-realization, z-words, action, "
                  "orbits, length, biconvex-classes")
      ->required();
  ver->add_option("--len", o.len, "length bound")->check(CLI::NonNegativeNumber);
  ver->add_option("--cutoff,-N", o.cutoff, "window level")->check(CLI::NonNegativeNumber);
  ver->add_option("--samples", o.samples, "random cases")->check(CLI::NonNegativeNumber);
  ver->add_option("--seed", o.seed, "random seed");
  ver->add_option("--max-size", o.max_size, "brute-force subset size")->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*roots) return cmd_roots(o);
    if (*weyl) return cmd_weyl(o);
    if (*nab) return cmd_nabla(o);
    if (*par) return cmd_parametrize(o);
    if (*cls) return cmd_classify(o);
    if (*en) return cmd_enumerate(o);
    if (*mk) return cmd_word_make(o);
    if (*ac) return cmd_word_act(o);
    if (*eq) return cmd_word_equiv(o);
    if (*wc) return cmd_word_classify(o);
    if (*ver) return cmd_verify(o, suite);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Json::exception& e) {
    std::cerr << "error: bad JSON input: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}
