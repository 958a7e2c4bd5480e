#include "affroot/verify.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <sstream>

#include "affroot/format.hpp"

namespace affroot {

std::vector<Suite> all_suites() {
  return {Suite::FiniteBijection, Suite::Classification, Suite::Parametrization,
          Suite::WordRealization,     Suite::ZWords,         Suite::Action,
          Suite::Orbits,          Suite::Length,         Suite::BiconvexClasses};
}

std::string suite_name(Suite s) {
  switch (s) {
    case Suite::FiniteBijection: return "finite-bijection";
    case Suite::Classification: return "classification";
    case Suite::Parametrization: return "parametrization";
    case Suite::WordRealization: return "word-realization";
    case Suite::ZWords: return "z-words";
    case Suite::Action: return "action";
    case Suite::Orbits: return "orbits";
    case Suite::Length: return "length";
    case Suite::BiconvexClasses: return "biconvex-classes";
  }
  return "?";
}

std::optional<Suite> suite_from_name(std::string_view name) {
  for (Suite s : all_suites())
    if (suite_name(s) == name) return s;
  return std::nullopt;
}

namespace {

std::string show(const IndexSet& s) { return to_string(s); }

std::string show(const std::vector<int>& w) {
  std::string out = "[";
  for (std::size_t i = 0; i < w.size(); ++i) out += (i ? "," : "") + std::to_string(w[i]);
  return out + "]";
}

std::string show(const AffineWeylElement& x) {
  return "(lambda=" + show(x.lambda().coords()) + ", wbar=" + show(x.wbar().word()) + ")";
}

std::string show(const BiconvexParam& p) {
  return "(J=" + show(p.J) + ", K=" + show(p.K) + ", u=" + show(p.u.word()) + ", y=" + show(p.y) + ")";
}

std::string show(const InfiniteWord& s) {
  return "[" + format_word(s.head) + "](" + format_word(s.period) + ")^inf";
}

std::vector<IndexSet> nonempty_subsets(int rank) {
  std::vector<IndexSet> out;
  for (const IndexSet& J : IndexSet::full(rank).subsets())
    if (!J.empty()) out.push_back(J);
  return out;
}

std::vector<IndexSet> proper_subsets(const IndexSet& J) {
  std::vector<IndexSet> out;
  for (const IndexSet& K : J.subsets())
    if (K != J) out.push_back(K);
  return out;
}

AffineWeylElement random_element(const SubSystem& sub, int len, std::mt19937& rng) {
  const auto abc = letters(sub);
  std::uniform_int_distribution<int> pick_len(0, len);
  std::uniform_int_distribution<std::size_t> pick(0, abc.size() - 1);
  AffineWord w;
  for (int n = pick_len(rng); n > 0; --n) w.push_back(abc[pick(rng)]);
  return word_element(sub, w);
}

AffineRootSet truncated(const AffineRootSet& s, int N) {
  AffineRootSet out;
  for (const AffineRoot& b : s)
    if (b.level <= N) out.insert(b);
  return out;
}

AffineRootSet apply_finite(const WeylElement& u, const AffineRootSet& s) {
  AffineRootSet out;
  for (const AffineRoot& b : s) out.insert({b.level, u.apply(b.classical)});
  return out;
}

template <class F>
bool guarded(VerifyReport& r, F&& body, const std::string& context) {
  try {
    body();
    return true;
  } catch (const std::exception& e) {
    r.expect(false, [&] { return context + ": exception: " + e.what(); });
    return false;
  }
}

// Largest level <= b.brute_level whose real window the enumerator accepts.
int brute_level(const RootSystem& rs, const VerifyBounds& b) {
  const int npos = static_cast<int>(rs.positive_roots().size());
  int level = b.brute_level;
  while (level > 0 && npos * (2 * level + 1) > 24) --level;
  return level;
}

VerifyReport finite_bijection(RootSystemPtr rs, const VerifyBounds& b) {
  VerifyReport r;
  SubSystem sub = sub_system(rs, IndexSet::full(rs->rank()));
  std::map<AffineRootSet, AffineWeylElement> images;
  const auto ball = cayley_ball(sub, b.len);
  for (const BallEntry& e : ball) {
    const AffineRootSet phi = inversion_set_affine(e.element, sub);
    const std::string ctx = "y=" + show(e.element) + " word=" + format_word(e.word);
    r.expect(static_cast<int>(phi.size()) == e.distance,
             [&] { return ctx + ": |Phi_J(y)| differs from the length"; });
    r.expect(phi == word_inversion_set(sub, e.word),
             [&] { return ctx + ": Phi_J(y) differs from the word formula"; });
    if (max_level(phi) <= b.cutoff)
      r.expect(is_biconvex_window(phi, sub, b.cutoff),
               [&] { return ctx + ": Phi_J(y) = " + format_set(phi) + " is not biconvex"; });
    r.expect(images.emplace(phi, e.element).second,
             [&] { return ctx + ": Phi_J(y) repeats " + format_set(phi); });
  }
  const int level = brute_level(*rs, b);
  if (level < b.brute_level) {
    std::ostringstream os;
    os << "brute-force level lowered to " << level << " to fit the window limit";
    r.notes.push_back(os.str());
  }
  const auto brute = enumerate_biconvex_bruteforce(sub, level, b.max_size);
  const int reach = std::min(b.max_size, b.len);
  std::set<AffineRootSet> found;
  for (const AffineRootSet& S : brute) {
    found.insert(S);
    if (static_cast<int>(S.size()) > reach) continue;
    r.expect(images.count(S) > 0,
             [&] { return "biconvex set " + format_set(S) + " is not an inversion set"; });
  }
  for (const auto& [phi, y] : images)
    if (static_cast<int>(phi.size()) <= b.max_size && max_level(phi) <= level)
      r.expect(found.count(phi) > 0,
               [&] { return "inversion set " + format_set(phi) + " missed by brute force"; });
  std::ostringstream os;
  os << ball.size() << " elements of length <= " << b.len << ", " << brute.size()
     << " brute-force biconvex sets (level <= " << level << ", size <= " << b.max_size << ")";
  r.notes.push_back(os.str());
  return r;
}

VerifyReport classification(RootSystemPtr rs, const VerifyBounds&) {
  VerifyReport r;
  long scanned = 0;
  for (const IndexSet& J : nonempty_subsets(rs->rank())) {
    SubSystem sub = sub_system(rs, J);
    const std::vector<Root>& roots = sub.roots;
    const int n = static_cast<int>(roots.size());
    std::map<RootSet, std::vector<std::pair<IndexSet, WeylElement>>> pb_oracle;
    std::set<RootSet> parabolic_oracle;
    const auto group = enumerate_group(rs, J);
    for (const IndexSet& K : J.subsets()) {
      for (const WeylElement& u : min_coset_reps(rs, J, K))
        pb_oracle[pointed_biclosed(sub, K, u)].push_back({K, u});
      RootSet base(sub.positive.begin(), sub.positive.end());
      for (const Root& x : sub_system(rs, K).negative) base.insert(x);
      for (const WeylElement& w : group) parabolic_oracle.insert(w.apply(base));
    }
    for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
      ++scanned;
      RootSet P, comp;
      for (int i = 0; i < n; ++i) (mask & (1ul << i) ? P : comp).insert(roots[i]);
      const std::string ctx = "J=" + show(J) + " P=" + format_set(P);
      const SubsetClassification c = classify_subset(P, sub);
      const bool pb = c.pointed && c.biclosed_in_J;
      auto oracle = pb_oracle.find(P);
      r.expect(pb == (oracle != pb_oracle.end()),
               [&] { return ctx + ": pointed biclosed disagrees with u Delta^K_J-"; });
      r.expect((c.pointed && c.coclosed_in_J) == pb,
               [&] { return ctx + ": pointed coclosed differs from pointed biclosed"; });
      r.expect(classify_subset(comp, sub).parabolic_in_J == pb,
               [&] { return ctx + ": complement parabolic differs from pointed biclosed"; });
      if (pb && oracle != pb_oracle.end()) {
        r.expect(oracle->second.size() == 1, [&] { return ctx + ": (K,u) is not unique"; });
        guarded(r, [&] {
          PointedBiclosedFactor f = factor_pointed_biclosed(P, sub);
          r.expect(f.K == oracle->second.front().first && f.u == oracle->second.front().second,
                   [&] { return ctx + ": factor gives K=" + show(f.K) + " u=" + show(f.u.word()); });
        }, ctx);
      } else {
        bool threw = false;
        try {
          factor_pointed_biclosed(P, sub);
        } catch (const std::invalid_argument&) {
          threw = true;
        }
        r.expect(threw, [&] { return ctx + ": factor accepted a set that is not pointed biclosed"; });
      }
      r.expect(c.parabolic_in_J == (parabolic_oracle.count(P) > 0),
               [&] { return ctx + ": parabolic disagrees with w(Delta_J+ u Delta_K-)"; });

      RootSet joined = c.pointed_part;
      joined.insert(c.symmetric_part.begin(), c.symmetric_part.end());
      bool disjoint = true;
      for (const Root& x : c.pointed_part)
        if (c.symmetric_part.count(x)) disjoint = false;
      bool sym = true, pointed = true;
      for (const Root& x : c.symmetric_part)
        if (!c.symmetric_part.count(-x)) sym = false;
      for (const Root& x : c.pointed_part)
        if (c.pointed_part.count(-x)) pointed = false;
      r.expect(joined == P && disjoint && sym && pointed,
               [&] { return ctx + ": P_p and P_s do not split P"; });
      const std::vector<Root> pv(P.begin(), P.end());
      int splits = 0;
      for (unsigned long sm = 0; sm < (1ul << pv.size()); ++sm) {
        RootSet Q, R;
        for (std::size_t i = 0; i < pv.size(); ++i) (sm & (1ul << i) ? Q : R).insert(pv[i]);
        bool ok = true;
        for (const Root& x : Q)
          if (!Q.count(-x)) ok = false;
        for (const Root& x : R)
          if (R.count(-x)) ok = false;
        if (ok) ++splits;
      }
      r.expect(splits == 1, [&] { return ctx + ": symmetric/pointed split is not unique"; });
      if (c.closed) {
        bool ok = is_closed(*rs, c.pointed_part) && is_closed(*rs, c.symmetric_part);
        for (const Root& x : c.pointed_part)
          for (const Root& y : c.symmetric_part)
            if (rs->contains(x + y) && !c.pointed_part.count(x + y)) ok = false;
        r.expect(ok, [&] { return ctx + ": P_p + P_s is not inside P_p"; });
      }
      if (c.closed && c.pointed) {
        guarded(r, [&] {
          WeylElement w = positivize(P, sub);
          bool down = in_parabolic(w, J);
          for (const Root& x : P)
            if (!w.apply(x).is_negative()) down = false;
          r.expect(down, [&] { return ctx + ": positivize gave w=" + show(w.word()); });
        }, ctx);
      }
    }
  }
  r.notes.push_back(std::to_string(scanned) + " subsets scanned");
  return r;
}

VerifyReport parametrization(RootSystemPtr rs, const VerifyBounds& b) {
  VerifyReport r;
  long total = 0;
  for (const IndexSet& J : nonempty_subsets(rs->rank())) {
    SubSystem sub = sub_system(rs, J);
    const auto params = parameter_sweep(rs, J, b.len, false);
    total += static_cast<long>(params.size());
    int top = 0;
    std::vector<int> levels;
    for (const BiconvexParam& p : params) {
      int ly = length_J(p.y, sub_system(rs, p.K));
      levels.push_back(p.u.length() + ly);
      top = std::max(top, p.u.length() + ly + 1);
    }
    std::map<AffineRootSet, BiconvexParam> seen;
    for (std::size_t i = 0; i < params.size(); ++i) {
      const BiconvexParam& p = params[i];
      const int N = levels[i] + 3;
      const std::string ctx = show(p) + " N=" + std::to_string(N);
      guarded(r, [&] {
        const BiconvexSetView view = nabla(p, sub, N);
        const AffineRootSet window = view.truncate(N);
        const BiconvexParam q1 = parametrize(window, view.tail, sub, N);
        r.expect(q1 == p, [&] { return ctx + ": window round trip gave " + show(q1); });
        const BiconvexParam q2 = parametrize(view, sub);
        r.expect(q2 == p, [&] { return ctx + ": view round trip gave " + show(q2); });
        for (int M = 0; M <= N; ++M)
          r.expect(is_biconvex_window(view.truncate(M), sub, M),
                   [&] { return ctx + ": not biconvex at cutoff " + std::to_string(M); });
        r.expect(view.is_infinite() == (p.K != p.J), [&] { return ctx + ": wrong finiteness"; });
        BiconvexParam base = p;
        base.u = WeylElement::identity(rs);
        AffineRootSet split = apply_finite(p.u, nabla(base, sub, N).truncate(N));
        std::size_t moved = split.size();
        AffineRootSet phi_u = inversion_set_affine(AffineWeylElement::finite(p.u), sub);
        split.insert(phi_u.begin(), phi_u.end());
        r.expect(split == window && moved + phi_u.size() == window.size(),
                 [&] { return ctx + ": nabla is not Phi(u) plus u nabla(K,1,y)"; });
        const AffineRootSet key = view.truncate(top);
        auto [it, fresh] = seen.emplace(key, p);
        r.expect(fresh, [&] { return ctx + ": same set as " + show(it->second); });
      }, ctx);
    }
    std::vector<const BiconvexParam*> simple;
    for (const BiconvexParam& p : params)
      if (p.y.is_identity()) simple.push_back(&p);
    for (const BiconvexParam* p1 : simple)
      for (const BiconvexParam* p2 : simple) {
        RootSet t1 = pointed_biclosed(sub, p1->K, p1->u), t2 = pointed_biclosed(sub, p2->K, p2->u);
        bool inside = std::includes(t2.begin(), t2.end(), t1.begin(), t1.end());
        r.expect(dot_subset(*p1, *p2) == inside,
                 [&] { return show(*p1) + " vs " + show(*p2) + ": almost-inclusion test disagrees with tails"; });
      }
  }
  r.notes.push_back(std::to_string(total) + " parameters");
  return r;
}

VerifyReport word_realization(RootSystemPtr rs, const VerifyBounds& b) {
  VerifyReport r;
  long total = 0;
  for (const IndexSet& J : nonempty_subsets(rs->rank())) {
    SubSystem sub = sub_system(rs, J);
    for (const BiconvexParam& p : parameter_sweep(rs, J, b.len, true)) {
      ++total;
      const int N = p.u.length() + length_J(p.y, sub_system(rs, p.K)) + 3;
      const std::string ctx = show(p) + " N=" + std::to_string(N);
      guarded(r, [&] {
        const InfiniteWord w = chi(p, sub);
        const Certificate cert = certify(w, sub);
        r.expect(cert.ok, [&] { return ctx + ": chi word " + show(w) + " fails: " + cert.reason; });
        const AffineRootSet lhs = phi_infinity(w, sub, N);
        const AffineRootSet rhs = nabla(p, sub, N).truncate(N);
        r.expect(lhs == rhs, [&] {
          return ctx + ": phi_infinity(chi) = " + format_set(lhs) + " but nabla = " + format_set(rhs);
        });
        const BiconvexParam q = classify_word(w, sub).canonical_param;
        r.expect(q == p, [&] { return ctx + ": chi word classifies as " + show(q); });
      }, ctx);
    }
  }
  r.notes.push_back(std::to_string(total) + " parameters with K a proper subset of J");
  return r;
}

VerifyReport z_words(RootSystemPtr rs, const VerifyBounds& b) {
  VerifyReport r;
  for (const IndexSet& J : nonempty_subsets(rs->rank())) {
    SubSystem sub = sub_system(rs, J);
    for (const IndexSet& K : proper_subsets(J)) {
      const std::string ctx = "J=" + show(J) + " K=" + show(K);
      guarded(r, [&] {
        const CorootVector lam = z_lambda(sub, K);
        bool signs = true;
        for (int j : J) {
          int v = rs->pairing(rs->simple_root(j), lam);
          if (K.contains(j) ? v != 0 : v <= 0) signs = false;
        }
        r.expect(signs, [&] { return ctx + ": lambda " + show(lam.coords()) + " has wrong signs"; });
        const InfiniteWord z = z_word(sub, K);
        const Certificate cert = certify(z, sub);
        r.expect(cert.ok, [&] { return ctx + ": " + show(z) + " fails: " + cert.reason; });
        std::set<AffineRoot> seen;
        AffineWeylElement pre = AffineWeylElement::identity(rs);
        const long span = 3 * static_cast<long>(z.period.size());
        for (long p = 1; p <= span; ++p) {
          AffineRoot phi = pre.apply(simple_root(sub, z.at(p)));
          r.expect(phi.is_positive() && seen.insert(phi).second,
                   [&] { return ctx + ": phi(" + std::to_string(p) + ") = " + format_affine(phi); });
          pre = pre * letter_element(sub, z.at(p));
        }
        const AffineRootSet got = phi_infinity(z, sub, b.cutoff);
        const AffineRootSet want = delta_u_pm(sub, K, WeylElement::identity(rs), Sign::Minus, b.cutoff);
        r.expect(got == want, [&] {
          return ctx + ": phi_infinity = " + format_set(got) + " expected " + format_set(want);
        });
        const BiconvexParam q = classify_word(z, sub).canonical_param;
        r.expect(q.K == K && q.u.is_identity() && q.y.is_identity(),
                 [&] { return ctx + ": Z^K_J classifies as " + show(q); });
      }, ctx);
    }
  }
  return r;
}

VerifyReport action(RootSystemPtr rs, const VerifyBounds& b) {
  VerifyReport r;
  SubSystem sub = sub_system(rs, IndexSet::full(rs->rank()));
  std::mt19937 rng(b.seed);
  const auto Ks = proper_subsets(sub.J);
  std::vector<InfiniteWord> pool;
  for (const IndexSet& K : Ks) pool.push_back(z_word(sub, K));
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  std::bernoulli_distribution coin(0.5);
  const AffineWeylElement one = AffineWeylElement::identity(rs);
  for (int i = 0; i < b.samples; ++i) {
    InfiniteWord s = pool[pick(rng)];
    if (coin(rng)) s = act(random_element(sub, b.len, rng), s, sub);
    const AffineWeylElement x = random_element(sub, b.len, rng);
    const AffineWeylElement y = random_element(sub, b.len, rng);
    const std::string ctx = "x=" + show(x) + " s=" + show(s);
    guarded(r, [&] {
      const InfiniteWord t = act(x, s, sub);
      const Certificate cert = certify(t, sub);
      r.expect(cert.ok, [&] { return ctx + ": x.s = " + show(t) + " fails: " + cert.reason; });
      const AffineRootSet lhs = phi_infinity(t, sub, b.cutoff);
      const AffineRootSet rhs = action_formula(x, s, sub, b.cutoff);
      r.expect(lhs == rhs, [&] {
        return ctx + ": phi_infinity(x.s) = " + format_set(lhs) + " formula gives " + format_set(rhs);
      });
      const WordClass left = classify_word(act(x, act(y, s, sub), sub), sub);
      const WordClass right = classify_word(act(x * y, s, sub), sub);
      r.expect(left == right, [&] { return ctx + " y=" + show(y) + ": x.(y.s) and (xy).s differ"; });
      r.expect(classify_word(act(one, s, sub), sub) == classify_word(s, sub),
               [&] { return ctx + ": 1.s is not equivalent to s"; });
    }, ctx);
  }
  r.notes.push_back(std::to_string(b.samples) + " random pairs, seed " + std::to_string(b.seed));
  return r;
}

VerifyReport orbits(RootSystemPtr rs, const VerifyBounds& b) {
  VerifyReport r;
  SubSystem sub = sub_system(rs, IndexSet::full(rs->rank()));
  std::mt19937 rng(b.seed);
  std::map<IndexSet, IndexSet> invariant_of;
  std::vector<BiconvexParam> observed;
  auto remember = [&](const BiconvexParam& p) {
    if (std::find(observed.begin(), observed.end(), p) == observed.end()) observed.push_back(p);
  };
  for (const IndexSet& K : proper_subsets(sub.J)) {
    const std::string ctx = "K=" + show(K);
    guarded(r, [&] {
      const InfiniteWord Z = z_word(sub, K);
      const SubSystem subK = sub_system(rs, K);
      invariant_of[K] = orbit_invariant(Z, sub);
      r.expect(invariant_of[K] == K, [&] { return ctx + ": orbit invariant of Z^K_J is " + show(invariant_of[K]); });
      remember(classify_word(Z, sub).canonical_param);
      InfiniteWord walk = Z;
      for (int i = 0; i < b.samples; ++i) {
        AffineWeylElement x = random_element(sub, b.len, rng);
        if (i == 0) x = AffineWeylElement::finite(WeylElement::simple(rs, sub.J.values().front()));
        const InfiniteWord t = act(x, Z, sub);
        const BiconvexParam p = classify_word(t, sub).canonical_param;
        remember(p);
        r.expect(p.K == K, [&] { return ctx + " x=" + show(x) + ": class has K=" + show(p.K); });
        const WeylElement xK = coset_decompose(x.wbar(), K).w_upper;
        AffineRootSet T;
        const WeylElement xKinv = xK.inverse();
        for (const AffineRoot& beta :
             inversion_set_affine(AffineWeylElement::finite(xKinv) * x, sub))
          if (subK.contains(beta.classical)) T.insert(beta);
        const auto zx = peel(T, subK);
        r.expect(zx.has_value() && p.u == xK && p.y == *zx,
                 [&] { return ctx + " x=" + show(x) + ": class " + show(p) + " disagrees with x^K and z_x"; });
        const InfiniteWord back = act(AffineWeylElement::finite(p.u) * p.y, Z, sub);
        r.expect(equivalent(back, t, sub), [&] { return ctx + ": u y . Z^K_J does not reach " + show(p); });
        walk = act(x, walk, sub);
        if (walk.head.size() > 40) walk = t;
        r.expect(orbit_invariant(walk, sub) == K,
                 [&] { return ctx + ": invariant changed along a walk at " + show(walk); });
      }
    }, ctx);
  }
  std::set<IndexSet> distinct;
  for (const auto& [K, inv] : invariant_of) distinct.insert(inv);
  r.expect(distinct.size() == invariant_of.size(), [&] { return std::string("orbit invariants collide"); });
  if (rs->rank() == 1) {
    std::set<RootSet> tails;
    for (const BiconvexParam& p : observed) tails.insert(pointed_biclosed(sub, p.K, p.u));
    const RootSet down{Root{-1}}, up{Root{1}};
    r.expect(observed.size() == 2 && tails == std::set<RootSet>{down, up},
             [&] { return "rank one should have two classes with tails {-α1} and {α1}, saw " +
                          std::to_string(observed.size()); });
  }
  r.notes.push_back(std::to_string(invariant_of.size()) + " orbits, " + std::to_string(observed.size()) +
                    " classes observed");
  return r;
}

VerifyReport length_oracle(RootSystemPtr rs, const VerifyBounds& b) {
  VerifyReport r;
  SubSystem sub = sub_system(rs, IndexSet::full(rs->rank()));
  const auto ball = cayley_ball(sub, b.len);
  for (const BallEntry& e : ball) {
    const std::string ctx = "x=" + show(e.element) + " bfs word=" + format_word(e.word);
    const int len = length_J(e.element, sub);
    r.expect(len == e.distance, [&] {
      return ctx + ": length " + std::to_string(len) + " but distance " + std::to_string(e.distance);
    });
    const AffineWord w = reduced_word_J(e.element, sub);
    r.expect(static_cast<int>(w.size()) == e.distance && word_element(sub, w) == e.element,
             [&] { return ctx + ": greedy word " + format_word(w) + " is wrong"; });
    r.expect(word_inversion_set(sub, w) == inversion_set_affine(e.element, sub),
             [&] { return ctx + ": inversion set differs from the word formula"; });
  }
  r.notes.push_back(std::to_string(ball.size()) + " elements of length <= " + std::to_string(b.len));
  return r;
}

VerifyReport biconvex_classes(RootSystemPtr rs, const VerifyBounds& b) {
  VerifyReport r;
  long total = 0;
  for (const IndexSet& J : nonempty_subsets(rs->rank())) {
    SubSystem sub = sub_system(rs, J);
    RootSet all(sub.roots.begin(), sub.roots.end());
    for (const BiconvexParam& p : parameter_sweep(rs, J, b.len, false)) {
      ++total;
      const int N = p.u.length() + length_J(p.y, sub_system(rs, p.K)) + 3;
      const std::string ctx = show(p) + " N=" + std::to_string(N);
      guarded(r, [&] {
        const BiconvexSetView view = nabla(p, sub, N);
        const AffineRootSet B = view.truncate(N);
        const BiconvexClassification c = classify_biconvex(B, view.tail, sub, N);
        if (p.is_infinite())
          r.expect(c.kind == BiconvexKind::InfiniteReal && c.param && *c.param == p,
                   [&] { return ctx + ": expected kind (c)"; });
        else
          r.expect(c.kind == BiconvexKind::FiniteReal && c.z && *c.z == p.y,
                   [&] { return ctx + ": expected kind (a)"; });
        AffineRootSet comp;
        for (const AffineRoot& beta : positive_window(sub, N))
          if (!B.count(beta)) comp.insert(beta);
        RootSet ctail;
        for (const Root& e : all)
          if (!view.tail.count(e)) ctail.insert(e);
        const BiconvexClassification d = classify_biconvex(comp, ctail, sub, N);
        if (p.is_infinite())
          r.expect(d.kind == BiconvexKind::InfiniteCoreal && d.param && *d.param == p,
                   [&] { return ctx + ": complement expected kind (d)"; });
        else
          r.expect(d.kind == BiconvexKind::CofiniteWithImaginary && d.z && *d.z == p.y,
                   [&] { return ctx + ": complement expected kind (b)"; });
      }, ctx);
    }
  }
  r.notes.push_back(std::to_string(total) + " parameters, each with its complement");
  return r;
}

double ball_estimate(const RootSystem& rs, int len) {
  double n = rs.rank() + 1, total = 0, term = 1;
  for (int k = 0; k <= len; ++k, term *= n) total += term;
  return total;
}

// |W| as the product of the degrees, read off the heights of the positive roots.
double weyl_order(const RootSystem& rs) {
  std::map<int, int> by_height;
  for (const Root& r : rs.positive_roots()) ++by_height[r.height()];
  double order = 1;
  for (const auto& [k, n] : by_height) {
    auto next = by_height.find(k + 1);
    order *= std::pow(k + 1.0, n - (next == by_height.end() ? 0 : next->second));
  }
  return order;
}

double choose_upto(int n, int k) {
  double total = 0, term = 1;
  for (int i = 0; i <= std::min(n, k); ++i) {
    total += term;
    term = term * (n - i) / (i + 1);
  }
  return total;
}

}  // namespace

double estimate_work(Suite s, const RootSystem& rs, const VerifyBounds& b) {
  const double l = rs.rank();
  const double npos = static_cast<double>(rs.positive_roots().size());
  const double subsets = std::pow(2.0, l);
  switch (s) {
    case Suite::FiniteBijection: {
      int window = static_cast<int>(npos * (2 * brute_level(rs, b) + 1));
      return ball_estimate(rs, b.len) * npos * b.cutoff +
             choose_upto(window, b.max_size) * window * 4 * npos;
    }
    case Suite::Classification:
      return subsets * std::pow(3.0, 2 * npos);
    case Suite::Parametrization:
    case Suite::WordRealization:
    case Suite::BiconvexClasses:
      return subsets * subsets * weyl_order(rs) * ball_estimate(rs, b.len) *
             npos * (b.len + 3);
    case Suite::ZWords:
      return subsets * subsets * npos * b.cutoff;
    case Suite::Action:
    case Suite::Orbits:
      return static_cast<double>(b.samples) * npos * ball_estimate(rs, b.len);
    case Suite::Length:
      return ball_estimate(rs, b.len) * npos;
  }
  return 0;
}

VerifyReport run_suite(Suite s, RootSystemPtr rs, const VerifyBounds& b) {
  const double est = estimate_work(s, *rs, b);
  if (est > kWorkLimit) {
    std::ostringstream os;
    os << "bounds too large for " << suite_name(s) << " on " << rs->type_label() << ": estimated "
       << est << " steps, limit " << kWorkLimit;
    throw BoundsRefused(os.str(), est);
  }
  VerifyReport r;
  switch (s) {
    case Suite::FiniteBijection: r = finite_bijection(rs, b); break;
    case Suite::Classification: r = classification(rs, b); break;
    case Suite::Parametrization: r = parametrization(rs, b); break;
    case Suite::WordRealization: r = word_realization(rs, b); break;
    case Suite::ZWords: r = z_words(rs, b); break;
    case Suite::Action: r = action(rs, b); break;
    case Suite::Orbits: r = orbits(rs, b); break;
    case Suite::Length: r = length_oracle(rs, b); break;
    case Suite::BiconvexClasses: r = biconvex_classes(rs, b); break;
  }
  r.suite = suite_name(s);
  r.type = rs->type_label();
  return r;
}

std::vector<BiconvexParam> parameter_sweep(RootSystemPtr rs, const IndexSet& J, int len,
                                           bool only_infinite) {
  std::vector<BiconvexParam> out;
  for (const IndexSet& K : J.subsets()) {
    if (only_infinite && K == J) continue;
    const SubSystem subK = sub_system(rs, K);
    const auto ys = cayley_ball(subK, len);
    for (const WeylElement& u : min_coset_reps(rs, J, K))
      for (const BallEntry& y : ys) out.push_back({J, K, u, y.element});
  }
  return out;
}

AffineRootSet word_inversion_set(const SubSystem& sub, const AffineWord& w) {
  AffineRootSet out;
  AffineWeylElement z = AffineWeylElement::identity(sub.system);
  for (const AffineLetter& s : w) {
    out.insert(z.apply(simple_root(sub, s)));
    z = z * letter_element(sub, s);
  }
  return out;
}

AffineRootSet action_formula(const AffineWeylElement& x, const InfiniteWord& s, const SubSystem& sub,
                             int N) {
  const RootSystem& rs = *sub.system;
  int M = 0;
  for (const Root& e : rs.roots()) M = std::max(M, std::abs(rs.pairing(e, x.lambda())));
  const AffineRootSet image = x.apply(phi_infinity(s, sub, N + M));
  AffineRootSet omega, out;
  for (const AffineRoot& b : image) (b.is_negative() ? omega : out).insert(b);
  out = truncated(out, N);
  for (const AffineRoot& b : inversion_set_affine(x, sub))
    if (b.level <= N && !omega.count(-b)) out.insert(b);
  return out;
}

}  // namespace affroot
