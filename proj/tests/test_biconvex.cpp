#include <doctest.h>

#include <algorithm>
#include <set>
#include <stdexcept>

#include "affroot/biconvex.hpp"

using namespace affroot;

namespace {

AffineRoot ar(int level, Root r) { return {level, std::move(r)}; }

// Direct definition: closed under sums inside Delta_J+, complement too, for
// sums of level <= N.
bool biconvex_by_pairs(const AffineRootSet& S, const SubSystem& sub, int N) {
  const AffineRootSet all = positive_window(sub, N);
  for (const AffineRoot& a : all)
    for (const AffineRoot& b : all) {
      const AffineRoot c = a + b;
      if (!all.count(c)) continue;
      const bool in_a = S.count(a), in_b = S.count(b), in_c = S.count(c);
      if (in_a && in_b && !in_c) return false;
      if (!in_a && !in_b && in_c) return false;
    }
  return true;
}

AffineWeylElement s_letter(const SubSystem& sub, AffineLetter s) { return letter_element(sub, s); }

}  // namespace

TEST_CASE("window check") {
  auto a1 = build_root_system("A1");
  SubSystem sub = sub_system(a1, {1});
  CHECK(is_biconvex_window({}, sub, 3));
  CHECK(is_biconvex_window({ar(0, Root{1})}, sub, 3));
  CHECK_FALSE(is_biconvex_window({ar(0, Root{1}), ar(1, Root{-1})}, sub, 1));
  CHECK_THROWS_AS(is_biconvex_window({ar(0, Root{-1})}, sub, 2), std::invalid_argument);
  CHECK_THROWS_AS(is_biconvex_window({ar(4, Root{1})}, sub, 2), std::invalid_argument);
}

TEST_CASE("window check agrees with the pair definition") {
  auto a2 = build_root_system("A2");
  SubSystem sub = sub_system(a2, {1, 2});
  const int N = 1;
  std::vector<AffineRoot> win;
  for (const AffineRoot& b : real_window(sub, N)) win.push_back(b);
  REQUIRE(win.size() == 9);
  for (unsigned mask = 0; mask < (1u << win.size()); ++mask) {
    AffineRootSet S;
    for (std::size_t i = 0; i < win.size(); ++i)
      if (mask & (1u << i)) S.insert(win[i]);
    CHECK(is_biconvex_window(S, sub, N) == biconvex_by_pairs(S, sub, N));
  }
}

TEST_CASE("nabla examples") {
  auto a1 = build_root_system("A1");
  SubSystem sub = sub_system(a1, {1});
  const auto one = AffineWeylElement::identity(a1);
  const auto s1 = WeylElement::simple(a1, 1);

  auto down = nabla(BiconvexParam::make(sub, {}, WeylElement::identity(a1), one), sub, 3);
  CHECK(down.truncate(3) == AffineRootSet{ar(1, Root{-1}), ar(2, Root{-1}), ar(3, Root{-1})});
  CHECK(down.contains(ar(100, Root{-1})));
  CHECK_FALSE(down.contains(ar(100, Root{1})));
  CHECK(down.is_infinite());

  auto up = nabla(BiconvexParam::make(sub, {}, s1, one), sub, 2);
  CHECK(up.truncate(2) == AffineRootSet{ar(0, Root{1}), ar(1, Root{1}), ar(2, Root{1})});

  auto y = s_letter(sub, AffineLetter::affine(1)) * s_letter(sub, AffineLetter::classical(1));
  auto fin = nabla(BiconvexParam::make(sub, {1}, WeylElement::identity(a1), y), sub, 4);
  CHECK_FALSE(fin.is_infinite());
  CHECK(fin.truncate(4) == inversion_set_affine(y, sub));
}

TEST_CASE("invalid parameters are rejected") {
  auto a2 = build_root_system("A2");
  SubSystem sub = sub_system(a2, {1, 2});
  const auto one = AffineWeylElement::identity(a2);
  CHECK_THROWS_AS(BiconvexParam::make(sub, {1}, WeylElement::simple(a2, 1), one), std::invalid_argument);
  auto t = AffineWeylElement::finite(WeylElement::simple(a2, 2));
  CHECK_THROWS_AS(BiconvexParam::make(sub, {1}, WeylElement::identity(a2), t), std::invalid_argument);
  CHECK_THROWS_AS(BiconvexParam::make(sub, {3}, WeylElement::identity(a2), one), std::invalid_argument);
}

TEST_CASE("parametrize examples") {
  auto a1 = build_root_system("A1");
  SubSystem sub1 = sub_system(a1, {1});
  auto p = parametrize({ar(1, Root{-1}), ar(2, Root{-1})}, {Root{-1}}, sub1, 2);
  CHECK(p.K.empty());
  CHECK(p.u.is_identity());
  CHECK(p.y.is_identity());

  auto y1 = s_letter(sub1, AffineLetter::affine(1));
  auto q = parametrize(inversion_set_affine(y1, sub1), {}, sub1, 2);
  CHECK(q.K == IndexSet{1});
  CHECK(q.y == y1);

  auto a2 = build_root_system("A2");
  SubSystem sub2 = sub_system(a2, {1, 2});
  SubSystem subK = sub_system(a2, {1});
  const int N = 3;
  AffineRootSet B = delta_u_pm(sub2, {1}, WeylElement::identity(a2), Sign::Minus, N);
  B.insert(ar(0, Root{1, 0}));
  auto r = parametrize(B, delta_J_K(sub2, {1}, Sign::Minus), sub2, N);
  CHECK(r.K == IndexSet{1});
  CHECK(r.u.is_identity());
  CHECK(r.y == s_letter(subK, AffineLetter::classical(1)));

  CHECK_THROWS_AS(parametrize({ar(0, Root{1, 0})}, {Root{1, 1}}, sub2, 2), std::invalid_argument);
}

TEST_CASE("round trip over a parameter sweep") {
  for (const char* t : {"A1", "B2"}) {
    auto rs = build_root_system(t);
    const IndexSet J = IndexSet::full(rs->rank());
    SubSystem sub = sub_system(rs, J);
    for (const IndexSet& K : J.subsets()) {
      SubSystem subK = sub_system(rs, K);
      for (const WeylElement& u : min_coset_reps(rs, J, K))
        for (const BallEntry& y : cayley_ball(subK, 3)) {
          auto p = BiconvexParam::make(sub, K, u, y.element);
          const int N = u.length() + y.distance + 3;
          auto view = nabla(p, sub, N);
          CHECK(parametrize(view, sub) == p);
          CHECK(parametrize(view.truncate(N), view.tail, sub, N) == p);
          CHECK(biconvex_by_pairs(view.truncate(N), sub, N));
        }
    }
  }
}

TEST_CASE("peeling recovers finite inversion sets") {
  auto c2 = build_root_system("C2");
  SubSystem sub = sub_system(c2, {1, 2});
  for (const BallEntry& e : cayley_ball(sub, 4)) CHECK(peel(inversion_set_affine(e.element, sub), sub) == e.element);
  CHECK_FALSE(peel({ar(0, Root{1, 1})}, sub).has_value());
}

TEST_CASE("almost inclusion") {
  auto a1 = build_root_system("A1");
  SubSystem sub1 = sub_system(a1, {1});
  const auto one1 = AffineWeylElement::identity(a1);
  auto p = BiconvexParam::make(sub1, {}, WeylElement::identity(a1), one1);
  auto q = BiconvexParam::make(sub1, {}, WeylElement::simple(a1, 1), one1);
  CHECK(dot_subset(p, p));
  CHECK_FALSE(dot_subset(p, q));
  CHECK_FALSE(dot_subset(q, p));

  auto a2 = build_root_system("A2");
  SubSystem sub2 = sub_system(a2, {1, 2});
  const auto one2 = AffineWeylElement::identity(a2);
  auto big = BiconvexParam::make(sub2, {}, WeylElement::identity(a2), one2);
  auto small = BiconvexParam::make(sub2, {1}, WeylElement::identity(a2), one2);
  // The tail of ({1},1) is {-a2, -a1-a2}, inside the tail {-a1, -a2, -a1-a2} of (0,1).
  CHECK(dot_subset(small, big));
  CHECK_FALSE(dot_subset(big, small));
}

TEST_CASE("four kinds") {
  auto a1 = build_root_system("A1");
  SubSystem sub = sub_system(a1, {1});
  const int N = 3;
  auto a = classify_biconvex({}, {}, sub, N);
  CHECK(a.kind == BiconvexKind::FiniteReal);
  REQUIRE(a.z);
  CHECK(a.z->is_identity());

  auto b = classify_biconvex(positive_window(sub, N), {Root{1}, Root{-1}}, sub, N);
  CHECK(b.kind == BiconvexKind::CofiniteWithImaginary);
  REQUIRE(b.z);
  CHECK(b.z->is_identity());

  AffineRootSet S;
  for (const AffineRoot& beta : positive_window(sub, N))
    if (beta.classical != Root{1}) S.insert(beta);
  auto d = classify_biconvex(S, {Root{-1}}, sub, N);
  CHECK(d.kind == BiconvexKind::InfiniteCoreal);
  REQUIRE(d.param);
  CHECK(d.param->K.empty());
  CHECK(d.param->u == WeylElement::simple(a1, 1));
  CHECK(kind_tag(d.kind) == 'd');

  auto c = classify_biconvex({ar(1, Root{-1}), ar(2, Root{-1}), ar(3, Root{-1})}, {Root{-1}}, sub, N);
  CHECK(c.kind == BiconvexKind::InfiniteReal);
  CHECK(kind_tag(c.kind) == 'c');
}

TEST_CASE("brute-force enumeration") {
  auto a1 = build_root_system("A1");
  SubSystem sub = sub_system(a1, {1});
  auto small = enumerate_biconvex_bruteforce(sub, 1, 1);
  CHECK(std::set<AffineRootSet>(small.begin(), small.end()) ==
        std::set<AffineRootSet>{{}, {ar(0, Root{1})}, {ar(1, Root{-1})}});
  CHECK(enumerate_biconvex_bruteforce(sub, 1, 0) == std::vector<AffineRootSet>{{}});

  std::vector<AffineRootSet> pairs;
  for (const AffineRootSet& S : enumerate_biconvex_bruteforce(sub, 2, 2))
    if (S.size() == 2 && S.count(ar(0, Root{1}))) pairs.push_back(S);
  CHECK(pairs == std::vector<AffineRootSet>{{ar(0, Root{1}), ar(1, Root{1})}});

  auto b3 = build_root_system("B3");
  CHECK_THROWS_AS(enumerate_biconvex_bruteforce(sub_system(b3, {1, 2, 3}), 2, 3), std::length_error);
}
