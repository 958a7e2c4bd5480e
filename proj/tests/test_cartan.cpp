#include <doctest.h>

#include <stdexcept>

#include "affroot/cartan.hpp"

using namespace affroot;

TEST_CASE("root counts follow the classical tables") {
  struct Row {
    const char* type;
    std::size_t roots;
  };
  for (Row row : {Row{"A1", 2}, Row{"A2", 6}, Row{"A4", 20}, Row{"B2", 8}, Row{"B3", 18},
                  Row{"C3", 18}, Row{"C4", 32}, Row{"D4", 24}, Row{"D5", 40}, Row{"E6", 72},
                  Row{"E7", 126}, Row{"E8", 240}, Row{"F4", 48}, Row{"G2", 12}}) {
    CAPTURE(row.type);
    auto rs = build_root_system(row.type);
    CHECK(rs->roots().size() == row.roots);
    CHECK(rs->positive_roots().size() * 2 == row.roots);
  }
}

TEST_CASE("positive roots of A2 in height order") {
  auto rs = build_root_system("A2");
  REQUIRE(rs->positive_roots().size() == 3);
  CHECK(rs->positive_roots()[0] == Root{1, 0});
  CHECK(rs->positive_roots()[1] == Root{0, 1});
  CHECK(rs->positive_roots()[2] == Root{1, 1});
}

TEST_CASE("invariant form") {
  auto a2 = build_root_system("A2");
  CHECK(a2->pairing(Root{1, 0}, Root{0, 1}) == Rational(-1));
  CHECK(a2->pairing(Root{1, 0}, Root{0, 0}) == Rational(0));

  auto g2 = build_root_system("G2");
  int long_count = 0, short_count = 0;
  for (const Root& r : g2->roots()) {
    Rational n = g2->pairing(r, r);
    if (n == Rational(2)) ++long_count;
    if (n == Rational(2, 3)) ++short_count;
  }
  CHECK(long_count == 6);
  CHECK(short_count == 6);
  CHECK(g2->pairing(Root{1, 0}, Root{1, 0}) == Rational(2, 3));

  for (const char* t : {"B3", "C3", "F4", "G2", "E6"}) {
    auto rs = build_root_system(t);
    Rational top(0);
    for (const Root& r : rs->roots()) top = std::max(top, rs->pairing(r, r));
    CHECK(top == Rational(2));
  }
}

TEST_CASE("coroots") {
  auto a3 = build_root_system("A3");
  for (const Root& r : a3->roots()) CHECK(a3->coroot(r).coords() == r.coords());

  auto g2 = build_root_system("G2");
  CHECK(g2->coroot(Root{1, 0}) == g2->simple_coroot(1));
  CHECK(g2->coroot(Root{-1, 0}) == -g2->simple_coroot(1));
  // The short coroot acts as 3 alpha_1 under the form.
  for (const Root& b : g2->roots())
    CHECK(Rational(g2->pairing(b, g2->coroot(Root{1, 0}))) == 3 * g2->pairing(b, Root{1, 0}));
  for (const Root& r : g2->roots()) {
    CHECK(g2->pairing(r, g2->coroot(r)) == 2);
    CHECK(g2->coroot(-r) == -g2->coroot(r));
  }

  auto b2 = build_root_system("B2");
  CHECK(b2->coroot(Root{0, 1}) == CorootVector{0, 1});
  CHECK(b2->coroot(Root{1, 1}) == CorootVector{2, 1});
  CHECK(b2->coroot(Root{1, 2}) == CorootVector{1, 1});
  CHECK_THROWS_AS(b2->coroot(Root{2, 1}), std::invalid_argument);
}

TEST_CASE("simple reflections") {
  auto a2 = build_root_system("A2");
  CHECK(a2->reflect(1, Root{0, 1}) == Root{1, 1});
  CHECK(a2->reflect(1, Root{1, 0}) == Root{-1, 0});
  for (const Root& r : a2->roots()) CHECK(a2->reflect(2, a2->reflect(2, r)) == r);
}

TEST_CASE("highest roots of connected subsystems") {
  struct Row {
    const char* type;
    Root theta;
  };
  for (const Row& row : {Row{"A2", Root{1, 1}}, Row{"B2", Root{1, 2}}, Row{"C2", Root{2, 1}},
                         Row{"G2", Root{3, 2}}, Row{"F4", Root{2, 3, 4, 2}},
                         Row{"E8", Root{2, 3, 4, 6, 5, 4, 3, 2}}, Row{"D4", Root{1, 2, 1, 1}}}) {
    CAPTURE(row.type);
    auto rs = build_root_system(row.type);
    SubSystem sub = sub_system(rs, IndexSet::full(rs->rank()));
    REQUIRE(sub.component_count() == 1);
    CHECK(sub.highest_roots[0] == row.theta);
  }
}

TEST_CASE("subsystems") {
  auto a2 = build_root_system("A2");
  SubSystem one = sub_system(a2, {1});
  CHECK(one.roots == std::vector<Root>{Root{1, 0}, Root{-1, 0}});
  CHECK(one.highest_roots == std::vector<Root>{Root{1, 0}});

  SubSystem none = sub_system(a2, {});
  CHECK(none.component_count() == 0);
  CHECK(none.roots.empty());

  auto a3 = build_root_system("A3");
  SubSystem ends = sub_system(a3, {1, 3});
  CHECK(ends.component_count() == 2);
  CHECK(ends.highest_roots == std::vector<Root>{Root{1, 0, 0}, Root{0, 0, 1}});
  CHECK(ends.positive.size() == 2);
}

TEST_CASE("roots outside a parabolic") {
  auto a2 = build_root_system("A2");
  SubSystem sub = sub_system(a2, {1, 2});
  CHECK(delta_J_K(sub, {1}, Sign::Minus) == RootSet{Root{0, -1}, Root{-1, -1}});
  CHECK(delta_J_K(sub, {1, 2}, Sign::Minus).empty());
  CHECK(delta_J_K(sub, {}, Sign::Minus) == RootSet(sub.negative.begin(), sub.negative.end()));
  CHECK_THROWS_AS(delta_J_K(sub_system(a2, {1}), {2}, Sign::Plus), std::invalid_argument);
}

TEST_CASE("invalid input is rejected") {
  CHECK_THROWS_AS(build_root_system("Z9"), std::invalid_argument);
  CHECK_THROWS_AS(build_root_system("D3"), std::invalid_argument);
  CHECK_THROWS_AS(build_root_system("E9"), std::invalid_argument);
  CHECK_THROWS_AS(build_root_system(CartanData::from_matrix({{2, -2}, {-2, 2}}, "affine")),
                  std::invalid_argument);
  CHECK_THROWS_AS(build_root_system(CartanData::from_matrix({{2, -1}, {0, 2}}, "bad")),
                  std::invalid_argument);
}

TEST_CASE("reducible systems from a matrix") {
  auto rs = build_root_system(CartanData::from_matrix({{2, 0}, {0, 2}}, "A1xA1"));
  CHECK(rs->roots().size() == 4);
  SubSystem sub = sub_system(rs, {1, 2});
  CHECK(sub.component_count() == 2);
}

TEST_CASE("index sets") {
  IndexSet s{3, 1, 3};
  CHECK(s.values() == std::vector<int>{1, 3});
  CHECK(to_string(s) == "{1,3}");
  CHECK(IndexSet{1}.is_subset_of(s));
  CHECK(s.minus({1}) == IndexSet{3});
  auto subs = IndexSet{1, 2}.subsets();
  REQUIRE(subs.size() == 4);
  CHECK(subs.front().empty());
  CHECK(subs.back() == IndexSet{1, 2});
}
