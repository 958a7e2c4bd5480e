#include <doctest.h>

#include <map>
#include <random>
#include <stdexcept>

#include "affroot/affine.hpp"

using namespace affroot;

namespace {

AffineRoot ar(int level, Root r) { return {level, std::move(r)}; }

// Coefficients up to q^n of prod_i [d_i]_q / (1 - q^(d_i - 1)), the growth
// series of the affine Weyl group with the given degrees.
std::vector<long> bott_series(const std::vector<int>& degrees, int n) {
  std::vector<long> c(n + 1, 0);
  c[0] = 1;
  for (int d : degrees) {
    std::vector<long> next(n + 1, 0);
    for (int i = 0; i <= n; ++i)
      for (int k = 0; k < d && i + k <= n; ++k) next[i + k] += c[i];
    c = next;
    for (int i = d - 1; i <= n; ++i) c[i] += c[i - (d - 1)];
  }
  return c;
}

}  // namespace

TEST_CASE("translations and the null root") {
  auto a1 = build_root_system("A1");
  auto t = AffineWeylElement::translation(a1, CorootVector{1});
  CHECK(t.apply(AffineRoot::imaginary(1, 1)) == AffineRoot::imaginary(1, 1));
  CHECK(t.apply(ar(0, Root{1})) == ar(-2, Root{1}));
  CHECK(AffineWeylElement::identity(a1).apply(ar(3, Root{-1})) == ar(3, Root{-1}));
}

TEST_CASE("letters of A1") {
  auto a1 = build_root_system("A1");
  SubSystem sub = sub_system(a1, {1});
  auto s0 = letter_element(sub, AffineLetter::affine(1));
  auto s1 = letter_element(sub, AffineLetter::classical(1));
  CHECK(simple_root(sub, AffineLetter::affine(1)) == ar(1, Root{-1}));
  CHECK(s0.apply(ar(0, Root{1})) == ar(2, Root{-1}));
  CHECK(s1.apply(ar(0, Root{1})) == ar(0, Root{-1}));
  CHECK((s0 * s0).is_identity());
  CHECK((s1 * s1).is_identity());
  CHECK(letters(sub) == std::vector<AffineLetter>{AffineLetter::classical(1), AffineLetter::affine(1)});
}

TEST_CASE("affine inversion sets") {
  auto a1 = build_root_system("A1");
  SubSystem sub = sub_system(a1, {1});
  auto s0 = letter_element(sub, AffineLetter::affine(1));
  auto s1 = letter_element(sub, AffineLetter::classical(1));
  CHECK(inversion_set_affine(AffineWeylElement::identity(a1), sub).empty());
  CHECK(inversion_set_affine(s0, sub) == AffineRootSet{ar(1, Root{-1})});
  CHECK(inversion_set_affine(s0 * s1, sub) == AffineRootSet{ar(1, Root{-1}), ar(2, Root{-1})});

  auto a2 = build_root_system("A2");
  CHECK_THROWS_AS(inversion_set_affine(AffineWeylElement::finite(WeylElement::simple(a2, 2)),
                                       sub_system(a2, {1})),
                  std::invalid_argument);
}

TEST_CASE("reduced words of translations") {
  auto a1 = build_root_system("A1");
  SubSystem sub1 = sub_system(a1, {1});
  auto t = AffineWeylElement::translation(a1, CorootVector{1});
  CHECK(reduced_word_J(t, sub1) == AffineWord{AffineLetter::affine(1), AffineLetter::classical(1)});
  CHECK(reduced_word_J(AffineWeylElement::identity(a1), sub1).empty());

  auto a2 = build_root_system("A2");
  SubSystem sub2 = sub_system(a2, {1, 2});
  auto ttheta = AffineWeylElement::translation(a2, CorootVector{1, 1});
  CHECK(length_J(ttheta, sub2) == 4);
  CHECK(word_element(sub2, reduced_word_J(ttheta, sub2)) == ttheta);
}

TEST_CASE("affine reflections") {
  auto b2 = build_root_system("B2");
  for (const Root& e : b2->roots())
    for (int m = -2; m <= 2; ++m) {
      auto s = AffineWeylElement::reflection(b2, ar(m, e));
      CHECK(s.apply(ar(m, e)) == ar(-m, -e));
      CHECK((s * s).is_identity());
    }
  CHECK_THROWS_AS(AffineWeylElement::reflection(b2, AffineRoot::imaginary(2, 1)), std::invalid_argument);
}

TEST_CASE("products act by composition") {
  std::mt19937 rng(7);
  for (const char* t : {"A2", "C2", "G2"}) {
    auto rs = build_root_system(t);
    SubSystem sub = sub_system(rs, IndexSet::full(rs->rank()));
    auto abc = letters(sub);
    std::uniform_int_distribution<std::size_t> pick(0, abc.size() - 1);
    auto random_element = [&] {
      AffineWeylElement x = AffineWeylElement::identity(rs);
      for (int i = 0; i < 6; ++i) x = x * letter_element(sub, abc[pick(rng)]);
      return x;
    };
    for (int trial = 0; trial < 50; ++trial) {
      auto x = random_element(), y = random_element();
      CHECK((x * x.inverse()).is_identity());
      CHECK((x.inverse() * x).is_identity());
      for (const Root& e : rs->roots())
        for (int m = -1; m <= 1; ++m) CHECK((x * y).apply(ar(m, e)) == x.apply(y.apply(ar(m, e))));
    }
  }
}

TEST_CASE("window helpers") {
  auto a1 = build_root_system("A1");
  CHECK(angle_bracket({Root{1}}, 2) == AffineRootSet{ar(0, Root{1}), ar(1, Root{1}), ar(2, Root{1})});
  CHECK(angle_bracket({Root{-1}}, 2) == AffineRootSet{ar(1, Root{-1}), ar(2, Root{-1})});
  CHECK(angle_bracket({}, 5).empty());

  SubSystem sub1 = sub_system(a1, {1});
  CHECK(delta_u_pm(sub1, {}, WeylElement::identity(a1), Sign::Minus, 3) ==
        AffineRootSet{ar(1, Root{-1}), ar(2, Root{-1}), ar(3, Root{-1})});
  CHECK(delta_u_pm(sub1, {1}, WeylElement::identity(a1), Sign::Minus, 3).empty());
  CHECK(positive_window(sub1, 1).size() == 4);
  CHECK(positive_window(sub1, 1, false).size() == 3);

  auto a2 = build_root_system("A2");
  SubSystem sub2 = sub_system(a2, {1, 2});
  CHECK(delta_u_pm(sub2, {1}, WeylElement::identity(a2), Sign::Minus, 1) ==
        AffineRootSet{ar(1, Root{0, -1}), ar(1, Root{-1, -1})});
}

TEST_CASE("ball sizes follow the growth series") {
  struct Row {
    const char* type;
    std::vector<int> degrees;
  };
  for (const Row& row : {Row{"A1", {2}}, Row{"A2", {2, 3}}, Row{"B2", {2, 4}}, Row{"G2", {2, 6}}}) {
    CAPTURE(row.type);
    auto rs = build_root_system(row.type);
    SubSystem sub = sub_system(rs, IndexSet::full(rs->rank()));
    const int radius = 6;
    std::map<int, long> counts;
    for (const BallEntry& e : cayley_ball(sub, radius)) {
      ++counts[e.distance];
      CHECK(length_J(e.element, sub) == e.distance);
    }
    auto want = bott_series(row.degrees, radius);
    for (int k = 0; k <= radius; ++k) CHECK(counts[k] == want[k]);
  }
}

TEST_CASE("parabolic membership") {
  auto a3 = build_root_system("A3");
  SubSystem sub = sub_system(a3, {1, 3});
  CHECK(letters(sub).size() == 4);
  auto x = word_element(sub, {AffineLetter::affine(1), AffineLetter::affine(2), AffineLetter::classical(3)});
  CHECK(in_affine_parabolic(x, {1, 3}));
  CHECK_FALSE(in_affine_parabolic(x, {1}));
  CHECK(length_J(x, sub) == 3);
  CHECK_FALSE(in_delta_J(sub, ar(0, Root{1, 1, 0})));
  CHECK(in_delta_J(sub, ar(2, Root{0, 0, -1})));
}
