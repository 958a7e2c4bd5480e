#include <doctest.h>

#include <random>
#include <set>
#include <stdexcept>

#include "affroot/format.hpp"
#include "affroot/words.hpp"

using namespace affroot;

namespace {

AffineRoot ar(int level, Root r) { return {level, std::move(r)}; }

const AffineLetter c1 = AffineLetter::classical(1);
const AffineLetter c2 = AffineLetter::classical(2);
const AffineLetter a1 = AffineLetter::affine(1);

}  // namespace

TEST_CASE("prefixes and phi in A1") {
  auto rs = build_root_system("A1");
  SubSystem sub = sub_system(rs, {1});
  InfiniteWord s{{1}, {}, {a1, c1}};
  CHECK(prefix(s, sub, 0).is_identity());
  CHECK(phi_at(s, sub, 1) == ar(1, Root{-1}));
  CHECK(phi_at(s, sub, 2) == ar(2, Root{-1}));
  CHECK(phi_at(s, sub, 5) == ar(5, Root{-1}));
  CHECK(phi_infinity(s, sub, 2) == AffineRootSet{ar(1, Root{-1}), ar(2, Root{-1})});

  InfiniteWord t{{1}, {}, {c1, a1}};
  CHECK(phi_infinity(t, sub, 1) == AffineRootSet{ar(0, Root{1}), ar(1, Root{1})});
  CHECK(phi_infinity(t, sub, 0) == AffineRootSet{ar(0, Root{1})});
}

TEST_CASE("certificates") {
  auto rs = build_root_system("A2");
  SubSystem sub = sub_system(rs, {1, 2});
  auto z = z_word(sub, {});
  auto cert = certify(z, sub);
  CHECK(cert.ok);
  CHECK(cert.order == 1);
  CHECK(cert.nu == CorootVector{1, 1});

  CHECK_FALSE(certify(InfiniteWord{{1, 2}, {}, {c1}}, sub).ok);
  CHECK_FALSE(certify(InfiniteWord{{1, 2}, {}, {c1, c2}}, sub).ok);
  CHECK_FALSE(certify(InfiniteWord{{1, 2}, {c1}, {c1, c2, a1}}, sub).ok);
  CHECK_THROWS_AS(phi_infinity(InfiniteWord{{1, 2}, {}, {c1}}, sub, 3), std::invalid_argument);
  CHECK_THROWS_AS(certify(InfiniteWord{{1}, {}, {c1}}, sub), std::invalid_argument);
  CHECK_THROWS_AS(certify(InfiniteWord{{1, 2}, {}, {}}, sub), std::invalid_argument);
}

TEST_CASE("certificate agrees with a long positivity scan") {
  auto rs = build_root_system("B2");
  SubSystem sub = sub_system(rs, {1, 2});
  const auto abc = letters(sub);
  std::mt19937 rng(3);
  std::uniform_int_distribution<std::size_t> pick(0, abc.size() - 1);
  std::uniform_int_distribution<int> size(1, 5);
  int accepted = 0;
  for (int trial = 0; trial < 400; ++trial) {
    InfiniteWord s{{1, 2}, {}, {}};
    for (int i = size(rng) - 1; i > 0; --i) s.head.push_back(abc[pick(rng)]);
    for (int i = size(rng); i > 0; --i) s.period.push_back(abc[pick(rng)]);
    std::set<AffineRoot> seen;
    bool reduced = true;
    AffineWeylElement z = AffineWeylElement::identity(rs);
    for (long p = 1; p <= 600 && reduced; ++p) {
      AffineRoot phi = z.apply(simple_root(sub, s.at(p)));
      reduced = phi.is_positive() && seen.insert(phi).second;
      z = z * letter_element(sub, s.at(p));
    }
    CAPTURE(format_word(s.head));
    CAPTURE(format_word(s.period));
    CHECK(certify(s, sub).ok == reduced);
    accepted += reduced;
  }
  CHECK(accepted > 0);
}

TEST_CASE("z words") {
  auto r1 = build_root_system("A1");
  SubSystem sub1 = sub_system(r1, {1});
  CHECK(z_lambda(sub1, {}) == CorootVector{1});
  CHECK(z_word(sub1, {}).period == AffineWord{a1, c1});
  CHECK_THROWS_AS(z_word(sub1, {1}), std::invalid_argument);

  auto r2 = build_root_system("A2");
  SubSystem sub2 = sub_system(r2, {1, 2});
  CHECK(z_lambda(sub2, {}) == CorootVector{1, 1});
  CHECK(z_word(sub2, {}).period.size() == 4);
  auto lam = z_lambda(sub2, {1});
  CHECK(r2->pairing(Root{1, 0}, lam) == 0);
  CHECK(r2->pairing(Root{0, 1}, lam) > 0);
  CHECK(lam == CorootVector{1, 2});
  CHECK(z_lambda(sub2, {2}) == CorootVector{2, 1});

  auto p = classify_word(z_word(sub2, {1}), sub2).canonical_param;
  CHECK(p.K == IndexSet{1});
  CHECK(p.u.is_identity());
  CHECK(p.y.is_identity());
  CHECK(phi_infinity(z_word(sub2, {1}), sub2, 5) ==
        delta_u_pm(sub2, {1}, WeylElement::identity(r2), Sign::Minus, 5));
}

TEST_CASE("z words on rank four and eight") {
  for (const char* t : {"F4", "D4", "E8"}) {
    CAPTURE(t);
    auto rs = build_root_system(t);
    SubSystem sub = sub_system(rs, IndexSet::full(rs->rank()));
    for (const IndexSet& K : {IndexSet{}, IndexSet{1}, IndexSet{2, 3}}) {
      auto lam = z_lambda(sub, K);
      for (int j : sub.J) {
        int v = rs->pairing(rs->simple_root(j), lam);
        CHECK((K.contains(j) ? v == 0 : v > 0));
      }
    }
  }
}

TEST_CASE("action in A1") {
  auto rs = build_root_system("A1");
  SubSystem sub = sub_system(rs, {1});
  InfiniteWord z = z_word(sub, {});
  auto one = AffineWeylElement::identity(rs);
  CHECK(equivalent(act(one, z, sub), z, sub));

  auto s1 = AffineWeylElement::finite(WeylElement::simple(rs, 1));
  InfiniteWord t = act(s1, z, sub);
  CHECK(certify(t, sub).ok);
  CHECK(phi_infinity(t, sub, 2) == AffineRootSet{ar(0, Root{1}), ar(1, Root{1}), ar(2, Root{1})});
  CHECK(equivalent(t, InfiniteWord{{1}, {}, {c1, a1}}, sub));
  CHECK_FALSE(equivalent(z, InfiniteWord{{1}, {}, {c1, a1}}, sub));
  CHECK(orbit_invariant(t, sub).empty());
  CHECK(orbit_invariant(z, sub).empty());

  auto a2 = build_root_system("A2");
  CHECK_THROWS_AS(act(AffineWeylElement::finite(WeylElement::simple(a2, 2)),
                      z_word(sub_system(a2, {1}), {}), sub_system(a2, {1})),
                  std::invalid_argument);
}

TEST_CASE("rotation with a head gives the same word class") {
  auto rs = build_root_system("A2");
  SubSystem sub = sub_system(rs, {1, 2});
  InfiniteWord z = z_word(sub, {});
  InfiniteWord r{z.J, {z.period.front()}, {}};
  r.period.assign(z.period.begin() + 1, z.period.end());
  r.period.push_back(z.period.front());
  CHECK(equivalent(z, r, sub));
  CHECK(phi_infinity(z, sub, 6) == phi_infinity(r, sub, 6));
}

TEST_CASE("chi") {
  auto r1 = build_root_system("A1");
  SubSystem sub1 = sub_system(r1, {1});
  auto one1 = AffineWeylElement::identity(r1);
  auto base = BiconvexParam::make(sub1, {}, WeylElement::identity(r1), one1);
  CHECK(chi(base, sub1) == z_word(sub1, {}));
  auto flip = BiconvexParam::make(sub1, {}, WeylElement::simple(r1, 1), one1);
  CHECK(phi_infinity(chi(flip, sub1), sub1, 3) == angle_bracket({Root{1}}, 3));
  CHECK_THROWS_AS(chi(BiconvexParam::make(sub1, {1}, WeylElement::identity(r1), one1), sub1),
                  std::invalid_argument);

  auto r2 = build_root_system("A2");
  SubSystem sub2 = sub_system(r2, {1, 2});
  auto y = letter_element(sub_system(r2, {1}), c1);
  auto p = BiconvexParam::make(sub2, {1}, WeylElement::identity(r2), y);
  const int N = 4;
  AffineRootSet want = delta_u_pm(sub2, {1}, WeylElement::identity(r2), Sign::Minus, N);
  want.insert(ar(0, Root{1, 0}));
  CHECK(phi_infinity(chi(p, sub2), sub2, N) == want);
  CHECK(classify_word(chi(p, sub2), sub2).canonical_param == p);
}

TEST_CASE("orbit invariant is constant along random actions") {
  auto rs = build_root_system("C2");
  SubSystem sub = sub_system(rs, {1, 2});
  const auto abc = letters(sub);
  std::mt19937 rng(11);
  std::uniform_int_distribution<std::size_t> pick(0, abc.size() - 1);
  for (const IndexSet& K : {IndexSet{}, IndexSet{1}, IndexSet{2}}) {
    InfiniteWord s = z_word(sub, K);
    for (int i = 0; i < 25; ++i) {
      AffineWeylElement x = AffineWeylElement::identity(rs);
      for (int k = 0; k < 3; ++k) x = x * letter_element(sub, abc[pick(rng)]);
      s = act(x, s, sub);
      CHECK(orbit_invariant(s, sub) == K);
    }
  }
}
