#include "affroot/biconvex.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace affroot {

BiconvexParam BiconvexParam::make(const SubSystem& sub, IndexSet K, WeylElement u,
                                  AffineWeylElement y) {
  BiconvexParam p{sub.J, std::move(K), std::move(u), std::move(y)};
  p.validate(sub);
  return p;
}

void BiconvexParam::validate(const SubSystem& sub) const {
  if (J != sub.J) throw std::invalid_argument("parameter J does not match the subsystem");
  if (!K.is_subset_of(J)) throw std::invalid_argument("K must be a subset of J");
  if (!in_parabolic(u, J)) throw std::invalid_argument("u must lie in W_J");
  for (int k : K)
    if (u.apply(sub.system->simple_root(k)).is_negative())
      throw std::invalid_argument("u must be a minimal coset representative for K");
  if (!in_affine_parabolic(y, K)) throw std::invalid_argument("y must lie in W_K");
}

bool BiconvexSetView::contains(const AffineRoot& b) const {
  if (b.is_positive() && tail.count(b.classical)) return true;
  return finite.count(b) > 0;
}

AffineRootSet BiconvexSetView::truncate(int N) const {
  AffineRootSet out = angle_bracket(tail, N);
  for (const AffineRoot& b : finite)
    if (b.level <= N) out.insert(b);
  return out;
}

bool is_biconvex_window(const AffineRootSet& S, const SubSystem& sub, int N) {
  for (const AffineRoot& b : S)
    if (!b.is_positive() || !in_delta_J(sub, b) || b.level > N)
      throw std::invalid_argument("window set leaves the level <= N part of Delta_J+");
  auto is_pos_root = [&](const AffineRoot& b) { return b.is_positive() && in_delta_J(sub, b); };
  for (auto a = S.begin(); a != S.end(); ++a)
    for (auto b = a; b != S.end(); ++b) {
      AffineRoot s = *a + *b;
      if (s.level <= N && is_pos_root(s) && !S.count(s)) return false;
    }
  const AffineRootSet window = positive_window(sub, N);
  for (const AffineRoot& sigma : S)
    for (const AffineRoot& b : window) {
      if (b.level > sigma.level) break;
      AffineRoot g = {sigma.level - b.level, sigma.classical - b.classical};
      if (is_pos_root(g) && !S.count(b) && !S.count(g)) return false;
    }
  return true;
}

BiconvexSetView nabla(const BiconvexParam& p, const SubSystem& sub, int N) {
  p.validate(sub);
  SubSystem subK = sub_system(sub.system, p.K);
  BiconvexSetView v;
  v.J = p.J;
  v.tail = pointed_biclosed(sub, p.K, p.u);
  for (const AffineRoot& b : inversion_set_affine(p.y, subK))
    v.finite.insert({b.level, p.u.apply(b.classical)});
  v.cutoff = N;
  return v;
}

std::optional<AffineWeylElement> peel(const AffineRootSet& T, const SubSystem& subK) {
  AffineRootSet rest = T;
  AffineWeylElement y = AffineWeylElement::identity(subK.system);
  const auto alphabet = letters(subK);
  while (!rest.empty()) {
    const AffineLetter* pick = nullptr;
    for (const AffineLetter& s : alphabet)
      if (rest.count(simple_root(subK, s))) {
        pick = &s;
        break;
      }
    if (!pick) return std::nullopt;
    rest.erase(simple_root(subK, *pick));
    AffineWeylElement s = letter_element(subK, *pick);
    rest = s.apply(rest);
    y = y * s;
    for (const AffineRoot& b : rest)
      if (!b.is_positive()) return std::nullopt;
  }
  return y;
}

namespace {

BiconvexParam finish_parametrize(const SubSystem& sub, const PointedBiclosedFactor& f,
                                 const AffineRootSet& C) {
  SubSystem subK = sub_system(sub.system, f.K);
  WeylElement uinv = f.u.inverse();
  AffineRootSet T;
  for (const AffineRoot& b : C) {
    AffineRoot t{b.level, uinv.apply(b.classical)};
    if (!in_delta_J(subK, t) || !t.is_positive())
      throw std::invalid_argument("finite part does not lie in u Delta_K+; not a biconvex set");
    T.insert(t);
  }
  auto y = peel(T, subK);
  if (!y || inversion_set_affine(*y, subK) != T)
    throw std::invalid_argument("finite part is not an inversion set; not a biconvex set");
  return BiconvexParam::make(sub, f.K, f.u, *y);
}

}  // namespace

BiconvexParam parametrize(const AffineRootSet& window, const RootSet& tail, const SubSystem& sub,
                          int N) {
  PointedBiclosedFactor f = factor_pointed_biclosed(tail, sub);
  WeylElement uinv = f.u.inverse();
  AffineRootSet C, rest;
  for (const AffineRoot& b : window) {
    if (!b.is_real()) throw std::invalid_argument("parametrize needs a real set");
    Root back = uinv.apply(b.classical);
    bool in_K = true;
    for (int i = 0; i < back.rank(); ++i)
      if (back[i] != 0 && !f.K.contains(i + 1)) in_K = false;
    (in_K ? C : rest).insert(b);
  }
  if (rest != angle_bracket(tail, N))
    throw std::invalid_argument("window does not match its tail; not a biconvex set");
  return finish_parametrize(sub, f, C);
}

BiconvexParam parametrize(const BiconvexSetView& view, const SubSystem& sub) {
  PointedBiclosedFactor f = factor_pointed_biclosed(view.tail, sub);
  AffineRootSet C;
  for (const AffineRoot& b : view.finite)
    if (!(b.is_positive() && view.tail.count(b.classical))) C.insert(b);
  return finish_parametrize(sub, f, C);
}

bool dot_subset(const BiconvexParam& p1, const BiconvexParam& p2) {
  if (p1.J != p2.J) throw std::invalid_argument("parameters over different J");
  if (!p2.K.is_subset_of(p1.K)) return false;
  return in_parabolic(p2.u.inverse() * p1.u, p1.K);
}

char kind_tag(BiconvexKind k) {
  switch (k) {
    case BiconvexKind::FiniteReal: return 'a';
    case BiconvexKind::CofiniteWithImaginary: return 'b';
    case BiconvexKind::InfiniteReal: return 'c';
    case BiconvexKind::InfiniteCoreal: return 'd';
  }
  return '?';
}

BiconvexClassification classify_biconvex(const AffineRootSet& S, const RootSet& tail,
                                         const SubSystem& sub, int N) {
  if (!is_biconvex_window(S, sub, N)) throw std::invalid_argument("not biconvex");
  int imaginary = 0;
  for (const AffineRoot& b : S)
    if (b.is_imaginary()) ++imaginary;
  if (imaginary == 0) {
    BiconvexParam p = parametrize(S, tail, sub, N);
    if (!p.is_infinite()) return {BiconvexKind::FiniteReal, p.y, std::nullopt};
    return {BiconvexKind::InfiniteReal, std::nullopt, p};
  }
  if (imaginary != N) throw std::invalid_argument("not biconvex: imaginary roots only partly present");
  AffineRootSet complement;
  for (const AffineRoot& b : positive_window(sub, N))
    if (!S.count(b)) complement.insert(b);
  RootSet ctail;
  for (const Root& r : sub.roots)
    if (!tail.count(r)) ctail.insert(r);
  BiconvexParam p = parametrize(complement, ctail, sub, N);
  if (!p.is_infinite()) return {BiconvexKind::CofiniteWithImaginary, p.y, std::nullopt};
  return {BiconvexKind::InfiniteCoreal, std::nullopt, p};
}

AffineRootSet real_window(const SubSystem& sub, int N) { return positive_window(sub, N, false); }

std::vector<AffineRootSet> enumerate_biconvex_bruteforce(const SubSystem& sub, int N, int max_size,
                                                         int max_window) {
  const AffineRootSet win = real_window(sub, N);
  const std::vector<AffineRoot> pool(win.begin(), win.end());
  const int n = static_cast<int>(pool.size());
  if (n > max_window) {
    std::ostringstream os;
    os << "window has " << n << " real roots, limit is " << max_window;
    throw std::length_error(os.str());
  }
  // A real set inside levels <= N is decided exactly by the window at 2N:
  // C(i) sums reach at most 2N and C(ii) only involves summands of level <= N.
  std::vector<AffineRootSet> out;
  std::vector<int> pick;
  for (int k = 0; k <= std::min(max_size, n); ++k) {
    pick.resize(k);
    for (int i = 0; i < k; ++i) pick[i] = i;
    for (;;) {
      AffineRootSet S;
      for (int i : pick) S.insert(pool[i]);
      if (is_biconvex_window(S, sub, 2 * N)) out.push_back(std::move(S));
      int i = k - 1;
      while (i >= 0 && pick[i] == n - k + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return out;
}

}  // namespace affroot
