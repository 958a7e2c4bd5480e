// Biconvex sets in Delta_J+, their parametrization by triples (K, u, y) and
// the brute-force enumeration oracle.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "affroot/affine.hpp"

namespace affroot {

// (K, u, y) with u a minimal coset representative in W^K_J and y in W_K.
struct BiconvexParam {
  IndexSet J;
  IndexSet K;
  WeylElement u;
  AffineWeylElement y;

  static BiconvexParam make(const SubSystem& sub, IndexSet K, WeylElement u, AffineWeylElement y);
  // Throws std::invalid_argument when the triple is not in the parameter set.
  void validate(const SubSystem& sub) const;
  bool is_infinite() const { return K != J; }

  bool operator==(const BiconvexParam& o) const {
    return J == o.J && K == o.K && u == o.u && y == o.y;
  }
};

// Exact description of nabla(K, u, y): the positive roots over the tail plus
// a finite set. Membership is decidable at every level; cutoff only marks
// how far the view has been materialized.
struct BiconvexSetView {
  IndexSet J;
  RootSet tail;          // u Delta^K_J-
  AffineRootSet finite;  // u Phi_K(y)
  int cutoff = 0;

  bool contains(const AffineRoot& b) const;
  bool is_infinite() const { return !tail.empty(); }
  // All elements of level <= N.
  AffineRootSet truncate(int N) const;
};

// C(i) and C(ii) inside Delta_J+ for every pair whose sum has level <= N.
// Throws std::invalid_argument if S leaves Delta_J+ or exceeds level N.
bool is_biconvex_window(const AffineRootSet& S, const SubSystem& sub, int N);

BiconvexSetView nabla(const BiconvexParam& p, const SubSystem& sub, int N);

// Recovers the parameter of a real biconvex set from its level <= N window
// and its tail support {e : <e> is eventually inside B}. N must reach every
// level of the finite part. Throws std::invalid_argument if the data do not
// describe a biconvex set.
BiconvexParam parametrize(const AffineRootSet& window, const RootSet& tail, const SubSystem& sub,
                          int N);
BiconvexParam parametrize(const BiconvexSetView& view, const SubSystem& sub);

// y in W_K with Phi_K(y) = T, by stripping simple roots of Pi_K in letter
// order. nullopt if T is not an inversion set.
std::optional<AffineWeylElement> peel(const AffineRootSet& T, const SubSystem& subK);

// nabla(p1) is contained in nabla(p2) up to finitely many elements.
bool dot_subset(const BiconvexParam& p1, const BiconvexParam& p2);

enum class BiconvexKind { FiniteReal, CofiniteWithImaginary, InfiniteReal, InfiniteCoreal };
char kind_tag(BiconvexKind k);

struct BiconvexClassification {
  BiconvexKind kind;
  // (a): B = Phi_J(z); (b): B = Delta_J+ minus Phi_J(z).
  std::optional<AffineWeylElement> z;
  // (c): B = nabla(param); (d): B = Delta_J+ minus nabla(param).
  std::optional<BiconvexParam> param;
};

// S is the level <= N window of B (imaginary roots allowed) and tail is
// {e : <e> is eventually inside B}.
BiconvexClassification classify_biconvex(const AffineRootSet& S, const RootSet& tail,
                                         const SubSystem& sub, int N);

// Real roots of Delta_J+ with level <= N.
AffineRootSet real_window(const SubSystem& sub, int N);

// Every subset of the real level <= N window with at most max_size elements
// that is biconvex in Delta_J+. Refuses windows of more than max_window roots.
std::vector<AffineRootSet> enumerate_biconvex_bruteforce(const SubSystem& sub, int N, int max_size,
                                                         int max_window = 24);

}  // namespace affroot
