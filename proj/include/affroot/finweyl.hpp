// The finite Weyl group and the classification of subsets of a finite root
// system into closed, biclosed, parabolic, pointed and symmetric sets.

#pragma once

#include <vector>

#include "affroot/cartan.hpp"

namespace affroot {

// Element of the finite Weyl group, stored as the images of the simple roots.
class WeylElement {
 public:
  WeylElement() = default;
  static WeylElement identity(RootSystemPtr system);
  static WeylElement simple(RootSystemPtr system, int i);
  // s_a for a root a.
  static WeylElement reflection(RootSystemPtr system, const Root& a);
  // Product s_{w[0]} s_{w[1]} ...; the word need not be reduced.
  static WeylElement from_word(RootSystemPtr system, const std::vector<int>& word);

  const RootSystemPtr& system() const { return system_; }
  const std::vector<Root>& images() const { return images_; }
  // A reduced word, computed at construction.
  const std::vector<int>& word() const { return word_; }
  int length() const { return static_cast<int>(word_.size()); }
  bool is_identity() const { return word_.empty(); }

  Root apply(const Root& r) const;
  CorootVector apply(const CorootVector& c) const;
  RootSet apply(const RootSet& s) const;

  WeylElement inverse() const;
  friend WeylElement operator*(const WeylElement& a, const WeylElement& b);

  bool operator==(const WeylElement& o) const { return images_ == o.images_; }
  auto operator<=>(const WeylElement& o) const { return images_ <=> o.images_; }

 private:
  WeylElement(RootSystemPtr system, std::vector<Root> images);

  RootSystemPtr system_;
  std::vector<Root> images_;
  std::vector<CorootVector> coroot_images_;
  std::vector<int> word_;
};

// {beta in Delta_J+ : w^{-1} beta < 0}.
RootSet inversion_set(const WeylElement& w, const IndexSet& J);
// Greedy left-descent word: repeatedly strip the smallest s_i with w^{-1}(alpha_i) < 0.
std::vector<int> reduced_word(const WeylElement& w);
int length(const WeylElement& w);
bool in_parabolic(const WeylElement& w, const IndexSet& J);

struct CosetDecomposition {
  WeylElement w_upper;  // minimal representative w^K
  WeylElement w_lower;  // w_K in W_K
};

// w = w^K w_K with w^K(alpha_k) > 0 for k in K.
CosetDecomposition coset_decompose(const WeylElement& w, const IndexSet& K);

struct SubsetClassification {
  bool closed = false;
  bool coclosed_in_J = false;
  bool biclosed_in_J = false;
  bool parabolic_in_J = false;
  bool symmetric = false;
  bool pointed = false;
  RootSet pointed_part;
  RootSet symmetric_part;
};

// Throws std::invalid_argument if P is not contained in Delta_J.
SubsetClassification classify_subset(const RootSet& P, const SubSystem& sub);

bool is_closed(const RootSystem& system, const RootSet& P);
// Smallest closed set containing P.
RootSet closure(const RootSystem& system, RootSet P);

// Some w in W_J with wP inside Delta_J-. P must be pointed and closed.
WeylElement positivize(const RootSet& P, const SubSystem& sub);

struct PointedBiclosedFactor {
  IndexSet K;
  WeylElement u;
};

// The unique (K, u) with u in W^K_J and P = u Delta^K_J-.
// Throws std::invalid_argument if P is not pointed biclosed in Delta_J.
PointedBiclosedFactor factor_pointed_biclosed(const RootSet& P, const SubSystem& sub);

// u Delta^K_J(sign).
RootSet pointed_biclosed(const SubSystem& sub, const IndexSet& K, const WeylElement& u,
                         Sign sign = Sign::Minus);

// All of W_J, ordered by length then by reduced word.
std::vector<WeylElement> enumerate_group(RootSystemPtr system, const IndexSet& J);
// Elements w of W_J with w(alpha_k) > 0 for every k in K.
std::vector<WeylElement> min_coset_reps(RootSystemPtr system, const IndexSet& J,
                                        const IndexSet& K);

}  // namespace affroot
