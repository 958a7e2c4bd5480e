// Untwisted affine roots, the affine Weyl group in translation form
// x = t_lambda w, inversion sets and reduced words over the letters S_J.

#pragma once

#include <compare>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "affroot/cartan.hpp"
#include "affroot/finweyl.hpp"

namespace affroot {

// m delta + classical. Imaginary when the classical part is zero.
struct AffineRoot {
  int level = 0;
  Root classical;

  static AffineRoot imaginary(int rank, int level) { return {level, Root::zero(rank)}; }

  bool is_real() const { return !classical.is_zero(); }
  bool is_imaginary() const { return classical.is_zero() && level != 0; }
  bool is_positive() const { return level > 0 || (level == 0 && classical.is_positive()); }
  bool is_negative() const { return level < 0 || (level == 0 && classical.is_negative()); }

  AffineRoot operator-() const { return {-level, -classical}; }
  friend AffineRoot operator+(const AffineRoot& a, const AffineRoot& b) {
    return {a.level + b.level, a.classical + b.classical};
  }
  auto operator<=>(const AffineRoot&) const = default;
  bool operator==(const AffineRoot&) const = default;
};

using AffineRootSet = std::set<AffineRoot>;

// x = t_lambda o wbar.
class AffineWeylElement {
 public:
  AffineWeylElement() = default;
  AffineWeylElement(CorootVector lambda, WeylElement wbar);
  static AffineWeylElement identity(RootSystemPtr system);
  static AffineWeylElement translation(RootSystemPtr system, CorootVector lambda);
  static AffineWeylElement finite(WeylElement w);
  // The reflection in the real root b.
  static AffineWeylElement reflection(RootSystemPtr system, const AffineRoot& b);

  const CorootVector& lambda() const { return lambda_; }
  const WeylElement& wbar() const { return wbar_; }
  const RootSystemPtr& system() const { return wbar_.system(); }
  bool is_identity() const { return lambda_.is_zero() && wbar_.is_identity(); }

  AffineRoot apply(const AffineRoot& b) const;
  AffineRootSet apply(const AffineRootSet& s) const;
  AffineWeylElement inverse() const;
  friend AffineWeylElement operator*(const AffineWeylElement& a, const AffineWeylElement& b);

  auto operator<=>(const AffineWeylElement&) const = default;
  bool operator==(const AffineWeylElement&) const = default;

 private:
  CorootVector lambda_;
  WeylElement wbar_;
};

// Classical(j) is s_{alpha_j}; Affine(c) is s_{delta - theta_c} for the c-th
// component of J. Classical letters sort before affine ones.
struct AffineLetter {
  enum class Kind { Classical, Affine };
  Kind kind = Kind::Classical;
  int index = 1;

  static AffineLetter classical(int j) { return {Kind::Classical, j}; }
  static AffineLetter affine(int c) { return {Kind::Affine, c}; }
  bool is_affine() const { return kind == Kind::Affine; }

  auto operator<=>(const AffineLetter&) const = default;
  bool operator==(const AffineLetter&) const = default;
};

using AffineWord = std::vector<AffineLetter>;

// S_J in letter order.
std::vector<AffineLetter> letters(const SubSystem& sub);
bool is_letter_of(const SubSystem& sub, const AffineLetter& s);
AffineRoot simple_root(const SubSystem& sub, const AffineLetter& s);
AffineWeylElement letter_element(const SubSystem& sub, const AffineLetter& s);
AffineWeylElement word_element(const SubSystem& sub, const AffineWord& word);

// Membership of a root in Delta_J (real or imaginary).
bool in_delta_J(const SubSystem& sub, const AffineRoot& b);
// Membership of x in W_J: wbar in W_J and lambda supported on J.
bool in_affine_parabolic(const AffineWeylElement& x, const IndexSet& J);

// Phi_J(x) = {beta in Delta_J+ : x^{-1} beta < 0}, exact.
// Throws std::invalid_argument when x is not in W_J.
AffineRootSet inversion_set_affine(const AffineWeylElement& x, const SubSystem& sub);
int length_J(const AffineWeylElement& x, const SubSystem& sub);
// Greedy left descent in letter order.
AffineWord reduced_word_J(const AffineWeylElement& x, const SubSystem& sub);

// <P> truncated to levels <= N.
AffineRootSet angle_bracket(const RootSet& P, int N);
// Delta^K_J(u, sign) truncated to levels <= N.
AffineRootSet delta_u_pm(const SubSystem& sub, const IndexSet& K, const WeylElement& u, Sign sign,
                         int N);
// Delta_J+ up to level N, optionally with the imaginary roots m delta.
AffineRootSet positive_window(const SubSystem& sub, int N, bool include_imaginary = true);
int max_level(const AffineRootSet& s);

struct BallEntry {
  AffineWeylElement element;
  int distance;
  AffineWord word;
};

// Breadth-first search in the Cayley graph of (W_J, S_J) up to the given
// distance. Entries are in discovery order.
std::vector<BallEntry> cayley_ball(const SubSystem& sub, int radius);

}  // namespace affroot
