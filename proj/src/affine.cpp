#include "affroot/affine.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace affroot {

AffineWeylElement::AffineWeylElement(CorootVector lambda, WeylElement wbar)
    : lambda_(std::move(lambda)), wbar_(std::move(wbar)) {}

AffineWeylElement AffineWeylElement::identity(RootSystemPtr system) {
  int l = system->rank();
  return {CorootVector::zero(l), WeylElement::identity(std::move(system))};
}

AffineWeylElement AffineWeylElement::translation(RootSystemPtr system, CorootVector lambda) {
  return {std::move(lambda), WeylElement::identity(std::move(system))};
}

AffineWeylElement AffineWeylElement::finite(WeylElement w) {
  int l = w.system()->rank();
  return {CorootVector::zero(l), std::move(w)};
}

AffineWeylElement AffineWeylElement::reflection(RootSystemPtr system, const AffineRoot& b) {
  if (!b.is_real() || !system->contains(b.classical))
    throw std::invalid_argument("reflection needs a real root");
  CorootVector lam = -b.level * system->coroot(b.classical);
  return {std::move(lam), WeylElement::reflection(system, b.classical)};
}

AffineRoot AffineWeylElement::apply(const AffineRoot& b) const {
  if (b.classical.is_zero()) return b;
  Root w = wbar_.apply(b.classical);
  return {b.level - system()->pairing(w, lambda_), w};
}

AffineRootSet AffineWeylElement::apply(const AffineRootSet& s) const {
  AffineRootSet out;
  for (const AffineRoot& b : s) out.insert(apply(b));
  return out;
}

AffineWeylElement AffineWeylElement::inverse() const {
  WeylElement inv = wbar_.inverse();
  return {-inv.apply(lambda_), inv};
}

AffineWeylElement operator*(const AffineWeylElement& a, const AffineWeylElement& b) {
  return {a.lambda_ + a.wbar_.apply(b.lambda_), a.wbar_ * b.wbar_};
}

std::vector<AffineLetter> letters(const SubSystem& sub) {
  std::vector<AffineLetter> out;
  for (int j : sub.J) out.push_back(AffineLetter::classical(j));
  for (int c = 1; c <= sub.component_count(); ++c) out.push_back(AffineLetter::affine(c));
  return out;
}

bool is_letter_of(const SubSystem& sub, const AffineLetter& s) {
  if (s.is_affine()) return s.index >= 1 && s.index <= sub.component_count();
  return sub.J.contains(s.index);
}

namespace {

void require_letter(const SubSystem& sub, const AffineLetter& s) {
  if (!is_letter_of(sub, s))
    throw std::invalid_argument(std::string(s.is_affine() ? "affine" : "classical") + " letter " +
                                std::to_string(s.index) + " is not in S_J");
}

}  // namespace

AffineRoot simple_root(const SubSystem& sub, const AffineLetter& s) {
  require_letter(sub, s);
  if (s.is_affine()) return {1, -sub.highest_roots[s.index - 1]};
  return {0, sub.system->simple_root(s.index)};
}

AffineWeylElement letter_element(const SubSystem& sub, const AffineLetter& s) {
  require_letter(sub, s);
  if (s.is_affine()) {
    const Root& theta = sub.highest_roots[s.index - 1];
    return {sub.system->coroot(theta), WeylElement::reflection(sub.system, theta)};
  }
  return AffineWeylElement::finite(WeylElement::simple(sub.system, s.index));
}

AffineWeylElement word_element(const SubSystem& sub, const AffineWord& word) {
  AffineWeylElement x = AffineWeylElement::identity(sub.system);
  for (const AffineLetter& s : word) x = x * letter_element(sub, s);
  return x;
}

bool in_delta_J(const SubSystem& sub, const AffineRoot& b) {
  if (b.classical.is_zero()) return b.level != 0 && !sub.J.empty();
  return sub.contains(b.classical);
}

bool in_affine_parabolic(const AffineWeylElement& x, const IndexSet& J) {
  for (int i = 0; i < x.lambda().rank(); ++i)
    if (x.lambda()[i] != 0 && !J.contains(i + 1)) return false;
  return in_parabolic(x.wbar(), J);
}

AffineRootSet inversion_set_affine(const AffineWeylElement& x, const SubSystem& sub) {
  if (!in_affine_parabolic(x, sub.J)) throw std::invalid_argument("element is not in W_J");
  const RootSystem& rs = *sub.system;
  WeylElement winv = x.wbar().inverse();
  AffineRootSet out;
  for (const Root& e : sub.roots) {
    int k = rs.pairing(e, x.lambda());
    bool flips = winv.apply(e).is_negative();
    for (int m = e.is_positive() ? 0 : 1; m <= -k; ++m)
      if (m + k < 0 || flips) out.insert({m, e});
  }
  return out;
}

int length_J(const AffineWeylElement& x, const SubSystem& sub) {
  return static_cast<int>(inversion_set_affine(x, sub).size());
}

AffineWord reduced_word_J(const AffineWeylElement& x, const SubSystem& sub) {
  if (!in_affine_parabolic(x, sub.J)) throw std::invalid_argument("element is not in W_J");
  const auto alphabet = letters(sub);
  AffineWord out;
  AffineWeylElement cur = x;
  while (!cur.is_identity()) {
    AffineWeylElement inv = cur.inverse();
    const AffineLetter* pick = nullptr;
    for (const AffineLetter& s : alphabet)
      if (inv.apply(simple_root(sub, s)).is_negative()) {
        pick = &s;
        break;
      }
    if (!pick) throw std::logic_error("no descent for a non-identity element of W_J");
    out.push_back(*pick);
    cur = letter_element(sub, *pick) * cur;
  }
  return out;
}

AffineRootSet angle_bracket(const RootSet& P, int N) {
  AffineRootSet out;
  for (const Root& e : P)
    for (int m = e.is_positive() ? 0 : 1; m <= N; ++m) out.insert({m, e});
  return out;
}

AffineRootSet delta_u_pm(const SubSystem& sub, const IndexSet& K, const WeylElement& u, Sign sign,
                         int N) {
  return angle_bracket(u.apply(delta_J_K(sub, K, sign)), N);
}

AffineRootSet positive_window(const SubSystem& sub, int N, bool include_imaginary) {
  AffineRootSet out = angle_bracket(RootSet(sub.roots.begin(), sub.roots.end()), N);
  if (include_imaginary && !sub.J.empty())
    for (int m = 1; m <= N; ++m) out.insert(AffineRoot::imaginary(sub.rank(), m));
  return out;
}

int max_level(const AffineRootSet& s) {
  int m = 0;
  for (const AffineRoot& b : s) m = std::max(m, b.level);
  return m;
}

std::vector<BallEntry> cayley_ball(const SubSystem& sub, int radius) {
  std::vector<BallEntry> out{{AffineWeylElement::identity(sub.system), 0, {}}};
  std::set<AffineWeylElement> seen{out.front().element};
  const auto alphabet = letters(sub);
  for (std::size_t head = 0; head < out.size(); ++head) {
    if (out[head].distance == radius) continue;
    for (const AffineLetter& s : alphabet) {
      AffineWeylElement next = out[head].element * letter_element(sub, s);
      if (!seen.insert(next).second) continue;
      AffineWord w = out[head].word;
      w.push_back(s);
      out.push_back({next, out[head].distance + 1, std::move(w)});
    }
  }
  return out;
}

}  // namespace affroot
