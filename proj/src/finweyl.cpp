#include "affroot/finweyl.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

namespace affroot {

WeylElement::WeylElement(RootSystemPtr system, std::vector<Root> images)
    : system_(std::move(system)), images_(std::move(images)) {
  const RootSystem& rs = *system_;
  for (const Root& r : images_) coroot_images_.push_back(rs.coroot(r));
  std::vector<Root> img = images_;
  std::vector<int> rev;
  for (;;) {
    int i = 0;
    for (int k = 0; k < rs.rank(); ++k)
      if (img[k].is_negative()) {
        i = k + 1;
        break;
      }
    if (i == 0) break;
    rev.push_back(i);
    Root ai = img[i - 1];
    for (int j = 0; j < rs.rank(); ++j) img[j] -= rs.cartan()(i, j + 1) * ai;
  }
  word_.assign(rev.rbegin(), rev.rend());
}

WeylElement WeylElement::identity(RootSystemPtr system) {
  std::vector<Root> img;
  for (int i = 1; i <= system->rank(); ++i) img.push_back(system->simple_root(i));
  return WeylElement(std::move(system), std::move(img));
}

WeylElement WeylElement::simple(RootSystemPtr system, int i) {
  if (i < 1 || i > system->rank()) throw std::invalid_argument("simple reflection index out of range");
  std::vector<Root> img;
  for (int j = 1; j <= system->rank(); ++j) img.push_back(system->reflect(i, system->simple_root(j)));
  return WeylElement(std::move(system), std::move(img));
}

WeylElement WeylElement::reflection(RootSystemPtr system, const Root& a) {
  CorootVector ac = system->coroot(a);
  std::vector<Root> img;
  for (int j = 1; j <= system->rank(); ++j) {
    Root aj = system->simple_root(j);
    img.push_back(aj - system->pairing(aj, ac) * a);
  }
  return WeylElement(std::move(system), std::move(img));
}

WeylElement WeylElement::from_word(RootSystemPtr system, const std::vector<int>& word) {
  std::vector<Root> img;
  for (int j = 1; j <= system->rank(); ++j) img.push_back(system->simple_root(j));
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    if (*it < 1 || *it > system->rank())
      throw std::invalid_argument("simple reflection index out of range");
    for (Root& r : img) r = system->reflect(*it, r);
  }
  return WeylElement(std::move(system), std::move(img));
}

Root WeylElement::apply(const Root& r) const {
  Root out = Root::zero(r.rank());
  for (int i = 0; i < r.rank(); ++i)
    if (r[i] != 0) out += r[i] * images_[i];
  return out;
}

CorootVector WeylElement::apply(const CorootVector& c) const {
  CorootVector out = CorootVector::zero(c.rank());
  for (int i = 0; i < c.rank(); ++i)
    if (c[i] != 0) out += c[i] * coroot_images_[i];
  return out;
}

RootSet WeylElement::apply(const RootSet& s) const {
  RootSet out;
  for (const Root& r : s) out.insert(apply(r));
  return out;
}

WeylElement WeylElement::inverse() const {
  return from_word(system_, std::vector<int>(word_.rbegin(), word_.rend()));
}

WeylElement operator*(const WeylElement& a, const WeylElement& b) {
  if (a.system_ != b.system_ && a.system_->cartan().matrix != b.system_->cartan().matrix)
    throw std::invalid_argument("Weyl elements over different root systems");
  std::vector<Root> img;
  for (const Root& r : b.images_) img.push_back(a.apply(r));
  return WeylElement(a.system_, std::move(img));
}

RootSet inversion_set(const WeylElement& w, const IndexSet& J) {
  SubSystem sub = sub_system(w.system(), J);
  WeylElement inv = w.inverse();
  RootSet out;
  for (const Root& r : sub.positive)
    if (inv.apply(r).is_negative()) out.insert(r);
  return out;
}

std::vector<int> reduced_word(const WeylElement& w) {
  const RootSystemPtr& rs = w.system();
  std::vector<int> out;
  WeylElement x = w;
  while (!x.is_identity()) {
    WeylElement inv = x.inverse();
    int pick = 0;
    for (int i = 1; i <= rs->rank(); ++i)
      if (inv.apply(rs->simple_root(i)).is_negative()) {
        pick = i;
        break;
      }
    if (pick == 0) throw std::logic_error("no left descent for a non-identity element");
    out.push_back(pick);
    x = WeylElement::simple(rs, pick) * x;
  }
  return out;
}

int length(const WeylElement& w) { return w.length(); }

bool in_parabolic(const WeylElement& w, const IndexSet& J) {
  for (int i : w.word())
    if (!J.contains(i)) return false;
  return true;
}

CosetDecomposition coset_decompose(const WeylElement& w, const IndexSet& K) {
  const RootSystemPtr& rs = w.system();
  WeylElement upper = w;
  for (;;) {
    int pick = 0;
    for (int k : K)
      if (upper.apply(rs->simple_root(k)).is_negative()) {
        pick = k;
        break;
      }
    if (pick == 0) break;
    upper = upper * WeylElement::simple(rs, pick);
  }
  return {upper, upper.inverse() * w};
}

bool is_closed(const RootSystem& system, const RootSet& P) {
  for (const Root& a : P)
    for (const Root& b : P) {
      Root s = a + b;
      if (system.contains(s) && !P.count(s)) return false;
    }
  return true;
}

RootSet closure(const RootSystem& system, RootSet P) {
  std::deque<Root> queue(P.begin(), P.end());
  while (!queue.empty()) {
    Root a = queue.front();
    queue.pop_front();
    std::vector<Root> fresh;
    for (const Root& b : P) {
      Root s = a + b;
      if (system.contains(s) && !P.count(s)) fresh.push_back(s);
    }
    for (Root& s : fresh)
      if (P.insert(s).second) queue.push_back(s);
  }
  return P;
}

namespace {

bool is_pointed(const RootSet& P) {
  for (const Root& r : P)
    if (P.count(-r)) return false;
  return true;
}

void require_inside(const RootSet& P, const SubSystem& sub) {
  for (const Root& r : P)
    if (!sub.contains(r)) throw std::invalid_argument("set is not contained in Delta_J");
}

}  // namespace

SubsetClassification classify_subset(const RootSet& P, const SubSystem& sub) {
  require_inside(P, sub);
  const RootSystem& rs = *sub.system;
  SubsetClassification c;
  RootSet complement;
  for (const Root& r : sub.roots)
    if (!P.count(r)) complement.insert(r);
  for (const Root& r : P) {
    if (P.count(-r))
      c.symmetric_part.insert(r);
    else
      c.pointed_part.insert(r);
  }
  c.closed = is_closed(rs, P);
  c.coclosed_in_J = is_closed(rs, complement);
  c.biclosed_in_J = c.closed && c.coclosed_in_J;
  bool covers = true;
  for (const Root& r : sub.roots)
    if (!P.count(r) && !P.count(-r)) covers = false;
  c.parabolic_in_J = c.closed && covers;
  c.symmetric = c.pointed_part.empty();
  c.pointed = c.symmetric_part.empty();
  return c;
}

WeylElement positivize(const RootSet& P, const SubSystem& sub) {
  require_inside(P, sub);
  const RootSystem& rs = *sub.system;
  if (!is_pointed(P) || !is_closed(rs, P))
    throw std::invalid_argument("positivize needs a pointed closed set");
  // Extend P to a maximal pointed closed set, which is a system of positive
  // roots, then walk it down to Delta_J- by simple reflections.
  RootSet N = P;
  for (const Root& e : sub.positive) {
    if (N.count(e) || N.count(-e)) continue;
    RootSet with_neg = N;
    with_neg.insert(-e);
    with_neg = closure(rs, with_neg);
    if (is_pointed(with_neg)) {
      N = std::move(with_neg);
    } else {
      N.insert(e);
      N = closure(rs, N);
    }
  }
  WeylElement w = WeylElement::identity(sub.system);
  for (;;) {
    int pick = 0;
    for (int j : sub.J)
      if (N.count(rs.simple_root(j))) {
        pick = j;
        break;
      }
    if (pick == 0) break;
    WeylElement s = WeylElement::simple(sub.system, pick);
    N = s.apply(N);
    w = s * w;
  }
  return w;
}

RootSet pointed_biclosed(const SubSystem& sub, const IndexSet& K, const WeylElement& u, Sign sign) {
  return u.apply(delta_J_K(sub, K, sign));
}

PointedBiclosedFactor factor_pointed_biclosed(const RootSet& P, const SubSystem& sub) {
  SubsetClassification c = classify_subset(P, sub);
  if (!c.pointed || !c.biclosed_in_J)
    throw std::invalid_argument("set is not pointed biclosed in Delta_J");
  const RootSystemPtr& rs = sub.system;
  RootSet S;
  for (const Root& r : P)
    if (r.is_positive()) S.insert(r);
  WeylElement u = WeylElement::identity(rs);
  while (!S.empty()) {
    int pick = 0;
    for (int j : sub.J)
      if (S.count(rs->simple_root(j))) {
        pick = j;
        break;
      }
    if (pick == 0) throw std::logic_error("positive part of a pointed biclosed set is not an inversion set");
    WeylElement s = WeylElement::simple(rs, pick);
    S.erase(rs->simple_root(pick));
    S = s.apply(S);
    u = u * s;
  }
  std::vector<int> k;
  for (int j : sub.J) {
    Root img = u.apply(rs->simple_root(j));
    if (!P.count(img) && !P.count(-img)) k.push_back(j);
  }
  IndexSet K(std::move(k));
  for (int j : K)
    if (u.apply(rs->simple_root(j)).is_negative())
      throw std::logic_error("reconstructed u is not a minimal coset representative");
  if (pointed_biclosed(sub, K, u) != P)
    throw std::logic_error("reconstruction of a pointed biclosed set failed");
  return {K, u};
}

std::vector<WeylElement> enumerate_group(RootSystemPtr system, const IndexSet& J) {
  std::vector<WeylElement> out{WeylElement::identity(system)};
  std::set<WeylElement> seen(out.begin(), out.end());
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (int j : J) {
      WeylElement next = out[head] * WeylElement::simple(system, j);
      if (seen.insert(next).second) out.push_back(next);
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const WeylElement& a, const WeylElement& b) {
    if (a.length() != b.length()) return a.length() < b.length();
    return a.word() < b.word();
  });
  return out;
}

std::vector<WeylElement> min_coset_reps(RootSystemPtr system, const IndexSet& J, const IndexSet& K) {
  std::vector<WeylElement> out;
  for (const WeylElement& w : enumerate_group(system, J)) {
    bool ok = true;
    for (int k : K)
      if (w.apply(system->simple_root(k)).is_negative()) ok = false;
    if (ok) out.push_back(w);
  }
  return out;
}

}  // namespace affroot
