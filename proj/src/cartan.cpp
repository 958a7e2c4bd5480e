#include "affroot/cartan.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <sstream>
#include <stdexcept>

namespace affroot {

std::string to_string(const Rational& q) {
  std::ostringstream os;
  os << q.numerator();
  if (q.denominator() != 1) os << '/' << q.denominator();
  return os.str();
}

IndexSet::IndexSet(std::initializer_list<int> idx) : IndexSet(std::vector<int>(idx)) {}

IndexSet::IndexSet(std::vector<int> idx) : idx_(std::move(idx)) {
  std::sort(idx_.begin(), idx_.end());
  idx_.erase(std::unique(idx_.begin(), idx_.end()), idx_.end());
}

IndexSet IndexSet::full(int rank) {
  std::vector<int> v;
  for (int i = 1; i <= rank; ++i) v.push_back(i);
  return IndexSet(std::move(v));
}

bool IndexSet::contains(int i) const { return std::binary_search(idx_.begin(), idx_.end(), i); }

bool IndexSet::is_subset_of(const IndexSet& other) const {
  return std::includes(other.idx_.begin(), other.idx_.end(), idx_.begin(), idx_.end());
}

IndexSet IndexSet::minus(const IndexSet& other) const {
  std::vector<int> out;
  std::set_difference(idx_.begin(), idx_.end(), other.idx_.begin(), other.idx_.end(),
                      std::back_inserter(out));
  return IndexSet(std::move(out));
}

std::vector<IndexSet> IndexSet::subsets() const {
  std::vector<IndexSet> out;
  const int n = size();
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> v;
    for (int b = 0; b < n; ++b)
      if (mask & (1u << b)) v.push_back(idx_[b]);
    out.emplace_back(std::move(v));
  }
  std::stable_sort(out.begin(), out.end(), [](const IndexSet& a, const IndexSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.values() < b.values();
  });
  return out;
}

std::string to_string(const IndexSet& s) {
  std::string out = "{";
  bool first = true;
  for (int i : s) {
    if (!first) out += ",";
    out += std::to_string(i);
    first = false;
  }
  return out + "}";
}

namespace {

using Matrix = std::vector<std::vector<int>>;

Matrix identity_cartan(int l) {
  Matrix m(l, std::vector<int>(l, 0));
  for (int i = 0; i < l; ++i) m[i][i] = 2;
  return m;
}

void link(Matrix& m, int i, int j) {
  m[i - 1][j - 1] = -1;
  m[j - 1][i - 1] = -1;
}

Matrix chain(int l) {
  Matrix m = identity_cartan(l);
  for (int i = 1; i < l; ++i) link(m, i, i + 1);
  return m;
}

}  // namespace

CartanData CartanData::of_type(std::string_view label) {
  auto bad = [&] { return std::invalid_argument("unknown root system type '" + std::string(label) + "'"); };
  if (label.size() < 2) throw bad();
  const char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(label[0])));
  std::string_view digits = label.substr(1);
  if (!digits.empty() && digits[0] == '_') digits.remove_prefix(1);
  if (digits.empty() || digits.size() > 3) throw bad();
  int l = 0;
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c))) throw bad();
    l = l * 10 + (c - '0');
  }
  Matrix m;
  switch (letter) {
    case 'A':
      if (l < 1) throw bad();
      m = chain(l);
      break;
    case 'B':
      if (l < 2) throw bad();
      m = chain(l);
      m[l - 1][l - 2] = -2;
      break;
    case 'C':
      if (l < 2) throw bad();
      m = chain(l);
      m[l - 2][l - 1] = -2;
      break;
    case 'D':
      if (l < 4) throw bad();
      m = chain(l - 1);
      for (auto& row : m) row.push_back(0);
      m.push_back(std::vector<int>(l, 0));
      m[l - 1][l - 1] = 2;
      link(m, l - 2, l);
      break;
    case 'E':
      if (l < 6 || l > 8) throw bad();
      m = identity_cartan(l);
      link(m, 1, 3);
      link(m, 2, 4);
      for (int i = 3; i < l; ++i) link(m, i, i + 1);
      break;
    case 'F':
      if (l != 4) throw bad();
      m = chain(4);
      m[2][1] = -2;
      break;
    case 'G':
      if (l != 2) throw bad();
      m = {{2, -3}, {-1, 2}};
      break;
    default:
      throw bad();
  }
  return CartanData{std::string(1, letter) + std::to_string(l), std::move(m)};
}

CartanData CartanData::from_matrix(std::vector<std::vector<int>> matrix, std::string label) {
  return CartanData{std::move(label), std::move(matrix)};
}

namespace {

// Symmetrizer with d_i a_ij = d_j a_ji, scaled to max 1 on each component.
std::vector<Rational> symmetrizer(const CartanData& c) {
  const int l = c.rank();
  std::vector<Rational> d(l, Rational(0));
  for (int start = 0; start < l; ++start) {
    if (d[start] != Rational(0)) continue;
    std::vector<int> comp{start};
    d[start] = 1;
    std::deque<int> queue{start};
    while (!queue.empty()) {
      int i = queue.front();
      queue.pop_front();
      for (int j = 0; j < l; ++j) {
        if (j == i || c.matrix[i][j] == 0) continue;
        Rational dj = d[i] * Rational(c.matrix[i][j], c.matrix[j][i]);
        if (d[j] == Rational(0)) {
          d[j] = dj;
          comp.push_back(j);
          queue.push_back(j);
        } else if (d[j] != dj) {
          throw std::invalid_argument("Cartan matrix is not symmetrizable");
        }
      }
    }
    Rational top = 0;
    for (int i : comp) top = std::max(top, d[i]);
    for (int i : comp) d[i] /= top;
  }
  return d;
}

bool positive_definite(std::vector<std::vector<Rational>> m) {
  const int n = static_cast<int>(m.size());
  for (int k = 0; k < n; ++k) {
    if (m[k][k] <= Rational(0)) return false;
    for (int i = k + 1; i < n; ++i) {
      Rational f = m[i][k] / m[k][k];
      for (int j = k; j < n; ++j) m[i][j] -= f * m[k][j];
    }
  }
  return true;
}

}  // namespace

RootSystem::RootSystem(CartanData cartan) : cartan_(std::move(cartan)) {
  const int l = rank();
  if (l < 1) throw std::invalid_argument("Cartan matrix must have rank >= 1");
  for (const auto& row : cartan_.matrix)
    if (static_cast<int>(row.size()) != l) throw std::invalid_argument("Cartan matrix must be square");
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) {
      int a = cartan_.matrix[i][j];
      if (i == j && a != 2) throw std::invalid_argument("Cartan matrix needs a_ii = 2");
      if (i != j && a > 0) throw std::invalid_argument("Cartan matrix needs a_ij <= 0 off the diagonal");
      if (i != j && (a == 0) != (cartan_.matrix[j][i] == 0))
        throw std::invalid_argument("Cartan matrix needs a_ij = 0 iff a_ji = 0");
    }
  half_norm_ = symmetrizer(cartan_);
  gram_.assign(l, std::vector<Rational>(l));
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) gram_[i][j] = half_norm_[i] * cartan_.matrix[i][j];
  if (!positive_definite(gram_))
    throw std::invalid_argument("Cartan matrix is not of finite type");

  std::set<Root> seen;
  std::deque<Root> queue;
  for (int i = 1; i <= l; ++i) {
    seen.insert(simple_root(i));
    queue.push_back(simple_root(i));
  }
  while (!queue.empty()) {
    Root r = queue.front();
    queue.pop_front();
    for (int i = 1; i <= l; ++i) {
      Root s = reflect(i, r);
      if (s.is_positive() && seen.insert(s).second) queue.push_back(s);
    }
  }
  positive_.assign(seen.begin(), seen.end());
  std::sort(positive_.begin(), positive_.end(), [](const Root& a, const Root& b) {
    if (a.height() != b.height()) return a.height() < b.height();
    return a > b;
  });
  all_ = positive_;
  for (const Root& r : positive_) all_.push_back(-r);
  lookup_.insert(all_.begin(), all_.end());
}

Rational RootSystem::pairing(const Root& a, const Root& b) const {
  Rational s = 0;
  for (int i = 0; i < rank(); ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < rank(); ++j)
      if (b[j] != 0) s += gram_[i][j] * (a[i] * b[j]);
  }
  return s;
}

int RootSystem::pairing(const Root& a, const CorootVector& c) const {
  int s = 0;
  for (int i = 0; i < rank(); ++i)
    for (int j = 0; j < rank(); ++j) s += a[i] * c[j] * cartan_.matrix[j][i];
  return s;
}

bool RootSystem::is_long(const Root& r) const { return pairing(r, r) == Rational(2); }

CorootVector RootSystem::coroot(const Root& a) const {
  if (!contains(a)) throw std::invalid_argument("coroot of a non-root");
  Rational half = pairing(a, a) / 2;
  CorootVector out = CorootVector::zero(rank());
  for (int i = 0; i < rank(); ++i) {
    Rational c = half_norm_[i] * a[i] / half;
    if (c.denominator() != 1) throw std::logic_error("coroot is not integral");
    out[i] = static_cast<int>(c.numerator());
  }
  return out;
}

Root RootSystem::reflect(int i, const Root& v) const {
  int k = 0;
  for (int j = 0; j < rank(); ++j) k += v[j] * cartan_.matrix[i - 1][j];
  Root out = v;
  out[i - 1] -= k;
  return out;
}

CorootVector RootSystem::reflect(int i, const CorootVector& v) const {
  int k = 0;
  for (int j = 0; j < rank(); ++j) k += v[j] * cartan_.matrix[j][i - 1];
  CorootVector out = v;
  out[i - 1] -= k;
  return out;
}

RootSystemPtr build_root_system(CartanData cartan) {
  return std::make_shared<const RootSystem>(std::move(cartan));
}

RootSystemPtr build_root_system(std::string_view type_label) {
  return build_root_system(CartanData::of_type(type_label));
}

namespace {

bool supported_on(const Root& r, const IndexSet& J) {
  for (int i = 0; i < r.rank(); ++i)
    if (r[i] != 0 && !J.contains(i + 1)) return false;
  return true;
}

}  // namespace

bool SubSystem::contains(const Root& r) const {
  return system->contains(r) && supported_on(r, J);
}

int SubSystem::component_of(const Root& r) const {
  for (int c = 0; c < component_count(); ++c)
    if (!r.is_zero() && supported_on(r, components[c])) return c;
  throw std::invalid_argument("root does not lie in a component of the subsystem");
}

SubSystem sub_system(RootSystemPtr system, const IndexSet& J) {
  for (int j : J)
    if (j < 1 || j > system->rank())
      throw std::invalid_argument("index " + std::to_string(j) + " out of range");
  SubSystem sub;
  sub.system = system;
  sub.J = J;
  std::set<int> unvisited(J.begin(), J.end());
  while (!unvisited.empty()) {
    std::vector<int> comp;
    std::deque<int> queue{*unvisited.begin()};
    unvisited.erase(unvisited.begin());
    while (!queue.empty()) {
      int i = queue.front();
      queue.pop_front();
      comp.push_back(i);
      for (auto it = unvisited.begin(); it != unvisited.end();) {
        if (system->cartan()(i, *it) != 0) {
          queue.push_back(*it);
          it = unvisited.erase(it);
        } else {
          ++it;
        }
      }
    }
    sub.components.emplace_back(std::move(comp));
  }
  std::sort(sub.components.begin(), sub.components.end(),
            [](const IndexSet& a, const IndexSet& b) { return a.values().front() < b.values().front(); });
  for (const Root& r : system->positive_roots())
    if (supported_on(r, J)) sub.positive.push_back(r);
  for (const Root& r : sub.positive) sub.negative.push_back(-r);
  sub.roots = sub.positive;
  sub.roots.insert(sub.roots.end(), sub.negative.begin(), sub.negative.end());
  for (const IndexSet& comp : sub.components) {
    const Root* best = nullptr;
    for (const Root& r : sub.positive)
      if (supported_on(r, comp) && (!best || r.height() > best->height())) best = &r;
    sub.highest_roots.push_back(*best);
  }
  return sub;
}

RootSet delta_J_K(const SubSystem& sub, const IndexSet& K, Sign sign) {
  if (!K.is_subset_of(sub.J)) throw std::invalid_argument("K must be a subset of J");
  RootSet out;
  const auto& src = sign == Sign::Plus ? sub.positive : sub.negative;
  for (const Root& r : src)
    if (!supported_on(r, K)) out.insert(r);
  return out;
}

}  // namespace affroot
