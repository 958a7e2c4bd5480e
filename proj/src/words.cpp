#include "affroot/words.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace affroot {

AffineLetter InfiniteWord::at(long p) const {
  const long h = static_cast<long>(head.size());
  if (p <= h) return head.at(p - 1);
  return period.at((p - h - 1) % static_cast<long>(period.size()));
}

namespace {

// Letter elements and simple roots of S_J, looked up by letter.
struct Alphabet {
  explicit Alphabet(const SubSystem& sub) : sub(sub) {
    for (const AffineLetter& s : letters(sub)) {
      elems.push_back(letter_element(sub, s));
      roots.push_back(simple_root(sub, s));
      keys.push_back(s);
    }
  }
  std::size_t slot(const AffineLetter& s) const {
    for (std::size_t i = 0; i < keys.size(); ++i)
      if (keys[i] == s) return i;
    throw std::invalid_argument(std::string(s.is_affine() ? "affine" : "classical") + " letter " +
                                std::to_string(s.index) + " is not in S_J");
  }
  const AffineWeylElement& elem(const AffineLetter& s) const { return elems[slot(s)]; }
  const AffineRoot& root(const AffineLetter& s) const { return roots[slot(s)]; }

  const SubSystem& sub;
  std::vector<AffineLetter> keys;
  std::vector<AffineWeylElement> elems;
  std::vector<AffineRoot> roots;
};

void check_shape(const InfiniteWord& s, const SubSystem& sub) {
  if (s.J != sub.J) throw std::invalid_argument("word J does not match the subsystem");
  if (s.period.empty()) throw std::invalid_argument("period must be nonempty");
  for (const auto* part : {&s.head, &s.period})
    for (const AffineLetter& a : *part)
      if (!is_letter_of(sub, a)) throw std::invalid_argument("word uses a letter outside S_J");
}

}  // namespace

AffineWeylElement prefix(const InfiniteWord& s, const SubSystem& sub, long p) {
  check_shape(s, sub);
  Alphabet abc(sub);
  AffineWeylElement z = AffineWeylElement::identity(sub.system);
  for (long q = 1; q <= p; ++q) z = z * abc.elem(s.at(q));
  return z;
}

AffineRoot phi_at(const InfiniteWord& s, const SubSystem& sub, long p) {
  if (p < 1) throw std::invalid_argument("phi is indexed from 1");
  AffineWeylElement z = prefix(s, sub, p - 1);
  return z.apply(simple_root(sub, s.at(p)));
}

Certificate certify(const InfiniteWord& s, const SubSystem& sub) {
  check_shape(s, sub);
  Alphabet abc(sub);
  Certificate cert;
  const long h = static_cast<long>(s.head.size());
  const long n = static_cast<long>(s.period.size());

  AffineWeylElement zh = AffineWeylElement::identity(sub.system);
  for (const AffineLetter& a : s.head) zh = zh * abc.elem(a);
  AffineWeylElement pi = AffineWeylElement::identity(sub.system);
  for (const AffineLetter& a : s.period) pi = pi * abc.elem(a);
  const AffineWeylElement Pi = zh * pi * zh.inverse();
  AffineWeylElement power = Pi;
  int r = 1;
  while (!power.wbar().is_identity()) {
    power = power * Pi;
    if (++r > 100000) {
      cert.reason = "period product has no translation power";
      return cert;
    }
  }
  cert.order = r;
  cert.nu = power.lambda();

  const long span = h + std::max<long>(3, r) * n;
  std::set<AffineRoot> seen;
  AffineWeylElement z = AffineWeylElement::identity(sub.system);
  for (long p = 1; p <= span; ++p) {
    const AffineLetter a = s.at(p);
    AffineRoot phi = z.apply(abc.root(a));
    if (!phi.is_positive()) {
      cert.reason = "phi(" + std::to_string(p) + ") is negative";
      return cert;
    }
    if (!seen.insert(phi).second) {
      cert.reason = "phi(" + std::to_string(p) + ") repeats";
      return cert;
    }
    if (p > h && p <= h + r * n && sub.system->pairing(phi.classical, cert.nu) >= 0) {
      cert.reason = "phi(" + std::to_string(p) + ") does not rise along the period";
      return cert;
    }
    z = z * abc.elem(a);
  }
  cert.ok = true;
  return cert;
}

Certificate require_certified(const InfiniteWord& s, const SubSystem& sub) {
  Certificate c = certify(s, sub);
  if (!c.ok) throw std::invalid_argument("not an infinite reduced word: " + c.reason);
  return c;
}

std::vector<IndexedRoot> phi_indexed(const InfiniteWord& s, const SubSystem& sub, int N) {
  const Certificate cert = require_certified(s, sub);
  Alphabet abc(sub);
  const long h = static_cast<long>(s.head.size());
  const long block = cert.order * static_cast<long>(s.period.size());
  std::vector<IndexedRoot> out;
  AffineWeylElement z = AffineWeylElement::identity(sub.system);
  long p = 1;
  auto step = [&]() {
    const AffineLetter a = s.at(p);
    AffineRoot phi = z.apply(abc.root(a));
    if (phi.level <= N) out.push_back({p, phi});
    z = z * abc.elem(a);
    ++p;
    return phi.level;
  };
  while (p <= h) step();
  for (;;) {
    int low = step();
    for (long q = 1; q < block; ++q) low = std::min(low, step());
    if (low > N) break;
  }
  return out;
}

AffineRootSet phi_infinity(const InfiniteWord& s, const SubSystem& sub, int N) {
  AffineRootSet out;
  for (const IndexedRoot& e : phi_indexed(s, sub, N)) out.insert(e.root);
  return out;
}

CorootVector z_lambda(const SubSystem& sub, const IndexSet& K) {
  if (!K.is_subset_of(sub.J) || K == sub.J)
    throw std::invalid_argument("Z^K_J needs K to be a proper subset of J");
  const RootSystem& rs = *sub.system;
  const std::vector<int>& J = sub.J.values();
  const int n = static_cast<int>(J.size());
  // c >= M^{-1} 1_{J\K} entrywise, since M^{-1} >= 0 and the pairings on J\K are >= 1.
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n + 1));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m[i][j] = rs.cartan()(J[j], J[i]);
    m[i][n] = K.contains(J[i]) ? 0 : 1;
  }
  for (int col = 0; col < n; ++col) {
    int piv = col;
    while (m[piv][col] == Rational(0)) ++piv;
    std::swap(m[piv], m[col]);
    for (int i = 0; i < n; ++i) {
      if (i == col || m[i][col] == Rational(0)) continue;
      Rational f = m[i][col] / m[col][col];
      for (int j = col; j <= n; ++j) m[i][j] -= f * m[col][j];
    }
  }
  std::vector<int> lo(n);
  for (int i = 0; i < n; ++i) {
    Rational v = m[i][n] / m[i][i];
    lo[i] = static_cast<int>((v.numerator() + v.denominator() - 1) / v.denominator());
    lo[i] = std::max(lo[i], 0);
  }
  auto valid = [&](const std::vector<int>& c) {
    CorootVector lam = CorootVector::zero(rs.rank());
    for (int j = 0; j < n; ++j) lam[J[j] - 1] = c[j];
    for (int i : sub.J) {
      int v = rs.pairing(rs.simple_root(i), lam);
      if (K.contains(i) ? v != 0 : v <= 0) return false;
    }
    return true;
  };
  for (int bound = *std::max_element(lo.begin(), lo.end());; ++bound) {
    std::vector<int> c = lo;
    for (;;) {
      if (*std::max_element(c.begin(), c.end()) == bound && valid(c)) {
        CorootVector lam = CorootVector::zero(rs.rank());
        for (int j = 0; j < n; ++j) lam[J[j] - 1] = c[j];
        return lam;
      }
      int i = n - 1;
      while (i >= 0 && c[i] == bound) --i;
      if (i < 0) break;
      ++c[i];
      for (int j = i + 1; j < n; ++j) c[j] = lo[j];
    }
  }
}

InfiniteWord z_word(const SubSystem& sub, const IndexSet& K) {
  CorootVector lam = z_lambda(sub, K);
  AffineWord w = reduced_word_J(AffineWeylElement::translation(sub.system, lam), sub);
  return {sub.J, {}, std::move(w)};
}

InfiniteWord act(const AffineWeylElement& x, const InfiniteWord& s, const SubSystem& sub) {
  if (!in_affine_parabolic(x, sub.J)) throw std::invalid_argument("element is not in W_J");
  require_certified(s, sub);
  const AffineRootSet A = inversion_set_affine(x.inverse(), sub);
  long p0 = 0;
  if (!A.empty())
    for (const IndexedRoot& e : phi_indexed(s, sub, max_level(A)))
      if (A.count(e.root)) p0 = std::max(p0, e.index);
  const long h = static_cast<long>(s.head.size());
  const long n = static_cast<long>(s.period.size());
  InfiniteWord out;
  out.J = s.J;
  out.head = reduced_word_J(x * prefix(s, sub, p0), sub);
  if (p0 < h) {
    out.head.insert(out.head.end(), s.head.begin() + p0, s.head.end());
    out.period = s.period;
  } else {
    const long off = (p0 - h) % n;
    out.period.assign(s.period.begin() + off, s.period.end());
    out.period.insert(out.period.end(), s.period.begin(), s.period.begin() + off);
  }
  return out;
}

InfiniteWord chi(const BiconvexParam& p, const SubSystem& sub) {
  p.validate(sub);
  if (!p.is_infinite()) throw std::invalid_argument("chi needs K to be a proper subset of J");
  return act(AffineWeylElement::finite(p.u) * p.y, z_word(sub, p.K), sub);
}

WordClass classify_word(const InfiniteWord& s, const SubSystem& sub) {
  const Certificate cert = require_certified(s, sub);
  Alphabet abc(sub);
  const long h = static_cast<long>(s.head.size());
  const long block = cert.order * static_cast<long>(s.period.size());
  RootSet tail;
  int head_top = 0;
  AffineWeylElement z = AffineWeylElement::identity(sub.system);
  for (long p = 1; p <= h + block; ++p) {
    const AffineLetter a = s.at(p);
    AffineRoot phi = z.apply(abc.root(a));
    if (p <= h)
      head_top = std::max(head_top, phi.level);
    else
      tail.insert(phi.classical);
    z = z * abc.elem(a);
  }
  const int N = head_top + 1;
  return {parametrize(phi_infinity(s, sub, N), tail, sub, N)};
}

bool equivalent(const InfiniteWord& a, const InfiniteWord& b, const SubSystem& sub) {
  return classify_word(a, sub) == classify_word(b, sub);
}

IndexSet orbit_invariant(const InfiniteWord& s, const SubSystem& sub) {
  return classify_word(s, sub).canonical_param.K;
}

}  // namespace affroot
