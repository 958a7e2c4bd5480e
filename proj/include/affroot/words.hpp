// Infinite reduced words over S_J as eventually periodic letter sequences,
// the W_J action on them and their classification by biconvex parameters.

#pragma once

#include <string>
#include <vector>

#include "affroot/biconvex.hpp"

namespace affroot {

// s(p) = head[p-1] for p <= |head|, then period repeated forever.
struct InfiniteWord {
  IndexSet J;
  AffineWord head;
  AffineWord period;

  AffineLetter at(long p) const;
  bool operator==(const InfiniteWord&) const = default;
};

// z_s(p) = s(1)...s(p).
AffineWeylElement prefix(const InfiniteWord& s, const SubSystem& sub, long p);
// phi_s(p) = z_s(p-1)(alpha_{s(p)}), p >= 1.
AffineRoot phi_at(const InfiniteWord& s, const SubSystem& sub, long p);

// Infinite-reducedness certificate. With Pi = z(h) pi z(h)^{-1} for the
// period product pi, Pi^r = t_nu where r is the order of the finite part of
// Pi, and phi(p + r n) = t_nu phi(p) for p > h. The word is infinite reduced
// exactly when phi > 0 up to h + r n and (phi(p) | nu) < 0 on one r-block.
struct Certificate {
  bool ok = false;
  std::string reason;
  int order = 0;    // r
  CorootVector nu;  // translation part of Pi^r
};

Certificate certify(const InfiniteWord& s, const SubSystem& sub);
// Throws std::invalid_argument with the certificate's reason on failure.
Certificate require_certified(const InfiniteWord& s, const SubSystem& sub);

struct IndexedRoot {
  long index;
  AffineRoot root;
};

// All phi_s(p) of level <= N with their indices, in index order.
std::vector<IndexedRoot> phi_indexed(const InfiniteWord& s, const SubSystem& sub, int N);
AffineRootSet phi_infinity(const InfiniteWord& s, const SubSystem& sub, int N);

// The integer coroot used for Z^K_J: smallest by maximum coefficient, then
// lexicographically, among c >= 0 over J with (alpha_k|lambda) = 0 on K and
// > 0 on J \ K. Requires K to be a proper subset of J.
CorootVector z_lambda(const SubSystem& sub, const IndexSet& K);
// Empty head, period = reduced word of t_lambda.
InfiniteWord z_word(const SubSystem& sub, const IndexSet& K);

// x.s built from the smallest p0 with Phi(x^{-1}) cap Phi^inf(s) inside
// Phi(z_s(p0)): reduced word of x z_s(p0) followed by s(p0+1), s(p0+2), ...
InfiniteWord act(const AffineWeylElement& x, const InfiniteWord& s, const SubSystem& sub);

// uy.Z^K_J. Requires K to be a proper subset of J.
InfiniteWord chi(const BiconvexParam& p, const SubSystem& sub);

struct WordClass {
  BiconvexParam canonical_param;
  bool operator==(const WordClass& o) const { return canonical_param == o.canonical_param; }
};

WordClass classify_word(const InfiniteWord& s, const SubSystem& sub);
bool equivalent(const InfiniteWord& a, const InfiniteWord& b, const SubSystem& sub);
IndexSet orbit_invariant(const InfiniteWord& s, const SubSystem& sub);

}  // namespace affroot
