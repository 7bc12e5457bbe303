#ifndef GAPORD_TESTS_ORACLE_SMALLORD_HPP
#define GAPORD_TESTS_ORACLE_SMALLORD_HPP

#include <array>
#include <optional>

#include "gapord/ordinal.hpp"

// Independent reference arithmetic for ordinals below w^8, kept as plain
// coefficient vectors.  Written directly from the textbook recurrences over a
// completely different representation, so it can cross-check the term-based
// implementation without sharing any code path with it.
namespace smallord {

constexpr int kDeg = 8;

struct SmallOrd {
  std::array<unsigned long long, kDeg> c{};

  int deg() const {
    for (int i = kDeg - 1; i >= 0; --i)
      if (c[i]) return i;
    return -1;
  }
  bool is_zero() const { return deg() < 0; }

  friend bool operator==(const SmallOrd& a, const SmallOrd& b) { return a.c == b.c; }
};

inline int cmp(const SmallOrd& a, const SmallOrd& b) {
  for (int i = kDeg - 1; i >= 0; --i) {
    if (a.c[i] != b.c[i]) return a.c[i] < b.c[i] ? -1 : 1;
  }
  return 0;
}

// a + b: everything in a strictly below b's leading power is absorbed.
inline SmallOrd add(const SmallOrd& a, const SmallOrd& b) {
  int db = b.deg();
  if (db < 0) return a;
  SmallOrd r;
  for (int i = 0; i < db; ++i) r.c[i] = b.c[i];
  r.c[db] = a.c[db] + b.c[db];
  for (int i = db + 1; i < kDeg; ++i) r.c[i] = a.c[i];
  return r;
}

// -a + b, clamped to zero when a > b.
inline SmallOrd lsub(const SmallOrd& a, const SmallOrd& b) {
  if (cmp(a, b) >= 0) return SmallOrd{};
  int i = kDeg - 1;
  while (i >= 0 && a.c[i] == b.c[i]) --i;
  SmallOrd r;
  r.c[i] = b.c[i] - a.c[i];
  for (int j = 0; j < i; ++j) r.c[j] = b.c[j];
  return r;
}

// a * b, distributing over b's powers from the most significant one; returns
// nothing when the result needs w^8 or beyond.
inline std::optional<SmallOrd> mul(const SmallOrd& a, const SmallOrd& b) {
  if (a.is_zero() || b.is_zero()) return SmallOrd{};
  SmallOrd acc;
  int da = a.deg();
  for (int e = kDeg - 1; e >= 0; --e) {
    if (!b.c[e]) continue;
    SmallOrd piece;
    if (e > 0) {
      if (da + e >= kDeg) return std::nullopt;
      piece.c[da + e] = b.c[e];
    } else {
      piece = a;
      piece.c[da] = a.c[da] * b.c[0];
    }
    acc = add(acc, piece);
  }
  return acc;
}

// Round-trips with the term representation; both directions only read off
// structure, no arithmetic involved.
inline std::optional<SmallOrd> from_term(const gapord::OrdTerm& t) {
  SmallOrd r;
  for (const auto& run : t.runs()) {
    const auto& p = run.principal;
    if (!p.first.is_zero() || !gapord::is_finite(p.second)) return std::nullopt;
    auto e = gapord::to_finite(p.second);
    if (e >= kDeg) return std::nullopt;
    r.c[e] = run.count;
  }
  return r;
}

inline gapord::OrdTerm to_term(const SmallOrd& s) {
  std::vector<gapord::OrdTerm::Run> runs;
  for (int e = kDeg - 1; e >= 0; --e) {
    if (!s.c[e]) continue;
    gapord::OrdTerm::Principal p{gapord::OrdTerm{}, gapord::fin(static_cast<std::uint64_t>(e))};
    runs.push_back(gapord::OrdTerm::Run{p, s.c[e]});
  }
  return gapord::OrdTerm::from_runs(std::move(runs));
}

}  // namespace smallord

#endif
