#include <doctest.h>

#include "gapord/gap_seq.hpp"
#include "gapord/harness.hpp"
#include "gapord/literal.hpp"

using namespace gapord;

namespace {
GapSeq Q(const std::string& members, const std::string& bound) {
  return GapSeq(parse_ord_list(members), parse_ord(bound));
}
}  // namespace

TEST_CASE("construction enforces the bound") {
  CHECK_NOTHROW(Q("[0,2]", "3"));
  CHECK_THROWS_AS(Q("[3]", "3"), BoundViolation);
  CHECK_THROWS_AS(Q("[w]", "w"), BoundViolation);
}

TEST_CASE("recursive strong order") {
  CHECK(leq_r(Q("[]", "3"), Q("[1,2,0]", "3")));
  CHECK(!leq_r(Q("[1]", "3"), Q("[0,1]", "3")));
  CHECK(leq_r(Q("[0,1]", "3"), Q("[0,0,1]", "3")));
  CHECK(leq_r(Q("[1]", "3"), Q("[1]", "3")));
  // the head bound applies even when only the tail advances
  CHECK(!leq_r(Q("[2,0]", "3"), Q("[1,2,0]", "3")));
  CHECK_THROWS_AS((void)leq_r(Q("[]", "3"), Q("[]", "4")), BoundMismatch);
}

TEST_CASE("weak order via the zero prefix") {
  CHECK(leq_w(Q("[0,2]", "3"), Q("[0,1,2]", "3")));
  CHECK(!leq_w(Q("[2,2]", "3"), Q("[2,1,2]", "3")));
  CHECK(leq_w(Q("[1]", "3"), Q("[0,1]", "3")));  // padding is fine weakly
  CHECK(leq_g(Q("[0,2]", "3"), Q("[0,1,2]", "3")));
  CHECK(leq_w(Q("[]", "0"), Q("[]", "0")));
}

TEST_CASE("oracle enumeration matches the decision procedures") {
  CHECK(oracle_leq(Q("[]", "1"), Q("[]", "1"), GapVariant::Weak));
  CHECK(!oracle_leq(Q("[1]", "3"), Q("[0,1]", "3"), GapVariant::StrongRealizer));
  CHECK(oracle_leq(Q("[0,2]", "3"), Q("[0,1,2]", "3"), GapVariant::StrongRealizer));
  // full agreement on a small exhaustive domain
  auto pool = enum_seqs(2, 4);
  for (const GapSeq& s : pool)
    for (const GapSeq& t : pool) {
      CHECK(oracle_leq(s, t, GapVariant::Weak) == leq_w(s, t));
      CHECK(oracle_leq(s, t, GapVariant::Gordeev) == leq_g(s, t));
      CHECK(oracle_leq(s, t, GapVariant::StrongRealizer) == leq_s(s, t));
      CHECK(oracle_leq(s, t, GapVariant::StrongRecursive) == leq_r(s, t));
    }
}

TEST_CASE("splitting a dominated sequence") {
  {
    auto [l, r] = split_weak(Q("[]", "3"), Q("[1]", "3"), Q("[2]", "3"));
    CHECK(l.empty());
    CHECK(r.empty());
  }
  {
    auto [l, r] = split_weak(Q("[0,2]", "3"), Q("[0,1]", "3"), Q("[2]", "3"));
    CHECK(print_ord_list(l.members) == "[0]");
    CHECK(print_ord_list(r.members) == "[2]");
  }
  CHECK_THROWS_AS((void)split_weak(Q("[2,2]", "3"), Q("[1]", "3"), Q("[1]", "3")),
                  NotDominated);
  // postconditions across an exhaustive sweep
  auto pool = enum_seqs(3, 3);
  for (const GapSeq& s : pool)
    for (const GapSeq& tl : pool)
      for (const GapSeq& tr : pool) {
        if (!leq_w(s, concat(tl, tr))) continue;
        auto [sl, sr] = split_weak(s, tl, tr);
        CHECK(concat(sl, sr).size() == s.size());
        CHECK(leq_w(sl, tl));
        CHECK(leq_w(sr, tr));
        if (!sl.empty()) CHECK(leq_s(sr, tr));
      }
}

TEST_CASE("transfinite members compare through the ordinal order") {
  GapSeq s({omega(), fin(1)}, parse_ord("w*2"));
  GapSeq t({add(omega(), fin(2)), fin(1)}, parse_ord("w*2"));
  CHECK(leq_r(s, t));
  CHECK(!leq_r(t, s));
}

TEST_CASE("realizer witnesses are valid index maps") {
  auto pool = enum_seqs(3, 4);
  for (const GapSeq& s : pool)
    for (const GapSeq& t : pool)
      for (GapVariant v : {GapVariant::Weak, GapVariant::Gordeev, GapVariant::StrongRealizer}) {
        auto r = find_realizer(s, t, v);
        CHECK(r.has_value() == oracle_leq(s, t, v));
        if (!r) continue;
        REQUIRE(r->map.size() == s.size());
        for (std::size_t i = 0; i < r->map.size(); ++i) {
          CHECK(r->map[i] < t.size());
          if (i) CHECK(r->map[i - 1] < r->map[i]);
          CHECK(ord_le(s.members[i], t.members[r->map[i]]));
        }
      }
}
