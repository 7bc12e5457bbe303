#include <doctest.h>

#include "gapord/harness.hpp"
#include "gapord/literal.hpp"

using namespace gapord;

TEST_CASE("sequence enumeration") {
  CHECK(enum_seqs(3, 4).size() == 121);  // 1 + 3 + 9 + 27 + 81
  CHECK(enum_seqs(5, 0).size() == 1);
  auto tiny = enum_seqs(1, 2);
  REQUIRE(tiny.size() == 3);
  CHECK(print_ord_list(tiny[0].members) == "[]");
  CHECK(print_ord_list(tiny[1].members) == "[0]");
  CHECK(print_ord_list(tiny[2].members) == "[0,0]");
}

TEST_CASE("tree enumeration") {
  auto only_leaf = enum_trees(1, 1, false);
  REQUIRE(only_leaf.size() == 1);
  CHECK(only_leaf[0].is_leaf());
  auto small = enum_trees(1, 3, false);
  REQUIRE(small.size() == 2);
  CHECK(print_tree(small[1]) == "(0 . .)");
  auto strict = enum_trees(2, 3, true);
  REQUIRE(strict.size() == 3);
  CHECK(print_tree(strict[1]) == "(0 . .)");
  CHECK(print_tree(strict[2]) == "(1 . .)");
  for (const auto& t : enum_trees(3, 7, false)) CHECK(is_ascending(t));
  for (const auto& t : enum_trees(3, 7, true)) CHECK(is_left_strict(t));
}

TEST_CASE("ordinal term enumeration") {
  auto pool = enum_ords(4);
  // every enumerated term is in normal form and they are pairwise distinct
  for (const auto& t : pool) CHECK_NOTHROW((void)OrdTerm::from_runs(t.runs()));
  for (std::size_t i = 0; i < pool.size(); ++i)
    for (std::size_t j = i + 1; j < pool.size(); ++j) CHECK(pool[i] != pool[j]);
  // 0, 1, 2, 3, w, w+1, w*2, w^2, w^w, phi(1,0), ... are all present
  for (const char* lit : {"0", "1", "3", "w", "w+1", "w*2", "w^2", "phi(1,0)", "phi(1,1)"}) {
    bool found = false;
    for (const auto& t : pool)
      if (t == parse_ord(lit)) found = true;
    CHECK_MESSAGE(found, lit);
  }
}

TEST_CASE("bad sequence growth") {
  Rng rng(7);
  auto sample = [&] { return random_tree(rng, 3, 9); };
  auto le = [](const LabTree<Unit>& a, const LabTree<Unit>& b) { return leq_tree(a, b); };
  auto seq = grow_bad_sequence<LabTree<Unit>>(sample, le, 50);
  for (std::size_t i = 0; i < seq.size(); ++i)
    for (std::size_t j = i + 1; j < seq.size(); ++j) CHECK(!leq_tree(seq[i], seq[j]));
  // deterministic for a fixed seed
  Rng rng2(7);
  auto sample2 = [&] { return random_tree(rng2, 3, 9); };
  auto seq2 = grow_bad_sequence<LabTree<Unit>>(sample2, le, 50);
  REQUIRE(seq.size() == seq2.size());
  for (std::size_t i = 0; i < seq.size(); ++i)
    CHECK(print_tree(seq[i]) == print_tree(seq2[i]));
  // a length cap is respected
  auto capped = grow_bad_sequence<LabTree<Unit>>(sample, le, 1);
  CHECK(capped.size() == 1);
}

TEST_CASE("reflection checking flags broken maps") {
  // identity on ordinals: no failures
  EmbedFn<OrdTerm, OrdTerm> id{
      "identity", [](const OrdTerm& x) { return x; },
      [](const OrdTerm& a, const OrdTerm& b) { return ord_le(a, b); },
      [](const OrdTerm& a, const OrdTerm& b) { return ord_le(a, b); }};
  std::vector<std::pair<OrdTerm, OrdTerm>> pairs = {{fin(0), fin(1)}, {fin(1), fin(0)}};
  CHECK(check_reflection(id, pairs, print_ord).passed());
  // a constant map collapses an incomparable pair in the bullet order
  EmbedFn<GapSeq, OrdTerm> broken{
      "constant", [](const GapSeq&) { return fin(0); },
      [](const GapSeq& a, const GapSeq& b) { return leq_w(a, b); },
      [](const OrdTerm& a, const OrdTerm& b) { return ord_le(a, b); }};
  GapSeq x({fin(1), fin(0)}, fin(2));
  GapSeq y({fin(0), fin(1)}, fin(2));
  std::vector<std::pair<GapSeq, GapSeq>> bad_pairs = {{x, y}};
  CheckReport r = check_reflection(broken, bad_pairs,
                                   [](const GapSeq& s) { return print_ord_list(s.members); });
  CHECK(r.failures_total == 1);
}

TEST_CASE("suite registry") {
  CHECK_THROWS_AS((void)run_suite("no-such-suite", DomainSpec{}), UnknownSuite);
  CHECK(!suite_names().empty());
  // the default equivalence suite runs the full exhaustive square
  DomainSpec spec;
  spec.alphabet = 3;
  spec.max_len = 4;
  CheckReport r = run_suite("seq-equivalence", spec);
  CHECK(r.cases == 14641);
  CHECK(r.passed());
  // reports are reproducible for equal seeds
  DomainSpec s1;
  s1.count = 500;
  s1.seed = 123;
  CheckReport a = run_suite("ord-total-order", s1);
  CheckReport b = run_suite("ord-total-order", s1);
  CHECK(a.to_string() == b.to_string());
  s1.seed = 124;
  CheckReport c = run_suite("ord-lsub", s1);
  CHECK(c.passed());
}

TEST_CASE("every registered suite passes at reduced sizes") {
  DomainSpec spec;
  spec.alphabet = 3;
  spec.max_len = 3;
  spec.max_nodes = 6;
  spec.max_size = 4;
  spec.count = 200;
  spec.seed = 77;
  for (const std::string& name : suite_names()) {
    CheckReport r = run_suite(name, spec);
    CHECK_MESSAGE(r.passed(), name, ": ", r.failures_total, " failures");
  }
}
