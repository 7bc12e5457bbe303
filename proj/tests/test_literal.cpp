#include <doctest.h>

#include "gapord/harness.hpp"
#include "gapord/gap_seq.hpp"
#include "gapord/literal.hpp"

using namespace gapord;

TEST_CASE("ordinal grammar round trips") {
  auto canon = [](const std::string& in) { return print_ord(parse_ord(in)); };
  CHECK(canon("0") == "0");
  CHECK(canon("7") == "7");
  CHECK(canon("w") == "w");
  CHECK(canon("w ^ w + 1") == "w^w+1");
  CHECK(canon("phi(0,phi(1,0))") == "phi(1,0)");
  CHECK(canon("w+w") == "w*2");
  CHECK(canon("(w+1)*2") == "w*2+1");
  CHECK(canon("w^0") == "1");
  CHECK(canon("w^1") == "w");
  CHECK(canon("w^(w+1)") == "w^(w+1)");
  CHECK(canon("w^w^w") == "w^w^w");
  CHECK(canon("1+w") == "w");
  CHECK(canon("w^2*3+w*2+5") == "w^2*3+w*2+5");
  CHECK(canon("phi(2,0)") == "phi(2,0)");
}

TEST_CASE("parse errors carry byte offsets") {
  auto offset_of = [](const std::string& in) {
    try {
      (void)parse_ord(in);
    } catch (const ParseError& e) {
      return e.offset;
    }
    return static_cast<std::size_t>(-1);
  };
  CHECK(offset_of("w+") == 2);
  CHECK(offset_of("phi(1") == 5);
  CHECK(offset_of("q") == 0);
  CHECK(offset_of("w^") == 2);
  CHECK(offset_of("1 2") == 2);
}

TEST_CASE("parse then print is the identity on normal forms") {
  Rng rng(21);
  for (int i = 0; i < 2000; ++i) {
    OrdTerm t = random_ord(rng, 7);
    CHECK(parse_ord(print_ord(t)) == t);
    // printing is stable
    CHECK(print_ord(parse_ord(print_ord(t))) == print_ord(t));
  }
}

TEST_CASE("round trips on enumerated values") {
  for (const OrdTerm& t : enum_ords(5)) CHECK(parse_ord(print_ord(t)) == t);
  for (const GapSeq& s : enum_seqs(3, 3)) {
    std::vector<OrdTerm> back = parse_ord_list(print_ord_list(s.members));
    REQUIRE(back.size() == s.members.size());
    for (std::size_t i = 0; i < back.size(); ++i) CHECK(back[i] == s.members[i]);
  }
}

TEST_CASE("sequence literals") {
  CHECK(print_ord_list(parse_ord_list("[]")) == "[]");
  CHECK(print_ord_list(parse_ord_list("[ 1, w, 0 ]")) == "[1,w,0]");
  CHECK(print_ord_list(parse_ord_list("[w^w+1]")) == "[w^w+1]");
  CHECK_THROWS_AS((void)parse_ord_list("[1,"), ParseError);
  CHECK_THROWS_AS((void)parse_ord_list("1,2"), ParseError);
}

TEST_CASE("tree literals") {
  CHECK(print_tree(parse_tree(".")) == ".");
  CHECK(print_tree(parse_tree("(0 (2 . .) (0 (1 . .) (3 . .)))")) ==
        "(0 (2 . .) (0 (1 . .) (3 . .)))");
  CHECK(print_tree(parse_tree("( 1 . . )")) == "(1 . .)");
  // labels must ascend
  CHECK_THROWS_AS((void)parse_tree("(1 (0 . .) .)"), AscendingViolation);
  CHECK_THROWS_AS((void)parse_tree("(0 . "), ParseError);
  // labeled leaves
  LabTree<OrdTerm> t = parse_tree_ord_leaves("(0 leaf(w) leaf(2))");
  CHECK(print_tree(t) == "(0 leaf(w) leaf(2))");
  // round trip on enumerated unit trees
  for (const auto& tree : enum_trees(3, 7, false))
    CHECK(print_tree(parse_tree(print_tree(tree))) == print_tree(tree));
}
