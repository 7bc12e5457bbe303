#include <doctest.h>

#include "gapord/embed.hpp"
#include "gapord/harness.hpp"
#include "gapord/literal.hpp"

using namespace gapord;

namespace {
GapSeq Q(const std::string& members, const std::string& bound) {
  return GapSeq(parse_ord_list(members), parse_ord(bound));
}
OrdTerm P(const std::string& s) { return parse_ord(s); }
}  // namespace

TEST_CASE("sequence to left-strict tree") {
  CHECK(print_tree(seq_to_tree(Q("[2,0,1,0,3]", "4"))) == "(0 (2 . .) (0 (1 . .) (3 . .)))");
  CHECK(print_tree(seq_to_tree(Q("[]", "1"))) == ".");
  CHECK(print_tree(seq_to_tree(Q("[5]", "6"))) == "(5 . .)");
  for (const GapSeq& s : enum_seqs(3, 5)) CHECK(is_left_strict(seq_to_tree(s)));
}

TEST_CASE("Veblen terms into weak gap sequences") {
  CHECK(print_ord_list(phi_to_gapseq(P("0"), P("2")).members) == "[0]");
  CHECK(print_ord_list(phi_to_gapseq(P("1"), P("2")).members) == "[1]");
  CHECK(print_ord_list(phi_to_gapseq(P("1+1"), P("2")).members) == "[1,0,1]");
  // w = phi(0,1): 1 + [1] = [2]
  CHECK(print_ord_list(phi_to_gapseq(P("w"), P("2")).members) == "[2]");
  // phi(1,0): w^1 + [0] = [w]
  CHECK(print_ord_list(phi_to_gapseq(P("phi(1,0)"), P("2")).members) == "[w]");
  CHECK_THROWS_AS((void)phi_to_gapseq(P("phi(2,0)"), P("2")), IndexOutOfRange);
}

TEST_CASE("weak vs strong shifts") {
  GapSeq s = Q("[1,0]", "2");
  CHECK(print_ord_list(strong_to_weak(s).members) == "[2,1,0]");
  CHECK(strong_to_weak(Q("[]", "2")).members.size() == 1);
  CHECK(print_ord_list(strong_to_weak(Q("[]", "2")).members) == "[2]");
  CHECK(print_ord_list(weak_to_strong(s).members) == "[1,0]");
  CHECK(strong_to_weak(s).bound == fin(3));
}

TEST_CASE("bullet order rules") {
  OrdTerm two = fin(2);
  auto B = [&](const std::string& m) { return BulletSeq(parse_ord_list(m), two); };
  CHECK(bullet_leq(B("[]"), B("[1,0,1]")));
  CHECK(bullet_leq(B("[0,0,1]"), B("[1,1]")));  // the prefix-discard rule
  CHECK(!bullet_leq(B("[1,0]"), B("[0,1]")));
  CHECK(!higman_leq(B("[0,0,1]").members, B("[1,1]").members,
                    [](const OrdTerm& a, const OrdTerm& b) { return ord_le(a, b); }));
  CHECK_THROWS_AS((void)bullet_leq(B("[0]"), BulletSeq({fin(0)}, fin(3))), AlphabetMismatch);
}

TEST_CASE("naturals into unary bullet sequences") {
  CHECK(nat_to_bullet(0).members.empty());
  CHECK(print_ord_list(nat_to_bullet(3).members) == "[0,0,0]");
  CHECK(!bullet_leq(nat_to_bullet(4), nat_to_bullet(3)));
  CHECK(bullet_leq(nat_to_bullet(3), nat_to_bullet(4)));
}

TEST_CASE("bullet stages split off base digits") {
  BulletEmbed h1 = bullet_stage(nat_to_bullet_embed(), 1);
  CHECK(print_ord_list(h1.apply(P("3")).members) == "[0,0,0,1]");
  BulletEmbed h2 = bullet_stage(nat_to_bullet_embed(), 2);
  CHECK(print_ord_list(h2.apply(P("w*2+3")).members) == "[0,0,0,1,0,0,1]");
  CHECK(print_ord_list(h2.apply(P("0")).members) == "[1,1]");
  CHECK(h2.domain == P("w^2"));
  CHECK(h2.alphabet == P("2"));
  CHECK_THROWS_AS((void)h2.apply(P("w^2")), InputOutOfRange);
  // a second stage over the first
  BulletEmbed h22 = bullet_stage(h2, 2);
  CHECK(h22.domain == P("w^4"));
  CHECK(h22.alphabet == P("3"));
  CHECK(print_ord_list(h22.apply(P("w^2*1+1")).members) == "[0,1,1,2,0,1,1,2]");
}

TEST_CASE("bullet sequences into weak gap sequences") {
  SeqEmbed f;
  f.domain = omega();
  f.target_bound = one();
  f.apply = [](const OrdTerm& k) {
    return GapSeq(std::vector<OrdTerm>(to_finite(k), OrdTerm{}), one());
  };
  auto g = [&](const std::string& m, const OrdTerm& alphabet) {
    return bullet_to_weak_apply(BulletSeq(parse_ord_list(m), alphabet), f);
  };
  CHECK(g("[]", omega()).empty());
  CHECK(print_ord_list(g("[2]", omega()).members) == "[1,1,0]");
  CHECK(print_ord_list(g("[2,1]", omega()).members) == "[1,1,0,1,0]");
}

TEST_CASE("strong lower bound from base expansions") {
  // alpha = w, gamma = 1, delta = 0: target bound w
  SeqEmbed f;
  f.domain = omega();
  f.target_bound = omega();
  f.apply = [](const OrdTerm& k) { return GapSeq({k}, omega()); };
  SeqEmbed base = strong_lower_base(f, one(), OrdTerm{});
  CHECK(base.apply(P("0")).empty());
  CHECK(print_ord_list(base.apply(P("3")).members) == "[0,3]");
  CHECK(print_ord_list(base.apply(P("w*2+3")).members) == "[1,3,0,3]");
  CHECK(base.domain == P("w^w"));
  CHECK_THROWS_AS((void)base.apply(P("w^w")), InputOutOfRange);
  SeqEmbed tiny;
  tiny.domain = one();
  tiny.target_bound = omega();
  tiny.apply = [](const OrdTerm&) { return GapSeq({}, omega()); };
  CHECK_THROWS_AS((void)strong_lower_base(tiny, one(), OrdTerm{}), BaseTooSmall);
}

TEST_CASE("combining strong lower bounds") {
  // gamma = 1, delta = w, bound w*2; f is the base map over alpha = w
  OrdTerm delta = omega();
  OrdTerm bound = P("w*2");
  SeqEmbed f;
  f.domain = omega();
  f.target_bound = bound;
  f.apply = [bound](const OrdTerm& k) { return GapSeq({k}, bound); };
  SeqEmbed base = strong_lower_base(f, one(), delta);
  SeqEmbed g;
  g.domain = omega();
  g.target_bound = delta;
  g.apply = [delta](const OrdTerm& k) { return GapSeq({k}, delta); };
  // divide by alpha = w as in the combining construction
  SeqEmbed comb = strong_lower_combine(base, omega(), g, one());
  // (w + g(0)) * base(0) = [w]
  CHECK(print_ord_list(comb.apply(P("0")).members) == "[w]");
  CHECK(print_ord_list(comb.apply(P("w+3")).members) == "[w+1,0,3]");
  // a base map without the range property is rejected
  SeqEmbed bad;
  bad.domain = omega();
  bad.target_bound = bound;
  bad.apply = [bound](const OrdTerm&) { return GapSeq({omega()}, bound); };
  SeqEmbed bad_comb = strong_lower_combine(bad, omega(), g, one());
  CHECK_THROWS_AS((void)bad_comb.apply(P("1")), RangePropertyViolated);
}

TEST_CASE("combining with maps that send zero to the empty sequence") {
  OrdTerm delta = omega();
  OrdTerm bound = P("w*2");
  SeqEmbed f;
  f.domain = omega();
  f.target_bound = bound;
  f.apply = [bound](const OrdTerm& k) { return GapSeq({k}, bound); };
  SeqEmbed base = strong_lower_base(f, one(), delta);
  SeqEmbed g;
  g.domain = omega();
  g.target_bound = delta;
  g.apply = [delta](const OrdTerm& k) {
    return GapSeq(std::vector<OrdTerm>(to_finite(k), OrdTerm{}), delta);
  };
  SeqEmbed comb = strong_lower_combine(base, omega(), g, one());
  CHECK(comb.apply(P("0")).empty());  // both components vanish at zero
}

TEST_CASE("Veblen lower bounds for sequences") {
  auto f = [](const OrdTerm& k) {
    return GapSeq(std::vector<OrdTerm>(to_finite(k) + 1, OrdTerm{}), one());
  };
  OrdTerm alpha = one(), beta = omega(), rho = one();
  auto g = [&](const std::string& s) {
    return print_ord_list(veblen_lower_seq(P(s), alpha, beta, rho, f).members);
  };
  CHECK(g("0") == "[0]");
  CHECK(g("1") == "[1]");       // w^0 + g(0)
  CHECK(g("1+1") == "[1,0,1]"); // around the separator
  CHECK(g("w") == "[2]");       // w^0 + g(1)
  CHECK(g("phi(1,0)") == "[w]");  // w^1 + f(0) = w + [0]
  CHECK_THROWS_AS((void)veblen_lower_seq(P("phi(2,0)"), alpha, beta, rho, f),
                  IndexOutOfRange);
  CHECK_THROWS_AS((void)veblen_lower_seq(P("phi(1,w)"), alpha, beta, rho, f),
                  InputOutOfRange);
  auto empty_f = [](const OrdTerm&) { return GapSeq({}, one()); };
  CHECK_THROWS_AS((void)veblen_lower_seq(P("phi(1,0)"), alpha, beta, rho, empty_f),
                  ExcludedValueInRange);
}

TEST_CASE("Veblen lower bounds for trees") {
  std::function<LabTree<Unit>(const OrdTerm&)> f = [](const OrdTerm& k) {
    LabTree<Unit> t = mk_node(OrdTerm{}, mk_leaf(Unit{}), mk_leaf(Unit{}));
    for (std::uint64_t i = 0; i < to_finite(k); ++i)
      t = mk_node(OrdTerm{}, t, mk_leaf(Unit{}));
    return t;
  };
  OrdTerm alpha = one(), beta = omega();
  auto g = [&](const std::string& s) {
    return print_tree(veblen_lower_tree(P(s), alpha, beta, f));
  };
  CHECK(g("0") == "(0 . .)");
  // 1 = w^0: root 0 over the images of the exponent and of zero
  CHECK(g("1") == "(0 (0 . .) (0 . .))");
  // w + 1: head w^1 with positive rest
  CHECK(g("w+1") == "(0 (0 (0 . .) (0 . .)) (0 (0 . .) (0 . .)))");
  // phi(1,0) sits at inner index 0 (written 1+0), shifting labels by w^0 = 1
  CHECK(g("phi(1,0)") == "(1 . .)");
  // phi(2,0) is the top index 1+alpha: shift the base image by w
  CHECK(g("phi(2,0)") == "(w . .)");
  CHECK_THROWS_AS((void)veblen_lower_tree(P("phi(3,0)"), alpha, beta, f), IndexOutOfRange);
  CHECK_THROWS_AS((void)veblen_lower_tree(P("phi(2,w)"), alpha, beta, f), InputOutOfRange);
  for (const char* s : {"0", "1", "w", "w+1", "w^w", "phi(1,0)", "phi(1,3)+w^2*2"})
    CHECK(is_ascending(veblen_lower_tree(P(s), alpha, beta, f)));
}

TEST_CASE("left-set encodings") {
  auto unit_le = [](Unit, Unit) { return true; };
  // the excluded tree must be labeled zero at the root
  CHECK_THROWS_AS((void)left_set_root(parse_tree("."), parse_tree("."), unit_le),
                  PreconditionViolated);
  LabTree<Unit> excluded = parse_tree("(0 (1 . .) .)");
  // a leaf becomes the one-element tagged sequence
  auto img = left_set_root(excluded, parse_tree("."), unit_le);
  CHECK(img.size() == 1);
  CHECK(img[0].tag == 0);
  // the spine unravels right when the excluded left subtree does not embed
  auto img2 = left_set_root(excluded, parse_tree("(0 . (2 . .))"), unit_le);
  CHECK(img2.size() == 3);
  CHECK(img2[0].tag == 1);
  CHECK(img2[1].tag == 1);
  CHECK(img2[2].tag == 0);
  // shift variant: everything at or above the threshold collapses to a leaf
  LabTree<Unit> excl2 = parse_tree("(1 (2 . .) .)");
  auto shifted = left_set_shift(excl2, parse_tree("(1 (2 . .) (1 . .))"));
  CHECK(shifted.is_leaf());
  CHECK(print_tree(shifted.leaf_label()) == "(0 (1 . .) (0 . .))");
  CHECK_THROWS_AS((void)left_set_shift(parse_tree("(0 . .)"), parse_tree(".")),
                  PreconditionViolated);
}

TEST_CASE("splitting decomposable label bounds") {
  // alpha = w + 2: the cut threshold is w
  OrdTerm alpha = P("w+2");
  CHECK(print_tree(tree_label_split(parse_tree("."), alpha)) == "leaf(.)");
  // every label at or above the threshold: one shifted leaf
  LabTree<Unit> high = mk_node(omega(), mk_leaf(Unit{}),
                               mk_node(P("w+1"), mk_leaf(Unit{}), mk_leaf(Unit{})));
  LabTree<LabTree<Unit>> cut = tree_label_split(high, alpha);
  CHECK(cut.is_leaf());
  CHECK(print_tree(cut.leaf_label()) == "(0 . (1 . .))");
  // labels below the threshold keep their nodes
  LabTree<Unit> mixed = mk_node(fin(0), high, mk_leaf(Unit{}));
  LabTree<LabTree<Unit>> cut2 = tree_label_split(mixed, alpha);
  CHECK(!cut2.is_leaf());
  CHECK(cut2.inner_label().is_zero());
  CHECK(print_tree(cut2.left().leaf_label()) == "(0 . (1 . .))");
  CHECK(print_tree(cut2.right().leaf_label()) == ".");
  CHECK_THROWS_AS((void)tree_label_split(parse_tree("."), P("0")), ZeroBound);
}

TEST_CASE("strong decompositions") {
  {
    StrongSplitFin s = strong_decompose_fin(Q("[1,2,0,1]", "3"));
    CHECK(print_ord_list(s.low.members) == "[0,1]");
    CHECK(print_ord_list(s.rest.members) == "[0,1]");
    CHECK(s.low.bound == fin(2));
  }
  {
    StrongSplitFin s = strong_decompose_fin(Q("[]", "3"));
    CHECK(s.low.empty());
    CHECK(s.rest.empty());
  }
  {
    StrongSplitFin s = strong_decompose_fin(Q("[0]", "3"));
    CHECK(s.low.empty());
    CHECK(print_ord_list(s.rest.members) == "[0]");
  }
  CHECK_THROWS_AS((void)strong_decompose_fin(Q("[0]", "w")), PreconditionViolated);
  // the empty sequence decomposes into empty components
  {
    StrongSplitInf s = strong_decompose_inf(Q("[]", "w"));
    CHECK(s.high.empty());
    CHECK(s.tail.empty());
  }
  // infinite bound w: delta = 0, everything goes through the tagged tail
  {
    StrongSplitInf s = strong_decompose_inf(Q("[2,0,1]", "w"));
    CHECK(s.high.empty());
    REQUIRE(s.tail.size() == 3);
    CHECK(s.tail[0].is_seq);
    CHECK(print_ord_list(s.tail[0].seq.members) == "[0,1]");
    CHECK(s.tail[1].is_seq);
    CHECK(s.tail[1].seq.empty());
    CHECK(s.tail[2].is_seq);
    CHECK(print_ord_list(s.tail[2].seq.members) == "[0]");
  }
  // infinite minimum: the head tag carries -1 + exponent
  {
    StrongSplitInf s = strong_decompose_inf(GapSeq({omega()}, P("w^2")));
    CHECK(s.high.empty());
    REQUIRE(!s.tail.empty());
    CHECK(!s.tail[0].is_seq);
    CHECK(s.tail[0].ord.is_zero());  // -1 + 1
  }
  // members at or above w^gamma move to the first component
  {
    StrongSplitInf s = strong_decompose_inf(GapSeq({P("w+1"), P("2")}, P("w*2")));
    CHECK(print_ord_list(s.high.members) == "[1]");
    REQUIRE(!s.tail.empty());
  }
  CHECK_THROWS_AS((void)strong_decompose_inf(Q("[0]", "3")), NotInfiniteBound);
}

namespace {

// Derivation search for the bullet rules, written without the table.
bool naive_bullet(const std::vector<OrdTerm>& s, std::size_t i,
                  const std::vector<OrdTerm>& t, std::size_t j) {
  if (i == s.size()) return true;
  if (j == t.size()) return false;
  if (ord_le(s[i], t[j]) && naive_bullet(s, i + 1, t, j + 1)) return true;
  // discard any prefix of members strictly below t[j]
  for (std::size_t k = i; k <= s.size(); ++k) {
    if (naive_bullet(s, k, t, j + 1)) return true;
    if (k < s.size() && !ord_lt(s[k], t[j])) break;
  }
  return false;
}

}  // namespace

TEST_CASE("bullet decision procedure agrees with the rule search") {
  for (std::uint64_t alphabet : {2, 3}) {
    OrdTerm ab = fin(alphabet);
    std::vector<BulletSeq> pool;
    for (const GapSeq& s : enum_seqs(alphabet, 4)) pool.push_back(BulletSeq(s.members, ab));
    for (const auto& s : pool)
      for (const auto& t : pool)
        CHECK(bullet_leq(s, t) == naive_bullet(s.members, 0, t.members, 0));
  }
}

TEST_CASE("Veblen lower bound at an infinite top index") {
  auto f = [](const OrdTerm& k) {
    return GapSeq(std::vector<OrdTerm>(to_finite(k) + 1, OrdTerm{}), one());
  };
  OrdTerm alpha = omega(), beta = omega(), rho = one();
  // an inner index routes through the shift, the top case needs index w
  // g(2) = [1,0,1]; the shift also hits the separator: w^3 + 0 = w^3
  GapSeq a = veblen_lower_seq(P("phi(3,2)"), alpha, beta, rho, f);
  CHECK(print_ord_list(a.members) == "[w^3+1,w^3,w^3+1]");
  GapSeq b = veblen_lower_seq(P("phi(w,1)"), alpha, beta, rho, f);
  CHECK(print_ord_list(b.members) == "[w^w,w^w]");
}

TEST_CASE("infinite decomposition with an infinite exponent tag") {
  // bound w^(w+1): the single member w^w stays below the threshold, and its
  // leading exponent w produces the ordinal tag -1 + w = w
  GapSeq s({pow(omega(), omega())}, pow(omega(), P("w+1")));
  StrongSplitInf split = strong_decompose_inf(s);
  CHECK(split.high.empty());
  REQUIRE(split.tail.size() >= 1);
  CHECK(!split.tail[0].is_seq);
  CHECK(split.tail[0].ord == omega());
}
