#include <doctest.h>

#include <fstream>
#include <sstream>

#include "gapord/literal.hpp"
#include "gapord/motype.hpp"

using namespace gapord;

namespace {
OrdTerm P(const std::string& s) { return parse_ord(s); }

struct FixtureRow {
  char fn;
  std::string input;
  std::string expected;
};

std::vector<FixtureRow> load_fixture() {
  std::ifstream in(std::string(GAPORD_FIXTURE_DIR) + "/motype_values.txt");
  REQUIRE(in.good());
  std::vector<FixtureRow> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    FixtureRow row;
    std::string fn;
    ls >> fn >> row.input >> row.expected;
    REQUIRE(fn.size() == 1);
    row.fn = fn[0];
    rows.push_back(row);
  }
  return rows;
}
}  // namespace

TEST_CASE("pinned order type values print byte-exactly") {
  for (const FixtureRow& row : load_fixture()) {
    OrdTerm a = P(row.input);
    OrdTerm value;
    switch (row.fn) {
      case 'F': value = motype_F(a); break;
      case 'G': value = motype_G(a); break;
      case 'H': value = motype_H(a); break;
      default: FAIL("bad fixture row");
    }
    CHECK_MESSAGE(print_ord(value) == row.expected,
                  row.fn, "(", row.input, ") printed ", print_ord(value));
  }
}

TEST_CASE("closed forms beyond the fixtures") {
  // decomposable bounds recurse through the tail
  CHECK(print_ord(motype_G(P("w+1"))) == "phi(1,w)");
  CHECK(print_ord(motype_F(P("2"))) == "phi(1,phi(1,0))");
  CHECK(print_ord(motype_G(P("w*2"))) == "phi(1,phi(1,0))");
  CHECK(print_ord(motype_H(P("3"))) == "w^(w^w^w^w+w^w+1)");
  // the indecomposable branch; the index 1 + w is absorbed for trees
  CHECK(print_ord(motype_G(P("w^w"))) == "phi(w,0)");
  CHECK(print_ord(motype_F(P("w^w"))) == "phi(w,0)");
}

TEST_CASE("Higman order types") {
  CHECK(print_ord(higman_star(OrdTerm{}, true)) == "1");
  CHECK(print_ord(higman_star(P("3"), false)) == "w^w^2");
  CHECK(print_ord(higman_star(P("w"), false)) == "w^w^w");
  CHECK(print_ord(higman_star(P("phi(1,0)"), false)) == "w^w^(phi(1,0)+1)");
  CHECK(print_ord(higman_star(P("phi(1,0)+2"), false)) == "w^w^(phi(1,0)+3)");
  // epsilon plus an infinite part is not in the epsilon-plus-finite case
  CHECK(print_ord(higman_star(P("phi(1,0)+w"), false)) == "w^w^(phi(1,0)+w)");
}
