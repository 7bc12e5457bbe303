#include "gapord/literal.hpp"

#include <cctype>
#include <sstream>

namespace gapord {

namespace {

struct Cursor {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool at_end() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }
  bool try_eat(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!try_eat(c)) fail(std::string("expected '") + c + "'");
  }
  bool try_eat_word(std::string_view w) {
    skip_ws();
    if (text.substr(pos, w.size()) == w) {
      pos += w.size();
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& msg) {
    skip_ws();
    throw ParseError(msg, pos);
  }
};

std::uint64_t parse_nat(Cursor& c) {
  c.skip_ws();
  if (c.pos >= c.text.size() || !std::isdigit(static_cast<unsigned char>(c.text[c.pos])))
    c.fail("expected a number");
  std::uint64_t v = 0;
  while (c.pos < c.text.size() && std::isdigit(static_cast<unsigned char>(c.text[c.pos]))) {
    std::uint64_t d = static_cast<std::uint64_t>(c.text[c.pos] - '0');
    if (v > (UINT64_MAX - d) / 10) c.fail("number literal too large");
    v = v * 10 + d;
    ++c.pos;
  }
  return v;
}

OrdTerm parse_expr(Cursor& c);

OrdTerm parse_atom(Cursor& c) {
  c.skip_ws();
  char ch = c.peek();
  if (ch == '(') {
    c.expect('(');
    OrdTerm t = parse_expr(c);
    c.expect(')');
    return t;
  }
  if (std::isdigit(static_cast<unsigned char>(ch))) return fin(parse_nat(c));
  if (c.try_eat_word("phi")) {
    c.expect('(');
    OrdTerm g = parse_expr(c);
    c.expect(',');
    OrdTerm d = parse_expr(c);
    c.expect(')');
    return mk_phi(g, d);
  }
  if (c.try_eat('w')) {
    if (c.try_eat('^')) return omega_pow(parse_atom(c));
    return omega();
  }
  c.fail("expected an ordinal atom");
}

OrdTerm parse_term(Cursor& c) {
  OrdTerm t = parse_atom(c);
  if (c.try_eat('*')) {
    std::uint64_t n = parse_nat(c);
    t = mul(t, fin(n));
  }
  return t;
}

OrdTerm parse_expr(Cursor& c) {
  OrdTerm t = parse_term(c);
  while (c.try_eat('+')) t = add(t, parse_term(c));
  return t;
}

std::string print_principal(const OrdTerm::Principal& p);

// An exponent prints bare when its canonical form is an atom of the grammar
// (a number or a single principal); otherwise it is parenthesized.
std::string print_exponent(const OrdTerm& d) {
  if (is_finite(d) || (d.runs().size() == 1 && d.runs()[0].count == 1))
    return print_ord(d);
  return "(" + print_ord(d) + ")";
}

std::string print_principal(const OrdTerm::Principal& p) {
  if (p.first.is_zero()) {
    if (p.second.is_zero()) return "1";
    if (p.second == one()) return "w";
    return "w^" + print_exponent(p.second);
  }
  return "phi(" + print_ord(p.first) + "," + print_ord(p.second) + ")";
}

}  // namespace

OrdTerm parse_ord(std::string_view text) {
  Cursor c{text};
  OrdTerm t = parse_expr(c);
  if (!c.at_end()) c.fail("trailing input after ordinal");
  return t;
}

std::string print_ord(const OrdTerm& a) {
  if (a.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& run : a.runs()) {
    if (!first) out += '+';
    first = false;
    bool is_one = run.principal.first.is_zero() && run.principal.second.is_zero();
    if (is_one) {
      out += std::to_string(run.count);
    } else {
      out += print_principal(run.principal);
      if (run.count > 1) out += "*" + std::to_string(run.count);
    }
  }
  return out;
}

std::vector<OrdTerm> parse_ord_list(std::string_view text) {
  Cursor c{text};
  c.expect('[');
  std::vector<OrdTerm> out;
  if (!c.try_eat(']')) {
    out.push_back(parse_expr(c));
    while (c.try_eat(',')) out.push_back(parse_expr(c));
    c.expect(']');
  }
  if (!c.at_end()) c.fail("trailing input after sequence");
  return out;
}

std::string print_ord_list(const std::vector<OrdTerm>& members) {
  std::string out = "[";
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (i) out += ',';
    out += print_ord(members[i]);
  }
  return out + "]";
}

namespace {

template <typename Leaf, typename ParseLeaf>
LabTree<Leaf> parse_tree_rec(Cursor& c, ParseLeaf&& leaf) {
  if (c.try_eat('.')) return mk_leaf(Leaf{});
  if (c.try_eat_word("leaf")) {
    c.expect('(');
    Leaf l = leaf(c);
    c.expect(')');
    return mk_leaf(std::move(l));
  }
  c.expect('(');
  OrdTerm b = parse_expr(c);
  LabTree<Leaf> l = parse_tree_rec<Leaf>(c, leaf);
  LabTree<Leaf> r = parse_tree_rec<Leaf>(c, leaf);
  c.expect(')');
  return mk_node(b, l, r);
}

template <typename Leaf, typename PrintLeaf>
void print_tree_rec(const LabTree<Leaf>& t, std::string& out, PrintLeaf&& leaf) {
  if (t.is_leaf()) {
    out += leaf(t.leaf_label());
    return;
  }
  out += '(';
  out += print_ord(t.inner_label());
  out += ' ';
  print_tree_rec(t.left(), out, leaf);
  out += ' ';
  print_tree_rec(t.right(), out, leaf);
  out += ')';
}

}  // namespace

LabTree<Unit> parse_tree(std::string_view text) {
  Cursor c{text};
  LabTree<Unit> t = parse_tree_rec<Unit>(c, [](Cursor& cur) -> Unit {
    cur.fail("unit trees have no labeled leaves; use '.'");
  });
  if (!c.at_end()) c.fail("trailing input after tree");
  return t;
}

std::string print_tree(const LabTree<Unit>& t) {
  std::string out;
  print_tree_rec(t, out, [](Unit) { return std::string("."); });
  return out;
}

LabTree<OrdTerm> parse_tree_ord_leaves(std::string_view text) {
  Cursor c{text};
  LabTree<OrdTerm> t =
      parse_tree_rec<OrdTerm>(c, [](Cursor& cur) -> OrdTerm { return parse_expr(cur); });
  if (!c.at_end()) c.fail("trailing input after tree");
  return t;
}

std::string print_tree(const LabTree<OrdTerm>& t) {
  std::string out;
  print_tree_rec(t, out,
                 [](const OrdTerm& l) { return "leaf(" + print_ord(l) + ")"; });
  return out;
}

std::string print_tree(const LabTree<LabTree<Unit>>& t) {
  std::string out;
  print_tree_rec(t, out, [](const LabTree<Unit>& l) {
    return "leaf(" + print_tree(l) + ")";
  });
  return out;
}

}  // namespace gapord
