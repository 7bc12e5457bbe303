// Command line access to the ordinal notation system, the gap-condition
// orders, the quasi-embedding constructions, the reification, and the
// property-check suites.  Relations are reported through exit codes so the
// tool can be scripted: 0 the relation holds, 1 it does not, 2 usage or parse
// errors.

#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gapord/embed.hpp"
#include "gapord/gap_seq.hpp"
#include "gapord/gap_tree.hpp"
#include "gapord/harness.hpp"
#include "gapord/literal.hpp"
#include "gapord/motype.hpp"
#include "gapord/ordinal.hpp"
#include "gapord/reify.hpp"

using namespace gapord;

namespace {

GapSeq make_seq(const std::vector<OrdTerm>& members, const OrdTerm* bound_opt) {
  OrdTerm bound;
  if (bound_opt) {
    bound = *bound_opt;
  } else {
    for (const OrdTerm& m : members)
      if (!ord_lt(m, bound)) bound = add(m, one());
  }
  return GapSeq(members, bound);
}

void print_realizer(const GapSeq& s, const GapSeq& t, GapVariant variant) {
  if (s.empty()) {
    std::cout << "realizer: (empty)\n";
    return;
  }
  if (auto r = find_realizer(s, t, variant)) {
    std::cout << "realizer:";
    for (std::size_t j : r->map) std::cout << " " << j;
    std::cout << "\n";
  }
}

std::map<std::string, std::string> parse_params(const std::vector<std::string>& kvs) {
  std::map<std::string, std::string> out;
  for (const std::string& kv : kvs) {
    auto eq = kv.find('=');
    if (eq == std::string::npos)
      throw CLI::ValidationError("--param", "expected key=value, got '" + kv + "'");
    out[kv.substr(0, eq)] = kv.substr(eq + 1);
  }
  return out;
}

std::string require_param(const std::map<std::string, std::string>& params,
                          const std::string& key) {
  auto it = params.find(key);
  if (it == params.end())
    throw CLI::ValidationError("--param", "missing required parameter '" + key + "'");
  return it->second;
}

std::string print_split_tags(const std::vector<SplitTag>& tags) {
  std::string out = "[";
  for (std::size_t i = 0; i < tags.size(); ++i) {
    if (i) out += ',';
    out += tags[i].is_seq ? "i0(" + print_ord_list(tags[i].seq.members) + ")"
                          : "i1(" + print_ord(tags[i].ord) + ")";
  }
  return out + "]";
}

int run_embed(const std::string& name, const std::map<std::string, std::string>& params,
              const std::string& literal) {
  if (name == "seq-to-tree") {
    GapSeq s = make_seq(parse_ord_list(literal), nullptr);
    std::cout << print_tree(seq_to_tree(s)) << "\n";
    return 0;
  }
  if (name == "phi-to-gapseq") {
    OrdTerm alpha = parse_ord(require_param(params, "alpha"));
    GapSeq img = phi_to_gapseq(parse_ord(literal), alpha);
    std::cout << print_ord_list(img.members) << "\n";
    return 0;
  }
  if (name == "weak-to-strong") {
    std::cout << print_ord_list(parse_ord_list(literal)) << "\n";
    return 0;
  }
  if (name == "strong-to-weak") {
    OrdTerm bound = parse_ord(require_param(params, "bound"));
    GapSeq s(parse_ord_list(literal), bound);
    std::cout << print_ord_list(strong_to_weak(s).members) << "\n";
    return 0;
  }
  if (name == "nat-to-bullet") {
    OrdTerm n = parse_ord(literal);
    if (!is_finite(n)) throw InputOutOfRange("nat-to-bullet expects a natural number");
    std::cout << print_ord_list(nat_to_bullet(to_finite(n)).members) << "\n";
    return 0;
  }
  if (name == "bullet-stage" || name == "bullet-pipeline") {
    std::istringstream stages(require_param(params, "stages"));
    BulletEmbed cur = nat_to_bullet_embed();
    std::string tok;
    while (std::getline(stages, tok, ','))
      cur = bullet_stage(cur, static_cast<std::uint64_t>(std::stoull(tok)));
    BulletSeq img = cur.apply(parse_ord(literal));
    if (name == "bullet-stage") {
      std::cout << print_ord_list(img.members) << "\n";
      return 0;
    }
    SeqEmbed letters;
    letters.domain = cur.alphabet;
    letters.target_bound = one();
    letters.apply = [](const OrdTerm& k) {
      return GapSeq(std::vector<OrdTerm>(to_finite(k), OrdTerm{}), one());
    };
    std::cout << print_ord_list(bullet_to_weak_apply(img, letters).members) << "\n";
    return 0;
  }
  if (name == "strong-lower") {
    OrdTerm gamma = parse_ord(require_param(params, "gamma"));
    OrdTerm delta = parse_ord(require_param(params, "delta"));
    OrdTerm bound = add(omega_pow(gamma), delta);
    SeqEmbed f;
    f.domain = omega();
    f.target_bound = bound;
    f.apply = [bound](const OrdTerm& k) { return GapSeq({k}, bound); };
    SeqEmbed base = strong_lower_base(f, gamma, delta);
    SeqEmbed g;
    g.domain = omega();
    g.target_bound = delta;
    g.apply = [delta](const OrdTerm& k) { return GapSeq({k}, delta); };
    SeqEmbed comb = strong_lower_combine(base, base.domain, g, gamma);
    std::cout << print_ord_list(comb.apply(parse_ord(literal)).members) << "\n";
    return 0;
  }
  if (name == "veblen-seq" || name == "veblen-tree") {
    OrdTerm alpha = parse_ord(require_param(params, "alpha"));
    OrdTerm sigma = parse_ord(literal);
    if (name == "veblen-seq") {
      auto f = [](const OrdTerm& k) {
        return GapSeq(std::vector<OrdTerm>(to_finite(k) + 1, OrdTerm{}), one());
      };
      GapSeq img = veblen_lower_seq(sigma, alpha, omega(), one(), f);
      std::cout << print_ord_list(img.members) << "\n";
    } else {
      std::function<LabTree<Unit>(const OrdTerm&)> f = [](const OrdTerm& k) {
        LabTree<Unit> t = mk_node(OrdTerm{}, mk_leaf(Unit{}), mk_leaf(Unit{}));
        for (std::uint64_t i = 0; i < to_finite(k); ++i)
          t = mk_node(OrdTerm{}, t, mk_leaf(Unit{}));
        return t;
      };
      std::cout << print_tree(veblen_lower_tree(sigma, alpha, omega(), f)) << "\n";
    }
    return 0;
  }
  if (name == "tree-label-split") {
    OrdTerm alpha = parse_ord(require_param(params, "alpha"));
    std::cout << print_tree(tree_label_split(parse_tree(literal), alpha)) << "\n";
    return 0;
  }
  if (name == "left-set-shift") {
    LabTree<Unit> excluded = parse_tree(require_param(params, "excluded"));
    std::cout << print_tree(left_set_shift(excluded, parse_tree(literal))) << "\n";
    return 0;
  }
  if (name == "left-set-root") {
    LabTree<Unit> excluded = parse_tree(require_param(params, "excluded"));
    auto items = left_set_root(excluded, parse_tree(literal),
                               [](Unit, Unit) { return true; });
    std::string out = "[";
    for (std::size_t i = 0; i < items.size(); ++i) {
      if (i) out += ',';
      if (items[i].tag == 0)
        out += "i0(.)";
      else
        out += "i" + std::to_string(items[i].tag) + "(" + print_ord(items[i].label) + "," +
               print_tree(items[i].tree) + ")";
    }
    std::cout << out << "]\n";
    return 0;
  }
  if (name == "strong-decompose-fin") {
    OrdTerm bound = parse_ord(require_param(params, "bound"));
    StrongSplitFin split = strong_decompose_fin(GapSeq(parse_ord_list(literal), bound));
    std::cout << "(" << print_ord_list(split.low.members) << ";"
              << print_ord_list(split.rest.members) << ")\n";
    return 0;
  }
  if (name == "strong-decompose-inf") {
    OrdTerm bound = parse_ord(require_param(params, "bound"));
    StrongSplitInf split = strong_decompose_inf(GapSeq(parse_ord_list(literal), bound));
    std::cout << "(" << print_ord_list(split.high.members) << ";"
              << print_split_tags(split.tail) << ")\n";
    return 0;
  }
  std::cerr << "unknown embedding '" << name << "'\n";
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ordinal notations below Gamma_0 and gap-condition orders"};
  app.require_subcommand(1);

  std::string arg_a, arg_b, arg_order = "w", arg_fn, arg_name, arg_literal, arg_alpha;
  std::vector<std::string> arg_params;
  bool left_strict = false, verbose = false;

  auto* cmp_ord_cmd = app.add_subcommand("cmp-ord", "compare two ordinals");
  cmp_ord_cmd->add_option("a", arg_a)->required();
  cmp_ord_cmd->add_option("b", arg_b)->required();

  auto* normalize_cmd = app.add_subcommand("normalize", "print the canonical form");
  normalize_cmd->add_option("term", arg_a)->required();

  auto* arith_cmd = app.add_subcommand("arith", "ordinal arithmetic");
  arith_cmd->add_option("op", arg_fn, "add|mul|pow|nsum|nprod|lsub")->required();
  arith_cmd->add_option("a", arg_a)->required();
  arith_cmd->add_option("b", arg_b)->required();

  auto* motype_cmd = app.add_subcommand("motype", "maximal order types");
  motype_cmd->add_option("fn", arg_fn, "F|G|H")->required();
  motype_cmd->add_option("bound", arg_a)->required();

  auto* cmp_seq_cmd = app.add_subcommand("cmp-seq", "gap-condition sequence comparison");
  cmp_seq_cmd->add_option("--order", arg_order, "w|g|s|r");
  cmp_seq_cmd->add_flag("--verbose", verbose);
  cmp_seq_cmd->add_option("s", arg_a)->required();
  cmp_seq_cmd->add_option("t", arg_b)->required();

  auto* cmp_tree_cmd = app.add_subcommand("cmp-tree", "tree embeddability");
  cmp_tree_cmd->add_flag("--left-strict", left_strict);
  cmp_tree_cmd->add_flag("--verbose", verbose);
  cmp_tree_cmd->add_option("s", arg_a)->required();
  cmp_tree_cmd->add_option("t", arg_b)->required();

  auto* embed_cmd = app.add_subcommand("embed", "apply a quasi-embedding");
  embed_cmd->add_option("name", arg_name)->required();
  embed_cmd->add_option("--param", arg_params, "key=value construction parameters");
  embed_cmd->add_option("literal", arg_literal)->required();

  auto* reify_cmd = app.add_subcommand("reify", "reify a tree bad sequence");
  reify_cmd->add_option("--alpha", arg_alpha, "label bound")->required();
  reify_cmd->add_option("trees", arg_literal, "';'-separated tree literals")->required();

  auto* check_cmd = app.add_subcommand("check", "run a property suite");
  DomainSpec spec;
  std::string suite;
  check_cmd->add_option("suite", suite)->required();
  check_cmd->add_option("--seed", spec.seed);
  check_cmd->add_option("--alphabet", spec.alphabet);
  check_cmd->add_option("--len", spec.max_len);
  check_cmd->add_option("--nodes", spec.max_nodes);
  check_cmd->add_option("--size", spec.max_size);
  check_cmd->add_option("--count", spec.count);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (cmp_ord_cmd->parsed()) {
      switch (cmp_ord(parse_ord(arg_a), parse_ord(arg_b))) {
        case Ordering3::LT: std::cout << "<\n"; break;
        case Ordering3::EQ: std::cout << "=\n"; break;
        case Ordering3::GT: std::cout << ">\n"; break;
      }
      return 0;
    }
    if (normalize_cmd->parsed()) {
      std::cout << print_ord(parse_ord(arg_a)) << "\n";
      return 0;
    }
    if (arith_cmd->parsed()) {
      OrdTerm a = parse_ord(arg_a), b = parse_ord(arg_b);
      OrdTerm r;
      if (arg_fn == "add") r = add(a, b);
      else if (arg_fn == "mul") r = mul(a, b);
      else if (arg_fn == "pow") r = pow(a, b);
      else if (arg_fn == "nsum") r = hessenberg(a, b);
      else if (arg_fn == "nprod") r = nat_product(a, b);
      else if (arg_fn == "lsub") r = lsub(a, b);
      else {
        std::cerr << "unknown arith op '" << arg_fn << "'\n";
        return 2;
      }
      std::cout << print_ord(r) << "\n";
      return 0;
    }
    if (motype_cmd->parsed()) {
      OrdTerm a = parse_ord(arg_a);
      OrdTerm r;
      if (arg_fn == "F") r = motype_F(a);
      else if (arg_fn == "G") r = motype_G(a);
      else if (arg_fn == "H") r = motype_H(a);
      else {
        std::cerr << "unknown order type function '" << arg_fn << "'\n";
        return 2;
      }
      std::cout << print_ord(r) << "\n";
      return 0;
    }
    if (cmp_seq_cmd->parsed()) {
      std::vector<OrdTerm> ms = parse_ord_list(arg_a);
      std::vector<OrdTerm> mt = parse_ord_list(arg_b);
      OrdTerm bound;
      for (const OrdTerm& m : ms)
        if (!ord_lt(m, bound)) bound = add(m, one());
      for (const OrdTerm& m : mt)
        if (!ord_lt(m, bound)) bound = add(m, one());
      GapSeq s(ms, bound), t(mt, bound);
      bool holds;
      GapVariant variant;
      if (arg_order == "w") { holds = leq_w(s, t); variant = GapVariant::Weak; }
      else if (arg_order == "g") { holds = leq_g(s, t); variant = GapVariant::Gordeev; }
      else if (arg_order == "s") { holds = leq_s(s, t); variant = GapVariant::StrongRealizer; }
      else if (arg_order == "r") { holds = leq_r(s, t); variant = GapVariant::StrongRecursive; }
      else {
        std::cerr << "unknown order '" << arg_order << "'\n";
        return 2;
      }
      if (holds && verbose) print_realizer(s, t, variant);
      return holds ? 0 : 1;
    }
    if (cmp_tree_cmd->parsed()) {
      LabTree<Unit> s = parse_tree(arg_a);
      LabTree<Unit> t = parse_tree(arg_b);
      if (left_strict && (!is_left_strict(s) || !is_left_strict(t))) {
        std::cerr << "input tree violates the left-strict condition\n";
        return 2;
      }
      bool holds = leq_tree(s, t);
      if (holds && verbose) std::cout << "embeds\n";
      return holds ? 0 : 1;
    }
    if (embed_cmd->parsed())
      return run_embed(arg_name, parse_params(arg_params), arg_literal);
    if (reify_cmd->parsed()) {
      OrdTerm alpha = parse_ord(arg_alpha);
      TreeBadSeqReifier reifier(alpha);
      std::istringstream in(arg_literal);
      std::string tok;
      OrdTerm prev;
      bool first = true;
      while (std::getline(in, tok, ';')) {
        if (tok.find_first_not_of(" \t") == std::string::npos) continue;
        OrdTerm value = reifier.push(parse_tree(tok));
        if (!first && !ord_lt(value, prev)) {
          std::cerr << "reification failed to descend\n";
          return 1;
        }
        std::cout << print_ord(value) << "\n";
        prev = value;
        first = false;
      }
      if (first) {
        std::cerr << "no trees given\n";
        return 2;
      }
      return 0;
    }
    if (check_cmd->parsed()) {
      CheckReport report;
      try {
        report = run_suite(suite, spec);
      } catch (const UnknownSuite& e) {
        std::cerr << e.what() << "\nknown suites:";
        for (const auto& n : suite_names()) std::cerr << " " << n;
        std::cerr << "\n";
        return 2;
      }
      for (const auto& f : report.failures)
        std::cout << "FAIL " << report.suite << " " << f << "\n";
      std::cerr << "suite " << report.suite << ": " << report.cases << " cases, "
                << report.failures_total << " failures, " << report.wall_seconds << "s\n";
      return report.passed() ? 0 : 1;
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error at offset " << e.offset << ": " << e.what() << "\n";
    return 2;
  } catch (const NotBad& e) {
    std::cerr << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
  return 2;
}
