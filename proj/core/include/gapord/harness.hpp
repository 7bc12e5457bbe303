#ifndef GAPORD_HARNESS_HPP
#define GAPORD_HARNESS_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "gapord/embed.hpp"
#include "gapord/gap_seq.hpp"
#include "gapord/gap_tree.hpp"
#include "gapord/ordinal.hpp"

namespace gapord {

// Carrier caps and the seed that make every suite deterministic.
struct DomainSpec {
  std::uint64_t alphabet = 3;   // bound for sequence members and tree labels
  std::uint64_t max_len = 4;    // sequence length cap
  std::uint64_t max_nodes = 7;  // tree size cap
  std::uint64_t max_size = 5;   // ordinal term size cap
  std::uint64_t count = 0;      // sampled cases; 0 picks the suite default
  std::uint64_t seed = 0x5eedULL;
};

struct CheckReport {
  std::string suite;
  std::uint64_t cases = 0;
  std::vector<std::string> failures;  // minimized counterexample literals
  std::uint64_t failures_total = 0;   // failures seen, including unrecorded ones
  double wall_seconds = 0.0;

  bool passed() const { return failures_total == 0; }
  // Deterministic serialization; wall time deliberately left out.
  std::string to_string() const;
};

// SplitMix64: tiny, fully portable generator so that reports are reproducible
// across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }
  bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }

 private:
  std::uint64_t state_;
};

// --- enumeration and sampling ---------------------------------------------------

// All sequences over {0..alphabet-1} with length <= max_len, shortest first,
// lexicographic within a length.
std::vector<GapSeq> enum_seqs(std::uint64_t alphabet, std::uint64_t max_len);

// All valid (optionally left-strict) trees with inner labels < alphabet and at
// most max_nodes nodes, smallest first; deterministic order.
std::vector<LabTree<Unit>> enum_trees(std::uint64_t alphabet, std::uint64_t max_nodes,
                                      bool left_strict);

// All normal-form ordinal terms whose syntactic size (principal constructors,
// counted with multiplicity) is at most max_size.
std::vector<OrdTerm> enum_ords(std::uint64_t max_size);

OrdTerm random_ord(Rng& rng, std::uint64_t max_size);
LabTree<Unit> random_tree(Rng& rng, std::uint64_t alphabet, std::uint64_t max_nodes);
GapSeq random_seq(Rng& rng, std::uint64_t alphabet, std::uint64_t max_len);

// Rejection-samples elements, appending those that no earlier element embeds
// into; stops at max_len or after `stall` consecutive rejections.
template <class T, class Sampler, class Leq>
std::vector<T> grow_bad_sequence(Sampler&& sample, Leq&& le, std::size_t max_len,
                                 int stall = 200) {
  std::vector<T> out;
  int rejected = 0;
  while (out.size() < max_len && rejected < stall) {
    T cand = sample();
    bool ok = true;
    for (const T& prev : out)
      if (le(prev, cand)) {
        ok = false;
        break;
      }
    if (ok) {
      out.push_back(std::move(cand));
      rejected = 0;
    } else {
      ++rejected;
    }
  }
  return out;
}

// --- reflection checking -----------------------------------------------------------

// Runs the order-reflection check over the given pairs and records every
// violation (as a literal built by `print`).
template <class X, class Y, class Print>
CheckReport check_reflection(const EmbedFn<X, Y>& f,
                             const std::vector<std::pair<X, X>>& pairs, Print&& print) {
  CheckReport report;
  report.suite = f.name;
  for (const auto& [x, y] : pairs) {
    ++report.cases;
    Y fx = f.apply(x);
    Y fy = f.apply(y);
    if (f.target_leq(fx, fy) && !f.source_leq(x, y)) {
      ++report.failures_total;
      if (report.failures.size() < 50)
        report.failures.push_back(print(x) + " vs " + print(y));
    }
  }
  return report;
}

// --- suite registry ------------------------------------------------------------------

std::vector<std::string> suite_names();
CheckReport run_suite(const std::string& name, const DomainSpec& spec);

}  // namespace gapord

#endif
