#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace equimorse {

// Error thrown on malformed inputs (files, tables, preconditions).
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Error thrown when a configured enumeration budget is exhausted.
struct BudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Error thrown when a structural verification that must hold fails.
// Carries a witness in the message.
struct CheckError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Budgets {
  std::size_t group_order = 10000;     // closure bound for generated groups
  std::size_t nerve_simplices = 1000000;
  std::size_t zigzags = 100000;        // raw zigzags per flow category
  std::size_t zigzag_classes = 10000;
  std::size_t entrance_paths = 1000000;
  std::size_t iso_nodes = 2000000;     // backtracking node budget
};

// A single violated axiom plus a human-readable witness.
struct Violation {
  std::string rule;
  std::string witness;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  void add(std::string rule, std::string witness) {
    violations.push_back({std::move(rule), std::move(witness)});
  }
  std::string summary() const {
    if (ok()) return "ok";
    std::string s;
    for (const auto& v : violations) {
      s += v.rule;
      s += ": ";
      s += v.witness;
      s += '\n';
    }
    return s;
  }
};

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Deterministic ranking used wherever "least under a seed-scrambled order"
// is required.  Seed 0 is the plain canonical order.
inline std::uint64_t seeded_rank(std::uint64_t seed, std::uint64_t i) {
  if (seed == 0) return i;
  return splitmix64(seed ^ splitmix64(i + 1));
}

// Small deterministic PRNG for test-style generators.
class SplitMix {
 public:
  explicit SplitMix(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next() {
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  // uniform in [0, n)
  std::uint64_t below(std::uint64_t n) { return n ? next() % n : 0; }

 private:
  std::uint64_t state_;
};

}  // namespace equimorse
