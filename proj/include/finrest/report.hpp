#pragma once

// Axiom reports and the scan machinery shared by every structure checker.
//
// A checker is a list of named axioms. Each axiom quantifies over a box of
// element indices (its `dims`) and owns a predicate that decides whether a
// given tuple violates it. Scanning in lexicographic order yields the
// lexicographically minimal witness per violated axiom; re-running the
// predicate on a recorded witness re-verifies it against the structure.

#include <chrono>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace finrest {

enum class Errc {
  structural,        // malformed tables, bad indices, ragged rows
  usage,             // unknown generator, bad CLI arguments
  size_cap,          // structure exceeds the desk-scale cap
  search_cap,        // enumeration budget exhausted
  not_compatible,    // join requested for a non right-compatible pair
  no_join,           // no least upper bound exists
  not_boolean,       // Boolean-only operation on a non-Boolean structure
  not_factorizable,  // factorizable-only operation
  no_witness,        // interpolation witness does not exist
  not_etale,         // extension requested over a non-etale monoid
  precondition,      // other violated precondition
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail_structural(const std::string& what) {
  throw Error(Errc::structural, what);
}

// Desk-scale guard: tables are quadratic or cubic in this.
inline constexpr int kMaxElements = 512;

struct AxiomEntry {
  std::string axiom;
  bool pass = true;
  std::vector<int> witness;  // lexicographically minimal violating tuple
  std::string note;          // human-readable detail for failures
};

struct AxiomReport {
  std::string structure;
  std::vector<AxiomEntry> entries;
  double seconds = 0.0;

  bool ok() const {
    for (const auto& e : entries)
      if (!e.pass) return false;
    return true;
  }

  const AxiomEntry* find(const std::string& axiom) const {
    for (const auto& e : entries)
      if (e.axiom == axiom) return &e;
    return nullptr;
  }

  std::vector<std::string> failed() const {
    std::vector<std::string> out;
    for (const auto& e : entries)
      if (!e.pass) out.push_back(e.axiom);
    return out;
  }
};

// One named axiom: `violated(tuple)` over the box given by `dims`.
// `describe` renders a failure note from the witness (optional).
struct NamedAxiom {
  std::string name;
  std::vector<int> dims;
  std::function<bool(const std::vector<int>&)> violated;
  std::function<std::string(const std::vector<int>&)> describe;
};

inline NamedAxiom make_axiom(std::string name, std::vector<int> dims,
                             std::function<bool(const std::vector<int>&)> violated,
                             std::function<std::string(const std::vector<int>&)> describe = nullptr) {
  return NamedAxiom{std::move(name), std::move(dims), std::move(violated), std::move(describe)};
}

// Lexicographic scan; stops at the first (minimal) witness for the axiom.
inline AxiomEntry scan_axiom(const NamedAxiom& ax) {
  AxiomEntry entry;
  entry.axiom = ax.name;
  std::vector<int> tuple(ax.dims.size(), 0);
  for (int d : ax.dims) {
    if (d <= 0) return entry;  // empty quantifier box: vacuously true
  }
  while (true) {
    if (ax.violated(tuple)) {
      entry.pass = false;
      entry.witness = tuple;
      if (ax.describe) entry.note = ax.describe(tuple);
      return entry;
    }
    int i = static_cast<int>(tuple.size()) - 1;
    while (i >= 0 && tuple[i] + 1 == ax.dims[i]) {
      tuple[i] = 0;
      --i;
    }
    if (i < 0) return entry;
    ++tuple[i];
  }
}

inline AxiomReport run_axioms(const std::string& structure, const std::vector<NamedAxiom>& axioms) {
  auto t0 = std::chrono::steady_clock::now();
  AxiomReport report;
  report.structure = structure;
  report.entries.reserve(axioms.size());
  for (const auto& ax : axioms) report.entries.push_back(scan_axiom(ax));
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return report;
}

// Re-evaluates one recorded witness. Unknown axiom names are usage errors.
inline bool reverify(const std::vector<NamedAxiom>& axioms, const std::string& name,
                     const std::vector<int>& witness) {
  for (const auto& ax : axioms) {
    if (ax.name != name) continue;
    if (witness.size() != ax.dims.size())
      throw Error(Errc::usage, "witness arity mismatch for axiom " + name);
    for (size_t i = 0; i < witness.size(); ++i)
      if (witness[i] < 0 || witness[i] >= ax.dims[i])
        throw Error(Errc::usage, "witness index out of range for axiom " + name);
    return ax.violated(witness);
  }
  throw Error(Errc::usage, "unknown axiom: " + name);
}

// Budget for exhaustive searches; counts candidate evaluations.
struct SearchLimit {
  std::uint64_t cap = 10'000'000;
  mutable std::uint64_t used = 0;

  void charge(std::uint64_t n = 1) const {
    used += n;
    if (used > cap) throw Error(Errc::search_cap, "enumeration budget exhausted");
  }
};

}  // namespace finrest
