#pragma once

#include <optional>
#include <string>
#include <vector>

#include "chiral/common.hpp"

namespace chiral {

// Finite semigroup on elements 0..n-1 given by its Cayley table:
// table[i][j] = i*j. Inverse semigroups carry `star` with the unique
// generalized inverse of each element; plain semigroups leave it empty
// (only the isotopy-level operations accept those). `decoration` is a
// distinguished generating subset.
struct Semigroup {
  std::vector<std::vector<Idx>> table;
  std::vector<Idx> star;                       // empty for plain semigroups
  std::vector<std::string> labels;             // size n once loaded
  std::optional<std::vector<Idx>> decoration;  // sorted, unique

  int size() const { return static_cast<int>(table.size()); }
  bool has_star() const { return !star.empty(); }
  Idx mul(Idx a, Idx b) const { return table[a][b]; }
  Idx inv(Idx a) const { return star[a]; }
  const std::string& label(Idx i) const { return labels[i]; }
};

// One broken invariant with the witness tuple that breaks it.
struct Violation {
  std::string rule;
  std::vector<Idx> witness;
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  std::string summary() const;
};

// Checks the Cayley table axioms. For inverse semigroups: associativity,
// star involution, s s* s = s regularity, uniqueness of inverses, and
// commuting idempotents. Plain semigroups are checked for associativity
// only. A decoration, when present, must generate the semigroup.
// Witnesses are lexicographically first, independent of Exec.
ValidationReport validate_semigroup(const Semigroup& s, Exec exec = Exec::parallel);

// Throws FormatError unless dimensions and index ranges are sane.
void check_shape(const Semigroup& s);

std::vector<Idx> idempotents(const Semigroup& s);
bool is_idempotent(const Semigroup& s, Idx e);

// leq[a][b] <=> a = e*b for some idempotent e (the natural partial order).
std::vector<std::vector<std::uint8_t>> natural_partial_order(const Semigroup& s);

// Same elements, star and decoration; table transposed.
Semigroup mirror_semigroup(const Semigroup& s);

// Associativity kernel twins (lexicographically first violating triple).
std::optional<std::vector<Idx>> first_assoc_violation_serial(
    const std::vector<std::vector<Idx>>& table);
std::optional<std::vector<Idx>> first_assoc_violation_omp(
    const std::vector<std::vector<Idx>>& table);

// Small builders used by tests, the benchmark and the docs.
Semigroup cyclic_group(int n);
Semigroup trivial_group();
Semigroup chain_semilattice(int n);       // 0 < 1 < ... < n-1, meet = min
Semigroup diamond_semilattice();          // two incomparable atoms over a bottom
Semigroup left_zero_semigroup(int n);     // x*y = x, plain, decorated with everything
Semigroup symmetric_inverse_monoid(int n);  // partial injections on n points

}  // namespace chiral
