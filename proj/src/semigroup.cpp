#include "chiral/semigroup.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace chiral {

namespace {
int g_thread_cap = 0;  // 0 = library default
}

int worker_threads() {
#ifdef _OPENMP
  int hw = omp_get_max_threads();
#else
  int hw = 1;
#endif
  if (g_thread_cap > 0 && g_thread_cap < hw) return g_thread_cap;
  return hw;
}

void set_worker_threads(int n) { g_thread_cap = n > 0 ? n : 0; }

std::string ValidationReport::summary() const {
  if (ok()) return "valid";
  std::ostringstream os;
  for (const auto& v : violations) {
    os << v.rule << " [";
    for (size_t i = 0; i < v.witness.size(); ++i) {
      if (i) os << ",";
      os << v.witness[i];
    }
    os << "] " << v.detail << "\n";
  }
  return os.str();
}

void check_shape(const Semigroup& s) {
  const int n = s.size();
  if (n == 0) throw FormatError("empty semigroup");
  for (const auto& row : s.table) {
    if (static_cast<int>(row.size()) != n)
      throw FormatError("Cayley table is not square");
    for (Idx v : row)
      if (v < 0 || v >= n) throw FormatError("table entry out of range");
  }
  if (s.has_star()) {
    if (static_cast<int>(s.star.size()) != n)
      throw FormatError("star has wrong length");
    for (Idx v : s.star)
      if (v < 0 || v >= n) throw FormatError("star entry out of range");
  }
  if (!s.labels.empty() && static_cast<int>(s.labels.size()) != n)
    throw FormatError("labels have wrong length");
  if (s.decoration) {
    for (Idx v : *s.decoration)
      if (v < 0 || v >= n) throw FormatError("decoration entry out of range");
  }
}

std::optional<std::vector<Idx>> first_assoc_violation_serial(
    const std::vector<std::vector<Idx>>& t) {
  const int n = static_cast<int>(t.size());
  for (Idx i = 0; i < n; ++i)
    for (Idx j = 0; j < n; ++j) {
      const Idx ij = t[i][j];
      for (Idx k = 0; k < n; ++k)
        if (t[ij][k] != t[i][t[j][k]]) return std::vector<Idx>{i, j, k};
    }
  return std::nullopt;
}

std::optional<std::vector<Idx>> first_assoc_violation_omp(
    const std::vector<std::vector<Idx>>& t) {
  const int n = static_cast<int>(t.size());
  const long long total = 1ll * n * n * n;
  long long best = total;  // flattened index of the first violation
#pragma omp parallel num_threads(worker_threads())
  {
    long long local = total;
#pragma omp for schedule(static)
    for (Idx i = 0; i < n; ++i) {
      if (1ll * i * n * n >= local) continue;
      for (Idx j = 0; j < n; ++j) {
        const Idx ij = t[i][j];
        for (Idx k = 0; k < n; ++k) {
          if (t[ij][k] != t[i][t[j][k]]) {
            long long f = (1ll * i * n + j) * n + k;
            if (f < local) local = f;
            break;  // smaller k impossible later in this (i,j) row
          }
        }
      }
    }
#pragma omp critical
    if (local < best) best = local;
  }
  if (best == total) return std::nullopt;
  return std::vector<Idx>{static_cast<Idx>(best / (1ll * n * n)),
                          static_cast<Idx>((best / n) % n),
                          static_cast<Idx>(best % n)};
}

std::vector<Idx> idempotents(const Semigroup& s) {
  std::vector<Idx> e;
  for (Idx i = 0; i < s.size(); ++i)
    if (s.mul(i, i) == i) e.push_back(i);
  return e;
}

bool is_idempotent(const Semigroup& s, Idx e) { return s.mul(e, e) == e; }

ValidationReport validate_semigroup(const Semigroup& s, Exec exec) {
  check_shape(s);
  ValidationReport rep;
  const int n = s.size();

  auto assoc = exec == Exec::parallel ? first_assoc_violation_omp(s.table)
                                      : first_assoc_violation_serial(s.table);
  if (assoc) {
    rep.violations.push_back({"associativity", *assoc,
                              "(i*j)*k != i*(j*k)"});
  }

  if (s.has_star()) {
    for (Idx i = 0; i < n; ++i) {
      if (s.inv(s.inv(i)) != i) {
        rep.violations.push_back({"star-involution", {i}, "star[star[i]] != i"});
        break;
      }
    }
    for (Idx i = 0; i < n; ++i) {
      if (s.mul(s.mul(i, s.inv(i)), i) != i ||
          s.mul(s.mul(s.inv(i), i), s.inv(i)) != s.inv(i)) {
        rep.violations.push_back({"star-regularity", {i},
                                  "i*star[i]*i != i or star[i]*i*star[i] != star[i]"});
        break;
      }
    }
    // star[i] must be the only x with i x i = i and x i x = x
    bool done = false;
    for (Idx i = 0; i < n && !done; ++i)
      for (Idx x = 0; x < n && !done; ++x) {
        if (x == s.inv(i)) continue;
        if (s.mul(s.mul(i, x), i) == i && s.mul(s.mul(x, i), x) == x) {
          rep.violations.push_back({"inverse-uniqueness", {i, x},
                                    "second generalized inverse"});
          done = true;
        }
      }
    auto e = idempotents(s);
    done = false;
    for (size_t a = 0; a < e.size() && !done; ++a)
      for (size_t b = a + 1; b < e.size() && !done; ++b)
        if (s.mul(e[a], e[b]) != s.mul(e[b], e[a])) {
          rep.violations.push_back({"idempotents-commute", {e[a], e[b]},
                                    "e*f != f*e"});
          done = true;
        }
  }

  if (s.decoration) {
    // the decoration must generate everything under the table
    std::vector<std::uint8_t> seen(n, 0);
    std::vector<Idx> frontier;
    for (Idx v : *s.decoration)
      if (!seen[v]) {
        seen[v] = 1;
        frontier.push_back(v);
      }
    std::vector<Idx> reached = frontier;
    while (!frontier.empty()) {
      std::vector<Idx> next;
      for (Idx a : reached)
        for (Idx b : frontier) {
          for (Idx p : {s.mul(a, b), s.mul(b, a)})
            if (!seen[p]) {
              seen[p] = 1;
              next.push_back(p);
            }
        }
      for (Idx v : next) reached.push_back(v);
      frontier = std::move(next);
    }
    for (Idx i = 0; i < n; ++i)
      if (!seen[i]) {
        rep.violations.push_back({"decoration-generates", {i},
                                  "element not generated by the decoration"});
        break;
      }
  }
  return rep;
}

std::vector<std::vector<std::uint8_t>> natural_partial_order(const Semigroup& s) {
  if (!s.has_star()) throw DomainError("natural partial order needs an inverse semigroup");
  const int n = s.size();
  auto e = idempotents(s);
  std::vector<std::vector<std::uint8_t>> leq(n, std::vector<std::uint8_t>(n, 0));
  for (Idx a = 0; a < n; ++a)
    for (Idx b = 0; b < n; ++b)
      for (Idx f : e)
        if (s.mul(f, b) == a) {
          leq[a][b] = 1;
          break;
        }
  return leq;
}

Semigroup mirror_semigroup(const Semigroup& s) {
  Semigroup m = s;
  const int n = s.size();
  for (Idx i = 0; i < n; ++i)
    for (Idx j = 0; j < n; ++j) m.table[i][j] = s.table[j][i];
  return m;
}

// ---------------------------------------------------------------------------
// builders

Semigroup cyclic_group(int n) {
  Semigroup s;
  s.table.assign(n, std::vector<Idx>(n));
  s.star.resize(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) s.table[i][j] = (i + j) % n;
    s.star[i] = (n - i) % n;
    s.labels.push_back(i == 0 ? "e" : "g" + std::to_string(i));
  }
  return s;
}

Semigroup trivial_group() { return cyclic_group(1); }

Semigroup chain_semilattice(int n) {
  Semigroup s;
  s.table.assign(n, std::vector<Idx>(n));
  s.star.resize(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) s.table[i][j] = std::min(i, j);
    s.star[i] = i;
    s.labels.push_back("e" + std::to_string(i));
  }
  return s;
}

Semigroup diamond_semilattice() {
  // 0 = bottom, 1 and 2 incomparable atoms; meet of the atoms is the bottom
  Semigroup s;
  s.table = {{0, 0, 0}, {0, 1, 0}, {0, 0, 2}};
  s.star = {0, 1, 2};
  s.labels = {"bot", "a", "b"};
  return s;
}

Semigroup left_zero_semigroup(int n) {
  Semigroup s;
  s.table.assign(n, std::vector<Idx>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) s.table[i][j] = i;
    s.labels.push_back("l" + std::to_string(i));
  }
  std::vector<Idx> all(n);
  for (int i = 0; i < n; ++i) all[i] = i;
  s.decoration = all;
  return s;
}

Semigroup symmetric_inverse_monoid(int n) {
  // elements are partial injections on {0..n-1}, encoded as target vectors
  // with -1 for "undefined"; ordered by (rank, encoding) for stable indexing
  std::vector<std::vector<int>> maps;
  std::vector<int> cur(n, -1);
  // enumerate all partial injective maps
  std::vector<std::vector<int>> stack{cur};
  // straightforward recursive enumeration
  struct Rec {
    int n;
    std::vector<std::vector<int>>& out;
    std::vector<int> m;
    std::vector<bool> used;
    Rec(int n_, std::vector<std::vector<int>>& o) : n(n_), out(o), m(n_, -1), used(n_, false) {}
    void go(int pos) {
      if (pos == n) {
        out.push_back(m);
        return;
      }
      m[pos] = -1;
      go(pos + 1);
      for (int t = 0; t < n; ++t)
        if (!used[t]) {
          used[t] = true;
          m[pos] = t;
          go(pos + 1);
          m[pos] = -1;
          used[t] = false;
        }
    }
  } rec(n, maps);
  rec.go(0);
  auto rank = [](const std::vector<int>& m) {
    int r = 0;
    for (int v : m) r += v >= 0;
    return r;
  };
  std::sort(maps.begin(), maps.end(), [&](const auto& a, const auto& b) {
    if (rank(a) != rank(b)) return rank(a) < rank(b);
    return a < b;
  });
  std::map<std::vector<int>, Idx> index;
  for (size_t i = 0; i < maps.size(); ++i) index[maps[i]] = static_cast<Idx>(i);

  auto compose = [&](const std::vector<int>& f, const std::vector<int>& g) {
    std::vector<int> r(n, -1);  // (f o g)(x) = f(g(x))
    for (int x = 0; x < n; ++x)
      if (g[x] >= 0 && f[g[x]] >= 0) r[x] = f[g[x]];
    return r;
  };
  auto invert = [&](const std::vector<int>& f) {
    std::vector<int> r(n, -1);
    for (int x = 0; x < n; ++x)
      if (f[x] >= 0) r[f[x]] = x;
    return r;
  };

  const int m = static_cast<int>(maps.size());
  Semigroup s;
  s.table.assign(m, std::vector<Idx>(m));
  s.star.resize(m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) s.table[i][j] = index.at(compose(maps[i], maps[j]));
    s.star[i] = index.at(invert(maps[i]));
    std::string lab = "{";
    bool first = true;
    for (int x = 0; x < n; ++x)
      if (maps[i][x] >= 0) {
        if (!first) lab += ",";
        lab += std::to_string(x) + ">" + std::to_string(maps[i][x]);
        first = false;
      }
    lab += "}";
    s.labels.push_back(lab);
  }
  return s;
}

}  // namespace chiral
