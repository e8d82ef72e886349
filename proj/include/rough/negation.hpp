#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "rough/error.hpp"
#include "rough/granular.hpp"

namespace rough {

/// A finite poset with a least element. Meets and joins are partial: defined
/// where the infimum or supremum exists.
class BoundedPoset {
public:
  BoundedPoset() = default;

  /// `le[i][j]` is i ≤ j. Throws Model unless it is a partial order with a
  /// least element.
  explicit BoundedPoset(std::vector<std::vector<bool>> le) : le_(std::move(le)) {
    const std::size_t n = le_.size();
    if (n == 0) throw Error(ErrorKind::Model, "poset must be nonempty");
    for (const auto& row : le_) {
      if (row.size() != n) throw Error(ErrorKind::Model, "order matrix is not square");
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (!le_[i][i]) throw Error(ErrorKind::Model, "order is not reflexive");
      for (std::size_t j = 0; j < n; ++j) {
        if (i != j && le_[i][j] && le_[j][i]) throw Error(ErrorKind::Model, "order is not antisymmetric");
        for (std::size_t k = 0; k < n; ++k) {
          if (le_[i][j] && le_[j][k] && !le_[i][k]) throw Error(ErrorKind::Model, "order is not transitive");
        }
      }
    }
    bottom_ = find_extreme(true).value_or(n);
    if (bottom_ == n) throw Error(ErrorKind::Model, "poset has no least element");
    top_ = find_extreme(false);
    meet_.assign(n, std::vector<std::optional<std::size_t>>(n));
    join_ = meet_;
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        meet_[a][b] = bound(a, b, true);
        join_[a][b] = bound(a, b, false);
      }
    }
  }

  /// Reflexive-transitive closure of the given (i ≤ j) pairs.
  static BoundedPoset from_pairs(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
    std::vector<std::vector<bool>> le(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) le[i][i] = true;
    for (auto [a, b] : pairs) {
      if (a >= n || b >= n) throw Error(ErrorKind::Model, "order pair outside the carrier");
      le[a][b] = true;
    }
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) le[i][j] = le[i][j] || (le[i][k] && le[k][j]);
      }
    }
    return BoundedPoset(std::move(le));
  }

  static BoundedPoset chain(std::size_t n) {
    std::vector<std::vector<bool>> le(n, std::vector<bool>(n));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) le[i][j] = i <= j;
    }
    return BoundedPoset(std::move(le));
  }

  /// The Boolean lattice of subsets of k atoms; element i is the bit mask i.
  static BoundedPoset boolean(std::size_t k) {
    const std::size_t n = std::size_t{1} << k;
    std::vector<std::vector<bool>> le(n, std::vector<bool>(n));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) le[i][j] = (i & ~j) == 0;
    }
    return BoundedPoset(std::move(le));
  }

  std::size_t size() const { return le_.size(); }
  bool leq(std::size_t a, std::size_t b) const { return le_[a][b]; }
  std::size_t bottom() const { return bottom_; }
  std::optional<std::size_t> top() const { return top_; }
  std::optional<std::size_t> meet(std::size_t a, std::size_t b) const { return meet_[a][b]; }
  std::optional<std::size_t> join(std::size_t a, std::size_t b) const { return join_[a][b]; }
  const std::vector<std::vector<bool>>& matrix() const { return le_; }

  bool is_lattice() const {
    for (std::size_t a = 0; a < size(); ++a) {
      for (std::size_t b = 0; b < size(); ++b) {
        if (!meet_[a][b] || !join_[a][b]) return false;
      }
    }
    return true;
  }

  /// Meaningful only for lattices; false otherwise.
  bool is_distributive() const {
    if (!is_lattice()) return false;
    for (std::size_t a = 0; a < size(); ++a) {
      for (std::size_t b = 0; b < size(); ++b) {
        for (std::size_t c = 0; c < size(); ++c) {
          if (*meet_[a][*join_[b][c]] != *join_[*meet_[a][b]][*meet_[a][c]]) return false;
        }
      }
    }
    return true;
  }

private:
  std::optional<std::size_t> find_extreme(bool least) const {
    for (std::size_t i = 0; i < size(); ++i) {
      bool ok = true;
      for (std::size_t j = 0; j < size() && ok; ++j) ok = least ? le_[i][j] : le_[j][i];
      if (ok) return i;
    }
    return std::nullopt;
  }

  /// Greatest lower bound (meet = true) or least upper bound.
  std::optional<std::size_t> bound(std::size_t a, std::size_t b, bool meet) const {
    auto below = [&](std::size_t x, std::size_t y) { return meet ? le_[x][y] : le_[y][x]; };
    std::vector<std::size_t> cands;
    for (std::size_t c = 0; c < size(); ++c) {
      if (below(c, a) && below(c, b)) cands.push_back(c);
    }
    for (std::size_t d : cands) {
      if (std::all_of(cands.begin(), cands.end(), [&](std::size_t e) { return below(e, d); })) return d;
    }
    return std::nullopt;
  }

  std::vector<std::vector<bool>> le_;
  std::size_t bottom_ = 0;
  std::optional<std::size_t> top_;
  std::vector<std::vector<std::optional<std::size_t>>> meet_;
  std::vector<std::vector<std::optional<std::size_t>>> join_;
};

/// A partial unary operation; nullopt marks points outside the domain.
using UnaryOp = std::vector<std::optional<std::size_t>>;

inline UnaryOp total_op(const std::vector<std::size_t>& values) {
  return UnaryOp(values.begin(), values.end());
}

/// Pointwise composition (outer ∘ inner), undefined where either step is.
inline UnaryOp compose(const UnaryOp& outer, const UnaryOp& inner) {
  UnaryOp out(inner.size());
  for (std::size_t x = 0; x < inner.size(); ++x) {
    if (inner[x]) out[x] = outer.at(*inner[x]);
  }
  return out;
}

struct NegationProfile {
  AxiomResult<std::size_t> n1{"N1", true, {}}, n2{"N2", true, {}}, n3{"N3", true, {}}, n4{"N4", true, {}}, n5{"N5", true, {}}, n6{"N6", true, {}}, n9{"N9", true, {}};
  /// (m, n): the least n for which some m < n has f^m = f^n.
  std::optional<std::pair<std::size_t, std::size_t>> index;
  std::optional<std::size_t> period;
  std::optional<std::size_t> pace;

  bool regular() const { return n1.holds && n2.holds && n3.holds; }
};

/// Decides N1-N6 and N9 exhaustively. Conditions are read with weak equality:
/// an instance where some term is undefined holds vacuously.
inline NegationProfile check_negation(const BoundedPoset& p, const UnaryOp& f, std::size_t iteration_cap = 100000) {
  const std::size_t n = p.size();
  if (f.size() != n) throw Error(ErrorKind::Model, "operation size does not match the poset");
  for (const auto& v : f) {
    if (v && *v >= n) throw Error(ErrorKind::Model, "operation value outside the carrier");
  }
  detail::AxiomScan<std::size_t> n1("N1"), n2("N2"), n3("N3"), n4("N4"), n5("N5"), n6("N6"), n9("N9");
  const UnaryOp f2 = compose(f, f);
  for (std::size_t x = 0; x < n; ++x) {
    if (f[x]) {
      const auto m = p.meet(x, *f[x]);
      if (m) n1.check(*m == p.bottom(), x);
    }
    if (f2[x]) n3.check(p.leq(x, *f2[x]), x);
    for (std::size_t y = 0; y < n; ++y) {
      if (p.leq(x, y) && f[x] && f[y]) n2.check(p.leq(*f[y], *f[x]), x, y);
      if (f[x] && f[y] && p.leq(x, *f[y])) n4.check(p.leq(y, *f[x]), x, y);
      if (const auto j = p.join(x, y); j && f[*j] && f[x] && f[y]) {
        const auto m = p.meet(*f[x], *f[y]);
        if (m) n6.check(*f[*j] == *m, x, y);
      }
      if (const auto m = p.meet(x, y); m && f[x]) n9.check((*m == p.bottom()) == p.leq(y, *f[x]), x, y);
    }
  }

  NegationProfile prof;
  std::vector<UnaryOp> powers;
  UnaryOp id(n);
  for (std::size_t x = 0; x < n; ++x) id[x] = x;
  powers.push_back(id);
  for (std::size_t k = 1; k <= iteration_cap && !prof.index; ++k) {
    powers.push_back(compose(f, powers.back()));
    for (std::size_t m = 0; m < k; ++m) {
      if (powers[m] == powers[k]) {
        prof.index = std::pair{m, k};
        prof.period = k;
        prof.pace = k - m;
        break;
      }
    }
  }
  n5.check(prof.index.has_value());
  prof.n1 = n1.take();
  prof.n2 = n2.take();
  prof.n3 = n3.take();
  prof.n4 = n4.take();
  prof.n5 = n5.take();
  prof.n6 = n6.take();
  prof.n9 = n9.take();
  return prof;
}

/// Which interior law fails, if any: deflation, monotonicity, idempotence.
inline std::optional<std::string> interior_violation(const BoundedPoset& p, const UnaryOp& i) {
  const std::size_t n = p.size();
  if (i.size() != n) return "size";
  for (std::size_t x = 0; x < n; ++x) {
    if (!i[x]) return "totality";
  }
  for (std::size_t x = 0; x < n; ++x) {
    if (!p.leq(*i[x], x)) return "deflation";
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (p.leq(x, y) && !p.leq(*i[x], *i[y])) return "monotonicity";
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    if (*i[*i[x]] != *i[x]) return "idempotence";
  }
  return std::nullopt;
}

struct InteriorComposition {
  UnaryOp g;
  bool g4_equals_g2 = false;
};

/// g = i∘f for a regular f and an interior operator i, with g⁴ = g² checked
/// pointwise.
inline InteriorComposition interior_compose(const BoundedPoset& p, const UnaryOp& f, const UnaryOp& i) {
  const auto prof = check_negation(p, f);
  for (const auto* r : {&prof.n1, &prof.n2, &prof.n3}) {
    if (!r->holds) throw Error(ErrorKind::Precondition, "f is not regular: " + r->name + " fails");
  }
  if (auto v = interior_violation(p, i)) {
    throw Error(ErrorKind::Precondition, "i is not an interior operator: " + *v + " fails");
  }
  InteriorComposition out;
  out.g = compose(i, f);
  const UnaryOp g2 = compose(out.g, out.g);
  out.g4_equals_g2 = compose(g2, g2) == g2;
  return out;
}

/// Every interior operator on a finite poset, in lexicographic order.
inline std::vector<UnaryOp> interior_operators(const BoundedPoset& p) {
  const std::size_t n = p.size();
  std::vector<UnaryOp> out;
  UnaryOp cur(n);
  auto rec = [&](auto&& self, std::size_t x) -> void {
    if (x == n) {
      if (!interior_violation(p, cur)) out.push_back(cur);
      return;
    }
    for (std::size_t v = 0; v < n; ++v) {
      if (!p.leq(v, x)) continue;
      cur[x] = v;
      self(self, x + 1);
    }
  };
  rec(rec, 0);
  return out;
}

namespace detail {

inline std::vector<std::vector<bool>> permuted(const std::vector<std::vector<bool>>& le,
                                               const std::vector<std::size_t>& perm) {
  const std::size_t n = le.size();
  std::vector<std::vector<bool>> out(n, std::vector<bool>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out[perm[i]][perm[j]] = le[i][j];
  }
  return out;
}

}  // namespace detail

/// All distributive lattices with at most `max_size` elements, one per
/// isomorphism class, smallest first. Element 0 is the bottom and element
/// n-1 the top; the middle elements carry a natural labeling.
inline std::vector<BoundedPoset> enumerate_distributive_lattices(std::size_t max_size) {
  std::vector<BoundedPoset> out;
  for (std::size_t n = 1; n <= max_size; ++n) {
    if (n <= 2) {
      out.push_back(BoundedPoset::chain(n));
      continue;
    }
    const std::size_t m = n - 2;
    std::vector<std::pair<std::size_t, std::size_t>> slots;
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = i + 1; j < m; ++j) slots.emplace_back(i, j);
    }
    std::set<std::vector<std::vector<bool>>> seen;
    for (std::size_t bits = 0; bits < (std::size_t{1} << slots.size()); ++bits) {
      std::vector<std::vector<bool>> le(n, std::vector<bool>(n, false));
      for (std::size_t i = 0; i < n; ++i) {
        le[i][i] = true;
        le[0][i] = true;
        le[i][n - 1] = true;
      }
      for (std::size_t s = 0; s < slots.size(); ++s) {
        if ((bits >> s) & 1U) le[slots[s].first + 1][slots[s].second + 1] = true;
      }
      bool transitive = true;
      for (std::size_t i = 0; i < n && transitive; ++i) {
        for (std::size_t j = 0; j < n && transitive; ++j) {
          for (std::size_t k = 0; k < n && transitive; ++k) {
            if (le[i][j] && le[j][k] && !le[i][k]) transitive = false;
          }
        }
      }
      if (!transitive) continue;
      BoundedPoset p(le);
      if (!p.is_distributive()) continue;
      // Canonical form: lexicographically least relabeling of the middle.
      std::vector<std::size_t> perm(n);
      std::iota(perm.begin(), perm.end(), std::size_t{0});
      auto best = le;
      do {
        auto cand = detail::permuted(le, perm);
        if (cand < best) best = std::move(cand);
      } while (std::next_permutation(perm.begin() + 1, perm.end() - 1));
      if (seen.insert(best).second) out.push_back(std::move(p));
    }
  }
  return out;
}

inline constexpr std::size_t kMaxFalsifySize = 7;

enum class NegationClaim { NoIndexZeroN, N123BottomTop, N123NotN9Witness, N9ImpliesN123, InteriorG4G2 };

inline std::string to_string(NegationClaim c) {
  switch (c) {
    case NegationClaim::NoIndexZeroN: return "no-index-0-n";
    case NegationClaim::N123BottomTop: return "n123-bottom-top";
    case NegationClaim::N123NotN9Witness: return "n123-not-n9-witness";
    case NegationClaim::N9ImpliesN123: return "n9-implies-n123";
    case NegationClaim::InteriorG4G2: return "interior-g4-g2";
  }
  return "?";
}

inline NegationClaim parse_negation_claim(std::string_view s) {
  for (auto c : {NegationClaim::NoIndexZeroN, NegationClaim::N123BottomTop, NegationClaim::N123NotN9Witness,
                 NegationClaim::N9ImpliesN123, NegationClaim::InteriorG4G2}) {
    if (s == to_string(c)) return c;
  }
  throw Error(ErrorKind::Parse, "unknown claim '" + std::string(s) + "'");
}

struct ClaimWitness {
  BoundedPoset lattice;
  UnaryOp f;
  std::optional<UnaryOp> interior;
};

struct FalsifyResult {
  NegationClaim claim;
  /// For the existence claim: a witness was found. Otherwise: no counterexample.
  bool confirmed = false;
  std::optional<ClaimWitness> witness;
  std::size_t lattices = 0;
  std::size_t operations = 0;
};

/// Searches all distributive lattices up to `size_cap` elements and all total
/// unary operations on them. The witness is the first found in enumeration
/// order (lattices smallest first, operations in lexicographic order).
inline FalsifyResult falsify_theorem(NegationClaim claim, std::size_t size_cap) {
  if (size_cap > kMaxFalsifySize) {
    throw Error(ErrorKind::CapExceeded, "size cap " + std::to_string(size_cap) + " exceeds the bound of " +
                                            std::to_string(kMaxFalsifySize));
  }
  FalsifyResult res;
  res.claim = claim;
  const auto lattices = enumerate_distributive_lattices(size_cap);
  res.lattices = lattices.size();
  for (const auto& p : lattices) {
    const std::size_t n = p.size();
    const auto interiors = claim == NegationClaim::InteriorG4G2 ? interior_operators(p) : std::vector<UnaryOp>{};
    std::vector<std::size_t> vals(n, 0);
    while (true) {
      ++res.operations;
      const UnaryOp f = total_op(vals);
      const auto prof = check_negation(p, f);
      const std::size_t top = *p.top();
      bool hit = false;
      std::optional<UnaryOp> interior;
      switch (claim) {
        case NegationClaim::NoIndexZeroN:
          hit = prof.n1.holds && prof.n2.holds && prof.index && prof.index->first == 0 && prof.index->second > 2;
          break;
        case NegationClaim::N123BottomTop:
          hit = prof.regular() && !(*f[p.bottom()] == top && *f[top] == p.bottom());
          break;
        case NegationClaim::N123NotN9Witness:
          hit = prof.regular() && !prof.n9.holds;
          break;
        case NegationClaim::N9ImpliesN123:
          hit = prof.n9.holds && !prof.regular();
          break;
        case NegationClaim::InteriorG4G2:
          if (prof.regular()) {
            for (const auto& i : interiors) {
              const UnaryOp g = compose(i, f);
              const UnaryOp g2 = compose(g, g);
              if (compose(g2, g2) != g2) {
                hit = true;
                interior = i;
                break;
              }
            }
          }
          break;
      }
      if (hit) {
        res.witness = ClaimWitness{p, f, interior};
        res.confirmed = claim == NegationClaim::N123NotN9Witness;
        return res;
      }
      std::size_t k = n;
      while (k > 0) {
        if (++vals[k - 1] < n) break;
        vals[--k] = 0;
      }
      if (k == 0) break;
    }
  }
  res.confirmed = claim != NegationClaim::N123NotN9Witness;
  return res;
}

/// The three necessary properties of a dialectical predicate ℶ relative to an
/// aggregation ⊕ on a finite carrier.
template <class T, class Rel, class Agg>
AxiomReport<T> check_dialectical_predicate(const std::vector<T>& carrier, Rel&& beth, Agg&& aggregate) {
  detail::AxiomScan<T> comm("Commutativity"), anti("Anti-Reflexivity"), agg("Aggregation");
  for (const auto& a : carrier) {
    anti.check(!beth(a, a), a);
    for (const auto& b : carrier) {
      comm.check(beth(a, b) == beth(b, a), a, b);
      if (!beth(a, b) || agg.failed()) continue;
      for (const auto& c : carrier) agg.check(beth(aggregate(a, c), aggregate(b, c)), a, b, c);
    }
  }
  return {{comm.take(), anti.take(), agg.take()}};
}

}  // namespace rough
