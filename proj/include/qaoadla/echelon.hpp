#pragma once
//
// Reduced, pivot-ordered spanning sets of sparse Pauli vectors (a sparse RREF
// over the string total order).  Every row has a unique pivot string, the
// smallest string with nonzero coefficient; pivots are normalized to 1, and
// every pivot coefficient is eliminated from all other rows, so membership and
// dimension queries are exact in exact mode.
//
// Float-mode zero test: a remainder counts as zero when its max-abs
// coefficient is at most 1e-9 relative to the inserted vector's max-abs.

#include <map>
#include <optional>

#include "qaoadla/pauli.hpp"

namespace qaoadla {

template <class C>
class EchelonBasis {
 public:
  EchelonBasis() = default;
  explicit EchelonBasis(int n) : n_(n) {}

  int qubits() const { return n_; }
  std::size_t dim() const { return rows_.size(); }
  const std::vector<PauliVec<C>>& rows() const { return rows_; }

  /// Reduce v against the basis (eliminating every pivot-matching term) and
  /// return the remainder; does not modify the basis.
  PauliVec<C> reduce(PauliVec<C> v) const {
    double scale = v.max_abs();
    // Single left-to-right pass: rows are mutually reduced, so subtracting a
    // row cancels the pivot term at the cursor exactly and introduces only
    // non-pivot strings beyond it; positions before the cursor stay clean.
    std::size_t i = 0;
    while (i < v.terms.size()) {
      auto it = pivot_of_.find(v.terms[i].first);
      if (it == pivot_of_.end()) {
        ++i;
        continue;
      }
      C f = v.terms[i].second;  // pivot coefficients are 1
      v.add_scaled(rows_[it->second], -f);
    }
    if constexpr (!CoeffTraits<C>::exact) {
      std::erase_if(v.terms,
                    [&](const auto& t) { return CoeffTraits<C>::is_zero(t.second, scale); });
    }
    return v;
  }

  /// True iff v lies in the current span.
  bool contains(const PauliVec<C>& v) const { return reduce(v).empty(); }

  /// Reduce v; if a nonzero remainder survives, normalize (pivot -> 1),
  /// insert, eliminate the new pivot from existing rows, and return true.
  bool insert_reduce(const PauliVec<C>& v) {
    if (n_ == 0) n_ = v.n;
    if (v.n != n_) throw std::invalid_argument("EchelonBasis: qubit-count mismatch");
    PauliVec<C> r = reduce(v);
    if (r.empty()) return false;
    C inv = C(1) / r.terms.front().second;
    r.scale(inv);
    const PauliString piv = r.pivot();
    // Back-substitute the new pivot out of existing rows.
    for (std::size_t j = 0; j < rows_.size(); ++j) {
      const C* c = rows_[j].coeff_of(piv);
      if (c) {
        C f = *c;
        rows_[j].add_scaled(r, -f);
      }
    }
    pivot_of_[piv] = rows_.size();
    rows_.push_back(std::move(r));
    return true;
  }

  /// Mutual-containment span equality.
  bool same_span(const EchelonBasis& other) const {
    if (dim() != other.dim()) return false;
    for (const auto& r : rows_)
      if (!other.contains(r)) return false;
    for (const auto& r : other.rows_)
      if (!contains(r)) return false;
    return true;
  }

  /// True iff every row of this basis lies in the span of `larger`.
  bool contained_in(const EchelonBasis& larger) const {
    for (const auto& r : rows_)
      if (!larger.contains(r)) return false;
    return true;
  }

 private:
  int n_ = 0;
  std::vector<PauliVec<C>> rows_;
  std::map<PauliString, std::size_t> pivot_of_;
};

using RatBasis = EchelonBasis<Rat>;
using FloatBasis = EchelonBasis<double>;
using CRatBasis = EchelonBasis<CRat>;

}  // namespace qaoadla
