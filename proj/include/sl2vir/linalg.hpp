#ifndef SL2VIR_LINALG_HPP
#define SL2VIR_LINALG_HPP

#include <map>
#include <utility>
#include <vector>

#include "sl2vir/scalar.hpp"

namespace sl2vir {

template <class Key>
using SparseVec = std::map<Key, Scalar>;

/// y += a * x
template <class Key>
void axpy(SparseVec<Key>& y, const Scalar& a, const SparseVec<Key>& x) {
  if (a.is_zero()) return;
  for (const auto& [k, c] : x) {
    auto [it, inserted] = y.try_emplace(k, a * c);
    if (!inserted) {
      it->second += a * c;
      if (it->second.is_zero()) y.erase(it);
    }
  }
}

/// Incrementally built echelon basis of a subspace of a sparse vector space.
///
/// Each stored row has a distinct pivot, namely its largest key, with
/// coefficient 1. Reducing from the largest key downward gives a canonical
/// representative modulo the span: the result has no pivot keys.
template <class Key>
class EchelonBasis {
 public:
  /// Reduces v modulo the span in place.
  void reduce(SparseVec<Key>& v) const {
    auto it = v.end();
    while (it != v.begin()) {
      --it;
      auto row = rows_.find(it->first);
      if (row == rows_.end()) continue;
      Key pivot = it->first;
      Scalar c = it->second;
      axpy(v, -c, row->second);
      it = v.lower_bound(pivot);
    }
  }

  /// Adds v to the span; returns false (and leaves the basis unchanged) when v is already in it.
  bool insert(SparseVec<Key> v) {
    reduce(v);
    if (v.empty()) return false;
    Key pivot = v.rbegin()->first;
    Scalar inv = v.rbegin()->second.inverse();
    for (auto& [k, c] : v) c *= inv;
    rows_.emplace(std::move(pivot), std::move(v));
    return true;
  }

  bool contains(SparseVec<Key> v) const {
    reduce(v);
    return v.empty();
  }

  bool is_pivot(const Key& k) const { return rows_.count(k) != 0; }
  int rank() const { return static_cast<int>(rows_.size()); }

 private:
  std::map<Key, SparseVec<Key>> rows_;
};

/// Rank of a family of sparse vectors.
template <class Key>
int rank_of(const std::vector<SparseVec<Key>>& vecs) {
  EchelonBasis<Key> basis;
  for (const auto& v : vecs) basis.insert(v);
  return basis.rank();
}

}  // namespace sl2vir

#endif
