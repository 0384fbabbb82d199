#include "dmlab/spectral.hpp"

#include <algorithm>

#include "dmlab/error.hpp"

namespace dmlab {

RationalVector RationalMatrix::multiply(const RationalVector& v) const {
  if (static_cast<int>(v.size()) != cols_) throw PreconditionError("matrix-vector size mismatch");
  RationalVector out(rows_);
  for (int r = 0; r < rows_; ++r) {
    Rational acc = 0;
    for (int c = 0; c < cols_; ++c)
      if (!(*this)(r, c).is_zero()) acc += (*this)(r, c) * v[c];
    out[r] = acc;
  }
  return out;
}

RationalMatrix adjacency_matrix(const Graph& g) {
  RationalMatrix a(g.order(), g.order());
  for (auto [u, v] : g.edges()) {
    a(u, v) = 1;
    a(v, u) = 1;
  }
  return a;
}

NullspaceBasis nullspace_basis(const RationalMatrix& input) {
  RationalMatrix m = input;
  const int rows = m.rows(), cols = m.cols();
  NullspaceBasis basis;
  basis.dimension_of_space = cols;

  // Gauss-Jordan to reduced row echelon form.
  int row = 0;
  for (int col = 0; col < cols && row < rows; ++col) {
    int pivot = -1;
    for (int r = row; r < rows; ++r)
      if (!m(r, col).is_zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0) {
      basis.free_columns.push_back(col);
      continue;
    }
    if (pivot != row)
      for (int c = 0; c < cols; ++c) std::swap(m(pivot, c), m(row, c));
    const Rational inv = 1 / m(row, col);
    for (int c = col; c < cols; ++c) m(row, c) *= inv;
    for (int r = 0; r < rows; ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      const Rational factor = m(r, col);
      for (int c = col; c < cols; ++c) m(r, c) -= factor * m(row, c);
    }
    basis.pivot_columns.push_back(col);
    ++row;
  }
  const int last_pivot = basis.pivot_columns.empty() ? -1 : basis.pivot_columns.back();
  for (int col = last_pivot + 1; col < cols; ++col)
    if (std::find(basis.free_columns.begin(), basis.free_columns.end(), col) ==
        basis.free_columns.end())
      basis.free_columns.push_back(col);
  basis.rank = static_cast<int>(basis.pivot_columns.size());

  for (int f : basis.free_columns) {
    RationalVector v(cols);
    v[f] = 1;
    for (int k = 0; k < basis.rank; ++k) v[basis.pivot_columns[k]] = -m(k, f);
    basis.vectors.push_back(std::move(v));
  }
  return basis;
}

std::optional<std::pair<int, int>> pinned_coordinates(const std::vector<RationalVector>& vectors,
                                                      int n) {
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      bool equal = true;
      for (const auto& v : vectors)
        if (v[i] != v[j]) {
          equal = false;
          break;
        }
      if (equal) return std::make_pair(i, j);
    }
  return std::nullopt;
}

namespace {

void require_even_regular(const Graph& g, const char* what) {
  const int r = g.degree(0);
  if (!is_regular(g, r))
    throw PreconditionError(std::string(what) + ": graph is not regular");
  if (r % 2 != 0)
    throw PreconditionError(std::string(what) + ": valency " + std::to_string(r) + " is odd");
}

}  // namespace

FilterVerdict corollary_filter_on(const std::vector<RationalVector>& spanning, int n) {
  FilterVerdict out;
  bool nonzero = false;
  for (const auto& v : spanning)
    for (const auto& x : v)
      if (!x.is_zero()) nonzero = true;
  if (!nonzero) {
    out.reason = "0 is not an eigenvalue";
    return out;
  }
  if (auto p = pinned_coordinates(spanning, n)) {
    out.pinned = p;
    out.reason = "coordinates " + std::to_string(p->first) + " and " + std::to_string(p->second) +
                 " agree on the whole 0-eigenspace";
    return out;
  }
  out.candidate = true;
  return out;
}

FilterVerdict corollary_filter(const Graph& g) {
  require_even_regular(g, "corollary_filter");
  const auto basis = nullspace_basis(adjacency_matrix(g));
  auto verdict = corollary_filter_on(basis.vectors, g.order());
  verdict.nullity = basis.dimension();
  return verdict;
}

bool lemma_ev_decides(const Graph& g, const CenteredLabeling& lab) {
  require_even_regular(g, "lemma_ev_decides");
  if (lab.order() != g.order())
    throw PreconditionError("lemma_ev_decides: labeling order does not match graph order");
  RationalVector v(lab.labels.begin(), lab.labels.end());
  for (const auto& x : adjacency_matrix(g).multiply(v))
    if (!x.is_zero()) return false;
  return is_centered_bijection(lab.labels);
}

}  // namespace dmlab
