#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "dmlab/graph.hpp"
#include "dmlab/labeling.hpp"

namespace dmlab {

using Rational = boost::multiprecision::cpp_rational;
using RationalVector = std::vector<Rational>;

/// Dense matrix of exact rationals, row-major.
class RationalMatrix {
 public:
  RationalMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(std::size_t(rows) * cols) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rational& operator()(int r, int c) { return data_[std::size_t(r) * cols_ + c]; }
  const Rational& operator()(int r, int c) const { return data_[std::size_t(r) * cols_ + c]; }

  RationalVector multiply(const RationalVector& v) const;

 private:
  int rows_, cols_;
  std::vector<Rational> data_;
};

/// Kernel basis derived from the reduced row echelon form: one vector per
/// free column, with a 1 at that column and zeros at the other free columns.
struct NullspaceBasis {
  int dimension_of_space = 0;  // n
  int rank = 0;
  std::vector<int> pivot_columns;
  std::vector<int> free_columns;
  std::vector<RationalVector> vectors;

  int dimension() const { return static_cast<int>(vectors.size()); }
};

RationalMatrix adjacency_matrix(const Graph& g);
NullspaceBasis nullspace_basis(const RationalMatrix& m);

struct FilterVerdict {
  bool candidate = false;
  std::string reason;
  /// Kernel dimension, and the first pinned coordinate pair when ruled out that way.
  int nullity = 0;
  std::optional<std::pair<int, int>> pinned;
};

/// First pair i < j with v(i) = v(j) for every vector of the list, if any.
std::optional<std::pair<int, int>> pinned_coordinates(const std::vector<RationalVector>& vectors,
                                                      int n);

/// A regular graph of even valency is not distance magic when 0 is not an
/// eigenvalue, or when two coordinates agree across the whole zero
/// eigenspace. Candidate does not imply distance magic.
/// Throws PreconditionError for non-regular or odd-valency graphs.
FilterVerdict corollary_filter(const Graph& g);

/// Same decision on an arbitrary spanning list of the kernel of an n x n
/// matrix. Used to check independence from the chosen basis.
FilterVerdict corollary_filter_on(const std::vector<RationalVector>& spanning, int n);

/// True iff A l = 0 and the labels form the arithmetic sequence 1-n, ..., n-1
/// after some permutation. Throws PreconditionError if g is not regular of
/// even valency or the orders differ.
bool lemma_ev_decides(const Graph& g, const CenteredLabeling& lab);

}  // namespace dmlab
