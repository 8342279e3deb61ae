#ifndef MULTIDER_GRADED_MATRIX_HPP
#define MULTIDER_GRADED_MATRIX_HPP

#include <string>
#include <vector>

#include "multider/polynomial.hpp"

namespace multider {

/**
 * Matrix over the polynomial ring with degree twists on rows and columns.
 * Columns are module elements and maps act by matrix-times-column, so a map
 * F -> G is a (rank G) x (rank F) matrix. Entry (i,j) is homogeneous of
 * degree col_degrees[j] - row_degrees[i], or zero.
 */
class GradedMatrix {
 public:
  GradedMatrix() = default;
  GradedMatrix(int nvars, std::vector<int> row_degrees, std::vector<int> col_degrees);

  static GradedMatrix identity(int nvars, const std::vector<int>& degrees);
  // matrix with no columns (zero map out of the zero module)
  static GradedMatrix empty_columns(int nvars, std::vector<int> row_degrees);

  int rows() const { return static_cast<int>(row_degrees_.size()); }
  int cols() const { return static_cast<int>(col_degrees_.size()); }
  int nvars() const { return nvars_; }
  const std::vector<int>& row_degrees() const { return row_degrees_; }
  const std::vector<int>& col_degrees() const { return col_degrees_; }

  const Polynomial& at(int i, int j) const { return entries_[index(i, j)]; }
  void set(int i, int j, Polynomial p);

  bool is_zero() const;
  // every nonzero entry homogeneous of degree col - row
  bool is_degree_compatible() const;
  // true when some entry is a nonzero constant with matching twists
  bool has_unit_entry() const;

  std::vector<Polynomial> column(int j) const;
  GradedMatrix multiply(const GradedMatrix& rhs) const;
  // [this | rhs], same row degrees
  GradedMatrix hconcat(const GradedMatrix& rhs) const;
  GradedMatrix select_columns(const std::vector<int>& keep) const;
  GradedMatrix select_rows(const std::vector<int>& keep) const;

  bool operator==(const GradedMatrix& o) const = default;

  // plain-text aligned debug dump
  std::string to_pretty_string() const;

 private:
  size_t index(int i, int j) const { return static_cast<size_t>(i) * col_degrees_.size() + j; }

  int nvars_ = 0;
  std::vector<int> row_degrees_;
  std::vector<int> col_degrees_;
  std::vector<Polynomial> entries_;
};

/**
 * Finitely presented graded module: cokernel of the relations matrix, whose
 * row degrees are the generator degrees. The zero-relation presentation
 * with gen_degrees = {d} is the twisted free module S(-d).
 */
struct PresentedModule {
  std::vector<int> gen_degrees;
  GradedMatrix relations;

  static PresentedModule free_module(int nvars, std::vector<int> gen_degrees);

  int nvars() const { return relations.nvars(); }
  bool presents_zero_candidate() const { return gen_degrees.empty(); }
  bool is_valid() const;
};

/**
 * Minimal presentation: repeatedly eliminates unit entries of the relations
 * matrix by Gaussian pivoting (dropping one generator and one relation per
 * step) and then discards zero relation columns. For a graded module this
 * leaves a presentation with relations inside the irrelevant-maximal-ideal
 * multiple of the free cover, so the module is zero iff no generators
 * survive, and surviving generator degrees are the minimal ones.
 */
PresentedModule prune_presentation(PresentedModule m);

}  // namespace multider

#endif
