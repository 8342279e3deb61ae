#include "multider/graded_matrix.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <stdexcept>

namespace multider {

GradedMatrix::GradedMatrix(int nvars, std::vector<int> row_degrees, std::vector<int> col_degrees)
    : nvars_(nvars), row_degrees_(std::move(row_degrees)), col_degrees_(std::move(col_degrees)) {
  entries_.assign(row_degrees_.size() * col_degrees_.size(), Polynomial::zero(nvars_));
}

GradedMatrix GradedMatrix::identity(int nvars, const std::vector<int>& degrees) {
  GradedMatrix m(nvars, degrees, degrees);
  for (int i = 0; i < m.rows(); ++i) m.set(i, i, Polynomial::constant(Rational(1), nvars));
  return m;
}

GradedMatrix GradedMatrix::empty_columns(int nvars, std::vector<int> row_degrees) {
  return GradedMatrix(nvars, std::move(row_degrees), {});
}

void GradedMatrix::set(int i, int j, Polynomial p) {
  assert(i >= 0 && i < rows() && j >= 0 && j < cols());
  entries_[index(i, j)] = std::move(p);
}

bool GradedMatrix::is_zero() const {
  for (const auto& e : entries_)
    if (!e.is_zero()) return false;
  return true;
}

bool GradedMatrix::is_degree_compatible() const {
  for (int i = 0; i < rows(); ++i)
    for (int j = 0; j < cols(); ++j) {
      const Polynomial& p = at(i, j);
      if (p.is_zero()) continue;
      auto d = p.homogeneous_degree();
      if (!d || *d != col_degrees_[static_cast<size_t>(j)] - row_degrees_[static_cast<size_t>(i)])
        return false;
    }
  return true;
}

bool GradedMatrix::has_unit_entry() const {
  for (int i = 0; i < rows(); ++i)
    for (int j = 0; j < cols(); ++j) {
      const Polynomial& p = at(i, j);
      if (!p.is_zero() && p.is_constant()) return true;
    }
  return false;
}

std::vector<Polynomial> GradedMatrix::column(int j) const {
  std::vector<Polynomial> c;
  c.reserve(static_cast<size_t>(rows()));
  for (int i = 0; i < rows(); ++i) c.push_back(at(i, j));
  return c;
}

GradedMatrix GradedMatrix::multiply(const GradedMatrix& rhs) const {
  if (cols() != rhs.rows()) throw std::invalid_argument("matrix product shape mismatch");
  GradedMatrix out(nvars_, row_degrees_, rhs.col_degrees_);
  for (int i = 0; i < rows(); ++i)
    for (int j = 0; j < rhs.cols(); ++j) {
      Polynomial s = Polynomial::zero(nvars_);
      for (int k = 0; k < cols(); ++k) {
        if (at(i, k).is_zero() || rhs.at(k, j).is_zero()) continue;
        s += at(i, k) * rhs.at(k, j);
      }
      out.set(i, j, std::move(s));
    }
  return out;
}

GradedMatrix GradedMatrix::hconcat(const GradedMatrix& rhs) const {
  if (rows() != rhs.rows()) throw std::invalid_argument("hconcat row mismatch");
  std::vector<int> cd = col_degrees_;
  cd.insert(cd.end(), rhs.col_degrees_.begin(), rhs.col_degrees_.end());
  GradedMatrix out(nvars_, row_degrees_, cd);
  for (int i = 0; i < rows(); ++i) {
    for (int j = 0; j < cols(); ++j) out.set(i, j, at(i, j));
    for (int j = 0; j < rhs.cols(); ++j) out.set(i, cols() + j, rhs.at(i, j));
  }
  return out;
}

GradedMatrix GradedMatrix::select_columns(const std::vector<int>& keep) const {
  std::vector<int> cd;
  cd.reserve(keep.size());
  for (int j : keep) cd.push_back(col_degrees_[static_cast<size_t>(j)]);
  GradedMatrix out(nvars_, row_degrees_, cd);
  for (int i = 0; i < rows(); ++i)
    for (size_t j = 0; j < keep.size(); ++j) out.set(i, static_cast<int>(j), at(i, keep[j]));
  return out;
}

GradedMatrix GradedMatrix::select_rows(const std::vector<int>& keep) const {
  std::vector<int> rd;
  rd.reserve(keep.size());
  for (int i : keep) rd.push_back(row_degrees_[static_cast<size_t>(i)]);
  GradedMatrix out(nvars_, rd, col_degrees_);
  for (size_t i = 0; i < keep.size(); ++i)
    for (int j = 0; j < cols(); ++j) out.set(static_cast<int>(i), j, at(keep[i], j));
  return out;
}

std::string GradedMatrix::to_pretty_string() const {
  std::vector<std::vector<std::string>> cells(static_cast<size_t>(rows()));
  std::vector<size_t> width(static_cast<size_t>(cols()), 1);
  for (int i = 0; i < rows(); ++i) {
    cells[static_cast<size_t>(i)].resize(static_cast<size_t>(cols()));
    for (int j = 0; j < cols(); ++j) {
      std::string s = at(i, j).to_string();
      width[static_cast<size_t>(j)] = std::max(width[static_cast<size_t>(j)], s.size());
      cells[static_cast<size_t>(i)][static_cast<size_t>(j)] = std::move(s);
    }
  }
  std::ostringstream os;
  os << rows() << "x" << cols() << " rows(";
  for (size_t i = 0; i < row_degrees_.size(); ++i) os << (i ? "," : "") << row_degrees_[i];
  os << ") cols(";
  for (size_t j = 0; j < col_degrees_.size(); ++j) os << (j ? "," : "") << col_degrees_[j];
  os << ")\n";
  for (int i = 0; i < rows(); ++i) {
    os << "[ ";
    for (int j = 0; j < cols(); ++j) {
      const std::string& s = cells[static_cast<size_t>(i)][static_cast<size_t>(j)];
      os << s << std::string(width[static_cast<size_t>(j)] - s.size() + 1, ' ');
    }
    os << "]\n";
  }
  return os.str();
}

PresentedModule PresentedModule::free_module(int nvars, std::vector<int> gen_degrees) {
  PresentedModule m;
  m.relations = GradedMatrix::empty_columns(nvars, gen_degrees);
  m.gen_degrees = std::move(gen_degrees);
  return m;
}

bool PresentedModule::is_valid() const {
  return relations.row_degrees() == gen_degrees && relations.is_degree_compatible();
}

PresentedModule prune_presentation(PresentedModule m) {
  assert(m.is_valid());
  GradedMatrix& a = m.relations;
  bool changed = true;
  while (changed) {
    changed = false;
    // locate a unit pivot
    int pr = -1, pc = -1;
    for (int i = 0; i < a.rows() && pr < 0; ++i)
      for (int j = 0; j < a.cols(); ++j) {
        const Polynomial& p = a.at(i, j);
        if (!p.is_zero() && p.is_constant()) {
          pr = i;
          pc = j;
          break;
        }
      }
    if (pr < 0) break;
    changed = true;

    const Rational u = a.at(pr, pc).constant_value();
    // relation pc expresses generator pr through the others; substitute it
    // into every other relation, then drop row pr and column pc
    GradedMatrix next(a.nvars(), {}, {});
    std::vector<int> rd, cd;
    for (int i = 0; i < a.rows(); ++i)
      if (i != pr) rd.push_back(a.row_degrees()[static_cast<size_t>(i)]);
    for (int j = 0; j < a.cols(); ++j)
      if (j != pc) cd.push_back(a.col_degrees()[static_cast<size_t>(j)]);
    next = GradedMatrix(a.nvars(), rd, cd);
    int jj = 0;
    for (int j = 0; j < a.cols(); ++j) {
      if (j == pc) continue;
      const Polynomial factor = a.at(pr, j) * (Rational(-1) / u);
      int ii = 0;
      for (int i = 0; i < a.rows(); ++i) {
        if (i == pr) continue;
        Polynomial e = a.at(i, j);
        if (!factor.is_zero() && !a.at(i, pc).is_zero()) e += a.at(i, pc) * factor;
        next.set(ii, jj, std::move(e));
        ++ii;
      }
      ++jj;
    }
    m.gen_degrees.erase(m.gen_degrees.begin() + pr);
    a = std::move(next);
  }
  // drop zero relation columns
  std::vector<int> keep;
  for (int j = 0; j < a.cols(); ++j) {
    bool zero = true;
    for (int i = 0; i < a.rows() && zero; ++i) zero = a.at(i, j).is_zero();
    if (!zero) keep.push_back(j);
  }
  if (static_cast<int>(keep.size()) != a.cols()) a = a.select_columns(keep);
  return m;
}

}  // namespace multider
