#include "sdw/linalg.hpp"

#include <algorithm>
#include <stdexcept>

#include "sdw/deadline.hpp"

namespace sdw {

std::vector<int> DenseMatrix::row_reduce() {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < cols_ && r < rows_; ++c) {
    Deadline::check();
    int p = -1;
    for (int i = r; i < rows_; ++i)
      if (at(i, c) != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != r)
      for (int k = 0; k < cols_; ++k) std::swap(at(p, k), at(r, k));
    auto inv = F_.inv(at(r, c));
    for (int k = c; k < cols_; ++k) at(r, k) = F_.mul(at(r, k), inv);
    for (int i = 0; i < rows_; ++i) {
      if (i == r || at(i, c) == 0) continue;
      auto f = F_.neg(at(i, c));
      for (int k = c; k < cols_; ++k)
        if (at(r, k) != 0) at(i, k) = F_.add(at(i, k), F_.mul(f, at(r, k)));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

int DenseMatrix::rank() const {
  DenseMatrix m = *this;
  return static_cast<int>(m.row_reduce().size());
}

std::vector<std::vector<PrimeField::Elem>> DenseMatrix::kernel() const {
  DenseMatrix m = *this;
  auto pivots = m.row_reduce();
  std::vector<char> is_pivot(cols_, 0);
  for (int c : pivots) is_pivot[c] = 1;
  std::vector<std::vector<PrimeField::Elem>> out;
  for (int f = 0; f < cols_; ++f) {
    if (is_pivot[f]) continue;
    std::vector<PrimeField::Elem> v(cols_, 0);
    v[f] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = F_.neg(m.at(static_cast<int>(r), f));
    out.push_back(std::move(v));
  }
  return out;
}

DenseMatrix DenseMatrix::operator*(const DenseMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix size mismatch");
  DenseMatrix out(F_, rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      auto a = at(i, k);
      if (a == 0) continue;
      for (int j = 0; j < o.cols_; ++j)
        if (o.at(k, j)) out.at(i, j) = F_.add(out.at(i, j), F_.mul(a, o.at(k, j)));
    }
  return out;
}

bool DenseMatrix::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](PrimeField::Elem x) { return x == 0; });
}

}  // namespace sdw
