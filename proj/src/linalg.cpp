#include "qmds/linalg.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace qmds {

SingularMatrix::SingularMatrix(std::size_t size, std::size_t rank)
    : std::domain_error("singular " + std::to_string(size) + "x" + std::to_string(size) +
                        " matrix: rank " + std::to_string(rank) + ", deficit " +
                        std::to_string(size - rank)),
      size_(size),
      rank_(rank) {}

MatrixGF::MatrixGF(const Field& field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), entries_(rows * cols, 0) {}

MatrixGF::MatrixGF(const Field& field,
                   std::initializer_list<std::initializer_list<std::int64_t>> rows)
    : field_(field), rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  entries_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionMismatch("ragged matrix literal");
    for (std::int64_t v : r) entries_.push_back(field_.reduce(v));
  }
}

MatrixGF MatrixGF::identity(const Field& field, std::size_t n) {
  MatrixGF m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.entries_[i * n + i] = 1;
  return m;
}

FieldElement MatrixGF::at(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("matrix index out of range");
  return FieldElement(field_, (*this)(r, c));
}

void MatrixGF::set(std::size_t r, std::size_t c, std::int64_t value) {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("matrix index out of range");
  entries_[r * cols_ + c] = field_.reduce(value);
}

void MatrixGF::set(std::size_t r, std::size_t c, const FieldElement& value) {
  if (value.modulus() != field_.modulus()) throw FieldMismatch(field_.modulus(), value.modulus());
  set(r, c, static_cast<std::int64_t>(value.value()));
}

MatrixGF MatrixGF::transpose() const {
  MatrixGF t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.entries_[c * rows_ + r] = (*this)(r, c);
  return t;
}

MatrixGF MatrixGF::columns(std::span<const std::size_t> indices) const {
  MatrixGF out(field_, rows_, indices.size());
  for (std::size_t j = 0; j < indices.size(); ++j) {
    if (indices[j] >= cols_) throw std::out_of_range("column index out of range");
    for (std::size_t r = 0; r < rows_; ++r) out.entries_[r * out.cols_ + j] = (*this)(r, indices[j]);
  }
  return out;
}

MatrixGF MatrixGF::row_block(std::size_t first, std::size_t count) const {
  if (first + count > rows_) throw std::out_of_range("row block out of range");
  MatrixGF out(field_, count, cols_);
  std::copy_n(entries_.begin() + static_cast<std::ptrdiff_t>(first * cols_), count * cols_,
              out.entries_.begin());
  return out;
}

MatrixGF operator*(const MatrixGF& lhs, const MatrixGF& rhs) {
  if (lhs.field() != rhs.field()) throw FieldMismatch(lhs.field().modulus(), rhs.field().modulus());
  if (lhs.cols() != rhs.rows())
    throw DimensionMismatch("matrix product: " + std::to_string(lhs.cols()) + " columns vs " +
                            std::to_string(rhs.rows()) + " rows");
  const Field& f = lhs.field();
  MatrixGF out(f, lhs.rows(), rhs.cols());
  for (std::size_t i = 0; i < lhs.rows(); ++i)
    for (std::size_t j = 0; j < rhs.cols(); ++j) {
      std::uint32_t acc = 0;
      for (std::size_t t = 0; t < lhs.cols(); ++t) acc = f.add(acc, f.mul(lhs(i, t), rhs(t, j)));
      out.row(i)[j] = acc;
    }
  return out;
}

MatrixGF hconcat(const MatrixGF& lhs, const MatrixGF& rhs) {
  if (lhs.field() != rhs.field()) throw FieldMismatch(lhs.field().modulus(), rhs.field().modulus());
  if (lhs.rows() != rhs.rows())
    throw DimensionMismatch("hconcat: row counts " + std::to_string(lhs.rows()) + " and " +
                            std::to_string(rhs.rows()));
  MatrixGF out(lhs.field(), lhs.rows(), lhs.cols() + rhs.cols());
  for (std::size_t r = 0; r < lhs.rows(); ++r) {
    auto dst = out.row(r);
    std::copy(lhs.row(r).begin(), lhs.row(r).end(), dst.begin());
    std::copy(rhs.row(r).begin(), rhs.row(r).end(), dst.begin() + static_cast<std::ptrdiff_t>(lhs.cols()));
  }
  return out;
}

MatrixGF vconcat(const MatrixGF& top, const MatrixGF& bottom) {
  if (top.field() != bottom.field())
    throw FieldMismatch(top.field().modulus(), bottom.field().modulus());
  if (top.cols() != bottom.cols())
    throw DimensionMismatch("vconcat: column counts " + std::to_string(top.cols()) + " and " +
                            std::to_string(bottom.cols()));
  MatrixGF out(top.field(), top.rows() + bottom.rows(), top.cols());
  for (std::size_t r = 0; r < top.rows(); ++r)
    std::copy(top.row(r).begin(), top.row(r).end(), out.row(r).begin());
  for (std::size_t r = 0; r < bottom.rows(); ++r)
    std::copy(bottom.row(r).begin(), bottom.row(r).end(), out.row(top.rows() + r).begin());
  return out;
}

RrefResult rref(const MatrixGF& m) {
  MatrixGF a = m;
  const Field& f = a.field();
  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t col = 0; col < a.cols() && lead < a.rows(); ++col) {
    std::size_t sel = lead;
    while (sel < a.rows() && a(sel, col) == 0) ++sel;
    if (sel == a.rows()) continue;
    if (sel != lead) std::swap_ranges(a.row(sel).begin(), a.row(sel).end(), a.row(lead).begin());

    const std::uint32_t scale = f.inv(a(lead, col));
    for (auto& v : a.row(lead)) v = f.mul(v, scale);

    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == lead) continue;
      const std::uint32_t factor = a(r, col);
      if (factor == 0) continue;
      auto target = a.row(r);
      auto src = a.row(lead);
      for (std::size_t c = col; c < a.cols(); ++c) target[c] = f.sub(target[c], f.mul(factor, src[c]));
    }
    pivots.push_back(col);
    ++lead;
  }
  return {std::move(a), std::move(pivots)};
}

std::size_t rank(const MatrixGF& m) { return rref(m).pivots.size(); }

MatrixGF invert(const MatrixGF& m) {
  if (m.rows() != m.cols())
    throw DimensionMismatch("invert: matrix is " + std::to_string(m.rows()) + "x" +
                            std::to_string(m.cols()) + ", not square");
  const std::size_t n = m.rows();
  RrefResult res = rref(hconcat(m, MatrixGF::identity(m.field(), n)));
  std::size_t left_rank = 0;
  while (left_rank < res.pivots.size() && res.pivots[left_rank] < n) ++left_rank;
  if (left_rank < n) throw SingularMatrix(n, left_rank);
  std::vector<std::size_t> right(n);
  for (std::size_t j = 0; j < n; ++j) right[j] = n + j;
  return res.reduced.columns(right);
}

std::size_t intersection_dim(const MatrixGF& u, const MatrixGF& v) {
  if (u.rows() != v.rows())
    throw DimensionMismatch("intersection_dim: ambient dimensions " + std::to_string(u.rows()) +
                            " and " + std::to_string(v.rows()));
  return rank(u) + rank(v) - rank(hconcat(u, v));
}

std::vector<std::uint32_t> mat_vec(std::span<const std::uint32_t> x, const MatrixGF& m) {
  if (x.size() != m.rows())
    throw DimensionMismatch("mat_vec: vector length " + std::to_string(x.size()) + " vs " +
                            std::to_string(m.rows()) + " rows");
  const Field& f = m.field();
  std::vector<std::uint32_t> out(m.cols(), 0);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (x[r] == 0) continue;
    auto row = m.row(r);
    for (std::size_t c = 0; c < m.cols(); ++c) out[c] = f.add(out[c], f.mul(x[r], row[c]));
  }
  return out;
}

std::vector<FieldElement> mat_vec(std::span<const FieldElement> x, const MatrixGF& m) {
  std::vector<std::uint32_t> raw;
  raw.reserve(x.size());
  for (const auto& e : x) {
    if (e.modulus() != m.field().modulus()) throw FieldMismatch(e.modulus(), m.field().modulus());
    raw.push_back(e.value());
  }
  std::vector<FieldElement> out;
  for (std::uint32_t v : mat_vec(std::span<const std::uint32_t>(raw), m))
    out.emplace_back(m.field(), v);
  return out;
}

std::string to_string(const MatrixGF& m) {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << (r ? ", [" : "[");
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? "," : "") << m(r, c);
    os << ']';
  }
  os << ']';
  return os.str();
}

}  // namespace qmds
