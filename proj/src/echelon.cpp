#include "engel/echelon.hpp"

#include <algorithm>
#include <map>

#include "engel/errors.hpp"

namespace engel {

namespace {

void check_row(const SparseRow& v) {
  for (std::size_t i = 1; i < v.size(); ++i)
    if (v[i - 1].first >= v[i].first) throw UsageError("sparse row columns must strictly increase");
}

}  // namespace

bool RowEchelon::is_pivot(std::uint32_t col) const {
  return col < pivot_row_.size() && pivot_row_[col] >= 0;
}

SparseRow RowEchelon::reduce(const SparseRow& v) const {
  check_row(v);
  std::map<std::uint32_t, std::uint32_t> acc;
  for (auto [c, x] : v) {
    x %= field_.prime();
    if (x) acc.emplace(c, x);
  }
  SparseRow residue;
  while (!acc.empty()) {
    auto it = acc.begin();
    auto [col, x] = *it;
    acc.erase(it);
    if (!is_pivot(col)) {
      residue.emplace_back(col, x);
      continue;
    }
    // Pivot row has a leading 1 at col; only columns > col change.
    const SparseRow& row = rows_[pivot_row_[col]];
    std::uint32_t f = field_.neg(x);
    for (std::size_t i = 1; i < row.size(); ++i) {
      auto [c, y] = row[i];
      auto [slot, inserted] = acc.try_emplace(c, 0);
      slot->second = field_.add(slot->second, field_.mul(f, y));
      if (slot->second == 0) acc.erase(slot);
    }
  }
  return residue;
}

bool RowEchelon::insert(const SparseRow& v) {
  SparseRow r = reduce(v);
  if (r.empty()) return false;
  std::uint32_t inv = field_.inv(r.front().second);
  for (auto& e : r) e.second = field_.mul(e.second, inv);
  std::uint32_t col = r.front().first;
  if (pivot_row_.size() <= col) pivot_row_.resize(col + 1, -1);
  pivot_row_[col] = static_cast<std::int32_t>(rows_.size());
  rows_.push_back(std::move(r));
  return true;
}

std::vector<std::uint32_t> RowEchelon::pivot_columns() const {
  std::vector<std::uint32_t> cols;
  cols.reserve(rows_.size());
  for (const auto& r : rows_) cols.push_back(r.front().first);
  std::sort(cols.begin(), cols.end());
  return cols;
}

std::vector<SparseRow> RowEchelon::rref() const {
  std::vector<SparseRow> sorted = rows_;
  std::sort(sorted.begin(), sorted.end(), [](const SparseRow& a, const SparseRow& b) {
    return a.front().first < b.front().first;
  });
  // Back-substitute from the last pivot upwards; rows below are already reduced.
  RowEchelon done(field_);
  for (std::size_t i = sorted.size(); i-- > 0;) {
    SparseRow lead{sorted[i].front()};
    SparseRow rest(sorted[i].begin() + 1, sorted[i].end());
    SparseRow reduced = done.reduce(rest);
    lead.insert(lead.end(), reduced.begin(), reduced.end());
    sorted[i] = lead;
    done.insert(sorted[i]);
  }
  return sorted;
}

std::size_t sparse_rank(PrimeField field, const std::vector<SparseRow>& rows) {
  RowEchelon e(field);
  for (const auto& r : rows) e.insert(r);
  return e.rank();
}

bool same_row_space(PrimeField field, const std::vector<SparseRow>& a, const std::vector<SparseRow>& b) {
  RowEchelon ea(field), eb(field);
  for (const auto& r : a) ea.insert(r);
  for (const auto& r : b) eb.insert(r);
  return ea.rref() == eb.rref();
}

ModMatrix ModMatrix::identity(PrimeField field, std::size_t n) {
  ModMatrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

bool ModMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](std::uint32_t x) { return x == 0; });
}

bool ModMatrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (at(r, c) != (r == c ? 1u : 0u)) return false;
  return true;
}

std::size_t ModMatrix::nonzeros() const {
  return static_cast<std::size_t>(std::count_if(data_.begin(), data_.end(), [](std::uint32_t x) { return x != 0; }));
}

ModMatrix ModMatrix::operator*(const ModMatrix& o) const {
  if (cols_ != o.rows_) throw UsageError("matrix dimension mismatch");
  ModMatrix out(field_, rows_, o.cols_);
  // Row-sparse form of o; unipotent operators are mostly zero off the diagonal.
  std::vector<std::size_t> start(o.rows_ + 1, 0);
  std::vector<std::pair<std::size_t, std::uint32_t>> entries;
  for (std::size_t k = 0; k < o.rows_; ++k) {
    for (std::size_t c = 0; c < o.cols_; ++c)
      if (std::uint32_t x = o.at(k, c)) entries.emplace_back(c, x);
    start[k + 1] = entries.size();
  }
  std::vector<std::uint64_t> acc(o.cols_, 0);
  std::vector<char> seen(o.cols_, 0);
  std::vector<std::size_t> touched;
  const std::uint32_t p = field_.prime();
  for (std::size_t r = 0; r < rows_; ++r) {
    touched.clear();
    for (std::size_t k = 0; k < cols_; ++k) {
      std::uint32_t a = at(r, k);
      if (a == 0) continue;
      for (std::size_t e = start[k]; e < start[k + 1]; ++e) {
        auto [c, x] = entries[e];
        if (!seen[c]) {
          seen[c] = 1;
          touched.push_back(c);
        }
        acc[c] += static_cast<std::uint64_t>(a) * x;
      }
    }
    for (std::size_t c : touched) {
      out.at(r, c) = static_cast<std::uint32_t>(acc[c] % p);
      acc[c] = 0;
      seen[c] = 0;
    }
  }
  return out;
}

ModMatrix ModMatrix::operator+(const ModMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw UsageError("matrix dimension mismatch");
  ModMatrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = field_.add(data_[i], o.data_[i]);
  return out;
}

ModMatrix ModMatrix::operator-(const ModMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw UsageError("matrix dimension mismatch");
  ModMatrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = field_.sub(data_[i], o.data_[i]);
  return out;
}

ModMatrix ModMatrix::scaled(std::uint32_t c) const {
  ModMatrix out = *this;
  for (auto& x : out.data_) x = field_.mul(x, c % field_.prime());
  return out;
}

std::vector<std::uint32_t> ModMatrix::apply(const std::vector<std::uint32_t>& v) const {
  if (v.size() != cols_) throw UsageError("vector dimension mismatch");
  std::vector<std::uint32_t> out(rows_, 0);
  for (std::size_t r = 0; r < rows_; ++r) {
    std::uint64_t acc = 0;
    for (std::size_t c = 0; c < cols_; ++c) acc += static_cast<std::uint64_t>(at(r, c)) * v[c];
    out[r] = static_cast<std::uint32_t>(acc % field_.prime());
  }
  return out;
}

}  // namespace engel
