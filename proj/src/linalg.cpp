#include "bricklab/linalg.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

#include "bricklab/errors.hpp"

namespace bricklab {

std::string_view kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::InvalidQuiver: return "InvalidQuiver";
    case ErrorKind::NonAdmissibleRelation: return "NonAdmissibleRelation";
    case ErrorKind::RadicalBoundExceeded: return "RadicalBoundExceeded";
    case ErrorKind::ImproperIdeal: return "ImproperIdeal";
    case ErrorKind::UnsupportedIdeal: return "UnsupportedIdeal";
    case ErrorKind::AlgebraMismatch: return "AlgebraMismatch";
    case ErrorKind::InvalidRepresentation: return "InvalidRepresentation";
    case ErrorKind::ZeroModule: return "ZeroModule";
    case ErrorKind::NotSubrepresentation: return "NotSubrepresentation";
    case ErrorKind::NotTauRigid: return "NotTauRigid";
    case ErrorKind::NotIndecomposable: return "NotIndecomposable";
    case ErrorKind::InputIsBrick: return "InputIsBrick";
    case ErrorKind::SearchExhausted: return "SearchExhausted";
    case ErrorKind::MutationFailed: return "MutationFailed";
    case ErrorKind::ZeroVector: return "ZeroVector";
    case ErrorKind::TauRigidInput: return "TauRigidInput";
    case ErrorKind::NotASink: return "NotASink";
    case ErrorKind::NotASource: return "NotASource";
    case ErrorKind::UnknownExample: return "UnknownExample";
    case ErrorKind::PostconditionViolated: return "PostconditionViolated";
  }
  return "Unknown";
}

Rational parse_rational(std::string_view text) {
  std::string s;
  bool negative = false;
  std::size_t i = 0;
  // trim
  while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
  std::string_view rest = text.substr(i);
  while (!rest.empty() && (rest.back() == ' ' || rest.back() == '\t')) rest.remove_suffix(1);
  if (rest.substr(0, 3) == "\xE2\x88\x92") {
    negative = true;
    rest.remove_prefix(3);
  } else if (!rest.empty() && (rest[0] == '-' || rest[0] == '+')) {
    negative = rest[0] == '-';
    rest.remove_prefix(1);
  }
  if (rest.empty()) throw Error(ErrorKind::ParseError, "empty rational");
  auto digits_only = [](std::string_view d) {
    return !d.empty() && std::all_of(d.begin(), d.end(), [](char c) { return c >= '0' && c <= '9'; });
  };
  Rational value;
  if (auto slash = rest.find('/'); slash != std::string_view::npos) {
    auto num = rest.substr(0, slash);
    auto den = rest.substr(slash + 1);
    if (!digits_only(num) || !digits_only(den))
      throw Error(ErrorKind::ParseError, "bad rational '" + std::string(text) + "'");
    Integer n{std::string(num)}, d{std::string(den)};
    if (d == 0) throw Error(ErrorKind::ParseError, "zero denominator in '" + std::string(text) + "'");
    value = Rational(n, d);
  } else if (auto dot = rest.find('.'); dot != std::string_view::npos) {
    auto whole = rest.substr(0, dot);
    auto frac = rest.substr(dot + 1);
    if ((!whole.empty() && !digits_only(whole)) || (!frac.empty() && !digits_only(frac)) ||
        (whole.empty() && frac.empty()))
      throw Error(ErrorKind::ParseError, "bad decimal '" + std::string(text) + "'");
    Integer w(whole.empty() ? std::string("0") : std::string(whole));
    Integer f(frac.empty() ? std::string("0") : std::string(frac));
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    value = Rational(w * scale + f, scale);
  } else {
    if (!digits_only(rest)) throw Error(ErrorKind::ParseError, "bad integer '" + std::string(text) + "'");
    value = Rational(Integer(std::string(rest)));
  }
  value.canonicalize();
  return negative ? Rational(-value) : value;
}

std::string to_string(const Rational& q) { return q.get_str(); }

// ---------------------------------------------------------------- Matrix

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Rational>>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    assert(rows[r].size() == cols);
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Matrix Matrix::column(const std::vector<Rational>& v) {
  Matrix m(v.size(), 1);
  for (std::size_t r = 0; r < v.size(); ++r) m(r, 0) = v[r];
  return m;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& q) { return sgn(q) == 0; });
}

bool Matrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if ((*this)(r, c) != (r == c ? 1 : 0)) return false;
  return true;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  assert(r0 + nr <= rows_ && c0 + nc <= cols_);
  Matrix b(nr, nc);
  for (std::size_t r = 0; r < nr; ++r)
    for (std::size_t c = 0; c < nc; ++c) b(r, c) = (*this)(r0 + r, c0 + c);
  return b;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& m) {
  assert(r0 + m.rows() <= rows_ && c0 + m.cols() <= cols_);
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) (*this)(r0 + r, c0 + c) = m(r, c);
}

Matrix Matrix::select_columns(const std::vector<std::size_t>& cols) const {
  Matrix m(rows_, cols.size());
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols.size(); ++k) m(r, k) = (*this)(r, cols[k]);
  return m;
}

std::vector<Rational> Matrix::column_vector(std::size_t c) const {
  std::vector<Rational> v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  assert(cols_ == rhs.rows_);
  Matrix out(rows_, rhs.cols_);
  Rational tmp;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(r, k);
      if (sgn(a) == 0) continue;
      for (std::size_t c = 0; c < rhs.cols_; ++c) {
        const Rational& b = rhs(k, c);
        if (sgn(b) == 0) continue;
        mpq_mul(tmp.get_mpq_t(), a.get_mpq_t(), b.get_mpq_t());
        out(r, c) += tmp;
      }
    }
  }
  return out;
}

Matrix Matrix::operator+(const Matrix& rhs) const {
  Matrix out = *this;
  out += rhs;
  return out;
}

Matrix Matrix::operator-(const Matrix& rhs) const {
  assert(rows_ == rhs.rows_ && cols_ == rhs.cols_);
  Matrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] -= rhs.data_[i];
  return out;
}

Matrix& Matrix::operator+=(const Matrix& rhs) {
  assert(rows_ == rhs.rows_ && cols_ == rhs.cols_);
  for (std::size_t i = 0; i < data_.size(); ++i)
    if (sgn(rhs.data_[i]) != 0) data_[i] += rhs.data_[i];
  return *this;
}

Matrix& Matrix::operator*=(const Rational& s) {
  for (auto& x : data_) x *= s;
  return *this;
}

bool Matrix::operator==(const Matrix& rhs) const {
  return rows_ == rhs.rows_ && cols_ == rhs.cols_ && data_ == rhs.data_;
}

Rational Matrix::trace() const {
  Rational t;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

std::size_t Matrix::nonzeros() const {
  return static_cast<std::size_t>(
      std::count_if(data_.begin(), data_.end(), [](const Rational& q) { return sgn(q) != 0; }));
}

Matrix hstack(const Matrix& a, const Matrix& b) {
  assert(a.rows() == b.rows());
  Matrix m(a.rows(), a.cols() + b.cols());
  m.set_block(0, 0, a);
  m.set_block(0, a.cols(), b);
  return m;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
  assert(a.cols() == b.cols());
  Matrix m(a.rows() + b.rows(), a.cols());
  m.set_block(0, 0, a);
  m.set_block(a.rows(), 0, b);
  return m;
}

Matrix block_diagonal(const std::vector<Matrix>& blocks) {
  std::size_t r = 0, c = 0;
  for (const auto& b : blocks) {
    r += b.rows();
    c += b.cols();
  }
  Matrix m(r, c);
  r = c = 0;
  for (const auto& b : blocks) {
    m.set_block(r, c, b);
    r += b.rows();
    c += b.cols();
  }
  return m;
}

// ------------------------------------------------------- sparse elimination

namespace {

const Rational* find_entry(const SparseRow& row, std::size_t col) {
  auto it = std::lower_bound(row.begin(), row.end(), col,
                             [](const auto& e, std::size_t c) { return e.first < c; });
  if (it != row.end() && it->first == col) return &it->second;
  return nullptr;
}

// target -= factor * pivot; reports columns newly present in target.
void axpy(SparseRow& target, const Rational& factor, const SparseRow& pivot,
          std::vector<std::size_t>& fresh) {
  SparseRow out;
  out.reserve(target.size() + pivot.size());
  Rational tmp;
  std::size_t i = 0, j = 0;
  while (i < target.size() || j < pivot.size()) {
    if (j == pivot.size() || (i < target.size() && target[i].first < pivot[j].first)) {
      out.push_back(std::move(target[i++]));
    } else if (i == target.size() || pivot[j].first < target[i].first) {
      mpq_mul(tmp.get_mpq_t(), factor.get_mpq_t(), pivot[j].second.get_mpq_t());
      out.emplace_back(pivot[j].first, -tmp);
      fresh.push_back(pivot[j].first);
      ++j;
    } else {
      mpq_mul(tmp.get_mpq_t(), factor.get_mpq_t(), pivot[j].second.get_mpq_t());
      Rational v = target[i].second - tmp;
      if (sgn(v) != 0) out.emplace_back(target[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  target = std::move(out);
}

}  // namespace

Echelon sparse_rref(std::vector<SparseRow> rows, std::size_t ncols, bool natural_order,
                    std::size_t pivot_limit) {
  rows.erase(std::remove_if(rows.begin(), rows.end(), [](const SparseRow& r) { return r.empty(); }),
             rows.end());
  const std::size_t limit = std::min(pivot_limit, ncols);
  std::vector<std::vector<std::uint32_t>> col_rows(ncols);
  for (std::uint32_t r = 0; r < rows.size(); ++r)
    for (const auto& [c, v] : rows[r]) col_rows[c].push_back(r);

  std::vector<std::size_t> order(limit);
  std::iota(order.begin(), order.end(), 0);
  if (!natural_order) {
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return col_rows[a].size() < col_rows[b].size();
    });
  }

  std::vector<char> used(rows.size(), 0);
  Echelon out;
  std::vector<std::size_t> pivot_row_ids;
  std::vector<std::size_t> fresh;
  for (std::size_t c : order) {
    std::size_t best = SIZE_MAX;
    for (std::uint32_t r : col_rows[c]) {
      if (used[r] || !find_entry(rows[r], c)) continue;
      if (best == SIZE_MAX || rows[r].size() < rows[best].size()) best = r;
    }
    if (best == SIZE_MAX) continue;
    {
      Rational inv = 1 / *find_entry(rows[best], c);
      if (inv != 1)
        for (auto& e : rows[best]) e.second *= inv;
    }
    used[best] = 1;
    pivot_row_ids.push_back(best);
    out.pivots.push_back(c);
    auto holders = col_rows[c];
    for (std::uint32_t r : holders) {
      if (r == best) continue;
      const Rational* f = find_entry(rows[r], c);
      if (!f) continue;
      Rational factor = *f;
      fresh.clear();
      axpy(rows[r], factor, rows[best], fresh);
      for (std::size_t col : fresh) col_rows[col].push_back(r);
    }
    col_rows[c].assign(1, static_cast<std::uint32_t>(best));
  }
  for (std::size_t id : pivot_row_ids) out.rows.push_back(std::move(rows[id]));
  for (std::size_t r = 0; r < rows.size(); ++r)
    if (!used[r] && !rows[r].empty()) out.leftover.push_back(std::move(rows[r]));
  return out;
}

std::vector<SparseRow> to_sparse_rows(const Matrix& m) {
  std::vector<SparseRow> rows(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (sgn(m(r, c)) != 0) rows[r].emplace_back(c, m(r, c));
  return rows;
}

std::vector<std::vector<Rational>> sparse_nullspace(std::vector<SparseRow> rows, std::size_t ncols) {
  Echelon e = sparse_rref(std::move(rows), ncols);
  std::vector<char> is_pivot(ncols, 0);
  for (std::size_t p : e.pivots) is_pivot[p] = 1;
  std::vector<std::size_t> free_index(ncols, SIZE_MAX);
  std::vector<std::vector<Rational>> basis;
  for (std::size_t c = 0; c < ncols; ++c) {
    if (is_pivot[c]) continue;
    free_index[c] = basis.size();
    basis.emplace_back(ncols);
    basis.back()[c] = 1;
  }
  for (std::size_t k = 0; k < e.rows.size(); ++k) {
    const std::size_t p = e.pivots[k];
    for (const auto& [c, v] : e.rows[k]) {
      if (c == p) continue;
      basis[free_index[c]][p] = -v;
    }
  }
  return basis;
}

Matrix nullspace(const Matrix& m) {
  auto basis = sparse_nullspace(to_sparse_rows(m), m.cols());
  Matrix out(m.cols(), basis.size());
  for (std::size_t k = 0; k < basis.size(); ++k)
    for (std::size_t r = 0; r < m.cols(); ++r) out(r, k) = basis[k][r];
  return out;
}

std::size_t rank(const Matrix& m) { return sparse_rref(to_sparse_rows(m), m.cols()).pivots.size(); }

Echelon row_echelon(const Matrix& m) {
  Echelon e = sparse_rref(to_sparse_rows(m), m.cols(), true);
  // natural order visits columns left to right, so pivots are already sorted
  return e;
}

Matrix column_space(const Matrix& m) {
  Echelon e = sparse_rref(to_sparse_rows(m), m.cols(), true);
  auto pivots = e.pivots;
  std::sort(pivots.begin(), pivots.end());
  return m.select_columns(pivots);
}

std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
  assert(a.rows() == b.rows());
  Matrix aug = hstack(a, b);
  Echelon e = sparse_rref(to_sparse_rows(aug), aug.cols(), false, a.cols());
  for (const auto& row : e.leftover)
    if (!row.empty()) return std::nullopt;
  Matrix x(a.cols(), b.cols());
  for (std::size_t k = 0; k < e.rows.size(); ++k) {
    const std::size_t p = e.pivots[k];
    for (const auto& [c, v] : e.rows[k])
      if (c >= a.cols()) x(p, c - a.cols()) = v;
  }
  return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  if (rank(m) != m.rows()) return std::nullopt;
  return solve(m, Matrix::identity(m.rows()));
}

Rational determinant(Matrix m) {
  assert(m.rows() == m.cols());
  const std::size_t n = m.rows();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && sgn(m(p, c)) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t k = 0; k < n; ++k) std::swap(m(p, k), m(c, k));
      det = -det;
    }
    det *= m(c, c);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (sgn(m(r, c)) == 0) continue;
      Rational f = m(r, c) / m(c, c);
      for (std::size_t k = c; k < n; ++k) m(r, k) -= f * m(c, k);
    }
  }
  return det;
}

Matrix complement_columns(const Matrix& sub) {
  const std::size_t n = sub.rows();
  Echelon e = sparse_rref(to_sparse_rows(sub.transpose()), n, true);
  std::vector<char> is_pivot(n, 0);
  for (std::size_t p : e.pivots) is_pivot[p] = 1;
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < n; ++c)
    if (!is_pivot[c]) free.push_back(c);
  Matrix out(n, free.size());
  for (std::size_t k = 0; k < free.size(); ++k) out(free[k], k) = 1;
  return out;
}

std::vector<Rational> charpoly(const Matrix& input) {
  // Hessenberg reduction followed by the standard recurrence.
  assert(input.rows() == input.cols());
  const std::size_t n = input.rows();
  Matrix h = input;
  for (std::size_t m = 1; m + 1 < n + 1 && m < n; ++m) {
    std::size_t i = m;
    while (i < n && sgn(h(i, m - 1)) == 0) ++i;
    if (i == n) continue;
    if (i != m) {
      for (std::size_t j = m - 1; j < n; ++j) std::swap(h(i, j), h(m, j));
      for (std::size_t j = 0; j < n; ++j) std::swap(h(j, i), h(j, m));
    }
    Rational t = h(m, m - 1);
    for (std::size_t r = m + 1; r < n; ++r) {
      if (sgn(h(r, m - 1)) == 0) continue;
      Rational u = h(r, m - 1) / t;
      for (std::size_t j = m - 1; j < n; ++j) h(r, j) -= u * h(m, j);
      for (std::size_t j = 0; j < n; ++j) h(j, m) += u * h(j, r);
    }
  }
  // p_k(x) = char poly of leading k x k block
  std::vector<std::vector<Rational>> p(n + 1);
  p[0] = {Rational(1)};
  for (std::size_t k = 1; k <= n; ++k) {
    p[k].assign(k + 1, Rational(0));
    // x * p_{k-1} - h(k-1,k-1) * p_{k-1}
    for (std::size_t d = 0; d < k; ++d) {
      p[k][d + 1] += p[k - 1][d];
      p[k][d] -= h(k - 1, k - 1) * p[k - 1][d];
    }
    Rational prod = 1;
    for (std::size_t i = 1; i < k; ++i) {
      prod *= h(k - i, k - i - 1);
      if (sgn(prod) == 0) break;
      Rational coeff = prod * h(k - i - 1, k - 1);
      for (std::size_t d = 0; d < p[k - i - 1].size(); ++d) p[k][d] -= coeff * p[k - i - 1][d];
    }
  }
  return p[n];
}

Rational eval_poly(const std::vector<Rational>& poly, const Rational& x) {
  Rational acc;
  for (auto it = poly.rbegin(); it != poly.rend(); ++it) acc = acc * x + *it;
  return acc;
}

namespace {

std::vector<Integer> divisors(Integer n, const Integer& bound) {
  n = abs(n);
  if (n > bound) return {};
  std::vector<std::pair<Integer, unsigned>> factors;
  for (Integer p = 2; p * p <= n; ++p) {
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e) factors.emplace_back(p, e);
  }
  if (n > 1) factors.emplace_back(n, 1);
  std::vector<Integer> divs{1};
  for (const auto& [p, e] : factors) {
    const std::size_t count = divs.size();
    Integer pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < count; ++i) divs.push_back(divs[i] * pk);
    }
  }
  return divs;
}

}  // namespace

std::vector<Rational> rational_roots(const std::vector<Rational>& poly_in, const Integer& factor_bound) {
  std::vector<Rational> poly = poly_in;
  while (!poly.empty() && sgn(poly.back()) == 0) poly.pop_back();
  std::vector<Rational> roots;
  if (poly.size() <= 1) return roots;
  std::size_t low = 0;
  while (sgn(poly[low]) == 0) ++low;
  if (low > 0) roots.emplace_back(0);
  std::vector<Rational> reduced(poly.begin() + static_cast<std::ptrdiff_t>(low), poly.end());
  if (reduced.size() <= 1) return roots;
  Integer lcm = 1;
  for (const auto& c : reduced) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> ints;
  for (const auto& c : reduced) ints.push_back(Integer(c * lcm));
  auto nums = divisors(ints.front(), factor_bound);
  auto dens = divisors(ints.back(), factor_bound);
  if (nums.empty() || dens.empty()) return roots;
  for (const auto& q : dens)
    for (const auto& p : nums)
      for (int s : {1, -1}) {
        Rational cand(p * s, q);
        cand.canonicalize();
        if (std::find(roots.begin(), roots.end(), cand) != roots.end()) continue;
        if (sgn(eval_poly(reduced, cand)) == 0) roots.push_back(cand);
      }
  std::sort(roots.begin(), roots.end());
  return roots;
}

Rational simplest_between(Rational lo, Rational hi) {
  if (lo > hi) std::swap(lo, hi);
  // integer inside?
  Integer fl;
  mpz_fdiv_q(fl.get_mpz_t(), lo.get_num_mpz_t(), lo.get_den_mpz_t());
  if (Rational(fl) == lo) return lo;
  Integer cand = fl + 1;
  if (Rational(cand) <= hi) {
    // nearest integer to zero within range
    if (sgn(lo) <= 0 && sgn(hi) >= 0) return 0;
    if (sgn(lo) > 0) return Rational(cand);
    Integer ceil_hi;
    mpz_fdiv_q(ceil_hi.get_mpz_t(), hi.get_num_mpz_t(), hi.get_den_mpz_t());
    return Rational(ceil_hi);
  }
  // lo and hi share the integer part fl; recurse on reciprocals of fractional parts
  Rational a = lo - fl, b = hi - fl;
  if (sgn(a) == 0) return Rational(fl);
  Rational inner = simplest_between(1 / b, 1 / a);
  return Rational(fl) + 1 / inner;
}

std::vector<Integer> primitive_integer(const std::vector<Rational>& v) {
  Integer lcm = 1;
  for (const auto& c : v) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> out;
  Integer g = 0;
  for (const auto& c : v) {
    out.push_back(Integer(c * lcm));
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out.back().get_mpz_t());
  }
  if (g == 0) return out;
  int sign = 0;
  for (const auto& x : out)
    if (sgn(x) != 0) {
      sign = sgn(x);
      break;
    }
  for (auto& x : out) x = x / g * sign;
  return out;
}

}  // namespace bricklab
