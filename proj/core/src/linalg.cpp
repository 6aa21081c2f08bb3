#include "supercoho/linalg.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace supercoho {

namespace {

using IntRow = RowEchelon::IntRow;

void make_primitive(IntRow& row) {
    if (row.empty()) return;
    mpz_class g = 0;
    for (const auto& e : row) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e.second.get_mpz_t());
        if (g == 1) break;
    }
    if (row.front().second < 0) g = -g;
    if (g != 1)
        for (auto& e : row) mpz_divexact(e.second.get_mpz_t(), e.second.get_mpz_t(), g.get_mpz_t());
}

IntRow to_int_row(const SparseVec& v) {
    mpz_class l = 1;
    for (const auto& [i, x] : v.entries()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.raw().get_den_mpz_t());
    IntRow r;
    r.reserve(v.nnz());
    for (const auto& [i, x] : v.entries()) r.emplace_back(i, x.raw().get_num() * (l / x.raw().get_den()));
    return r;
}

// row <- a*row - b*pivot where a = lead(pivot), b = row[col]
void eliminate(IntRow& row, const IntRow& pivot, const mpz_class& row_coeff) {
    const mpz_class& pivot_coeff = pivot.front().second;
    mpz_class g = gcd(pivot_coeff, row_coeff);
    mpz_class a = pivot_coeff / g;
    mpz_class b = row_coeff / g;
    IntRow out;
    out.reserve(row.size() + pivot.size());
    auto x = row.begin();
    auto y = pivot.begin();
    mpz_class t;
    while (x != row.end() || y != pivot.end()) {
        if (y == pivot.end() || (x != row.end() && x->first < y->first)) {
            out.emplace_back(x->first, a * x->second);
            ++x;
        } else if (x == row.end() || y->first < x->first) {
            out.emplace_back(y->first, -b * y->second);
            ++y;
        } else {
            t = a * x->second - b * y->second;
            if (t != 0) out.emplace_back(x->first, t);
            ++x;
            ++y;
        }
    }
    row = std::move(out);
    make_primitive(row);
}

}  // namespace

void RowEchelon::reduce(IntRow& row) const {
    while (!row.empty()) {
        auto it = pivot_row_.find(row.front().first);
        if (it == pivot_row_.end()) return;
        mpz_class coeff = row.front().second;
        eliminate(row, rows_[it->second], coeff);
    }
}

bool RowEchelon::insert(const SparseVec& row) {
    if (!row.empty() && row.entries().back().first >= cols_)
        throw std::out_of_range("RowEchelon::insert: column out of range");
    return insert_int(to_int_row(row));
}

bool RowEchelon::insert_int(IntRow row) {
    make_primitive(row);
    reduce(row);
    if (row.empty()) return false;
    pivot_row_.emplace(row.front().first, rows_.size());
    rows_.push_back(std::move(row));
    return true;
}

bool RowEchelon::contains(const SparseVec& v) const {
    IntRow r = to_int_row(v);
    make_primitive(r);
    reduce(r);
    return r.empty();
}

std::vector<std::size_t> RowEchelon::pivots() const {
    std::vector<std::size_t> p;
    p.reserve(rows_.size());
    for (const auto& r : rows_) p.push_back(r.front().first);
    std::sort(p.begin(), p.end());
    return p;
}

std::vector<SparseVec> RowEchelon::reduced_rows() const {
    std::vector<std::size_t> order(rows_.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return rows_[a].front().first > rows_[b].front().first; });

    std::map<std::size_t, IntRow> done;  // pivot column -> fully reduced row
    for (auto idx : order) {
        IntRow r = rows_[idx];
        std::size_t lead = r.front().first;
        // Pivot columns to the right of the lead, in increasing order.
        for (auto it = done.upper_bound(lead); it != done.end(); ++it) {
            auto pos = std::lower_bound(r.begin(), r.end(), it->first,
                                        [](const auto& e, std::size_t k) { return e.first < k; });
            if (pos == r.end() || pos->first != it->first) continue;
            mpz_class coeff = pos->second;
            // A reduced row has no entries in other pivot columns.
            eliminate(r, it->second, coeff);
        }
        done.emplace(lead, std::move(r));
    }

    std::vector<SparseVec> out;
    out.reserve(done.size());
    for (auto& [lead, r] : done) {
        Rat inv = Rat(mpz_class(1), r.front().second);
        SparseVec v;
        for (auto& [j, x] : r) v.push_back(j, Rat(x) * inv);
        out.push_back(std::move(v));
    }
    return out;
}

namespace {

RowEchelon echelon_of(const Mat& m) {
    RowEchelon e(m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) e.insert(m.row(i));
    return e;
}

}  // namespace

std::size_t rank(const Mat& m) {
    // Row rank equals column rank; eliminate along the shorter side.
    if (m.rows() > m.cols() * 2 && m.cols() > 0) return echelon_of(m.transpose()).rank();
    return echelon_of(m).rank();
}

Mat kernel(const Mat& m) {
    auto e = echelon_of(m);
    auto rr = e.reduced_rows();
    std::vector<bool> is_pivot(m.cols(), false);
    for (const auto& r : rr) is_pivot[r.entries().front().first] = true;

    // Column f of the free part: x_f = 1, x_pivot(r) = -r[f].
    std::vector<std::size_t> free_cols;
    for (std::size_t j = 0; j < m.cols(); ++j)
        if (!is_pivot[j]) free_cols.push_back(j);
    std::unordered_map<std::size_t, std::size_t> free_pos;
    for (std::size_t k = 0; k < free_cols.size(); ++k) free_pos[free_cols[k]] = k;

    std::vector<std::vector<SparseVec::Entry>> cols(free_cols.size());
    for (std::size_t k = 0; k < free_cols.size(); ++k) cols[k].emplace_back(free_cols[k], Rat(1));
    for (const auto& r : rr) {
        std::size_t lead = r.entries().front().first;
        for (std::size_t t = 1; t < r.entries().size(); ++t) {
            const auto& [j, v] = r.entries()[t];
            cols[free_pos.at(j)].emplace_back(lead, -v);
        }
    }
    std::vector<SparseVec> basis;
    basis.reserve(cols.size());
    for (auto& c : cols) basis.push_back(SparseVec::from_entries(std::move(c)));
    return Mat::from_columns(m.cols(), basis);
}

std::vector<Vec> kernel_basis(const Mat& m) {
    Mat k = kernel(m);
    std::vector<Vec> out;
    for (const auto& c : k.columns()) out.push_back(c.to_dense(m.cols()));
    return out;
}

std::optional<SparseVec> solve(const Mat& m, const SparseVec& b) {
    if (!b.empty() && b.entries().back().first >= m.rows())
        throw std::invalid_argument("solve: right-hand side length mismatch");
    const std::size_t n = m.cols();
    RowEchelon e(n + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        SparseVec r = m.row(i);
        Rat bi = b.get(i);
        if (!bi.is_zero()) r.push_back(n, bi);
        e.insert(r);
    }
    for (auto p : e.pivots())
        if (p == n) return std::nullopt;
    SparseVec x;
    std::vector<SparseVec::Entry> entries;
    for (const auto& r : e.reduced_rows()) {
        Rat v = r.get(n);
        if (!v.is_zero()) entries.emplace_back(r.entries().front().first, v);
    }
    return SparseVec::from_entries(std::move(entries));
}

std::optional<Vec> solve(const Mat& m, const Vec& b) {
    if (b.size() != m.rows()) throw std::invalid_argument("solve: right-hand side length mismatch");
    auto x = solve(m, SparseVec::from_dense(b));
    if (!x) return std::nullopt;
    return x->to_dense(m.cols());
}

std::vector<std::size_t> pivot_columns(const Mat& m) { return echelon_of(m).pivots(); }

Mat column_basis(const Mat& m) { return m.select_columns(pivot_columns(m)); }

std::vector<Vec> intersect(const std::vector<Vec>& a, const std::vector<Vec>& b) {
    if (a.empty() || b.empty()) return {};
    const std::size_t n = a.front().size();
    for (const auto& v : a)
        if (v.size() != n) throw std::invalid_argument("intersect: vector length mismatch");
    for (const auto& v : b)
        if (v.size() != n) throw std::invalid_argument("intersect: vector length mismatch");

    std::vector<SparseVec> cols;
    for (const auto& v : a) cols.push_back(SparseVec::from_dense(v));
    for (const auto& v : b) cols.push_back(SparseVec::from_dense(v).scaled(Rat(-1)));
    Mat stacked = Mat::from_columns(n, cols);
    Mat k = kernel(stacked);

    Mat amat = Mat::from_columns(n, std::vector<SparseVec>(cols.begin(), cols.begin() + static_cast<long>(a.size())));
    std::vector<std::size_t> top(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) top[i] = i;
    Mat image = amat * k.select_rows(top);
    Mat basis = column_basis(image);
    std::vector<Vec> out;
    for (const auto& c : basis.columns()) out.push_back(c.to_dense(n));
    return out;
}

Mat inverse(const Mat& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse: matrix not square");
    const std::size_t n = m.rows();
    if (n == 0) return Mat(0, 0);
    RowEchelon e(2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        SparseVec r = m.row(i);
        r.push_back(n + i, Rat(1));
        e.insert(r);
    }
    auto rr = e.reduced_rows();
    if (rr.size() != n || rr.back().entries().front().first != n - 1)
        throw std::domain_error("inverse: matrix is singular");
    Mat inv(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        SparseVec row;
        for (const auto& [j, v] : rr[i].entries())
            if (j >= n) row.push_back(j - n, v);
        inv.set_row(i, std::move(row));
    }
    return inv;
}

ColumnSpace::ColumnSpace(Mat basis) : basis_(std::move(basis)) {
    pivot_rows_ = pivot_columns(basis_.transpose());
    if (pivot_rows_.size() != basis_.cols())
        throw std::invalid_argument("ColumnSpace: basis columns are linearly dependent");
    local_inverse_ = inverse(basis_.select_rows(pivot_rows_));
}

std::optional<SparseVec> ColumnSpace::coordinates(const SparseVec& v) const {
    if (!v.empty() && v.entries().back().first >= basis_.rows())
        throw std::invalid_argument("ColumnSpace::coordinates: length mismatch");
    SparseVec local;
    for (std::size_t k = 0; k < pivot_rows_.size(); ++k) {
        Rat x = v.get(pivot_rows_[k]);
        if (!x.is_zero()) local.push_back(k, std::move(x));
    }
    SparseVec c = local_inverse_.apply(local);
    if (basis_.apply(c) != v) return std::nullopt;
    return c;
}

SparseVec ColumnSpace::coordinates_or_throw(const SparseVec& v) const {
    auto c = coordinates(v);
    if (!c) throw std::domain_error("ColumnSpace: vector outside the span");
    return *c;
}

}  // namespace supercoho
