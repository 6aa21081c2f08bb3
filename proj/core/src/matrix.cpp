#include "supercoho/matrix.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

namespace supercoho {

SparseVec SparseVec::from_dense(const Vec& v) {
    SparseVec r;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) r.entries_.emplace_back(i, v[i]);
    return r;
}

SparseVec SparseVec::unit(std::size_t i, Rat value) {
    SparseVec r;
    if (!value.is_zero()) r.entries_.emplace_back(i, std::move(value));
    return r;
}

SparseVec SparseVec::from_entries(std::vector<Entry> entries) {
    std::sort(entries.begin(), entries.end(),
              [](const Entry& a, const Entry& b) { return a.first < b.first; });
    SparseVec r;
    for (auto& [i, v] : entries) {
        if (!r.entries_.empty() && r.entries_.back().first == i)
            r.entries_.back().second += v;
        else
            r.entries_.emplace_back(i, std::move(v));
    }
    std::erase_if(r.entries_, [](const Entry& e) { return e.second.is_zero(); });
    return r;
}

Rat SparseVec::get(std::size_t i) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), i,
                               [](const Entry& e, std::size_t k) { return e.first < k; });
    if (it != entries_.end() && it->first == i) return it->second;
    return Rat(0);
}

Vec SparseVec::to_dense(std::size_t n) const {
    Vec v(n);
    for (const auto& [i, x] : entries_) {
        if (i >= n) throw std::out_of_range("SparseVec::to_dense: index out of range");
        v[i] = x;
    }
    return v;
}

void SparseVec::axpy(const Rat& c, const SparseVec& other) {
    if (c.is_zero() || other.empty()) return;
    std::vector<Entry> out;
    out.reserve(entries_.size() + other.entries_.size());
    auto a = entries_.begin();
    auto b = other.entries_.begin();
    while (a != entries_.end() || b != other.entries_.end()) {
        if (b == other.entries_.end() || (a != entries_.end() && a->first < b->first)) {
            out.push_back(std::move(*a));
            ++a;
        } else if (a == entries_.end() || b->first < a->first) {
            out.emplace_back(b->first, c * b->second);
            ++b;
        } else {
            Rat s = a->second + c * b->second;
            if (!s.is_zero()) out.emplace_back(a->first, std::move(s));
            ++a;
            ++b;
        }
    }
    entries_ = std::move(out);
}

void SparseVec::scale(const Rat& c) {
    if (c.is_zero()) {
        entries_.clear();
        return;
    }
    for (auto& e : entries_) e.second *= c;
}

void SparseVec::push_back(std::size_t i, Rat v) {
    if (!entries_.empty() && entries_.back().first >= i)
        throw std::logic_error("SparseVec::push_back: indices must increase");
    if (!v.is_zero()) entries_.emplace_back(i, std::move(v));
}

Rat dot(const SparseVec& a, const SparseVec& b) {
    Rat s;
    auto x = a.entries().begin();
    auto y = b.entries().begin();
    while (x != a.entries().end() && y != b.entries().end()) {
        if (x->first < y->first) ++x;
        else if (y->first < x->first) ++y;
        else {
            s += x->second * y->second;
            ++x;
            ++y;
        }
    }
    return s;
}

Mat::Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows) {}

Mat Mat::identity(std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.data_[i] = SparseVec::unit(i);
    return m;
}

Mat Mat::from_dense(const std::vector<Vec>& rows) {
    std::size_t c = rows.empty() ? 0 : rows.front().size();
    Mat m(rows.size(), c);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != c) throw std::invalid_argument("Mat::from_dense: ragged rows");
        m.data_[i] = SparseVec::from_dense(rows[i]);
    }
    return m;
}

Mat Mat::from_dense(std::initializer_list<std::initializer_list<long>> rows) {
    std::vector<Vec> d;
    for (const auto& r : rows) {
        Vec v;
        for (long x : r) v.emplace_back(x);
        d.push_back(std::move(v));
    }
    return from_dense(d);
}

Mat Mat::from_columns(std::size_t rows, const std::vector<SparseVec>& cols) {
    Mat m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (const auto& [i, v] : cols[j].entries()) {
            if (i >= rows) throw std::out_of_range("Mat::from_columns: row index out of range");
            m.data_[i].push_back(j, v);
        }
    return m;
}

Mat Mat::from_rows(std::size_t cols, std::vector<SparseVec> rows) {
    Mat m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) m.set_row(i, std::move(rows[i]));
    return m;
}

std::size_t Mat::nnz() const {
    std::size_t n = 0;
    for (const auto& r : data_) n += r.nnz();
    return n;
}

void Mat::check(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_)
        throw std::out_of_range("Mat: index (" + std::to_string(i) + "," + std::to_string(j) + ") out of range");
}

Rat Mat::at(std::size_t i, std::size_t j) const {
    check(i, j);
    return data_[i].get(j);
}

void Mat::set(std::size_t i, std::size_t j, const Rat& v) {
    check(i, j);
    Rat cur = data_[i].get(j);
    data_[i].axpy(Rat(1), SparseVec::unit(j, v - cur));
}

void Mat::add_to(std::size_t i, std::size_t j, const Rat& v) {
    check(i, j);
    data_[i].axpy(Rat(1), SparseVec::unit(j, v));
}

void Mat::set_row(std::size_t i, SparseVec r) {
    if (i >= rows_) throw std::out_of_range("Mat::set_row: row out of range");
    if (!r.empty() && r.entries().back().first >= cols_)
        throw std::out_of_range("Mat::set_row: column out of range");
    data_[i] = std::move(r);
}

SparseVec Mat::column(std::size_t j) const {
    if (j >= cols_) throw std::out_of_range("Mat::column: out of range");
    SparseVec c;
    for (std::size_t i = 0; i < rows_; ++i) {
        Rat v = data_[i].get(j);
        if (!v.is_zero()) c.push_back(i, std::move(v));
    }
    return c;
}

std::vector<SparseVec> Mat::columns() const {
    std::vector<SparseVec> cols(cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (const auto& [j, v] : data_[i].entries()) cols[j].push_back(i, v);
    return cols;
}

Mat Mat::transpose() const {
    Mat t(cols_, rows_);
    auto cols = columns();
    for (std::size_t j = 0; j < cols_; ++j) t.data_[j] = std::move(cols[j]);
    return t;
}

Mat Mat::select_columns(const std::vector<std::size_t>& idx) const {
    auto cols = columns();
    std::vector<SparseVec> picked;
    picked.reserve(idx.size());
    for (auto j : idx) {
        if (j >= cols_) throw std::out_of_range("Mat::select_columns: out of range");
        picked.push_back(cols[j]);
    }
    return from_columns(rows_, picked);
}

Mat Mat::select_rows(const std::vector<std::size_t>& idx) const {
    Mat m(idx.size(), cols_);
    for (std::size_t k = 0; k < idx.size(); ++k) {
        if (idx[k] >= rows_) throw std::out_of_range("Mat::select_rows: out of range");
        m.data_[k] = data_[idx[k]];
    }
    return m;
}

std::vector<Vec> Mat::to_dense() const {
    std::vector<Vec> d;
    d.reserve(rows_);
    for (const auto& r : data_) d.push_back(r.to_dense(cols_));
    return d;
}

SparseVec Mat::apply(const SparseVec& x) const {
    if (!x.empty() && x.entries().back().first >= cols_)
        throw std::invalid_argument("Mat::apply: vector length mismatch");
    SparseVec y;
    for (std::size_t i = 0; i < rows_; ++i) {
        Rat s = dot(data_[i], x);
        if (!s.is_zero()) y.push_back(i, std::move(s));
    }
    return y;
}

Vec Mat::apply(const Vec& x) const {
    if (x.size() != cols_) throw std::invalid_argument("Mat::apply: vector length mismatch");
    Vec y(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (const auto& [j, v] : data_[i].entries()) y[i] += v * x[j];
    return y;
}

Mat operator*(const Mat& a, const Mat& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("Mat multiply: dimension mismatch");
    Mat c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        std::map<std::size_t, Rat> acc;
        for (const auto& [k, v] : a.data_[i].entries())
            for (const auto& [j, w] : b.data_[k].entries()) acc[j] += v * w;
        SparseVec r;
        for (auto& [j, v] : acc)
            if (!v.is_zero()) r.push_back(j, std::move(v));
        c.data_[i] = std::move(r);
    }
    return c;
}

Mat operator+(const Mat& a, const Mat& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("Mat add: dimension mismatch");
    Mat c = a;
    for (std::size_t i = 0; i < a.rows_; ++i) c.data_[i].axpy(Rat(1), b.data_[i]);
    return c;
}

Mat operator-(const Mat& a, const Mat& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("Mat subtract: dimension mismatch");
    Mat c = a;
    for (std::size_t i = 0; i < a.rows_; ++i) c.data_[i].axpy(Rat(-1), b.data_[i]);
    return c;
}

Mat Mat::scaled(const Rat& c) const {
    Mat m = *this;
    for (auto& r : m.data_) r.scale(c);
    return m;
}

Mat Mat::kron(const Mat& a, const Mat& b) {
    Mat k(a.rows_ * b.rows_, a.cols_ * b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t p = 0; p < b.rows_; ++p) {
            SparseVec r;
            for (const auto& [j, v] : a.data_[i].entries())
                for (const auto& [q, w] : b.data_[p].entries()) r.push_back(j * b.cols_ + q, v * w);
            k.data_[i * b.rows_ + p] = std::move(r);
        }
    return k;
}

Mat Mat::hstack(const Mat& a, const Mat& b) {
    if (a.rows_ != b.rows_) throw std::invalid_argument("Mat::hstack: row mismatch");
    Mat m(a.rows_, a.cols_ + b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        SparseVec r = a.data_[i];
        for (const auto& [j, v] : b.data_[i].entries()) r.push_back(a.cols_ + j, v);
        m.data_[i] = std::move(r);
    }
    return m;
}

Mat Mat::vstack(const Mat& a, const Mat& b) {
    if (a.cols_ != b.cols_) throw std::invalid_argument("Mat::vstack: column mismatch");
    Mat m(a.rows_ + b.rows_, a.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) m.data_[i] = a.data_[i];
    for (std::size_t i = 0; i < b.rows_; ++i) m.data_[a.rows_ + i] = b.data_[i];
    return m;
}

}  // namespace supercoho
