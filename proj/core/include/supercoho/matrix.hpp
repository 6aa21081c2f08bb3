#pragma once

#include "supercoho/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

namespace supercoho {

/// Dense rational vector; used at API boundaries.
using Vec = std::vector<Rat>;

/// Sparse rational vector: (index, value) pairs, strictly increasing
/// indices, no stored zeros.
class SparseVec {
public:
    using Entry = std::pair<std::size_t, Rat>;

    SparseVec() = default;
    static SparseVec from_dense(const Vec& v);
    static SparseVec unit(std::size_t i, Rat value = Rat(1));

    /// Builds from unsorted entries; duplicates are summed, zeros dropped.
    static SparseVec from_entries(std::vector<Entry> entries);

    const std::vector<Entry>& entries() const& { return entries_; }
    std::vector<Entry> entries() && { return std::move(entries_); }
    std::size_t nnz() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }
    Rat get(std::size_t i) const;
    Vec to_dense(std::size_t n) const;

    /// this += c * other
    void axpy(const Rat& c, const SparseVec& other);
    void scale(const Rat& c);
    SparseVec scaled(const Rat& c) const { SparseVec r = *this; r.scale(c); return r; }

    /// Appends an entry with index larger than every stored one.
    void push_back(std::size_t i, Rat v);

    friend bool operator==(const SparseVec&, const SparseVec&) = default;
    friend SparseVec operator+(const SparseVec& a, const SparseVec& b) { SparseVec r = a; r.axpy(Rat(1), b); return r; }
    friend SparseVec operator-(const SparseVec& a, const SparseVec& b) { SparseVec r = a; r.axpy(Rat(-1), b); return r; }

private:
    std::vector<Entry> entries_;
};

Rat dot(const SparseVec& a, const SparseVec& b);

/// Sparse rational matrix stored by rows.
class Mat {
public:
    Mat() = default;
    Mat(std::size_t rows, std::size_t cols);
    static Mat identity(std::size_t n);
    static Mat from_dense(const std::vector<Vec>& rows);
    static Mat from_dense(std::initializer_list<std::initializer_list<long>> rows);
    /// Columns given as sparse vectors of length `rows`.
    static Mat from_columns(std::size_t rows, const std::vector<SparseVec>& cols);
    static Mat from_rows(std::size_t cols, std::vector<SparseVec> rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t nnz() const;
    bool is_zero() const { return nnz() == 0; }

    Rat at(std::size_t i, std::size_t j) const;
    void set(std::size_t i, std::size_t j, const Rat& v);
    void add_to(std::size_t i, std::size_t j, const Rat& v);

    const SparseVec& row(std::size_t i) const { return data_[i]; }
    void set_row(std::size_t i, SparseVec r);
    SparseVec column(std::size_t j) const;
    std::vector<SparseVec> columns() const;

    Mat transpose() const;
    Mat select_columns(const std::vector<std::size_t>& idx) const;
    Mat select_rows(const std::vector<std::size_t>& idx) const;
    std::vector<Vec> to_dense() const;

    SparseVec apply(const SparseVec& x) const;
    Vec apply(const Vec& x) const;

    friend Mat operator*(const Mat& a, const Mat& b);
    friend Mat operator+(const Mat& a, const Mat& b);
    friend Mat operator-(const Mat& a, const Mat& b);
    Mat scaled(const Rat& c) const;
    friend bool operator==(const Mat&, const Mat&) = default;

    /// Kronecker product.
    static Mat kron(const Mat& a, const Mat& b);
    static Mat hstack(const Mat& a, const Mat& b);
    static Mat vstack(const Mat& a, const Mat& b);

private:
    void check(std::size_t i, std::size_t j) const;

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<SparseVec> data_;
};

}  // namespace supercoho
