#pragma once

#include "supercoho/matrix.hpp"

#include <optional>
#include <unordered_map>
#include <vector>

namespace supercoho {

/// Incremental row-echelon form over the integers. Rows are stored
/// primitive (content 1, positive leading coefficient) and eliminated
/// fraction-free, so intermediate numbers stay bounded and the result
/// depends only on the input order.
class RowEchelon {
public:
    using IntEntry = std::pair<std::size_t, mpz_class>;
    using IntRow = std::vector<IntEntry>;

    explicit RowEchelon(std::size_t cols) : cols_(cols) {}

    /// Reduces `row` against the stored rows; stores it if it stays
    /// nonzero. Returns true when the rank grew.
    bool insert(const SparseVec& row);
    bool insert_int(IntRow row);

    std::size_t rank() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }

    /// Pivot columns in increasing order.
    std::vector<std::size_t> pivots() const;

    /// Back-substitutes to reduced row-echelon form. Rows are returned
    /// sorted by pivot column, scaled so the pivot is 1.
    std::vector<SparseVec> reduced_rows() const;

    /// True when `row` lies in the row space.
    bool contains(const SparseVec& row) const;

private:
    void reduce(IntRow& row) const;

    std::size_t cols_;
    std::vector<IntRow> rows_;
    std::unordered_map<std::size_t, std::size_t> pivot_row_;
};

std::size_t rank(const Mat& m);

/// Columns of the result form a basis of ker m. The basis is the one
/// read off the reduced row-echelon form: one vector per free column,
/// with a 1 in that column.
Mat kernel(const Mat& m);
std::vector<Vec> kernel_basis(const Mat& m);

/// Some x with m x = b, or nullopt when the system is inconsistent.
std::optional<Vec> solve(const Mat& m, const Vec& b);
std::optional<SparseVec> solve(const Mat& m, const SparseVec& b);

/// Basis of span(a) ∩ span(b).
std::vector<Vec> intersect(const std::vector<Vec>& a, const std::vector<Vec>& b);

/// Lexicographically first set of linearly independent columns.
std::vector<std::size_t> pivot_columns(const Mat& m);

/// Columns of m restricted to a basis of its column space.
Mat column_basis(const Mat& m);

Mat inverse(const Mat& m);

/// Coordinates with respect to a fixed basis (the columns of a full
/// column rank matrix). Exact membership is always verified.
class ColumnSpace {
public:
    ColumnSpace() = default;
    explicit ColumnSpace(Mat basis);

    const Mat& basis() const { return basis_; }
    std::size_t dim() const { return basis_.cols(); }
    std::size_t ambient() const { return basis_.rows(); }

    std::optional<SparseVec> coordinates(const SparseVec& v) const;
    /// As `coordinates`, but throws when v is outside the span.
    SparseVec coordinates_or_throw(const SparseVec& v) const;
    bool contains(const SparseVec& v) const { return coordinates(v).has_value(); }

private:
    Mat basis_;
    std::vector<std::size_t> pivot_rows_;
    Mat local_inverse_;
};

}  // namespace supercoho
