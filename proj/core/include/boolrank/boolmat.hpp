#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "boolrank/errors.hpp"

namespace boolrank {

// Exact solvers pack one row per machine word, so 64x64 is the hard cap.
// Anything larger is a CapacityError, never a silent truncation.
inline constexpr int kMaxDim = 64;

// A (row, col) entry address, 0-based.
struct Position {
    int row = 0;
    int col = 0;

    friend auto operator<=>(const Position&, const Position&) = default;
};

// Strictly increasing row/col index lists describing a submatrix.
struct SubmatrixSelector {
    std::vector<int> rows;
    std::vector<int> cols;

    bool is_square() const { return rows.size() == cols.size(); }
    int size() const { return static_cast<int>(rows.size()); }

    friend bool operator==(const SubmatrixSelector&, const SubmatrixSelector&) = default;
};

// Rectangular 0/1 matrix with optional row/column labels. Rows are stored as
// bit-packed words (bit j of row_word(i) is entry (i,j)). Instances are
// treated as immutable once built; every operation on them is pure.
class BooleanMatrix {
public:
    BooleanMatrix(int n_rows, int n_cols);

    static BooleanMatrix identity(int n);
    // Convenience builder from literal rows like {"110", "011"}.
    static BooleanMatrix from_rows(const std::vector<std::string>& rows);

    int n_rows() const { return n_rows_; }
    int n_cols() const { return n_cols_; }
    bool is_square() const { return n_rows_ == n_cols_; }

    bool get(int r, int c) const { return (words_[static_cast<std::size_t>(r)] >> c) & 1U; }
    void set(int r, int c, bool value);

    // Row as a word with bits 0..n_cols()-1 populated.
    std::uint64_t row_word(int r) const { return words_[static_cast<std::size_t>(r)]; }

    // Labels are reporting-only; empty vector means "no labels".
    const std::vector<std::string>& row_labels() const { return row_labels_; }
    const std::vector<std::string>& col_labels() const { return col_labels_; }
    void set_labels(std::vector<std::string> row_labels, std::vector<std::string> col_labels);

    std::uint64_t count_ones() const;
    bool is_zero() const;

    // Shape and entries only; labels never affect comparison.
    friend bool operator==(const BooleanMatrix& a, const BooleanMatrix& b) {
        return a.n_rows_ == b.n_rows_ && a.n_cols_ == b.n_cols_ && a.words_ == b.words_;
    }

private:
    int n_rows_;
    int n_cols_;
    std::vector<std::uint64_t> words_;
    std::vector<std::string> row_labels_;
    std::vector<std::string> col_labels_;
};

// Text format: lines of '0'/'1' characters, all the same length. Lines
// starting with '#' are comments, blank lines are skipped, and an optional
// "rows <r> cols <c>" header is accepted (and checked) before the data.
BooleanMatrix parse_matrix(std::istream& in);
BooleanMatrix parse_matrix(const std::string& text);
BooleanMatrix parse_matrix_file(const std::string& path);

// Inverse of parse_matrix up to labels: labels are emitted as '#' comment
// lines, which the parser ignores, so parse(serialize(m)) == m.
std::string serialize_matrix(const BooleanMatrix& m);

// Throws FormatError unless indices are strictly increasing and in range.
void validate_selector(const BooleanMatrix& m, const SubmatrixSelector& sel);

BooleanMatrix extract_submatrix(const BooleanMatrix& m, const SubmatrixSelector& sel);

} // namespace boolrank
