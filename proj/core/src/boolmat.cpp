#include "boolrank/boolmat.hpp"

#include <bit>
#include <fstream>
#include <istream>
#include <set>
#include <sstream>

namespace boolrank {

namespace {

void check_dims(int n_rows, int n_cols) {
    if (n_rows <= 0 || n_cols <= 0) {
        throw FormatError("matrix dimensions must be positive");
    }
    if (n_rows > kMaxDim || n_cols > kMaxDim) {
        throw CapacityError("matrix exceeds the " + std::to_string(kMaxDim) + "x" +
                            std::to_string(kMaxDim) + " solver capacity");
    }
}

void check_label_list(const std::vector<std::string>& labels, int expected, const char* what) {
    if (static_cast<int>(labels.size()) != expected) {
        throw FormatError(std::string(what) + " label count does not match dimension");
    }
    std::set<std::string> seen(labels.begin(), labels.end());
    if (static_cast<int>(seen.size()) != expected) {
        throw FormatError(std::string(what) + " labels contain duplicates");
    }
}

} // namespace

BooleanMatrix::BooleanMatrix(int n_rows, int n_cols) : n_rows_(n_rows), n_cols_(n_cols) {
    check_dims(n_rows, n_cols);
    words_.assign(static_cast<std::size_t>(n_rows), 0);
}

BooleanMatrix BooleanMatrix::identity(int n) {
    BooleanMatrix m(n, n);
    for (int i = 0; i < n; ++i) {
        m.set(i, i, true);
    }
    return m;
}

BooleanMatrix BooleanMatrix::from_rows(const std::vector<std::string>& rows) {
    std::string text;
    for (const auto& r : rows) {
        text += r;
        text += '\n';
    }
    return parse_matrix(text);
}

void BooleanMatrix::set(int r, int c, bool value) {
    if (r < 0 || r >= n_rows_ || c < 0 || c >= n_cols_) {
        throw FormatError("matrix index out of range");
    }
    const std::uint64_t bit = std::uint64_t{1} << c;
    if (value) {
        words_[static_cast<std::size_t>(r)] |= bit;
    } else {
        words_[static_cast<std::size_t>(r)] &= ~bit;
    }
}

void BooleanMatrix::set_labels(std::vector<std::string> row_labels,
                               std::vector<std::string> col_labels) {
    check_label_list(row_labels, n_rows_, "row");
    check_label_list(col_labels, n_cols_, "column");
    row_labels_ = std::move(row_labels);
    col_labels_ = std::move(col_labels);
}

std::uint64_t BooleanMatrix::count_ones() const {
    std::uint64_t total = 0;
    for (std::uint64_t w : words_) {
        total += static_cast<std::uint64_t>(std::popcount(w));
    }
    return total;
}

bool BooleanMatrix::is_zero() const {
    for (std::uint64_t w : words_) {
        if (w != 0) return false;
    }
    return true;
}

BooleanMatrix parse_matrix(std::istream& in) {
    std::vector<std::string> data_lines;
    bool have_header = false;
    int header_rows = 0;
    int header_cols = 0;

    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty() || line[0] == '#') {
            continue;
        }
        if (line.rfind("rows ", 0) == 0) {
            if (have_header || !data_lines.empty()) {
                throw FormatError("matrix header must appear once, before the data");
            }
            std::istringstream hs(line);
            std::string kw_rows, kw_cols;
            if (!(hs >> kw_rows >> header_rows >> kw_cols >> header_cols) || kw_cols != "cols") {
                throw FormatError("malformed matrix header: " + line);
            }
            have_header = true;
            continue;
        }
        data_lines.push_back(line);
    }

    if (data_lines.empty()) {
        throw FormatError("empty matrix input");
    }
    const std::size_t width = data_lines.front().size();
    for (const auto& row : data_lines) {
        if (row.size() != width) {
            throw FormatError("ragged matrix row: \"" + row + "\"");
        }
        for (char ch : row) {
            if (ch != '0' && ch != '1') {
                throw FormatError(std::string("invalid matrix character '") + ch + "'");
            }
        }
    }
    if (have_header && (header_rows != static_cast<int>(data_lines.size()) ||
                        header_cols != static_cast<int>(width))) {
        throw FormatError("matrix header disagrees with the data");
    }

    check_dims(static_cast<int>(data_lines.size()), static_cast<int>(width));
    BooleanMatrix m(static_cast<int>(data_lines.size()), static_cast<int>(width));
    for (int r = 0; r < m.n_rows(); ++r) {
        for (int c = 0; c < m.n_cols(); ++c) {
            if (data_lines[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] == '1') {
                m.set(r, c, true);
            }
        }
    }
    return m;
}

BooleanMatrix parse_matrix(const std::string& text) {
    std::istringstream in(text);
    return parse_matrix(in);
}

BooleanMatrix parse_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw FormatError("cannot open matrix file: " + path);
    }
    return parse_matrix(in);
}

std::string serialize_matrix(const BooleanMatrix& m) {
    std::string out;
    if (!m.row_labels().empty()) {
        out += "# rows:";
        for (const auto& l : m.row_labels()) {
            out += ' ';
            out += l;
        }
        out += '\n';
    }
    if (!m.col_labels().empty()) {
        out += "# cols:";
        for (const auto& l : m.col_labels()) {
            out += ' ';
            out += l;
        }
        out += '\n';
    }
    for (int r = 0; r < m.n_rows(); ++r) {
        for (int c = 0; c < m.n_cols(); ++c) {
            out += m.get(r, c) ? '1' : '0';
        }
        out += '\n';
    }
    return out;
}

namespace {

void check_index_list(const std::vector<int>& idx, int limit, const char* what) {
    if (idx.empty()) {
        throw FormatError(std::string("selector has no ") + what + " indices");
    }
    int prev = -1;
    for (int i : idx) {
        if (i <= prev) {
            throw FormatError(std::string("selector ") + what + " indices must be strictly increasing");
        }
        if (i < 0 || i >= limit) {
            throw FormatError(std::string("selector ") + what + " index out of range: " +
                              std::to_string(i));
        }
        prev = i;
    }
}

} // namespace

void validate_selector(const BooleanMatrix& m, const SubmatrixSelector& sel) {
    check_index_list(sel.rows, m.n_rows(), "row");
    check_index_list(sel.cols, m.n_cols(), "column");
}

BooleanMatrix extract_submatrix(const BooleanMatrix& m, const SubmatrixSelector& sel) {
    validate_selector(m, sel);
    BooleanMatrix out(static_cast<int>(sel.rows.size()), static_cast<int>(sel.cols.size()));
    for (int a = 0; a < out.n_rows(); ++a) {
        for (int b = 0; b < out.n_cols(); ++b) {
            out.set(a, b, m.get(sel.rows[static_cast<std::size_t>(a)],
                                sel.cols[static_cast<std::size_t>(b)]));
        }
    }
    if (!m.row_labels().empty() && !m.col_labels().empty()) {
        std::vector<std::string> rl, cl;
        for (int r : sel.rows) rl.push_back(m.row_labels()[static_cast<std::size_t>(r)]);
        for (int c : sel.cols) cl.push_back(m.col_labels()[static_cast<std::size_t>(c)]);
        out.set_labels(std::move(rl), std::move(cl));
    }
    return out;
}

} // namespace boolrank
