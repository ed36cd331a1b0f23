#pragma once

// Growth-diagram RSK: the local bijection from the correspondence module,
// applied cell by cell over a grid, turns non-negative integer matrices
// (binary matrices for family U') into pairs of paths — an up-path and a
// down-path ending at a common shape tree — and back.

#include <cstddef>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "pbt/correspondence.hpp"
#include "pbt/graded_graph.hpp"
#include "pbt/labelling.hpp"
#include "pbt/tree.hpp"

namespace pbt {

struct binary_violation : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct shape_mismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct cell_failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// p columns by q rows of non-negative integers; entry (i, j) is column i,
// row j, both 1-based.
class Matrix {
public:
    Matrix(std::size_t p, std::size_t q) : p_(p), q_(q), rows_(q, std::vector<int>(p, 0)) {}

    std::size_t columns() const { return p_; }
    std::size_t rows() const { return q_; }

    int& at(std::size_t i, std::size_t j) { return rows_[j - 1][i - 1]; }
    int at(std::size_t i, std::size_t j) const { return rows_[j - 1][i - 1]; }

    int column_sum(std::size_t i) const {
        int s = 0;
        for (std::size_t j = 1; j <= q_; ++j) s += at(i, j);
        return s;
    }
    int row_sum(std::size_t j) const {
        int s = 0;
        for (std::size_t i = 1; i <= p_; ++i) s += at(i, j);
        return s;
    }
    int total() const {
        int s = 0;
        for (std::size_t j = 1; j <= q_; ++j) s += row_sum(j);
        return s;
    }

    // One CSV line per row, comma-separated non-negative integers; every row
    // must have the same number of entries.
    static Matrix parse_csv(const std::string& text) {
        std::vector<std::vector<int>> rows;
        std::istringstream lines(text);
        std::string line;
        while (std::getline(lines, line)) {
            if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
            std::vector<int> row;
            std::istringstream fields(line);
            std::string field;
            while (std::getline(fields, field, ',')) {
                std::size_t used = 0;
                int v;
                try {
                    v = std::stoi(field, &used);
                } catch (const std::exception&) {
                    throw std::invalid_argument("matrix CSV: bad entry '" + field + "'");
                }
                if (field.find_first_not_of(" \t\r", used) != std::string::npos || v < 0)
                    throw std::invalid_argument("matrix CSV: bad entry '" + field + "'");
                row.push_back(v);
            }
            if (row.empty()) throw std::invalid_argument("matrix CSV: empty row");
            if (!rows.empty() && row.size() != rows.front().size())
                throw std::invalid_argument("matrix CSV: ragged rows");
            rows.push_back(std::move(row));
        }
        Matrix m(rows.empty() ? 0 : rows.front().size(), rows.size());
        m.rows_ = std::move(rows);
        return m;
    }

    std::string to_csv() const {
        std::string out;
        for (const auto& row : rows_) {
            for (std::size_t i = 0; i < row.size(); ++i) {
                if (i) out += ',';
                out += std::to_string(row[i]);
            }
            out += '\n';
        }
        return out;
    }

    friend bool operator==(const Matrix&, const Matrix&) = default;
    friend auto operator<=>(const Matrix&, const Matrix&) = default;

private:
    std::size_t p_, q_;
    std::vector<std::vector<int>> rows_;
};

// Grid of trees tau_{i,j}, 0 <= i <= p and 0 <= j <= q, with empty boundary
// row and column; horizontal steps are up-edges and vertical steps are
// detachment edges (smaller tree below).
class GrowthDiagram {
public:
    GrowthDiagram(std::size_t p, std::size_t q)
        : p_(p), q_(q), cells_((p + 1) * (q + 1), Tree()) {}

    std::size_t columns() const { return p_; }
    std::size_t rows() const { return q_; }
    Tree& at(std::size_t i, std::size_t j) { return cells_[i * (q_ + 1) + j]; }
    const Tree& at(std::size_t i, std::size_t j) const { return cells_[i * (q_ + 1) + j]; }

    friend bool operator==(const GrowthDiagram&, const GrowthDiagram&) = default;

private:
    std::size_t p_, q_;
    std::vector<Tree> cells_;
};

struct RskResult {
    Path insertion;  // up-path along the top row, length = columns
    Path recording;  // down-path along the right column, length = rows
    GrowthDiagram diagram;
};

namespace detail {

inline void fill_cell(UpFamily family, Matrix const& m, GrowthDiagram& g, std::size_t i,
                      std::size_t j) {
    const Tree& corner = g.at(i - 1, j - 1);
    const Tree& above = g.at(i - 1, j);
    const Tree& left = g.at(i, j - 1);
    SPathPair s{corner, above, left, above.size() - corner.size(), left.size() - corner.size()};
    g.at(i, j) = inverse_oracle(family, static_cast<std::size_t>(m.at(i, j)), s).mid;
}

}  // namespace detail

// Fill the growth diagram from the matrix (column-major; the result is
// order-independent since each cell depends only on its own corners) and
// read off the two boundary paths.
inline RskResult rsk_forward(const Matrix& m, UpFamily family) {
    std::size_t p = m.columns(), q = m.rows();
    if (family == UpFamily::Uprime)
        for (std::size_t i = 1; i <= p; ++i)
            for (std::size_t j = 1; j <= q; ++j)
                if (m.at(i, j) > 1)
                    throw binary_violation("family U' requires a binary matrix, entry (" +
                                           std::to_string(i) + "," + std::to_string(j) + ") is " +
                                           std::to_string(m.at(i, j)));
    GrowthDiagram g(p, q);
    for (std::size_t i = 1; i <= p; ++i)
        for (std::size_t j = 1; j <= q; ++j) detail::fill_cell(family, m, g, i, j);
    RskResult out{Path{family == UpFamily::U ? PathKind::up : PathKind::up_prime, {}},
                  Path{PathKind::down, {}}, g};
    for (std::size_t i = 0; i <= p; ++i) out.insertion.trees.push_back(g.at(i, q));
    for (std::size_t j = 0; j <= q; ++j) out.recording.trees.push_back(g.at(p, j));
    return out;
}

// Recover the matrix from the two boundary paths by running the local
// bijection backwards from the top-right corner.
inline Matrix rsk_inverse(const Path& insertion, const Path& recording, UpFamily family) {
    if (insertion.kind != (family == UpFamily::U ? PathKind::up : PathKind::up_prime) ||
        recording.kind != PathKind::down)
        throw std::invalid_argument("rsk_inverse: path kinds do not match the family");
    if (insertion.trees.empty() || recording.trees.empty())
        throw std::invalid_argument("rsk_inverse: paths must contain at least the start tree");
    if (insertion.trees.back() != recording.trees.back())
        throw shape_mismatch("paths end at different trees: " +
                             insertion.trees.back().to_string() + " vs " +
                             recording.trees.back().to_string());
    std::size_t p = insertion.trees.size() - 1, q = recording.trees.size() - 1;
    GrowthDiagram g(p, q);
    for (std::size_t i = 0; i <= p; ++i) g.at(i, q) = insertion.trees[i];
    for (std::size_t j = 0; j <= q; ++j) g.at(p, j) = recording.trees[j];
    Matrix m(p, q);
    for (std::size_t i = p; i >= 1; --i)
        for (std::size_t j = q; j >= 1; --j) {
            const Tree& start = g.at(i - 1, j);
            const Tree& mid = g.at(i, j);
            const Tree& end = g.at(i, j - 1);
            std::string where = "cell (" + std::to_string(i) + "," + std::to_string(j) + ")";
            if (mid.size() < start.size() || mid.size() < end.size())
                throw cell_failure(where + ": corner sizes do not fit");
            std::size_t up = mid.size() - start.size(), down = mid.size() - end.size();
            if (up_edge_degree(family, start, mid) != up)
                throw cell_failure(where + ": top edge is not an up-edge");
            if (down_image(mid, down) != end)
                throw cell_failure(where + ": right edge is not a detachment edge");
            auto [k, s] = forward(family, NPathPair{start, mid, end, up, down});
            m.at(i, j) = static_cast<int>(k);
            g.at(i - 1, j - 1) = s.mid;
        }
    for (std::size_t i = 0; i <= p; ++i)
        if (!g.at(i, 0).empty())
            throw cell_failure("bottom boundary tree at column " + std::to_string(i) +
                               " is not empty");
    for (std::size_t j = 0; j <= q; ++j)
        if (!g.at(0, j).empty())
            throw cell_failure("left boundary tree at row " + std::to_string(j) + " is not empty");
    return m;
}

struct RskReport {
    UpFamily family = UpFamily::U;
    std::size_t p = 0, q = 0, max_total = 0;
    bool ok = true;
    std::size_t matrices = 0;
    std::map<std::size_t, std::size_t> count_by_sum;
    std::vector<std::string> failures;
};

namespace detail {

inline std::vector<Matrix> all_matrices(UpFamily family, std::size_t p, std::size_t q,
                                        std::size_t max_total) {
    std::vector<Matrix> out;
    Matrix m(p, q);
    int cap = family == UpFamily::Uprime ? 1 : static_cast<int>(max_total);
    auto rec = [&](auto&& self, std::size_t pos, int budget) -> void {
        if (pos == p * q) {
            out.push_back(m);
            return;
        }
        std::size_t i = pos % p + 1, j = pos / p + 1;
        for (int v = 0; v <= std::min(cap, budget); ++v) {
            m.at(i, j) = v;
            self(self, pos + 1, budget - v);
        }
        m.at(i, j) = 0;
    };
    rec(rec, 0, static_cast<int>(max_total));
    return out;
}

}  // namespace detail

// Exhaustive verification over all p x q matrices with entry sum at most
// max_total: round trips, shape size, step degrees = column and row sums,
// injectivity, and exactness of the image — the path pairs hit are precisely
// those built from (up-kind, binary-searching) labelling pairs of a common
// tree.
inline RskReport check_rsk(UpFamily family, std::size_t p, std::size_t q, std::size_t max_total) {
    RskReport report;
    report.family = family;
    report.p = p;
    report.q = q;
    report.max_total = max_total;
    auto fail = [&](const std::string& msg) {
        report.ok = false;
        report.failures.push_back(msg);
    };
    std::map<std::pair<std::vector<Tree>, std::vector<Tree>>, Matrix> image;
    for (const Matrix& m : detail::all_matrices(family, p, q, max_total)) {
        ++report.matrices;
        std::string label = "matrix [" + m.to_csv() + "]";
        RskResult r = rsk_forward(m, family);
        const Tree& shape = r.insertion.trees.back();
        if (shape != r.recording.trees.back())
            fail(label + ": paths end at different trees");
        if (shape.size() != static_cast<std::size_t>(m.total()))
            fail(label + ": shape size != matrix sum");
        for (std::size_t i = 1; i <= p; ++i)
            if (r.insertion.trees[i].size() - r.insertion.trees[i - 1].size() !=
                static_cast<std::size_t>(m.column_sum(i)))
                fail(label + ": up-step " + std::to_string(i) + " degree != column sum");
        for (std::size_t j = 1; j <= q; ++j)
            if (r.recording.trees[j].size() - r.recording.trees[j - 1].size() !=
                static_cast<std::size_t>(m.row_sum(j)))
                fail(label + ": down-step " + std::to_string(j) + " degree != row sum");
        try {
            if (rsk_inverse(r.insertion, r.recording, family) != m)
                fail(label + ": inverse(forward) != id");
        } catch (const std::runtime_error& e) {
            fail(label + ": inverse failed: " + e.what());
        }
        auto key = std::make_pair(r.insertion.trees, r.recording.trees);
        if (!image.emplace(key, m).second) fail(label + ": forward not injective");
        ++report.count_by_sum[shape.size()];
    }
    // Image exactness: every valid path pair of the right lengths and total
    // size arises, and from exactly one matrix.
    LabelKind up_kind = family == UpFamily::U ? LabelKind::right_strict : LabelKind::left_strict;
    std::size_t pairs = 0;
    for (std::size_t n = 0; n <= max_total; ++n)
        for (const Tree& t : enumerate_trees(n))
            for (const Labelling& lu : enumerate_labellings(t, up_kind, static_cast<int>(p)))
                for (const Labelling& ld :
                     enumerate_labellings(t, LabelKind::binary_search, static_cast<int>(q))) {
                    ++pairs;
                    Path pu = labelling_to_path(lu), pd = labelling_to_path(ld);
                    if (!image.count(std::make_pair(pu.trees, pd.trees)))
                        fail("path pair for " + t.to_string() + " with labellings (" +
                             lu.to_string() + "; " + ld.to_string() + ") not in the image");
                }
    if (pairs != image.size()) fail("path-pair count " + std::to_string(pairs) +
                                    " != matrix count " + std::to_string(image.size()));
    return report;
}

}  // namespace pbt
