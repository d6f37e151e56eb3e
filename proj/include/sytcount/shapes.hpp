#pragma once

// Tableau shapes and their cell posets.
//
// Cells are addressed (row, column), 1-based, rows top to bottom. Every shape
// kind reduces to a CellGrid (a set of cells per row); the poset on a grid
// orders consecutive *present* cells along each row and down each column, so
// holes and ragged row ends are skipped over rather than breaking a chain.
//
// Shape-spec grammar accepted by parse_shape (whitespace around tokens is
// ignored):
//   straight   p1,p2,...
//   skew       p1,p2,.../q1,q2,...
//   shifted    shifted:p1,p2,...
//   rows       rows:r1,r2,... [hole:ROW,COL]...
//   psyt       psyt:a1,a2,...<b1,b2,...

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace sytcount {

struct Cell {
    int row = 0;
    int col = 0;
    friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// Parse failure or invariant violation. position() is the byte offset of
/// the offending token for syntax errors and -1 for invariant violations.
class ShapeError : public std::invalid_argument {
public:
    ShapeError(const std::string& what, long position = -1)
        : std::invalid_argument(what), position_(position) {}
    long position() const { return position_; }

private:
    long position_;
};

/// Weakly decreasing positive parts; trailing zeros are stripped on construction.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int operator[](std::size_t i) const { return parts_[i]; }
    std::size_t length() const { return parts_.size(); }
    int size() const;  // n
    bool strictly_decreasing() const;

    friend bool operator==(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
};

/// outer / inner with inner zero-padded to the outer length; inner has fewer
/// nonzero rows than outer and inner_i < outer_i on those rows.
class SkewShape {
public:
    SkewShape(Partition outer, std::vector<int> inner);

    const Partition& outer() const { return outer_; }
    /// Zero-padded to outer().length().
    const std::vector<int>& inner() const { return inner_; }
    /// Number of nonzero inner parts.
    std::size_t inner_length() const;
    int size() const;

    friend bool operator==(const SkewShape&, const SkewShape&) = default;

private:
    Partition outer_;
    std::vector<int> inner_;
};

struct ShiftedShape {
    Partition parts;  // strictly decreasing
    friend bool operator==(const ShiftedShape&, const ShiftedShape&) = default;
};

/// Left-justified rows of arbitrary length with optional interior holes.
struct RowsShape {
    std::vector<int> lengths;
    std::vector<Cell> holes;
    friend bool operator==(const RowsShape&, const RowsShape&) = default;
};

/// Rows of length outer_i; columns are ordered only where both cells lie in
/// the inner region (column <= inner_i).
class PsytShape {
public:
    PsytShape(std::vector<int> inner, std::vector<int> outer);

    const std::vector<int>& inner() const { return inner_; }
    const std::vector<int>& outer() const { return outer_; }
    int size() const;

    friend bool operator==(const PsytShape&, const PsytShape&) = default;

private:
    std::vector<int> inner_;
    std::vector<int> outer_;
};

using ShapeSpec = std::variant<Partition, SkewShape, ShiftedShape, RowsShape, PsytShape>;

class CellGrid {
public:
    /// rows[i] holds the 1-based column indices of row i+1 (any order, no duplicates).
    explicit CellGrid(std::vector<std::vector<int>> rows);

    static CellGrid straight(const Partition& p);
    static CellGrid skew(const SkewShape& s);
    /// Row i occupies columns i..i+p_i-1; parts must be strictly decreasing.
    static CellGrid shifted(const Partition& p);
    /// Left-justified rows of the given lengths with the holes removed.
    static CellGrid rows(const std::vector<int>& lengths, const std::vector<Cell>& holes = {});

    const std::vector<std::vector<int>>& row_columns() const { return rows_; }
    std::size_t row_count() const { return rows_.size(); }
    int size() const;
    bool contains(Cell c) const;
    /// Cells in row-major order; index in this vector is the cell id.
    std::vector<Cell> cells() const;
    /// Number of cells in each row.
    std::vector<long> row_lengths() const;

    friend bool operator==(const CellGrid&, const CellGrid&) = default;

private:
    std::vector<std::vector<int>> rows_;
};

/// Order relations on elements 0..size-1.
///
/// `covers` lists pairs (x, y) with x below y. Posets built from shapes keep
/// `covers` as a transitive reduction and also record the cell of each id and
/// the row chains (each row's ids left to right), which the oracle uses for a
/// compact ideal encoding.
struct CellPoset {
    int size = 0;
    std::vector<std::pair<int, int>> covers;
    std::vector<Cell> cells;
    std::vector<std::vector<int>> chains;

    bool has_chains() const { return !chains.empty(); }
};

/// All partitions of n in reverse lexicographic order (n, n-1 1, ...).
std::vector<Partition> partitions_of(int n);

ShapeSpec parse_shape(std::string_view text);
std::string canonical_string(const ShapeSpec& shape);

CellGrid grid_of(const ShapeSpec& shape);
CellPoset poset_of(const ShapeSpec& shape);

CellPoset build_poset(const CellGrid& grid);
CellPoset psyt_poset(const PsytShape& shape);
CellGrid shifted_grid(const Partition& p);

/// Removes every relation implied by the others. Throws std::invalid_argument on a cycle.
std::vector<std::pair<int, int>> transitive_reduction(int size, const std::vector<std::pair<int, int>>& relations);

/// True iff the relations contain no directed cycle.
bool is_acyclic(int size, const std::vector<std::pair<int, int>>& relations);

/// Same poset with element x renamed perm[x]; cell/chain metadata is dropped.
CellPoset relabel(const CellPoset& p, const std::vector<int>& perm);

/// Dual poset (every relation reversed); metadata is dropped.
CellPoset dual(const CellPoset& p);

}  // namespace sytcount
