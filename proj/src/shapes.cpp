#include "sytcount/shapes.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <set>
#include <sstream>

namespace sytcount {

namespace {

std::string join(const std::vector<int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(v[i]);
    }
    return s;
}

// Tokenizer over a shape spec. Offsets refer to the original text.
class Cursor {
public:
    explicit Cursor(std::string_view text) : text_(text) {}

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool done() {
        skip_ws();
        return pos_ >= text_.size();
    }
    std::size_t pos() const { return pos_; }

    bool accept(std::string_view token) {
        skip_ws();
        if (text_.substr(pos_, token.size()) == token) {
            pos_ += token.size();
            return true;
        }
        return false;
    }

    void expect(std::string_view token) {
        if (!accept(token)) fail("expected '" + std::string(token) + "'");
    }

    int integer() {
        skip_ws();
        const char* begin = text_.data() + pos_;
        const char* end = text_.data() + text_.size();
        int value = 0;
        auto [ptr, ec] = std::from_chars(begin, end, value);
        if (ec != std::errc() || ptr == begin) fail("expected a nonnegative integer");
        if (value < 0) fail("negative integer");
        pos_ += static_cast<std::size_t>(ptr - begin);
        return value;
    }

    std::vector<int> integer_list() {
        std::vector<int> v{integer()};
        while (accept(",")) v.push_back(integer());
        return v;
    }

    [[noreturn]] void fail(const std::string& msg) const {
        std::ostringstream os;
        os << "shape syntax error at position " << pos_ << ": " << msg;
        throw ShapeError(os.str(), static_cast<long>(pos_));
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

std::vector<int> strip_trailing_zeros(std::vector<int> v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
    return v;
}

}  // namespace

Partition::Partition(std::vector<int> parts) : parts_(strip_trailing_zeros(std::move(parts))) {
    if (parts_.empty()) throw ShapeError("partition must have at least one positive part");
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw ShapeError("partition parts must be positive: " + join(parts_));
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw ShapeError("partition parts must be weakly decreasing: " + join(parts_));
    }
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

bool Partition::strictly_decreasing() const {
    for (std::size_t i = 1; i < parts_.size(); ++i)
        if (parts_[i] >= parts_[i - 1]) return false;
    return true;
}

SkewShape::SkewShape(Partition outer, std::vector<int> inner)
    : outer_(std::move(outer)), inner_(strip_trailing_zeros(std::move(inner))) {
    const std::size_t r = inner_.size();
    if (r >= outer_.length())
        throw ShapeError("inner shape must have fewer rows than the outer shape");
    for (std::size_t i = 0; i < r; ++i) {
        if (inner_[i] < 0) throw ShapeError("inner parts must be nonnegative");
        if (i > 0 && inner_[i] > inner_[i - 1]) throw ShapeError("inner parts must be weakly decreasing");
        if (inner_[i] >= outer_[i]) throw ShapeError("inner part must be smaller than the outer part in each row");
    }
    inner_.resize(outer_.length(), 0);
}

std::size_t SkewShape::inner_length() const {
    return static_cast<std::size_t>(std::count_if(inner_.begin(), inner_.end(), [](int v) { return v > 0; }));
}

int SkewShape::size() const {
    return outer_.size() - std::accumulate(inner_.begin(), inner_.end(), 0);
}

PsytShape::PsytShape(std::vector<int> inner, std::vector<int> outer)
    : inner_(std::move(inner)), outer_(std::move(outer)) {
    if (inner_.size() != outer_.size()) throw ShapeError("psyt inner and outer must have the same number of rows");
    if (outer_.empty()) throw ShapeError("psyt shape must have at least one row");
    for (std::size_t i = 0; i < outer_.size(); ++i) {
        if (outer_[i] < 1) throw ShapeError("psyt outer rows must be nonempty");
        if (inner_[i] < 0 || inner_[i] > outer_[i]) throw ShapeError("psyt requires 0 <= inner_i <= outer_i");
    }
}

int PsytShape::size() const { return std::accumulate(outer_.begin(), outer_.end(), 0); }

CellGrid::CellGrid(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
    if (rows_.empty()) throw ShapeError("grid must have at least one row");
    for (auto& r : rows_) {
        if (r.empty()) throw ShapeError("grid rows must be nonempty");
        std::sort(r.begin(), r.end());
        if (std::adjacent_find(r.begin(), r.end()) != r.end()) throw ShapeError("duplicate cell in grid row");
        if (r.front() < 1) throw ShapeError("grid columns are 1-based");
    }
}

CellGrid CellGrid::straight(const Partition& p) {
    return rows(std::vector<int>(p.parts().begin(), p.parts().end()));
}

CellGrid CellGrid::skew(const SkewShape& s) {
    std::vector<std::vector<int>> rs;
    for (std::size_t i = 0; i < s.outer().length(); ++i) {
        std::vector<int> r;
        for (int c = s.inner()[i] + 1; c <= s.outer()[i]; ++c) r.push_back(c);
        rs.push_back(std::move(r));
    }
    return CellGrid(std::move(rs));
}

CellGrid CellGrid::shifted(const Partition& p) {
    if (!p.strictly_decreasing()) throw ShapeError("shifted shapes need strictly decreasing parts");
    std::vector<std::vector<int>> rs;
    for (std::size_t i = 0; i < p.length(); ++i) {
        std::vector<int> r;
        const int start = static_cast<int>(i) + 1;
        for (int c = start; c < start + p[i]; ++c) r.push_back(c);
        rs.push_back(std::move(r));
    }
    return CellGrid(std::move(rs));
}

CellGrid CellGrid::rows(const std::vector<int>& lengths, const std::vector<Cell>& holes) {
    std::set<Cell> removed;
    for (const Cell& h : holes) {
        if (h.row < 1 || static_cast<std::size_t>(h.row) > lengths.size() || h.col < 1 || h.col > lengths[h.row - 1])
            throw ShapeError("hole (" + std::to_string(h.row) + "," + std::to_string(h.col) + ") lies outside the grid");
        if (!removed.insert(h).second)
            throw ShapeError("duplicate hole (" + std::to_string(h.row) + "," + std::to_string(h.col) + ")");
    }
    std::vector<std::vector<int>> rs;
    for (std::size_t i = 0; i < lengths.size(); ++i) {
        std::vector<int> r;
        for (int c = 1; c <= lengths[i]; ++c)
            if (!removed.count(Cell{static_cast<int>(i) + 1, c})) r.push_back(c);
        rs.push_back(std::move(r));
    }
    return CellGrid(std::move(rs));
}

int CellGrid::size() const {
    int n = 0;
    for (const auto& r : rows_) n += static_cast<int>(r.size());
    return n;
}

bool CellGrid::contains(Cell c) const {
    if (c.row < 1 || static_cast<std::size_t>(c.row) > rows_.size()) return false;
    const auto& r = rows_[c.row - 1];
    return std::binary_search(r.begin(), r.end(), c.col);
}

std::vector<Cell> CellGrid::cells() const {
    std::vector<Cell> out;
    for (std::size_t i = 0; i < rows_.size(); ++i)
        for (int c : rows_[i]) out.push_back(Cell{static_cast<int>(i) + 1, c});
    return out;
}

std::vector<long> CellGrid::row_lengths() const {
    std::vector<long> out;
    for (const auto& r : rows_) out.push_back(static_cast<long>(r.size()));
    return out;
}

std::vector<Partition> partitions_of(int n) {
    if (n < 1) throw std::invalid_argument("partitions_of: n must be positive");
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int part = std::min(remaining, max_part); part >= 1; --part) {
            cur.push_back(part);
            self(self, remaining - part, part);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

ShapeSpec parse_shape(std::string_view text) {
    Cursor cur(text);
    ShapeSpec result;
    if (cur.accept("shifted:")) {
        result = ShiftedShape{Partition(cur.integer_list())};
        if (!std::get<ShiftedShape>(result).parts.strictly_decreasing())
            throw ShapeError("shifted shapes need strictly decreasing parts");
    } else if (cur.accept("rows:")) {
        RowsShape rs;
        rs.lengths = cur.integer_list();
        while (cur.accept("hole:")) {
            Cell h;
            h.row = cur.integer();
            cur.expect(",");
            h.col = cur.integer();
            rs.holes.push_back(h);
        }
        CellGrid::rows(rs.lengths, rs.holes);  // validates
        result = std::move(rs);
    } else if (cur.accept("psyt:")) {
        std::vector<int> a = cur.integer_list();
        cur.expect("<");
        std::vector<int> b = cur.integer_list();
        result = PsytShape(std::move(a), std::move(b));
    } else {
        std::vector<int> outer = cur.integer_list();
        if (cur.accept("/")) {
            std::vector<int> inner = cur.integer_list();
            result = SkewShape(Partition(std::move(outer)), std::move(inner));
        } else {
            result = Partition(std::move(outer));
        }
    }
    if (!cur.done()) cur.fail("unexpected trailing input");
    return result;
}

std::string canonical_string(const ShapeSpec& shape) {
    struct Visitor {
        std::string operator()(const Partition& p) const { return join(p.parts()); }
        std::string operator()(const SkewShape& s) const {
            std::vector<int> inner(s.inner().begin(), s.inner().begin() + static_cast<long>(s.inner_length()));
            if (inner.empty()) return join(s.outer().parts()) + "/0";
            return join(s.outer().parts()) + "/" + join(inner);
        }
        std::string operator()(const ShiftedShape& s) const { return "shifted:" + join(s.parts.parts()); }
        std::string operator()(const RowsShape& r) const {
            std::string s = "rows:" + join(r.lengths);
            std::vector<Cell> holes = r.holes;
            std::sort(holes.begin(), holes.end());
            for (const Cell& h : holes) s += " hole:" + std::to_string(h.row) + "," + std::to_string(h.col);
            return s;
        }
        std::string operator()(const PsytShape& p) const { return "psyt:" + join(p.inner()) + "<" + join(p.outer()); }
    };
    return std::visit(Visitor{}, shape);
}

CellGrid grid_of(const ShapeSpec& shape) {
    struct Visitor {
        CellGrid operator()(const Partition& p) const { return CellGrid::straight(p); }
        CellGrid operator()(const SkewShape& s) const { return CellGrid::skew(s); }
        CellGrid operator()(const ShiftedShape& s) const { return CellGrid::shifted(s.parts); }
        CellGrid operator()(const RowsShape& r) const { return CellGrid::rows(r.lengths, r.holes); }
        CellGrid operator()(const PsytShape& p) const { return CellGrid::rows(p.outer()); }
    };
    return std::visit(Visitor{}, shape);
}

CellPoset poset_of(const ShapeSpec& shape) {
    if (const auto* p = std::get_if<PsytShape>(&shape)) return psyt_poset(*p);
    return build_poset(grid_of(shape));
}

namespace {

// Shared tail of the grid-poset builders: ids are row-major, rows are chains.
CellPoset poset_skeleton(const CellGrid& grid) {
    CellPoset p;
    p.cells = grid.cells();
    p.size = static_cast<int>(p.cells.size());
    int id = 0;
    for (const auto& row : grid.row_columns()) {
        std::vector<int> chain;
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (j > 0) p.covers.emplace_back(id - 1, id);
            chain.push_back(id++);
        }
        p.chains.push_back(std::move(chain));
    }
    return p;
}

int cell_id(const CellPoset& p, Cell c) {
    auto it = std::lower_bound(p.cells.begin(), p.cells.end(), c);
    return static_cast<int>(it - p.cells.begin());
}

}  // namespace

CellPoset build_poset(const CellGrid& grid) {
    CellPoset p = poset_skeleton(grid);
    // Columns: consecutive present cells, top to bottom.
    std::vector<Cell> by_col = p.cells;
    std::sort(by_col.begin(), by_col.end(), [](const Cell& a, const Cell& b) {
        return a.col != b.col ? a.col < b.col : a.row < b.row;
    });
    for (std::size_t i = 1; i < by_col.size(); ++i)
        if (by_col[i].col == by_col[i - 1].col)
            p.covers.emplace_back(cell_id(p, by_col[i - 1]), cell_id(p, by_col[i]));
    p.covers = transitive_reduction(p.size, p.covers);
    return p;
}

CellPoset psyt_poset(const PsytShape& shape) {
    CellPoset p = poset_skeleton(CellGrid::rows(shape.outer()));
    const auto& a = shape.inner();
    for (std::size_t i = 0; i + 1 < a.size(); ++i) {
        const int limit = std::min(a[i], a[i + 1]);
        for (int c = 1; c <= limit; ++c) {
            const int r = static_cast<int>(i) + 1;
            p.covers.emplace_back(cell_id(p, Cell{r, c}), cell_id(p, Cell{r + 1, c}));
        }
    }
    p.covers = transitive_reduction(p.size, p.covers);
    return p;
}

CellGrid shifted_grid(const Partition& p) { return CellGrid::shifted(p); }

namespace {

// Topological order of 0..size-1, or empty when a cycle exists.
std::vector<int> topo_order(int size, const std::vector<std::vector<int>>& succ) {
    std::vector<int> indeg(static_cast<std::size_t>(size), 0);
    for (const auto& s : succ)
        for (int y : s) ++indeg[y];
    std::vector<int> order, stack;
    for (int x = 0; x < size; ++x)
        if (indeg[x] == 0) stack.push_back(x);
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        order.push_back(x);
        for (int y : succ[x])
            if (--indeg[y] == 0) stack.push_back(y);
    }
    if (static_cast<int>(order.size()) != size) order.clear();
    return order;
}

std::vector<std::vector<int>> successor_lists(int size, const std::vector<std::pair<int, int>>& rel) {
    std::vector<std::vector<int>> succ(static_cast<std::size_t>(size));
    for (auto [x, y] : rel) {
        if (x < 0 || y < 0 || x >= size || y >= size) throw std::invalid_argument("relation refers to unknown element");
        succ[x].push_back(y);
    }
    for (auto& s : succ) {
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
    }
    return succ;
}

}  // namespace

bool is_acyclic(int size, const std::vector<std::pair<int, int>>& relations) {
    return size == 0 || !topo_order(size, successor_lists(size, relations)).empty();
}

std::vector<std::pair<int, int>> transitive_reduction(int size, const std::vector<std::pair<int, int>>& relations) {
    const auto succ = successor_lists(size, relations);
    const auto order = topo_order(size, succ);
    if (size > 0 && order.empty()) throw std::invalid_argument("relations contain a cycle");

    // reach[x]: elements strictly above x.
    std::vector<std::vector<bool>> reach(static_cast<std::size_t>(size), std::vector<bool>(static_cast<std::size_t>(size)));
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        const int x = *it;
        for (int y : succ[x]) {
            reach[x][y] = true;
            for (int z = 0; z < size; ++z)
                if (reach[y][z]) reach[x][z] = true;
        }
    }
    std::vector<std::pair<int, int>> out;
    for (int x = 0; x < size; ++x) {
        for (int y : succ[x]) {
            bool implied = false;
            for (int z : succ[x])
                if (z != y && reach[z][y]) {
                    implied = true;
                    break;
                }
            if (!implied) out.emplace_back(x, y);
        }
    }
    return out;
}

CellPoset relabel(const CellPoset& p, const std::vector<int>& perm) {
    if (static_cast<int>(perm.size()) != p.size) throw std::invalid_argument("relabel: permutation size mismatch");
    CellPoset q;
    q.size = p.size;
    for (auto [x, y] : p.covers) q.covers.emplace_back(perm[x], perm[y]);
    return q;
}

CellPoset dual(const CellPoset& p) {
    CellPoset q;
    q.size = p.size;
    for (auto [x, y] : p.covers) q.covers.emplace_back(y, x);
    return q;
}

}  // namespace sytcount
