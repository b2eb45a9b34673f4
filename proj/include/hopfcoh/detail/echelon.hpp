#pragma once

#include "hopfcoh/detail/arith.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>
#include <vector>

namespace hopfcoh::detail {

template <class T>
using RowT = std::vector<std::pair<int, T>>;

template <class Arith>
RowT<typename Arith::value_type> to_native(const Arith& ar, const std::vector<std::pair<int, Scalar>>& row)
{
    RowT<typename Arith::value_type> out;
    out.reserve(row.size());
    for (const auto& [c, v] : row)
        out.emplace_back(c, ar.from(v));
    return out;
}

template <class Arith>
std::vector<std::pair<int, Scalar>> from_native(const Arith& ar, const RowT<typename Arith::value_type>& row)
{
    std::vector<std::pair<int, Scalar>> out;
    out.reserve(row.size());
    for (const auto& [c, v] : row)
        out.emplace_back(c, ar.to(v));
    return out;
}

// Incremental sparse echelon basis. Every stored row has leading coefficient
// one at its pivot column and no other row shares that pivot. Reduction runs
// column by column through a min-heap, so work is proportional to fill.
template <class Arith>
class Echelon {
public:
    using T = typename Arith::value_type;
    using Row = RowT<T>;

    Echelon(Arith arith, int ambient) : ar_(std::move(arith)), ambient_(ambient), pivot_row_(ambient, -1) {}

    const Arith& arith() const { return ar_; }
    int ambient() const { return ambient_; }
    int rank() const { return static_cast<int>(rows_.size()); }
    const std::vector<Row>& rows() const { return rows_; }
    int pivot_row(int col) const { return pivot_row_[col]; }
    bool is_pivot(int col) const { return pivot_row_[col] >= 0; }

    // Normal form of v modulo the row space: zero at every pivot column.
    Row reduce(const Row& v) const
    {
        auto& ws = workspace();
        if (static_cast<int>(ws.acc.size()) < ambient_) {
            ws.acc.resize(ambient_, ar_.zero());
            ws.mark.resize(ambient_, 0);
        }
        auto& heap = ws.heap;
        for (const auto& [c, x] : v) {
            if (ws.mark[c]) {
                ws.acc[c] = ar_.add(ws.acc[c], x);
            } else {
                ws.acc[c] = x;
                ws.mark[c] = 1;
                heap.push(c);
            }
        }
        Row out;
        while (!heap.empty()) {
            int c = heap.top();
            heap.pop();
            ws.mark[c] = 0;
            if (Arith::is_zero(ws.acc[c]))
                continue;
            int r = pivot_row_[c];
            if (r < 0) {
                out.emplace_back(c, std::move(ws.acc[c]));
                ws.acc[c] = ar_.zero();
                continue;
            }
            T f = std::move(ws.acc[c]);
            ws.acc[c] = ar_.zero();
            const Row& row = rows_[r];
            for (std::size_t k = 1; k < row.size(); ++k) {
                int j = row[k].first;
                if (!ws.mark[j]) {
                    ws.mark[j] = 1;
                    ws.acc[j] = ar_.zero();
                    heap.push(j);
                }
                ar_.submul(ws.acc[j], f, row[k].second);
            }
        }
        return out;
    }

    // Returns the index of the new row, or -1 when v is already in the span.
    int insert(const Row& v)
    {
        Row r = reduce(v);
        if (r.empty())
            return -1;
        if (!(r[0].second == ar_.one())) {
            T inv = ar_.inv(r[0].second);
            for (auto& e : r)
                e.second = ar_.mul(e.second, inv);
        }
        int idx = static_cast<int>(rows_.size());
        pivot_row_[r[0].first] = idx;
        rows_.push_back(std::move(r));
        return idx;
    }

    bool contains(const Row& v) const { return reduce(v).empty(); }

    // Back-substitute to reduced row echelon form with rows sorted by pivot.
    void make_reduced()
    {
        std::sort(rows_.begin(), rows_.end(), [](const Row& a, const Row& b) { return a[0].first < b[0].first; });
        for (int i = 0; i < rank(); ++i)
            pivot_row_[rows_[i][0].first] = i;
        for (int i = rank() - 1; i >= 0; --i) {
            Row tail(rows_[i].begin() + 1, rows_[i].end());
            Row red = reduce(tail);
            Row full;
            full.reserve(red.size() + 1);
            full.push_back(std::move(rows_[i][0]));
            for (auto& e : red)
                full.push_back(std::move(e));
            rows_[i] = std::move(full);
        }
    }

    // Columns below limit that carry no pivot.
    std::vector<int> free_columns(int limit) const
    {
        std::vector<int> out;
        for (int c = 0; c < limit; ++c)
            if (pivot_row_[c] < 0)
                out.push_back(c);
        return out;
    }

    // The unique kernel vector (rows read as equations, restricted to columns
    // below limit) with coordinate one at free_col and zero at other free columns.
    Row kernel_vector(int free_col, int limit) const
    {
        std::vector<T> x(limit, ar_.zero());
        x[free_col] = ar_.one();
        std::vector<int> order;
        for (int i = 0; i < rank(); ++i)
            if (rows_[i][0].first < limit)
                order.push_back(i);
        std::sort(order.begin(), order.end(), [&](int a, int b) { return rows_[a][0].first > rows_[b][0].first; });
        for (int i : order) {
            const Row& row = rows_[i];
            T acc = ar_.zero();
            for (std::size_t k = 1; k < row.size() && row[k].first < limit; ++k)
                if (!Arith::is_zero(x[row[k].first]))
                    ar_.submul(acc, row[k].second, x[row[k].first]);
            x[row[0].first] = std::move(acc);
        }
        Row out;
        for (int c = 0; c < limit; ++c)
            if (!Arith::is_zero(x[c]))
                out.emplace_back(c, std::move(x[c]));
        return out;
    }

private:
    struct Workspace {
        std::vector<T> acc;
        std::vector<char> mark;
        std::priority_queue<int, std::vector<int>, std::greater<int>> heap;
    };

    static Workspace& workspace()
    {
        thread_local Workspace ws;
        return ws;
    }

    Arith ar_;
    int ambient_;
    std::vector<int> pivot_row_;
    std::vector<Row> rows_;
};

// Insertion order for a batch of rows: sparse and small rows first, which
// keeps fill and coefficient growth down.
template <class Arith>
std::vector<int> markowitz_order(const Arith& ar, const std::vector<RowT<typename Arith::value_type>>& rows)
{
    std::vector<std::size_t> cost(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        std::size_t w = 0;
        for (const auto& e : rows[i])
            w += ar.weight(e.second);
        cost[i] = rows[i].size() * 64 + w;
    }
    std::vector<int> order(rows.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return cost[a] < cost[b]; });
    return order;
}

}  // namespace hopfcoh::detail
