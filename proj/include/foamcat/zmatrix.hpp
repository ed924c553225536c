#pragma once

#include <map>
#include <set>
#include <vector>
#include <stdexcept>

#include "foamcat/zint.hpp"

namespace foamcat {

// Sparse integer matrix, row-map storage with a column index.
// Cube differentials are extremely sparse, so this is the workhorse
// for everything homological.
class ZMat {
public:
    ZMat() : rows_(0), cols_(0) {}
    ZMat(int rows, int cols) : rows_(rows), cols_(cols), row_data_(rows), col_index_(cols) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    const Zint& at(int r, int c) const {
        static const Zint zero(0);
        auto it = row_data_[r].find(c);
        return it == row_data_[r].end() ? zero : it->second;
    }

    void set(int r, int c, Zint v) {
        auto it = row_data_[r].find(c);
        if (v == 0) {
            if (it != row_data_[r].end()) {
                row_data_[r].erase(it);
                col_index_[c].erase(r);
            }
        } else {
            if (it == row_data_[r].end()) col_index_[c].insert(r);
            row_data_[r][c] = std::move(v);
        }
    }

    void add(int r, int c, const Zint& v) {
        if (v == 0) return;
        Zint nv = at(r, c) + v;
        set(r, c, std::move(nv));
    }

    const std::map<int, Zint>& row(int r) const { return row_data_[r]; }
    const std::set<int>& col_support(int c) const { return col_index_[c]; }

    long nnz() const {
        long n = 0;
        for (auto& r : row_data_) n += (long)r.size();
        return n;
    }

    friend ZMat operator*(const ZMat& a, const ZMat& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("ZMat: shape mismatch");
        ZMat r(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (auto& [k, av] : a.row_data_[i])
                for (auto& [j, bv] : b.row_data_[k]) r.add(i, j, av * bv);
        return r;
    }

    bool operator==(const ZMat& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && row_data_ == o.row_data_;
    }

    static ZMat identity(int n) {
        ZMat m(n, n);
        for (int i = 0; i < n; ++i) m.set(i, i, 1);
        return m;
    }

    // Submatrix on the given (ordered) rows and columns.
    ZMat submatrix(const std::vector<int>& rsel, const std::vector<int>& csel) const {
        std::map<int, int> cpos;
        for (size_t j = 0; j < csel.size(); ++j) cpos[csel[j]] = (int)j;
        ZMat r((int)rsel.size(), (int)csel.size());
        for (size_t i = 0; i < rsel.size(); ++i)
            for (auto& [c, v] : row_data_[rsel[i]]) {
                auto it = cpos.find(c);
                if (it != cpos.end()) r.set((int)i, it->second, v);
            }
        return r;
    }

private:
    int rows_, cols_;
    std::vector<std::map<int, Zint>> row_data_;
    std::vector<std::set<int>> col_index_;
};

}  // namespace foamcat
