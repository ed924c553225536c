#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "foamcat/zmatrix.hpp"

namespace foamcat {

struct SmithResult {
    std::vector<Zint> factors;  // d1 | d2 | ..., all positive
    // Unimodular transforms with U * M * V = diag(factors), present on request.
    std::optional<ZMat> U, V;
};

namespace detail {

struct SnfWork {
    ZMat m;
    std::optional<ZMat> u, v;  // row ops accumulate in u, col ops in v

    void swap_rows(int a, int b) {
        if (a == b) return;
        row_op([&](ZMat& x) {
            for (int c = 0; c < x.cols(); ++c) {
                Zint t = x.at(a, c);
                x.set(a, c, x.at(b, c));
                x.set(b, c, t);
            }
        });
    }
    void swap_cols(int a, int b) {
        if (a == b) return;
        col_op([&](ZMat& x) {
            for (int r = 0; r < x.rows(); ++r) {
                Zint t = x.at(r, a);
                x.set(r, a, x.at(r, b));
                x.set(r, b, t);
            }
        });
    }
    void add_row(int dst, int src, const Zint& k) {  // row_dst += k * row_src
        if (k == 0) return;
        row_op([&](ZMat& x) {
            std::vector<std::pair<int, Zint>> srcrow(x.row(src).begin(), x.row(src).end());
            for (auto& [c, val] : srcrow) x.add(dst, c, k * val);
        });
    }
    void add_col(int dst, int src, const Zint& k) {
        if (k == 0) return;
        col_op([&](ZMat& x) {
            std::vector<int> rows(x.col_support(src).begin(), x.col_support(src).end());
            for (int r : rows) x.add(r, dst, k * x.at(r, src));
        });
    }
    void negate_row(int r) {
        row_op([&](ZMat& x) {
            std::vector<std::pair<int, Zint>> rr(x.row(r).begin(), x.row(r).end());
            for (auto& [c, val] : rr) x.set(r, c, -val);
        });
    }

    template <class F>
    void row_op(F&& f) {
        f(m);
        if (u) f(*u);
    }
    template <class F>
    void col_op(F&& f) {
        f(m);
        if (v) f(*v);
    }
};

}  // namespace detail

// Smith normal form over the integers. Pivoting picks the smallest-magnitude
// nonzero entry of the remaining block, and a pivot is only accepted once it
// divides everything it must clear; this keeps intermediate growth tame.
inline SmithResult smith_normal_form(const ZMat& input, bool want_transforms = false) {
    detail::SnfWork w;
    w.m = input;
    if (want_transforms) {
        w.u = ZMat::identity(input.rows());
        w.v = ZMat::identity(input.cols());
    }
    const int n = std::min(input.rows(), input.cols());
    int t = 0;
    for (; t < n; ++t) {
        // smallest nonzero entry of the remaining block becomes the pivot
        int pr = -1, pc = -1;
        Zint best;
        for (int r = t; r < w.m.rows(); ++r)
            for (auto& [c, val] : w.m.row(r)) {
                if (c < t) continue;
                Zint a = zabs(val);
                if (pr < 0 || a < best) {
                    best = a;
                    pr = r;
                    pc = c;
                }
            }
        if (pr < 0) break;  // remaining block is zero
        w.swap_rows(t, pr);
        w.swap_cols(t, pc);

        for (;;) {
            // clear column t below the pivot
            bool restart = false;
            {
                std::vector<int> rows(w.m.col_support(t).begin(), w.m.col_support(t).end());
                for (int r : rows) {
                    if (r <= t) continue;
                    Zint q = w.m.at(r, t) / w.m.at(t, t);
                    w.add_row(r, t, -q);
                    if (w.m.at(r, t) != 0) {  // strictly smaller remainder: new pivot
                        w.swap_rows(t, r);
                        restart = true;
                        break;
                    }
                }
            }
            if (restart) continue;
            {
                std::vector<std::pair<int, Zint>> row(w.m.row(t).begin(), w.m.row(t).end());
                for (auto& [c, val] : row) {
                    if (c <= t) continue;
                    Zint q = w.m.at(t, c) / w.m.at(t, t);
                    w.add_col(c, t, -q);
                    if (w.m.at(t, c) != 0) {
                        w.swap_cols(t, c);
                        restart = true;
                        break;
                    }
                }
            }
            if (restart) continue;
            if (w.m.row(t).size() != 1 || w.m.col_support(t).size() != 1) continue;

            // pivot must divide the whole remaining block before we advance
            bool divides = true;
            for (int r = t + 1; r < w.m.rows() && divides; ++r)
                for (auto& [c, val] : w.m.row(r)) {
                    if (c <= t) continue;
                    if (val % w.m.at(t, t) != 0) {
                        w.add_row(t, r, 1);
                        divides = false;
                        break;
                    }
                }
            if (divides) break;
        }
        if (w.m.at(t, t) < 0) w.negate_row(t);
    }

    SmithResult res;
    for (int i = 0; i < t; ++i) {
        Zint d = w.m.at(i, i);
        if (d != 0) res.factors.push_back(d);
    }
    if (want_transforms) {
        res.U = std::move(w.u);
        res.V = std::move(w.v);
    }
    return res;
}

inline int zrank(const ZMat& m) { return (int)smith_normal_form(m).factors.size(); }

}  // namespace foamcat
