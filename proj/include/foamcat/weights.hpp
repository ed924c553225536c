#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

namespace foamcat {

// Fixed choice of scalars: t_{i,i+1} = +1, t_{i,i-1} = -1, t_{ij} = +1 for
// |i-j| > 1, t_{ii} = 1.
struct Convention {
    int n = 2;  // 2 or 3
    int m = 2;  // number of columns
    int N = 2;  // total weight

    Convention() = default;
    Convention(int n_, int m_, int N_) : n(n_), m(m_), N(N_) {
        if (n != 2 && n != 3) throw std::invalid_argument("Convention: n must be 2 or 3");
    }

    int t_scalar(int i, int j) const {
        if (i == j) return 1;
        if (j == i + 1) return 1;
        if (j == i - 1) return -1;
        return 1;
    }
};

// Object (a_1,...,a_m) with 0 <= a_i <= n and sum N, or the distinguished
// zero object.
struct WeightSeq {
    bool zero = true;
    std::vector<int> a;

    WeightSeq() = default;
    static WeightSeq make(std::vector<int> v, const Convention& conv) {
        int sum = 0;
        for (int x : v) {
            if (x < 0 || x > conv.n) return WeightSeq{};
            sum += x;
        }
        if ((int)v.size() != conv.m || sum != conv.N) return WeightSeq{};
        WeightSeq s;
        s.zero = false;
        s.a = std::move(v);
        return s;
    }

    bool operator==(const WeightSeq& o) const {
        if (zero || o.zero) return zero == o.zero;
        return a == o.a;
    }
    bool operator!=(const WeightSeq& o) const { return !(*this == o); }
};

// sl_m weight lambda with lambda_i = a_{i+1} - a_i when realized.
struct SlmWeight {
    std::vector<int> lambda;

    static SlmWeight of(const WeightSeq& s) {
        if (s.zero) throw std::invalid_argument("SlmWeight: zero object has no weight");
        SlmWeight w;
        for (size_t i = 0; i + 1 < s.a.size(); ++i) w.lambda.push_back(s.a[i + 1] - s.a[i]);
        return w;
    }
};

// Unique sequence with lambda_i = a_{i+1} - a_i, sum = N, 0 <= a_i <= n;
// the zero object when none exists.
inline WeightSeq weight_to_seq(const SlmWeight& w, const Convention& conv) {
    if ((int)w.lambda.size() != conv.m - 1)
        throw std::invalid_argument("weight_to_seq: wrong length");
    // a_k = a_1 + lambda_1 + ... + lambda_{k-1}; solve m*a_1 + const = N
    std::vector<int> partial(conv.m, 0);
    for (int k = 1; k < conv.m; ++k) partial[k] = partial[k - 1] + w.lambda[k - 1];
    long tot = 0;
    for (int k = 0; k < conv.m; ++k) tot += partial[k];
    long num = (long)conv.N - tot;
    if (num % conv.m != 0) return WeightSeq{};
    long a1 = num / conv.m;
    std::vector<int> a(conv.m);
    for (int k = 0; k < conv.m; ++k) {
        long v = a1 + partial[k];
        if (v < 0 || v > conv.n) return WeightSeq{};
        a[k] = (int)v;
    }
    return WeightSeq::make(std::move(a), conv);
}

}  // namespace foamcat
