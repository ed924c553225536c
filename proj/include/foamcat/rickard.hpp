#pragma once

#include <map>
#include <string>
#include <vector>

#include "foamcat/ladder.hpp"

namespace foamcat {

// Formal complex of ladder words: terms per homological degree, arrows
// labelling the differential components between adjacent degrees.
struct FormalComplex {
    struct Term {
        LadderWord word;
        int shift = 0;
    };
    std::map<int, std::vector<Term>> terms;
    struct Arrow {
        int from_degree;
        std::string label;  // zip/unzip/dot composite naming
    };
    std::vector<Arrow> arrows;
};

// Complex categorifying the braiding T_i^{+-1} at sl_m weight lambda.
// sign=+1, lambda_i <= 0: terms E^{(-lambda_i+s)} F^{(s)} {s} in homological
// degree s; lambda_i >= 0: F^{(lambda_i+s)} E^{(s)} {s}. sign=-1 is the
// adjoint complex with shifts {-s} in degrees -s. Terms whose boundary
// arithmetic hits the zero object are dropped; trailing zero degrees are
// truncated (thickness > n kills everything, so s <= n suffices).
inline FormalComplex rickard(int i, const WeightSeq& seq, int sign, const Convention& conv) {
    if (seq.zero) throw std::invalid_argument("rickard: zero object");
    if (i < 1 || i >= conv.m) throw std::invalid_argument("rickard: bad color");
    int li = seq.a[i] - seq.a[i - 1];  // lambda_i for 1-based color i
    FormalComplex out;
    for (int s = 0; s <= conv.n; ++s) {
        LadderWord w;
        w.domain = seq;
        int big = (li <= 0 ? -li : li) + s;
        if (li <= 0) {
            // E^{(big)} F^{(s)}: F acts first
            if (s > 0) w.gens.push_back({GenKind::F, i, s});
            if (big > 0) w.gens.insert(w.gens.begin(), {GenKind::E, i, big});
        } else {
            if (s > 0) w.gens.push_back({GenKind::E, i, s});
            if (big > 0) w.gens.insert(w.gens.begin(), {GenKind::F, i, big});
        }
        if (w.is_zero(conv)) continue;
        int hdeg = sign > 0 ? s : -s;
        int shift = sign > 0 ? s : -s;
        w.shift = shift;
        out.terms[hdeg].push_back({w, shift});
    }
    // arrows between surviving adjacent degrees
    for (auto it = out.terms.begin(); it != out.terms.end(); ++it) {
        auto nx = std::next(it);
        if (nx != out.terms.end() && nx->first == it->first + 1)
            out.arrows.push_back({it->first, sign > 0 ? "zip" : "unzip"});
    }
    return out;
}

// Reduced sequence: drop all 0 and n entries.
inline std::vector<int> reduced_sequence(const WeightSeq& s, const Convention& conv) {
    std::vector<int> r;
    for (int x : s.a)
        if (x != 0 && x != conv.n) r.push_back(x);
    return r;
}

// The unique reordering (0,...,0, interior, n,...,n) with the same reduced
// sequence, together with the word of trivial braidings realizing it
// (insertion-sort order). Moving a 0 down past x uses E^{(x)}; moving an n up
// past x uses E^{(n-x)} read as acting on the pair.
inline std::pair<WeightSeq, LadderWord> canonical_sequence(const WeightSeq& seq,
                                                           const Convention& conv) {
    if (seq.zero) throw std::invalid_argument("canonical_sequence: zero object");
    LadderWord beta;
    beta.domain = seq;
    WeightSeq cur = seq;
    bool moved = true;
    while (moved) {
        moved = false;
        for (int j = 0; j + 1 < conv.m; ++j) {
            int x = cur.a[j], y = cur.a[j + 1];
            bool zero_up = (y == 0 && x != 0);            // pull the 0 down
            bool n_down = (x == conv.n && y != conv.n);   // push the n up
            if (!zero_up && !n_down) continue;
            LadderGen g;
            if (zero_up) {
                g = {GenKind::E, j + 1, x};  // (x,0) -> (0,x)
            } else {
                g = {GenKind::E, j + 1, conv.n - y};  // (n,y) -> (y,n)
            }
            cur = apply_gen(cur, g, conv);
            if (cur.zero) throw std::logic_error("canonical_sequence: boundary died");
            beta.gens.insert(beta.gens.begin(), g);  // acts after what we have
            moved = true;
        }
    }
    return {cur, beta};
}

}  // namespace foamcat
