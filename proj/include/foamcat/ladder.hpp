#pragma once

#include <string>
#include <vector>

#include "foamcat/weights.hpp"

namespace foamcat {

enum class GenKind { E, F };

// One ladder rung: E_i^{(k)} or F_i^{(k)} acting on rows (i, i+1).
struct LadderGen {
    GenKind kind;
    int color;      // i in 1..m-1
    int thickness;  // k >= 1

    std::string str() const {
        std::string s = (kind == GenKind::E ? "E" : "F");
        s += std::to_string(color);
        if (thickness != 1) s += "^(" + std::to_string(thickness) + ")";
        return s;
    }
};

// E_i^(k): (a_i, a_{i+1}) -> (a_i - k, a_{i+1} + k); F_i^(k) dually.
// Returns the zero object when an entry would leave [0, n].
inline WeightSeq apply_gen(const WeightSeq& s, const LadderGen& g, const Convention& conv) {
    if (s.zero) throw std::invalid_argument("apply_gen: zero object");
    if (g.color < 1 || g.color >= conv.m) throw std::invalid_argument("apply_gen: bad color");
    std::vector<int> a = s.a;
    int i = g.color - 1;
    int k = g.thickness;
    if (g.kind == GenKind::E) {
        a[i] -= k;
        a[i + 1] += k;
    } else {
        a[i] += k;
        a[i + 1] -= k;
    }
    if (a[i] < 0 || a[i] > conv.n || a[i + 1] < 0 || a[i + 1] > conv.n) return WeightSeq{};
    return WeightSeq::make(std::move(a), conv);
}

// Word of ladder generators applied right-to-left from `domain`, with a total
// grading shift. Becomes zero if any intermediate boundary leaves range.
struct LadderWord {
    WeightSeq domain;
    std::vector<LadderGen> gens;  // gens.back() acts first
    int shift = 0;

    // Boundary sequences from domain to codomain; empty if the word dies.
    std::vector<WeightSeq> boundaries(const Convention& conv) const {
        std::vector<WeightSeq> out;
        WeightSeq cur = domain;
        out.push_back(cur);
        for (auto it = gens.rbegin(); it != gens.rend(); ++it) {
            if (cur.zero) return {};
            cur = apply_gen(cur, *it, conv);
            if (cur.zero) return {};
            out.push_back(cur);
        }
        return out;
    }

    WeightSeq codomain(const Convention& conv) const {
        auto b = boundaries(conv);
        return b.empty() ? WeightSeq{} : b.back();
    }

    bool is_zero(const Convention& conv) const { return boundaries(conv).empty(); }

    LadderWord then(const LadderGen& g) const {  // post-compose (acts last)
        LadderWord w = *this;
        w.gens.insert(w.gens.begin(), g);
        return w;
    }

    std::string str() const {
        std::string s;
        for (auto& g : gens) s += g.str() + " ";
        if (shift != 0) s += "{" + std::to_string(shift) + "}";
        return s.empty() ? "id" : s;
    }
};

}  // namespace foamcat
