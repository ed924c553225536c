#pragma once

#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "foamcat/graded.hpp"
#include "foamcat/snf.hpp"

namespace foamcat {

enum class Ring { Z, Q };

// Torsion entries satisfy d1 | d2 | ... within each bidegree.
struct HomologyEntry {
    int free_rank = 0;
    std::vector<Zint> torsion;
    bool operator==(const HomologyEntry& o) const {
        return free_rank == o.free_rank && torsion == o.torsion;
    }
};

struct HomologyTable {
    // (homological degree, q-degree) -> entry; zero entries absent
    std::map<std::pair<int, int>, HomologyEntry> entries;

    bool operator==(const HomologyTable& o) const { return entries == o.entries; }

    Laurent euler_characteristic() const {
        Laurent chi;
        for (auto& [ij, e] : entries) {
            int sign = (ij.first % 2 == 0) ? 1 : -1;
            chi += Laurent::q(ij.second, sign * Zint(e.free_rank));
        }
        return chi;
    }

    int total_free_rank() const {
        int s = 0;
        for (auto& [ij, e] : entries) s += e.free_rank;
        return s;
    }

    HomologyTable shifted(int di, int dj) const {
        HomologyTable t;
        for (auto& [ij, e] : entries) t.entries[{ij.first + di, ij.second + dj}] = e;
        return t;
    }

    HomologyTable dual() const {  // (i,j) -> (-i,-j), free parts only
        HomologyTable t;
        for (auto& [ij, e] : entries) {
            if (e.free_rank == 0) continue;
            t.entries[{-ij.first, -ij.second}].free_rank = e.free_rank;
        }
        return t;
    }
};

// Bounded complex of graded free Z-modules with degree-0 integer
// differentials d_i : C_i -> C_{i+1}, d^2 = 0.
class GradedComplex {
public:
    std::map<int, GradedModule> objects;
    std::map<int, GradedMap> diffs;  // keyed by source homological degree

    const GradedModule* object(int i) const {
        auto it = objects.find(i);
        return it == objects.end() ? nullptr : &it->second;
    }

    int min_degree() const { return objects.empty() ? 0 : objects.begin()->first; }
    int max_degree() const { return objects.empty() ? 0 : objects.rbegin()->first; }

    void check_d_squared() const {
        for (auto& [i, d] : diffs) {
            auto next = diffs.find(i + 1);
            if (next == diffs.end()) continue;
            ZMat prod = next->second.entries * d.entries;
            if (prod.nnz() != 0) throw std::logic_error("GradedComplex: d^2 != 0");
        }
        for (auto& [i, d] : diffs)
            if (!d.check_homogeneous() || d.degree != 0)
                throw std::logic_error("GradedComplex: differential not q-degree 0");
    }

    Laurent euler_characteristic() const {
        Laurent chi;
        for (auto& [i, mod] : objects) {
            Laurent d = mod.graded_dim();
            chi += (i % 2 == 0) ? d : -d;
        }
        return chi;
    }
};

// Integral (or rational) homology per bidegree. The differential is
// homogeneous of q-degree 0, so the complex splits as a direct sum over
// q-degrees and each block is handled by Smith normal form / rank.
inline HomologyTable homology(const GradedComplex& c, Ring ring = Ring::Z) {
    HomologyTable table;
    std::set<int> qdegs;
    for (auto& [i, mod] : c.objects)
        for (int q : mod.degrees) qdegs.insert(q);

    // positions of generators of degree q in C_i
    auto block = [&](int i, int q) {
        std::vector<int> sel;
        auto it = c.objects.find(i);
        if (it == c.objects.end()) return sel;
        for (int k = 0; k < it->second.rank(); ++k)
            if (it->second.degrees[k] == q) sel.push_back(k);
        return sel;
    };

    for (int q : qdegs) {
        std::map<int, SmithResult> snf_at;  // SNF of d_i restricted to q-block
        auto snf_of = [&](int i) -> const SmithResult& {
            auto it = snf_at.find(i);
            if (it != snf_at.end()) return it->second;
            SmithResult r;
            auto dit = c.diffs.find(i);
            if (dit != c.diffs.end()) {
                auto rows = block(i + 1, q);
                auto cols = block(i, q);
                if (!rows.empty() && !cols.empty())
                    r = smith_normal_form(dit->second.entries.submatrix(rows, cols));
            }
            return snf_at.emplace(i, std::move(r)).first->second;
        };

        for (auto& [i, mod] : c.objects) {
            int dim = (int)block(i, q).size();
            if (dim == 0) continue;
            int rank_out = (int)snf_of(i).factors.size();
            const SmithResult& in = snf_of(i - 1);
            int rank_in = (int)in.factors.size();
            HomologyEntry e;
            e.free_rank = dim - rank_out - rank_in;
            if (e.free_rank < 0) throw std::logic_error("homology: negative rank");
            if (ring == Ring::Z)
                for (auto& d : in.factors)
                    if (d > 1) e.torsion.push_back(d);
            if (e.free_rank != 0 || !e.torsion.empty()) table.entries[{i, q}] = e;
        }
    }
    return table;
}

// Cancel a +-1 differential entry connecting single generators: the classical
// Gaussian elimination lemma for complexes. Returns a smaller complex with the
// same homology. Positions are (source degree i, target generator g, source
// generator f) with d_i[g][f] = +-1.
inline GradedComplex gaussian_eliminate(const GradedComplex& c, int i, int g, int f) {
    auto dit = c.diffs.find(i);
    if (dit == c.diffs.end()) throw std::invalid_argument("gaussian_eliminate: no differential");
    const Zint& a = dit->second.entries.at(g, f);
    if (a != 1 && a != -1) throw std::invalid_argument("gaussian_eliminate: entry not a unit");

    GradedComplex r = c;
    GradedMap& d = r.diffs[i];

    // d' = e - c a^{-1} b on the complement of f (source) and g (target)
    std::vector<std::pair<int, Zint>> row_g(d.entries.row(g).begin(), d.entries.row(g).end());
    std::vector<std::pair<int, Zint>> col_f;
    for (int rr : d.entries.col_support(f)) col_f.push_back({rr, d.entries.at(rr, f)});
    for (auto& [rr, cv] : col_f) {
        if (rr == g) continue;
        for (auto& [cc, bv] : row_g) {
            if (cc == f) continue;
            d.entries.add(rr, cc, -cv * bv / a);
        }
    }

    // drop generator f from C_i (column of d_i, row of d_{i-1})
    // and generator g from C_{i+1} (row of d_i, column of d_{i+1})
    auto drop = [](GradedModule& m, int k) { m.degrees.erase(m.degrees.begin() + k); };

    auto remap_matrix = [](const ZMat& m, int drop_row, int drop_col) {
        ZMat out(m.rows() - (drop_row >= 0 ? 1 : 0), m.cols() - (drop_col >= 0 ? 1 : 0));
        for (int rr = 0; rr < m.rows(); ++rr) {
            if (rr == drop_row) continue;
            int nr = rr - (drop_row >= 0 && rr > drop_row ? 1 : 0);
            for (auto& [cc, v] : m.row(rr)) {
                if (cc == drop_col) continue;
                int nc = cc - (drop_col >= 0 && cc > drop_col ? 1 : 0);
                out.set(nr, nc, v);
            }
        }
        return out;
    };

    d.entries = remap_matrix(d.entries, g, f);
    drop(d.source, f);
    drop(d.target, g);
    r.objects[i] = d.source;
    r.objects[i + 1] = d.target;

    if (auto p = r.diffs.find(i - 1); p != r.diffs.end()) {
        p->second.entries = remap_matrix(p->second.entries, f, -1);
        drop(p->second.target, f);
    }
    if (auto nx = r.diffs.find(i + 1); nx != r.diffs.end()) {
        nx->second.entries = remap_matrix(nx->second.entries, -1, g);
        drop(nx->second.source, g);
    }

    // prune empty boundary objects
    for (auto it = r.objects.begin(); it != r.objects.end();) {
        if (it->second.rank() == 0 && !r.diffs.count(it->first) && !r.diffs.count(it->first - 1))
            it = r.objects.erase(it);
        else
            ++it;
    }
    for (auto it = r.diffs.begin(); it != r.diffs.end();) {
        if (it->second.entries.nnz() == 0 &&
            (it->second.source.rank() == 0 || it->second.target.rank() == 0))
            it = r.diffs.erase(it);
        else
            ++it;
    }
    return r;
}

// Repeatedly cancel unit entries until none remain.
inline GradedComplex simplify_by_elimination(GradedComplex c) {
    for (;;) {
        bool found = false;
        for (auto& [i, d] : c.diffs) {
            for (int g = 0; g < d.entries.rows() && !found; ++g)
                for (auto& [f, v] : d.entries.row(g)) {
                    if (v == 1 || v == -1) {
                        c = gaussian_eliminate(c, i, g, f);
                        found = true;
                        break;
                    }
                }
            if (found) break;
        }
        if (!found) return c;
    }
}

}  // namespace foamcat
