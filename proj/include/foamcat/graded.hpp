#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "foamcat/laurent.hpp"
#include "foamcat/zmatrix.hpp"

namespace foamcat {

// Free graded Z-module, presented by a list of generators with q-degrees.
// Generator ids are opaque and sequential within an owning complex; they are
// never reused once a generator has been eliminated.
struct GradedModule {
    std::vector<int> degrees;  // q-degree per generator, indexed by position

    int rank() const { return (int)degrees.size(); }

    Laurent graded_dim() const {
        Laurent d;
        for (int q : degrees) d += Laurent::q(q);
        return d;
    }
};

// Homogeneous map of graded free modules, stored as a sparse integer matrix
// indexed (target generator, source generator). Entry (g, f) may be nonzero
// only when deg(g) = deg(f) + degree.
struct GradedMap {
    GradedModule source, target;
    int degree = 0;
    ZMat entries;

    GradedMap() = default;
    GradedMap(GradedModule s, GradedModule t, int deg)
        : source(std::move(s)), target(std::move(t)), degree(deg),
          entries(target.rank(), source.rank()) {}

    void set(int g, int f, Zint v) {
        if (v != 0 && target.degrees[g] != source.degrees[f] + degree)
            throw std::logic_error("GradedMap: inhomogeneous entry");
        entries.set(g, f, std::move(v));
    }

    bool check_homogeneous() const {
        for (int g = 0; g < entries.rows(); ++g)
            for (auto& [f, v] : entries.row(g))
                if (target.degrees[g] != source.degrees[f] + degree) return false;
        return true;
    }
};

}  // namespace foamcat
