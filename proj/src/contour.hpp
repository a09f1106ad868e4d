#pragma once

// Internal helpers shared by the topology estimator and the numeric adjacency
// sampler: a cell-centre grid, union-find, and marching-squares tracing of the
// leaf zero sets of a region.

#include "dstrat/region_model.hpp"

#include <cstdint>
#include <numeric>
#include <vector>

namespace dstrat::detail {

class UnionFind {
  public:
    explicit UnionFind(std::size_t n = 0) : parent_(n), rank_(n, 0) { std::iota(parent_.begin(), parent_.end(), 0); }
    std::size_t add() {
        parent_.push_back(parent_.size());
        rank_.push_back(0);
        return parent_.size() - 1;
    }
    std::size_t find(std::size_t a) {
        while (parent_[a] != a) {
            parent_[a] = parent_[parent_[a]];
            a = parent_[a];
        }
        return a;
    }
    bool unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (rank_[a] < rank_[b]) std::swap(a, b);
        parent_[b] = a;
        if (rank_[a] == rank_[b]) ++rank_[a];
        return true;
    }
    std::size_t size() const { return parent_.size(); }

  private:
    std::vector<std::size_t> parent_;
    std::vector<unsigned char> rank_;
};

// n x n samples at the centres of the cells of a window.
struct CellGrid {
    Window w;
    int n;
    double hx() const { return (w.x1 - w.x0) / n; }
    double hy() const { return (w.y1 - w.y0) / n; }
    double cx(int i) const { return w.x0 + (i + 0.5) * hx(); }
    double cy(int j) const { return w.y0 + (j + 0.5) * hy(); }
};

// Leaves grouped by exact proportionality, so that {x < 0} and {-x < 0}
// share one traced curve.
struct LeafClass {
    std::vector<bool> members;  // indexed by depth-first leaf id
    const RegionLeaf* representative;
};

std::vector<LeafClass> leaf_classes(const RegionExpr& region);

struct CurvePiece {
    double ax, ay, bx, by;
    std::int64_t va, vb;  // vertex keys; equal keys denote the same point
    bool a_on_border, b_on_border;
    int leaf_class;
    StratumKind stratum;  // of the piece's interior
};

// Traces every leaf class's zero set on the grid's sample lattice, splits the
// segments where curves of different classes cross inside a cell, and
// classifies each piece at its midpoint with its own class forced to zero.
// The piece at index k of the result lies in sample cell cell_of[k].
struct TraceResult {
    std::vector<CurvePiece> pieces;
    std::vector<int> cell_of;  // i + j * (n - 1)
};

TraceResult trace_curves(const StabilityTheory& t, const CellGrid& grid);

}  // namespace dstrat::detail
