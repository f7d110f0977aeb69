#pragma once

#include <vector>

#include "kingsim/bits.hpp"
#include "kingsim/tournament.hpp"

namespace kingsim {

/// Binary tile-by-vertex matrix: entry (i, v) is 1 iff v lies in the free
/// set of tile i (neither in the tile nor hit by a template arc out of it).
/// Row and column weights are cached eagerly; immutable after construction.
class FreeMatrix {
public:
    FreeMatrix() = default;
    FreeMatrix(int n, int tile_size, std::vector<DynBitset> rows);

    std::size_t row_count() const { return rows_.size(); }
    int col_count() const { return n_; }
    int tile_size() const { return tile_size_; }

    bool at(std::size_t row, Vertex col) const {
        return rows_[row].test(static_cast<std::size_t>(col));
    }

    const DynBitset& row(std::size_t i) const { return rows_[i]; }
    std::size_t row_weight(std::size_t i) const { return row_weights_[i]; }
    std::size_t col_weight(Vertex v) const { return col_weights_[static_cast<std::size_t>(v)]; }
    const std::vector<std::size_t>& row_weights() const { return row_weights_; }

    /// Weight of row i restricted to the given column mask.
    std::size_t row_weight_on(std::size_t i, const DynBitset& cols) const {
        return DynBitset::count_and(rows_[i], cols);
    }

private:
    int n_ = 0;
    int tile_size_ = 0;
    std::vector<DynBitset> rows_;
    std::vector<std::size_t> row_weights_;
    std::vector<std::size_t> col_weights_;
};

}  // namespace kingsim
