#include "kingsim/free_matrix.hpp"

#include "kingsim/errors.hpp"

namespace kingsim {

FreeMatrix::FreeMatrix(int n, int tile_size, std::vector<DynBitset> rows)
    : n_(n), tile_size_(tile_size), rows_(std::move(rows)) {
    row_weights_.reserve(rows_.size());
    col_weights_.assign(static_cast<std::size_t>(n), 0);
    for (const auto& r : rows_) {
        if (r.size() != static_cast<std::size_t>(n))
            throw InvalidParameterError("FreeMatrix: row width mismatch");
        row_weights_.push_back(r.count());
        for (Vertex v = 0; v < n; ++v)
            if (r.test(static_cast<std::size_t>(v))) ++col_weights_[static_cast<std::size_t>(v)];
    }
}

}  // namespace kingsim
