#pragma once

#include "herzslice/slice.hpp"

namespace herzslice::detail {

// Distinct values of |f| in descending order, each with the flat indices of
// the cells attaining it.  Weak norms sweep these levels so that the
// super-level sets grow one batch of cells at a time.
struct LevelSweep {
    struct Level {
        double value;
        std::vector<std::int64_t> cells;
    };
    std::vector<Level> levels;

    static LevelSweep build(const GridFunction& f);
};

// Running slice norm of the indicator of a growing cell set.  C(x') counts
// set cells inside the stencil around each enlarged-grid position x'; since
// the indicator's inner bracket is C/count, the whole L^q sum is a table
// lookup per touched position.  Adding a cell costs O(stencil), reading the
// norm O(1).
class IndicatorSliceNorm {
  public:
    IndicatorSliceNorm(const GridSpec& grid, const SliceParams& sp);

    void add_cell(std::int64_t flat_index);  // original-grid index, idempotent misuse unchecked
    double norm() const;

  private:
    GridSpec grid_;
    SliceParams sp_;
    BallStencil stencil_;
    int pad_ = 0;        // ceil(t/h)
    int n_out_ = 0;      // enlarged cells per axis
    double hn_ = 0.0;
    std::vector<std::int32_t> counts_;
    std::vector<long double> table_;  // table_[m] = ((m/count)^{1/r})^q
    long double sum_ = 0;             // sum over positions of table_[C]
    std::int32_t max_count_ = 0;
};

}  // namespace herzslice::detail
