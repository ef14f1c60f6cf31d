#pragma once

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "oredet/ore_op.hpp"

namespace oredet {

/// Square matrix over K[d], row-major.
class OreMatrix {
public:
    OreMatrix() = default;
    /// n x n zero matrix; n must be positive.
    explicit OreMatrix(std::size_t n);
    /// Throws std::invalid_argument unless rows form a nonempty square grid.
    explicit OreMatrix(const std::vector<std::vector<OreOp>>& rows);

    static OreMatrix identity(std::size_t n);

    std::size_t size() const { return n_; }
    OreOp& operator()(std::size_t i, std::size_t j) { return e_[i * n_ + j]; }
    const OreOp& operator()(std::size_t i, std::size_t j) const { return e_[i * n_ + j]; }

    void swap_rows(std::size_t i, std::size_t j);
    bool in_subring() const;

    friend OreMatrix operator*(const OreMatrix& a, const OreMatrix& b);
    friend bool operator==(const OreMatrix& a, const OreMatrix& b) = default;

    std::string to_string() const;

private:
    std::size_t n_ = 0;
    std::vector<OreOp> e_;
};

namespace rowop {

struct Swap {
    std::size_t i, j;
};
/// row i <- c * row i, c in K nonzero.
struct Scale {
    std::size_t i;
    RatFunc c;
};
/// row target <- row target + h * row source (left multiplication by h).
struct AddMul {
    std::size_t target, source;
    OreOp h;
};

}  // namespace rowop

using RowOp = std::variant<rowop::Swap, rowop::Scale, rowop::AddMul>;
using RowOpTranscript = std::vector<RowOp>;

/// Applies one elementary row operation. Throws PreconditionError for a
/// zero scale factor or target == source in AddMul, std::out_of_range for
/// bad indices.
OreMatrix apply_row_op(const OreMatrix& m, const RowOp& op);
void apply_row_op_in_place(OreMatrix& m, const RowOp& op);
OreMatrix replay(const OreMatrix& m, const RowOpTranscript& transcript);

std::string to_string(const RowOp& op);

}  // namespace oredet
