#include "oredet/ore_matrix.hpp"

#include <sstream>
#include <stdexcept>

#include "oredet/errors.hpp"

namespace oredet {

OreMatrix::OreMatrix(std::size_t n) : n_(n), e_(n * n) {
    if (n == 0) throw std::invalid_argument("OreMatrix: size must be positive");
}

OreMatrix::OreMatrix(const std::vector<std::vector<OreOp>>& rows) : OreMatrix(rows.size()) {
    for (std::size_t i = 0; i < n_; ++i) {
        if (rows[i].size() != n_) throw std::invalid_argument("OreMatrix: grid is not square");
        for (std::size_t j = 0; j < n_; ++j) (*this)(i, j) = rows[i][j];
    }
}

OreMatrix OreMatrix::identity(std::size_t n) {
    OreMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = OreOp(1);
    return m;
}

void OreMatrix::swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < n_; ++k) std::swap((*this)(i, k), (*this)(j, k));
}

bool OreMatrix::in_subring() const {
    for (const auto& a : e_)
        if (!a.in_subring()) return false;
    return true;
}

OreMatrix operator*(const OreMatrix& a, const OreMatrix& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("OreMatrix product: size mismatch");
    OreMatrix r(a.n_);
    for (std::size_t i = 0; i < a.n_; ++i)
        for (std::size_t j = 0; j < a.n_; ++j) {
            OreOp acc;
            for (std::size_t k = 0; k < a.n_; ++k) acc += a(i, k) * b(k, j);
            r(i, j) = std::move(acc);
        }
    return r;
}

std::string OreMatrix::to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < n_; ++i) {
        os << (i ? ", [" : "[");
        for (std::size_t j = 0; j < n_; ++j) os << (j ? ", " : "") << (*this)(i, j);
        os << ']';
    }
    os << ']';
    return os.str();
}

namespace {

void check_index(const OreMatrix& m, std::size_t i) {
    if (i >= m.size()) throw std::out_of_range("row index " + std::to_string(i) + " out of range");
}

struct Applier {
    OreMatrix& m;

    void operator()(const rowop::Swap& op) const {
        check_index(m, op.i);
        check_index(m, op.j);
        m.swap_rows(op.i, op.j);
    }
    void operator()(const rowop::Scale& op) const {
        check_index(m, op.i);
        if (op.c.is_zero()) throw PreconditionError("row scaling by zero");
        for (std::size_t k = 0; k < m.size(); ++k) m(op.i, k) = m(op.i, k).scaled_left(op.c);
    }
    void operator()(const rowop::AddMul& op) const {
        check_index(m, op.target);
        check_index(m, op.source);
        if (op.target == op.source) throw PreconditionError("addmul requires distinct rows");
        if (op.h.is_zero()) return;
        for (std::size_t k = 0; k < m.size(); ++k) {
            const OreOp& s = m(op.source, k);
            if (!s.is_zero()) m(op.target, k) += op.h * s;
        }
    }
};

}  // namespace

void apply_row_op_in_place(OreMatrix& m, const RowOp& op) { std::visit(Applier{m}, op); }

OreMatrix apply_row_op(const OreMatrix& m, const RowOp& op) {
    OreMatrix r = m;
    apply_row_op_in_place(r, op);
    return r;
}

OreMatrix replay(const OreMatrix& m, const RowOpTranscript& transcript) {
    OreMatrix r = m;
    for (const auto& op : transcript) apply_row_op_in_place(r, op);
    return r;
}

std::string to_string(const RowOp& op) {
    struct Printer {
        std::string operator()(const rowop::Swap& s) const {
            return "swap(" + std::to_string(s.i) + ", " + std::to_string(s.j) + ")";
        }
        std::string operator()(const rowop::Scale& s) const {
            return "scale(" + std::to_string(s.i) + ", " + s.c.to_string() + ")";
        }
        std::string operator()(const rowop::AddMul& s) const {
            return "addmul(" + std::to_string(s.target) + " += (" + s.h.to_string() + ") * row " +
                   std::to_string(s.source) + ")";
        }
    };
    return std::visit(Printer{}, op);
}

}  // namespace oredet
