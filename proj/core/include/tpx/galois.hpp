#ifndef TPX_GALOIS_HPP
#define TPX_GALOIS_HPP

#include <cstdint>
#include <span>
#include <vector>

namespace tpx {

/// A field element in polynomial-basis bit representation, value in [0, q).
/// Arithmetic lives on Field so elements stay trivially copyable.
using FieldElement = std::uint16_t;

/// GF(2^m) for m in [1, 16], with a fixed irreducible reduction polynomial
/// per m so results are bit-reproducible everywhere. Construction verifies
/// irreducibility. For m <= 12 log/antilog tables are precomputed; larger
/// fields multiply by shift-and-reduce. Both paths give identical results.
class Field {
public:
    explicit Field(int m);

    int bits() const { return m_; }
    std::uint32_t order() const { return q_; }
    std::uint32_t reduction_poly() const { return poly_; }

    FieldElement add(FieldElement a, FieldElement b) const {
        return static_cast<FieldElement>(a ^ b);
    }
    // Characteristic 2: subtraction is addition.
    FieldElement sub(FieldElement a, FieldElement b) const { return add(a, b); }
    FieldElement mul(FieldElement a, FieldElement b) const;
    FieldElement pow(FieldElement a, std::uint64_t e) const;
    /// Throws DivisionByZeroError on zero.
    FieldElement inv(FieldElement a) const;
    FieldElement div(FieldElement a, FieldElement b) const { return mul(a, inv(b)); }

    /// The fixed reduction polynomial for GF(2^m).
    static std::uint32_t reduction_poly_for(int m);

    /// Degree-m irreducibility over GF(2): x^(2^m) = x mod poly and
    /// gcd(x^(2^(m/p)) - x, poly) = 1 for every prime p dividing m.
    static bool is_irreducible(std::uint32_t poly, int m);

private:
    FieldElement mul_shift_reduce(FieldElement a, FieldElement b) const;

    int m_ = 0;
    std::uint32_t q_ = 0;
    std::uint32_t poly_ = 0;
    FieldElement generator_ = 0;     // only meaningful when tables are built
    std::vector<FieldElement> exp_;  // empty when m > 12
    std::vector<std::uint16_t> log_;
};

/// Dense row-major matrix over a Field. Holds a pointer to the field it was
/// built over; the Field must outlive the matrix.
class FieldMatrix {
public:
    FieldMatrix(const Field& f, int rows, int cols);

    static FieldMatrix identity(const Field& f, int size);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const Field& field() const { return *field_; }

    FieldElement at(int r, int c) const { return data_[std::size_t(r) * cols_ + c]; }
    FieldElement& at(int r, int c) { return data_[std::size_t(r) * cols_ + c]; }

    FieldMatrix transposed() const;
    FieldMatrix multiply(const FieldMatrix& other) const;
    std::vector<FieldElement> multiply_vector(std::span<const FieldElement> x) const;

    /// Row rank by Gaussian elimination.
    int rank() const;

    /// Square matrices only; product of the pivots after elimination.
    FieldElement determinant() const;

    /// Unique x with (*this) * x = b, for a matrix of full column rank and a
    /// consistent right-hand side (the system may be overdetermined).
    /// Throws NoUniqueSolutionError when rank-deficient or inconsistent.
    std::vector<FieldElement> solve(std::span<const FieldElement> b) const;

    bool operator==(const FieldMatrix& other) const {
        return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
    }

private:
    const Field* field_;
    int rows_ = 0;
    int cols_ = 0;
    std::vector<FieldElement> data_;
};

} // namespace tpx

#endif // TPX_GALOIS_HPP
