#include "tpx/galois.hpp"

#include <bit>
#include <stdexcept>

#include "tpx/errors.hpp"

namespace tpx {

namespace {

// One fixed irreducible polynomial per degree keeps every run bit-identical.
constexpr std::uint32_t kReductionPoly[17] = {
    0,
    0x3,     // x + 1
    0x7,     // x^2 + x + 1
    0xB,     // x^3 + x + 1
    0x13,    // x^4 + x + 1
    0x25,    // x^5 + x^2 + 1
    0x43,    // x^6 + x + 1
    0x89,    // x^7 + x^3 + 1
    0x11B,   // x^8 + x^4 + x^3 + x + 1
    0x211,   // x^9 + x^4 + 1
    0x409,   // x^10 + x^3 + 1
    0x805,   // x^11 + x^2 + 1
    0x1053,  // x^12 + x^6 + x^4 + x + 1
    0x201B,  // x^13 + x^4 + x^3 + x + 1
    0x4443,  // x^14 + x^10 + x^6 + x + 1
    0x8003,  // x^15 + x + 1
    0x1100B, // x^16 + x^12 + x^3 + x + 1
};

// Log/antilog tables up to this size; shift-and-reduce beyond.
constexpr int kMaxTableBits = 12;

int poly_degree(std::uint64_t p) {
    return p == 0 ? -1 : 63 - std::countl_zero(p);
}

std::uint64_t poly_mod(std::uint64_t a, std::uint64_t b) {
    int db = poly_degree(b);
    for (int da = poly_degree(a); da >= db; da = poly_degree(a)) {
        a ^= b << (da - db);
    }
    return a;
}

std::uint64_t poly_mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t mod) {
    std::uint64_t acc = 0;
    while (b) {
        if (b & 1) acc ^= a;
        a <<= 1;
        b >>= 1;
    }
    return poly_mod(acc, mod);
}

std::uint64_t poly_gcd(std::uint64_t a, std::uint64_t b) {
    while (b) {
        std::uint64_t r = poly_mod(a, b);
        a = b;
        b = r;
    }
    return a;
}

// x^(2^count) mod `mod`, by repeated squaring of x.
std::uint64_t frobenius_power(int count, std::uint64_t mod) {
    std::uint64_t cur = 0b10;
    for (int i = 0; i < count; ++i) cur = poly_mulmod(cur, cur, mod);
    return cur;
}

} // namespace

std::uint32_t Field::reduction_poly_for(int m) {
    if (m < 1 || m > 16) throw InvalidProblemError("field degree must be in [1, 16]");
    return kReductionPoly[m];
}

bool Field::is_irreducible(std::uint32_t poly, int m) {
    if (m < 1 || poly_degree(poly) != m) return false;
    // Rabin's criterion: x^(2^m) = x mod poly, and for every prime p | m
    // the polynomial x^(2^(m/p)) - x is coprime to poly.
    std::uint64_t x = poly_mod(0b10, poly); // reduce for the degree-1 case
    if (frobenius_power(m, poly) != x) return false;
    int rest = m;
    for (int p = 2; p <= rest; ++p) {
        if (rest % p != 0) continue;
        while (rest % p == 0) rest /= p;
        std::uint64_t g = poly_gcd(frobenius_power(m / p, poly) ^ x, poly);
        if (poly_degree(g) != 0) return false;
    }
    return true;
}

Field::Field(int m) : m_(m), poly_(reduction_poly_for(m)) {
    q_ = 1u << m_; // poly_ initialisation has validated m
    if (!is_irreducible(poly_, m_)) {
        throw std::logic_error("reduction polynomial table entry is not irreducible");
    }
    if (m_ > kMaxTableBits) return;
    if (m_ == 1) { // trivial multiplicative group {1}
        generator_ = 1;
        exp_ = {1, 1};
        log_ = {0, 0};
        return;
    }

    // Find a multiplicative generator and fill exp/log tables. The double
    // length exp table makes mul a single lookup without a modulo.
    const std::uint32_t group = q_ - 1;
    for (FieldElement g = 2; g < q_; ++g) {
        std::vector<FieldElement> exp(2 * group, 0);
        std::vector<std::uint16_t> log(q_, 0);
        FieldElement cur = 1;
        std::uint32_t steps = 0;
        do {
            exp[steps] = cur;
            log[cur] = static_cast<std::uint16_t>(steps);
            cur = mul_shift_reduce(cur, g);
            ++steps;
        } while (cur != 1 && steps < group);
        if (steps != group) continue; // proper subgroup, not a generator
        for (std::uint32_t i = group; i < 2 * group; ++i) exp[i] = exp[i - group];
        generator_ = g;
        exp_ = std::move(exp);
        log_ = std::move(log);
        return;
    }
    throw std::logic_error("no multiplicative generator found"); // unreachable
}

FieldElement Field::mul_shift_reduce(FieldElement a, FieldElement b) const {
    std::uint32_t acc = 0;
    std::uint32_t x = a;
    std::uint32_t y = b;
    while (y) {
        if (y & 1) acc ^= x;
        x <<= 1;
        if (x & q_) x ^= poly_;
        y >>= 1;
    }
    return static_cast<FieldElement>(acc);
}

FieldElement Field::mul(FieldElement a, FieldElement b) const {
    if (exp_.empty()) return mul_shift_reduce(a, b);
    if (a == 0 || b == 0) return 0;
    return exp_[static_cast<std::uint32_t>(log_[a]) + log_[b]];
}

FieldElement Field::pow(FieldElement a, std::uint64_t e) const {
    FieldElement result = 1;
    FieldElement base = a;
    while (e) {
        if (e & 1) result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

FieldElement Field::inv(FieldElement a) const {
    if (a == 0) throw DivisionByZeroError("inverse of zero");
    if (!exp_.empty()) return exp_[(q_ - 1) - log_[a]];
    return pow(a, q_ - 2);
}

FieldMatrix::FieldMatrix(const Field& f, int rows, int cols)
    : field_(&f), rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
    data_.assign(static_cast<std::size_t>(rows) * cols, 0);
}

FieldMatrix FieldMatrix::identity(const Field& f, int size) {
    FieldMatrix m(f, size, size);
    for (int i = 0; i < size; ++i) m.at(i, i) = 1;
    return m;
}

FieldMatrix FieldMatrix::transposed() const {
    FieldMatrix t(*field_, cols_, rows_);
    for (int r = 0; r < rows_; ++r) {
        for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    }
    return t;
}

FieldMatrix FieldMatrix::multiply(const FieldMatrix& other) const {
    if (cols_ != other.rows_) throw std::invalid_argument("matrix dimension mismatch");
    FieldMatrix out(*field_, rows_, other.cols_);
    for (int r = 0; r < rows_; ++r) {
        for (int k = 0; k < cols_; ++k) {
            FieldElement a = at(r, k);
            if (a == 0) continue;
            for (int c = 0; c < other.cols_; ++c) {
                out.at(r, c) = field_->add(out.at(r, c), field_->mul(a, other.at(k, c)));
            }
        }
    }
    return out;
}

std::vector<FieldElement> FieldMatrix::multiply_vector(std::span<const FieldElement> x) const {
    if (static_cast<int>(x.size()) != cols_) {
        throw std::invalid_argument("vector length must equal the column count");
    }
    std::vector<FieldElement> out(rows_, 0);
    for (int r = 0; r < rows_; ++r) {
        FieldElement acc = 0;
        for (int c = 0; c < cols_; ++c) acc = field_->add(acc, field_->mul(at(r, c), x[c]));
        out[r] = acc;
    }
    return out;
}

int FieldMatrix::rank() const {
    FieldMatrix work = *this;
    int r = 0;
    for (int c = 0; c < cols_ && r < rows_; ++c) {
        int pivot = -1;
        for (int i = r; i < rows_; ++i) {
            if (work.at(i, c) != 0) { pivot = i; break; }
        }
        if (pivot == -1) continue;
        for (int j = 0; j < cols_; ++j) std::swap(work.at(r, j), work.at(pivot, j));
        FieldElement inv_p = field_->inv(work.at(r, c));
        for (int i = r + 1; i < rows_; ++i) {
            FieldElement factor = field_->mul(work.at(i, c), inv_p);
            if (factor == 0) continue;
            for (int j = c; j < cols_; ++j) {
                work.at(i, j) = field_->sub(work.at(i, j), field_->mul(factor, work.at(r, j)));
            }
        }
        ++r;
    }
    return r;
}

FieldElement FieldMatrix::determinant() const {
    if (rows_ != cols_) throw std::invalid_argument("determinant of a non-square matrix");
    FieldMatrix work = *this;
    FieldElement det = 1; // characteristic 2: row swaps do not flip the sign
    for (int c = 0; c < cols_; ++c) {
        int pivot = -1;
        for (int i = c; i < rows_; ++i) {
            if (work.at(i, c) != 0) { pivot = i; break; }
        }
        if (pivot == -1) return 0;
        if (pivot != c) {
            for (int j = 0; j < cols_; ++j) std::swap(work.at(c, j), work.at(pivot, j));
        }
        FieldElement p = work.at(c, c);
        det = field_->mul(det, p);
        FieldElement inv_p = field_->inv(p);
        for (int i = c + 1; i < rows_; ++i) {
            FieldElement factor = field_->mul(work.at(i, c), inv_p);
            if (factor == 0) continue;
            for (int j = c; j < cols_; ++j) {
                work.at(i, j) = field_->sub(work.at(i, j), field_->mul(factor, work.at(c, j)));
            }
        }
    }
    return det;
}

std::vector<FieldElement> FieldMatrix::solve(std::span<const FieldElement> b) const {
    if (static_cast<int>(b.size()) != rows_) {
        throw std::invalid_argument("right-hand side length must equal the row count");
    }
    FieldMatrix work = *this;
    std::vector<FieldElement> rhs(b.begin(), b.end());

    // Gauss-Jordan; with full column rank, pivot i lands on column i.
    int pivots = 0;
    for (int c = 0; c < cols_; ++c) {
        int pivot = -1;
        for (int i = pivots; i < rows_; ++i) {
            if (work.at(i, c) != 0) { pivot = i; break; }
        }
        if (pivot == -1) {
            throw NoUniqueSolutionError("matrix is rank-deficient");
        }
        if (pivot != pivots) {
            for (int j = 0; j < cols_; ++j) std::swap(work.at(pivots, j), work.at(pivot, j));
            std::swap(rhs[pivots], rhs[pivot]);
        }
        FieldElement inv_p = field_->inv(work.at(pivots, c));
        for (int j = 0; j < cols_; ++j) work.at(pivots, j) = field_->mul(work.at(pivots, j), inv_p);
        rhs[pivots] = field_->mul(rhs[pivots], inv_p);
        for (int i = 0; i < rows_; ++i) {
            if (i == pivots) continue;
            FieldElement factor = work.at(i, c);
            if (factor == 0) continue;
            for (int j = 0; j < cols_; ++j) {
                work.at(i, j) = field_->sub(work.at(i, j), field_->mul(factor, work.at(pivots, j)));
            }
            rhs[i] = field_->sub(rhs[i], field_->mul(factor, rhs[pivots]));
        }
        ++pivots;
    }
    for (int i = pivots; i < rows_; ++i) {
        if (rhs[i] != 0) throw NoUniqueSolutionError("inconsistent linear system");
    }
    return std::vector<FieldElement>(rhs.begin(), rhs.begin() + cols_);
}

} // namespace tpx
