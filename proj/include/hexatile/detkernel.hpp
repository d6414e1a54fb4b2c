#pragma once

// Exact dense linear algebra over BigInt and Rational.
//
// Two determinant kernels share one contract:
//   det_bareiss  - fraction-free elimination, every division exact;
//   det_modular  - residues modulo a fixed pool of primes below 2^62,
//                  reconstructed by CRT once the prime product exceeds twice
//                  the Hadamard bound.  Residues may be computed in parallel;
//                  the combination order is fixed, so the result is too.

#include "hexatile/exactmath.hpp"
#include "hexatile/parallel.hpp"

#include <algorithm>
#include <cstdint>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hexatile {

class singular_error : public std::domain_error {
public:
    explicit singular_error(const std::string& what) : std::domain_error("singular: " + what) {}
};

template <class T>
class DenseMatrix {
public:
    DenseMatrix() = default;
    DenseMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}
    DenseMatrix(size_t rows, size_t cols, std::vector<T> data)
        : rows_(rows), cols_(cols), data_(std::move(data))
    {
        if (data_.size() != rows_ * cols_)
            throw std::invalid_argument("matrix data size does not match dimensions");
    }

    static DenseMatrix identity(size_t n)
    {
        DenseMatrix m(n, n);
        for (size_t i = 0; i < n; ++i)
            m(i, i) = T(1);
        return m;
    }

    /// Builds an rows x cols matrix from fn(i, j) with 0-based indices.
    template <class Fn>
    static DenseMatrix generate(size_t rows, size_t cols, Fn&& fn)
    {
        DenseMatrix m(rows, cols);
        for (size_t i = 0; i < rows; ++i)
            for (size_t j = 0; j < cols; ++j)
                m(i, j) = T(fn(i, j));
        return m;
    }

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    T& operator()(size_t i, size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(size_t i, size_t j) const { return data_[i * cols_ + j]; }

    const std::vector<T>& data() const { return data_; }

    DenseMatrix block(size_t r0, size_t c0, size_t nr, size_t nc) const
    {
        if (r0 + nr > rows_ || c0 + nc > cols_)
            throw std::out_of_range("block outside matrix");
        DenseMatrix out(nr, nc);
        for (size_t i = 0; i < nr; ++i)
            for (size_t j = 0; j < nc; ++j)
                out(i, j) = (*this)(r0 + i, c0 + j);
        return out;
    }

    void set_block(size_t r0, size_t c0, const DenseMatrix& src)
    {
        if (r0 + src.rows() > rows_ || c0 + src.cols() > cols_)
            throw std::out_of_range("block outside matrix");
        for (size_t i = 0; i < src.rows(); ++i)
            for (size_t j = 0; j < src.cols(); ++j)
                (*this)(r0 + i, c0 + j) = src(i, j);
    }

    void swap_rows(size_t a, size_t b)
    {
        if (a == b)
            return;
        for (size_t j = 0; j < cols_; ++j)
            std::swap((*this)(a, j), (*this)(b, j));
    }

    /// Matrix with the listed rows and columns removed (0-based, sorted).
    DenseMatrix minor_matrix(const std::vector<size_t>& drop_rows,
                             const std::vector<size_t>& drop_cols) const
    {
        auto keep = [](size_t n, const std::vector<size_t>& drop) {
            std::vector<size_t> k;
            for (size_t i = 0; i < n; ++i)
                if (std::find(drop.begin(), drop.end(), i) == drop.end())
                    k.push_back(i);
            return k;
        };
        const auto kr = keep(rows_, drop_rows);
        const auto kc = keep(cols_, drop_cols);
        DenseMatrix out(kr.size(), kc.size());
        for (size_t i = 0; i < kr.size(); ++i)
            for (size_t j = 0; j < kc.size(); ++j)
                out(i, j) = (*this)(kr[i], kc[j]);
        return out;
    }

    bool operator==(const DenseMatrix& o) const
    {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

    DenseMatrix operator+(const DenseMatrix& o) const
    {
        check_same(o);
        DenseMatrix out(*this);
        for (size_t i = 0; i < data_.size(); ++i)
            out.data_[i] += o.data_[i];
        return out;
    }

    DenseMatrix operator-(const DenseMatrix& o) const
    {
        check_same(o);
        DenseMatrix out(*this);
        for (size_t i = 0; i < data_.size(); ++i)
            out.data_[i] -= o.data_[i];
        return out;
    }

    DenseMatrix operator*(const DenseMatrix& o) const
    {
        if (cols_ != o.rows_)
            throw std::invalid_argument("matrix product dimension mismatch");
        DenseMatrix out(rows_, o.cols_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t k = 0; k < cols_; ++k) {
                const T& lhs = (*this)(i, k);
                if (lhs == 0)
                    continue;
                for (size_t j = 0; j < o.cols_; ++j)
                    out(i, j) += lhs * o(k, j);
            }
        return out;
    }

private:
    void check_same(const DenseMatrix& o) const
    {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw std::invalid_argument("matrix dimension mismatch");
    }

    size_t rows_ = 0;
    size_t cols_ = 0;
    std::vector<T> data_;
};

using IntMatrix = DenseMatrix<BigInt>;
using RatMatrix = DenseMatrix<Rational>;

inline RatMatrix to_rational(const IntMatrix& m)
{
    RatMatrix out(m.rows(), m.cols());
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j)
            out(i, j) = Rational(m(i, j));
    return out;
}

namespace detail {

inline void require_square(size_t rows, size_t cols, const char* who)
{
    if (rows != cols)
        throw std::invalid_argument(std::string(who) + ": matrix is not square (" +
                                    std::to_string(rows) + "x" + std::to_string(cols) + ")");
}

using u64 = std::uint64_t;
using u128 = unsigned __int128;

inline u64 mul_mod(u64 a, u64 b, u64 m) { return static_cast<u64>(u128(a) * b % m); }

inline u64 pow_mod(u64 base, u64 exp, u64 m)
{
    u64 r = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1)
            r = mul_mod(r, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return r;
}

/// Deterministic Miller-Rabin for 64-bit integers.
inline bool is_prime_u64(u64 n)
{
    if (n < 2)
        return false;
    for (u64 q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % q == 0)
            return n == q;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1)
            continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite)
            return false;
    }
    return true;
}

/// det(m) mod q by Gaussian elimination in GF(q).
inline u64 det_mod_prime(const IntMatrix& m, u64 q)
{
    const size_t n = m.rows();
    std::vector<u64> a(n * n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            a[i * n + j] = mpz_fdiv_ui(m(i, j).get_mpz_t(), q);
    u64 det = 1;
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && a[piv * n + col] == 0)
            ++piv;
        if (piv == n)
            return 0;
        if (piv != col) {
            for (size_t j = 0; j < n; ++j)
                std::swap(a[piv * n + j], a[col * n + j]);
            det = (q - det) % q;
        }
        const u64 pv = a[col * n + col];
        det = mul_mod(det, pv, q);
        const u64 inv = pow_mod(pv, q - 2, q);
        for (size_t r = col + 1; r < n; ++r) {
            u64 f = a[r * n + col];
            if (f == 0)
                continue;
            f = mul_mod(f, inv, q);
            for (size_t j = col; j < n; ++j) {
                const u64 sub = mul_mod(f, a[col * n + j], q);
                u64& e = a[r * n + j];
                e = e >= sub ? e - sub : e + q - sub;
            }
        }
    }
    return det;
}

} // namespace detail

/// The fixed prime pool: the `count` largest primes below 2^62, descending.
inline std::vector<std::uint64_t> modular_primes(size_t count)
{
    static std::mutex mutex;
    static std::vector<std::uint64_t> cache;
    std::lock_guard<std::mutex> lock(mutex);
    std::uint64_t candidate = cache.empty() ? (std::uint64_t(1) << 62) - 1 : cache.back() - 2;
    while (cache.size() < count) {
        if (detail::is_prime_u64(candidate))
            cache.push_back(candidate);
        candidate -= 2;
    }
    return {cache.begin(), cache.begin() + static_cast<std::ptrdiff_t>(count)};
}

/// Product of the Euclidean row norms, each rounded up to an integer.
inline BigInt hadamard_bound(const IntMatrix& m)
{
    BigInt bound(1);
    for (size_t i = 0; i < m.rows(); ++i) {
        BigInt sq(0);
        for (size_t j = 0; j < m.cols(); ++j)
            sq += m(i, j) * m(i, j);
        bound *= isqrt_ceil(sq);
    }
    return bound;
}

inline BigInt det_bareiss(IntMatrix m)
{
    detail::require_square(m.rows(), m.cols(), "det_bareiss");
    const size_t n = m.rows();
    if (n == 0)
        return BigInt(1);
    int sign = 1;
    BigInt prev(1);
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            size_t piv = k + 1;
            while (piv < n && m(piv, k) == 0)
                ++piv;
            if (piv == n)
                return BigInt(0);
            m.swap_rows(k, piv);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                BigInt t = m(k, k) * m(i, j) - m(i, k) * m(k, j);
                mpz_divexact(m(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            m(i, k) = 0;
        }
        prev = m(k, k);
    }
    return sign > 0 ? m(n - 1, n - 1) : BigInt(-m(n - 1, n - 1));
}

inline BigInt det_modular(const IntMatrix& m, unsigned threads = 0)
{
    detail::require_square(m.rows(), m.cols(), "det_modular");
    if (m.rows() == 0)
        return BigInt(1);
    const BigInt target = 2 * hadamard_bound(m);
    if (target == 0)
        return BigInt(0);
    // each prime contributes just under 62 bits
    const size_t needed = mpz_sizeinbase(target.get_mpz_t(), 2) / 61 + 1;
    const auto primes = modular_primes(needed);
    std::vector<std::uint64_t> residues(needed);
    parallel_for(
        needed, [&](size_t i) { residues[i] = detail::det_mod_prime(m, primes[i]); }, threads);

    // Garner-style incremental CRT in pool order
    BigInt value(residues[0]);
    BigInt modulus(primes[0]);
    for (size_t i = 1; i < needed; ++i) {
        const std::uint64_t q = primes[i];
        const std::uint64_t cur = mpz_fdiv_ui(value.get_mpz_t(), q);
        const std::uint64_t mod_q = mpz_fdiv_ui(modulus.get_mpz_t(), q);
        const std::uint64_t diff = residues[i] >= cur ? residues[i] - cur : residues[i] + q - cur;
        const std::uint64_t t = detail::mul_mod(diff, detail::pow_mod(mod_q, q - 2, q), q);
        value += modulus * BigInt(static_cast<unsigned long>(t));
        modulus *= BigInt(static_cast<unsigned long>(q));
    }
    if (2 * value > modulus)
        value -= modulus;
    return value;
}

/// Determinant of a rational matrix: scale each row to integers by the lcm
/// of its denominators, take the integer determinant, divide back.
inline Rational det_rational(const RatMatrix& m)
{
    detail::require_square(m.rows(), m.cols(), "det_rational");
    const size_t n = m.rows();
    IntMatrix scaled(n, n);
    BigInt scale(1);
    for (size_t i = 0; i < n; ++i) {
        BigInt l(1);
        for (size_t j = 0; j < n; ++j)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
        for (size_t j = 0; j < n; ++j)
            scaled(i, j) = m(i, j).get_num() * (l / m(i, j).get_den());
        scale *= l;
    }
    return make_rational(det_bareiss(std::move(scaled)), scale);
}

/// Exact solution X of m * X = rhs by fraction-free elimination and
/// fraction-free back substitution (Cramer numerators over det m).
inline RatMatrix solve_exact(const IntMatrix& m, const IntMatrix& rhs)
{
    detail::require_square(m.rows(), m.cols(), "solve_exact");
    if (rhs.rows() != m.rows())
        throw std::invalid_argument("solve_exact: rhs row count mismatch");
    const size_t n = m.rows();
    const size_t k = rhs.cols();
    IntMatrix aug(n, n + k);
    aug.set_block(0, 0, m);
    aug.set_block(0, n, rhs);
    int sign = 1;
    BigInt prev(1);
    for (size_t col = 0; col < n; ++col) {
        if (aug(col, col) == 0) {
            size_t piv = col + 1;
            while (piv < n && aug(piv, col) == 0)
                ++piv;
            if (piv == n)
                throw singular_error("solve_exact");
            aug.swap_rows(col, piv);
            sign = -sign;
        }
        for (size_t i = col + 1; i < n; ++i) {
            for (size_t j = col + 1; j < n + k; ++j) {
                BigInt t = aug(col, col) * aug(i, j) - aug(i, col) * aug(col, j);
                mpz_divexact(aug(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            aug(i, col) = 0;
        }
        prev = aug(col, col);
    }
    const BigInt det = aug(n - 1, n - 1);
    RatMatrix x(n, k);
    // y_i = det * x_i are integers; divisions below are exact
    for (size_t r = 0; r < k; ++r) {
        std::vector<BigInt> y(n);
        for (size_t ii = n; ii-- > 0;) {
            BigInt acc = det * aug(ii, n + r);
            for (size_t j = ii + 1; j < n; ++j)
                acc -= aug(ii, j) * y[j];
            mpz_divexact(y[ii].get_mpz_t(), acc.get_mpz_t(), aug(ii, ii).get_mpz_t());
        }
        for (size_t ii = 0; ii < n; ++ii)
            x(ii, r) = make_rational(y[ii], det);
    }
    return x;
}

inline RatMatrix solve_exact(const RatMatrix& m, const RatMatrix& rhs)
{
    // scale each row of [m | rhs] to integers; the solution is unchanged
    const size_t n = m.rows();
    IntMatrix mi(n, m.cols());
    IntMatrix ri(n, rhs.cols());
    for (size_t i = 0; i < n; ++i) {
        BigInt l(1);
        for (size_t j = 0; j < m.cols(); ++j)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
        for (size_t j = 0; j < rhs.cols(); ++j)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), rhs(i, j).get_den_mpz_t());
        for (size_t j = 0; j < m.cols(); ++j)
            mi(i, j) = m(i, j).get_num() * (l / m(i, j).get_den());
        for (size_t j = 0; j < rhs.cols(); ++j)
            ri(i, j) = rhs(i, j).get_num() * (l / rhs(i, j).get_den());
    }
    return solve_exact(mi, ri);
}

enum class SystemStatus { Unique, Inconsistent, Underdetermined };

struct SystemSolution {
    SystemStatus status = SystemStatus::Unique;
    std::vector<Rational> x;
    size_t rank = 0;
};

/// Solves a (possibly overdetermined) system a * x = b exactly.  Reports
/// Inconsistent when no x satisfies every row and Underdetermined when the
/// column rank is deficient.
inline SystemSolution solve_system(const RatMatrix& a, const std::vector<Rational>& b)
{
    if (b.size() != a.rows())
        throw std::invalid_argument("solve_system: rhs size mismatch");
    const size_t rows = a.rows();
    const size_t cols = a.cols();
    RatMatrix aug(rows, cols + 1);
    aug.set_block(0, 0, a);
    for (size_t i = 0; i < rows; ++i)
        aug(i, cols) = b[i];

    SystemSolution out;
    std::vector<size_t> pivot_col;
    size_t r = 0;
    for (size_t col = 0; col < cols && r < rows; ++col) {
        size_t piv = r;
        while (piv < rows && aug(piv, col) == 0)
            ++piv;
        if (piv == rows)
            continue;
        aug.swap_rows(r, piv);
        const Rational inv = 1 / aug(r, col);
        for (size_t j = col; j <= cols; ++j)
            aug(r, j) *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || aug(i, col) == 0)
                continue;
            const Rational f = aug(i, col);
            for (size_t j = col; j <= cols; ++j)
                aug(i, j) -= f * aug(r, j);
        }
        pivot_col.push_back(col);
        ++r;
    }
    out.rank = r;
    for (size_t i = r; i < rows; ++i)
        if (aug(i, cols) != 0) {
            out.status = SystemStatus::Inconsistent;
            return out;
        }
    if (r < cols) {
        out.status = SystemStatus::Underdetermined;
        return out;
    }
    out.x.assign(cols, Rational(0));
    for (size_t i = 0; i < r; ++i)
        out.x[pivot_col[i]] = aug(i, cols);
    return out;
}

} // namespace hexatile
