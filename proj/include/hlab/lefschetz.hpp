#pragma once

#include <algorithm>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "complex.hpp"
#include "rational.hpp"
#include "roots.hpp"

namespace hlab {

// The full space has dimension 4^n * r, so everything here refuses n > 6.
inline constexpr int max_exterior_dimension = 6;

inline void require_exterior_dims(int n, int r)
{
    if (n < 1 || n > max_exterior_dimension) {
        throw error("exterior algebra dimension n must lie in [1, " + std::to_string(max_exterior_dimension) + "], got " +
                    std::to_string(n));
    }
    if (r < 1) {
        throw error("fiber rank r must be positive, got " + std::to_string(r));
    }
}

// Basis monomial ξ_J ∧ ξ̄_K ⊗ e_s. J and K are bitmasks over {1..n}
// (bit j-1 for index j), which keeps them sorted for free.
struct FormBasisIndex {
    std::uint32_t J = 0;
    std::uint32_t K = 0;
    int s = 0;

    [[nodiscard]] int p() const { return std::popcount(J); }
    [[nodiscard]] int q() const { return std::popcount(K); }
    [[nodiscard]] int degree() const { return p() + q(); }

    [[nodiscard]] static std::vector<int> members(std::uint32_t mask)
    {
        std::vector<int> out;
        for (int j = 0; j < 32; ++j) {
            if ((mask >> j) & 1U) {
                out.push_back(j + 1);
            }
        }
        return out;
    }
    [[nodiscard]] std::vector<int> holomorphic() const { return members(J); }
    [[nodiscard]] std::vector<int> antiholomorphic() const { return members(K); }

    friend auto operator<=>(const FormBasisIndex&, const FormBasisIndex&) = default;
};

inline std::size_t form_dimension(int n, int r) { return (std::size_t{1} << (2 * n)) * static_cast<std::size_t>(r); }

inline std::size_t flat_index(int n, int r, const FormBasisIndex& b)
{
    return ((static_cast<std::size_t>(b.J) << n) + b.K) * static_cast<std::size_t>(r) + static_cast<std::size_t>(b.s);
}

inline FormBasisIndex basis_at(int n, int r, std::size_t idx)
{
    const auto rr = static_cast<std::size_t>(r);
    const std::size_t jk = idx / rr;
    const std::uint32_t low = (1U << n) - 1U;
    return {static_cast<std::uint32_t>(jk >> n), static_cast<std::uint32_t>(jk) & low, static_cast<int>(idx % rr)};
}

// Flat indices of all basis vectors of bidegree (p, q), ascending.
inline std::vector<std::size_t> bidegree_indices(int n, int r, int p, int q)
{
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < form_dimension(n, r); ++i) {
        const auto b = basis_at(n, r, i);
        if (b.p() == p && b.q() == q) {
            out.push_back(i);
        }
    }
    return out;
}

class FormVector
{
  public:
    FormVector(int n, int r) : n_(n), r_(r) { require_exterior_dims(n, r); }

    static FormVector basis(int n, int r, const FormBasisIndex& b, const ComplexRational& c = 1)
    {
        FormVector v(n, r);
        v.add(b, c);
        return v;
    }

    [[nodiscard]] int n() const { return n_; }
    [[nodiscard]] int r() const { return r_; }
    [[nodiscard]] const std::map<FormBasisIndex, ComplexRational>& terms() const { return terms_; }

    void add(const FormBasisIndex& b, const ComplexRational& c)
    {
        if (static_cast<int>(std::bit_width(b.J | b.K)) > n_ || b.s < 0 || b.s >= r_) {
            throw error("basis index outside the form space");
        }
        auto it = terms_.find(b);
        if (it == terms_.end()) {
            if (!c.is_zero()) {
                terms_.emplace(b, c);
            }
            return;
        }
        it->second += c;
        if (it->second.is_zero()) {
            terms_.erase(it);
        }
    }

    [[nodiscard]] ComplexRational coefficient(const FormBasisIndex& b) const
    {
        const auto it = terms_.find(b);
        return it == terms_.end() ? ComplexRational() : it->second;
    }

    [[nodiscard]] bool is_zero() const { return terms_.empty(); }

    FormVector& operator+=(const FormVector& o)
    {
        require_same_space(o);
        for (const auto& [b, c] : o.terms_) {
            add(b, c);
        }
        return *this;
    }

    friend FormVector operator+(FormVector a, const FormVector& b) { return a += b; }
    friend FormVector operator*(const ComplexRational& s, const FormVector& v)
    {
        FormVector out(v.n_, v.r_);
        for (const auto& [b, c] : v.terms_) {
            out.add(b, s * c);
        }
        return out;
    }
    friend bool operator==(const FormVector& a, const FormVector& b)
    {
        return a.n_ == b.n_ && a.r_ == b.r_ && a.terms_ == b.terms_;
    }

    // Hermitian inner product, linear in the first slot; basis monomials are orthonormal.
    [[nodiscard]] ComplexRational inner(const FormVector& o) const
    {
        require_same_space(o);
        ComplexRational acc;
        for (const auto& [b, c] : terms_) {
            const auto it = o.terms_.find(b);
            if (it != o.terms_.end()) {
                acc += c * it->second.conj();
            }
        }
        return acc;
    }

  private:
    void require_same_space(const FormVector& o) const
    {
        if (n_ != o.n_ || r_ != o.r_) {
            throw error("form vectors live in different spaces");
        }
    }

    int n_;
    int r_;
    std::map<FormBasisIndex, ComplexRational> terms_;
};

// Sparse exact linear map on the form space, stored by column.
class OperatorMatrix
{
  public:
    OperatorMatrix(int n, int r) : n_(n), r_(r)
    {
        require_exterior_dims(n, r);
        cols_.resize(form_dimension(n, r));
    }

    static OperatorMatrix identity(int n, int r)
    {
        OperatorMatrix m(n, r);
        for (std::size_t i = 0; i < m.dimension(); ++i) {
            m.add(i, i, 1);
        }
        return m;
    }

    [[nodiscard]] int n() const { return n_; }
    [[nodiscard]] int r() const { return r_; }
    [[nodiscard]] std::size_t dimension() const { return cols_.size(); }
    [[nodiscard]] const std::map<std::size_t, ComplexRational>& column(std::size_t j) const { return cols_.at(j); }

    void add(std::size_t row, std::size_t col, const ComplexRational& v)
    {
        if (v.is_zero()) {
            return;
        }
        auto& c = cols_.at(col);
        if (row >= dimension()) {
            throw error("operator row index out of range");
        }
        auto [it, inserted] = c.emplace(row, v);
        if (!inserted) {
            it->second += v;
            if (it->second.is_zero()) {
                c.erase(it);
            }
        }
    }

    [[nodiscard]] ComplexRational entry(std::size_t row, std::size_t col) const
    {
        const auto& c = cols_.at(col);
        const auto it = c.find(row);
        return it == c.end() ? ComplexRational() : it->second;
    }

    [[nodiscard]] std::size_t nonzeros() const
    {
        std::size_t k = 0;
        for (const auto& c : cols_) {
            k += c.size();
        }
        return k;
    }

    [[nodiscard]] bool is_zero() const { return nonzeros() == 0; }

    [[nodiscard]] bool is_diagonal() const
    {
        for (std::size_t j = 0; j < dimension(); ++j) {
            for (const auto& [i, v] : cols_[j]) {
                if (i != j) {
                    return false;
                }
            }
        }
        return true;
    }

    [[nodiscard]] std::vector<ComplexRational> diagonal() const
    {
        std::vector<ComplexRational> d(dimension());
        for (std::size_t j = 0; j < dimension(); ++j) {
            d[j] = entry(j, j);
        }
        return d;
    }

    [[nodiscard]] FormVector apply(const FormVector& v) const
    {
        require_space(v.n(), v.r());
        FormVector out(n_, r_);
        for (const auto& [b, c] : v.terms()) {
            for (const auto& [i, a] : cols_[flat_index(n_, r_, b)]) {
                out.add(basis_at(n_, r_, i), a * c);
            }
        }
        return out;
    }

    [[nodiscard]] OperatorMatrix adjoint() const
    {
        OperatorMatrix t(n_, r_);
        for (std::size_t j = 0; j < dimension(); ++j) {
            for (const auto& [i, v] : cols_[j]) {
                t.add(j, i, v.conj());
            }
        }
        return t;
    }

    // Inverse of a matrix with exactly one nonzero per row and column.
    [[nodiscard]] OperatorMatrix monomial_inverse() const
    {
        OperatorMatrix inv(n_, r_);
        std::vector<bool> hit(dimension(), false);
        for (std::size_t j = 0; j < dimension(); ++j) {
            if (cols_[j].size() != 1) {
                throw error("operator is not a monomial matrix");
            }
            const auto& [i, v] = *cols_[j].begin();
            if (hit[i]) {
                throw error("operator is not a monomial matrix");
            }
            hit[i] = true;
            inv.add(j, i, ComplexRational(1) / v);
        }
        return inv;
    }

    // Dense submatrix with the given row and column flat indices.
    [[nodiscard]] ComplexMatrix block(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const
    {
        std::map<std::size_t, std::size_t> row_pos;
        for (std::size_t k = 0; k < rows.size(); ++k) {
            row_pos[rows[k]] = k;
        }
        ComplexMatrix m = zero_matrix(rows.size(), cols.size());
        for (std::size_t c = 0; c < cols.size(); ++c) {
            for (const auto& [i, v] : cols_.at(cols[c])) {
                const auto it = row_pos.find(i);
                if (it != row_pos.end()) {
                    m[it->second][c] = v;
                }
            }
        }
        return m;
    }

    OperatorMatrix& operator+=(const OperatorMatrix& o)
    {
        require_space(o.n_, o.r_);
        for (std::size_t j = 0; j < dimension(); ++j) {
            for (const auto& [i, v] : o.cols_[j]) {
                add(i, j, v);
            }
        }
        return *this;
    }

    OperatorMatrix& operator*=(const ComplexRational& s)
    {
        if (s.is_zero()) {
            for (auto& c : cols_) {
                c.clear();
            }
            return *this;
        }
        for (auto& c : cols_) {
            for (auto& [i, v] : c) {
                v *= s;
            }
        }
        return *this;
    }

    friend OperatorMatrix operator+(OperatorMatrix a, const OperatorMatrix& b) { return a += b; }
    friend OperatorMatrix operator-(OperatorMatrix a, const OperatorMatrix& b)
    {
        OperatorMatrix nb = b;
        nb *= ComplexRational(-1);
        return a += nb;
    }
    friend OperatorMatrix operator*(const ComplexRational& s, OperatorMatrix a) { return a *= s; }

    // Composition: (a * b)(v) = a(b(v)).
    friend OperatorMatrix operator*(const OperatorMatrix& a, const OperatorMatrix& b)
    {
        a.require_space(b.n_, b.r_);
        OperatorMatrix c(a.n_, a.r_);
        for (std::size_t j = 0; j < b.dimension(); ++j) {
            for (const auto& [k, bv] : b.cols_[j]) {
                for (const auto& [i, av] : a.cols_[k]) {
                    c.add(i, j, av * bv);
                }
            }
        }
        return c;
    }

    friend bool operator==(const OperatorMatrix& a, const OperatorMatrix& b)
    {
        return a.n_ == b.n_ && a.r_ == b.r_ && a.cols_ == b.cols_;
    }

  private:
    void require_space(int n, int r) const
    {
        if (n != n_ || r != r_) {
            throw error("operators act on different form spaces");
        }
    }

    int n_;
    int r_;
    std::vector<std::map<std::size_t, ComplexRational>> cols_;
};

inline OperatorMatrix commutator(const OperatorMatrix& a, const OperatorMatrix& b) { return a * b - b * a; }

inline OperatorMatrix operator_power(const OperatorMatrix& a, int k)
{
    OperatorMatrix acc = OperatorMatrix::identity(a.n(), a.r());
    for (int i = 0; i < k; ++i) {
        acc = a * acc;
    }
    return acc;
}

namespace detail {

// Left wedge of one generator onto a monomial. Generators are ordered
// ξ_1..ξ_n, ξ̄_1..ξ̄_n, i.e. bit j for ξ_{j+1} and bit n+j for ξ̄_{j+1} in
// the combined mask J | K << n. Returns the sign (0 if the bit is taken).
inline int wedge_generator(std::uint32_t& mask, int bit)
{
    if ((mask >> bit) & 1U) {
        return 0;
    }
    const int below = std::popcount(mask & ((1U << bit) - 1U));
    mask |= 1U << bit;
    return below % 2 == 0 ? 1 : -1;
}

inline std::uint32_t combined(std::uint32_t J, std::uint32_t K, int n) { return J | (K << n); }

// Sign of e_A ∧ e_B = sign * e_{A ∪ B} for disjoint combined masks.
inline int wedge_sign(std::uint32_t a, std::uint32_t b)
{
    if ((a & b) != 0U) {
        return 0;
    }
    int sign = 1;
    std::uint32_t acc = b;
    // Move the generators of a, from the last one down, in front of b.
    for (int bit = 31; bit >= 0; --bit) {
        if ((a >> bit) & 1U) {
            sign *= wedge_generator(acc, bit);
        }
    }
    return sign;
}

// α ↦ ξ_j ∧ ξ̄_k ∧ α (0-based j, k), scaled by the given factor, with an
// r×r fiber matrix (nullptr means identity).
inline void add_two_form_action(OperatorMatrix& op, int j, int k, const ComplexRational& factor,
                                const ComplexMatrix* fiber)
{
    const int n = op.n();
    const int r = op.r();
    for (std::size_t col = 0; col < op.dimension(); ++col) {
        const auto b = basis_at(n, r, col);
        std::uint32_t mask = combined(b.J, b.K, n);
        const int s1 = wedge_generator(mask, n + k);
        if (s1 == 0) {
            continue;
        }
        const int s2 = wedge_generator(mask, j);
        if (s2 == 0) {
            continue;
        }
        const std::uint32_t low = (1U << n) - 1U;
        FormBasisIndex target{mask & low, mask >> n, 0};
        const ComplexRational c = factor * ComplexRational(s1 * s2);
        if (fiber == nullptr) {
            target.s = b.s;
            op.add(flat_index(n, r, target), col, c);
            continue;
        }
        for (int t = 0; t < r; ++t) {
            const auto& f = (*fiber)[static_cast<std::size_t>(t)][static_cast<std::size_t>(b.s)];
            if (f.is_zero()) {
                continue;
            }
            target.s = t;
            op.add(flat_index(n, r, target), col, c * f);
        }
    }
}

} // namespace detail

// L = ω ∧ · with ω = i Σ ξ_j ∧ ξ̄_j, acting trivially on the fiber.
inline OperatorMatrix op_L(int n, int r)
{
    OperatorMatrix op(n, r);
    for (int j = 0; j < n; ++j) {
        detail::add_two_form_action(op, j, j, ComplexRational::i(), nullptr);
    }
    return op;
}

// Λ is the adjoint of L in the orthonormal monomial basis, by definition.
inline OperatorMatrix op_Lambda(int n, int r) { return op_L(n, r).adjoint(); }

// vol = ω^n / n! = v * ξ_1..ξ_n ξ̄_1..ξ̄_n; returns v.
inline ComplexRational volume_coefficient(int n)
{
    const auto L = op_L(n, 1);
    FormVector v = FormVector::basis(n, 1, {0, 0, 0});
    for (int k = 0; k < n; ++k) {
        v = L.apply(v);
    }
    const std::uint32_t full = (1U << n) - 1U;
    return v.coefficient({full, full, 0}) / ComplexRational(Rational(factorial(static_cast<unsigned long>(n))));
}

// Complex-linear Hodge star with α ∧ conj(∗β) = ⟨α, β⟩ vol. It sends
// e_{A,B} to c * e_{B^c, A^c}; c is fixed by pairing with α = e_{A,B}.
inline OperatorMatrix op_star(int n, int r)
{
    OperatorMatrix op(n, r);
    const ComplexRational v = volume_coefficient(n);
    const std::uint32_t full = (1U << n) - 1U;
    for (std::size_t col = 0; col < op.dimension(); ++col) {
        const auto b = basis_at(n, r, col);
        const std::uint32_t Ac = full & ~b.J;
        const std::uint32_t Bc = full & ~b.K;
        // conj(e_{Bc,Ac}) = ξ̄_{Bc} ∧ ξ_{Ac} = (-1)^{|Ac||Bc|} e_{Ac,Bc}
        const int reorder = (std::popcount(Ac) * std::popcount(Bc)) % 2 == 0 ? 1 : -1;
        const int ws = detail::wedge_sign(detail::combined(b.J, b.K, n), detail::combined(Ac, Bc, n));
        // conj(c) * reorder * ws = v
        const ComplexRational c = (v / ComplexRational(reorder * ws)).conj();
        op.add(flat_index(n, r, {Bc, Ac, b.s}), col, c);
    }
    return op;
}

// Multiplier of [Λ, L] on the k-form component, or nullopt if it is not a
// scalar there. Index k runs over 0..2n.
inline std::vector<std::optional<Rational>> sl2_multipliers(int n, int r)
{
    const auto L = op_L(n, r);
    const auto c = commutator(L.adjoint(), L);
    std::vector<std::optional<Rational>> out(static_cast<std::size_t>(2 * n + 1));
    std::vector<bool> seen(out.size(), false);
    std::vector<bool> ok(out.size(), true);
    for (std::size_t j = 0; j < c.dimension(); ++j) {
        const auto k = static_cast<std::size_t>(basis_at(n, r, j).degree());
        const auto& column = c.column(j);
        ComplexRational d;
        for (const auto& [i, v] : column) {
            if (i != j) {
                ok[k] = false;
            } else {
                d = v;
            }
        }
        if (!d.is_real()) {
            ok[k] = false;
            continue;
        }
        if (!seen[k]) {
            seen[k] = true;
            out[k] = d.real;
        } else if (out[k] != d.real) {
            ok[k] = false;
        }
    }
    for (std::size_t k = 0; k < out.size(); ++k) {
        if (!ok[k]) {
            out[k].reset();
        }
    }
    return out;
}

inline bool sl2_commutator_check(int n, int r)
{
    const auto m = sl2_multipliers(n, r);
    for (int k = 0; k <= 2 * n; ++k) {
        const auto& v = m[static_cast<std::size_t>(k)];
        if (!v || *v != n - k) {
            return false;
        }
    }
    return true;
}

// Enclosures of the singular values of a dense block: square roots of the
// eigenvalues of A*A, found per connected component of its support.
struct SingularValueRange {
    RationalInterval min;
    RationalInterval max;
};

namespace detail {

inline std::vector<std::vector<std::size_t>> support_components(const ComplexMatrix& h)
{
    const std::size_t n = h.size();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            if (!h[i][j].is_zero()) {
                parent[find(i)] = find(j);
            }
        }
    }
    std::map<std::size_t, std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < n; ++i) {
        groups[find(i)].push_back(i);
    }
    std::vector<std::vector<std::size_t>> out;
    for (auto& [root, members] : groups) {
        out.push_back(std::move(members));
    }
    return out;
}

// Interval hull of all eigenvalues of a Hermitian matrix, split into the
// lowest and highest isolating intervals. 1×1 components are exact.
inline std::pair<RationalInterval, RationalInterval> hermitian_extreme_eigenvalues(const ComplexMatrix& h,
                                                                                   const Rational& width)
{
    std::optional<RationalInterval> lo;
    std::optional<RationalInterval> hi;
    auto take = [&](const RationalInterval& iv) {
        if (!lo || iv.lo < lo->lo) {
            lo = iv;
        }
        if (!hi || iv.hi > hi->hi) {
            hi = iv;
        }
    };
    for (const auto& comp : support_components(h)) {
        if (comp.size() == 1) {
            const auto& d = h[comp[0]][comp[0]];
            take({d.real, d.real});
            continue;
        }
        ComplexMatrix sub = zero_matrix(comp.size(), comp.size());
        for (std::size_t a = 0; a < comp.size(); ++a) {
            for (std::size_t b = 0; b < comp.size(); ++b) {
                sub[a][b] = h[comp[a]][comp[b]];
            }
        }
        const auto roots = hermitian_eigenvalues(sub, width);
        take({roots.front().lo, roots.front().hi});
        take({roots.back().lo, roots.back().hi});
    }
    if (!lo) {
        throw error("eigenvalues of an empty matrix");
    }
    return {*lo, *hi};
}

inline RationalInterval sqrt_of_interval(const RationalInterval& iv)
{
    const Rational lo = iv.lo < 0 ? Rational(0) : iv.lo;
    const Rational hi = iv.hi < 0 ? Rational(0) : iv.hi;
    return {sqrt_enclosure(lo).lo, sqrt_enclosure(hi).hi};
}

} // namespace detail

inline SingularValueRange singular_value_range(const ComplexMatrix& a, const Rational& width)
{
    const auto gram = matmul(conjugate_transpose(a), a);
    const auto [lo, hi] = detail::hermitian_extreme_eigenvalues(gram, width);
    return {detail::sqrt_of_interval(lo), detail::sqrt_of_interval(hi)};
}

// Operator norm enclosure of a dense matrix.
inline RationalInterval dense_operator_norm(const ComplexMatrix& a, const Rational& width)
{
    if (a.empty() || a[0].empty()) {
        return {0, 0};
    }
    return singular_value_range(a, width).max;
}

inline Rational default_enclosure_width() { return Rational(1) / Rational(Integer(1) << 30); }

struct LefschetzPowerReport {
    int k = 0;
    std::size_t source_dimension = 0;
    std::size_t target_dimension = 0;
    std::size_t rank = 0;
    bool bijective = false;
    RationalInterval sigma_min;
    RationalInterval sigma_max;
};

// L^{n-k} from k-forms to (2n-k)-forms. It preserves the splitting into
// bidegrees, so rank and singular values are computed block by block.
inline LefschetzPowerReport lefschetz_power(int n, int r, int k, const Rational& width = default_enclosure_width())
{
    require_exterior_dims(n, r);
    if (k < 0 || k > n) {
        throw error("lefschetz_power needs 0 <= k <= n, got k = " + std::to_string(k));
    }
    const auto Lk = operator_power(op_L(n, r), n - k);
    LefschetzPowerReport rep;
    rep.k = k;
    std::optional<RationalInterval> smin;
    std::optional<RationalInterval> smax;
    for (int p = 0; p <= k; ++p) {
        const int q = k - p;
        if (p > n || q > n) {
            continue;
        }
        const auto cols = bidegree_indices(n, r, p, q);
        const auto rows = bidegree_indices(n, r, p + n - k, q + n - k);
        rep.source_dimension += cols.size();
        rep.target_dimension += rows.size();
        const auto blk = Lk.block(rows, cols);
        rep.rank += matrix_rank(blk);
        const auto sv = singular_value_range(blk, width);
        if (!smin || sv.min.lo < smin->lo) {
            smin = sv.min;
        }
        if (!smax || sv.max.hi > smax->hi) {
            smax = sv.max;
        }
    }
    rep.bijective = rep.rank == rep.source_dimension && rep.rank == rep.target_dimension;
    rep.sigma_min = *smin;
    rep.sigma_max = *smax;
    return rep;
}

struct InjectivityEntry {
    int p = 0;
    int q = 0;
    std::size_t source_dimension = 0;
    std::size_t target_dimension = 0;
    std::size_t rank = 0;
    bool injective = false;
};

// L: Λ^{p,q} → Λ^{p+1,q+1} for every p, q ≤ n, by exact rank.
inline std::vector<InjectivityEntry> injectivity_scan(int n, int r)
{
    const auto L = op_L(n, r);
    std::vector<InjectivityEntry> out;
    for (int p = 0; p <= n; ++p) {
        for (int q = 0; q <= n; ++q) {
            InjectivityEntry e{p, q, 0, 0, 0, false};
            const auto cols = bidegree_indices(n, r, p, q);
            e.source_dimension = cols.size();
            if (p < n && q < n) {
                const auto rows = bidegree_indices(n, r, p + 1, q + 1);
                e.target_dimension = rows.size();
                e.rank = matrix_rank(L.block(rows, cols));
            }
            e.injective = e.rank == e.source_dimension;
            out.push_back(e);
        }
    }
    return out;
}

// Curvature iΘ(E) at a point. Diagonal is a line bundle with eigenvalues
// γ_j; Hermitian carries θ[j][k], an r×r block per (j, k), with
// iΘ = i Σ θ_{jk} ξ_j ∧ ξ̄_k and θ[j][k] = θ[k][j]^*.
class CurvatureSpec
{
  public:
    enum class Kind { Diagonal, Hermitian };

    static CurvatureSpec diagonal(std::vector<Rational> gammas)
    {
        CurvatureSpec s;
        s.kind_ = Kind::Diagonal;
        s.n_ = static_cast<int>(gammas.size());
        s.r_ = 1;
        require_exterior_dims(s.n_, 1);
        s.gammas_ = std::move(gammas);
        return s;
    }

    static CurvatureSpec hermitian(std::vector<std::vector<ComplexMatrix>> theta)
    {
        CurvatureSpec s;
        s.kind_ = Kind::Hermitian;
        s.n_ = static_cast<int>(theta.size());
        s.r_ = s.n_ == 0 || theta[0].empty() ? 0 : static_cast<int>(theta[0][0].size());
        require_exterior_dims(s.n_, s.r_);
        for (const auto& row : theta) {
            if (static_cast<int>(row.size()) != s.n_) {
                throw error("curvature must be an n x n array of fiber blocks");
            }
            for (const auto& blk : row) {
                if (static_cast<int>(blk.size()) != s.r_) {
                    throw error("curvature fiber blocks must all be r x r");
                }
                for (const auto& line : blk) {
                    if (static_cast<int>(line.size()) != s.r_) {
                        throw error("curvature fiber blocks must all be r x r");
                    }
                }
            }
        }
        for (int j = 0; j < s.n_; ++j) {
            for (int k = 0; k < s.n_; ++k) {
                const auto& a = theta[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)];
                const auto& b = theta[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
                if (a != conjugate_transpose(b)) {
                    throw error("curvature is not Hermitian: theta[" + std::to_string(j + 1) + "][" +
                                std::to_string(k + 1) + "] is not the adjoint of theta[" + std::to_string(k + 1) +
                                "][" + std::to_string(j + 1) + "]");
                }
            }
        }
        s.theta_ = std::move(theta);
        return s;
    }

    [[nodiscard]] Kind kind() const { return kind_; }
    [[nodiscard]] bool is_diagonal() const { return kind_ == Kind::Diagonal; }
    [[nodiscard]] int n() const { return n_; }
    [[nodiscard]] int r() const { return r_; }
    [[nodiscard]] const std::vector<Rational>& gammas() const { return gammas_; }
    [[nodiscard]] const std::vector<std::vector<ComplexMatrix>>& theta() const { return theta_; }

    // Curvature of E^{⊗m} for a line bundle, or the m-scaled form generally.
    [[nodiscard]] CurvatureSpec scaled(const Rational& m) const
    {
        CurvatureSpec s = *this;
        for (auto& g : s.gammas_) {
            g *= m;
        }
        for (auto& row : s.theta_) {
            for (auto& blk : row) {
                for (auto& line : blk) {
                    for (auto& x : line) {
                        x *= ComplexRational(m);
                    }
                }
            }
        }
        return s;
    }

  private:
    Kind kind_ = Kind::Diagonal;
    int n_ = 0;
    int r_ = 1;
    std::vector<Rational> gammas_;
    std::vector<std::vector<ComplexMatrix>> theta_;
};

// α ↦ iΘ ∧ α with the fiber blocks acting on the ℂ^r factor.
inline OperatorMatrix curvature_operator(const CurvatureSpec& spec)
{
    OperatorMatrix op(spec.n(), spec.r());
    if (spec.is_diagonal()) {
        for (int j = 0; j < spec.n(); ++j) {
            detail::add_two_form_action(op, j, j, ComplexRational::i() * ComplexRational(spec.gammas()[static_cast<std::size_t>(j)]),
                                        nullptr);
        }
        return op;
    }
    for (int j = 0; j < spec.n(); ++j) {
        for (int k = 0; k < spec.n(); ++k) {
            const auto& blk = spec.theta()[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)];
            detail::add_two_form_action(op, j, k, ComplexRational::i(), &blk);
        }
    }
    return op;
}

// Brute-force [Λ, iΘ].
inline OperatorMatrix commutator_matrix(const CurvatureSpec& spec)
{
    return commutator(op_Lambda(spec.n(), spec.r()), curvature_operator(spec));
}

// γ_J + γ_K − Σγ for every (J, K), in flat-index order (r = 1). This is
// the diagonal of [iΘ, Λ]; [Λ, iΘ] carries the negated values.
inline std::vector<Rational> closed_form_eigenvalues(const std::vector<Rational>& gammas)
{
    const int n = static_cast<int>(gammas.size());
    require_exterior_dims(n, 1);
    const Rational total = std::accumulate(gammas.begin(), gammas.end(), Rational(0));
    std::vector<Rational> out(form_dimension(n, 1));
    for (std::size_t i = 0; i < out.size(); ++i) {
        const auto b = basis_at(n, 1, i);
        Rational v = -total;
        for (int j = 0; j < n; ++j) {
            if ((b.J >> j) & 1U) {
                v += gammas[static_cast<std::size_t>(j)];
            }
            if ((b.K >> j) & 1U) {
                v += gammas[static_cast<std::size_t>(j)];
            }
        }
        out[i] = v;
    }
    return out;
}

struct CommutatorReport {
    bool exact = false;
    RationalInterval C;
    std::map<std::pair<int, int>, RationalInterval> table;
};

// C = max over (p,q) of C_{p,q}, the norm of [Λ, iΘ] on Λ^{p,q} ⊗ ℂ^r.
inline CommutatorReport commutator_norm(const CurvatureSpec& spec, const Rational& width = default_enclosure_width())
{
    const int n = spec.n();
    CommutatorReport rep;
    if (spec.is_diagonal()) {
        rep.exact = true;
        const auto eig = closed_form_eigenvalues(spec.gammas());
        Rational best = 0;
        for (std::size_t i = 0; i < eig.size(); ++i) {
            const auto b = basis_at(n, 1, i);
            const Rational a = abs(eig[i]);
            auto [it, inserted] = rep.table.try_emplace({b.p(), b.q()}, RationalInterval{a, a});
            if (!inserted && a > it->second.hi) {
                it->second = {a, a};
            }
            best = std::max(best, a);
        }
        rep.C = {best, best};
        return rep;
    }
    const auto m = commutator_matrix(spec);
    rep.C = {0, 0};
    bool all_exact = true;
    for (int p = 0; p <= n; ++p) {
        for (int q = 0; q <= n; ++q) {
            const auto idx = bidegree_indices(n, spec.r(), p, q);
            const auto iv = dense_operator_norm(m.block(idx, idx), width);
            all_exact = all_exact && iv.lo == iv.hi;
            rep.table[{p, q}] = iv;
            if (iv.lo > rep.C.lo) {
                rep.C.lo = iv.lo;
            }
            if (iv.hi > rep.C.hi) {
                rep.C.hi = iv.hi;
            }
        }
    }
    rep.exact = all_exact;
    return rep;
}

// Norm of an arbitrary form-space operator: one dense block per bidegree
// pair when it preserves bidegree, otherwise the whole matrix.
inline RationalInterval operator_norm(const OperatorMatrix& m, const Rational& width = default_enclosure_width())
{
    std::vector<std::size_t> all(m.dimension());
    std::iota(all.begin(), all.end(), std::size_t{0});
    return dense_operator_norm(m.block(all, all), width);
}

inline bool flatness_test(const CurvatureSpec& spec)
{
    if (!spec.is_diagonal()) {
        throw error("flatness_test takes a diagonal curvature spec");
    }
    return commutator_norm(spec).C.hi == 0;
}

// C(E^{⊗m}) = |m| C(E), cross-checked against a fresh computation.
inline Rational tensor_power_norm(const CurvatureSpec& spec, const Integer& m)
{
    if (!spec.is_diagonal()) {
        throw error("tensor_power_norm takes a diagonal curvature spec");
    }
    const Rational base = commutator_norm(spec).C.hi;
    const Rational scaled = Rational(abs(m)) * base;
    const Rational direct = commutator_norm(spec.scaled(Rational(m))).C.hi;
    if (scaled != direct) {
        throw error("commutator norm failed homogeneity: |m| C = " + scaled.get_str() + ", C(m gamma) = " +
                    direct.get_str());
    }
    return scaled;
}

} // namespace hlab
