#pragma once

#include <algorithm>
#include <vector>

#include "polynomial.hpp"
#include "rational.hpp"

namespace hlab {

// An isolating interval for one real root. Exact roots found on the way
// (a bisection point that happens to be a root) are kept as lo == hi.
struct RootInterval {
    Rational lo;
    Rational hi;
    bool exact = false;

    [[nodiscard]] Rational width() const { return hi - lo; }
    [[nodiscard]] Rational magnitude_bound() const { return std::max(abs(lo), abs(hi)); }
};

// 1 + max|a_i| / |a_deg|; every complex root lies strictly inside.
template <typename Var>
Rational cauchy_bound(const UnivariatePolynomial<Var>& p)
{
    if (p.is_zero()) {
        throw error("cauchy bound of the zero polynomial");
    }
    Rational m = 0;
    for (int i = 0; i < p.degree(); ++i) {
        m = std::max(m, Rational(abs(p.coeff(i))));
    }
    return 1 + m / abs(p.leading());
}

template <typename Var>
UnivariatePolynomial<Var> square_free_part(const UnivariatePolynomial<Var>& p)
{
    if (p.degree() <= 0) {
        return p;
    }
    const auto g = polynomial_gcd(p, p.derivative());
    return p.divmod(g).first.monic();
}

template <typename Var>
class SturmSequence
{
  public:
    explicit SturmSequence(const UnivariatePolynomial<Var>& p)
    {
        seq_.push_back(p);
        if (p.degree() <= 0) {
            return;
        }
        seq_.push_back(p.derivative());
        while (seq_.back().degree() > 0) {
            auto r = seq_[seq_.size() - 2].divmod(seq_.back()).second;
            if (r.is_zero()) {
                break;
            }
            seq_.push_back(-r);
        }
    }

    [[nodiscard]] int variations(const Rational& x) const
    {
        int count = 0;
        int last = 0;
        for (const auto& f : seq_) {
            const int s = f.sign_at(x);
            if (s == 0) {
                continue;
            }
            if (last != 0 && s != last) {
                ++count;
            }
            last = s;
        }
        return count;
    }

    // Distinct real roots in (a, b].
    [[nodiscard]] int count(const Rational& a, const Rational& b) const { return variations(a) - variations(b); }

  private:
    std::vector<UnivariatePolynomial<Var>> seq_;
};

// Isolates the distinct real roots of p, sorted ascending. Multiple roots
// are deflated through gcd(p, p') first, so every non-exact interval shows
// a strict sign change of the square-free part across its endpoints.
template <typename Var>
std::vector<RootInterval> isolate_real_roots(const UnivariatePolynomial<Var>& p, const Rational& max_width)
{
    if (p.is_zero()) {
        throw error("root isolation of the zero polynomial");
    }
    std::vector<RootInterval> out;
    if (p.degree() == 0) {
        return out;
    }
    const auto q = square_free_part(p);
    const SturmSequence<Var> sturm(q);
    const Rational bound = cauchy_bound(q);

    // Work list of half-open (a, b] with a known count of roots that are
    // not already reported. An endpoint can be an exact root; such a piece
    // keeps splitting until the root it must bracket moves off the edge.
    struct Piece {
        Rational a;
        Rational b;
        int roots;
    };
    std::vector<Piece> todo;
    if (q.sign_at(0) == 0) {
        out.push_back({0, 0, true});
    }
    todo.push_back({-bound, 0, sturm.count(-bound, 0) - (q.sign_at(0) == 0 ? 1 : 0)});
    todo.push_back({0, bound, sturm.count(0, bound)});

    while (!todo.empty()) {
        Piece piece = todo.back();
        todo.pop_back();
        if (piece.roots == 0) {
            continue;
        }
        if (piece.roots == 1 && piece.b - piece.a <= max_width && q.sign_at(piece.a) != 0 && q.sign_at(piece.b) != 0) {
            out.push_back({piece.a, piece.b, false});
            continue;
        }
        const Rational mid = (piece.a + piece.b) / 2;
        int left = sturm.count(piece.a, mid);
        if (q.sign_at(mid) == 0) {
            out.push_back({mid, mid, true});
            --left;
        }
        const int right = piece.roots - left - (q.sign_at(mid) == 0 ? 1 : 0);
        todo.push_back({piece.a, mid, left});
        todo.push_back({mid, piece.b, right});
    }
    std::sort(out.begin(), out.end(), [](const RootInterval& x, const RootInterval& y) { return x.lo < y.lo; });
    return out;
}

} // namespace hlab
