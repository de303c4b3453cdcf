#include "kuc/resultant.hpp"

#include <stdexcept>

namespace kuc {

Rational resultant_q(const PolyQ& a, const PolyQ& b) {
    if (a.is_zero() || b.is_zero()) return Rational(0);
    PolyQ A = a, B = b;
    Rational acc(1);
    if (A.degree() < B.degree()) {
        if ((A.degree() * B.degree()) % 2 == 1) acc = -acc;
        std::swap(A, B);
    }
    while (B.degree() >= 1) {
        PolyQ r = divrem_q(A, B).rem;
        if (r.is_zero()) return Rational(0);
        // Res(A,B) = (-1)^{dA dB} lc(B)^{dA - dr} Res(B, r)
        if ((A.degree() * B.degree()) % 2 == 1) acc = -acc;
        acc *= rational_pow(B.leading(), static_cast<unsigned long>(A.degree() - r.degree()));
        A = std::move(B);
        B = std::move(r);
    }
    acc *= rational_pow(B.leading(), static_cast<unsigned long>(A.degree()));
    return acc;
}

namespace {

PolyQ eval_coeffwise(const Poly2& p, const Rational& x0) {
    std::vector<Rational> out;
    out.reserve(p.coeffs.size());
    for (const auto& c : p.coeffs) out.push_back(eval(c, x0));
    return PolyQ(std::move(out));
}

/// Exact Lagrange interpolation through (xs[i], ys[i]); Newton form.
PolyQ interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
    const std::size_t n = xs.size();
    // divided differences
    std::vector<Rational> dd = ys;
    for (std::size_t level = 1; level < n; ++level)
        for (std::size_t i = n - 1; i >= level; --i)
            dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - level]);
    PolyQ result = PolyQ::constant(dd[n - 1]);
    for (std::size_t i = n - 1; i-- > 0;) {
        // result = result * (x - xs[i]) + dd[i]
        PolyQ lin(std::vector<Rational>{-xs[i], Rational(1)});
        result = result * lin + PolyQ::constant(dd[i]);
    }
    return result;
}

}  // namespace

PolyQ resultant_y(const Poly2& a, const Poly2& b) {
    if (a.is_zero() || b.is_zero()) return PolyQ();
    long deg_xa = 0, deg_xb = 0;
    for (const auto& c : a.coeffs) deg_xa = std::max(deg_xa, c.degree());
    for (const auto& c : b.coeffs) deg_xb = std::max(deg_xb, c.degree());
    long bound = deg_xa * b.degree() + deg_xb * a.degree();

    const PolyQ& la = a.leading();
    const PolyQ& lb = b.leading();
    std::vector<Rational> xs, ys;
    xs.reserve(static_cast<std::size_t>(bound) + 1);
    long candidate = 0;
    while (xs.size() < static_cast<std::size_t>(bound) + 1) {
        Rational x0(candidate);
        candidate = candidate > 0 ? -candidate : -candidate + 1;
        // skip points where a leading coefficient vanishes (degree drop)
        if (eval(la, x0) == 0 || eval(lb, x0) == 0) continue;
        xs.push_back(x0);
        ys.push_back(resultant_q(eval_coeffwise(a, x0), eval_coeffwise(b, x0)));
    }
    return interpolate(xs, ys);
}

namespace {

Poly2 lift(const PolyA& p) {
    std::vector<PolyQ> cs;
    cs.reserve(p.coeffs.size());
    for (const auto& c : p.coeffs) cs.push_back(c.as_poly());
    return Poly2(std::move(cs));
}

AlgebraicElement reduce_mod_defining(const PolyQ& r, const PhiContextPtr& ctx) {
    PolyQ rem = r.degree() >= ctx->k() ? divrem_q(r, ctx->defining_poly()).rem : r;
    std::vector<Rational> coords(static_cast<std::size_t>(ctx->k()), Rational(0));
    for (std::size_t i = 0; i < rem.coeffs.size(); ++i) coords[i] = rem.coeffs[i];
    return AlgebraicElement(std::move(coords), ctx);
}

/// Solve lc * x = e in Q[x]/(x^k + x - 1) by Gaussian elimination on the
/// multiplication-by-lc matrix. A solution exists whenever e is a
/// discriminant-style value divisible by lc; any solution has the right
/// value at phi because ev(lc) != 0.
AlgebraicElement divide_by_element(const AlgebraicElement& e, const AlgebraicElement& lc) {
    const PhiContextPtr& ctx = e.context();
    const std::size_t k = static_cast<std::size_t>(ctx->k());
    // columns: lc * phi^j
    std::vector<std::vector<Rational>> m(k, std::vector<Rational>(k + 1, Rational(0)));
    AlgebraicElement basis = lc;
    std::vector<Rational> xcoords(k, Rational(0));
    xcoords[1 % k] = 1;
    AlgebraicElement phi(xcoords, ctx);
    for (std::size_t j = 0; j < k; ++j) {
        for (std::size_t i = 0; i < k; ++i) m[i][j] = basis.coords()[i];
        if (j + 1 < k) basis *= phi;
    }
    for (std::size_t i = 0; i < k; ++i) m[i][k] = e.coords()[i];

    std::vector<std::size_t> pivot_col(k, k);
    std::size_t row = 0;
    for (std::size_t col = 0; col < k && row < k; ++col) {
        std::size_t sel = row;
        while (sel < k && m[sel][col] == 0) ++sel;
        if (sel == k) continue;
        std::swap(m[sel], m[row]);
        Rational inv = Rational(1) / m[row][col];
        for (std::size_t j = col; j <= k; ++j) m[row][j] *= inv;
        for (std::size_t i = 0; i < k; ++i) {
            if (i == row || m[i][col] == 0) continue;
            Rational f = m[i][col];
            for (std::size_t j = col; j <= k; ++j) m[i][j] -= f * m[row][j];
        }
        pivot_col[row] = col;
        ++row;
    }
    for (std::size_t i = row; i < k; ++i)
        if (m[i][k] != 0) throw std::runtime_error("element division: no exact quotient");
    std::vector<Rational> sol(k, Rational(0));
    for (std::size_t i = 0; i < row; ++i) sol[pivot_col[i]] = m[i][k];
    return AlgebraicElement(std::move(sol), ctx);
}

}  // namespace

AlgebraicElement discriminant(const PolyA& p) {
    PolyA q = ev_trimmed(p);
    if (q.degree() < 1) throw std::invalid_argument("discriminant requires degree >= 1");
    PhiContextPtr ctx;
    for (const auto& c : q.coeffs)
        if (c.context()) {
            ctx = c.context();
            break;
        }
    if (!ctx) ctx = PhiContext::create(2);  // rational-only polynomial, any context hosts it

    if (q.degree() == 1) return AlgebraicElement::from_rational(Rational(1), ctx);

    PolyQ res = resultant_y(lift(q), lift(derivative(q)));
    AlgebraicElement val = reduce_mod_defining(res, ctx);
    long d = q.degree();
    if (((d * (d - 1)) / 2) % 2 == 1) val = -val;

    const AlgebraicElement& lc = q.leading();
    bool lc_rational = true;
    for (std::size_t i = 1; i < lc.coords().size(); ++i)
        if (lc.context() && lc.coords()[i] != 0) lc_rational = false;
    if (!lc.context() || lc_rational) {
        Rational r = lc.context() ? lc.coords()[0] : lc.coords()[0];
        AlgebraicElement inv{Rational(1) / r};
        return val * inv;
    }
    return divide_by_element(val, lc);
}

}  // namespace kuc
