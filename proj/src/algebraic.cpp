#include "kuc/algebraic.hpp"

#include <sstream>

namespace kuc {

AlgebraicElement::AlgebraicElement(std::vector<Rational> coords, PhiContextPtr ctx)
    : coords_(std::move(coords)), ctx_(std::move(ctx)) {
    if (!ctx_) throw std::invalid_argument("null context");
    if (coords_.size() != static_cast<std::size_t>(ctx_->k()))
        throw std::invalid_argument("coordinate vector must have length k");
}

AlgebraicElement AlgebraicElement::from_alpha(const Rational& a, const Rational& b, const PhiContextPtr& ctx) {
    std::vector<Rational> cs(static_cast<std::size_t>(ctx->k()), Rational(0));
    cs[0] = a;
    cs[cs.size() - 1] = b;  // alpha_k = phi^{k-1}
    return AlgebraicElement(std::move(cs), ctx);
}

AlgebraicElement AlgebraicElement::from_rational(const Rational& v, const PhiContextPtr& ctx) {
    std::vector<Rational> cs(static_cast<std::size_t>(ctx->k()), Rational(0));
    cs[0] = v;
    return AlgebraicElement(std::move(cs), ctx);
}

bool AlgebraicElement::structurally_zero() const {
    for (const auto& c : coords_)
        if (c != 0) return false;
    return true;
}

Rational AlgebraicElement::rational_value() const {
    for (std::size_t i = 1; i < coords_.size(); ++i)
        if (coords_[i] != 0) throw std::logic_error("element is not a rational constant");
    return coords_[0];
}

void AlgebraicElement::promote(AlgebraicElement& a, const AlgebraicElement& b) {
    if (a.ctx_ && b.ctx_) {
        if (a.ctx_->k() != b.ctx_->k()) throw ContextMismatch();
        return;
    }
    if (!a.ctx_ && b.ctx_) {
        Rational v = a.coords_[0];
        a = from_rational(v, b.ctx_);
    }
}

AlgebraicElement AlgebraicElement::operator-() const {
    AlgebraicElement r = *this;
    for (auto& c : r.coords_) c = -c;
    return r;
}

AlgebraicElement& AlgebraicElement::operator+=(const AlgebraicElement& o) {
    promote(*this, o);
    if (!o.ctx_) {
        coords_[0] += o.coords_[0];
        return *this;
    }
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
    return *this;
}

AlgebraicElement& AlgebraicElement::operator-=(const AlgebraicElement& o) {
    promote(*this, o);
    if (!o.ctx_) {
        coords_[0] -= o.coords_[0];
        return *this;
    }
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
    return *this;
}

AlgebraicElement& AlgebraicElement::operator*=(const AlgebraicElement& o) {
    promote(*this, o);
    if (!o.ctx_) {
        const Rational& s = o.coords_[0];
        for (auto& c : coords_) c *= s;
        return *this;
    }
    const std::size_t k = coords_.size();
    std::vector<Rational> prod(2 * k - 1, Rational(0));
    for (std::size_t i = 0; i < k; ++i) {
        if (coords_[i] == 0) continue;
        for (std::size_t j = 0; j < k; ++j) {
            if (o.coords_[j] == 0) continue;
            prod[i + j] += coords_[i] * o.coords_[j];
        }
    }
    // reduce modulo x^k + x - 1 via x^{k+i} = x^i - x^{i+1}
    for (std::size_t m = prod.size(); m-- > k;) {
        if (prod[m] == 0) continue;
        prod[m - k] += prod[m];
        prod[m - k + 1] -= prod[m];
        prod[m] = 0;
    }
    prod.resize(k);
    coords_ = std::move(prod);
    return *this;
}

bool AlgebraicElement::operator==(const AlgebraicElement& o) const {
    if (!ctx_ && !o.ctx_) return coords_[0] == o.coords_[0];
    if (!ctx_) return o == *this;
    if (!o.ctx_) {
        if (coords_[0] != o.coords_[0]) return false;
        for (std::size_t i = 1; i < coords_.size(); ++i)
            if (coords_[i] != 0) return false;
        return true;
    }
    if (ctx_->k() != o.ctx_->k()) return false;
    return coords_ == o.coords_;
}

IntervalValue AlgebraicElement::enclosure(const IntervalValue& phi_box) const {
    if (!ctx_) return IntervalValue(coords_[0], coords_[0]);
    return eval_interval(as_poly(), phi_box);
}

std::string AlgebraicElement::to_string() const {
    std::ostringstream os;
    os << "(" << poly_to_string(PolyQ(coords_), "phi") << ")";
    return os.str();
}

AlgebraicElement alg_pow(const AlgebraicElement& a, unsigned long e) {
    AlgebraicElement r{Rational(1)};
    AlgebraicElement b = a;
    unsigned long n = e;
    while (n > 0) {
        if (n & 1) r *= b;
        b *= b;
        n >>= 1;
    }
    return r;
}

std::optional<AlgebraicElement> try_exact_divide(const AlgebraicElement& num, const AlgebraicElement& den) {
    if (den.is_scalar()) {
        const Rational& d = den.coords()[0];
        if (d == 0) return std::nullopt;
        return num * AlgebraicElement(Rational(1) / d);
    }
    AlgebraicElement n = num;
    if (n.is_scalar()) n = AlgebraicElement::from_rational(n.coords()[0], den.context());
    if (n.context()->k() != den.context()->k()) throw ContextMismatch();

    const std::size_t k = n.coords().size();
    // columns: den * phi^j in coordinates, augmented with num
    std::vector<std::vector<Rational>> m(k, std::vector<Rational>(k + 1, Rational(0)));
    std::vector<Rational> xc(k, Rational(0));
    xc[1] = 1;
    AlgebraicElement phi(xc, den.context());
    AlgebraicElement col = den;
    for (std::size_t j = 0; j < k; ++j) {
        for (std::size_t i = 0; i < k; ++i) m[i][j] = col.coords()[i];
        if (j + 1 < k) col *= phi;
    }
    for (std::size_t i = 0; i < k; ++i) m[i][k] = n.coords()[i];

    std::vector<std::size_t> pivot_col;
    std::size_t row = 0;
    for (std::size_t c = 0; c < k && row < k; ++c) {
        std::size_t sel = row;
        while (sel < k && m[sel][c] == 0) ++sel;
        if (sel == k) continue;
        std::swap(m[sel], m[row]);
        Rational inv = Rational(1) / m[row][c];
        for (std::size_t j = c; j <= k; ++j) m[row][j] *= inv;
        for (std::size_t i = 0; i < k; ++i) {
            if (i == row || m[i][c] == 0) continue;
            Rational f = m[i][c];
            for (std::size_t j = c; j <= k; ++j) m[i][j] -= f * m[row][j];
        }
        pivot_col.push_back(c);
        ++row;
    }
    for (std::size_t i = row; i < k; ++i)
        if (m[i][k] != 0) return std::nullopt;
    std::vector<Rational> sol(k, Rational(0));
    for (std::size_t i = 0; i < row; ++i) sol[pivot_col[i]] = m[i][k];
    return AlgebraicElement(std::move(sol), den.context());
}

int sign_of(const AlgebraicElement& a) {
    if (a.is_scalar()) return sgn(a.coords()[0]);
    if (a.structurally_zero()) return 0;

    const PhiContext& ctx = *a.context();
    PolyQ rep = a.as_poly();

    // Exact zero test first: a(phi) = 0 iff gcd(a, x^k + x - 1) has a root in
    // the isolating interval. The only root of the defining polynomial there
    // is phi itself, so a Sturm count of the gcd decides membership. Dyadic
    // endpoints are never roots of a divisor of x^k + x - 1 (its rational
    // roots could only be +-1).
    PolyQ g = gcd_q(rep, ctx.defining_poly());
    if (g.degree() >= 1) {
        const IntervalValue& box = ctx.enclosure();
        if (sturm_count_q(g, box.lo, box.hi) >= 1) return 0;
    }

    // Nonzero: refine with doubling precision until the value interval
    // excludes zero. Termination is guaranteed since x^k + x - 1 is
    // squarefree (a common root with its derivative would force
    // x = k/(k-1) > 1).
    const unsigned long max_bits = 1UL << 18;
    PhiContextPtr refined;
    const PhiContext* cur = &ctx;
    for (unsigned long bits = ctx.precision_bits();; bits *= 2) {
        IntervalValue v = eval_interval(rep, cur->enclosure());
        int s = v.certified_sign();
        if (s != 0) return s;
        if (bits > max_bits)
            throw std::runtime_error("sign_of: precision cap exceeded for nonzero element");
        refined = cur->refined(bits * 2);
        cur = refined.get();
    }
}

}  // namespace kuc
