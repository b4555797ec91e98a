#include "fermatkit/bipoly.hpp"

#include <utility>

namespace fk {

int BiPoly::deg_y() const {
    int d = -1;
    for (const auto& c : cx_) d = std::max(d, c.degree());
    return d;
}

IntPoly BiPoly::eval_y(const Int& y) const {
    std::vector<Int> c;
    c.reserve(cx_.size());
    for (const auto& q : cx_) c.push_back(q.eval(y));
    return IntPoly(std::move(c));
}

BiPoly BiPoly::homogenize(const IntPoly& h) {
    if (h.is_zero()) fail_input("homogenize: zero polynomial");
    const int t = h.degree();
    std::vector<IntPoly> cx(static_cast<size_t>(t) + 1);
    for (int k = 0; k <= t; ++k)
        cx[static_cast<size_t>(t - k)] = IntPoly::x_power(k, h[static_cast<size_t>(k)]);
    return BiPoly(std::move(cx));
}

IntPoly resultant_in_x_sylvester(const IntPoly& p, const BiPoly& g) {
    const int dp = p.degree(), dg = g.deg_x();
    const size_t n = static_cast<size_t>(dp + dg);
    std::vector<std::vector<IntPoly>> m(n, std::vector<IntPoly>(n));
    for (int row = 0; row < dg; ++row)
        for (int j = 0; j <= dp; ++j)
            m[static_cast<size_t>(row)][static_cast<size_t>(row + j)] =
                IntPoly::constant(p[static_cast<size_t>(dp - j)]);
    for (int row = 0; row < dp; ++row)
        for (int j = 0; j <= dg; ++j)
            m[static_cast<size_t>(dg + row)][static_cast<size_t>(row + j)] =
                g.coeffs_x()[static_cast<size_t>(dg - j)];
    return bareiss_determinant<IntPoly>(std::move(m));
}

// Newton interpolation through (points[i], values[i]), exact over Q
static IntPoly interpolate(const std::vector<Int>& points,
                           const std::vector<Int>& values) {
    const size_t n = points.size();
    std::vector<Rat> dd(n);
    for (size_t i = 0; i < n; ++i) dd[i] = Rat(values[i]);
    for (size_t level = 1; level < n; ++level)
        for (size_t i = n - 1; i >= level; --i) {
            dd[i] = (dd[i] - dd[i - 1]) / Rat(points[i] - points[i - level]);
            if (i == level) break;
        }
    RatPoly acc = RatPoly::constant(dd[n - 1]);
    for (size_t i = n - 1; i-- > 0;) {
        RatPoly lin(std::vector<Rat>{Rat(-points[i]), Rat(1)});
        acc = acc * lin + RatPoly::constant(dd[i]);
    }
    return to_int_checked(acc);
}

IntPoly resultant_in_x(const IntPoly& p, const BiPoly& g) {
    if (p.is_zero() || g.is_zero()) fail_input("resultant_in_x: zero input");
    if (g.deg_x() <= 0) fail_input("resultant_in_x: g has no X part");
    const IntPoly& gl = g.coeffs_x().back();
    if (gl.degree() > 0) {
        // specialization can drop the X-degree at roots of the leading
        // coefficient; the Sylvester path has no such issue
        return resultant_in_x_sylvester(p, g);
    }
    const int dy = p.degree() * g.deg_y();
    const size_t npts = static_cast<size_t>(dy) + 1;
    std::vector<Int> points, values;
    points.reserve(npts);
    values.reserve(npts);
    Int y = -(Int(dy) / 2);
    while (points.size() < npts) {
        points.push_back(y);
        values.push_back(resultant(p, g.eval_y(y)));
        y += 1;
    }
    return interpolate(points, values);
}

}  // namespace fk
