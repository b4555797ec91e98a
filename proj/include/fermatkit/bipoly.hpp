#ifndef FERMATKIT_BIPOLY_HPP
#define FERMATKIT_BIPOLY_HPP

#include <vector>

#include "fermatkit/poly.hpp"

namespace fk {

// Integer polynomial in X and Y, stored as coefficients of X^i: c[i] is a
// polynomial in Y.  Trailing zero entries are trimmed.
class BiPoly {
  public:
    BiPoly() = default;
    explicit BiPoly(std::vector<IntPoly> cx) : cx_(std::move(cx)) { trim(); }

    bool is_zero() const { return cx_.empty(); }
    int deg_x() const { return static_cast<int>(cx_.size()) - 1; }
    int deg_y() const;
    const std::vector<IntPoly>& coeffs_x() const { return cx_; }

    // substitute an integer for Y
    IntPoly eval_y(const Int& y) const;

    // the homogenization X^t H(Y/X) of a degree-t polynomial H
    static BiPoly homogenize(const IntPoly& h);

  private:
    void trim() {
        while (!cx_.empty() && cx_.back().is_zero()) cx_.pop_back();
    }
    std::vector<IntPoly> cx_;
};

// Res_X(p, g) as a polynomial in Y.  Primary path: evaluation at integer
// points with fraction-free determinants, then exact interpolation.  Falls
// back to a direct Sylvester determinant over Z[Y] when leading coefficients
// degenerate.
IntPoly resultant_in_x(const IntPoly& p, const BiPoly& g);

// direct Sylvester determinant over Z[Y]; used as the independent oracle
IntPoly resultant_in_x_sylvester(const IntPoly& p, const BiPoly& g);

}  // namespace fk

#endif
