"""Torus stability of (4,4) curves on P1 x P1.

A diagonal one-parameter subgroup destabilizes a curve exactly when the
origin lies outside the weight polytope of its monomials. The nearest point
of the polytope doubles as a certificate.
"""
from kwall.forms import Bidegree, parse_form
from kwall.hm import instability_measure, torus_semistable, weight_polytope
from kwall.smoothness import is_smooth_curve

B = Bidegree(4, 4)
h = parse_form("x0*y1 - x1*y0", Bidegree(1, 1))
curves = {
    "fourth power of the diagonal": h ** 4,
    "smooth sample": parse_form("x0^4*y0^4 + x1^4*y1^4 + x0^4*y1^4 + 2*x1^4*y0^4 + x0^2*x1^2*y0*y1^3", B),
    "single monomial": parse_form("x0^4*y0^4", B),
    "product of two binary quartics": parse_form("x0^4*y0^4 + x1^4*y1^4 + x0^4*y1^4 + x1^4*y0^4", B),
}
for name, f in curves.items():
    st = torus_semistable(f)
    m = instability_measure(f)
    print(f"{name}: {st.to_json()['status']}, measure {m.value}, "
          f"hull vertices: {len(weight_polytope(f).hull)}, {is_smooth_curve(f).to_json()['status']}")
    if st.to_json()["status"] == "Unstable":
        print(f"  certificate weights {st.sigma.weights}, margin {st.support_min_weight}")
