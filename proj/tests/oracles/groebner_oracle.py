"""Independent sympy oracle for the Groebner unit examples.

Prints reduced grevlex bases and solution counts frozen into test_groebner.
"""
import sympy as sp

p0, p1, p2 = sp.symbols('p0 p1 p2')

cases = {
    'inconsistent': [p0 - 1, p0 - 2],
    'irreducible': [p0**2 + 1],
    'swap-squares': [p0**2 - p1, p1**2 - p0],
    'cyclic3': [p0 + p1 + p2, p0*p1 + p1*p2 + p2*p0, p0*p1*p2 - 1],
}
for name, gens in cases.items():
    g = sp.groebner(gens, p0, p1, p2, order='grevlex')
    print(name, [str(e) for e in g.exprs])
sols = sp.solve([p0**2 - p1, p1**2 - p0], [p0, p1], dict=True)
print('swap-squares solutions', len(sols))
