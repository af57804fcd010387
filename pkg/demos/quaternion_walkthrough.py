"""
A quaternionic abelian fourfold, step by step
=============================================

We take End^0 to be an indefinite quaternion algebra over Q and look at the
refined motivic decomposition, then group the pieces into Lefschetz
components.
"""

from motdec.decomposition import decompose, format_index
from motdec.descriptor import quaternion
from motdec.lefschetz import branch_component, component_refined, core_info, enumerate_components

desc = quaternion(4)

# The index set: pairs 4 >= l1 >= l2 >= 0, listed by weight.
report = decompose(desc)
for i in range(2 * desc.g + 1):
    print(i, [format_index(r.xi, desc) for r in report.degree(i)])

# Each class comes with its multiplicity in the exterior algebra on H^1.
# Multiplied by the dimension over Q-bar these add up to 2^8.
print(report.total_dimension)

# Lefschetz components are labelled by sp_4 highest weights (a, b) with a + b <= 2.
print(enumerate_components(desc))

# The adjoint component (2, 0) has three levels of dimensions 3, 4, 3.
levels = branch_component((2, 0), desc)
print({e: [c.mu for c in cons] for e, cons in sorted(levels.items(), reverse=True)})

# Which classes feed it, and how it looks in terms of its core.
print([format_index(xi, desc) for xis in component_refined((2, 0), desc).values() for xi in xis])
info = core_info((2, 0), desc)
print(info.shape, "core rank", info.core_rank)
