"""Hypothesis strategies shared by the test modules."""
import numpy as np
from hypothesis import strategies as st

from clifspin.algebra import CL03, CL13, CL30, CenterScalar, Multivector
from clifspin.weyl import SpinorKind, WeylSpinor

unit = st.floats(-1.0, 1.0, allow_nan=False, allow_infinity=False)
angle = st.floats(-np.pi, np.pi, allow_nan=False)


def multivectors(sig):
    return st.lists(unit, min_size=sig.dim, max_size=sig.dim).map(lambda c: Multivector(sig, c))


def evens(sig=CL30):
    return multivectors(sig).map(lambda a: a.even())


signatures = st.sampled_from([CL30, CL03, CL13])
centers = st.builds(CenterScalar, unit, unit)


def spinors(kind=SpinorKind.CUS):
    return st.builds(lambda a, b: WeylSpinor(kind, a, b), centers, centers)


momenta = st.lists(st.floats(-1.5, 1.5, allow_nan=False), min_size=3, max_size=3)
