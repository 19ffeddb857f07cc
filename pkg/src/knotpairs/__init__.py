"""Geography of two knot invariants taken jointly: predicates, witnesses and the
desk-scale invariant machinery used to check them."""

__version__ = "0.1.0"
