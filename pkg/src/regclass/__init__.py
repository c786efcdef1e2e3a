"""Exact-arithmetic engine for p-regular conjugacy class and character bounds.

Subpackages:
  numtheory  -- factorization, cyclotomic values, partitions, exact thresholds
  gf         -- small finite fields GF(ell**f)
  permgroup  -- permutation groups, conjugacy classes, class counts
  catalog    -- the verification corpus of concrete groups
  autorbits  -- class fusion under outer automorphisms
  chartab    -- exact character tables (Burnside-Dixon) and rationality
  liebounds  -- closed-form lower bounds and grid certification
  harness    -- verification suites and reporting
"""

__version__ = "0.1.0"
