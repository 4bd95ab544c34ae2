"""hopf-smooth: exact commutative algebra and smoothness of affine group schemes."""
