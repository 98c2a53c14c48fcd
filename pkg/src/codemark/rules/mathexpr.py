"""Math-expression transformations (category 3).

These rewrites (operand regrouping, strength reduction, factoring and
expansion) change arithmetic structure, and whether they preserve behavior
depends on operand types: integer overflow, floating-point rounding, and
operator overloading can all make an algebraically valid rewrite observable.
The deterministic engine therefore declines to apply them; they are only
reachable through an LLM backend, which is asked to verify context first.
"""

# Descriptions double as prompt material for the LLM backend.
MATH_RULES = (
    ("math.group_ops", "Regroup an associative chain, e.g. x + y + z into x + (y + z)"),
    ("math.mul_to_add", "Replace a small constant multiple with repeated addition, e.g. 2 * x into x + x"),
    ("math.factorization", "Factor a common multiplier, e.g. a*b + a*c into a*(b + c)"),
    ("math.identity_transform", "Apply an algebraic identity, e.g. x*x - y*y into (x - y)*(x + y)"),
    ("math.div_to_reciprocal", "Rewrite division as multiplication by a reciprocal, e.g. a / b into a * (1 / b)"),
    ("math.pow_to_mul", "Lower a square or power call to explicit multiplication, e.g. pow(x, 2) into x * x"),
    ("math.expand_distributive", "Expand a distributed product, e.g. a*(b + c) into a*b + a*c"),
)
