"""Pure-Python HT evaluation kernel (fallback when the Cython build is absent).

Formulas arrive as postfix code (see ``eqlog.kernel.compile_formula``).  The
value of a formula at an interpretation ``(h, t)`` is 2 if it holds at both
worlds, 1 if it holds only at the there-world, 0 otherwise.  Connectives are
Goedel's three-valued tables: min, max, ``2 if a <= b else b``, and
``2 if a == 0 else 0``.
"""

ATOM_BASE = 0
BOT, TOP, AND, OR, IMP, NOT = -1, -2, -3, -4, -5, -6


def value(code, h, t):
    stack = []
    push = stack.append
    pop = stack.pop
    for op in code:
        if op >= 0:
            push(2 if h >> op & 1 else (1 if t >> op & 1 else 0))
        elif op == NOT:
            push(2 if pop() == 0 else 0)
        elif op == BOT:
            push(0)
        elif op == TOP:
            push(2)
        else:
            b = pop()
            a = pop()
            if op == AND:
                push(a if a < b else b)
            elif op == OR:
                push(a if a > b else b)
            else:
                push(2 if a <= b else b)
    return stack[-1]


def _submasks(t):
    s = 0
    while True:
        yield s
        s = (s - t) & t
        if s == 0:
            return


def ht_models(code, n):
    out = []
    for t in range(1 << n):
        if value(code, t, t) != 2:
            continue
        for h in _submasks(t):
            if value(code, h, t) == 2:
                out.append((h, t))
    return out


def equilibria(code, n):
    out = []
    for t in range(1 << n):
        if value(code, t, t) != 2:
            continue
        for h in _submasks(t):
            if h != t and value(code, h, t) == 2:
                break
        else:
            out.append(t)
    return out


def countermodel(theory_code, formula_code, n):
    for t in range(1 << n):
        if value(theory_code, t, t) != 2:
            continue
        for h in _submasks(t):
            if value(theory_code, h, t) == 2 and value(formula_code, h, t) != 2:
                return (h, t)
    return None


def expansions_satisfy(code, base_h, base_t, free):
    for t in _submasks(free):
        for h in _submasks(t):
            if value(code, base_h | h, base_t | t) != 2:
                return False
    return True


class Prepared:
    """Reusable compiled formula for repeated point evaluations."""

    __slots__ = ("code",)

    def __init__(self, code):
        self.code = list(code)

    def value(self, h, t):
        return value(self.code, h, t)


def prepare(code):
    return Prepared(code)
