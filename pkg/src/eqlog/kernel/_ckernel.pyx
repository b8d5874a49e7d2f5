# cython: language_level=3
"""Cython HT evaluation kernel; same contract as ``_pykernel``."""
from libc.stdlib cimport malloc, free

ctypedef unsigned long long mask_t

cdef enum:
    BOT = -1
    TOP = -2
    AND = -3
    OR = -4
    IMP = -5
    NOT = -6


cdef class _Code:
    cdef long long *ops
    cdef Py_ssize_t n
    cdef unsigned char *stack

    def __cinit__(self, code):
        self.n = len(code)
        self.ops = <long long *> malloc(max(self.n, 1) * sizeof(long long))
        self.stack = <unsigned char *> malloc(max(self.n, 1))
        if self.ops == NULL or self.stack == NULL:
            raise MemoryError()
        cdef Py_ssize_t i
        for i in range(self.n):
            self.ops[i] = code[i]

    def __dealloc__(self):
        free(self.ops)
        free(self.stack)

    cdef inline unsigned char eval(self, mask_t h, mask_t t) noexcept nogil:
        cdef Py_ssize_t i, sp = 0
        cdef long long op
        cdef unsigned char a, b
        cdef unsigned char *st = self.stack
        for i in range(self.n):
            op = self.ops[i]
            if op >= 0:
                if (h >> op) & 1:
                    st[sp] = 2
                elif (t >> op) & 1:
                    st[sp] = 1
                else:
                    st[sp] = 0
                sp += 1
            elif op == NOT:
                st[sp - 1] = 2 if st[sp - 1] == 0 else 0
            elif op == BOT:
                st[sp] = 0
                sp += 1
            elif op == TOP:
                st[sp] = 2
                sp += 1
            else:
                sp -= 1
                b = st[sp]
                a = st[sp - 1]
                if op == AND:
                    st[sp - 1] = a if a < b else b
                elif op == OR:
                    st[sp - 1] = a if a > b else b
                else:
                    st[sp - 1] = 2 if a <= b else b
        return st[sp - 1]


def value(code, h, t):
    cdef _Code c = _Code(code)
    return c.eval(h, t)


def ht_models(code, int n):
    cdef _Code c = _Code(code)
    cdef mask_t t, h, limit = (<mask_t> 1) << n
    out = []
    t = 0
    while t < limit:
        if c.eval(t, t) == 2:
            h = 0
            while True:
                if c.eval(h, t) == 2:
                    out.append((h, t))
                h = (h - t) & t
                if h == 0:
                    break
        t += 1
    return out


def equilibria(code, int n):
    cdef _Code c = _Code(code)
    cdef mask_t t, h, limit = (<mask_t> 1) << n
    cdef bint minimal
    out = []
    t = 0
    while t < limit:
        if c.eval(t, t) == 2:
            minimal = True
            h = 0
            while h != t:
                if c.eval(h, t) == 2:
                    minimal = False
                    break
                h = (h - t) & t
            if minimal:
                out.append(t)
        t += 1
    return out


def countermodel(theory_code, formula_code, int n):
    cdef _Code c = _Code(theory_code)
    cdef _Code f = _Code(formula_code)
    cdef mask_t t, h, limit = (<mask_t> 1) << n
    t = 0
    while t < limit:
        if c.eval(t, t) == 2:
            h = 0
            while True:
                if c.eval(h, t) == 2 and f.eval(h, t) != 2:
                    return (h, t)
                h = (h - t) & t
                if h == 0:
                    break
        t += 1
    return None


def expansions_satisfy(code, base_h, base_t, free_mask):
    cdef _Code c = _Code(code)
    cdef mask_t bh = base_h, bt = base_t, fr = free_mask, t = 0, h
    while True:
        h = 0
        while True:
            if c.eval(bh | h, bt | t) != 2:
                return False
            h = (h - t) & t
            if h == 0:
                break
        t = (t - fr) & fr
        if t == 0:
            break
    return True


cdef class Prepared:
    """Reusable compiled formula for repeated point evaluations."""
    cdef _Code c

    def __cinit__(self, code):
        self.c = _Code(code)

    def value(self, h, t):
        return self.c.eval(h, t)


def prepare(code):
    return Prepared(code)
