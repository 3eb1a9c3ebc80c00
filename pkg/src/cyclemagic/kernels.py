"""Array kernels: batched cycle weights and the backtracking search loop.

``make_kernels(jit)`` builds one kernel set from a single source; ``PY`` is
the uncompiled set (with a vectorised numpy weight kernel) and ``JIT`` the
numba-compiled one.  ``active()`` returns whichever ``_accel.USE_NUMBA``
selects.
"""

from types import SimpleNamespace

import numpy as np

from . import _accel

# dfs status codes
EXHAUSTED = 0
BUDGET = 1
BUFFER_FULL = 2

# slots of the dfs ``state`` vector
S_DEPTH, S_CONST, S_CONST_DEPTH, S_NODES = 0, 1, 2, 3

# upper bound on unassigned elements of one class inside one cycle (2 * max length)
MAX_NEED = 8


def cycle_weights_numpy(labels, members):
    """Sum of ``labels`` over each row of the element-index matrix ``members``."""
    return labels[members].sum(axis=1)


def make_kernels(jit):
    @jit
    def cycle_weights(labels, members):
        out = np.zeros(members.shape[0], dtype=np.int64)
        for r in range(members.shape[0]):
            acc = 0
            for t in range(members.shape[1]):
                acc += labels[members[r, t]]
            out[r] = acc
        return out

    @jit
    def extreme_sums(used, lo, hi, smallest):
        # entry t: sum of the t smallest (largest) unused labels in [lo, hi]; -1 if short
        out = np.full(MAX_NEED + 1, -1, dtype=np.int64)
        out[0] = 0
        got = 0
        acc = 0
        x = lo if smallest else hi
        step = 1 if smallest else -1
        while lo <= x <= hi and got < MAX_NEED:
            if used[x] == 0:
                acc += x
                got += 1
                out[got] = acc
            x += step
        return out

    @jit
    def feasible(used, pool_lo, pool_hi, cpart, cneed, const):
        lo0 = extreme_sums(used, pool_lo[0], pool_hi[0], True)
        hi0 = extreme_sums(used, pool_lo[0], pool_hi[0], False)
        lo1 = extreme_sums(used, pool_lo[1], pool_hi[1], True)
        hi1 = extreme_sums(used, pool_lo[1], pool_hi[1], False)
        best_lo = -(1 << 62)
        best_hi = 1 << 62
        for r in range(cpart.shape[0]):
            a = cneed[r, 0]
            b = cneed[r, 1]
            if lo0[a] < 0 or lo1[b] < 0:
                return False
            lo_w = cpart[r] + lo0[a] + lo1[b]
            hi_w = cpart[r] + hi0[a] + hi1[b]
            if const >= 0 and (const < lo_w or const > hi_w):
                return False
            best_lo = max(best_lo, lo_w)
            best_hi = min(best_hi, hi_w)
            if best_lo > best_hi:
                return False
        return True

    @jit
    def unassign(el, d, label, used, cpart, cneed, cls, elem_ptr, elem_cyc, state, target):
        val = label[el]
        for t in range(elem_ptr[el], elem_ptr[el + 1]):
            r = elem_cyc[t]
            cpart[r] -= val
            cneed[r, cls[el]] += 1
        used[val] = 0
        label[el] = 0
        if state[S_CONST_DEPTH] == d:
            state[S_CONST] = target
            state[S_CONST_DEPTH] = -1

    @jit
    def dfs(order, lo, hi, cls, pool_lo, pool_hi, elem_ptr, elem_cyc, gt, target, budget,
            label, used, nextval, cpart, cneed, state, out):
        # All search state lives in the argument arrays, so a BUFFER_FULL
        # return resumes cleanly on the next call.
        n_el = order.shape[0]
        cap = out.shape[0]
        found = 0
        while True:
            d = state[S_DEPTH]
            el = order[d]
            val = nextval[d]
            hit = False
            while val <= hi[el]:
                if used[val] == 0 and (gt[el] < 0 or val > label[gt[el]]):
                    hit = True
                    break
                val += 1
            if not hit:
                if d == 0:
                    return found, EXHAUSTED
                d -= 1
                state[S_DEPTH] = d
                unassign(order[d], d, label, used, cpart, cneed, cls, elem_ptr, elem_cyc, state, target)
                continue
            if state[S_NODES] >= budget:
                return found, BUDGET
            state[S_NODES] += 1
            nextval[d] = val + 1

            label[el] = val
            used[val] = 1
            for t in range(elem_ptr[el], elem_ptr[el + 1]):
                r = elem_cyc[t]
                cpart[r] += val
                cneed[r, cls[el]] -= 1
                if cneed[r, 0] == 0 and cneed[r, 1] == 0 and state[S_CONST] < 0:
                    state[S_CONST] = cpart[r]
                    state[S_CONST_DEPTH] = d

            if not feasible(used, pool_lo, pool_hi, cpart, cneed, state[S_CONST]):
                unassign(el, d, label, used, cpart, cneed, cls, elem_ptr, elem_cyc, state, target)
            elif d == n_el - 1:
                for t in range(n_el):
                    out[found, t] = label[t]
                found += 1
                unassign(el, d, label, used, cpart, cneed, cls, elem_ptr, elem_cyc, state, target)
                if found == cap:
                    return found, BUFFER_FULL
            else:
                state[S_DEPTH] = d + 1
                nextval[d + 1] = lo[order[d + 1]]

    return SimpleNamespace(cycle_weights=cycle_weights, dfs=dfs, feasible=feasible)


def _identity(fn):
    return fn


PY = make_kernels(_identity)
PY.cycle_weights = cycle_weights_numpy

_jit_kernels = None


def jit_kernels():
    global _jit_kernels
    if _jit_kernels is None:
        if not _accel.HAVE_NUMBA:
            raise RuntimeError("numba is not installed")
        _jit_kernels = make_kernels(_accel.njit)
    return _jit_kernels


def active():
    return jit_kernels() if _accel.USE_NUMBA else PY
