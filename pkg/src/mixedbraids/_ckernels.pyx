# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels; same contracts as ``_pykernels``."""

from libc.stdlib cimport malloc, free

from mixedbraids._pykernels import StepBudgetExceeded


cdef inline void _swap(int* arr, int i, int j) nogil:
    cdef int t = arr[i]
    arr[i] = arr[j]
    arr[j] = t


cdef long _left_weight(int* a, int* ainv, int* b, int* binv, int n) nogil:
    cdef long moved = 0
    cdef int i = 0
    while i < n - 1:
        if binv[i] > binv[i + 1] and a[i] < a[i + 1]:
            _swap(a, i, i + 1)
            ainv[a[i]] = i
            ainv[a[i + 1]] = i + 1
            _swap(binv, i, i + 1)
            b[binv[i]] = i
            b[binv[i + 1]] = i + 1
            moved += 1
            i = 0
        else:
            i += 1
    return moved


cdef inline bint _is_delta(int* x, int n) nogil:
    cdef int j
    for j in range(n):
        if x[j] != n - 1 - j:
            return False
    return True


cdef inline bint _is_identity(int* x, int n) nogil:
    cdef int j
    for j in range(n):
        if x[j] != j:
            return False
    return True


def normal_form(int n, letters, long budget):
    if n < 2:
        return 0, [], 0
    cdef Py_ssize_t L = len(letters)
    cdef int* nf = <int*> malloc((L + 1) * n * sizeof(int))
    cdef int* nfinv = <int*> malloc((L + 1) * n * sizeof(int))
    cdef int* word = <int*> malloc((L + 1) * sizeof(int))
    if nf == NULL or nfinv == NULL or word == NULL:
        free(nf); free(nfinv); free(word)
        raise MemoryError()
    cdef Py_ssize_t idx, j, count = 0, start = 0
    cdef int letter, i, flips = 0, q, top = n - 1
    cdef long p, steps = 0, moved
    cdef int* x
    cdef int* xinv
    try:
        for idx in range(L):
            word[idx] = letters[idx]
        # negatives strictly after each position decide how many flips a factor takes
        flips = 0
        for idx in range(L):
            if word[idx] < 0:
                flips += 1
        p = -flips
        for idx in range(L):
            letter = word[idx]
            if letter < 0:
                flips -= 1
            i = (letter if letter > 0 else -letter) - 1
            if flips & 1:
                i = n - 2 - i
            x = nf + count * n
            xinv = nfinv + count * n
            if letter > 0:
                for q in range(n):
                    x[q] = q
                x[i] = i + 1
                x[i + 1] = i
            else:
                for q in range(n):
                    x[q] = top - q
                _swap(x, i, i + 1)
            for q in range(n):
                xinv[x[q]] = q
            count += 1
            j = count - 1
            while j > start:
                steps += 1
                moved = _left_weight(nf + (j - 1) * n, nfinv + (j - 1) * n,
                                     nf + j * n, nfinv + j * n, n)
                steps += moved
                if moved == 0:
                    break
                j -= 1
            if steps > budget:
                raise StepBudgetExceeded(f"normal form exceeded {budget} steps")
            while start < count and _is_delta(nf + start * n, n):
                start += 1
                p += 1
            while count > start and _is_identity(nf + (count - 1) * n, n):
                count -= 1
        factors = []
        for j in range(start, count):
            factors.append(tuple([nf[j * n + q] for q in range(n)]))
        return p, factors, steps
    finally:
        free(nf)
        free(nfinv)
        free(word)


def crossing_sums(int n, letters):
    cdef Py_ssize_t L = len(letters)
    cdef int* sums = <int*> malloc(n * n * sizeof(int))
    cdef int* at = <int*> malloc(n * sizeof(int))
    if sums == NULL or at == NULL:
        free(sums); free(at)
        raise MemoryError()
    cdef Py_ssize_t idx
    cdef int letter, i, a, b, sign, q
    try:
        for q in range(n * n):
            sums[q] = 0
        for q in range(n):
            at[q] = q
        for idx in range(L):
            letter = letters[idx]
            if letter > 0:
                i = letter - 1
                sign = 1
            else:
                i = -letter - 1
                sign = -1
            a = at[i]
            b = at[i + 1]
            sums[a * n + b] += sign
            sums[b * n + a] += sign
            at[i] = b
            at[i + 1] = a
        final = [0] * n
        for q in range(n):
            final[at[q]] = q
        return [[sums[a * n + b] for b in range(n)] for a in range(n)], final
    finally:
        free(sums)
        free(at)
