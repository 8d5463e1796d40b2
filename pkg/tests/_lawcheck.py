"""Exhaustive ring-law verification over precomputed index tables.

Shared between the unit tests and the acceptance suite.  Everything is
integer table lookups so an 81-element ring stays around a second.
"""


def build_tables(ring):
    reps = ring.reps()
    index = {rep: i for i, rep in enumerate(reps)}
    add = [[index[ring.add_rep(a, b)] for b in reps] for a in reps]
    mul = [[index[ring.mul_rep(a, b)] for b in reps] for a in reps]
    neg = [index[ring.neg_rep(a)] for a in reps]
    return reps, index, add, mul, neg


def law_violations(ring):
    """Count of violated instances of the commutative-ring axioms."""
    reps, index, add, mul, neg = build_tables(ring)
    n = len(reps)
    zero = index[ring.zero_rep()]
    one = index[ring.one_rep()]
    bad = 0
    rng = range(n)
    for i in rng:
        if add[i][zero] != i:
            bad += 1
        if mul[i][one] != i:
            bad += 1
        if add[i][neg[i]] != zero:
            bad += 1
        row_a, row_m = add[i], mul[i]
        for j in rng:
            if row_a[j] != add[j][i]:
                bad += 1
            if row_m[j] != mul[j][i]:
                bad += 1
    for i in rng:
        ai, mi = add[i], mul[i]
        for j in rng:
            aij, mij = ai[j], mi[j]
            aj, mj = add[j], mul[j]
            for t in rng:
                if add[aij][t] != ai[aj[t]]:
                    bad += 1
                if mul[mij][t] != mi[mj[t]]:
                    bad += 1
                if mi[aj[t]] != add[mij][mi[t]]:
                    bad += 1
    return bad


def unit_violations(ring):
    """Units are exactly the nonzero residues and invert to one."""
    bad = 0
    one = ring.one_rep()
    units = 0
    for rep in ring.reps():
        if ring.unit_rep(rep):
            units += 1
            if ring.mul_rep(rep, ring.inv_rep(rep)) != one:
                bad += 1
        elif ring.residue_rep(rep) != 0:
            bad += 1
    expected = ring.size - ring.size // ring.p
    if units != expected:
        bad += 1
    return bad
